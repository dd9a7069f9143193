#include "leoq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "leoq/quaternion.hpp"
#include "leoq/quaternion_sequences.hpp"
#include "leoq/sequences.hpp"

namespace leoq {
namespace {

using QuatZ = Quaternion<BigInt>;

BigInt fib(int p, std::int64_t n) { return term({SequenceKind::Fibonacci, p}, n); }
BigInt luc(int p, std::int64_t n) { return term({SequenceKind::Lucas, p}, n); }
BigInt leo(int p, std::int64_t n) { return term({SequenceKind::Leonardo, p}, n); }
BigInt llr(int p, std::int64_t n) { return term({SequenceKind::LucasLeonardo, p}, n); }
BigInt fra(std::int64_t n) { return term({SequenceKind::Francois, 1}, n); }

QuatZ qfib(int p, std::int64_t n) { return quaternion_term({SequenceKind::Fibonacci, p}, n); }
QuatZ qluc(int p, std::int64_t n) { return quaternion_term({SequenceKind::Lucas, p}, n); }
QuatZ qleo(int p, std::int64_t n) { return quaternion_term({SequenceKind::Leonardo, p}, n); }
QuatZ qllr(int p, std::int64_t n) { return quaternion_term({SequenceKind::LucasLeonardo, p}, n); }
QuatZ qfra(std::int64_t n) { return quaternion_term({SequenceKind::Francois, 1}, n); }

QuatZ unit_scaled(const BigInt& s) { return unit_i().scaled(s); }

std::string render(const BigInt& v) { return v.str(); }
std::string render(const QuatZ& v) { return to_string(v); }

std::string default_grid(int p_cap, const std::string& n_label, int p_max,
                         std::int64_t n_max) {
  const int top = p_cap == 0 ? p_max : std::min(p_cap, p_max);
  std::string ps = top == 1 ? "p=1" : "p=1.." + std::to_string(top);
  return ps + ", n=" + n_label + ".." + std::to_string(n_max);
}

// Pointwise lhs = rhs over the lexicographic (p, n) grid.
template <typename Value>
IdentitySpec pointwise(std::string id, std::string statement, Expectation expectation,
                       std::string corrected_id, int p_cap,
                       std::function<std::int64_t(int)> n_lower, std::string n_label,
                       std::function<Value(int, std::int64_t)> lhs,
                       std::function<Value(int, std::int64_t)> rhs) {
  IdentitySpec spec;
  spec.id = std::move(id);
  spec.statement = std::move(statement);
  spec.expectation = expectation;
  spec.corrected_id = std::move(corrected_id);
  spec.p_cap = p_cap;
  spec.n_lower = n_lower;
  spec.n_lower_label = n_label;
  spec.grid = [p_cap, n_label](int p_max, std::int64_t n_max) {
    return default_grid(p_cap, n_label, p_max, n_max);
  };
  spec.scan = [p_cap, n_lower, lhs, rhs](
                  int p_max, std::int64_t n_max) -> std::optional<Counterexample> {
    const int top = p_cap == 0 ? p_max : std::min(p_cap, p_max);
    for (int p = 1; p <= top; ++p) {
      for (std::int64_t n = n_lower(p); n <= n_max; ++n) {
        const Value left = lhs(p, n);
        const Value right = rhs(p, n);
        if (!(left == right)) {
          return Counterexample{p, n, render(left), render(right)};
        }
      }
    }
    return std::nullopt;
  };
  return spec;
}

IdentitySpec scalar_identity(std::string id, std::string statement, int p_cap,
                             std::function<std::int64_t(int)> n_lower, std::string n_label,
                             std::function<BigInt(int, std::int64_t)> lhs,
                             std::function<BigInt(int, std::int64_t)> rhs) {
  return pointwise<BigInt>(std::move(id), std::move(statement), Expectation::Hold, "", p_cap,
                           std::move(n_lower), std::move(n_label), std::move(lhs),
                           std::move(rhs));
}

IdentitySpec quat_identity(std::string id, std::string statement, int p_cap,
                           std::function<std::int64_t(int)> n_lower, std::string n_label,
                           std::function<QuatZ(int, std::int64_t)> lhs,
                           std::function<QuatZ(int, std::int64_t)> rhs) {
  return pointwise<QuatZ>(std::move(id), std::move(statement), Expectation::Hold, "", p_cap,
                          std::move(n_lower), std::move(n_label), std::move(lhs),
                          std::move(rhs));
}

IdentitySpec quat_identity_printed(std::string id, std::string statement,
                                   std::string corrected_id,
                                   std::function<std::int64_t(int)> n_lower,
                                   std::string n_label,
                                   std::function<QuatZ(int, std::int64_t)> lhs,
                                   std::function<QuatZ(int, std::int64_t)> rhs) {
  return pointwise<QuatZ>(std::move(id), std::move(statement), Expectation::FailAsPrinted,
                          std::move(corrected_id), 0, std::move(n_lower), std::move(n_label),
                          std::move(lhs), std::move(rhs));
}

const auto from_zero = [](int) -> std::int64_t { return 0; };
const auto from_one = [](int) -> std::int64_t { return 1; };
const auto from_p = [](int p) -> std::int64_t { return p; };
const auto from_p_plus_1 = [](int p) -> std::int64_t { return p + 1; };
const auto from_2p_plus_1 = [](int p) -> std::int64_t { return 2 * p + 1; };

IdentitySpec gf_identity() {
  IdentitySpec spec;
  spec.id = "gf-coefficients";
  spec.statement =
      "series coefficients of [QR[p,0] + sum_{n=1..p}(QR[p,n]-QR[p,n-1])x^n"
      " + pI x^{p+1}/(1-x)] / (1-x-x^{p+1}) equal QR[p,n]";
  spec.grid = [](int p_max, std::int64_t n_max) {
    const std::int64_t count = std::min<std::int64_t>(60, n_max + 1);
    return "p=1.." + std::to_string(p_max) + ", coefficients 0.." + std::to_string(count - 1);
  };
  spec.scan = [](int p_max, std::int64_t n_max) -> std::optional<Counterexample> {
    const std::int64_t count = std::min<std::int64_t>(60, n_max + 1);
    for (int p = 1; p <= p_max; ++p) {
      const SequenceFamily family(SequenceKind::LucasLeonardo, p);
      const auto series = lucas_leonardo_gf_coefficients(p, static_cast<std::size_t>(count));
      for (std::int64_t n = 0; n < count; ++n) {
        const QuatZ expected = quaternion_term(family, n);
        const QuatZ& got = series.coefficients[static_cast<std::size_t>(n)];
        if (!(got == expected)) {
          return Counterexample{p, n, render(got), render(expected)};
        }
      }
    }
    return std::nullopt;
  };
  return spec;
}

IdentitySpec norm_multiplicativity_identity() {
  IdentitySpec spec;
  spec.id = "norm-multiplicativity";
  spec.statement = "N(x*y) = N(x)*N(y)";
  spec.grid = [](int, std::int64_t) {
    return std::string("1000 seeded random pairs over exact integers (coefficients in"
                       " [-9,9]) and over each of Z_3, Z_5, Z_7");
  };
  spec.scan = [](int, std::int64_t) -> std::optional<Counterexample> {
    std::mt19937_64 rng(0x1ea0c0de5eedULL);
    const auto params = hamilton_params();
    const auto small = [&rng]() {
      return BigInt(static_cast<std::int64_t>(rng() % 19) - 9);
    };
    for (int iter = 0; iter < 1000; ++iter) {
      const QuatZ x(small(), small(), small(), small(), params);
      const QuatZ y(small(), small(), small(), small(), params);
      const BigInt left = (x * y).norm();
      const BigInt right = x.norm() * y.norm();
      if (left != right) return Counterexample{0, iter, render(left), render(right)};
    }
    for (std::uint64_t q : {3ULL, 5ULL, 7ULL}) {
      const PrimeField field(q);
      const auto fq_params = hamilton_params(field);
      const auto residue = [&rng, q]() {
        return Fp(static_cast<std::int64_t>(rng() % q), q);
      };
      for (int iter = 0; iter < 1000; ++iter) {
        const Quaternion<Fp> x(residue(), residue(), residue(), residue(), fq_params);
        const Quaternion<Fp> y(residue(), residue(), residue(), residue(), fq_params);
        const Fp left = (x * y).norm();
        const Fp right = x.norm() * y.norm();
        if (!(left == right)) {
          return Counterexample{static_cast<int>(q), iter,
                                std::to_string(left.value()), std::to_string(right.value())};
        }
      }
    }
    return std::nullopt;
  };
  return spec;
}

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> reg;

  // Defining recurrences and their homogeneous reshapes.
  reg.push_back(scalar_identity(
      "leo", "Leo[p,n] = Leo[p,n-1] + Leo[p,n-p-1] + p   (n > p)", 0, from_p_plus_1, "p+1",
      [](int p, std::int64_t n) { return leo(p, n); },
      [](int p, std::int64_t n) { return leo(p, n - 1) + leo(p, n - p - 1) + p; }));
  reg.push_back(scalar_identity(
      "luc", "R[p,n] = R[p,n-1] + R[p,n-p-1] + p   (n > p)", 0, from_p_plus_1, "p+1",
      [](int p, std::int64_t n) { return llr(p, n); },
      [](int p, std::int64_t n) { return llr(p, n - 1) + llr(p, n - p - 1) + p; }));
  reg.push_back(scalar_identity(
      "luc0", "R[p,n] = R[p,n-1] + R[p,n-p] - R[p,n-2p-1]   (n > 2p)", 0, from_2p_plus_1,
      "2p+1", [](int p, std::int64_t n) { return llr(p, n); },
      [](int p, std::int64_t n) { return llr(p, n - 1) + llr(p, n - p) - llr(p, n - 2 * p - 1); }));
  reg.push_back(quat_identity(
      "r1", "QR[p,n] = QR[p,n-1] + QR[p,n-p-1] + p I   (n > p)", 0, from_p_plus_1, "p+1",
      [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return qllr(p, n - 1) + qllr(p, n - p - 1) + unit_scaled(p);
      }));
  reg.push_back(quat_identity(
      "r2", "QR[p,n] = QR[p,n-1] + QR[p,n-p] - QR[p,n-2p-1]   (n > 2p)", 0, from_2p_plus_1,
      "2p+1", [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return qllr(p, n - 1) + qllr(p, n - p) - qllr(p, n - 2 * p - 1);
      }));

  // Inter-sequence relations.
  reg.push_back(scalar_identity(
      "leo1", "Leo[p,n] = (p+1) F[p,n+1] - p", 0, from_zero, "0",
      [](int p, std::int64_t n) { return leo(p, n); },
      [](int p, std::int64_t n) { return (p + 1) * fib(p, n + 1) - p; }));
  reg.push_back(scalar_identity(
      "leo2", "Leo[p,n] = L[p,n+p+1] - F[p,n+p+1] - p", 0, from_zero, "0",
      [](int p, std::int64_t n) { return leo(p, n); },
      [](int p, std::int64_t n) { return luc(p, n + p + 1) - fib(p, n + p + 1) - p; }));
  reg.push_back(scalar_identity(
      "luc1", "R[p,n] = (p+1) L[p,n] - p", 0, from_zero, "0",
      [](int p, std::int64_t n) { return llr(p, n); },
      [](int p, std::int64_t n) { return (p + 1) * luc(p, n) - p; }));
  reg.push_back(scalar_identity(
      "luc2", "R[p,n] = (p+1) Leo[p,n] - p Leo[p,n-1]   (n >= 1)", 0, from_one, "1",
      [](int p, std::int64_t n) { return llr(p, n); },
      [](int p, std::int64_t n) { return (p + 1) * leo(p, n) - p * leo(p, n - 1); }));
  reg.push_back(scalar_identity(
      "star", "R[n] = 2 L[n] - 1", 1, from_zero, "0",
      [](int, std::int64_t n) { return llr(1, n); },
      [](int, std::int64_t n) { return 2 * luc(1, n) - 1; }));
  reg.push_back(scalar_identity(
      "doublestar", "Fr[n] = L[n] + F[n+1] - 1", 1, from_zero, "0",
      [](int, std::int64_t n) { return fra(n); },
      [](int, std::int64_t n) { return luc(1, n) + fib(1, n + 1) - 1; }));

  // Quaternion relations; the two printed statements that fail exact
  // evaluation are paired with corrected twins and adjudicated numerically.
  reg.push_back(quat_identity(
      "prop22-i", "QR[p,n] = (p+1) QL[p,n] - p I   (n >= p)", 0, from_p, "p",
      [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) { return qluc(p, n).scaled(p + 1) - unit_scaled(p); }));
  reg.push_back(quat_identity(
      "prop22-ii", "QR[p,n] = (p+1) QLeo[p,n] - p QLeo[p,n-1]   (n >= p)", 0, from_p, "p",
      [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return qleo(p, n).scaled(p + 1) - qleo(p, n - 1).scaled(p);
      }));
  reg.push_back(quat_identity_printed(
      "prop22-iii-as-printed", "QR[p,n] = QLeo[p,n] + p QLeo[p,n-p-1] - p^2 I   (n >= p+1)",
      "prop22-iii-corrected", from_p_plus_1, "p+1",
      [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return qleo(p, n) + qleo(p, n - p - 1).scaled(p) - unit_scaled(BigInt(p) * p);
      }));
  reg.push_back(quat_identity(
      "prop22-iii-corrected", "QR[p,n] = QLeo[p,n] + p QLeo[p,n-p-1] + p^2 I   (n >= p+1)", 0,
      from_p_plus_1, "p+1", [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return qleo(p, n) + qleo(p, n - p - 1).scaled(p) + unit_scaled(BigInt(p) * p);
      }));
  reg.push_back(quat_identity_printed(
      "prop22-iv-as-printed",
      "QR[p,n] = p (QL[p,n] - QF[p,n]) + QL[p,n+p+1] - QF[p,n+p+1] - p(p+1) I   (n >= p+1)",
      "prop22-iv-corrected", from_p_plus_1, "p+1",
      [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return (qluc(p, n) - qfib(p, n)).scaled(p) + qluc(p, n + p + 1) - qfib(p, n + p + 1) -
               unit_scaled(BigInt(p) * (p + 1));
      }));
  reg.push_back(quat_identity(
      "prop22-iv-corrected",
      "QR[p,n] = p (QL[p,n] - QF[p,n]) + QL[p,n+p+1] - QF[p,n+p+1] - p I   (n >= p)", 0,
      from_p, "p", [](int p, std::int64_t n) { return qllr(p, n); },
      [](int p, std::int64_t n) {
        return (qluc(p, n) - qfib(p, n)).scaled(p) + qluc(p, n + p + 1) - qfib(p, n + p + 1) -
               unit_scaled(p);
      }));

  // Summations and the convolution, with their scalar helpers.
  reg.push_back(quat_identity(
      "sum-prop",
      "sum_{k=0..n} QR[p,k] = (p+1)(QL[p,n+p+1] - QL[p,p]) - p(n+1) I   (n >= p)", 0, from_p,
      "p",
      [](int p, std::int64_t n) {
        QuatZ acc = qllr(p, 0);
        for (std::int64_t k = 1; k <= n; ++k) acc = acc + qllr(p, k);
        return acc;
      },
      [](int p, std::int64_t n) {
        return (qluc(p, n + p + 1) - qluc(p, p)).scaled(p + 1) -
               unit_scaled(BigInt(p) * (n + 1));
      }));
  reg.push_back(quat_identity(
      "lucas-quat-sum", "sum_{r=0..n} QL[p,r] = QL[p,n+p+1] - QL[p,p]", 0, from_zero, "0",
      [](int p, std::int64_t n) {
        QuatZ acc = qluc(p, 0);
        for (std::int64_t r = 1; r <= n; ++r) acc = acc + qluc(p, r);
        return acc;
      },
      [](int p, std::int64_t n) { return qluc(p, n + p + 1) - qluc(p, p); }));
  reg.push_back(quat_identity(
      "conv-prop",
      "sum_{t=1..p} QR[p,n-t] F[p,t] = (p+1)(QL[p,n+p] - QL[p,n]) - p(F[p,2p+1]-1) I"
      "   (n >= p)",
      0, from_p, "p",
      [](int p, std::int64_t n) {
        QuatZ acc = qllr(p, n - 1).scaled(fib(p, 1));
        for (std::int64_t t = 2; t <= p; ++t) acc = acc + qllr(p, n - t).scaled(fib(p, t));
        return acc;
      },
      [](int p, std::int64_t n) {
        return (qluc(p, n + p) - qluc(p, n)).scaled(p + 1) -
               unit_scaled(p * (fib(p, 2 * p + 1) - 1));
      }));
  reg.push_back(scalar_identity(
      "abbad", "sum_{t=1..p} L[p,n-t] F[p,t] = L[p,n+p] - F[p,p+1] L[p,n]   (n >= p)", 0,
      from_p, "p",
      [](int p, std::int64_t n) {
        BigInt acc = 0;
        for (std::int64_t t = 1; t <= p; ++t) acc += luc(p, n - t) * fib(p, t);
        return acc;
      },
      [](int p, std::int64_t n) { return luc(p, n + p) - fib(p, p + 1) * luc(p, n); }));
  reg.push_back(scalar_identity(
      "tuglu", "sum_{t=0..n} F[p,t] = F[p,n+p+1] - F[p,p]", 0, from_zero, "0",
      [](int p, std::int64_t n) {
        BigInt acc = 0;
        for (std::int64_t t = 0; t <= n; ++t) acc += fib(p, t);
        return acc;
      },
      [](int p, std::int64_t n) { return fib(p, n + p + 1) - fib(p, p); }));

  // Classical order-1 identities used by the norm derivations.
  reg.push_back(scalar_identity(
      "classical-lucas-square-sum", "L[n]^2 + L[n+1]^2 = 5 F[2n+1]", 1, from_zero, "0",
      [](int, std::int64_t n) { return luc(1, n) * luc(1, n) + luc(1, n + 1) * luc(1, n + 1); },
      [](int, std::int64_t n) { return 5 * fib(1, 2 * n + 1); }));
  reg.push_back(scalar_identity(
      "classical-fib-square-sum", "F[n]^2 + F[n+1]^2 = F[2n+1]", 1, from_zero, "0",
      [](int, std::int64_t n) { return fib(1, n) * fib(1, n) + fib(1, n + 1) * fib(1, n + 1); },
      [](int, std::int64_t n) { return fib(1, 2 * n + 1); }));
  reg.push_back(scalar_identity(
      "classical-fib-skip", "F[n] + F[n+4] = 3 F[n+2]", 1, from_zero, "0",
      [](int, std::int64_t n) { return fib(1, n) + fib(1, n + 4); },
      [](int, std::int64_t n) { return 3 * fib(1, n + 2); }));
  reg.push_back(scalar_identity(
      "classical-lucas-fib-product", "L[n] F[n+1] = F[2n+1] + (-1)^n", 1, from_zero, "0",
      [](int, std::int64_t n) { return luc(1, n) * fib(1, n + 1); },
      [](int, std::int64_t n) { return fib(1, 2 * n + 1) + (n % 2 == 0 ? 1 : -1); }));
  reg.push_back(scalar_identity(
      "classical-lucas-skip", "L[n] + L[n+2] = 5 F[n+1]", 1, from_zero, "0",
      [](int, std::int64_t n) { return luc(1, n) + luc(1, n + 2); },
      [](int, std::int64_t n) { return 5 * fib(1, n + 1); }));
  reg.push_back(scalar_identity(
      "classical-fib-to-lucas", "F[n] + F[n+2] = L[n+1]", 1, from_zero, "0",
      [](int, std::int64_t n) { return fib(1, n) + fib(1, n + 2); },
      [](int, std::int64_t n) { return luc(1, n + 1); }));

  // Closed-form norms against the direct quadratic form.
  reg.push_back(scalar_identity(
      "norm-closed-form-lucas-leonardo", "N(QR[n]) = 4 (15 F[2n+3] - 5 F[n+3] + 1)", 1,
      from_zero, "0",
      [](int, std::int64_t n) { return lucas_leonardo_norm_closed_form(n); },
      [](int, std::int64_t n) { return qllr(1, n).norm(); }));
  reg.push_back(scalar_identity(
      "norm-closed-form-francois",
      "N(QFr[n]) = 39 F[2n+1] + 48 F[2n+2] - 34 F[n+1] - 18 F[n] + 4", 1, from_zero, "0",
      [](int, std::int64_t n) { return francois_norm_closed_form(n); },
      [](int, std::int64_t n) { return qfra(n).norm(); }));

  reg.push_back(gf_identity());
  reg.push_back(norm_multiplicativity_identity());
  return reg;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> reg = build_registry();
  return reg;
}

const IdentitySpec& find_identity(const std::string& id) {
  for (const auto& spec : registry()) {
    if (spec.id == id) return spec;
  }
  throw std::out_of_range("no identity with id '" + id + "' in the registry");
}

VerificationReport run_identity(const IdentitySpec& spec, int p_max, std::int64_t n_max) {
  VerificationReport report;
  report.id = spec.id;
  report.expectation = spec.expectation;
  report.grid = spec.grid(p_max, n_max);
  const auto start = std::chrono::steady_clock::now();
  report.first_counterexample = spec.scan(p_max, n_max);
  report.holds = !report.first_counterexample.has_value();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

VerificationSummary run_set(const std::vector<const IdentitySpec*>& specs, int p_max,
                            std::int64_t n_max) {
  VerificationSummary summary;
  summary.p_max = p_max;
  summary.n_max = n_max;

  std::unordered_map<std::string, const VerificationReport*> by_id;
  summary.reports.reserve(specs.size());
  for (const IdentitySpec* spec : specs) {
    summary.reports.push_back(run_identity(*spec, p_max, n_max));
  }
  for (const auto& report : summary.reports) {
    by_id[report.id] = &report;
  }

  bool ok = true;
  for (std::size_t idx = 0; idx < specs.size(); ++idx) {
    const IdentitySpec& spec = *specs[idx];
    const VerificationReport& report = summary.reports[idx];
    if (spec.expectation == Expectation::Hold) {
      ok = ok && report.holds;
      continue;
    }
    // FailAsPrinted: the printed form must fail and its corrected twin must hold.
    const auto twin = by_id.find(spec.corrected_id);
    const bool corrected_holds = twin != by_id.end() && twin->second->holds;
    ok = ok && !report.holds && corrected_holds;
    if (report.first_counterexample.has_value()) {
      summary.discrepancy_ledger.push_back(DiscrepancyEntry{
          spec.id, spec.corrected_id, *report.first_counterexample, corrected_holds});
    }
  }
  summary.success = ok;
  return summary;
}

}  // namespace

VerificationSummary run_all(int p_max, std::int64_t n_max) {
  if (p_max < 1 || n_max < 2 * static_cast<std::int64_t>(p_max) + 2) {
    throw std::domain_error("run_all: need p_max >= 1 and n_max >= 2 p_max + 2");
  }
  std::vector<const IdentitySpec*> specs;
  for (const auto& spec : registry()) specs.push_back(&spec);
  return run_set(specs, p_max, n_max);
}

VerificationSummary run_selected(const std::vector<std::string>& ids, int p_max,
                                 std::int64_t n_max) {
  if (p_max < 1 || n_max < 2 * static_cast<std::int64_t>(p_max) + 2) {
    throw std::domain_error("run_selected: need p_max >= 1 and n_max >= 2 p_max + 2");
  }
  std::set<std::string> wanted;
  for (const auto& id : ids) {
    const IdentitySpec& spec = find_identity(id);
    wanted.insert(spec.id);
    if (!spec.corrected_id.empty()) wanted.insert(spec.corrected_id);
  }
  std::vector<const IdentitySpec*> specs;
  for (const auto& spec : registry()) {
    if (wanted.count(spec.id)) specs.push_back(&spec);
  }
  return run_set(specs, p_max, n_max);
}

}  // namespace leoq
