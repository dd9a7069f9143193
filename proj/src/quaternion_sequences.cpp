#include "leoq/quaternion_sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace leoq {

AlgebraParams<BigInt> hamilton_params() { return {BigInt(-1), BigInt(-1)}; }

AlgebraParams<Fp> hamilton_params(const PrimeField& field) {
  return {field.element(-1), field.element(-1)};
}

Quaternion<BigInt> unit_i() {
  return {BigInt(1), BigInt(1), BigInt(1), BigInt(1), hamilton_params()};
}

Quaternion<Fp> unit_i(const PrimeField& field) {
  return {field.element(1), field.element(1), field.element(1), field.element(1),
          hamilton_params(field)};
}

Quaternion<BigInt> quaternion_term(const SequenceFamily& family, std::int64_t n) {
  if (n < 0) throw std::domain_error("quaternion_term: index must be >= 0");
  return {term(family, n), term(family, n + 1), term(family, n + 2), term(family, n + 3),
          hamilton_params()};
}

Quaternion<Fp> quaternion_term(const SequenceFamily& family, std::int64_t n,
                               const PrimeField& field) {
  if (n < 0) throw std::domain_error("quaternion_term: index must be >= 0");
  const std::uint64_t q = field.modulus();
  return {Fp(static_cast<std::int64_t>(term_mod(family, n, q)), q),
          Fp(static_cast<std::int64_t>(term_mod(family, n + 1, q)), q),
          Fp(static_cast<std::int64_t>(term_mod(family, n + 2, q)), q),
          Fp(static_cast<std::int64_t>(term_mod(family, n + 3, q)), q),
          hamilton_params(field)};
}

BigInt lucas_leonardo_norm_closed_form(std::int64_t n) {
  if (n < 0) throw std::domain_error("lucas_leonardo_norm_closed_form: index must be >= 0");
  const SequenceFamily fib(SequenceKind::Fibonacci, 1);
  return 4 * (15 * term(fib, 2 * n + 3) - 5 * term(fib, n + 3) + 1);
}

BigInt francois_norm_closed_form(std::int64_t n) {
  if (n < 0) throw std::domain_error("francois_norm_closed_form: index must be >= 0");
  const SequenceFamily fib(SequenceKind::Fibonacci, 1);
  return 39 * term(fib, 2 * n + 1) + 48 * term(fib, 2 * n + 2) - 34 * term(fib, n + 1) -
         18 * term(fib, n) + 4;
}

namespace {

// Convolution of two integer polynomials given as coefficient vectors.
std::vector<BigInt> poly_mul(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  std::vector<BigInt> out(lhs.size() + rhs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

}  // namespace

SeriesExpansion lucas_leonardo_gf_coefficients(int p, std::size_t count) {
  if (p < 1) throw std::domain_error("lucas_leonardo_gf_coefficients: order must be >= 1");
  if (count < 1) throw std::domain_error("lucas_leonardo_gf_coefficients: count must be >= 1");
  const SequenceFamily family(SequenceKind::LucasLeonardo, p);
  const auto params = hamilton_params();
  const Quaternion<BigInt> zero(BigInt(0), BigInt(0), BigInt(0), BigInt(0), params);
  const std::size_t sp = static_cast<std::size_t>(p);

  // Numerator block QR_{p,0} + sum_{n=1..p} (QR_{p,n} - QR_{p,n-1}) x^n,
  // from computed terms.
  std::vector<Quaternion<BigInt>> numerator;
  numerator.reserve(sp + 1);
  numerator.push_back(quaternion_term(family, 0));
  for (int n = 1; n <= p; ++n) {
    numerator.push_back(quaternion_term(family, n) - quaternion_term(family, n - 1));
  }

  // Clear both denominators: G(x) * (1-x)(1-x-x^{p+1}) = (1-x) * numerator + pI x^{p+1}.
  std::vector<Quaternion<BigInt>> rhs(sp + 3, zero);
  for (std::size_t i = 0; i <= sp; ++i) {
    rhs[i] = rhs[i] + numerator[i];
    rhs[i + 1] = rhs[i + 1] - numerator[i];
  }
  rhs[sp + 1] = rhs[sp + 1] + unit_i().scaled(BigInt(p));

  std::vector<BigInt> shifted(sp + 2, BigInt(0));  // 1 - x - x^{p+1}
  shifted[0] = 1;
  shifted[1] -= 1;
  shifted[sp + 1] -= 1;
  const std::vector<BigInt> denom = poly_mul({BigInt(1), BigInt(-1)}, shifted);

  // Forward substitution: denom[0] = 1, so g_n = rhs_n - sum_{m>=1} denom[m] g_{n-m}.
  SeriesExpansion out;
  out.p = p;
  out.coefficients.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Quaternion<BigInt> acc = n < rhs.size() ? rhs[n] : zero;
    const std::size_t m_max = std::min(n, denom.size() - 1);
    for (std::size_t m = 1; m <= m_max; ++m) {
      if (denom[m] != 0) {
        acc = acc - out.coefficients[n - m].scaled(denom[m]);
      }
    }
    out.coefficients.push_back(acc);
  }
  return out;
}

bool quaternion_recurrence_holds(const SequenceFamily& family, std::int64_t n,
                                 QuaternionRecurrence form) {
  const std::int64_t p = family.order();
  switch (form) {
    case QuaternionRecurrence::ThreeTermWithUnit: {
      if (n <= p) {
        throw std::domain_error("quaternion_recurrence_holds: three-term form needs n > p");
      }
      const auto rhs = quaternion_term(family, n - 1) + quaternion_term(family, n - p - 1) +
                       unit_i().scaled(BigInt(family.additive_constant()));
      return quaternion_term(family, n) == rhs;
    }
    case QuaternionRecurrence::Homogeneous: {
      if (n <= 2 * p) {
        throw std::domain_error("quaternion_recurrence_holds: homogeneous form needs n > 2p");
      }
      const auto rhs = quaternion_term(family, n - 1) + quaternion_term(family, n - p) -
                       quaternion_term(family, n - 2 * p - 1);
      return quaternion_term(family, n) == rhs;
    }
  }
  throw std::logic_error("quaternion_recurrence_holds: bad form");
}

}  // namespace leoq
