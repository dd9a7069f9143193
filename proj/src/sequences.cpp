#include "leoq/sequences.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "leoq/prime_field.hpp"

namespace leoq {

SequenceFamily::SequenceFamily(SequenceKind kind, int p) : kind_(kind), p_(p) {
  if (p < 1) {
    throw std::domain_error("SequenceFamily: order must be >= 1, got " + std::to_string(p));
  }
  if (kind == SequenceKind::Francois && p != 1) {
    throw std::domain_error("SequenceFamily: the Francois sequence is defined only at order 1");
  }
}

int SequenceFamily::additive_constant() const {
  switch (kind_) {
    case SequenceKind::Fibonacci:
    case SequenceKind::Lucas:
      return 0;
    case SequenceKind::Leonardo:
    case SequenceKind::LucasLeonardo:
    case SequenceKind::Francois:
      return p_;
  }
  throw std::logic_error("SequenceFamily: bad kind");
}

std::string SequenceFamily::name() const {
  switch (kind_) {
    case SequenceKind::Fibonacci: return "fibonacci";
    case SequenceKind::Lucas: return "lucas";
    case SequenceKind::Leonardo: return "leonardo";
    case SequenceKind::LucasLeonardo: return "lucas-leonardo";
    case SequenceKind::Francois: return "francois";
  }
  throw std::logic_error("SequenceFamily: bad kind");
}

SequenceFamily family_from_name(const std::string& name, int p) {
  if (name == "fibonacci") return {SequenceKind::Fibonacci, p};
  if (name == "lucas") return {SequenceKind::Lucas, p};
  if (name == "leonardo") return {SequenceKind::Leonardo, p};
  if (name == "lucas-leonardo") return {SequenceKind::LucasLeonardo, p};
  if (name == "francois") return {SequenceKind::Francois, p};
  throw std::domain_error("unknown sequence family: " + name);
}

namespace {

std::vector<BigInt> initial_values(const SequenceFamily& f) {
  const int p = f.order();
  std::vector<BigInt> init(static_cast<std::size_t>(p) + 1, BigInt(1));
  switch (f.kind()) {
    case SequenceKind::Fibonacci: init[0] = 0; break;
    case SequenceKind::Lucas: init[0] = p + 1; break;
    case SequenceKind::Leonardo: break;
    case SequenceKind::LucasLeonardo: init[0] = BigInt(p) * p + p + 1; break;
    case SequenceKind::Francois: init[0] = 2; break;
  }
  return init;
}

// Per-thread memo tables: concurrent workers each grow their own copy, so
// reads never race with growth.
std::vector<BigInt>& memo_table(const SequenceFamily& f) {
  thread_local std::map<std::pair<SequenceKind, int>, std::vector<BigInt>> tables;
  auto& table = tables[{f.kind(), f.order()}];
  if (table.empty()) table = initial_values(f);
  return table;
}

}  // namespace

BigInt term(const SequenceFamily& family, std::int64_t n) {
  if (n < 0) throw std::domain_error("term: index must be >= 0");
  auto& table = memo_table(family);
  const std::size_t p = static_cast<std::size_t>(family.order());
  const int c = family.additive_constant();
  while (table.size() <= static_cast<std::size_t>(n)) {
    const std::size_t s = table.size();
    table.push_back(table[s - 1] + table[s - 1 - p] + c);
  }
  return table[static_cast<std::size_t>(n)];
}

std::vector<BigInt> terms(const SequenceFamily& family, std::int64_t n_start,
                          std::int64_t n_end) {
  if (n_start < 0 || n_end < n_start) {
    throw std::domain_error("terms: need 0 <= n_start <= n_end");
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_end - n_start + 1));
  for (std::int64_t n = n_start; n <= n_end; ++n) out.push_back(term(family, n));
  return out;
}

std::uint64_t term_mod(const SequenceFamily& family, std::int64_t n, std::uint64_t q) {
  if (n < 0) throw std::domain_error("term_mod: index must be >= 0");
  if (!is_odd_prime(q)) {
    throw std::domain_error("term_mod: modulus " + std::to_string(q) + " is not an odd prime");
  }
  const std::size_t p = static_cast<std::size_t>(family.order());
  const std::uint64_t c = static_cast<std::uint64_t>(family.additive_constant()) % q;

  std::vector<std::uint64_t> window(p + 1);
  const auto init = initial_values(family);
  for (std::size_t k = 0; k <= p; ++k) {
    window[k] = Fp(init[k], q).value();
  }
  if (static_cast<std::size_t>(n) <= p) return window[static_cast<std::size_t>(n)];

  // Slide the (p+1)-wide window; O(n) ring operations, O(p) state.
  std::size_t head = 0;  // window[head] is the oldest residue, X_{t-p-1} when computing X_t
  for (std::int64_t t = static_cast<std::int64_t>(p) + 1; t <= n; ++t) {
    const std::uint64_t next = (window[head] + window[(head + p) % (p + 1)] + c) % q;
    window[head] = next;
    head = (head + 1) % (p + 1);
  }
  return window[(head + p) % (p + 1)];
}

PisanoPeriod pisano_period(std::uint64_t m) {
  if (m < 2) throw std::domain_error("pisano_period: modulus must be >= 2");
  PisanoPeriod out;
  out.modulus = m;
  std::uint64_t a = 0, b = 1;
  do {
    out.cycle.push_back(a);
    const std::uint64_t next = (a + b) % m;
    a = b;
    b = next;
  } while (!(a == 0 && b == 1));
  out.length = out.cycle.size();
  return out;
}

SequencePeriod sequence_period_mod(const SequenceFamily& family, std::uint64_t q) {
  if (!is_odd_prime(q)) {
    throw std::domain_error("sequence_period_mod: modulus " + std::to_string(q) +
                            " is not an odd prime");
  }
  const std::size_t p = static_cast<std::size_t>(family.order());
  const std::uint64_t c = static_cast<std::uint64_t>(family.additive_constant()) % q;

  std::vector<std::uint64_t> init(p + 1);
  const auto first = initial_values(family);
  for (std::size_t k = 0; k <= p; ++k) init[k] = Fp(first[k], q).value();

  // The window-advance map is invertible, so the orbit is purely periodic and
  // the first return to the initial window is the minimal sequence period.
  SequencePeriod out{family, q, 0, {}};
  std::vector<std::uint64_t> window = init;
  do {
    out.cycle.push_back(window[0]);
    const std::uint64_t next = (window[p] + window[0] + c) % q;
    for (std::size_t k = 0; k < p; ++k) window[k] = window[k + 1];
    window[p] = next;
  } while (window != init);
  out.length = out.cycle.size();
  return out;
}

}  // namespace leoq
