#include "leoq/classification.hpp"

#include <algorithm>
#include <stdexcept>

#include "leoq/quaternion.hpp"
#include "leoq/quaternion_sequences.hpp"

namespace leoq {

bool ZeroDivisorClassification::covers(std::int64_t n) const {
  if (n < 0) throw std::domain_error("ZeroDivisorClassification::covers: index must be >= 0");
  const std::uint64_t r = static_cast<std::uint64_t>(n) % modulus;
  return std::binary_search(residues.begin(), residues.end(), r);
}

ZeroDivisorClassification ZeroDivisorClassification::canonicalized_to(
    std::uint64_t new_modulus) const {
  if (new_modulus == 0 || new_modulus % modulus != 0) {
    throw std::domain_error("canonicalized_to: target must be a multiple of the period");
  }
  ZeroDivisorClassification out = *this;
  out.modulus = new_modulus;
  out.residues.clear();
  out.vanishing.clear();
  for (std::uint64_t base = 0; base < new_modulus; base += modulus) {
    for (std::uint64_t r : residues) out.residues.push_back(base + r);
    for (std::uint64_t r : vanishing) out.vanishing.push_back(base + r);
  }
  std::sort(out.residues.begin(), out.residues.end());
  std::sort(out.vanishing.begin(), out.vanishing.end());
  return out;
}

ZeroDivisorClassification classify(const SequenceFamily& family, std::uint64_t q) {
  const PrimeField field(q);
  const SequencePeriod period = sequence_period_mod(family, q);
  const std::uint64_t length = period.length;

  // Residues for n < 2P+3, rolled from the initial values. The detected cycle
  // only fixes the claimed modulus; every verdict below is re-derived, and the
  // run stays valid when the period is shorter than the recurrence window.
  const std::size_t p = static_cast<std::size_t>(family.order());
  const std::uint64_t c = static_cast<std::uint64_t>(family.additive_constant()) % q;
  const std::size_t needed = static_cast<std::size_t>(2 * length + 3);
  std::vector<std::uint64_t> residue;
  residue.reserve(std::max(needed, p + 1));
  for (std::size_t k = 0; k <= p; ++k) {
    residue.push_back(term_mod(family, static_cast<std::int64_t>(k), q));
  }
  while (residue.size() < needed) {
    const std::size_t s = residue.size();
    residue.push_back((residue[s - 1] + residue[s - 1 - p] + c) % q);
  }

  ZeroDivisorClassification out{family, q, length, {}, {}, false};
  const auto verdict_at = [&](std::uint64_t n) -> int {
    const Quaternion<Fp> x = Quaternion<Fp>::hamilton(
        field.element(static_cast<std::int64_t>(residue[n])),
        field.element(static_cast<std::int64_t>(residue[n + 1])),
        field.element(static_cast<std::int64_t>(residue[n + 2])),
        field.element(static_cast<std::int64_t>(residue[n + 3])));
    if (x.is_zero()) return 0;
    return x.norm().is_zero() ? 1 : 2;  // zero divisor : invertible
  };

  std::vector<int> first_period(length);
  for (std::uint64_t n = 0; n < length; ++n) {
    first_period[n] = verdict_at(n);
    if (first_period[n] == 0) out.vanishing.push_back(n);
    if (first_period[n] == 1) out.residues.push_back(n);
  }
  for (std::uint64_t n = length; n < 2 * length; ++n) {
    if (verdict_at(n) != first_period[n - length]) {
      throw std::logic_error("classify: verdicts did not repeat over the second period");
    }
  }
  out.all_invertible = out.residues.empty();
  return out;
}

bool is_zero_divisor_at(const SequenceFamily& family, std::int64_t n, std::uint64_t q) {
  if (n < 0) throw std::domain_error("is_zero_divisor_at: index must be >= 0");
  const PrimeField field(q);
  return is_zero_divisor(quaternion_term(family, n, field));
}

bool classify_cross_check(const SequenceFamily& family, std::uint64_t q,
                          std::int64_t horizon) {
  const ZeroDivisorClassification cls = classify(family, q);
  if (horizon < static_cast<std::int64_t>(2 * cls.modulus)) {
    throw std::domain_error("classify_cross_check: horizon must cover two full periods");
  }
  const PrimeField field(q);
  for (std::int64_t n = 0; n < horizon; ++n) {
    const auto x = quaternion_term(family, n, field);
    const bool direct = is_zero_divisor(x);
    const bool by_residues = cls.covers(n);
    const bool by_annihilator = !x.is_zero() && brute_force_annihilator(x).has_value();
    if (direct != by_residues || direct != by_annihilator) return false;
  }
  return true;
}

}  // namespace leoq
