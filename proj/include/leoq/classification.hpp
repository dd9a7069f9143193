#pragma once

#include <cstdint>
#include <vector>

#include "leoq/sequences.hpp"

namespace leoq {

/// Answer to "for which n is the n-th sequence quaternion a zero divisor in
/// the algebra over Z_q?" The verdict is periodic in n; residues are sorted
/// and live in [0, modulus).
struct ZeroDivisorClassification {
  SequenceFamily family;
  std::uint64_t q = 0;
  std::uint64_t modulus = 0;                 // minimal period of the scalar sequence mod q
  std::vector<std::uint64_t> residues;       // zero-divisor residue classes
  std::vector<std::uint64_t> vanishing;      // classes whose quaternion is 0 (neither verdict)
  bool all_invertible = false;

  /// Residue-set membership for an absolute index.
  bool covers(std::int64_t n) const;

  /// Re-expresses the residue set modulo a multiple of the detected period,
  /// e.g. the Pisano period, for comparison against statements given there.
  ZeroDivisorClassification canonicalized_to(std::uint64_t new_modulus) const;
};

/// Scans one full period of the quaternion norm mod q (the period of the
/// scalar sequence; the 4-term window inherits it), then re-verifies the
/// verdicts over a second full period.
ZeroDivisorClassification classify(const SequenceFamily& family, std::uint64_t q);

/// Direct evaluation at one index, no period shortcut.
bool is_zero_divisor_at(const SequenceFamily& family, std::int64_t n, std::uint64_t q);

/// Triple agreement over n < horizon: direct norm criterion, residue-set
/// membership, and brute-force annihilator existence. horizon must cover at
/// least two periods.
bool classify_cross_check(const SequenceFamily& family, std::uint64_t q,
                          std::int64_t horizon);

}  // namespace leoq
