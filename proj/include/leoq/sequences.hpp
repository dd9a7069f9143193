#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leoq/bigint.hpp"

namespace leoq {

enum class SequenceKind { Fibonacci, Lucas, Leonardo, LucasLeonardo, Francois };

/// One member of the five sequence families, identified by kind and order p.
///
/// All families share the shifted recurrence X_n = X_{n-1} + X_{n-p-1} + c
/// for n > p; c is 0 for Fibonacci/Lucas and p for the rest (the Francois
/// sequence exists only at order 1, where c = 1). Initial values:
///   Fibonacci:      0, 1, ..., 1
///   Lucas:          p+1, 1, ..., 1
///   Leonardo:       1, 1, ..., 1
///   Lucas-Leonardo: p^2+p+1, 1, ..., 1
///   Francois:       2, 1
class SequenceFamily {
 public:
  SequenceFamily(SequenceKind kind, int p);

  SequenceKind kind() const { return kind_; }
  int order() const { return p_; }
  /// The additive constant c of the recurrence (0 for the homogeneous families).
  int additive_constant() const;
  std::string name() const;

  friend bool operator==(const SequenceFamily&, const SequenceFamily&) = default;

 private:
  SequenceKind kind_;
  int p_;
};

/// Resolves CLI-style names: fibonacci, lucas, leonardo, lucas-leonardo, francois.
SequenceFamily family_from_name(const std::string& name, int p);

/// Exact n-th term. Terms are memoized per family, so windows that identity
/// suites re-read repeatedly are amortized O(1) after the first pass.
BigInt term(const SequenceFamily& family, std::int64_t n);

/// Inclusive range of consecutive terms; element i equals term(family, n_start + i).
std::vector<BigInt> terms(const SequenceFamily& family, std::int64_t n_start,
                          std::int64_t n_end);

/// term(family, n) mod q, computed by the modular recurrence with O(p) state.
/// Never reduces a big integer. q must be an odd prime.
std::uint64_t term_mod(const SequenceFamily& family, std::int64_t n, std::uint64_t q);

struct PisanoPeriod {
  std::uint64_t modulus = 0;
  std::uint64_t length = 0;
  std::vector<std::uint64_t> cycle;  // F_0 .. F_{length-1} mod modulus
};

/// Minimal period of the Fibonacci sequence mod m (m >= 2), found by scanning
/// for the first recurrence of the state (0, 1).
PisanoPeriod pisano_period(std::uint64_t m);

struct SequencePeriod {
  SequenceFamily family;
  std::uint64_t modulus = 0;
  std::uint64_t length = 0;
  std::vector<std::uint64_t> cycle;  // one full period of residues
};

/// Minimal period of the family's residue sequence mod q, by cycle detection
/// on the window of p+1 consecutive residues. The additive constant is part
/// of the recurrence, not the state, so the window determines everything that
/// follows and the period is at most q^(p+1).
SequencePeriod sequence_period_mod(const SequenceFamily& family, std::uint64_t q);

}  // namespace leoq
