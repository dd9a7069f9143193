#pragma once

#include <cstdint>
#include <vector>

#include "leoq/quaternion.hpp"
#include "leoq/sequences.hpp"

namespace leoq {

/// Structure constants a = b = -1, the algebra every sequence quaternion lives in.
AlgebraParams<BigInt> hamilton_params();
AlgebraParams<Fp> hamilton_params(const PrimeField& field);

/// The unit I = 1 + i + j + k; N(I) = 4 over the exact integers.
Quaternion<BigInt> unit_i();
Quaternion<Fp> unit_i(const PrimeField& field);

/// The n-th sequence quaternion X_n + X_{n+1} i + X_{n+2} j + X_{n+3} k over
/// the exact integers, with a = b = -1.
Quaternion<BigInt> quaternion_term(const SequenceFamily& family, std::int64_t n);

/// Same lift with coefficients reduced into Z_q.
Quaternion<Fp> quaternion_term(const SequenceFamily& family, std::int64_t n,
                               const PrimeField& field);

/// 4 * (15 F_{2n+3} - 5 F_{n+3} + 1): the norm of the n-th Lucas-Leonardo
/// quaternion (order 1) in closed form.
BigInt lucas_leonardo_norm_closed_form(std::int64_t n);

/// 39 F_{2n+1} + 48 F_{2n+2} - 34 F_{n+1} - 18 F_n + 4: the norm of the n-th
/// Francois quaternion in closed form.
BigInt francois_norm_closed_form(std::int64_t n);

struct SeriesExpansion {
  int p = 0;
  std::vector<Quaternion<BigInt>> coefficients;
};

/// Formal power-series expansion of the Lucas-Leonardo p-quaternion generating
/// function. The rational function is cleared to polynomial form by
/// multiplying through by (1 - x)(1 - x - x^{p+1}) and the coefficients are
/// recovered by forward substitution in exact arithmetic. The numerator's
/// initial block is always built from computed quaternion terms.
SeriesExpansion lucas_leonardo_gf_coefficients(int p, std::size_t count);

enum class QuaternionRecurrence {
  ThreeTermWithUnit,  // X_n = X_{n-1} + X_{n-p-1} + cI, valid for n > p
  Homogeneous,        // X_n = X_{n-1} + X_{n-p} - X_{n-2p-1}, valid for n > 2p
};

/// Checks the chosen recurrence at index n in exact arithmetic; indices below
/// the validity range are a domain error.
bool quaternion_recurrence_holds(const SequenceFamily& family, std::int64_t n,
                                 QuaternionRecurrence form);

}  // namespace leoq
