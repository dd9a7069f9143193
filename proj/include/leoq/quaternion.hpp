#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "leoq/bigint.hpp"
#include "leoq/prime_field.hpp"

namespace leoq {

// Ring glue: mint constants compatible with an existing element and compare
// rings. BigInt is the ring of exact integers; Fp carries its modulus.
inline BigInt ring_zero(const BigInt&) { return BigInt(0); }
inline BigInt ring_one(const BigInt&) { return BigInt(1); }
inline bool ring_is_zero(const BigInt& x) { return x == 0; }
inline bool same_ring(const BigInt&, const BigInt&) { return true; }
inline std::string ring_to_string(const BigInt& x) { return x.str(); }

inline Fp ring_zero(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp ring_one(const Fp& x) { return Fp(1, x.modulus()); }
inline bool ring_is_zero(const Fp& x) { return x.is_zero(); }
inline bool same_ring(const Fp& x, const Fp& y) { return x.modulus() == y.modulus(); }
inline std::string ring_to_string(const Fp& x) { return std::to_string(x.value()); }

/// The structure constants (a, b) of the algebra: i^2 = a, j^2 = b, ij = -ji = k.
/// Both must be nonzero in the coefficient ring.
template <typename R>
struct AlgebraParams {
  R a;
  R b;

  AlgebraParams(R a_, R b_) : a(std::move(a_)), b(std::move(b_)) {
    if (!same_ring(a, b)) throw std::domain_error("AlgebraParams: a and b from different rings");
    if (ring_is_zero(a) || ring_is_zero(b)) {
      throw std::domain_error("AlgebraParams: a and b must be nonzero");
    }
  }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

namespace detail {

// Product of basis elements e_r * e_s for the basis {1, i, j, k}, derived
// from i^2 = a, j^2 = b, k = ij and associativity:
//
//        |  1     i      j      k
//   -----+----------------------------
//     1  |  1     i      j      k
//     i  |  i     a      k      a j
//     j  |  j    -k      b     -b i
//     k  |  k    -a j    b i   -a b
struct BasisProduct {
  int basis;    // index of the resulting basis element
  int sign;     // +1 or -1
  bool by_a;    // multiply by a
  bool by_b;    // multiply by b
};

inline constexpr BasisProduct kBasisTable[4][4] = {
    {{0, +1, false, false}, {1, +1, false, false}, {2, +1, false, false}, {3, +1, false, false}},
    {{1, +1, false, false}, {0, +1, true, false}, {3, +1, false, false}, {2, +1, true, false}},
    {{2, +1, false, false}, {3, -1, false, false}, {0, +1, false, true}, {1, -1, false, true}},
    {{3, +1, false, false}, {2, -1, true, false}, {1, +1, false, true}, {0, -1, true, true}},
};

}  // namespace detail

/// Element of the generalized quaternion algebra over R with parameters (a, b).
/// Values are immutable; arithmetic between elements of different algebras
/// (different ring modulus or different parameters) throws std::domain_error.
template <typename R>
class Quaternion {
 public:
  Quaternion(R x1, R x2, R x3, R x4, AlgebraParams<R> params)
      : c_{std::move(x1), std::move(x2), std::move(x3), std::move(x4)},
        params_(std::move(params)) {
    if (!same_ring(c_[0], c_[1]) || !same_ring(c_[0], c_[2]) || !same_ring(c_[0], c_[3]) ||
        !same_ring(c_[0], params_.a)) {
      throw std::domain_error("Quaternion: coefficients from different rings");
    }
  }

  /// The classical case a = b = -1.
  static Quaternion hamilton(R x1, R x2, R x3, R x4) {
    R minus_one = -ring_one(x1);
    AlgebraParams<R> params(minus_one, minus_one);
    return Quaternion(std::move(x1), std::move(x2), std::move(x3), std::move(x4),
                      std::move(params));
  }

  const R& coefficient(int idx) const { return c_.at(static_cast<std::size_t>(idx)); }
  const std::array<R, 4>& coefficients() const { return c_; }
  const AlgebraParams<R>& params() const { return params_; }

  bool is_zero() const {
    return ring_is_zero(c_[0]) && ring_is_zero(c_[1]) && ring_is_zero(c_[2]) &&
           ring_is_zero(c_[3]);
  }

  Quaternion conjugate() const {
    return Quaternion(c_[0], -c_[1], -c_[2], -c_[3], params_);
  }

  /// N(x) = x1^2 - a x2^2 - b x3^2 + a b x4^2. Multiplicative; the sum of four
  /// squares when a = b = -1.
  R norm() const {
    const R& a = params_.a;
    const R& b = params_.b;
    return c_[0] * c_[0] - a * (c_[1] * c_[1]) - b * (c_[2] * c_[2]) + a * b * (c_[3] * c_[3]);
  }

  Quaternion scaled(const R& s) const {
    return Quaternion(s * c_[0], s * c_[1], s * c_[2], s * c_[3], params_);
  }

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    require_same_algebra(x, y);
    return Quaternion(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
                      x.c_[3] + y.c_[3], x.params_);
  }

  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    require_same_algebra(x, y);
    return Quaternion(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
                      x.c_[3] - y.c_[3], x.params_);
  }

  Quaternion operator-() const { return Quaternion(-c_[0], -c_[1], -c_[2], -c_[3], params_); }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    require_same_algebra(x, y);
    std::array<R, 4> out{ring_zero(x.c_[0]), ring_zero(x.c_[0]), ring_zero(x.c_[0]),
                         ring_zero(x.c_[0])};
    for (int r = 0; r < 4; ++r) {
      for (int s = 0; s < 4; ++s) {
        const auto& e = detail::kBasisTable[r][s];
        R t = x.c_[static_cast<std::size_t>(r)] * y.c_[static_cast<std::size_t>(s)];
        if (e.by_a) t = t * x.params_.a;
        if (e.by_b) t = t * x.params_.b;
        auto& slot = out[static_cast<std::size_t>(e.basis)];
        if (e.sign > 0) {
          slot = slot + t;
        } else {
          slot = slot - t;
        }
      }
    }
    return Quaternion(std::move(out[0]), std::move(out[1]), std::move(out[2]),
                      std::move(out[3]), x.params_);
  }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.params_ == y.params_ && x.c_ == y.c_;
  }

 private:
  static void require_same_algebra(const Quaternion& x, const Quaternion& y) {
    if (!(x.params_ == y.params_)) {
      throw std::domain_error("Quaternion: operands from different algebras");
    }
  }

  std::array<R, 4> c_;
  AlgebraParams<R> params_;
};

/// Renders "x1 + x2i + x3j + x4k" with explicit signs and no term elision.
template <typename R>
std::string to_string(const Quaternion<R>& x) {
  static constexpr const char* units[4] = {"", "i", "j", "k"};
  std::string out = ring_to_string(x.coefficient(0));
  for (int idx = 1; idx < 4; ++idx) {
    std::string digits = ring_to_string(x.coefficient(idx));
    if (!digits.empty() && digits[0] == '-') {
      out += " - " + digits.substr(1);
    } else {
      out += " + " + digits;
    }
    out += units[idx];
  }
  return out;
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Quaternion<R>& x) {
  return os << to_string(x);
}

class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// True iff x is nonzero with N(x) = 0. The notion is finite-field only;
/// there is deliberately no overload for exact-integer quaternions.
bool is_zero_divisor(const Quaternion<Fp>& x);
bool is_zero_divisor(const Quaternion<BigInt>&) = delete;

/// conj(x) / N(x); throws NotInvertibleError when N(x) = 0.
Quaternion<Fp> inverse(const Quaternion<Fp>& x);

/// For a zero divisor x, the canonical annihilator conj(x): it is nonzero and
/// x * conj(x) = conj(x) * x = N(x) = 0. Throws std::domain_error otherwise.
Quaternion<Fp> annihilator_witness(const Quaternion<Fp>& x);

/// Independent oracle: scans all q^4 - 1 nonzero y in lexicographic
/// (x1, x2, x3, x4) order for x*y = 0 and returns the first hit.
std::optional<Quaternion<Fp>> brute_force_annihilator(const Quaternion<Fp>& x);

}  // namespace leoq
