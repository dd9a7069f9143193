#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "leoq/bigint.hpp"

namespace leoq {

inline bool is_odd_prime(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= q / d; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

/// Residue mod an odd prime, stored canonically in [0, q).
class Fp {
 public:
  Fp(std::int64_t value, std::uint64_t q) : q_(check_modulus(q)) {
    std::int64_t r = value % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    v_ = static_cast<std::uint64_t>(r);
  }

  Fp(const BigInt& value, std::uint64_t q) : q_(check_modulus(q)) {
    BigInt r = value % q;
    if (r < 0) r += q;
    v_ = r.convert_to<std::uint64_t>();
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return q_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& x, const Fp& y) {
    require_same_field(x, y);
    return Fp((x.v_ + y.v_) % x.q_, x.q_, 0);
  }
  friend Fp operator-(const Fp& x, const Fp& y) {
    require_same_field(x, y);
    return Fp((x.v_ + x.q_ - y.v_) % x.q_, x.q_, 0);
  }
  friend Fp operator*(const Fp& x, const Fp& y) {
    require_same_field(x, y);
    return Fp((x.v_ * y.v_) % x.q_, x.q_, 0);
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : q_ - v_, q_, 0); }

  Fp& operator+=(const Fp& y) { return *this = *this + y; }
  Fp& operator-=(const Fp& y) { return *this = *this - y; }
  Fp& operator*=(const Fp& y) { return *this = *this * y; }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    return Fp(t, q_);
  }

  // Residues in distinct fields are never equal; arithmetic on them throws.
  friend bool operator==(const Fp& x, const Fp& y) {
    return x.q_ == y.q_ && x.v_ == y.v_;
  }

 private:
  Fp(std::uint64_t v, std::uint64_t q, int) : v_(v), q_(q) {}  // trusted, pre-reduced

  static std::uint64_t check_modulus(std::uint64_t q) {
    if (q < 3 || q % 2 == 0) {
      throw std::domain_error("Fp: modulus must be an odd prime, got " + std::to_string(q));
    }
    if (q >> 32) {
      // products of residues must fit in 64 bits
      throw std::domain_error("Fp: modulus must fit in 32 bits");
    }
    return q;
  }

  static void require_same_field(const Fp& x, const Fp& y) {
    if (x.q_ != y.q_) {
      throw std::domain_error("Fp: mixed moduli " + std::to_string(x.q_) + " and " +
                              std::to_string(y.q_));
    }
  }

  std::uint64_t v_;
  std::uint64_t q_;
};

/// The field Z_q for an odd prime q; validates q once and mints elements.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q) : q_(q) {
    if (!is_odd_prime(q)) {
      throw std::domain_error("PrimeField: " + std::to_string(q) + " is not an odd prime");
    }
  }

  std::uint64_t modulus() const { return q_; }
  Fp element(std::int64_t value) const { return Fp(value, q_); }
  Fp element(const BigInt& value) const { return Fp(value, q_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

}  // namespace leoq
