#include "leoq/quaternion.hpp"

namespace leoq {

bool is_zero_divisor(const Quaternion<Fp>& x) {
  return !x.is_zero() && x.norm().is_zero();
}

Quaternion<Fp> inverse(const Quaternion<Fp>& x) {
  const Fp n = x.norm();
  if (n.is_zero()) {
    throw NotInvertibleError("quaternion has norm 0 and no inverse");
  }
  return x.conjugate().scaled(n.inverse());
}

Quaternion<Fp> annihilator_witness(const Quaternion<Fp>& x) {
  if (x.is_zero()) {
    throw std::domain_error("annihilator_witness: the zero quaternion is not a zero divisor");
  }
  if (!x.norm().is_zero()) {
    throw std::domain_error("annihilator_witness: quaternion has nonzero norm");
  }
  // x * conj(x) = conj(x) * x = N(x) = 0, and conj(x) = 0 only when x = 0.
  return x.conjugate();
}

std::optional<Quaternion<Fp>> brute_force_annihilator(const Quaternion<Fp>& x) {
  const std::uint64_t q = x.coefficient(0).modulus();
  for (std::uint64_t c1 = 0; c1 < q; ++c1) {
    for (std::uint64_t c2 = 0; c2 < q; ++c2) {
      for (std::uint64_t c3 = 0; c3 < q; ++c3) {
        for (std::uint64_t c4 = 0; c4 < q; ++c4) {
          if (c1 == 0 && c2 == 0 && c3 == 0 && c4 == 0) continue;
          Quaternion<Fp> y(Fp(static_cast<std::int64_t>(c1), q),
                           Fp(static_cast<std::int64_t>(c2), q),
                           Fp(static_cast<std::int64_t>(c3), q),
                           Fp(static_cast<std::int64_t>(c4), q), x.params());
          if ((x * y).is_zero()) return y;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace leoq
