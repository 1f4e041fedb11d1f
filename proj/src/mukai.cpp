#include "enrq/mukai.hpp"

#include <stdexcept>

namespace enrq {

Rat mukai_pairing(const CohClass& x, const CohClass& y) {
  if (!same_model(x.model, y.model)) throw std::invalid_argument("surface model mismatch");
  return -integrate(mul(dual(x), y));
}

Rat mukai_pairing(const MukaiVector& x, const MukaiVector& y) {
  return mukai_pairing(x.cls, y.cls);
}

bool is_effective(const MukaiVector& v, bool divisor_effective_or_zero) {
  if (!v.is_integral()) throw std::invalid_argument("effectiveness requires an integral vector");
  if (v.is_zero()) return false;
  if (mukai_pairing(v, v) < -2) return false;
  if (sgn(v.cls.r) < 0) return false;
  if (sgn(v.cls.r) == 0) {
    if (!vec_is_zero(v.cls.d)) return divisor_effective_or_zero;
    return sgn(v.cls.s) > 0;
  }
  return true;
}

Int moduli_dim_k3(const MukaiVector& v) {
  if (v.model()->kind != SurfaceKind::K3)
    throw std::invalid_argument("moduli dimension formula applies to the K3 model");
  Rat sq = mukai_pairing(v, v);
  if (sq < -2) throw std::invalid_argument("Mukai self-pairing below -2");
  Rat dim = sq + 2;
  if (!is_integer(dim)) throw std::invalid_argument("non-integral moduli dimension");
  return dim.get_num();
}

MukaiVector mukai_vector_of_sheaf(const CohClass& chern) {
  return MukaiVector(mul(chern, sqrt_todd(chern.model)));
}

}  // namespace enrq
