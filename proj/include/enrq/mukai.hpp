#pragma once

#include "enrq/gradedring.hpp"

namespace enrq {

// A Mukai vector is a cohomology class read against the Mukai pairing
// (x, y) = -integral(dual(x) * y) = d_x.d_y - r_x s_y - r_y s_x.
struct MukaiVector {
  CohClass cls;

  explicit MukaiVector(CohClass c) : cls(std::move(c)) {}
  const ModelPtr& model() const { return cls.model; }
  bool is_integral() const { return is_integer(cls.r) && is_integer(cls.s) && vec_is_integral(cls.d); }
  bool is_zero() const { return sgn(cls.r) == 0 && sgn(cls.s) == 0 && vec_is_zero(cls.d); }
};

Rat mukai_pairing(const MukaiVector& x, const MukaiVector& y);
Rat mukai_pairing(const CohClass& x, const CohClass& y);

// Effectiveness test for integral vectors: (v,v) >= -2 and v0 >= 0, with the
// rank-zero cases refined as follows. When v0 = 0 the effectivity of the
// divisor part cannot be decided from the Gram matrix, so the caller states
// it via divisor_effective_or_zero; when v0 and v1 both vanish, v2 > 0 is
// required. The zero vector is not effective.
bool is_effective(const MukaiVector& v, bool divisor_effective_or_zero);

// (v,v) + 2 on the K3 model (integral v, pairing >= -2).
Int moduli_dim_k3(const MukaiVector& v);

MukaiVector mukai_vector_of_sheaf(const CohClass& chern);  // ch * sqrt(td)

}  // namespace enrq
