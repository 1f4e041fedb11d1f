#pragma once

#include <memory>
#include <string>

#include "enrq/lattice.hpp"
#include "enrq/num.hpp"

namespace enrq {

enum class SurfaceKind { K3, Enriques };

// Surface data entering the numerology: the divisor lattice (torsion-free),
// topological Euler characteristic, chi(O), and the covering degree used
// when integrating classes pulled back from an Enriques surface to its
// K3 cover.
struct SurfaceModel {
  SurfaceKind kind;
  Lattice ns;
  int euler;
  int chiO;
  int covering_factor;

  static SurfaceModel k3(Lattice ns_lattice);
  static SurfaceModel enriques(Lattice ns_lattice);
};

using ModelPtr = std::shared_ptr<const SurfaceModel>;

ModelPtr make_k3(Lattice ns_lattice);
ModelPtr make_enriques(Lattice ns_lattice);
bool same_model(const ModelPtr& a, const ModelPtr& b);

// Element of the degree-truncated cohomology ring of a surface:
// rank part r, divisor part d (in the model's ns lattice), point part s.
struct CohClass {
  ModelPtr model;
  Rat r;
  QVec d;
  Rat s;

  CohClass(ModelPtr m, Rat rank, QVec divisor, Rat point);
  bool operator==(const CohClass& o) const { return r == o.r && d == o.d && s == o.s; }
};

CohClass coh_scalar(const ModelPtr& m, const Rat& r);
CohClass coh_divisor(const ModelPtr& m, const QVec& d);
CohClass coh_point(const ModelPtr& m, const Rat& s);

CohClass mul(const CohClass& a, const CohClass& b);
CohClass add(const CohClass& a, const CohClass& b);
CohClass neg(const CohClass& a);

// exp of a class with no rank part: (1, d, s + d^2/2).
CohClass coh_exp(const CohClass& a);

// (r, d, s) -> (r, -d, s).
CohClass dual(const CohClass& a);

// Positive-branch square root; requires the rank to be a positive rational
// square. sqrt(a) * sqrt(a) == a exactly.
CohClass coh_sqrt(const CohClass& a);

// Multiplicative inverse; requires nonzero rank.
CohClass coh_inverse(const CohClass& a);

// Coefficient of the point class.
Rat integrate(const CohClass& a);

// Todd class in the torsion-free model: (1, 0, chi(O)); its square root is
// (1, 0, chi(O)/2).
CohClass todd(const ModelPtr& m);
CohClass sqrt_todd(const ModelPtr& m);

// Chern character of a line bundle with first Chern class d: (1, d, d^2/2).
CohClass line_bundle_chern(const ModelPtr& m, const QVec& d);

}  // namespace enrq
