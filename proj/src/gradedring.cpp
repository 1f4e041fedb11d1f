#include "enrq/gradedring.hpp"

#include <stdexcept>
#include <utility>

namespace enrq {

SurfaceModel SurfaceModel::k3(Lattice ns_lattice) {
  return SurfaceModel{SurfaceKind::K3, std::move(ns_lattice), 24, 2, 1};
}

SurfaceModel SurfaceModel::enriques(Lattice ns_lattice) {
  return SurfaceModel{SurfaceKind::Enriques, std::move(ns_lattice), 12, 1, 2};
}

ModelPtr make_k3(Lattice ns_lattice) {
  return std::make_shared<const SurfaceModel>(SurfaceModel::k3(std::move(ns_lattice)));
}

ModelPtr make_enriques(Lattice ns_lattice) {
  return std::make_shared<const SurfaceModel>(SurfaceModel::enriques(std::move(ns_lattice)));
}

bool same_model(const ModelPtr& a, const ModelPtr& b) {
  if (!a || !b) return false;
  if (a == b) return true;
  return a->kind == b->kind && a->ns == b->ns;
}

CohClass::CohClass(ModelPtr m, Rat rank, QVec divisor, Rat point)
    : model(std::move(m)), r(std::move(rank)), d(std::move(divisor)), s(std::move(point)) {
  if (!model) throw std::invalid_argument("CohClass requires a surface model");
  if (d.size() != static_cast<size_t>(model->ns.rank()))
    throw std::invalid_argument("divisor part does not match the ns lattice rank");
}

CohClass coh_scalar(const ModelPtr& m, const Rat& r) {
  return CohClass(m, r, zero_vec(m->ns.rank()), Rat(0));
}

CohClass coh_divisor(const ModelPtr& m, const QVec& d) { return CohClass(m, Rat(0), d, Rat(0)); }

CohClass coh_point(const ModelPtr& m, const Rat& s) {
  return CohClass(m, Rat(0), zero_vec(m->ns.rank()), s);
}

static void require_same_model(const CohClass& a, const CohClass& b) {
  if (!same_model(a.model, b.model)) throw std::invalid_argument("surface model mismatch");
}

CohClass mul(const CohClass& a, const CohClass& b) {
  require_same_model(a, b);
  Rat r = a.r * b.r;
  QVec d = vec_add(vec_scale(a.r, b.d), vec_scale(b.r, a.d));
  Rat s = a.r * b.s + b.r * a.s + pairing(a.model->ns, a.d, b.d);
  return CohClass(a.model, std::move(r), std::move(d), std::move(s));
}

CohClass add(const CohClass& a, const CohClass& b) {
  require_same_model(a, b);
  return CohClass(a.model, a.r + b.r, vec_add(a.d, b.d), a.s + b.s);
}

CohClass neg(const CohClass& a) { return CohClass(a.model, -a.r, vec_neg(a.d), -a.s); }

CohClass coh_exp(const CohClass& a) {
  if (sgn(a.r) != 0) throw std::invalid_argument("exp requires vanishing rank part");
  Rat dsq = pairing(a.model->ns, a.d, a.d);
  return CohClass(a.model, Rat(1), a.d, a.s + dsq / 2);
}

CohClass dual(const CohClass& a) { return CohClass(a.model, a.r, vec_neg(a.d), a.s); }

CohClass coh_sqrt(const CohClass& a) {
  Rat root;
  if (sgn(a.r) <= 0 || !rat_sqrt(a.r, root))
    throw std::invalid_argument("sqrt requires the rank to be a positive rational square");
  // Solve (b.r, b.d, b.s)^2 = a componentwise.
  QVec d = vec_scale(1 / (2 * root), a.d);
  Rat dsq = pairing(a.model->ns, d, d);
  Rat s = (a.s - dsq) / (2 * root);
  return CohClass(a.model, root, std::move(d), std::move(s));
}

CohClass coh_inverse(const CohClass& a) {
  if (sgn(a.r) == 0) throw std::invalid_argument("inverse requires nonzero rank");
  Rat r = 1 / a.r;
  QVec d = vec_scale(-1 / (a.r * a.r), a.d);
  Rat dsq = pairing(a.model->ns, a.d, a.d);
  Rat s = (dsq - a.r * a.s) / (a.r * a.r * a.r);
  return CohClass(a.model, std::move(r), std::move(d), std::move(s));
}

Rat integrate(const CohClass& a) { return a.s; }

CohClass todd(const ModelPtr& m) { return CohClass(m, Rat(1), zero_vec(m->ns.rank()), Rat(m->chiO)); }

CohClass sqrt_todd(const ModelPtr& m) { return coh_sqrt(todd(m)); }

CohClass line_bundle_chern(const ModelPtr& m, const QVec& d) {
  return coh_exp(coh_divisor(m, d));
}

}  // namespace enrq
