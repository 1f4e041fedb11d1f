#pragma once

#include <map>
#include <utility>
#include <vector>

#include "enrq/mukai.hpp"

namespace enrq {

// Basis of the surface cohomology used for descendent symbols: the unit
// class, b divisor classes over a fixed Gram matrix, and the point class.
// iota is an involutive isometry of the divisor block (unit and point are
// always fixed) and L_class is the distinguished anti-invariant divisor:
// iota(L) = -L. All three conditions are checked at construction.
class CohBasis {
 public:
  CohBasis(Lattice divisor_gram, QMat iota, QVec L_class);

  int b() const { return gram_.rank(); }
  int dim() const { return gram_.rank() + 2; }  // unit + divisors + point
  const Lattice& gram() const { return gram_; }
  const QMat& iota() const { return iota_; }
  const QVec& L_class() const { return L_; }
  const ModelPtr& model() const { return model_; }

  // Indices into coefficient vectors of length dim().
  int unit_index() const { return 0; }
  int divisor_index(int j) const { return 1 + j; }
  int point_index() const { return gram_.rank() + 1; }

  CohClass to_class(const QVec& coeffs) const;
  QVec to_coeffs(const CohClass& c) const;

 private:
  Lattice gram_;
  QMat iota_;
  QVec L_;
  ModelPtr model_;
};

// One descendent symbol ch_i(basis element).
struct DescGen {
  int i;            // cohomological index, >= 0
  int basis_index;  // 0 = unit, 1..b = divisors, b+1 = point
  auto operator<=>(const DescGen&) const = default;
};

using Monomial = std::vector<DescGen>;  // sorted multiset

// Polynomial in descendent symbols, kept in normal form: every generator is
// expanded over the basis, monomials are sorted, zero coefficients dropped.
// Equality is coefficient equality of this normal form.
class DescPoly {
 public:
  DescPoly() = default;

  static DescPoly zero() { return DescPoly(); }
  static DescPoly constant(const Rat& c);
  // ch_i(gamma) with gamma given by basis coefficients.
  static DescPoly generator(int i, const QVec& gamma);
  static DescPoly atom(int i, int basis_index);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const DescPoly&) const = default;

  DescPoly& add_term(Monomial m, Rat c);

 private:
  std::map<Monomial, Rat> terms_;
};

DescPoly add(const DescPoly& a, const DescPoly& b);
DescPoly scale(const Rat& c, const DescPoly& a);
DescPoly mul(const DescPoly& a, const DescPoly& b);

// A generator-wise algebra map: column k is the image of the basis element
// k in the arguments of every ch_i, independent of i.
struct GeneratorMap {
  QMat columns;  // dim x dim
};

DescPoly apply(const GeneratorMap& m, const DescPoly& p);
GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner);

// ch_i(L_j) -> ch_i(L_j), ch_i(p) -> r ch_i(p),
// ch_i(1 + p) -> (1/r) ch_i(1 + p); the unit rule
// ch_i(1) -> (1/r) ch_i(1) + (1/r - r) ch_i(p) is forced by linearity and
// the three displayed rules are verified to be consistent.
GeneratorMap phi_map(long r, const CohBasis& basis);
DescPoly phi(const DescPoly& p, long r, const CohBasis& basis);

// ch_i(gamma) -> ch_i(iota gamma).
GeneratorMap sigma_star_map(const CohBasis& basis);
DescPoly sigma_star(const DescPoly& p, const CohBasis& basis);

// ch_i(gamma) -> ch_i(iota(gamma) * exp(-L)), the action on descendents of
// the involution on the universal-sheaf side.
GeneratorMap sigma_on_universal_map(const CohBasis& basis);
DescPoly sigma_on_universal(const DescPoly& p, const CohBasis& basis);

enum class TwistDirection { K_TO_G, G_TO_K };

// Change between the two normalizations of the realization map:
// K_TO_G multiplies gamma by exp(-delta/r), G_TO_K by exp(+delta/r).
GeneratorMap twist_change_map(const CohBasis& basis, const QVec& delta, long r,
                              TwistDirection dir);
DescPoly twist_change(const DescPoly& p, const CohBasis& basis, const QVec& delta, long r,
                      TwistDirection dir);

// phi and sigma_star commute at generator level and on all monomials of
// generator-degree <= degree_bound.
bool commute_check(long r, const CohBasis& basis, int degree_bound);

// The two class lists with equal intersection matrices:
//   list A: L_i e^{c1/r}, e^{c1/r}, p, p/r, v
//   list B: L_i, 1/r, r p, p, 1 - (N-1) p
// with v = (r, r c1_over_r, n) integral and 2N - 2 = (v, v).
std::pair<std::vector<MukaiVector>, std::vector<MukaiVector>> markman_class_lists(
    const ModelPtr& k3, long r, const QVec& c1_over_r, const Rat& n,
    const std::vector<QVec>& basis);

struct GramCheck {
  bool equal;
  Rat max_deviation;
};
GramCheck gram_equality_check(const std::vector<MukaiVector>& list_a,
                              const std::vector<MukaiVector>& list_b);

// Full Mukai-space Gram matrix of a model, in coordinates (r, d..., s).
QMat mukai_space_gram(const ModelPtr& m);
QVec mukai_coords(const CohClass& c);

using DVec = std::vector<double>;
using DMat = std::vector<DVec>;

struct NumericIsometry {
  DMat matrix;
  double gram_deviation;   // relative max-entry deviation of phi^T G phi from G
  double image_deviation;  // relative max deviation of phi(v_i) from w_i
};

// Builds a numeric isometry phi of (V, gram) with phi(v_i) = w_i, given that
// both spans are nondegenerate and the two lists have identical pairwise
// inner products. The map is the span-to-span extension completed by an
// isometry of the orthogonal complements obtained from congruence
// diagonalization. Deviations are guaranteed <= tol (default 1e-9).
NumericIsometry construct_isometry(const QMat& gram, const std::vector<QVec>& v_list,
                                   const std::vector<QVec>& w_list, double tol = 1e-9);

// Numeric isometry test: max-entry deviation of m^T gram m from gram <= tol.
bool is_isometry_numeric(const QMat& gram, const DMat& m, double tol);

}  // namespace enrq
