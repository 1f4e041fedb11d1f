#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "enrq/num.hpp"

namespace enrq {

// Integer lattice given by its Gram matrix. The matrix must be symmetric and
// nondegenerate; both are checked at construction.
class Lattice {
 public:
  Lattice(std::vector<std::vector<Int>> gram, std::string name = "");

  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<Int>>& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  const Int& det() const { return det_; }

  bool operator==(const Lattice& other) const { return gram_ == other.gram_; }

 private:
  std::vector<std::vector<Int>> gram_;
  std::string name_;
  Int det_;
};

// Standard building blocks.
Lattice make_u();                 // hyperbolic plane [[0,1],[1,0]]
Lattice make_u_scaled(long k);    // [[0,k],[k,0]]
Lattice make_e8_minus();          // negated E8 Cartan matrix
Lattice rescale(const Lattice& l, long k);
Lattice direct_sum(const std::vector<Lattice>& parts);

// Named lattices used throughout.
Lattice enriques_ns_lattice();    // U + E8(-1), rank 10
Lattice k3_full_lattice();        // U^3 + E8(-1)^2, rank 22
// Anti-invariant lattice of the Enriques involution on the K3 cover.
// The standard choice U + U(2) + E8(-2); any Gram matrix is accepted
// elsewhere, this is just the documented default.
Lattice anti_invariant_default();

// x^T gram y. Throws on length mismatch.
Rat pairing(const Lattice& l, const QVec& x, const QVec& y);

// gcd of coordinates is 1. Requires an integral nonzero vector.
bool is_primitive(const QVec& x);

// All integral vectors with |coordinate| <= bound and self-pairing == target,
// in lexicographic order. Bounded box search; completeness holds only within
// the box.
std::vector<QVec> enumerate_norm(const Lattice& l, const Int& target, long bound);

// Max-entry deviation of m^T gram m from gram is <= tol. tol = 0 gives the
// exact rational check.
bool is_isometry(const Lattice& l, const QMat& m, const Rat& tol = Rat(0));

// Exact determinant of a rational matrix (Gauss elimination).
Rat mat_det(const QMat& m);

QMat mat_mul(const QMat& a, const QMat& b);
QVec mat_apply(const QMat& m, const QVec& x);
QMat mat_identity(int n);

}  // namespace enrq
