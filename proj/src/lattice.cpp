#include "enrq/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace enrq {

Lattice::Lattice(std::vector<std::vector<Int>> gram, std::string name)
    : gram_(std::move(gram)), name_(std::move(name)) {
  const size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("empty Gram matrix");
  for (const auto& row : gram_)
    if (row.size() != n) throw std::invalid_argument("Gram matrix not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Gram matrix not symmetric");

  QMat q(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = Rat(gram_[i][j]);
  Rat d = mat_det(q);
  if (sgn(d) == 0) throw std::invalid_argument("Gram matrix degenerate");
  det_ = d.get_num();  // integer entries give an integer determinant
}

Lattice make_u() { return Lattice({{0, 1}, {1, 0}}, "U"); }

Lattice make_u_scaled(long k) {
  if (k == 0) throw std::invalid_argument("scale factor must be nonzero");
  return Lattice({{0, k}, {k, 0}}, "U(" + std::to_string(k) + ")");
}

Lattice make_e8_minus() {
  // Negated E8 Cartan matrix; nodes 1-2-3-4, 3-5, 5-6-7-8.
  const int adj[8][8] = {
      {2, -1, 0, 0, 0, 0, 0, 0},  //
      {-1, 2, -1, 0, 0, 0, 0, 0},  //
      {0, -1, 2, -1, -1, 0, 0, 0},  //
      {0, 0, -1, 2, 0, 0, 0, 0},  //
      {0, 0, -1, 0, 2, -1, 0, 0},  //
      {0, 0, 0, 0, -1, 2, -1, 0},  //
      {0, 0, 0, 0, 0, -1, 2, -1},  //
      {0, 0, 0, 0, 0, 0, -1, 2}};
  std::vector<std::vector<Int>> g(8, std::vector<Int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g[i][j] = -adj[i][j];
  return Lattice(std::move(g), "E8(-1)");
}

Lattice rescale(const Lattice& l, long k) {
  if (k == 0) throw std::invalid_argument("scale factor must be nonzero");
  auto g = l.gram();
  for (auto& row : g)
    for (auto& e : row) e *= k;
  std::string name = l.name().empty() ? "" : l.name() + "(" + std::to_string(k) + ")";
  return Lattice(std::move(g), std::move(name));
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  int n = 0;
  for (const auto& p : parts) n += p.rank();
  std::vector<std::vector<Int>> g(n, std::vector<Int>(n, Int(0)));
  int off = 0;
  std::string name;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) g[off + i][off + j] = p.gram()[i][j];
    off += p.rank();
    if (!name.empty()) name += "+";
    name += p.name();
  }
  return Lattice(std::move(g), std::move(name));
}

Lattice enriques_ns_lattice() { return direct_sum({make_u(), make_e8_minus()}); }

Lattice k3_full_lattice() {
  return direct_sum({make_u(), make_u(), make_u(), make_e8_minus(), make_e8_minus()});
}

Lattice anti_invariant_default() {
  return direct_sum({make_u(), make_u_scaled(2), rescale(make_e8_minus(), 2)});
}

Rat pairing(const Lattice& l, const QVec& x, const QVec& y) {
  const size_t n = static_cast<size_t>(l.rank());
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("vector length does not match lattice rank");
  Rat acc(0);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    Rat row(0);
    for (size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      row += Rat(l.gram()[i][j]) * y[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

bool is_primitive(const QVec& x) {
  if (!vec_is_integral(x)) throw std::invalid_argument("primitivity requires an integral vector");
  if (vec_is_zero(x)) throw std::invalid_argument("primitivity undefined for the zero vector");
  Int g(0);
  for (const auto& c : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  return g == 1;
}

std::vector<QVec> enumerate_norm(const Lattice& l, const Int& target, long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const int n = l.rank();
  std::vector<QVec> out;
  QVec cur(static_cast<size_t>(n), Rat(0));
  // Plain box enumeration in lexicographic order.
  std::vector<long> v(static_cast<size_t>(n), -bound);
  while (true) {
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = Rat(v[static_cast<size_t>(i)]);
    if (pairing(l, cur, cur) == Rat(target)) out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && v[static_cast<size_t>(i)] == bound) {
      v[static_cast<size_t>(i)] = -bound;
      --i;
    }
    if (i < 0) break;
    ++v[static_cast<size_t>(i)];
  }
  return out;
}

bool is_isometry(const Lattice& l, const QMat& m, const Rat& tol) {
  const size_t n = static_cast<size_t>(l.rank());
  if (m.size() != n) throw std::invalid_argument("matrix rank mismatch");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix not square");
  if (sgn(tol) < 0) throw std::invalid_argument("tolerance must be nonnegative");
  // m^T gram m, checked entrywise against gram.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Rat acc(0);
      for (size_t a = 0; a < n; ++a) {
        if (sgn(m[a][i]) == 0) continue;
        Rat row(0);
        for (size_t b = 0; b < n; ++b) row += Rat(l.gram()[a][b]) * m[b][j];
        acc += m[a][i] * row;
      }
      Rat dev = acc - Rat(l.gram()[i][j]);
      if (abs(dev) > tol) return false;
    }
  }
  return true;
}

Rat mat_det(const QMat& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  QMat a = m;
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = 1 / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      Rat f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  const size_t n = a.size(), k = b.size();
  if (k == 0 || a.empty() || a[0].size() != k)
    throw std::invalid_argument("matrix product shape mismatch");
  const size_t m = b[0].size();
  QMat r(n, QVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

QVec mat_apply(const QMat& m, const QVec& x) {
  if (m.empty() || m[0].size() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  QVec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
  return r;
}

QMat mat_identity(int n) {
  QMat r(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
  return r;
}

}  // namespace enrq
