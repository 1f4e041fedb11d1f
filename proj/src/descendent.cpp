#include "enrq/descendent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace enrq {

namespace {

// Row echelon form in place; returns pivot column indices.
std::vector<size_t> echelon(QMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    Rat inv = 1 / m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t mat_rank(QMat m) { return echelon(m).size(); }

// Nullspace basis (as columns) of a rows x cols matrix.
std::vector<QVec> nullspace(QMat m) {
  const size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<size_t> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rat(0));
    v[free] = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat bilinear(const QMat& gram, const QVec& x, const QVec& y) {
  Rat acc(0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) acc += x[i] * gram[i][j] * y[j];
  }
  return acc;
}

// Symmetric congruence diagonalization: returns S (as columns over the
// input basis) and the diagonal entries, all nonzero for a nondegenerate
// form.
void congruence_diagonalize(QMat c, std::vector<QVec>& s_cols, std::vector<Rat>& diag) {
  const size_t m = c.size();
  s_cols.assign(m, QVec(m, Rat(0)));
  for (size_t i = 0; i < m; ++i) s_cols[i][i] = Rat(1);

  auto add_col = [&](size_t dst, size_t src, const Rat& f) {
    // basis_dst += f * basis_src; congruent update of c.
    for (size_t t = 0; t < m; ++t) s_cols[dst][t] += f * s_cols[src][t];
    for (size_t t = 0; t < m; ++t) c[dst][t] += f * c[src][t];
    for (size_t t = 0; t < m; ++t) c[t][dst] += f * c[t][src];
  };

  for (size_t k = 0; k < m; ++k) {
    if (sgn(c[k][k]) == 0) {
      size_t j = k + 1;
      while (j < m && sgn(c[j][j]) == 0) ++j;
      if (j < m) {
        std::swap(s_cols[k], s_cols[j]);
        std::swap(c[k], c[j]);
        for (size_t t = 0; t < m; ++t) std::swap(c[t][k], c[t][j]);
      } else {
        j = k + 1;
        while (j < m && sgn(c[k][j]) == 0) ++j;
        if (j == m) throw std::invalid_argument("degenerate form in complement");
        add_col(k, j, Rat(1));  // diagonal becomes 2 c[k][j] != 0
      }
    }
    for (size_t j = k + 1; j < m; ++j) {
      if (sgn(c[k][j]) == 0) continue;
      add_col(j, k, -c[k][j] / c[k][k]);
    }
  }
  diag.resize(m);
  for (size_t k = 0; k < m; ++k) diag[k] = c[k][k];
}

DMat dmat_inverse(DMat a) {
  const size_t n = a.size();
  DMat inv(n, DVec(n, 0.0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-300) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    double f = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= f;
      inv[col][c] /= f;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double g = a[r][col];
      if (g == 0.0) continue;
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= g * a[col][c];
        inv[r][c] -= g * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

CohBasis::CohBasis(Lattice divisor_gram, QMat iota, QVec L_class)
    : gram_(std::move(divisor_gram)), iota_(std::move(iota)), L_(std::move(L_class)) {
  const size_t b = static_cast<size_t>(gram_.rank());
  if (iota_.size() != b) throw std::invalid_argument("iota rank mismatch");
  for (const auto& row : iota_)
    if (row.size() != b) throw std::invalid_argument("iota not square");
  if (L_.size() != b) throw std::invalid_argument("L does not match the divisor block");
  if (!is_isometry(gram_, iota_)) throw std::invalid_argument("iota is not an isometry");
  if (!(mat_mul(iota_, iota_) == mat_identity(gram_.rank())))
    throw std::invalid_argument("iota is not an involution");
  if (!(mat_apply(iota_, L_) == vec_neg(L_)))
    throw std::invalid_argument("L is not anti-invariant under iota");
  model_ = make_k3(gram_);
}

CohClass CohBasis::to_class(const QVec& coeffs) const {
  if (coeffs.size() != static_cast<size_t>(dim()))
    throw std::invalid_argument("coefficient vector length mismatch");
  QVec d(coeffs.begin() + 1, coeffs.end() - 1);
  return CohClass(model_, coeffs.front(), std::move(d), coeffs.back());
}

QVec CohBasis::to_coeffs(const CohClass& c) const {
  QVec out;
  out.reserve(static_cast<size_t>(dim()));
  out.push_back(c.r);
  out.insert(out.end(), c.d.begin(), c.d.end());
  out.push_back(c.s);
  return out;
}

DescPoly DescPoly::constant(const Rat& c) {
  DescPoly p;
  p.add_term({}, c);
  return p;
}

DescPoly DescPoly::generator(int i, const QVec& gamma) {
  DescPoly p;
  for (size_t k = 0; k < gamma.size(); ++k)
    p.add_term({DescGen{i, static_cast<int>(k)}}, gamma[k]);
  return p;
}

DescPoly DescPoly::atom(int i, int basis_index) {
  DescPoly p;
  p.add_term({DescGen{i, basis_index}}, Rat(1));
  return p;
}

DescPoly& DescPoly::add_term(Monomial m, Rat c) {
  if (sgn(c) == 0) return *this;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

DescPoly add(const DescPoly& a, const DescPoly& b) {
  DescPoly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

DescPoly scale(const Rat& c, const DescPoly& a) {
  DescPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, coeff] : a.terms()) r.add_term(m, c * coeff);
  return r;
}

DescPoly mul(const DescPoly& a, const DescPoly& b) {
  DescPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

DescPoly apply(const GeneratorMap& map, const DescPoly& p) {
  DescPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    DescPoly term = DescPoly::constant(Rat(1));
    for (const DescGen& g : mono) {
      DescPoly image;
      for (size_t j = 0; j < map.columns.size(); ++j)
        image.add_term({DescGen{g.i, static_cast<int>(j)}},
                       map.columns[j][static_cast<size_t>(g.basis_index)]);
      term = mul(term, image);
    }
    out = add(out, scale(coeff, term));
  }
  return out;
}

GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner) {
  return GeneratorMap{mat_mul(outer.columns, inner.columns)};
}

GeneratorMap phi_map(long r, const CohBasis& basis) {
  if (r < 1) throw std::invalid_argument("phi requires r >= 1");
  const int n = basis.dim();
  QMat m = mat_identity(n);
  const size_t u = static_cast<size_t>(basis.unit_index());
  const size_t pt = static_cast<size_t>(basis.point_index());
  m[u][u] = Rat(1, r);
  m[pt][u] = Rat(1, r) - Rat(r);
  m[pt][pt] = Rat(r);
  // The displayed rules overdetermine phi; verify that the unit rule forced
  // by linearity reproduces phi(ch(1+p)) = (1/r) ch(1+p).
  QVec one_plus_p = zero_vec(n);
  one_plus_p[u] = Rat(1);
  one_plus_p[pt] = Rat(1);
  if (!(mat_apply(m, one_plus_p) == vec_scale(Rat(1, r), one_plus_p)))
    throw std::logic_error("phi rules inconsistent");
  return GeneratorMap{std::move(m)};
}

DescPoly phi(const DescPoly& p, long r, const CohBasis& basis) {
  return apply(phi_map(r, basis), p);
}

GeneratorMap sigma_star_map(const CohBasis& basis) {
  const int n = basis.dim();
  QMat m = mat_identity(n);
  const int b = basis.b();
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      m[static_cast<size_t>(basis.divisor_index(i))][static_cast<size_t>(basis.divisor_index(j))] =
          basis.iota()[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return GeneratorMap{std::move(m)};
}

DescPoly sigma_star(const DescPoly& p, const CohBasis& basis) {
  return apply(sigma_star_map(basis), p);
}

namespace {

// Column k of a gamma-transform: the class-level image of the k-th basis
// element expanded back over the basis.
GeneratorMap class_level_map(const CohBasis& basis,
                             const std::function<CohClass(const CohClass&)>& f) {
  const int n = basis.dim();
  QMat m(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0)));
  for (int k = 0; k < n; ++k) {
    QVec e = zero_vec(n);
    e[static_cast<size_t>(k)] = Rat(1);
    QVec image = basis.to_coeffs(f(basis.to_class(e)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(k)] = image[static_cast<size_t>(i)];
  }
  return GeneratorMap{std::move(m)};
}

CohClass apply_iota(const CohBasis& basis, const CohClass& c) {
  return CohClass(c.model, c.r, mat_apply(basis.iota(), c.d), c.s);
}

}  // namespace

GeneratorMap sigma_on_universal_map(const CohBasis& basis) {
  CohClass exp_minus_l = coh_exp(coh_divisor(basis.model(), vec_neg(basis.L_class())));
  return class_level_map(basis, [&](const CohClass& c) {
    return mul(apply_iota(basis, c), exp_minus_l);
  });
}

DescPoly sigma_on_universal(const DescPoly& p, const CohBasis& basis) {
  return apply(sigma_on_universal_map(basis), p);
}

GeneratorMap twist_change_map(const CohBasis& basis, const QVec& delta, long r,
                              TwistDirection dir) {
  if (r < 1) throw std::invalid_argument("twist change requires r >= 1");
  Rat sign = (dir == TwistDirection::K_TO_G) ? Rat(-1) : Rat(1);
  CohClass factor = coh_exp(coh_divisor(basis.model(), vec_scale(sign / r, delta)));
  return class_level_map(basis, [&](const CohClass& c) { return mul(c, factor); });
}

DescPoly twist_change(const DescPoly& p, const CohBasis& basis, const QVec& delta, long r,
                      TwistDirection dir) {
  return apply(twist_change_map(basis, delta, r, dir), p);
}

bool commute_check(long r, const CohBasis& basis, int degree_bound) {
  GeneratorMap f = phi_map(r, basis);
  GeneratorMap s = sigma_star_map(basis);
  // Both maps are generator-wise, so commuting columns decide the question.
  if (!(compose(f, s).columns == compose(s, f).columns)) return false;

  // Monomial-level assertion over all multisets of generators of degree
  // <= degree_bound drawn from cohomological indices 0..2.
  std::vector<DescGen> pool;
  for (int i = 0; i <= 2; ++i)
    for (int k = 0; k < basis.dim(); ++k) pool.push_back(DescGen{i, k});

  std::vector<DescGen> current;
  auto check_current = [&]() {
    Monomial m = current;
    DescPoly p;
    p.add_term(std::move(m), Rat(1));
    return apply(f, apply(s, p)) == apply(s, apply(f, p));
  };
  // Depth-first enumeration of nondecreasing index sequences.
  std::function<bool(size_t, int)> rec = [&](size_t start, int remaining) {
    if (!current.empty() && !check_current()) return false;
    if (remaining == 0) return true;
    for (size_t idx = start; idx < pool.size(); ++idx) {
      current.push_back(pool[idx]);
      bool ok = rec(idx, remaining - 1);
      current.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, degree_bound);
}

std::pair<std::vector<MukaiVector>, std::vector<MukaiVector>> markman_class_lists(
    const ModelPtr& k3, long r, const QVec& c1_over_r, const Rat& n,
    const std::vector<QVec>& basis) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  CohClass v(k3, Rat(r), vec_scale(Rat(r), c1_over_r), n);
  if (!MukaiVector(v).is_integral()) throw std::invalid_argument("v = (r, r c1/r, n) must be integral");
  Rat vv = mukai_pairing(v, v);
  Rat big_n = (vv + 2) / 2;
  if (!is_integer(big_n)) throw std::invalid_argument("(v, v) odd: N is not an integer");

  CohClass exp_c = coh_exp(coh_divisor(k3, c1_over_r));
  std::vector<MukaiVector> list_a, list_b;
  for (const QVec& l : basis) {
    list_a.emplace_back(mul(coh_divisor(k3, l), exp_c));
    list_b.emplace_back(coh_divisor(k3, l));
  }
  list_a.emplace_back(exp_c);
  list_b.emplace_back(coh_scalar(k3, Rat(1, r)));
  list_a.emplace_back(coh_point(k3, Rat(1)));
  list_b.emplace_back(coh_point(k3, Rat(r)));
  list_a.emplace_back(coh_point(k3, Rat(1, r)));
  list_b.emplace_back(coh_point(k3, Rat(1)));
  list_a.emplace_back(v);
  list_b.emplace_back(add(coh_scalar(k3, Rat(1)), coh_point(k3, -(big_n - 1))));
  return {std::move(list_a), std::move(list_b)};
}

GramCheck gram_equality_check(const std::vector<MukaiVector>& list_a,
                              const std::vector<MukaiVector>& list_b) {
  if (list_a.size() != list_b.size()) throw std::invalid_argument("list length mismatch");
  Rat max_dev(0);
  bool equal = true;
  for (size_t i = 0; i < list_a.size(); ++i)
    for (size_t j = 0; j < list_a.size(); ++j) {
      Rat dev = abs(mukai_pairing(list_a[i], list_a[j]) - mukai_pairing(list_b[i], list_b[j]));
      if (sgn(dev) != 0) equal = false;
      if (dev > max_dev) max_dev = dev;
    }
  return GramCheck{equal, std::move(max_dev)};
}

QMat mukai_space_gram(const ModelPtr& m) {
  const int b = m->ns.rank();
  const int n = b + 2;
  QMat g(static_cast<size_t>(n), QVec(static_cast<size_t>(n), Rat(0)));
  g[0][static_cast<size_t>(n - 1)] = Rat(-1);
  g[static_cast<size_t>(n - 1)][0] = Rat(-1);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      g[static_cast<size_t>(1 + i)][static_cast<size_t>(1 + j)] = Rat(m->ns.gram()[i][j]);
  return g;
}

QVec mukai_coords(const CohClass& c) {
  QVec out;
  out.reserve(c.d.size() + 2);
  out.push_back(c.r);
  out.insert(out.end(), c.d.begin(), c.d.end());
  out.push_back(c.s);
  return out;
}

bool is_isometry_numeric(const QMat& gram, const DMat& m, double tol) {
  const size_t n = gram.size();
  double max_dev = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) acc += m[a][i] * gram[a][b].get_d() * m[b][j];
      max_dev = std::max(max_dev, std::fabs(acc - gram[i][j].get_d()));
    }
  return max_dev <= tol;
}

NumericIsometry construct_isometry(const QMat& gram, const std::vector<QVec>& v_list,
                                   const std::vector<QVec>& w_list, double tol) {
  const size_t n = gram.size();
  const size_t k = v_list.size();
  if (w_list.size() != k) throw std::invalid_argument("list length mismatch");
  for (const auto& v : v_list)
    if (v.size() != n) throw std::invalid_argument("vector dimension mismatch");
  for (const auto& w : w_list)
    if (w.size() != n) throw std::invalid_argument("vector dimension mismatch");

  // Pairwise inner products must agree exactly.
  QMat gv(k, QVec(k)), gw(k, QVec(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      gv[i][j] = bilinear(gram, v_list[i], v_list[j]);
      gw[i][j] = bilinear(gram, w_list[i], w_list[j]);
    }
  if (!(gv == gw)) throw std::invalid_argument("Gram matrices of the lists differ");

  // Nondegenerate spans: the Gram rank of the list must equal its vector
  // rank, and pivot selection through the Gram picks an independent subset
  // valid for both lists at once.
  QMat coords_v(k, QVec(n)), coords_w(k, QVec(n));
  for (size_t i = 0; i < k; ++i) {
    coords_v[i] = v_list[i];
    coords_w[i] = w_list[i];
  }
  QMat gv_copy = gv;
  std::vector<size_t> pivots = echelon(gv_copy);
  const size_t span_dim = pivots.size();
  if (mat_rank(coords_v) != span_dim || mat_rank(coords_w) != span_dim)
    throw std::invalid_argument("degenerate span");

  // Orthogonal complements: nullspace of (span basis)^T gram.
  auto complement = [&](const std::vector<QVec>& list) {
    QMat a(span_dim, QVec(n, Rat(0)));
    for (size_t p = 0; p < span_dim; ++p)
      for (size_t c = 0; c < n; ++c)
        for (size_t t = 0; t < n; ++t) a[p][c] += list[pivots[p]][t] * gram[t][c];
    return nullspace(std::move(a));
  };
  std::vector<QVec> comp_v = complement(v_list);
  std::vector<QVec> comp_w = complement(w_list);
  if (comp_v.size() != n - span_dim || comp_w.size() != n - span_dim)
    throw std::invalid_argument("degenerate span");

  // Diagonalize the restricted forms and normalize to +-1 norms.
  auto normalized_complement = [&](const std::vector<QVec>& comp) {
    const size_t m = comp.size();
    QMat c(m, QVec(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) c[i][j] = bilinear(gram, comp[i], comp[j]);
    std::vector<QVec> s_cols;
    std::vector<Rat> diag;
    congruence_diagonalize(std::move(c), s_cols, diag);
    // Columns ordered positive norms first, then negative.
    std::vector<size_t> order;
    for (size_t i = 0; i < m; ++i)
      if (sgn(diag[i]) > 0) order.push_back(i);
    size_t positives = order.size();
    for (size_t i = 0; i < m; ++i)
      if (sgn(diag[i]) < 0) order.push_back(i);
    DMat cols(m, DVec(n, 0.0));
    for (size_t oi = 0; oi < m; ++oi) {
      size_t i = order[oi];
      double scale = 1.0 / std::sqrt(std::fabs(diag[i].get_d()));
      for (size_t t = 0; t < n; ++t) {
        double coord = 0.0;
        for (size_t j = 0; j < m; ++j) coord += s_cols[i][j].get_d() * comp[j][t].get_d();
        cols[oi][t] = coord * scale;
      }
    }
    return std::make_pair(cols, positives);
  };
  auto [u_v, pos_v] = normalized_complement(comp_v);
  auto [u_w, pos_w] = normalized_complement(comp_w);
  if (pos_v != pos_w) throw std::logic_error("complement signatures differ");

  // Assemble bases (as columns) and solve phi = B_w B_v^{-1}.
  DMat bv(n, DVec(n, 0.0)), bw(n, DVec(n, 0.0));
  for (size_t p = 0; p < span_dim; ++p)
    for (size_t t = 0; t < n; ++t) {
      bv[t][p] = v_list[pivots[p]][t].get_d();
      bw[t][p] = w_list[pivots[p]][t].get_d();
    }
  for (size_t c = 0; c < n - span_dim; ++c)
    for (size_t t = 0; t < n; ++t) {
      bv[t][span_dim + c] = u_v[c][t];
      bw[t][span_dim + c] = u_w[c][t];
    }
  DMat bv_inv = dmat_inverse(bv);
  DMat phi(n, DVec(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < n; ++t) {
      if (bw[i][t] == 0.0) continue;
      for (size_t j = 0; j < n; ++j) phi[i][j] += bw[i][t] * bv_inv[t][j];
    }

  // Validate against the promised tolerances (relative).
  double gram_scale = 1.0;
  for (const auto& row : gram)
    for (const auto& e : row) gram_scale = std::max(gram_scale, std::fabs(e.get_d()));
  double gram_dev = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) acc += phi[a][i] * gram[a][b].get_d() * phi[b][j];
      gram_dev = std::max(gram_dev, std::fabs(acc - gram[i][j].get_d()));
    }
  gram_dev /= gram_scale;

  double image_dev = 0.0;
  for (size_t idx = 0; idx < k; ++idx) {
    double w_scale = 1.0;
    for (size_t t = 0; t < n; ++t) w_scale = std::max(w_scale, std::fabs(w_list[idx][t].get_d()));
    for (size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (size_t j = 0; j < n; ++j) acc += phi[i][j] * v_list[idx][j].get_d();
      image_dev = std::max(image_dev, std::fabs(acc - w_list[idx][i].get_d()) / w_scale);
    }
  }
  if (gram_dev > tol || image_dev > tol)
    throw std::runtime_error("isometry construction exceeded tolerance");
  return NumericIsometry{std::move(phi), gram_dev, image_dev};
}

}  // namespace enrq
