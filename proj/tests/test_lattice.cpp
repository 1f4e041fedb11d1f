#include <doctest.h>

#include <random>

#include "enrq/lattice.hpp"

using namespace enrq;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QVec random_vec(std::mt19937& rng, int n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  QVec v;
  for (int i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

}  // namespace

TEST_CASE("hyperbolic plane pairing") {
  Lattice u = make_u();
  CHECK(pairing(u, qv({1, 0}), qv({0, 1})) == Rat(1));
  CHECK(pairing(u, qv({3, -7}), qv({0, 0})) == Rat(0));
  CHECK(pairing(u, qv({1, -3}), qv({1, -3})) == Rat(-6));
}

TEST_CASE("E8(-1) diagonal") {
  Lattice e8 = make_e8_minus();
  QVec e1 = qv({1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(pairing(e8, e1, e1) == Rat(-2));
  CHECK(e8.det() == Int(1));
}

TEST_CASE("standard lattice construction") {
  CHECK(make_u().gram() == std::vector<std::vector<Int>>{{0, 1}, {1, 0}});
  CHECK(rescale(make_u(), 2).gram() == std::vector<std::vector<Int>>{{0, 2}, {2, 0}});
  CHECK(make_u_scaled(2).gram() == rescale(make_u(), 2).gram());
  CHECK_THROWS_AS(rescale(make_u(), 0), std::invalid_argument);

  Lattice sum = direct_sum({make_e8_minus(), make_u()});
  CHECK(sum.rank() == 10);
  CHECK(sum.det() == Int(-1));

  CHECK(enriques_ns_lattice().rank() == 10);
  CHECK(k3_full_lattice().rank() == 22);
  CHECK(anti_invariant_default().rank() == 12);
}

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(Lattice({{0, 1}, {2, 0}}), std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS(Lattice({{1, 1}, {1, 1}}), std::invalid_argument);  // degenerate
  CHECK_THROWS_AS(pairing(make_u(), qv({1, 0, 0}), qv({0, 1})), std::invalid_argument);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(qv({1, 2})));
  CHECK_FALSE(is_primitive(qv({2, 4})));
  CHECK_FALSE(is_primitive(qv({0, 3})));
  CHECK_THROWS_AS(is_primitive(qv({0, 0})), std::invalid_argument);
}

TEST_CASE("norm enumeration in a box") {
  Lattice u = make_u();
  auto hits = enumerate_norm(u, Int(-6), 3);
  auto contains = [&](const QVec& v) {
    for (const auto& h : hits)
      if (h == v) return true;
    return false;
  };
  CHECK(contains(qv({1, -3})));
  CHECK(contains(qv({-3, 1})));
  CHECK(enumerate_norm(u, Int(-6), 1).empty());

  auto zeros = enumerate_norm(u, Int(0), 0);
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0] == qv({0, 0}));

  for (const auto& h : hits) CHECK(pairing(u, h, h) == Rat(-6));
  // Lexicographic order.
  for (size_t i = 0; i + 1 < hits.size(); ++i) CHECK(hits[i] < hits[i + 1]);
}

TEST_CASE("isometry check") {
  Lattice u = make_u();
  CHECK(is_isometry(u, mat_identity(2)));
  QMat swap{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(is_isometry(u, swap));
  QMat stretch{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK_FALSE(is_isometry(u, stretch));
  CHECK_THROWS_AS(is_isometry(u, QMat{{Rat(1)}}), std::invalid_argument);
}

TEST_CASE("pairing is symmetric and bilinear") {
  Lattice l = direct_sum({make_e8_minus(), make_u()});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    QVec x = random_vec(rng, l.rank());
    QVec y = random_vec(rng, l.rank());
    QVec z = random_vec(rng, l.rank());
    CHECK(pairing(l, x, y) == pairing(l, y, x));
    CHECK(pairing(l, vec_add(x, y), z) == pairing(l, x, z) + pairing(l, y, z));
  }
}

TEST_CASE("verified isometries preserve pairings") {
  Lattice uu = direct_sum({make_u(), make_u()});
  // Swap the two U summands.
  QMat m(4, QVec(4, Rat(0)));
  m[0][2] = m[1][3] = m[2][0] = m[3][1] = Rat(1);
  REQUIRE(is_isometry(uu, m));
  std::mt19937 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    QVec x = random_vec(rng, 4);
    QVec y = random_vec(rng, 4);
    CHECK(pairing(uu, mat_apply(m, x), mat_apply(m, y)) == pairing(uu, x, y));
  }
}
