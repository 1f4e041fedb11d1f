#include <doctest.h>

#include <random>

#include "enrq/gradedring.hpp"

using namespace enrq;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

CohClass random_class(std::mt19937& rng, const ModelPtr& m) {
  std::uniform_int_distribution<int> dist(-4, 4);
  QVec d;
  for (int i = 0; i < m->ns.rank(); ++i) d.emplace_back(dist(rng));
  return CohClass(m, Rat(dist(rng)), std::move(d), Rat(dist(rng)));
}

}  // namespace

TEST_CASE("surface model constants") {
  ModelPtr k3 = make_k3(make_u());
  CHECK(k3->euler == 24);
  CHECK(k3->chiO == 2);
  ModelPtr y = make_enriques(enriques_ns_lattice());
  CHECK(y->euler == 12);
  CHECK(y->chiO == 1);
  CHECK(y->covering_factor == 2);
}

TEST_CASE("truncated ring product") {
  ModelPtr k3 = make_k3(make_u());
  CohClass unit = coh_scalar(k3, Rat(1));
  CohClass x(k3, Rat(3), qv({1, -2}), Rat(5));
  CHECK(mul(unit, x) == x);

  CohClass d = coh_divisor(k3, qv({1, -3}));
  CohClass dd = mul(d, d);
  CHECK(dd.r == Rat(0));
  CHECK(vec_is_zero(dd.d));
  CHECK(dd.s == Rat(-6));

  CHECK(mul(CohClass(k3, Rat(2), qv({0, 0}), Rat(1)), coh_scalar(k3, Rat(3))) ==
        CohClass(k3, Rat(6), qv({0, 0}), Rat(3)));

  ModelPtr other = make_k3(make_e8_minus());
  CHECK_THROWS_AS(mul(x, coh_scalar(other, Rat(1))), std::invalid_argument);
}

TEST_CASE("exponential of a divisor class") {
  ModelPtr k3 = make_k3(make_u());
  CHECK(coh_exp(coh_scalar(k3, Rat(0))) == coh_scalar(k3, Rat(1)));

  QVec l = qv({1, -3});  // L^2 = -6
  CohClass e = coh_exp(coh_divisor(k3, l));
  CHECK(e.r == Rat(1));
  CHECK(e.d == l);
  CHECK(e.s == Rat(-3));

  CohClass half = coh_exp(coh_divisor(k3, vec_scale(Rat(1, 2), l)));
  CHECK(half.s == Rat(-3, 4));

  CHECK_THROWS_AS(coh_exp(coh_scalar(k3, Rat(1))), std::invalid_argument);
}

TEST_CASE("dual is an involution") {
  ModelPtr k3 = make_k3(make_u());
  CohClass x(k3, Rat(2), qv({1, 1}), Rat(5));
  CHECK(dual(x).d == vec_neg(x.d));
  CHECK(dual(x).r == x.r);
  CHECK(dual(x).s == x.s);
  CHECK(dual(dual(x)) == x);
  CHECK(dual(CohClass(k3, Rat(1), qv({0, 0}), Rat(1))) == CohClass(k3, Rat(1), qv({0, 0}), Rat(1)));
}

TEST_CASE("square root") {
  ModelPtr k3 = make_k3(make_u());
  CHECK(coh_sqrt(coh_scalar(k3, Rat(4))) == coh_scalar(k3, Rat(2)));

  // (1, 2D, 2s) -> (1, D, s - D^2/2) with D = (1,2), s = 3.
  CohClass a(k3, Rat(1), qv({2, 4}), Rat(6));
  CohClass b = coh_sqrt(a);
  Rat dsq = pairing(k3->ns, qv({1, 2}), qv({1, 2}));
  CHECK(b == CohClass(k3, Rat(1), qv({1, 2}), Rat(3) - dsq / 2));

  CohClass end_alg(k3, Rat(4), qv({0, 0}), Rat(-6));  // (4, 0, L^2)
  CHECK(coh_sqrt(end_alg) == CohClass(k3, Rat(2), qv({0, 0}), frac(-6, 4)));

  CHECK_THROWS_AS(coh_sqrt(coh_scalar(k3, Rat(3))), std::invalid_argument);
  CHECK_THROWS_AS(coh_sqrt(coh_scalar(k3, Rat(-4))), std::invalid_argument);
}

TEST_CASE("integration reads the point part") {
  ModelPtr k3 = make_k3(make_u());
  CHECK(integrate(CohClass(k3, Rat(5), qv({2, 3}), Rat(7))) == Rat(7));
  CohClass x(k3, Rat(1), qv({0, 0}), Rat(1));
  CHECK(integrate(mul(x, dual(x))) == Rat(2));
  CHECK(integrate(coh_exp(coh_divisor(k3, qv({1, -3})))) == Rat(-3));
}

TEST_CASE("Todd class values") {
  ModelPtr k3 = make_k3(make_u());
  CHECK(todd(k3).r == Rat(1));
  CHECK(todd(k3).s == Rat(2));
  CHECK(sqrt_todd(k3).s == Rat(1));

  ModelPtr y = make_enriques(enriques_ns_lattice());
  CHECK(todd(y).s == Rat(1));
  CHECK(sqrt_todd(y).s == Rat(1, 2));

  CHECK(mul(sqrt_todd(k3), sqrt_todd(k3)) == todd(k3));
  CHECK(mul(sqrt_todd(y), sqrt_todd(y)) == todd(y));
}

TEST_CASE("ring laws on random classes") {
  ModelPtr m = make_k3(direct_sum({make_u(), make_e8_minus()}));
  std::mt19937 rng(21);
  CohClass unit = coh_scalar(m, Rat(1));
  for (int trial = 0; trial < 40; ++trial) {
    CohClass a = random_class(rng, m);
    CohClass b = random_class(rng, m);
    CohClass c = random_class(rng, m);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(unit, a) == a);
    CHECK(dual(mul(a, b)) == mul(dual(a), dual(b)));
  }
}

TEST_CASE("exp turns sums into products") {
  ModelPtr m = make_k3(make_u());
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    CohClass a(m, Rat(0), qv({dist(rng), dist(rng)}), Rat(dist(rng)));
    CohClass b(m, Rat(0), qv({dist(rng), dist(rng)}), Rat(dist(rng)));
    CHECK(coh_exp(add(a, b)) == mul(coh_exp(a), coh_exp(b)));
  }
}

TEST_CASE("sqrt squares back") {
  ModelPtr m = make_k3(make_u());
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> dist(-6, 6);
  std::uniform_int_distribution<int> root(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    int rr = root(rng);
    CohClass a(m, Rat(rr * rr), qv({dist(rng), dist(rng)}), frac(dist(rng), 1 + root(rng)));
    CohClass b = coh_sqrt(a);
    CHECK(mul(b, b) == a);
  }
}

TEST_CASE("inverse really inverts") {
  ModelPtr m = make_k3(make_u());
  std::mt19937 rng(24);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    int r = dist(rng);
    if (r == 0) continue;
    CohClass a(m, Rat(r), qv({dist(rng), dist(rng)}), Rat(dist(rng)));
    CHECK(mul(a, coh_inverse(a)) == coh_scalar(m, Rat(1)));
  }
}
