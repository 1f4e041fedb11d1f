#include <doctest.h>

#include <random>

#include "enrq/mukai.hpp"

using namespace enrq;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("Mukai pairing examples") {
  ModelPtr k3 = make_k3(make_u());
  MukaiVector point(coh_point(k3, Rat(1)));
  MukaiVector unit(coh_scalar(k3, Rat(1)));
  CHECK(mukai_pairing(point, unit) == Rat(-1));

  MukaiVector x(CohClass(k3, Rat(1), qv({0, 0}), Rat(1)));
  CHECK(mukai_pairing(x, x) == Rat(-2));
}

TEST_CASE("rank-two pullback vector pairing") {
  // v = (2, Dbar + L, n) with Dbar.L = 0 gives Dbar^2 + L^2 - 4n.
  Lattice ns = direct_sum({rescale(make_u(), 2), Lattice({{Int(-6)}})});
  ModelPtr k3 = make_k3(ns);
  QVec d = qv({1, 1, 1});  // Dbar in the doubled block, plus L
  Rat dbar_sq = pairing(ns, qv({1, 1, 0}), qv({1, 1, 0}));
  CHECK(dbar_sq == Rat(4));
  for (long n : {-2L, 0L, 3L}) {
    MukaiVector v(CohClass(k3, Rat(2), d, Rat(n)));
    CHECK(mukai_pairing(v, v) == dbar_sq + Rat(-6) - 4 * Rat(n));
  }
}

TEST_CASE("effectiveness") {
  ModelPtr k3 = make_k3(make_u());
  MukaiVector ideal(CohClass(k3, Rat(1), qv({0, 0}), Rat(1)));
  CHECK(is_effective(ideal, false));

  CHECK_FALSE(is_effective(MukaiVector(coh_point(k3, Rat(-1))), false));
  CHECK(is_effective(MukaiVector(coh_point(k3, Rat(3))), false));

  // Rank zero with nonzero divisor: decided by the caller's flag.
  MukaiVector divisor(coh_divisor(k3, qv({1, 1})));
  CHECK(is_effective(divisor, true));
  CHECK_FALSE(is_effective(divisor, false));

  CHECK_FALSE(is_effective(MukaiVector(coh_scalar(k3, Rat(0))), true));
  CHECK_FALSE(is_effective(MukaiVector(CohClass(k3, Rat(1), qv({1, -9}), Rat(9))), false));

  CHECK_THROWS_AS(is_effective(MukaiVector(coh_scalar(k3, frac(1, 2))), false),
                  std::invalid_argument);
}

TEST_CASE("K3 moduli dimension") {
  ModelPtr k3 = make_k3(make_u());
  for (long n : {0L, 1L, 2L, 5L}) {
    MukaiVector ideal(CohClass(k3, Rat(1), qv({0, 0}), Rat(1 - n)));
    CHECK(moduli_dim_k3(ideal) == Int(2 * n));
  }

  Lattice ns = direct_sum({rescale(make_u(), 2), Lattice({{Int(-6)}})});
  ModelPtr cover = make_k3(ns);
  MukaiVector vbar(CohClass(cover, Rat(2), qv({0, 0, 1}), Rat(-2)));
  CHECK(mukai_pairing(vbar, vbar) == Rat(2));
  CHECK(moduli_dim_k3(vbar) == Int(4));

  MukaiVector below(CohClass(k3, Rat(1), qv({0, 0}), Rat(2)));
  CHECK_THROWS_AS(moduli_dim_k3(below), std::invalid_argument);

  ModelPtr enr = make_enriques(enriques_ns_lattice());
  MukaiVector wrong_model(coh_scalar(enr, Rat(1)));
  CHECK_THROWS_AS(moduli_dim_k3(wrong_model), std::invalid_argument);
}

TEST_CASE("pairing symmetry, bilinearity, evenness") {
  ModelPtr m = make_k3(direct_sum({make_e8_minus(), make_u()}));
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dist(-4, 4);
  auto random_vector = [&] {
    QVec d;
    for (int i = 0; i < m->ns.rank(); ++i) d.emplace_back(dist(rng));
    return MukaiVector(CohClass(m, Rat(dist(rng)), std::move(d), Rat(dist(rng))));
  };
  for (int trial = 0; trial < 40; ++trial) {
    MukaiVector x = random_vector();
    MukaiVector y = random_vector();
    MukaiVector z = random_vector();
    CHECK(mukai_pairing(x, y) == mukai_pairing(y, x));
    MukaiVector sum(add(x.cls, y.cls));
    CHECK(mukai_pairing(sum, z) == mukai_pairing(x, z) + mukai_pairing(y, z));
    // Even ns lattice: (v, v) = d^2 - 2 r s is even for integral v.
    Rat sq = mukai_pairing(x, x);
    REQUIRE(is_integer(sq));
    CHECK(mpz_even_p(sq.get_num().get_mpz_t()));
  }
}

TEST_CASE("pullback moduli dimension divisible by four") {
  // (2, Dbar + L, n) with Dbar in the doubled block and L^2 = 2 mod 4:
  // dim = (v, v) + 2 is divisible by 4 whenever it is defined.
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::uniform_int_distribution<int> lsq_pick(0, 2);
  const long lsqs[3] = {-6, -10, -14};
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    long lsq = lsqs[lsq_pick(rng)];
    Lattice ns = direct_sum({rescale(enriques_ns_lattice(), 2), Lattice({{Int(lsq)}})});
    ModelPtr cover = make_k3(ns);
    QVec d;
    for (int i = 0; i < 10; ++i) d.emplace_back(dist(rng));
    d.emplace_back(1);  // + L
    MukaiVector v(CohClass(cover, Rat(2), std::move(d), Rat(dist(rng))));
    Rat sq = mukai_pairing(v, v);
    if (sq < -2) continue;
    CHECK(moduli_dim_k3(v) % 4 == 0);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Mukai vector of a sheaf") {
  ModelPtr k3 = make_k3(make_u());
  // Structure sheaf: ch = (1, 0, 0) gives v = (1, 0, 1).
  MukaiVector v = mukai_vector_of_sheaf(coh_scalar(k3, Rat(1)));
  CHECK(v.cls == CohClass(k3, Rat(1), qv({0, 0}), Rat(1)));

  ModelPtr y = make_enriques(enriques_ns_lattice());
  MukaiVector w = mukai_vector_of_sheaf(coh_scalar(y, Rat(2)));
  CHECK(w.cls.s == Rat(1));
}
