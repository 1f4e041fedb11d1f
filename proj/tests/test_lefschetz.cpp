#include <doctest.h>

#include <random>

#include "enrq/lefschetz.hpp"

using namespace enrq;

TEST_CASE("graded trace validation") {
  CHECK_THROWS_AS(GradedTrace({2}, {3}), std::invalid_argument);   // |trace| > dim
  CHECK_THROWS_AS(GradedTrace({2}, {1}), std::invalid_argument);   // parity
  CHECK_THROWS_AS(GradedTrace({-1}, {0}), std::invalid_argument);  // negative dim
  CHECK_THROWS_AS(GradedTrace({1, 2}, {1}), std::invalid_argument);
  CHECK_NOTHROW(GradedTrace({2}, {-2}));
}

TEST_CASE("Lefschetz numbers") {
  GradedTrace identity_k3({1, 0, 22, 0, 1}, {1, 0, 22, 0, 1});
  CHECK(lefschetz_number(identity_k3) == 24);

  GradedTrace enriques_inv({1, 0, 22, 0, 1}, {1, 0, -2, 0, 1});
  CHECK(lefschetz_number(enriques_inv) == 0);

  GradedTrace zero({2, 4, 2}, {0, 0, 0});
  CHECK(lefschetz_number(zero) == 0);
}

TEST_CASE("K3 covering involution trace") {
  GradedTrace g = k3_involution_trace();
  CHECK(g.dims == std::vector<long>{1, 0, 22, 0, 1});
  CHECK(g.traces == std::vector<long>{1, 0, -2, 0, 1});
  CHECK(lefschetz_number(g) == 0);
  CHECK(g.total_dim() == 24);
  auto [p, q] = g.even_multiplicities();
  CHECK(p == 12);
  CHECK(q == 12);
}

TEST_CASE("Fock trace series") {
  GradedTrace g = k3_involution_trace();
  IntSeries s = fock_trace_series(g, 8);
  CHECK(s[0] == 1);
  CHECK(s[1] == 0);
  CHECK(s[2] == 12);
  CHECK(s[3] == 0);
  CHECK(s[4] == 90);
  CHECK(s[5] == 0);
  CHECK(s[6] == 520);
  CHECK(s[7] == 0);

  // Identity data gives the plain Goettsche series for e = 24.
  GradedTrace identity_k3({1, 0, 22, 0, 1}, {1, 0, 22, 0, 1});
  CHECK(fock_trace_series(identity_k3, 10) == goettsche(24, 10));

  GradedTrace trivial({0}, {0});
  IntSeries c = fock_trace_series(trivial, 5);
  CHECK(c == IntSeries::one(5));

  GradedTrace odd({1, 2, 1}, {1, 0, 1});
  CHECK_THROWS_AS(fock_trace_series(odd, 3), std::invalid_argument);
}

TEST_CASE("fixed-locus Euler numbers of Hilbert schemes") {
  CHECK(hilb_fixed_euler(0) == 1);
  CHECK(hilb_fixed_euler(2) == 12);
  CHECK(hilb_fixed_euler(3) == 0);
  CHECK(hilb_fixed_euler(4) == 90);
  CHECK_THROWS_AS(hilb_fixed_euler(-1), std::invalid_argument);
}

TEST_CASE("odd coefficients vanish and even ones match Goettsche 12") {
  IntSeries s = fock_trace_series(k3_involution_trace(), 40);
  IntSeries base = goettsche(12, 20);
  for (int k = 0; k <= 20; ++k) {
    CHECK(s[2 * k] == base[k]);
    if (2 * k + 1 <= 40) CHECK(s[2 * k + 1] == 0);
  }
}

TEST_CASE("identity involution recovers the Euler characteristic") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> dim_dist(0, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> dims, traces;
    for (int i = 0; i < 5; ++i) {
      long d = dim_dist(rng);
      dims.push_back(d);
      traces.push_back(d);
    }
    GradedTrace g(dims, traces);
    long chi = 0;
    for (size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0) ? dims[i] : -dims[i];
    CHECK(lefschetz_number(g) == chi);
  }
}
