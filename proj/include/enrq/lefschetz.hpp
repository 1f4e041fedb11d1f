#pragma once

#include <vector>

#include "enrq/series.hpp"

namespace enrq {

// Per-degree data of an involution acting on cohomology: dimension of H^i
// and the trace of the pullback on it. Eigenvalues are +-1, forcing
// |trace_i| <= dim_i and trace_i == dim_i mod 2; both checked at
// construction.
struct GradedTrace {
  std::vector<long> dims;
  std::vector<long> traces;

  GradedTrace(std::vector<long> dims_in, std::vector<long> traces_in);

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  long total_dim() const;
  // Eigenvalue multiplicities (+1, -1) over even degrees.
  std::pair<long, long> even_multiplicities() const;
};

// sum (-1)^i trace_i: the Euler characteristic of the fixed locus.
long lefschetz_number(const GradedTrace& g);

// The fixed-point-free covering involution of an Enriques surface acting on
// the K3 cover: dims (1,0,22,0,1); the H^2 trace is solved from the
// Lefschetz number being zero, giving traces (1,0,-2,0,1).
GradedTrace k3_involution_trace();

// Generating series of Lefschetz numbers of the involution induced on all
// Hilbert schemes of points: prod_m (1-t^m)^{-p} (1+t^m)^{-q} with (p, q)
// the even-degree eigenvalue multiplicities. Requires vanishing odd
// cohomology.
IntSeries fock_trace_series(const GradedTrace& g, int order);

// Coefficient of t^n in fock_trace_series(k3_involution_trace()):
// e(Y^[n/2]) for even n, 0 for odd n.
Int hilb_fixed_euler(int n);

}  // namespace enrq
