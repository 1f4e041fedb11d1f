#pragma once

#include "enrq/lefschetz.hpp"
#include "enrq/twisted.hpp"

namespace enrq {

// Result of the main evaluation with both computation routes and the parity
// bookkeeping. The two routes must agree; their equality is enforced before
// the report is returned.
struct InvariantReport {
  Int N;
  bool defined;  // false when N < 0 (empty/undefined moduli signal)
  Int evir;
  Int route_goettsche;
  Int route_lefschetz;
  // Floor of -(v_A^2 + 5)/2: inputs are only covered by the smooth-locus
  // argument when the surface lies in B_M with M strictly below this value.
  Int beauville_depth_required;
  bool n_even;
  bool vbar_parity_ok;   // vbar^2 == 2 mod 4
  bool dim_mod4_ok;      // K3 moduli dimension of vbar divisible by 4
  bool c2_quarter_form;  // formal c2 lies in 1/2 Z + 1/4
  TwistedInput inputs;
};

// e^vir of the moduli of rank-2 twisted sheaves: 0 for odd N, twice the
// Euler characteristic of Y^[N/2] for even N >= 0, computed independently
// through the Goettsche series and through the Lefschetz/Fock trace and
// cross-checked. Throws std::logic_error if the routes ever disagree.
InvariantReport euler_vir(const TwistedInput& in);

// Euler characteristic of the fixed locus: coefficient N/2 of the
// Goettsche series for e = 12. Requires even N >= 0.
Int euler_fix(long n);

}  // namespace enrq
