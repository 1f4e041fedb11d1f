#include "enrq/invariants.hpp"

#include <stdexcept>

namespace enrq {

Int euler_fix(long n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  if (n % 2 != 0) throw std::invalid_argument("fixed-locus Euler characteristic requires even N");
  int half = static_cast<int>(n / 2);
  return goettsche(12, half)[half];
}

InvariantReport euler_vir(const TwistedInput& in) {
  Int big_n = twisted_vdim(in);
  if (!mpz_fits_slong_p(big_n.get_mpz_t()))
    throw std::invalid_argument("virtual dimension out of range");
  long n_long = big_n.get_si();
  bool defined = n_long >= 0;
  bool n_even = n_long % 2 == 0;

  Int route_goettsche(0), route_lefschetz(0);
  if (defined && n_even) {
    route_goettsche = 2 * euler_fix(n_long);
    route_lefschetz = 2 * hilb_fixed_euler(static_cast<int>(n_long));
  }
  if (route_goettsche != route_lefschetz)
    throw std::logic_error("Goettsche and Lefschetz routes disagree");

  // Parity bookkeeping through the pullback vector, when it is integral.
  bool vbar_parity_ok = false;
  bool dim_mod4_ok = false;
  Rat pullback_n = 2 * (in.ch2 + 1) + frac(in.lsq, 4);
  if (in.beauville_mode && is_integer(pullback_n)) {
    MukaiVector vbar = pullback_vector(in);
    Rat vbar_sq = mukai_pairing(vbar, vbar);
    vbar_parity_ok = is_integer(vbar_sq) && ((vbar_sq.get_num() % 4 + 4) % 4 == 2);
    if (vbar_sq >= -2) dim_mod4_ok = (moduli_dim_k3(vbar) % 4 == 0);
  }

  // v_A^2 = N - 1, so the depth bound -(v_A^2 + 5)/2 is -(N + 4)/2.
  Int depth;
  Int num = -(big_n + 4);
  mpz_fdiv_q_ui(depth.get_mpz_t(), num.get_mpz_t(), 2);

  return InvariantReport{big_n,
                         defined,
                         route_goettsche,
                         route_goettsche,
                         route_lefschetz,
                         depth,
                         n_even,
                         vbar_parity_ok,
                         dim_mod4_ok,
                         formal_c2(in).in_half_z_plus_quarter,
                         in};
}

}  // namespace enrq
