#include "enrq/twisted.hpp"

#include <stdexcept>
#include <utility>

namespace enrq {

namespace {

long positive_mod(const Int& value, long m) {
  Int r = value % m;
  if (r < 0) r += m;
  return r.get_si();
}

}  // namespace

TwistedInput::TwistedInput(ModelPtr enriques_model, QVec c1_class, Rat ch2_value, long l_square,
                           bool beauville)
    : enriques(std::move(enriques_model)),
      c1(std::move(c1_class)),
      ch2(std::move(ch2_value)),
      lsq(l_square),
      beauville_mode(beauville) {
  if (!enriques || enriques->kind != SurfaceKind::Enriques)
    throw std::invalid_argument("twisted input requires an Enriques model");
  if (c1.size() != static_cast<size_t>(enriques->ns.rank()))
    throw std::invalid_argument("c1 does not match the Enriques lattice rank");
  if (!vec_is_integral(c1)) throw std::invalid_argument("c1 must be integral");
  if (beauville_mode) {
    if (positive_mod(Int(lsq), 4) != 2)
      throw std::invalid_argument("Beauville mode requires L^2 == 2 mod 4");
    if (lsq > -6) throw std::invalid_argument("Beauville mode requires L^2 <= -6");
  }
}

TwistedInput TwistedInput::from_c1sq(long c1sq, Rat ch2_value, long l_square) {
  if (c1sq % 2 != 0) throw std::invalid_argument("c1^2 is even on the Enriques lattice");
  ModelPtr y = make_enriques(enriques_ns_lattice());
  QVec c1 = zero_vec(y->ns.rank());
  if (c1sq != 0) {
    // In the U summand, (1, k) has self-intersection 2k.
    c1[0] = Rat(1);
    c1[1] = Rat(c1sq / 2);
  }
  return TwistedInput(std::move(y), std::move(c1), std::move(ch2_value), l_square);
}

Rat TwistedInput::c1_squared() const { return pairing(enriques->ns, c1, c1); }

ModelPtr TwistedInput::pullback_model() const {
  Lattice pulled = rescale(enriques->ns, 2);
  Lattice l_block({{Int(lsq)}}, "<L>");
  return make_k3(direct_sum({pulled, l_block}));
}

CohClass TwistedInput::default_azumaya_ch() const {
  if (azumaya_ch) return *azumaya_ch;
  if (!beauville_mode)
    throw std::invalid_argument("off the Beauville locus an Azumaya character must be supplied");
  ModelPtr x = pullback_model();
  return CohClass(x, Rat(4), zero_vec(x->ns.rank()), Rat(lsq));
}

CohClass twisted_chern(const CohClass& ch_E, const CohClass& ch_A) {
  return mul(ch_E, coh_inverse(coh_sqrt(ch_A)));
}

Int twisted_vdim(const TwistedInput& in) {
  CohClass ch(in.enriques, Rat(2), in.c1, in.ch2);
  MukaiVector v_a = mukai_vector_of_sheaf(ch);
  Rat n = mukai_pairing(v_a, v_a) + 1;
  if (!is_integer(n)) throw std::invalid_argument("non-integral virtual dimension");
  return n.get_num();
}

MukaiVector pullback_vector(const TwistedInput& in) {
  if (!in.beauville_mode) throw std::invalid_argument("pullback vector requires Beauville mode");
  Rat n = 2 * (in.ch2 + 1) + frac(in.lsq, 4);
  if (!is_integer(n))
    throw std::invalid_argument("parity violation: pullback vector is not integral");
  ModelPtr x = in.pullback_model();
  QVec d = in.c1;           // pullback coordinates, pairings doubled by the model
  d.push_back(Rat(1));      // + L
  return MukaiVector(CohClass(x, Rat(2), std::move(d), std::move(n)));
}

FormalC2 formal_c2(const TwistedInput& in) {
  Rat value = in.c1_squared() / 2 - in.ch2;
  // value in 1/2 Z + 1/4 means 4 * value is an odd integer.
  Rat scaled = 4 * value;
  bool quarter = is_integer(scaled) && positive_mod(scaled.get_num(), 2) == 1;
  return FormalC2{std::move(value), quarter};
}

BeauvilleWitness check_beauville_class(const QVec& L, const Lattice& anti,
                                       const std::optional<QMat>& iota) {
  if (L.size() != static_cast<size_t>(anti.rank()))
    throw std::invalid_argument("class does not match the lattice rank");
  if (!vec_is_integral(L)) throw std::invalid_argument("Beauville class must be integral");

  Rat norm_q = pairing(anti, L, L);
  Int norm = norm_q.get_num();

  std::optional<Int> n;
  if (positive_mod(norm - 2, 4) == 0) n = (norm - 2) / 4;

  bool anti_inv = true;
  if (iota) {
    if (!is_isometry(anti, *iota)) throw std::invalid_argument("iota is not an isometry");
    anti_inv = mat_apply(*iota, L) == vec_neg(L);
  }
  return BeauvilleWitness{std::move(norm), std::move(n), anti_inv};
}

}  // namespace enrq
