#pragma once

#include <optional>

#include "enrq/mukai.hpp"

namespace enrq {

// Input data for a rank-2 twisted character (2, c1, ch2) on an Enriques
// surface, together with the anti-invariant class L on the K3 cover that
// witnesses the Beauville condition. Only L^2 enters any formula, so L is
// carried as its self-intersection lsq. The Azumaya character defaults to
// the End(O + L) model (4, 0, lsq), which is only valid in Beauville mode;
// off the locus a caller must supply azumaya_ch explicitly.
struct TwistedInput {
  ModelPtr enriques;
  QVec c1;
  Rat ch2;
  long lsq = -6;
  bool beauville_mode = true;
  std::optional<CohClass> azumaya_ch;

  TwistedInput(ModelPtr enriques_model, QVec c1_class, Rat ch2_value, long l_square = -6,
               bool beauville = true);

  // Builds c1 inside the U summand of the default Enriques lattice from a
  // prescribed even self-intersection.
  static TwistedInput from_c1sq(long c1sq, Rat ch2_value, long l_square = -6);

  Rat c1_squared() const;
  // The K3 model carrying pullback classes: the Enriques lattice with
  // pairings doubled, plus a rank-one block for L.
  ModelPtr pullback_model() const;
  CohClass default_azumaya_ch() const;  // (4, 0, lsq) on the pullback model
};

// Ch_A(E) = Ch(E) / sqrt(Ch(A)). Requires the rank of ch_A to be a positive
// rational square.
CohClass twisted_chern(const CohClass& ch_E, const CohClass& ch_A);

// Virtual dimension N = (v_A, v_A) + 1 with v_A = (2, c1, ch2) * sqrt(td_Y);
// evaluates to c1^2 - 4 ch2 - 3. Throws when the result is not an integer.
// Negative values are returned as-is (empty-moduli signal).
Int twisted_vdim(const TwistedInput& in);

// The pullback Mukai vector vbar = (2, Dbar + L, n) on the K3 cover, with
// Dbar^2 = 2 c1^2, Dbar.L = 0 and n = 2(ch2 + 1) + lsq/4, so that
// vbar^2 = 2 v_A^2. Requires Beauville mode; throws on parity violation
// (non-integral n).
MukaiVector pullback_vector(const TwistedInput& in);

struct FormalC2 {
  Rat value;                  // c1^2/2 - ch2
  bool in_half_z_plus_quarter;  // whether value lies in 1/2 Z + 1/4
};
FormalC2 formal_c2(const TwistedInput& in);

struct BeauvilleWitness {
  Int norm;               // L^2
  std::optional<Int> n;   // (norm - 2)/4 when norm == 2 mod 4
  bool anti_invariant;    // iota(L) == -L
};

// Checks the Beauville condition c1(L)^2 = 4n + 2, iota*L = L^{-1} for an
// integral class L of the given lattice. Passing no isometry selects
// sign-flip mode, where anti-invariance holds by construction.
BeauvilleWitness check_beauville_class(const QVec& L, const Lattice& anti,
                                       const std::optional<QMat>& iota = std::nullopt);

}  // namespace enrq
