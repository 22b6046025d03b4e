// Weight arithmetic for the affine series B_r and D_r at level 2, plus a
// brute-force Kac–Peterson S-matrix oracle for small rank.
//
// Conventions: ε-basis (orthonormal) with long roots normalized to
// (α,α) = 2, so the inner product is the plain dot product.  Weyl vectors:
// ρ(D_r) = Σᵢ (r−i)·εᵢ, ρ(B_r) = Σᵢ (r−i+½)·εᵢ.  Level-2 highest weights are
// stored as rational ε-coordinates; all Casimir arithmetic is exact.
//
// The level-2 primaries are labelled
//   D_r : O, VV, SS, CC, S, C, VC, VS, and the antisymmetric-tensor ladder
//         A(ℓ), ℓ = 1..r−1, whose endpoints carry their traditional names
//         (A(1) is V, the vector; A(r−1) is SC).
//   B_s : O, VV, A(ℓ) ℓ = 1..s, Sp, SpV  (with L := 2s+1).

#ifndef MIPF_LIE_HPP
#define MIPF_LIE_HPP

#include <string>
#include <vector>

#include "mipf/matrix.hpp"
#include "mipf/rational.hpp"

namespace mipf {

enum class Series { B, D };

// Identifies a level-2 primary by position in the canonical enumeration.
// D_r (n = r+7): O=0, VV=1, SS=2, CC=3, S=4, C=5, VC=6, VS=7, A(ℓ)=7+ℓ.
// B_s (n = s+4): O=0, VV=1, A(ℓ)=1+ℓ, Sp=s+2, SpV=s+3.
struct Level2Rep {
  Series series;
  int rank;
  int index;
};

int d_field_count(int r);  // r+7
int b_field_count(int s);  // s+4

// Index helpers for the D ladder: A(ℓ) ↔ index 7+ℓ.
inline int d_index_A(int ell) { return 7 + ell; }
inline int b_index_A(int ell) { return 1 + ell; }

// Canonical label strings ("O", "VV", "V", "A(3)", "SC", "Sp", ...).
std::string level2_label(Series s, int rank, int index);
// Inverse of level2_label; also accepts the aliases A(1)/A(r−1) for D.
int level2_index(Series s, int rank, const std::string& label);

// Highest weight in ε-coordinates (length = rank, exact rationals).
std::vector<Rat> level2_weight(Series s, int rank, int index);

// h = (λ, λ+2ρ)/(2(k+g∨)) at level k=2, evaluated exactly.
Rat conformal_weight(Series s, int rank, int index);
// Same quantity from the closed forms (h(V)=(2r−1)/4r, ... ); used as a
// cross-check of the ε-basis arithmetic.
Rat conformal_weight_closed_form(Series s, int rank, int index);

// c = 2·dim(g)/(2+g∨); equals N−1 for SO(N) at level 2.
Rat central_charge(Series s, int rank);

// Level-1 conformal weights used by the coset dictionaries:
// D_r: 0, v=1/2, s=c=r/8.  B_s: 0, v=1/2, s=(2s+1)/16.
Rat level1_weight_d(int r, const std::string& label);
Rat level1_weight_b(int s, const std::string& label);

// Brute-force Kac–Peterson matrix
//   S_{λμ} ∝ Σ_{w∈W} det(w)·exp(−2πi(w(λ+ρ), μ+ρ)/(k+g∨)),
// normalized so the vacuum row is positive and S is unitary, ordered to
// match the Level2Rep enumeration.  The sign-flip part of the Weyl group is
// folded analytically (each coordinate contributes 2cos or −2i·sin), the r!
// permutations are enumerated explicitly.  rank ≤ 8 enforced.
CMat kac_peterson_S(Series s, int rank);

}  // namespace mipf

#endif  // MIPF_LIE_HPP
