// Theory registry: the four families of modular data this project works
// with, their canonical primary enumerations, and validated (S, T) pairs.
//
//   CircleU1(r)   — rational free boson with 2r primaries, c = 1
//   OrbifoldC1(r) — its Z₂ orbifold, r+7 primaries, c = 1
//   AffineD2(r)   — SO(2r) level 2, r+7 primaries, c = 2r−1
//   AffineB2(s)   — SO(2s+1) level 2, s+4 primaries, c = 2s
//
// Canonical orders (frozen; S matrices are byte-comparable across runs):
//   CircleU1:   j = 0..2r−1
//   OrbifoldC1: [0], [V], [S], [C], σ, σ~, σ', σ~', [ℓ] at index 7+ℓ
//   AffineD2:   O, VV, SS, CC, S, C, VC, VS, A(ℓ) at index 7+ℓ
//   AffineB2:   O, VV, A(1)..A(s), Sp, SpV
// The orbifold and D orders are aligned index-by-index; that alignment IS
// the fusion-ring dictionary between the two families, so an invariant
// matrix written for one applies verbatim to the other.
//
// Every construction validates the full invariant set (S = Sᵀ, SS† = 1,
// S² = C a permutation, (ST)³ = S², strictly positive vacuum row, integral
// non-negative Verlinde coefficients) and throws rather than returning
// questionable data.  Results are cached per TheoryId.

#ifndef MIPF_MODULAR_DATA_HPP
#define MIPF_MODULAR_DATA_HPP

#include <memory>
#include <string>
#include <vector>

#include "mipf/matrix.hpp"
#include "mipf/rational.hpp"

namespace mipf {

enum class Family { CircleU1, OrbifoldC1, AffineD2, AffineB2 };

struct TheoryId {
  Family family;
  int rank;  // r for the first three, s for AffineB2
  friend bool operator==(const TheoryId& a, const TheoryId& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// "u1:6", "orb:9", "D2:9", "B2:4"
std::string theory_name(const TheoryId& id);
TheoryId parse_theory(const std::string& spec);

struct ModularData {
  TheoryId theory;
  int n = 0;
  std::vector<std::string> labels;
  Rat c;
  std::vector<Rat> h;       // exact conformal weights
  CMat S;
  std::vector<cplx> T;      // diagonal, T_i = e^{2πi(h_i − c/24)}
  std::vector<int> conj;    // permutation with S² = C

  int index_of(const std::string& label) const;  // throws if absent
};

// Validated + cached construction.
std::shared_ptr<const ModularData> modular_data(const TheoryId& id);

// Residuals of the defining relations; used by construction-time validation
// and exposed for tests/CLI.
struct DataCheck {
  double sym_residual = 0.0;        // ‖S − Sᵀ‖
  double unitary_residual = 0.0;    // ‖SS† − 1‖
  double s2_perm_residual = 0.0;    // ‖S² − C‖ for the nearest permutation C
  bool s2_is_permutation = false;
  double st_residual = 0.0;         // ‖(ST)³ − S²‖
  double t_phase_residual = 0.0;    // ‖T − e^{2πi(h−c/24)}‖
  double verlinde_residual = 0.0;   // worst distance to an integer ≥ 0
  bool vacuum_row_positive = false;
  bool pass(double eps) const;
  std::string describe() const;     // names the failed relation(s)
};
DataCheck check_modular_data(const ModularData& md, double eps);

// Orbifold index helpers ([ℓ] ↔ 7+ℓ; named fields 0..7 as listed above).
namespace orb {
enum : int { U = 0, V = 1, S = 2, C = 3, Sg = 4, SgT = 5, SgP = 6, SgPT = 7 };
inline int ell(int l) { return 7 + l; }
}  // namespace orb

// Family constructors (internal; use modular_data() which validates+caches).
ModularData build_circle(int r);
ModularData build_orbifold(int r);
ModularData build_affine_b(int s);
ModularData build_affine_d(int r);

// Pattern route to S(AffineD2(r)): complex-conjugated orbifold entries times
// an eighth root of unity fixed by the conjugacy-class pair and r mod 8.
// Works for every r ≥ 2; build_affine_d takes it for r > 8, where the Weyl
// sum is unaffordable, and the low ranks double as the cross-check of the
// phase table against the sum.
CMat affine_d_pattern_S(int r);

}  // namespace mipf

#endif  // MIPF_MODULAR_DATA_HPP
