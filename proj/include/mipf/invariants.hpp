// Modular invariant partition functions: representation, verification,
// the family builders, simple-current invariants, and exhaustive
// automorphism search.

#ifndef MIPF_INVARIANTS_HPP
#define MIPF_INVARIANTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "mipf/fusion.hpp"
#include "mipf/modular_data.hpp"

namespace mipf {

// A modular invariant: non-negative integer matrix M with M₀₀ = 1 that
// commutes with S and T.  `builder` and `params` record how it was made so
// exported files are self-describing and reproducible.
struct Mipf {
  TheoryId theory;
  std::vector<std::vector<long long>> M;
  std::string builder;  // diag | conj | sc | dinv | scinv | bseries | search
  std::vector<std::pair<std::string, long long>> params;

  int n() const { return (int)M.size(); }
  long long at(int a, int b) const { return M[a][b]; }
};

struct InvarianceReport {
  double s_residual = 0.0;  // ‖SM − MS‖
  double t_residual = 0.0;  // ‖TM − MT‖
  bool vacuum_ok = false;   // M₀₀ = 1
  bool nonneg_ok = false;   // all entries ≥ 0
  bool pass(double eps) const {
    return s_residual <= eps && t_residual <= eps && vacuum_ok && nonneg_ok;
  }
  std::string describe() const;
};

InvarianceReport verify_invariant(const ModularData& md, const Mipf& m, double eps);

Mipf diagonal_invariant(const ModularData& md);
Mipf charge_conjugation_invariant(const ModularData& md);

// Invariant generated by the cyclic group of a simple current J of order N:
//   M_{ab} = #{ n mod N : b = Jⁿa and Q_J(a) + n·x ≡ 0 mod 1 },
// with x = h(J)·(N−1) mod 1.  Every pair the charge condition admits is
// pre-checked for h(Jⁿa) ≡ h(a) mod 1 — a violation means the current has
// no invariant of this form (half-integer spin obstruction) and raises
// ErrKind::Existence.  The result is verified before being returned.
Mipf simple_current_invariant(const ModularData& md, const FusionRing& ring, int J);

// Block invariant on AffineD2(r̃M²) or OrbifoldC1(r̃M²), M odd ≥ 3 (the two
// enumerations are index-aligned, so the same matrix serves both.)  Blocks:
//   {0}    ∪ {A(2m·r̃M), m = 1..(M−1)/2}
//   {VV}   ∪ the same ladder set
//   {SS}   ∪ {A((2m−1)·r̃M), m = 1..(M−1)/2}
//   {CC}   ∪ the same ladder set
//   one singlet block for each of S, C, VC, VS
//   for l = 1..r̃−1:  { A(fold(lM + 2m·r̃M)), m = 0..M−1 },  fold(e) = r−|r−e|
// Total r̃+7 blocks, every multiplicity 1.
Mipf build_dinv(Family fam, int rtilde, int M);

// Simple-current invariant of [S]/(SS) in explicit block form, 4 | r:
//   |χ₀+χ_SS|² + |χ_VV+χ_CC|² + 2|χ_S|² + 2|χ_VC|² + 2|χ_{A(r/2)}|²
//   + Σ_{ℓ even, 2 ≤ ℓ ≤ r/2−2} |χ_{A(ℓ)}+χ_{A(r−ℓ)}|²
// on AffineD2(r) or OrbifoldC1(r).  Field count after splitting the
// multiplicity-2 blocks: 2 + 6 + (r/4 − 1) = r/4 + 7.
Mipf build_scinv(Family fam, int r);

// Block invariant on AffineB2 with L = L̃M², both odd, M ≥ 3:
//   {O}  ∪ {A(m·L̃M), m = 1..(M−1)/2}
//   {VV} ∪ the same ladder set
//   {Sp}, {SpV} singlets
//   for l = 1..(L̃−1)/2:  { A(min(e, L−e)), e = lM + m·L̃M, m = 0..M−1 }
// Total (L̃−1)/2 + 4 blocks.  literal_subscripts = true keeps the first
// block's subscript as the literal product m·L·M instead of m·L̃·M; that
// reading leaves the label range and is rejected with ErrKind::InvalidInput,
// preserving an audit trail for the folded reading used by default.
Mipf build_b_series(int Ltilde, int M, bool literal_subscripts = false);

// All permutations π with π(0)=0, T_{πa} = T_a and S_{πa,πb} = S_{ab}
// (exhaustive backtracking, pruned by weight class and S-row statistics),
// in lexicographic order.  Primary count capped at 40.
std::vector<std::vector<int>> automorphism_search_perms(const ModularData& md);
Mipf mipf_from_permutation(const ModularData& md, const std::vector<int>& perm);
std::vector<Mipf> automorphism_search(const ModularData& md);

// True iff perm acts on the antisymmetric-tensor ladder as
// A(ℓ) ↦ A(fold(ω·ℓ mod 2r)) for a single multiplier ω coprime to 2r
// (fold(x) = min(x, 2r−x)); such ladder-scaling permutations are the
// coprime-factorization automorphisms.  omega_out receives the multiplier.
bool ladder_scaling_form(const ModularData& md, const std::vector<int>& perm,
                         long long* omega_out = nullptr);

}  // namespace mipf

#endif  // MIPF_INVARIANTS_HPP
