#include "mipf/extension.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>

#include "mipf/error.hpp"
#include "mipf/fusion.hpp"
#include "mipf/matrix.hpp"

namespace mipf {

namespace {

// Backtracking state for the outer-square factorization M = Σ mult·b bᵀ.
struct DecompSearch {
  int n;
  std::vector<std::vector<long long>> W;  // remaining residue
  std::vector<std::vector<long long>> blocks;
  std::vector<long long> mult;
  bool saw_permutation_remainder = false;

  bool all_zero() const {
    for (const auto& row : W)
      for (long long v : row)
        if (v != 0) return false;
    return true;
  }

  void apply(const std::vector<long long>& b, long long mu, int sign) {
    for (int a = 0; a < n; ++a) {
      if (b[a] == 0) continue;
      for (int bb = 0; bb < n; ++bb)
        W[a][bb] += sign * mu * b[a] * b[bb];
    }
  }

  bool solve() {
    int x = -1;
    bool nonzero = false;
    for (int a = 0; a < n && x < 0; ++a) {
      for (int bb = 0; bb < n; ++bb) {
        if (W[a][bb] != 0) nonzero = true;
        if (bb == a && W[a][a] > 0) { x = a; break; }
      }
    }
    if (!nonzero) return true;
    if (x < 0) {
      // Nonzero remainder with an empty diagonal: a permutation part, not
      // an extension block.
      saw_permutation_remainder = true;
      return false;
    }
    const long long d = W[x][x];
    for (long long coeff = 1; coeff * coeff <= d; ++coeff) {
      if (d % (coeff * coeff) != 0) continue;
      const long long mu = d / (coeff * coeff);
      std::vector<long long> b(n, 0);
      bool ok = true;
      for (int y = 0; y < n && ok; ++y) {
        const long long num = W[x][y];
        if (num % (mu * coeff) != 0 || num < 0) { ok = false; break; }
        b[y] = num / (mu * coeff);
      }
      if (!ok || b[x] != coeff) continue;
      apply(b, mu, -1);
      bool feasible = true;
      for (int a = 0; a < n && feasible; ++a)
        for (int bb = 0; bb < n; ++bb)
          if (W[a][bb] < 0) { feasible = false; break; }
      if (feasible) {
        blocks.push_back(b);
        mult.push_back(mu);
        if (solve()) return true;
        blocks.pop_back();
        mult.pop_back();
      }
      apply(b, mu, +1);
    }
    return false;
  }
};

}  // namespace

BlockDecomposition block_decompose(const Mipf& m) {
  const int n = m.n();
  if (n == 0) throw MipfError(ErrKind::InvalidInput, "empty invariant");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.at(a, b) != m.at(b, a))
        throw MipfError(ErrKind::InvalidInput,
                        "block extraction requires a symmetric invariant");
  if (m.at(0, 0) != 1)
    throw MipfError(ErrKind::InvalidInput,
                    "invariant does not have a unique vacuum (M_00 != 1)");

  DecompSearch search;
  search.n = n;
  search.W = m.M;
  if (!search.solve()) {
    if (search.saw_permutation_remainder)
      throw MipfError(ErrKind::AutomorphismType,
                      "invariant is of automorphism type: the residue after "
                      "block extraction is a pure permutation, so there is "
                      "no extended theory to build");
    throw MipfError(ErrKind::Verification,
                    "invariant admits no decomposition into blocks");
  }
  BlockDecomposition dec;
  dec.blocks = std::move(search.blocks);
  dec.mult = std::move(search.mult);
  return dec;
}

ExtendedTheory extended_modular_data(const ModularData& parent,
                                     const BlockDecomposition& dec,
                                     double eps) {
  const int np = parent.n;
  const int nb = dec.count();
  if (nb == 0) throw MipfError(ErrKind::InvalidInput, "empty decomposition");
  for (int I = 0; I < nb; ++I) {
    if ((int)dec.blocks[I].size() != np)
      throw MipfError(ErrKind::InvalidInput,
                      "block length does not match the parent theory");
    if (dec.mult[I] != 1) {
      std::ostringstream os;
      os << "block " << I << " carries multiplicity " << dec.mult[I]
         << ": resolving it needs fixed-point data beyond the parent S "
            "matrix";
      throw MipfError(ErrKind::FixedPoint, os.str());
    }
  }

  // B: parent fields × blocks, entries = block coefficients.
  CMat B(np, nb);
  for (int a = 0; a < np; ++a)
    for (int I = 0; I < nb; ++I)
      B.at(a, I) = (double)dec.blocks[I][a];
  const CMat SpB = parent.S * B;

  // Pick nb independent rows of B by partial-pivot elimination, then solve
  // B[R]·S_ext = (S_parent·B)[R].
  std::vector<int> pivot_rows;
  {
    std::vector<std::vector<double>> work(np, std::vector<double>(nb, 0.0));
    for (int a = 0; a < np; ++a)
      for (int I = 0; I < nb; ++I) work[a][I] = B.at(a, I).real();
    std::vector<bool> used(np, false);
    for (int col = 0; col < nb; ++col) {
      int best = -1;
      double best_abs = 1e-9;
      for (int a = 0; a < np; ++a) {
        if (used[a]) continue;
        if (std::abs(work[a][col]) > best_abs) {
          best_abs = std::abs(work[a][col]);
          best = a;
        }
      }
      if (best < 0)
        throw MipfError(ErrKind::Internal,
                        "extension blocks are not linearly independent");
      used[best] = true;
      pivot_rows.push_back(best);
      for (int a = 0; a < np; ++a) {
        if (a == best || work[a][col] == 0.0) continue;
        const double f = work[a][col] / work[best][col];
        for (int j = 0; j < nb; ++j) work[a][j] -= f * work[best][j];
      }
    }
  }
  CMat A(nb, nb), rhs(nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      A.at(i, j) = B.at(pivot_rows[i], j);
      rhs.at(i, j) = SpB.at(pivot_rows[i], j);
    }
  CMat S_ext = CMat::solve(A, rhs);
  const double solve_residual = CMat::max_abs_diff(SpB, B * S_ext);
  if (solve_residual > eps) {
    std::ostringstream os;
    os << "S_parent·B = B·S_ext fails on the full system: residual "
       << solve_residual;
    throw MipfError(ErrKind::Verification, os.str());
  }

  // Each block must be T-homogeneous: all members share h mod 1 exactly.
  ModularData ext;
  ext.theory = parent.theory;
  ext.n = nb;
  ext.c = parent.c;
  ext.S = S_ext;
  for (int I = 0; I < nb; ++I) {
    int rep = -1;
    std::string label;
    for (int a = 0; a < np; ++a) {
      const long long k = dec.blocks[I][a];
      if (k == 0) continue;
      if (rep < 0) {
        rep = a;
      } else if ((parent.h[a] - parent.h[rep]).mod1() != Rat(0)) {
        std::ostringstream os;
        os << "block " << I << " mixes weights " << parent.h[rep].str()
           << " and " << parent.h[a].str() << " (not equal mod 1)";
        throw MipfError(ErrKind::Verification, os.str());
      }
      if (!label.empty()) label += "+";
      if (k > 1) label += std::to_string(k) + "*";
      label += parent.labels[a];
    }
    ext.labels.push_back(label);
    ext.h.push_back(parent.h[rep]);
    ext.T.push_back(unit_phase(parent.h[rep] - parent.c * Rat(1, 24)));
  }
  const DataCheck chk = check_modular_data(ext, eps > 1e-8 ? eps : 1e-8);
  if (!chk.pass(eps > 1e-8 ? eps : 1e-8))
    throw MipfError(ErrKind::Verification,
                    "extended theory fails modular-data validation:\n" +
                        chk.describe());
  ext.conj.resize(nb);
  {
    const CMat S2 = ext.S * ext.S;
    auto perm = as_permutation(S2, 1e-6);
    if (perm.empty())
      throw MipfError(ErrKind::Verification,
                      "extended S² is not a permutation");
    ext.conj = perm;
  }

  ExtendedTheory out;
  out.dec = dec;
  out.data = std::move(ext);
  out.solve_residual = solve_residual;
  return out;
}

CloneReport clone_check(int rtilde, int M, double eps) {
  if (rtilde < 1 || M < 3 || M % 2 == 0)
    throw MipfError(ErrKind::InvalidInput,
                    "clone check needs rtilde >= 1 and odd M >= 3");
  CloneReport rep;
  rep.rtilde = rtilde;
  rep.M = M;
  rep.r = rtilde * M * M;

  const auto parent_ptr = modular_data({Family::AffineD2, rep.r});
  const ModularData& parent = *parent_ptr;
  const Mipf inv = build_dinv(Family::AffineD2, rtilde, M);
  const BlockDecomposition dec = block_decompose(inv);
  const ExtendedTheory ext = extended_modular_data(parent, dec, eps);
  rep.block_count = dec.count();
  rep.solve_residual = ext.solve_residual;

  const auto target_ptr = rtilde >= 2
                              ? modular_data({Family::AffineD2, rtilde})
                              : modular_data({Family::OrbifoldC1, 1});
  const ModularData& target = *target_ptr;
  if (target.n != ext.data.n)
    throw MipfError(ErrKind::Verification,
                    "extension and target have different field counts");

  const FusionRing ring_ext = verlinde(ext.data);
  const FusionRing ring_target = verlinde(target);
  auto iso = fusion_isomorphic(ring_ext, ring_target);
  rep.iso_found = iso.has_value();
  if (!rep.iso_found) return rep;
  rep.bijection = *iso;

  double worst = 0.0;
  for (int a = 0; a < ext.data.n; ++a)
    for (int b = 0; b < ext.data.n; ++b)
      worst = std::max(worst,
                       std::abs(ext.data.S.at(a, b) -
                                target.S.at(rep.bijection[a],
                                            rep.bijection[b])));
  rep.s_match_residual = worst;

  rep.weights_ext = ext.data.h;
  rep.weights_target.resize(ext.data.n);
  for (int a = 0; a < ext.data.n; ++a)
    rep.weights_target[a] = target.h[rep.bijection[a]];

  // The spinor-type field sits at index 4 in both target enumerations
  // (S for the affine series, the first twist field for the orbifold).
  int a_spinor = -1;
  for (int a = 0; a < ext.data.n; ++a)
    if (rep.bijection[a] == 4) a_spinor = a;
  if (a_spinor < 0)
    throw MipfError(ErrKind::Internal, "bijection misses the spinor slot");
  rep.spinor_shift = ext.data.h[a_spinor] - target.h[4];
  rep.spinor_shift_expected =
      Rat((long long)rtilde * ((long long)M * M - 1), 8);
  return rep;
}

MeromorphicReport meromorphic_chain(int M, double eps) {
  if (M < 3 || M % 2 == 0)
    throw MipfError(ErrKind::InvalidInput,
                    "meromorphic chain needs odd M >= 3");
  MeromorphicReport rep;
  rep.M = M;

  const int L = M * M;
  const int s = (L - 1) / 2;
  const auto parent_ptr = modular_data({Family::AffineB2, s});
  const ModularData& parent = *parent_ptr;
  const Mipf inv = build_b_series(1, M);
  const ExtendedTheory mid =
      extended_modular_data(parent, block_decompose(inv), eps);
  rep.intermediate_count = mid.data.n;
  rep.intermediate_weights = mid.data.h;
  rep.c = mid.data.c;

  const FusionRing ring = verlinde(mid.data);
  rep.all_simple_currents = true;
  for (int a = 0; a < mid.data.n; ++a)
    if (!ring.is_simple_current(a)) rep.all_simple_currents = false;

  // Exactly one of the two spinor-type fields (quarter-integer weights in
  // the parent, shifted to (L±something)/16 here) lands on an integer
  // weight; that one generates the second extension.
  int chosen = -1;
  int integral_spinors = 0;
  for (int a = 0; a < mid.data.n; ++a) {
    const Rat h = mid.data.h[a];
    if (!h.is_integer()) continue;
    if (h == Rat(0)) continue;  // vacuum
    // Skip the current of weight 1 coming from the vector block: the chain
    // extends by the spinor, recognizable by its label.
    if (mid.data.labels[a].find("Sp") == std::string::npos) continue;
    ++integral_spinors;
    chosen = a;
  }
  if (integral_spinors != 1)
    throw MipfError(ErrKind::Verification,
                    "expected exactly one integer-weight spinor current "
                    "after the first extension");
  rep.chosen_current = mid.data.labels[chosen];

  const Mipf second = simple_current_invariant(mid.data, ring, chosen);
  const ExtendedTheory top =
      extended_modular_data(mid.data, block_decompose(second), eps);
  rep.final_count = top.data.n;
  return rep;
}

}  // namespace mipf
