#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "mipf/error.hpp"
#include "mipf/modular_data.hpp"

namespace mipf {

// Z₂ orbifold of the rational circle boson, r+7 primaries:
//   [0], [V], [S], [C], [σ], [σ̃], [σ'], [σ̃'], [ℓ] (ℓ = 1..r−1), c = 1.
// Weights: 0, 1, r/4, r/4, 1/16, 1/16, 9/16, 9/16, ℓ²/4r.
//
// The untwisted part of S is in closed form (K = 1/√(8r)):
//   rows [0],[V]:  K on the four named untwisted fields, 2K on [ℓ],
//                  ±1/(2√2) on the four twist fields ([0]: +, [V]: −)
//   rows [S],[C]:  K, K, (−1)^r K, (−1)^r K, then 2(−1)^ℓ K on [ℓ],
//                  ±α_t on the twist fields ([S]: +, [C]: −)
//   S([ℓ],[ℓ']) = 4K cos(πℓℓ'/r),   S([ℓ], twist) = 0.
//
// The twist-sector entries are NOT written down in closed form here; they
// are pinned by solving the finite constraint system below.  Unitarity of
// the [S]/[C] rows forces |α_t| = 1/(2√2) exactly (the untwisted part of
// either row already carries norm² = 1/2 spread over entries of modulus
// K·{1,2}, and the two rows differ only in the twist signs), so each
// α_t = S([S], t) ranges over the fourth roots of unity divided by 2√2.
// The symmetric 4×4 twist-twist block W has three independent entries
// (w00 = W_σσ, w02 = W_σσ', w22 = W_σ'σ'); the rest are forced linearly by
// orthogonality against rows [0]/[V] and T-consistency of those columns:
//   w01 = 1/2 − w00   w03 = −1/2 − w02   w11 = w00   w12 = w03
//   w13 = w02         w23 = 1/2 − w22    w33 = w22.
// Each independent entry is drawn from the closed set
//   {0, ±1/4, ±i/4, ±1/2, ±i/2, (±1±i)/4}
// and candidates are filtered by, in order: row norms of W, pairwise row
// orthogonality, orthogonality against row [S], sampled entries of
// S T S = T̄ S T̄, and finally full-matrix validation.  The survivors form
// a single orbit of order 4 under the relabelings σ↔σ̃ and σ'↔σ̃'; the
// fusion rule [V]·[σ] = [σ'] then cuts the orbit to the two physically
// equivalent labelings, of which the lexicographically smallest is kept so
// that repeated runs are byte-identical.

namespace {

using Arr4 = std::array<cplx, 4>;
using Mat4 = std::array<Arr4, 4>;

struct TwistBlock {
  Arr4 alpha;  // S([S], t), t = [σ], [σ̃], [σ'], [σ̃']
  Mat4 W;      // S(t, t')
};

Mat4 fill_w(cplx w00, cplx w02, cplx w22) {
  Mat4 W{};
  const cplx h = 0.5;
  W[0][0] = w00;
  W[0][1] = h - w00;
  W[0][2] = w02;
  W[0][3] = -h - w02;
  W[1][1] = w00;
  W[1][2] = -h - w02;
  W[1][3] = w02;
  W[2][2] = w22;
  W[2][3] = h - w22;
  W[3][3] = w22;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < a; ++b) W[a][b] = W[b][a];
  return W;
}

std::vector<Rat> orbifold_h(int r) {
  std::vector<Rat> h = {Rat(0),     Rat(1),     Rat(r, 4),  Rat(r, 4),
                        Rat(1, 16), Rat(1, 16), Rat(9, 16), Rat(9, 16)};
  for (int l = 1; l <= r - 1; ++l) h.push_back(Rat((long long)l * l, 4 * r));
  return h;
}

CMat assemble_s(int r, const TwistBlock& tb) {
  const int n = r + 7;
  const double K = 1.0 / std::sqrt(8.0 * r);
  const double q8 = std::sqrt(0.125);  // 1/(2√2)
  const double sr = (r % 2 == 0) ? 1.0 : -1.0;
  CMat S(n, n);
  auto put = [&](int i, int j, cplx v) {
    S.at(i, j) = v;
    S.at(j, i) = v;
  };
  put(0, 0, K);
  put(0, 1, K);
  put(0, 2, K);
  put(0, 3, K);
  put(1, 1, K);
  put(1, 2, K);
  put(1, 3, K);
  put(2, 2, sr * K);
  put(2, 3, sr * K);
  put(3, 3, sr * K);
  for (int l = 1; l <= r - 1; ++l) {
    int i = orb::ell(l);
    double sl = (l % 2 == 0) ? 1.0 : -1.0;
    put(0, i, 2 * K);
    put(1, i, 2 * K);
    put(2, i, 2 * sl * K);
    put(3, i, 2 * sl * K);
    for (int lp = l; lp <= r - 1; ++lp)
      put(i, orb::ell(lp), 4 * K * cos2pi(Rat((long long)l * lp, 2 * r)));
  }
  for (int t = 0; t < 4; ++t) {
    put(0, 4 + t, q8);
    put(1, 4 + t, -q8);
    put(2, 4 + t, tb.alpha[t]);
    put(3, 4 + t, -tb.alpha[t]);
    for (int u = t; u < 4; ++u) put(4 + t, 4 + u, tb.W[t][u]);
  }
  return S;
}

// residual of {SS† = 1, S² = permutation, (ST)³ = S²} for a candidate
double relations_residual(const CMat& S, const std::vector<cplx>& T) {
  const int n = S.rows();
  double res = unitarity_residual(S);
  CMat S2 = S * S;
  std::vector<int> perm = as_permutation(S2, 1e-6);
  if (perm.empty()) return 1.0;
  CMat C(n, n);
  for (int i = 0; i < n; ++i) C.at(i, perm[i]) = 1.0;
  res = std::max(res, CMat::max_abs_diff(S2, C));
  CMat ST(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ST.at(i, j) = S.at(i, j) * T[j];
  res = std::max(res, CMat::max_abs_diff(ST * ST * ST, S2));
  return res;
}

TwistBlock relabeled(const TwistBlock& t, bool swap_sigma, bool swap_prime) {
  int p[4] = {0, 1, 2, 3};
  if (swap_sigma) std::swap(p[0], p[1]);
  if (swap_prime) std::swap(p[2], p[3]);
  TwistBlock o;
  for (int i = 0; i < 4; ++i) {
    o.alpha[i] = t.alpha[p[i]];
    for (int j = 0; j < 4; ++j) o.W[i][j] = t.W[p[i]][p[j]];
  }
  return o;
}

double tb_distance(const TwistBlock& a, const TwistBlock& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(a.alpha[i] - b.alpha[i]));
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a.W[i][j] - b.W[i][j]));
  }
  return d;
}

std::vector<double> tb_key(const TwistBlock& t) {
  std::vector<double> k;
  for (int i = 0; i < 4; ++i) {
    k.push_back(t.alpha[i].real());
    k.push_back(t.alpha[i].imag());
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      k.push_back(t.W[i][j].real());
      k.push_back(t.W[i][j].imag());
    }
  return k;
}

}  // namespace

ModularData build_orbifold(int r) {
  if (r < 1)
    throw MipfError(ErrKind::InvalidInput, "orbifold radius parameter must be >= 1");
  const int n = r + 7;
  std::vector<Rat> h = orbifold_h(r);
  std::vector<cplx> T(n);
  for (int i = 0; i < n; ++i) T[i] = unit_phase(h[i] - Rat(1, 24));

  // candidate values for the independent twist-twist entries
  const cplx I(0.0, 1.0);
  const std::array<cplx, 13> ladder = {
      cplx(0.0),        cplx(0.25),        cplx(-0.25),      0.25 * I,
      -0.25 * I,        cplx(0.5),         cplx(-0.5),       0.5 * I,
      -0.5 * I,         cplx(0.25, 0.25),  cplx(0.25, -0.25),
      cplx(-0.25, 0.25), cplx(-0.25, -0.25)};

  // stage 1: W alone must have row norms² = 1/2
  std::vector<Mat4> wlist;
  for (const cplx& w00 : ladder)
    for (const cplx& w02 : ladder)
      for (const cplx& w22 : ladder) {
        Mat4 W = fill_w(w00, w02, w22);
        bool ok = true;
        for (int a = 0; a < 4 && ok; ++a) {
          double nrm = 0.0;
          for (int t = 0; t < 4; ++t) nrm += std::norm(W[a][t]);
          ok = std::abs(nrm - 0.5) < 1e-9;
        }
        if (ok) wlist.push_back(W);
      }

  const double q8 = std::sqrt(0.125);
  const std::array<cplx, 4> roots = {cplx(q8), cplx(-q8), q8 * I, -q8 * I};
  const cplx T0 = unit_phase(Rat(-1, 24));
  const cplx TS = unit_phase(Rat(r, 4) - Rat(1, 24));
  const cplx Tsg = unit_phase(Rat(1, 16) - Rat(1, 24));
  const cplx Tsp = unit_phase(Rat(9, 16) - Rat(1, 24));
  const std::array<cplx, 4> Tt = {Tsg, Tsg, Tsp, Tsp};

  std::vector<TwistBlock> raw;
  for (const Mat4& W : wlist)
    for (int mask = 0; mask < 256; ++mask) {
      Arr4 alpha = {roots[mask & 3], roots[(mask >> 2) & 3],
                    roots[(mask >> 4) & 3], roots[(mask >> 6) & 3]};
      // stage 2: pairwise orthogonality of the twist rows
      bool ok = true;
      for (int a = 0; a < 4 && ok; ++a)
        for (int b = a + 1; b < 4 && ok; ++b) {
          cplx acc = 0.25 + 2.0 * alpha[a] * std::conj(alpha[b]);
          for (int t = 0; t < 4; ++t) acc += W[a][t] * std::conj(W[b][t]);
          ok = std::abs(acc) < 1e-9;
        }
      // stage 3: twist rows orthogonal to row [S]
      for (int a = 0; a < 4 && ok; ++a) {
        cplx acc = 0.0;
        for (int t = 0; t < 4; ++t) acc += W[a][t] * std::conj(alpha[t]);
        ok = std::abs(acc) < 1e-9;
      }
      // stage 4: sampled entries of S T S = T̄ S T̄
      for (int a = 0; a < 4 && ok; ++a)
        for (int b = a; b < 4 && ok; ++b) {
          cplx lhs = 0.25 * T0 + 2.0 * alpha[a] * alpha[b] * TS;
          for (int t = 0; t < 4; ++t) lhs += Tt[t] * W[a][t] * W[b][t];
          ok = std::abs(lhs - std::conj(Tt[a] * Tt[b]) * W[a][b]) < 1e-9;
        }
      for (int a = 0; a < 4 && ok; ++a) {
        cplx lhs_s = 0.0, lhs_0 = 0.0;
        for (int t = 0; t < 4; ++t) {
          lhs_s += Tt[t] * W[a][t] * alpha[t];
          lhs_0 += Tt[t] * W[a][t];
        }
        ok = std::abs(lhs_s - std::conj(Tt[a] * TS) * alpha[a]) < 1e-9 &&
             std::abs(lhs_0 - std::conj(Tt[a] * T0)) < 1e-9;
      }
      if (!ok) continue;
      // stage 5: assemble and validate the full matrix
      TwistBlock tb{alpha, W};
      if (relations_residual(assemble_s(r, tb), T) < 1e-9) raw.push_back(tb);
    }

  if (raw.size() != 4)
    throw MipfError(ErrKind::Internal,
                    "orbifold twist solver found " + std::to_string(raw.size()) +
                        " solutions instead of 4 at r=" + std::to_string(r));
  // the four must be one relabeling orbit of the first
  for (int g = 0; g < 4; ++g) {
    TwistBlock img = relabeled(raw[0], g & 1, g & 2);
    int hits = 0;
    for (const TwistBlock& s : raw)
      if (tb_distance(img, s) < 1e-12) ++hits;
    if (hits != 1)
      throw MipfError(ErrKind::Internal,
                      "orbifold twist solutions do not form a single relabeling "
                      "orbit at r=" + std::to_string(r));
  }

  // orientation: keep the labelings with fusion rule [V]·[σ] = [σ']
  std::vector<TwistBlock> oriented;
  for (const TwistBlock& tb : raw) {
    CMat S = assemble_s(r, tb);
    cplx nv = 0.0;
    for (int m = 0; m < n; ++m)
      nv += S.at(orb::V, m) * S.at(orb::Sg, m) * std::conj(S.at(orb::SgP, m)) /
            S.at(orb::U, m);
    if (std::abs(nv - 1.0) < 1e-6) oriented.push_back(tb);
  }
  if (oriented.size() != 2)
    throw MipfError(ErrKind::Internal,
                    "orbifold orientation filter kept " +
                        std::to_string(oriented.size()) +
                        " solutions instead of 2 at r=" + std::to_string(r));
  const TwistBlock& pick =
      tb_key(oriented[0]) <= tb_key(oriented[1]) ? oriented[0] : oriented[1];

  ModularData md;
  md.theory = {Family::OrbifoldC1, r};
  md.n = n;
  md.c = Rat(1);
  md.labels = {"[0]", "[V]", "[S]", "[C]", "[σ]", "[σ̃]", "[σ']", "[σ̃']"};
  for (int l = 1; l <= r - 1; ++l) md.labels.push_back("[" + std::to_string(l) + "]");
  md.h = std::move(h);
  md.S = assemble_s(r, pick);
  md.T = std::move(T);
  return md;
}

}  // namespace mipf
