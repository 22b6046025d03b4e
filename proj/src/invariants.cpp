#include "mipf/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mipf/error.hpp"

namespace mipf {

std::string InvarianceReport::describe() const {
  std::ostringstream os;
  os << "SM=MS residual " << s_residual << "; TM=MT residual " << t_residual
     << "; M00 " << (vacuum_ok ? "= 1" : "!= 1") << "; entries "
     << (nonneg_ok ? "non-negative" : "NEGATIVE");
  return os.str();
}

InvarianceReport verify_invariant(const ModularData& md, const Mipf& m, double eps) {
  (void)eps;
  const int n = md.n;
  if (m.n() != n)
    throw MipfError(ErrKind::InvalidInput,
                    "invariant is " + std::to_string(m.n()) + "x" +
                        std::to_string(m.n()) + " but " + theory_name(md.theory) +
                        " has " + std::to_string(n) + " primaries");
  InvarianceReport rep;
  rep.vacuum_ok = (m.at(0, 0) == 1);
  rep.nonneg_ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.at(a, b) < 0) rep.nonneg_ok = false;

  // ‖SM − MS‖
  double sres = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx sm = 0.0, ms = 0.0;
      for (int k = 0; k < n; ++k) {
        sm += md.S.at(a, k) * (double)m.at(k, b);
        ms += (double)m.at(a, k) * md.S.at(k, b);
      }
      sres = std::max(sres, std::abs(sm - ms));
    }
  rep.s_residual = sres;

  // T diagonal: |M_ab| · |T_a − T_b|
  double tres = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.at(a, b) != 0)
        tres = std::max(tres, std::abs((double)m.at(a, b)) *
                                  std::abs(md.T[a] - md.T[b]));
  rep.t_residual = tres;
  return rep;
}

Mipf diagonal_invariant(const ModularData& md) {
  Mipf m;
  m.theory = md.theory;
  m.builder = "diag";
  m.M.assign(md.n, std::vector<long long>(md.n, 0));
  for (int a = 0; a < md.n; ++a) m.M[a][a] = 1;
  return m;
}

Mipf charge_conjugation_invariant(const ModularData& md) {
  Mipf m;
  m.theory = md.theory;
  m.builder = "conj";
  m.M.assign(md.n, std::vector<long long>(md.n, 0));
  for (int a = 0; a < md.n; ++a) m.M[a][md.conj[a]] = 1;
  return m;
}

Mipf simple_current_invariant(const ModularData& md, const FusionRing& ring, int J) {
  const int n = md.n;
  if (J < 0 || J >= n)
    throw MipfError(ErrKind::InvalidInput, "current index out of range");
  if (!ring.is_simple_current(J))
    throw MipfError(ErrKind::InvalidInput,
                    "'" + md.labels[J] + "' is not a simple current of " +
                        theory_name(md.theory));
  const int N = ring.current_order(J);
  const Rat x = (md.h[J] * Rat(N - 1)).mod1();

  Mipf m;
  m.theory = md.theory;
  m.builder = "sc";
  m.params = {{"current", J}, {"order", N}};
  m.M.assign(n, std::vector<long long>(n, 0));
  for (int a = 0; a < n; ++a) {
    const Rat qa = monodromy_charge(md, ring, J, a);
    int cur = a;
    for (int step = 0; step < N; ++step) {
      if ((qa + Rat(step) * x).mod1() == Rat(0)) {
        if ((md.h[cur] - md.h[a]).mod1() != Rat(0))
          throw MipfError(ErrKind::Existence,
                          "current '" + md.labels[J] +
                              "' admits no cyclic invariant: weights of '" +
                              md.labels[a] + "' and '" + md.labels[cur] +
                              "' differ by a non-integer");
        m.M[a][cur] += 1;
      }
      cur = ring.current_image(J, cur);
    }
  }
  InvarianceReport rep = verify_invariant(md, m, 1e-9);
  if (!rep.pass(1e-9))
    throw MipfError(ErrKind::Verification,
                    "simple-current invariant for '" + md.labels[J] +
                        "' failed verification: " + rep.describe());
  return m;
}

namespace {

// M += mult · (Σ_a cnt_a e_a)(Σ_b cnt_b e_b)ᵀ for each block
void accumulate_blocks(std::vector<std::vector<long long>>& M,
                       const std::vector<std::vector<int>>& blocks,
                       const std::vector<long long>& mult) {
  const int n = (int)M.size();
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::vector<long long> cnt(n, 0);
    for (int idx : blocks[i]) ++cnt[idx];
    for (int a = 0; a < n; ++a) {
      if (!cnt[a]) continue;
      for (int b = 0; b < n; ++b)
        if (cnt[b]) M[a][b] += mult[i] * cnt[a] * cnt[b];
    }
  }
}

void require_d_or_orb(Family fam, const char* who) {
  if (fam != Family::AffineD2 && fam != Family::OrbifoldC1)
    throw MipfError(ErrKind::InvalidInput,
                    std::string(who) + " applies to D2 or orb theories only");
}

}  // namespace

Mipf build_dinv(Family fam, int rtilde, int M) {
  require_d_or_orb(fam, "the dinv builder");
  if (rtilde < 1)
    throw MipfError(ErrKind::InvalidInput, "rtilde must be >= 1");
  if (M < 3 || M % 2 == 0)
    throw MipfError(ErrKind::InvalidInput,
                    "M must be odd and >= 3 (even M is the 4|r simple-current "
                    "route; see build_scinv)");
  const int r = rtilde * M * M;
  const int n = r + 7;
  auto fold = [&](int e) {
    int f = r - std::abs(r - e);
    if (f < 1 || f > r - 1)
      throw MipfError(ErrKind::Internal,
                      "ladder subscript " + std::to_string(e) + " folds to " +
                          std::to_string(f) + ", outside 1.." + std::to_string(r - 1));
    return f;
  };

  std::vector<std::vector<int>> blocks;
  std::vector<int> even_ladder, odd_ladder;
  for (int m = 1; m <= (M - 1) / 2; ++m) {
    even_ladder.push_back(7 + fold(2 * m * rtilde * M));
    odd_ladder.push_back(7 + fold((2 * m - 1) * rtilde * M));
  }
  std::vector<int> b0 = {0}, b1 = {1}, b2 = {2}, b3 = {3};
  b0.insert(b0.end(), even_ladder.begin(), even_ladder.end());
  b1.insert(b1.end(), even_ladder.begin(), even_ladder.end());
  b2.insert(b2.end(), odd_ladder.begin(), odd_ladder.end());
  b3.insert(b3.end(), odd_ladder.begin(), odd_ladder.end());
  blocks.push_back(b0);
  blocks.push_back(b1);
  blocks.push_back(b2);
  blocks.push_back(b3);
  for (int t = 4; t <= 7; ++t) blocks.push_back({t});
  for (int l = 1; l <= rtilde - 1; ++l) {
    std::vector<int> blk;
    for (int m = 0; m <= M - 1; ++m)
      blk.push_back(7 + fold(l * M + 2 * m * rtilde * M));
    blocks.push_back(blk);
  }

  Mipf out;
  out.theory = {fam, r};
  out.builder = "dinv";
  out.params = {{"rtilde", rtilde}, {"m", M}};
  out.M.assign(n, std::vector<long long>(n, 0));
  accumulate_blocks(out.M, blocks, std::vector<long long>(blocks.size(), 1));
  return out;
}

Mipf build_scinv(Family fam, int r) {
  require_d_or_orb(fam, "the scinv builder");
  if (r < 4 || r % 4 != 0)
    throw MipfError(ErrKind::InvalidInput, "scinv requires r divisible by 4");
  const int n = r + 7;
  std::vector<std::vector<int>> blocks = {{0, 2}, {1, 3}, {4}, {6}, {7 + r / 2}};
  std::vector<long long> mult = {1, 1, 2, 2, 2};
  for (int l = 2; l <= r / 2 - 2; l += 2) {
    blocks.push_back({7 + l, 7 + (r - l)});
    mult.push_back(1);
  }
  Mipf out;
  out.theory = {fam, r};
  out.builder = "scinv";
  out.params = {{"r", r}};
  out.M.assign(n, std::vector<long long>(n, 0));
  accumulate_blocks(out.M, blocks, mult);
  return out;
}

Mipf build_b_series(int Ltilde, int M, bool literal_subscripts) {
  if (Ltilde < 1 || Ltilde % 2 == 0)
    throw MipfError(ErrKind::InvalidInput, "Ltilde must be odd and >= 1");
  if (M < 3 || M % 2 == 0)
    throw MipfError(ErrKind::InvalidInput, "M must be odd and >= 3");
  const long long L = (long long)Ltilde * M * M;
  const int s = (int)((L - 1) / 2);
  const int n = s + 4;
  // doubled-range convention A(ℓ) ≡ A(L−ℓ); anything folding outside the
  // ladder does not name a primary
  auto fold = [&](long long e, const char* what) {
    long long f = ((e % L) + L) % L;
    f = std::min(f, L - f);
    if (f < 1 || f > s)
      throw MipfError(ErrKind::InvalidInput,
                      std::string(what) + " subscript " + std::to_string(e) +
                          " folds to A(" + std::to_string(f) +
                          "), which is not a primary of B2:" + std::to_string(s));
    return 1 + (int)f;  // ladder index
  };

  std::vector<int> head_ladder;
  for (int m = 1; m <= (M - 1) / 2; ++m) {
    long long e = literal_subscripts ? (long long)m * L * M : (long long)m * Ltilde * M;
    head_ladder.push_back(fold(e, literal_subscripts ? "literal m·L·M" : "m·L̃·M"));
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> b0 = {0}, b1 = {1};
  b0.insert(b0.end(), head_ladder.begin(), head_ladder.end());
  b1.insert(b1.end(), head_ladder.begin(), head_ladder.end());
  blocks.push_back(b0);
  blocks.push_back(b1);
  blocks.push_back({s + 2});
  blocks.push_back({s + 3});
  for (int l = 1; l <= (Ltilde - 1) / 2; ++l) {
    std::vector<int> blk;
    for (int m = 0; m <= M - 1; ++m)
      blk.push_back(fold((long long)l * M + (long long)m * Ltilde * M, "l·M + m·L̃·M"));
    blocks.push_back(blk);
  }

  Mipf out;
  out.theory = {Family::AffineB2, s};
  out.builder = "bseries";
  out.params = {{"ltilde", Ltilde}, {"m", M}, {"literal", literal_subscripts ? 1 : 0}};
  out.M.assign(n, std::vector<long long>(n, 0));
  accumulate_blocks(out.M, blocks, std::vector<long long>(blocks.size(), 1));
  return out;
}

namespace {

struct SearchState {
  const ModularData* md;
  std::vector<std::vector<int>> candidates;
  std::vector<int> pi;
  std::vector<bool> used;
  std::vector<std::vector<int>>* out;
};

void search_dfs(SearchState& st, int a) {
  const int n = st.md->n;
  if (a == n) {
    st.out->push_back(st.pi);
    return;
  }
  const CMat& S = st.md->S;
  for (int b : st.candidates[a]) {
    if (st.used[b]) continue;
    bool ok = true;
    for (int ap = 0; ap < a && ok; ++ap)
      ok = std::abs(S.at(a, ap) - S.at(b, st.pi[ap])) <= 1e-10;
    if (ok) ok = std::abs(S.at(a, a) - S.at(b, b)) <= 1e-10;
    if (!ok) continue;
    st.pi[a] = b;
    st.used[b] = true;
    search_dfs(st, a + 1);
    st.used[b] = false;
    st.pi[a] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> automorphism_search_perms(const ModularData& md) {
  const int n = md.n;
  if (n > 40)
    throw MipfError(ErrKind::InvalidInput,
                    "automorphism search capped at 40 primaries (" +
                        theory_name(md.theory) + " has " + std::to_string(n) + ")");
  // class keys: weight mod 1 (exact) and the sorted row-modulus profile
  std::vector<Rat> hmod(n);
  std::vector<std::vector<double>> profile(n);
  for (int a = 0; a < n; ++a) {
    hmod[a] = md.h[a].mod1();
    profile[a].reserve(n);
    for (int j = 0; j < n; ++j) profile[a].push_back(std::abs(md.S.at(a, j)));
    std::sort(profile[a].begin(), profile[a].end());
  }
  auto compatible = [&](int a, int b) {
    if (!(hmod[a] == hmod[b])) return false;
    if (std::abs(md.S.at(a, 0) - md.S.at(b, 0)) > 1e-10) return false;
    for (int j = 0; j < n; ++j)
      if (std::abs(profile[a][j] - profile[b][j]) > 1e-9) return false;
    return true;
  };

  SearchState st;
  st.md = &md;
  st.candidates.resize(n);
  st.candidates[0] = {0};
  for (int a = 1; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (compatible(a, b)) st.candidates[a].push_back(b);
  st.pi.assign(n, -1);
  st.used.assign(n, false);
  std::vector<std::vector<int>> found;
  st.out = &found;
  st.pi[0] = 0;
  st.used[0] = true;
  search_dfs(st, 1);
  std::sort(found.begin(), found.end());
  return found;
}

Mipf mipf_from_permutation(const ModularData& md, const std::vector<int>& perm) {
  if ((int)perm.size() != md.n)
    throw MipfError(ErrKind::InvalidInput, "permutation size mismatch");
  Mipf m;
  m.theory = md.theory;
  m.builder = "search";
  m.M.assign(md.n, std::vector<long long>(md.n, 0));
  for (int a = 0; a < md.n; ++a) m.M[a][perm[a]] = 1;
  return m;
}

std::vector<Mipf> automorphism_search(const ModularData& md) {
  std::vector<Mipf> out;
  for (const std::vector<int>& perm : automorphism_search_perms(md))
    out.push_back(mipf_from_permutation(md, perm));
  return out;
}

bool ladder_scaling_form(const ModularData& md, const std::vector<int>& perm,
                         long long* omega_out) {
  if (md.theory.family != Family::AffineD2 && md.theory.family != Family::OrbifoldC1)
    return false;
  const int r = md.theory.rank;
  if ((int)perm.size() != md.n) return false;
  for (long long w = 1; w < 2 * r; ++w) {
    if (std::gcd(w, 2LL * r) != 1) continue;
    bool all = true;
    for (int l = 1; l <= r - 1 && all; ++l) {
      long long x = (w * l) % (2 * r);
      long long f = std::min(x, 2 * r - x);
      all = (f >= 1 && f <= r - 1 && perm[7 + l] == 7 + (int)f);
    }
    if (all) {
      if (omega_out) *omega_out = w;
      return true;
    }
  }
  return false;
}

}  // namespace mipf
