#include "mipf/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "mipf/error.hpp"

namespace mipf {

namespace {

// distance to the nearest non-negative integer
double nonneg_int_residual(double x) {
  double r = std::llround(std::max(0.0, x));
  return std::abs(x - r);
}

}  // namespace

double verlinde_integrality_residual(const CMat& S) {
  const int n = S.rows();
  // ratio[a][m] = S_{am}/S_{0m}
  CMat ratio(n, n);
  for (int m = 0; m < n; ++m) {
    cplx s0 = S.at(0, m);
    if (std::abs(s0) < 1e-14)
      throw MipfError(ErrKind::Verification, "vacuum S row has a zero entry");
    for (int a = 0; a < n; ++a) ratio.at(a, m) = S.at(a, m) / s0;
  }
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        cplx acc = 0.0;
        for (int m = 0; m < n; ++m)
          acc += ratio.at(a, m) * S.at(b, m) * std::conj(S.at(c, m));
        worst = std::max(worst, std::abs(acc.imag()));
        worst = std::max(worst, nonneg_int_residual(acc.real()));
      }
  return worst;
}

FusionRing verlinde(const ModularData& md, double eps) {
  const int n = md.n;
  const CMat& S = md.S;
  CMat ratio(n, n);
  for (int m = 0; m < n; ++m) {
    cplx s0 = S.at(0, m);
    if (std::abs(s0) < 1e-14)
      throw MipfError(ErrKind::Verification, "vacuum S row has a zero entry");
    for (int a = 0; a < n; ++a) ratio.at(a, m) = S.at(a, m) / s0;
  }
  FusionRing ring;
  ring.n = n;
  ring.N.assign(size_t(n) * n * n, 0);
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        cplx acc = 0.0;
        for (int m = 0; m < n; ++m)
          acc += ratio.at(a, m) * S.at(b, m) * std::conj(S.at(c, m));
        worst = std::max(worst, std::abs(acc.imag()));
        worst = std::max(worst, nonneg_int_residual(acc.real()));
        ring.at(a, b, c) = int(std::llround(std::max(0.0, acc.real())));
      }
  if (worst > eps)
    throw MipfError(ErrKind::Verification,
                    "Verlinde coefficients are not non-negative integers "
                    "(residual " + std::to_string(worst) + ")");
  ring.conj.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (ring.at(a, b, 0) == 1) {
        if (ring.conj[a] != -1)
          throw MipfError(ErrKind::Verification, "conjugate of a field is not unique");
        ring.conj[a] = b;
      }
    if (ring.conj[a] == -1)
      throw MipfError(ErrKind::Verification, "field has no conjugate in the fusion ring");
  }
  return ring;
}

int FusionRing::current_image(int J, int a) const {
  int image = -1;
  for (int c = 0; c < n; ++c) {
    int coeff = at(J, a, c);
    if (coeff == 0) continue;
    if (coeff != 1 || image != -1)
      throw MipfError(ErrKind::InvalidInput,
                      "field " + std::to_string(J) + " is not a simple current");
    image = c;
  }
  if (image == -1)
    throw MipfError(ErrKind::Internal, "fusion row is identically zero");
  return image;
}

bool FusionRing::is_simple_current(int a) const {
  for (int b = 0; b < n; ++b) {
    int total = 0;
    for (int c = 0; c < n; ++c) total += at(a, b, c);
    if (total != 1) return false;
  }
  return true;
}

std::vector<int> FusionRing::simple_currents() const {
  std::vector<int> out;
  for (int a = 0; a < n; ++a)
    if (is_simple_current(a)) out.push_back(a);
  return out;
}

int FusionRing::current_order(int J) const {
  int x = J;
  for (int k = 1; k <= n; ++k) {
    if (x == 0) return k;
    x = current_image(J, x);
  }
  throw MipfError(ErrKind::Internal, "simple current has no finite order");
}

std::vector<double> FusionRing::quantum_dimensions() const {
  // Perron–Frobenius eigenvalue of N_a, via power iteration on N_a + 1
  // (the shift makes the dominant eigenvalue unique even when N_a is a
  // permutation matrix).
  std::vector<double> dims(n, 0.0);
  for (int a = 0; a < n; ++a) {
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double lambda = 0.0;
    for (int iter = 0; iter < 400; ++iter) {
      for (int b = 0; b < n; ++b) {
        double acc = v[b];
        for (int c = 0; c < n; ++c) acc += at(a, b, c) * v[c];
        w[b] = acc;
      }
      double norm = 0.0;
      for (double x : w) norm = std::max(norm, std::abs(x));
      if (norm == 0.0) throw MipfError(ErrKind::Internal, "zero fusion matrix");
      for (int b = 0; b < n; ++b) v[b] = w[b] / norm;
      lambda = norm;
    }
    dims[a] = lambda - 1.0;
  }
  return dims;
}

Rat monodromy_charge(const ModularData& md, const FusionRing& ring, int J, int a) {
  int Ja = ring.current_image(J, a);
  return (md.h[J] + md.h[a] - md.h[Ja]).mod1();
}

namespace {

struct FieldSignature {
  int64_t qdim_bucket = 0;
  bool self_conj = false;
  int self_coupling = 0;          // N_{aa}^a
  std::vector<int> self_fusion;   // sorted N_{aa}^c over c
  std::vector<int> row_totals;    // sorted Σ_c N_{ab}^c over b

  bool operator==(const FieldSignature& o) const = default;
};

std::vector<FieldSignature> signatures(const FusionRing& r) {
  std::vector<double> dims = r.quantum_dimensions();
  std::vector<FieldSignature> sig(r.n);
  for (int a = 0; a < r.n; ++a) {
    sig[a].qdim_bucket = std::llround(dims[a] * 1e6);
    sig[a].self_conj = (r.conj[a] == a);
    sig[a].self_coupling = r.at(a, a, a);
    for (int c = 0; c < r.n; ++c) sig[a].self_fusion.push_back(r.at(a, a, c));
    std::sort(sig[a].self_fusion.begin(), sig[a].self_fusion.end());
    for (int b = 0; b < r.n; ++b) {
      int total = 0;
      for (int c = 0; c < r.n; ++c) total += r.at(a, b, c);
      sig[a].row_totals.push_back(total);
    }
    std::sort(sig[a].row_totals.begin(), sig[a].row_totals.end());
  }
  return sig;
}

// depth-first extension of a partial bijection, most-constrained field first
bool extend_map(const FusionRing& r1, const FusionRing& r2,
                const std::vector<std::vector<int>>& candidates,
                std::vector<int>& pi, std::vector<bool>& used) {
  int best = -1;
  size_t best_count = SIZE_MAX;
  for (int a = 0; a < r1.n; ++a) {
    if (pi[a] != -1) continue;
    size_t count = 0;
    for (int b : candidates[a])
      if (!used[b]) ++count;
    if (count < best_count) {
      best_count = count;
      best = a;
    }
  }
  if (best == -1) return true;  // complete
  for (int b : candidates[best]) {
    if (used[b]) continue;
    // conjugation must commute with the map when the partner is placed
    int abar = r1.conj[best];
    if (pi[abar] != -1 && pi[abar] != r2.conj[b]) continue;
    // check every triple that becomes fully assigned
    bool ok = true;
    pi[best] = b;
    for (int x = 0; x < r1.n && ok; ++x) {
      if (pi[x] == -1) continue;
      for (int y = 0; y < r1.n && ok; ++y) {
        if (pi[y] == -1) continue;
        for (int z = 0; z < r1.n; ++z) {
          if (pi[z] == -1) continue;
          if (r1.at(x, y, z) != r2.at(pi[x], pi[y], pi[z])) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      used[b] = true;
      if (extend_map(r1, r2, candidates, pi, used)) return true;
      used[b] = false;
    }
    pi[best] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> fusion_isomorphic(const FusionRing& r1,
                                                  const FusionRing& r2) {
  if (r1.n != r2.n) return std::nullopt;
  std::vector<FieldSignature> s1 = signatures(r1), s2 = signatures(r2);
  std::vector<std::vector<int>> candidates(r1.n);
  for (int a = 0; a < r1.n; ++a) {
    for (int b = 0; b < r2.n; ++b)
      if (s1[a] == s2[b]) candidates[a].push_back(b);
    if (candidates[a].empty()) return std::nullopt;
  }
  std::vector<int> pi(r1.n, -1);
  std::vector<bool> used(r2.n, false);
  // both rings index the vacuum as 0
  pi[0] = 0;
  used[0] = true;
  if (!extend_map(r1, r2, candidates, pi, used)) return std::nullopt;
  return pi;
}

}  // namespace mipf
