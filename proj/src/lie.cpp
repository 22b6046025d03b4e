#include "mipf/lie.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mipf/error.hpp"

namespace mipf {

namespace {

void require(bool ok, ErrKind k, const std::string& msg) {
  if (!ok) throw MipfError(k, msg);
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> weyl_vector(Series s, int rank) {
  std::vector<Rat> rho(rank);
  for (int i = 1; i <= rank; ++i)
    rho[i - 1] = (s == Series::D) ? Rat(rank - i) : Rat(2 * (rank - i) + 1, 2);
  return rho;
}

long long dual_coxeter(Series s, int rank) {
  return s == Series::D ? 2 * rank - 2 : 2 * rank - 1;
}

long long dimension(Series s, int rank) {
  long long n = s == Series::D ? 2 * rank : 2 * rank + 1;  // SO(n)
  return n * (n - 1) / 2;
}

}  // namespace

int d_field_count(int r) { return r + 7; }
int b_field_count(int s) { return s + 4; }

std::string level2_label(Series s, int rank, int index) {
  if (s == Series::D) {
    require(rank >= 2, ErrKind::InvalidInput, "D series needs rank >= 2");
    require(index >= 0 && index < d_field_count(rank), ErrKind::InvalidInput,
            "D primary index out of range");
    static const char* named[8] = {"O", "VV", "SS", "CC", "S", "C", "VC", "VS"};
    if (index < 8) return named[index];
    int ell = index - 7;
    if (ell == 1) return "V";
    if (ell == rank - 1) return "SC";
    return "A(" + std::to_string(ell) + ")";
  }
  require(rank >= 1, ErrKind::InvalidInput, "B series needs rank >= 1");
  require(index >= 0 && index < b_field_count(rank), ErrKind::InvalidInput,
          "B primary index out of range");
  if (index == 0) return "O";
  if (index == 1) return "VV";
  if (index == rank + 2) return "Sp";
  if (index == rank + 3) return "SpV";
  return "A(" + std::to_string(index - 1) + ")";
}

int level2_index(Series s, int rank, const std::string& label) {
  int n = s == Series::D ? d_field_count(rank) : b_field_count(rank);
  for (int i = 0; i < n; ++i)
    if (level2_label(s, rank, i) == label) return i;
  // aliases for the D ladder endpoints
  if (s == Series::D) {
    if (label == "A(1)" || label == "V") return d_index_A(1);
    if (label == "A(" + std::to_string(rank - 1) + ")") return d_index_A(rank - 1);
  }
  throw MipfError(ErrKind::InvalidInput, "unknown level-2 label '" + label + "'");
}

std::vector<Rat> level2_weight(Series s, int rank, int index) {
  std::vector<Rat> w(rank, Rat(0));
  auto fill = [&](int count, Rat v) {
    for (int i = 0; i < count; ++i) w[i] = v;
  };
  if (s == Series::D) {
    require(index >= 0 && index < d_field_count(rank), ErrKind::InvalidInput,
            "D primary index out of range");
    switch (index) {
      case 0: break;                                     // O
      case 1: w[0] = Rat(2); break;                      // VV
      case 2: fill(rank, Rat(1)); break;                 // SS
      case 3: fill(rank, Rat(1)); w[rank - 1] = Rat(-1); break;  // CC
      case 4: fill(rank, Rat(1, 2)); break;              // S
      case 5: fill(rank, Rat(1, 2)); w[rank - 1] = Rat(-1, 2); break;  // C
      case 6:                                            // VC
        fill(rank, Rat(1, 2));
        w[0] = Rat(3, 2);
        w[rank - 1] = Rat(-1, 2);
        break;
      case 7: fill(rank, Rat(1, 2)); w[0] = Rat(3, 2); break;  // VS
      default: fill(index - 7, Rat(1)); break;           // A(ℓ), ℓ = index−7
    }
    return w;
  }
  require(index >= 0 && index < b_field_count(rank), ErrKind::InvalidInput,
          "B primary index out of range");
  if (index == 0) return w;                              // O
  if (index == 1) { w[0] = Rat(2); return w; }           // VV
  if (index == rank + 2) { fill(rank, Rat(1, 2)); return w; }  // Sp
  if (index == rank + 3) {                               // SpV
    fill(rank, Rat(1, 2));
    w[0] = Rat(3, 2);
    return w;
  }
  fill(index - 1, Rat(1));                               // A(ℓ), ℓ = index−1
  return w;
}

Rat conformal_weight(Series s, int rank, int index) {
  std::vector<Rat> lam = level2_weight(s, rank, index);
  std::vector<Rat> rho = weyl_vector(s, rank);
  Rat kappa = Rat(2 + dual_coxeter(s, rank));
  return (dot(lam, lam) + Rat(2) * dot(lam, rho)) / (Rat(2) * kappa);
}

Rat conformal_weight_closed_form(Series s, int rank, int index) {
  if (s == Series::D) {
    long long r = rank;
    switch (index) {
      case 0: return Rat(0);
      case 1: return Rat(1);
      case 2:
      case 3: return Rat(r, 4);
      case 4:
      case 5: return Rat(2 * r - 1, 16);
      case 6:
      case 7: return Rat(2 * r - 1, 16) + Rat(1, 2);
      default: {
        long long ell = index - 7;
        return Rat(ell * (2 * r - ell), 4 * r);
      }
    }
  }
  long long L = 2 * (long long)rank + 1;
  if (index == 0) return Rat(0);
  if (index == 1) return Rat(1);
  if (index == rank + 2) return Rat(L - 1, 16);
  if (index == rank + 3) return Rat(L + 7, 16);
  long long ell = index - 1;
  return Rat(ell * (L - ell), 2 * L);
}

Rat central_charge(Series s, int rank) {
  return Rat(2 * dimension(s, rank), 2 + dual_coxeter(s, rank));
}

Rat level1_weight_d(int r, const std::string& label) {
  if (label == "0") return Rat(0);
  if (label == "v") return Rat(1, 2);
  if (label == "s" || label == "c") return Rat(r, 8);
  throw MipfError(ErrKind::InvalidInput, "unknown D level-1 label '" + label + "'");
}

Rat level1_weight_b(int s, const std::string& label) {
  if (label == "0") return Rat(0);
  if (label == "v") return Rat(1, 2);
  if (label == "s") return Rat(2 * (long long)s + 1, 16);
  throw MipfError(ErrKind::InvalidInput, "unknown B level-1 label '" + label + "'");
}

CMat kac_peterson_S(Series s, int rank) {
  require(rank <= 8, ErrKind::InvalidInput,
          "kac_peterson_S: rank > 8 exceeds the Weyl-sum budget");
  require(rank >= (s == Series::D ? 2 : 1), ErrKind::InvalidInput,
          "kac_peterson_S: rank too small for series");
  int n = s == Series::D ? d_field_count(rank) : b_field_count(rank);
  long long kappa = 2 + dual_coxeter(s, rank);
  std::vector<Rat> rho = weyl_vector(s, rank);
  std::vector<std::vector<Rat>> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = level2_weight(s, rank, i);
    for (int j = 0; j < rank; ++j) xs[i][j] += rho[j];
  }

  // permutations of 0..rank−1 with parities, enumerated once
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> signs;
  do {
    int inv = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (perm[i] > perm[j]) ++inv;
    perms.push_back(perm);
    signs.push_back(inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // overall phase of the flip-folded factors: each (−2i·sin) = (−i)·(2sin)
  int ipow = ((rank % 4) + 4) % 4;
  static const cplx mi_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  cplx sin_phase = mi_pow[ipow];  // (−i)^rank

  CMat raw(n, n);
  std::vector<std::vector<double>> ctab(rank, std::vector<double>(rank));
  std::vector<std::vector<double>> stab(rank, std::vector<double>(rank));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
          Rat arg = xs[a][i] * xs[b][j] / Rat(kappa);
          ctab[i][j] = 2.0 * cos2pi(arg);
          stab[i][j] = 2.0 * sin2pi(arg);
        }
      double csum = 0.0, ssum = 0.0;
      for (size_t p = 0; p < perms.size(); ++p) {
        const std::vector<int>& pi = perms[p];
        double cprod = 1.0, sprod = 1.0;
        for (int j = 0; j < rank; ++j) {
          cprod *= ctab[pi[j]][j];
          sprod *= stab[pi[j]][j];
        }
        csum += signs[p] * cprod;
        ssum += signs[p] * sprod;
      }
      cplx v;
      if (s == Series::D)
        v = 0.5 * (cplx(csum, 0.0) + sin_phase * ssum);
      else
        v = sin_phase * ssum;
      raw.at(a, b) = v;
      raw.at(b, a) = v;
    }
  }

  // normalize: positive vacuum row, unit row norm
  double norm0 = 0.0;
  for (int j = 0; j < n; ++j) norm0 += std::norm(raw.at(0, j));
  norm0 = std::sqrt(norm0);
  require(norm0 > 1e-9, ErrKind::Internal, "kac_peterson_S: vanishing vacuum row");
  cplx psi = raw.at(0, 0) / std::abs(raw.at(0, 0));
  CMat S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S.at(i, j) = std::conj(psi) * raw.at(i, j) / norm0;

  for (int j = 0; j < n; ++j) {
    if (!(S.at(0, j).real() > 0.0) || std::abs(S.at(0, j).imag()) > 1e-9)
      throw MipfError(ErrKind::Internal,
                      "kac_peterson_S: vacuum row not strictly positive");
  }
  double ur = unitarity_residual(S);
  if (ur > 1e-9)
    throw MipfError(ErrKind::Internal,
                    "kac_peterson_S: non-unitary result, residual " +
                        std::to_string(ur));
  return S;
}

}  // namespace mipf
