#include <cmath>

#include "mipf/error.hpp"
#include "mipf/lie.hpp"
#include "mipf/modular_data.hpp"

namespace mipf {

// SO(2s+1) level 2 (B_s), s+4 primaries: O, VV, A(1)..A(s), Sp, SpV.
// With L = 2s+1 and a = 1/(2√L), the S matrix is real:
//
//            O    VV    A(ℓ')              Sp    SpV
//   O        a    a     2a                 1/2   1/2
//   VV       a    a     2a                −1/2  −1/2
//   A(ℓ)     2a   2a    4a·cos(2πℓℓ'/L)    0     0
//   Sp      1/2  −1/2   0                  1/2  −1/2
//   SpV     1/2  −1/2   0                 −1/2   1/2
ModularData build_affine_b(int s) {
  if (s < 1) throw MipfError(ErrKind::InvalidInput, "B-series rank must be >= 1");
  const int n = b_field_count(s);
  const long long L = 2LL * s + 1;
  ModularData md;
  md.theory = {Family::AffineB2, s};
  md.n = n;
  md.c = central_charge(Series::B, s);
  md.labels.reserve(n);
  md.h.reserve(n);
  for (int i = 0; i < n; ++i) {
    md.labels.push_back(level2_label(Series::B, s, i));
    md.h.push_back(conformal_weight(Series::B, s, i));
  }

  const double a = 1.0 / (2.0 * std::sqrt(double(L)));
  const int iSp = s + 2, iSpV = s + 3;
  CMat S(n, n);
  auto put = [&](int i, int j, double v) {
    S.at(i, j) = v;
    S.at(j, i) = v;
  };
  put(0, 0, a);
  put(0, 1, a);
  put(1, 1, a);
  put(0, iSp, 0.5);
  put(0, iSpV, 0.5);
  put(1, iSp, -0.5);
  put(1, iSpV, -0.5);
  put(iSp, iSp, 0.5);
  put(iSp, iSpV, -0.5);
  put(iSpV, iSpV, 0.5);
  for (int l = 1; l <= s; ++l) {
    int i = b_index_A(l);
    put(0, i, 2 * a);
    put(1, i, 2 * a);
    put(i, iSp, 0.0);
    put(i, iSpV, 0.0);
    for (int lp = l; lp <= s; ++lp)
      put(i, b_index_A(lp), 4 * a * cos2pi(Rat((long long)l * lp, L)));
  }
  md.S = std::move(S);
  md.T.resize(n);
  for (int i = 0; i < n; ++i)
    md.T[i] = unit_phase(md.h[i] - md.c * Rat(1, 24));
  return md;
}

}  // namespace mipf
