#include <cmath>

#include "mipf/error.hpp"
#include "mipf/modular_data.hpp"

namespace mipf {

// Rational free boson with 2r primaries j = 0..2r−1:
//   h_j = min(j, 2r−j)²/4r,   S_{jj'} = (2r)^{−1/2} e^{−iπ jj'/r},   c = 1.
ModularData build_circle(int r) {
  if (r < 1) throw MipfError(ErrKind::InvalidInput, "circle radius parameter must be >= 1");
  ModularData md;
  md.theory = {Family::CircleU1, r};
  md.n = 2 * r;
  md.c = Rat(1);
  md.labels.reserve(md.n);
  md.h.reserve(md.n);
  for (int j = 0; j < md.n; ++j) {
    md.labels.push_back(std::to_string(j));
    long long m = std::min(j, 2 * r - j);
    md.h.push_back(Rat(m * m, 4 * r));
  }
  md.S = CMat(md.n, md.n);
  double norm = 1.0 / std::sqrt(double(2 * r));
  for (int j = 0; j < md.n; ++j)
    for (int k = 0; k < md.n; ++k)
      md.S.at(j, k) = norm * unit_phase(Rat(-(long long)j * k, 2 * r));
  md.T.resize(md.n);
  for (int j = 0; j < md.n; ++j) md.T[j] = unit_phase(md.h[j] - Rat(1, 24));
  return md;
}

}  // namespace mipf
