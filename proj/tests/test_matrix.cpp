#include "doctest.h"

#include <cmath>

#include "mipf/matrix.hpp"
#include "mipf/rational.hpp"

using namespace mipf;

namespace {

CMat fourier(int n) {
  CMat f(n, n);
  const double norm = 1.0 / std::sqrt((double)n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f.at(i, j) = norm * unit_phase(Rat((long long)i * j, n));
  return f;
}

}  // namespace

TEST_CASE("dagger, transpose, and products behave") {
  CMat f = fourier(5);
  CHECK(unitarity_residual(f) < 1e-14);
  CMat id = f * f.dagger();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(std::abs(id.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-14);
  CHECK(CMat::max_abs_diff(f.transpose(), f) < 1e-14);  // symmetric
}

TEST_CASE("solve inverts a well-conditioned system") {
  CMat a(3, 3), x(3, 3);
  const double vals[9] = {2, 1, 0, 1, 3, 1, 0, 1, 4};
  const double xs[9] = {1, -2, 0.5, 0, 1, 2, -1, 0, 3};
  for (int i = 0; i < 9; ++i) {
    a.at(i / 3, i % 3) = vals[i];
    x.at(i / 3, i % 3) = cplx(xs[i], (double)(i % 2));
  }
  CMat b = a * x;
  CMat got = CMat::solve(a, b);
  CHECK(CMat::max_abs_diff(got, x) < 1e-12);
}

TEST_CASE("as_permutation recognizes permutations and rejects near-misses") {
  CMat p(3, 3);
  p.at(0, 1) = 1.0;
  p.at(1, 2) = 1.0;
  p.at(2, 0) = 1.0;
  auto perm = as_permutation(p, 1e-9);
  REQUIRE(perm.size() == 3);
  CHECK(perm[0] == 1);
  CHECK(perm[1] == 2);
  CHECK(perm[2] == 0);

  p.at(0, 0) = 0.5;  // no longer a permutation
  CHECK(as_permutation(p, 1e-9).empty());

  CMat two(2, 2);
  two.at(0, 0) = 1.0;
  two.at(0, 1) = 1.0;  // row with two ones
  two.at(1, 0) = 1.0;
  CHECK(as_permutation(two, 1e-9).empty());
}

TEST_CASE("max_abs and max_abs_diff") {
  CMat a(2, 2), b(2, 2);
  a.at(0, 1) = cplx(0, -3);
  b.at(0, 1) = cplx(0, -3);
  b.at(1, 0) = 1e-3;
  CHECK(a.max_abs() == 3.0);
  CHECK(CMat::max_abs_diff(a, b) == doctest::Approx(1e-3));
}
