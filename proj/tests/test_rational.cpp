#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mipf/rational.hpp"

using cplx = std::complex<double>;

using namespace mipf;

TEST_CASE("rational arithmetic reduces and normalizes signs") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK((Rat(1, 6) + Rat(1, 3)) == Rat(1, 2));
  CHECK((Rat(1, 2) - Rat(2, 3)) == Rat(-1, 6));
  CHECK((Rat(3, 4) * Rat(2, 9)) == Rat(1, 6));
  CHECK((Rat(3, 4) / Rat(9, 2)) == Rat(1, 6));
  CHECK(Rat(7, 3).num() == 7);
  CHECK(Rat(7, 3).den() == 3);
  CHECK_THROWS_AS(Rat(1, 2) / Rat(0), std::exception);
}

TEST_CASE("mod1 lands in [0,1)") {
  CHECK(Rat(7, 3).mod1() == Rat(1, 3));
  CHECK(Rat(-1, 4).mod1() == Rat(3, 4));
  CHECK(Rat(-9, 4).mod1() == Rat(3, 4));
  CHECK(Rat(5).mod1() == Rat(0));
  CHECK(Rat(0).mod1() == Rat(0));
}

TEST_CASE("string form is p/q with integers bare") {
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(-1, 16).str() == "-1/16");
  CHECK(Rat(7).str() == "7");
  CHECK(Rat(0).str() == "0");
}

TEST_CASE("comparison and integer detection") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(!(Rat(1, 2) < Rat(1, 2)));
  CHECK(Rat(4, 2).is_integer());
  CHECK(!Rat(1, 16).is_integer());
}

TEST_CASE("unit_phase is exact on the special angles") {
  // These must be bit-exact, not approximately equal: permutation
  // invariance of closed-form S matrices relies on it.
  CHECK(unit_phase(Rat(0)) == cplx(1.0, 0.0));
  CHECK(unit_phase(Rat(1, 2)) == cplx(-1.0, 0.0));
  CHECK(unit_phase(Rat(1, 4)) == cplx(0.0, 1.0));
  CHECK(unit_phase(Rat(3, 4)) == cplx(0.0, -1.0));
  CHECK(cos2pi(Rat(1, 4)) == 0.0);
  CHECK(sin2pi(Rat(1, 2)) == 0.0);
  CHECK(cos2pi(Rat(1, 2)) == -1.0);
}

TEST_CASE("unit_phase folding is consistent across equivalent angles") {
  // e^{2πi x} must give identical doubles for x and x+1, and conjugate
  // doubles for -x.
  for (long long n = 1; n <= 48; ++n) {
    const Rat x(n, 49);
    const cplx a = unit_phase(x);
    CHECK(a == unit_phase(x + Rat(1)));
    const cplx b = unit_phase(Rat(0) - x);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == -b.imag());
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-15);
  }
}
