#include "doctest.h"

#include "mipf/error.hpp"
#include "mipf/zspectrum.hpp"

using namespace mipf;

namespace {

const Rat kCut(6);

ZSpectrum diag_spectrum(const char* spec, const Rat& cutoff) {
  const auto md = modular_data(parse_theory(spec));
  return z_from_mipf(*md, diagonal_invariant(*md), cutoff);
}

}  // namespace

TEST_CASE("diagonal circle invariants match the self-dual-line lattice sums") {
  for (int r : {1, 2, 3, 5, 8}) {
    const std::string spec = "u1:" + std::to_string(r);
    // R² = 2r: p = r, q = 1
    CHECK(diag_spectrum(spec.c_str(), kCut) ==
          geometric_circle_spectrum(r, 1, kCut));
  }
}

TEST_CASE("diagonal orbifold invariants match the quotient construction") {
  for (int r : {1, 2, 3, 5, 8}) {
    const std::string spec = "orb:" + std::to_string(r);
    CHECK(diag_spectrum(spec.c_str(), kCut) ==
          geometric_orbifold_spectrum(r, 1, kCut));
  }
}

TEST_CASE("automorphism invariants of u1:6 land on rational radius points") {
  const auto md = modular_data({Family::CircleU1, 6});
  const auto ring = verlinde(*md);
  // J = 4 pairs a with 5a: the R² = 2·(2/3) compactification
  const Mipf m4 = simple_current_invariant(*md, ring, 4);
  const ZSpectrum z4 = z_from_mipf(*md, m4, kCut);
  CHECK(z4 == geometric_circle_spectrum(2, 3, kCut));
  CHECK(integer_spins(z4));
  // J = 6 pairs a with 7a: R² = 2·(3/2)
  const Mipf m6 = simple_current_invariant(*md, ring, 6);
  CHECK(z_from_mipf(*md, m6, kCut) == geometric_circle_spectrum(3, 2, kCut));
  // charge conjugation is T-duality: R² = 2/6
  const Mipf mc = charge_conjugation_invariant(*md);
  CHECK(z_from_mipf(*md, mc, kCut) == geometric_circle_spectrum(1, 6, kCut));
}

TEST_CASE("block invariant on orb:9 reproduces the rank-1 orbifold") {
  const auto parent = modular_data({Family::OrbifoldC1, 9});
  const Mipf m = build_dinv(Family::OrbifoldC1, 1, 3);
  const ZSpectrum lhs = z_from_mipf(*parent, m, kCut);
  CHECK(lhs == diag_spectrum("orb:1", kCut));
  CHECK(!lhs.states.empty());
}

TEST_CASE("state counts and spot multiplicities") {
  const ZSpectrum z = geometric_circle_spectrum(2, 3, kCut);
  CHECK(z.states.size() == 115);
  // vacuum
  CHECK(z.states.front() == ZState{Rat(0), Rat(0), 1});
  // two U(1) currents on each side
  bool found = false;
  for (const auto& st : z.states)
    if (st.hl == Rat(1) && st.hr == Rat(0)) {
      found = true;
      CHECK(st.mult == 1);
    }
  CHECK(found);
}

TEST_CASE("non-coprime radius parameters are refused") {
  CHECK_THROWS_AS((void)geometric_circle_spectrum(2, 4, kCut), MipfError);
  CHECK_THROWS_AS((void)geometric_orbifold_spectrum(3, 9, kCut), MipfError);
}

TEST_CASE("state-level expansion is a c = 1 facility") {
  const auto md = modular_data({Family::AffineD2, 5});
  try {
    (void)z_from_mipf(*md, diagonal_invariant(*md), kCut);
    FAIL("expected a refusal");
  } catch (const MipfError& e) {
    CHECK(e.kind == ErrKind::InvalidInput);
  }
}

TEST_CASE("integer spin detection") {
  ZSpectrum z{Rat(2), {{Rat(1, 2), Rat(1, 2), 1}, {Rat(1), Rat(0), 2}}};
  CHECK(integer_spins(z));
  z.states.push_back({Rat(1, 16), Rat(0), 1});
  CHECK(!integer_spins(z));
}
