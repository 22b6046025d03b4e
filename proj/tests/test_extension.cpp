#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "mipf/error.hpp"
#include "mipf/extension.hpp"
#include "mipf/fusion.hpp"

using namespace mipf;

namespace {

double max_imag(const CMat& m) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m.at(i, j).imag()));
  return worst;
}

ExtendedTheory extend_dinv(int rtilde, int M) {
  const auto parent = modular_data({Family::AffineD2, rtilde * M * M});
  const Mipf m = build_dinv(Family::AffineD2, rtilde, M);
  return extended_modular_data(*parent, block_decompose(m));
}

}  // namespace

TEST_CASE("block extensions of the even orthogonal series reproduce the "
          "low-rank theories") {
  for (int rt : {1, 2, 3, 5})
    for (int M : {3, 5}) {
      if (rt * M * M > 75) continue;
      const CloneReport rep = clone_check(rt, M);
      INFO("rtilde=", rt, " M=", M);
      CHECK(rep.pass(1e-8));
      CHECK(rep.block_count == rt + 7);
      CHECK(rep.r == rt * M * M);
      CHECK(rep.solve_residual <= 1e-10);
      CHECK(rep.spinor_shift == Rat((long long)rt * (M * M - 1), 8));
    }
}

TEST_CASE("extending by the diagonal invariant returns the theory itself") {
  const auto md = modular_data({Family::AffineD2, 6});
  const auto ext =
      extended_modular_data(*md, block_decompose(diagonal_invariant(*md)));
  REQUIRE(ext.data.n == md->n);
  CHECK(CMat::max_abs_diff(ext.data.S, md->S) == 0.0);
  for (int i = 0; i < md->n; ++i) CHECK(ext.data.h[i] == md->h[i]);
}

TEST_CASE("pure automorphism invariants cannot be block-decomposed") {
  const auto md = modular_data({Family::CircleU1, 5});
  try {
    (void)block_decompose(charge_conjugation_invariant(*md));
    FAIL("expected a refusal");
  } catch (const MipfError& e) {
    CHECK(e.kind == ErrKind::AutomorphismType);
  }
}

TEST_CASE("fixed-point blocks decompose but refuse extension") {
  const Mipf m = build_scinv(Family::AffineD2, 8);
  const BlockDecomposition dec = block_decompose(m);
  CHECK(dec.mult == std::vector<long long>{1, 1, 2, 2, 1, 2});
  const auto md = modular_data({Family::AffineD2, 8});
  try {
    (void)extended_modular_data(*md, dec);
    FAIL("expected a refusal");
  } catch (const MipfError& e) {
    CHECK(e.kind == ErrKind::FixedPoint);
  }
}

TEST_CASE("extension S-matrix is real exactly when the target rank is even") {
  CHECK(max_imag(extend_dinv(2, 3).data.S) == 0.0);
  CHECK(max_imag(extend_dinv(3, 3).data.S) > 1e-3);
}

TEST_CASE("extension block labels, weights, and currents") {
  const ExtendedTheory ext = extend_dinv(2, 3);
  const int vv = ext.data.index_of("VV+A(12)");
  CHECK(ext.data.h[vv] == Rat(1));
  const FusionRing ring = verlinde(ext.data);
  CHECK(ring.is_simple_current(vv));
  CHECK(ext.data.labels[0].substr(0, 2) == "O+");
}

TEST_CASE("meromorphic reduction of the odd orthogonal series") {
  const MeromorphicReport r3 = meromorphic_chain(3);
  CHECK(r3.intermediate_count == 4);
  CHECK(r3.intermediate_weights ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(1, 2), Rat(1)});
  CHECK(r3.all_simple_currents);
  CHECK(r3.chosen_current.find("SpV") != std::string::npos);
  CHECK(r3.final_count == 1);
  CHECK(r3.c == Rat(8));

  const MeromorphicReport r5 = meromorphic_chain(5);
  CHECK(r5.intermediate_count == 4);
  CHECK(r5.intermediate_weights ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(3, 2), Rat(2)});
  CHECK(r5.final_count == 1);
  CHECK(r5.c == Rat(24));
}
