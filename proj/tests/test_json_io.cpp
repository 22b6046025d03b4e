#include "doctest.h"

#include <string>

#include "json.hpp"

#include "mipf/error.hpp"
#include "mipf/json_io.hpp"

using namespace mipf;

TEST_CASE("invariant files round-trip and re-export byte-identically") {
  const Mipf m = build_dinv(Family::AffineD2, 2, 3);
  const std::string text = mipf_json(m);
  const Mipf back = mipf_from_json(text);
  CHECK(back.theory == m.theory);
  CHECK(back.M == m.M);
  CHECK(back.builder == m.builder);
  CHECK(mipf_json(back) == text);
}

TEST_CASE("malformed invariant files are refused as invalid input") {
  for (const char* bad : {
           "{not json",
           "{\"theory\":\"u1:3\"}",                                // no matrix
           "{\"theory\":\"u1:3\",\"M\":[[1,0],[0]]}",              // ragged
           "{\"theory\":\"u1:3\",\"M\":[]}",                       // empty
           "{\"theory\":\"zz:3\",\"M\":[[1]]}",                    // family
       }) {
    try {
      (void)mipf_from_json(bad);
      FAIL("expected a refusal for: ", bad);
    } catch (const MipfError& e) {
      CHECK(e.kind == ErrKind::InvalidInput);
    }
  }
}

TEST_CASE("corrupted-but-well-formed matrices parse; verification is "
          "a separate step") {
  const auto md = modular_data({Family::CircleU1, 2});
  Mipf m = diagonal_invariant(*md);
  m.M[1][1] = 7;
  const Mipf back = mipf_from_json(mipf_json(m));
  CHECK(back.M[1][1] == 7);
  CHECK_FALSE(verify_invariant(*md, back, 1e-9).pass(1e-9));
}

TEST_CASE("modular data export carries exact weights and full matrices") {
  const auto md = modular_data({Family::AffineB2, 2});
  const auto doc = nlohmann::json::parse(modular_data_json(*md));
  CHECK(doc["theory"] == "B2:2");
  CHECK(doc["c"] == "4");
  REQUIRE(doc["labels"].size() == 6);
  CHECK(doc["labels"][0] == "O");
  CHECK(doc["h"][1] == "1");
  CHECK(doc["h"][4] == "1/4");  // Sp at (L−1)/16 = 4/16
  REQUIRE(doc["S"].size() == 6);
  REQUIRE(doc["S"][0].size() == 6);
  CHECK(doc["S"][0][0].size() == 2);
  CHECK(doc["T"].size() == 6);
}

TEST_CASE("spectrum files are sorted exact-fraction CSV") {
  ZSpectrum z{Rat(2),
              {{Rat(0), Rat(0), 1},
               {Rat(1, 16), Rat(9, 16), 2},
               {Rat(1), Rat(1), 4}}};
  CHECK(zspectrum_csv(z) ==
        "h_L,h_R,multiplicity\n"
        "0,0,1\n"
        "1/16,9/16,2\n"
        "1,1,4\n");
}

TEST_CASE("fusion tables are label-named CSV") {
  const auto md = modular_data({Family::CircleU1, 1});
  const std::string csv = fusion_csv(*md, verlinde(*md));
  CHECK(csv.substr(0, 8) == "a,b,c,N\n");
  CHECK(csv.find("1,1,0,1\n") != std::string::npos);  // j=1 squares to 0
  // the Z₂ group ring has exactly 2·2 nonzero coefficients
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("clone and reduction reports are well-formed JSON") {
  const auto doc =
      nlohmann::json::parse(clone_report_json(clone_check(1, 3)));
  CHECK(doc["params"]["rtilde"] == 1);
  CHECK(doc["params"]["m"] == 3);
  CHECK(doc["params"]["r"] == 9);
  CHECK(doc["block_count"] == 8);
  CHECK(doc["iso_bijection"].size() == 8);
  CHECK(doc["spinor_shift"] == "1");
  CHECK(doc["spinor_shift_expected"] == "1");

  const auto mdoc =
      nlohmann::json::parse(meromorphic_report_json(meromorphic_chain(3)));
  CHECK(mdoc["m"] == 3);
  CHECK(mdoc["final_count"] == 1);
  CHECK(mdoc["c"] == "8");
}
