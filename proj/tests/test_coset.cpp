#include "doctest.h"

#include <set>

#include "mipf/coset.hpp"
#include "mipf/error.hpp"
#include "mipf/modular_data.hpp"

using namespace mipf;

TEST_CASE("D-type dictionary covers every orbifold primary exactly once") {
  for (int r : {2, 3, 4, 5, 8}) {
    const auto dict = coset_dictionary(Series::D, r);
    CHECK(dict.orb_r == r);
    const auto orb_md = modular_data({Family::OrbifoldC1, r});
    REQUIRE((int)dict.entries.size() == orb_md->n);
    std::set<int> seen;
    for (const auto& e : dict.entries) {
      CHECK(seen.insert(e.orb_index).second);
      CHECK(e.copy == 0);
    }
    CHECK(dict.identification_currents.size() == 3);
    CHECK_FALSE(dict.identification_has_fixed_points);
  }
}

TEST_CASE("B-type dictionary: fixed points split into ladder pairs") {
  for (int s : {1, 2}) {
    const auto dict = coset_dictionary(Series::B, s);
    const int L = 2 * s + 1;
    CHECK(dict.orb_r == 2 * L);
    const auto orb_md = modular_data({Family::OrbifoldC1, 2 * L});
    REQUIRE((int)dict.entries.size() == orb_md->n);
    std::set<int> seen;
    int split = 0;
    for (const auto& e : dict.entries) {
      CHECK(seen.insert(e.orb_index).second);
      if (e.copy != 0) ++split;
    }
    // each fixed point (s,s;A(ℓ)), ℓ = 1..s, contributes two copies
    CHECK(split == 2 * s);
    CHECK(dict.identification_currents.size() == 1);
    CHECK(dict.identification_currents[0] ==
          std::array<std::string, 3>{"v", "v", "VV"});
    CHECK(dict.identification_has_fixed_points);
  }
}

TEST_CASE("weight congruences hold exactly on sampled dictionaries") {
  for (int r : {2, 3, 4, 5, 6, 7, 8})
    CHECK(dictionary_weight_check(coset_dictionary(Series::D, r)) ==
          modular_data({Family::OrbifoldC1, r})->n);
  for (int s : {1, 2})
    CHECK(dictionary_weight_check(coset_dictionary(Series::B, s)) ==
          modular_data({Family::OrbifoldC1, 2 * (2 * s + 1)})->n);
}

TEST_CASE("dictionary spot entries") {
  const auto d6 = coset_dictionary(Series::D, 6);  // even rank
  // twists pair one spinor slot with the other chirality
  bool found = false;
  for (const auto& e : d6.entries)
    if (e.orb_index == orb::Sg) {
      found = true;
      CHECK(e.x1 == "0");
      CHECK(e.x2 == "s");
      CHECK(e.y == "S");
    }
  CHECK(found);

  const auto b1 = coset_dictionary(Series::B, 1);  // orbifold r = 6, L = 3
  for (const auto& e : b1.entries) {
    if (e.orb_index == orb::ell(3)) {  // [L] from (s,s;O)
      CHECK(e.x1 == "s");
      CHECK(e.x2 == "s");
      CHECK(e.y == "O");
    }
    if (e.orb_index == orb::ell(1)) {  // odd ℓ: (0,0;A(ℓ)) lands on [2L−2ℓ]
      CHECK(e.y == "A(1)");
      CHECK(e.copy != 0);
    }
  }
}

TEST_CASE("invalid ranks are refused") {
  CHECK_THROWS_AS((void)coset_dictionary(Series::D, 1), MipfError);
  CHECK_THROWS_AS((void)coset_dictionary(Series::B, 0), MipfError);
}
