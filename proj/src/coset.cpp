#include "mipf/coset.hpp"

#include <sstream>

#include "mipf/error.hpp"
#include "mipf/modular_data.hpp"

namespace mipf {

namespace {

std::string a_label(int l) { return "A(" + std::to_string(l) + ")"; }

}  // namespace

CosetDictionary coset_dictionary(Series series, int rank) {
  CosetDictionary dict;
  dict.series = series;
  dict.rank = rank;

  if (series == Series::D) {
    if (rank < 2)
      throw MipfError(ErrKind::InvalidInput,
                      "the D coset dictionary needs rank >= 2");
    const int r = rank;
    dict.orb_r = r;
    const bool odd = (r % 2) != 0;
    auto put = [&](const std::string& x1, const std::string& x2,
                   const std::string& y, int orb_index) {
      dict.entries.push_back({x1, x2, y, orb_index, 0});
    };
    put("0", "0", "O", orb::U);
    put("0", "0", "VV", orb::V);
    // For odd r the two level-2 spinor pairs need a level-1 vector to
    // balance the weights; for even r they close on their own, and the
    // twist fields swap which level-1 spinor accompanies them.
    put("0", odd ? "v" : "0", "SS", orb::S);
    put("0", odd ? "v" : "0", "CC", orb::C);
    put("0", odd ? "c" : "s", "S", orb::Sg);
    put("0", odd ? "s" : "c", "C", orb::SgT);
    put("0", odd ? "c" : "s", "VC", orb::SgP);
    put("0", odd ? "s" : "c", "VS", orb::SgPT);
    for (int l = 1; l <= r - 1; ++l)
      put("0", (l % 2) ? "v" : "0", a_label(l), orb::ell(l));
    dict.identification_currents = {
        {"s", "s", "SS"}, {"c", "c", "CC"}, {"v", "v", "VV"}};
    dict.identification_has_fixed_points = false;
    return dict;
  }

  // B realization: (B_{s,1} × B_{s,1}) / B_{s,2} gives the orbifold at
  // r = 2L, L = 2s+1.  The identification current (v,v;VV) has fixed
  // points (s,s;A(ℓ)), each resolving into the two ladder fields
  // [L−2ℓ] and [L+2ℓ].
  if (rank < 1)
    throw MipfError(ErrKind::InvalidInput,
                    "the B coset dictionary needs rank >= 1");
  const int s = rank;
  const int L = 2 * s + 1;
  dict.orb_r = 2 * L;
  auto put = [&](const std::string& x1, const std::string& x2,
                 const std::string& y, int orb_index, int copy = 0) {
    dict.entries.push_back({x1, x2, y, orb_index, copy});
  };
  put("0", "0", "O", orb::U);
  put("0", "0", "VV", orb::V);
  put("0", "v", "O", orb::S);
  put("v", "0", "O", orb::C);
  put("0", "s", "Sp", orb::Sg);
  put("s", "0", "Sp", orb::SgT);
  put("0", "s", "SpV", orb::SgP);
  put("s", "0", "SpV", orb::SgPT);
  for (int l = 1; l <= s; ++l) {
    const bool even = (l % 2) == 0;
    put("0", "0", a_label(l), orb::ell(even ? 2 * l : 2 * L - 2 * l));
    put("0", "v", a_label(l), orb::ell(even ? 2 * L - 2 * l : 2 * l));
  }
  put("s", "s", "O", orb::ell(L));
  for (int l = 1; l <= s; ++l) {
    put("s", "s", a_label(l), orb::ell(L - 2 * l), 1);
    put("s", "s", a_label(l), orb::ell(L + 2 * l), 2);
  }
  dict.identification_currents = {{"v", "v", "VV"}};
  dict.identification_has_fixed_points = true;
  return dict;
}

int dictionary_weight_check(const CosetDictionary& dict) {
  const auto orb_md = modular_data({Family::OrbifoldC1, dict.orb_r});
  // Every orbifold primary is realized by exactly one triple (the two
  // split-fixed-point copies land on distinct ladder fields).
  if ((int)dict.entries.size() != orb_md->n)
    throw MipfError(ErrKind::Internal, "dictionary entry count is off");

  auto level1 = [&](const std::string& x) {
    return dict.series == Series::D ? level1_weight_d(dict.rank, x)
                                    : level1_weight_b(dict.rank, x);
  };
  int checked = 0;
  for (const CosetEntry& e : dict.entries) {
    const Rat h1 = level1(e.x1);
    const Rat h2 = level1(e.x2);
    const Rat h3 =
        conformal_weight(dict.series, dict.rank,
                         level2_index(dict.series, dict.rank, e.y));
    const Rat lhs = orb_md->h[e.orb_index].mod1();
    const Rat rhs = (h1 + h2 - h3).mod1();
    if (lhs != rhs) {
      std::ostringstream os;
      os << "coset triple (" << e.x1 << "," << e.x2 << ";" << e.y
         << ") -> " << orb_md->labels[e.orb_index]
         << " violates the weight congruence: h_orb mod 1 = " << lhs.str()
         << ", h1+h2-h3 mod 1 = " << rhs.str();
      throw MipfError(ErrKind::Verification, os.str());
    }
    ++checked;
  }
  return checked;
}

}  // namespace mipf
