// Coset realizations of the c = 1 orbifold lines: the field dictionaries
// mapping (level-1 × level-1) / level-2 triples onto orbifold primaries, and
// the exact weight congruences that certify them.

#ifndef MIPF_COSET_HPP
#define MIPF_COSET_HPP

#include <array>
#include <string>
#include <vector>

#include "mipf/lie.hpp"
#include "mipf/rational.hpp"

namespace mipf {

// One dictionary line: level-1 labels x1, x2 ("0","v","s","c"), level-2
// label y, and the orbifold field the triple represents.  copy = 1,2 marks
// the two fields a split fixed point resolves into; 0 means unsplit.
struct CosetEntry {
  std::string x1, x2, y;
  int orb_index = 0;
  int copy = 0;
};

struct CosetDictionary {
  Series series;  // D: (D_{r,1} × D_{r,1}) / D_{r,2} realizes the rank-r
                  //    orbifold line directly;
                  // B: (B_{s,1} × B_{s,1}) / B_{s,2} realizes the orbifold
                  //    at r = 2(2s+1).
  int rank = 0;
  int orb_r = 0;  // target orbifold parameter
  std::vector<CosetEntry> entries;
  std::vector<std::array<std::string, 3>> identification_currents;
  bool identification_has_fixed_points = false;
};

// The D dictionary depends on the parity of r (the spinor factors migrate
// between the two level-1 slots); the B dictionary splits the fixed points
// of its identification current (s,s;A(ℓ)) into [L−2ℓ] and [L+2ℓ].
CosetDictionary coset_dictionary(Series series, int rank);

// Exact check of h_orb ≡ h(x1) + h(x2) − h(y) (mod 1) on every entry.
// Returns the number of entries verified; throws ErrKind::Verification
// naming the offending triple otherwise.
int dictionary_weight_check(const CosetDictionary& dict);

}  // namespace mipf

#endif  // MIPF_COSET_HPP
