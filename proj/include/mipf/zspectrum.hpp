// State-level spectra Z(q,q̄) = Σ mult(h_L,h_R) q^{h_L−c/24} q̄^{h_R−c/24}:
// assembled either from a modular invariant on a c = 1 family or directly
// from compactification data (rational R² = 2p/q), so the two routes can be
// compared as exact multisets.

#ifndef MIPF_ZSPECTRUM_HPP
#define MIPF_ZSPECTRUM_HPP

#include <vector>

#include "mipf/invariants.hpp"
#include "mipf/modular_data.hpp"
#include "mipf/rational.hpp"

namespace mipf {

struct ZState {
  Rat hl, hr;
  long long mult = 0;
  bool operator==(const ZState&) const = default;
};

// States with h_L + h_R ≤ cutoff, sorted by (h_L, h_R), multiplicities > 0.
// All exponents are exact rationals; equality of spectra is multiset
// equality, no floating point anywhere.
struct ZSpectrum {
  Rat cutoff;
  std::vector<ZState> states;
  bool operator==(const ZSpectrum&) const = default;
};

// True when every state has h_L − h_R ∈ ℤ (required of physical invariants).
bool integer_spins(const ZSpectrum& z);

// Expand Σ_{ij} M_{ij} χ_i(q) χ̄_j(q̄) for a c = 1 theory.  The affine
// families have no character support here, so they are refused.
ZSpectrum z_from_mipf(const ModularData& md, const Mipf& m, const Rat& cutoff);

// Free boson at R² = 2p/q (gcd(p,q) = 1): momentum/winding lattice
// h_L = (mq+wp)²/4pq, h_R = (mq−wp)²/4pq dressed with a pair of oscillator
// towers.
ZSpectrum geometric_circle_spectrum(long long p, long long q,
                                    const Rat& cutoff);

// Its Z₂ quotient: 2·Z_orb = Z_circle + |D|² + 2|A|² + 2|B|², accumulated in
// integers and halved (the evenness of every count is checked, and is itself
// a nontrivial consistency statement).
ZSpectrum geometric_orbifold_spectrum(long long p, long long q,
                                      const Rat& cutoff);

}  // namespace mipf

#endif  // MIPF_ZSPECTRUM_HPP
