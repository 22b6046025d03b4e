// Exact q-expansions: Dedekind eta, Jacobi theta constants, the three
// square-root blocks of the twisted sectors, and the characters of the
// c = 1 theories.  Everything is an integer-coefficient QSeries, so
// integrality of state counts is checked by construction — a fractional
// coefficient throws instead of rounding.

#ifndef MIPF_CHARACTERS_HPP
#define MIPF_CHARACTERS_HPP

#include <vector>

#include "mipf/qseries.hpp"
#include "mipf/rational.hpp"

namespace mipf {

// q^{1/24} ∏_{n≥1} (1−q^n)
QSeries eta(const Rat& cutoff);

// θ₂ = 2 q^{1/8} ∏ (1−q^n)(1+q^n)²
// θ₃ = ∏ (1−q^n)(1+q^{n−1/2})²
// θ₄ = ∏ (1−q^n)(1−q^{n−1/2})²
QSeries theta2(const Rat& cutoff);
QSeries theta3(const Rat& cutoff);
QSeries theta4(const Rat& cutoff);

// The twisted-sector building blocks
//   A = √(η/θ₄),  B = √(η/θ₃),  D = √(2η/θ₂),
// computed by integer square root of the exact quotient series (θ₂'s
// prefactor 2q^{1/8} is peeled off before inverting, since only a ±1
// leading coefficient can be inverted integrally).
QSeries block_a(const Rat& cutoff);
QSeries block_b(const Rat& cutoff);
QSeries block_d(const Rat& cutoff);

// Σ_{n∈ℤ} q^{(2rn+j)²/(4r)}
QSeries circle_theta(int r, int j, const Rat& cutoff);

// Circle primary j = 0..2r−1: Θ_{j,r}/η, leading exponent h_j − 1/24.
QSeries circle_character(int r, int j, const Rat& cutoff);

// All r+7 orbifold characters in enumeration order
// [0],[V],[S],[C],[σ],[σ̃],[σ'],[σ̃'],[1]..[r−1]:
//   χ_[0],[V] = (χ^circle_0 ± D)/2,  χ_[S] = χ_[C] = Θ_{r,r}/(2η),
//   χ_[σ] = χ_[σ̃] = (A+B)/2,  χ_[σ'] = χ_[σ̃'] = (A−B)/2,
//   χ_[ℓ] = Θ_{ℓ,r}/η.
// Every division by two is exact (checked), and each leading exponent is
// h − 1/24.
std::vector<QSeries> orbifold_characters(int r, const Rat& cutoff);

}  // namespace mipf

#endif  // MIPF_CHARACTERS_HPP
