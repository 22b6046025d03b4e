// Extension-type invariants as new theories: block extraction, the extended
// (S, T) pair, clone certification against the low-rank target, and the
// two-step meromorphic reduction of the B-series.

#ifndef MIPF_EXTENSION_HPP
#define MIPF_EXTENSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "mipf/invariants.hpp"
#include "mipf/modular_data.hpp"
#include "mipf/rational.hpp"

namespace mipf {

// M = Σ_I mult_I · b_I b_Iᵀ with non-negative integer block vectors b_I,
// vacuum block first, blocks ordered by their smallest member.
struct BlockDecomposition {
  std::vector<std::vector<long long>> blocks;
  std::vector<long long> mult;
  int count() const { return (int)blocks.size(); }
};

// Factor an extension-type invariant into blocks (greedy on the smallest
// remaining diagonal entry, with backtracking over (coefficient,
// multiplicity) factorizations).  Throws ErrKind::AutomorphismType when the
// remainder is a pure permutation part (nonzero with an empty diagonal —
// nothing to extend), ErrKind::Verification when no factorization exists.
BlockDecomposition block_decompose(const Mipf& m);

struct ExtendedTheory {
  BlockDecomposition dec;
  // Full modular data of the extension: labels are "+"-joins of the block
  // members, h is the exact weight of each block's lowest member, c is
  // inherited from the parent.  Validated against the complete invariant
  // set before being returned.
  ModularData data;
  double solve_residual = 0.0;  // ‖S_parent·B − B·S_ext‖ over the full system
};

// Solve S_parent·B = B·S_ext exactly on a pivoted row subset and validate
// on the full system.  Requires every multiplicity to be 1: resolving
// multiplicity-2 blocks needs fixed-point data beyond the parent S, so that
// case raises ErrKind::FixedPoint instead of guessing.
ExtendedTheory extended_modular_data(const ModularData& parent,
                                     const BlockDecomposition& dec,
                                     double eps = 1e-9);

// Certification that the extension of build_dinv(r̃, M) reproduces the
// rank-r̃ theory: fusion-ring isomorphism, S-matrix equality under the found
// bijection, and the exact weight shift of the spinor-type field.
struct CloneReport {
  int rtilde = 0, M = 0, r = 0;
  int block_count = 0;
  double solve_residual = 0.0;
  bool iso_found = false;
  std::vector<int> bijection;      // extension index -> target index
  double s_match_residual = 0.0;
  std::vector<Rat> weights_ext;    // exact block weights, extension order
  std::vector<Rat> weights_target; // target weights under the bijection
  Rat spinor_shift;                // h_ext − h_target at the spinor-type field
  Rat spinor_shift_expected;       // r̃(M²−1)/8
  bool pass(double eps) const {
    return iso_found && s_match_residual <= eps &&
           spinor_shift == spinor_shift_expected;
  }
};

// Target: AffineD2(r̃) for r̃ ≥ 2, OrbifoldC1(1) for r̃ = 1 (the rank-1 slot
// of the D tower).  Parent: AffineD2(r̃M²).
CloneReport clone_check(int rtilde, int M, double eps = 1e-8);

// build_b_series(1, M) → extension (4 primaries, all simple currents,
// weights {0, 1, (M²−1)/16, (M²+7)/16}) → extension by the integer-spin
// spinor current → single primary.
struct MeromorphicReport {
  int M = 0;
  int intermediate_count = 0;
  std::vector<Rat> intermediate_weights;
  bool all_simple_currents = false;
  std::string chosen_current;      // label of the integer-spin spinor field
  int final_count = 0;
  Rat c;
};

MeromorphicReport meromorphic_chain(int M, double eps = 1e-9);

}  // namespace mipf

#endif  // MIPF_EXTENSION_HPP
