// Verlinde fusion rules, simple currents, monodromy charges, and
// fusion-ring isomorphism testing.

#ifndef MIPF_FUSION_HPP
#define MIPF_FUSION_HPP

#include <optional>
#include <vector>

#include "mipf/matrix.hpp"
#include "mipf/modular_data.hpp"
#include "mipf/rational.hpp"

namespace mipf {

struct FusionRing {
  int n = 0;
  std::vector<int> N;       // N_{ab}^c at ((a·n)+b)·n+c
  std::vector<int> conj;    // ā, from N_{ab}^0 = δ_{b,ā}

  int at(int a, int b, int c) const { return N[(size_t(a) * n + b) * n + c]; }
  int& at(int a, int b, int c) { return N[(size_t(a) * n + b) * n + c]; }

  // unique fusion image under a simple current J (throws if not unique)
  int current_image(int J, int a) const;
  bool is_simple_current(int a) const;
  std::vector<int> simple_currents() const;
  int current_order(int J) const;  // smallest k ≥ 1 with J^k = 0 (vacuum)

  // quantum dimensions from the Perron–Frobenius eigenvalue of each N_a
  std::vector<double> quantum_dimensions() const;
};

// Worst distance of any Verlinde coefficient from a non-negative integer.
double verlinde_integrality_residual(const CMat& S);

// N_{ab}^c = Σ_m S_{am}S_{bm}S*_{cm}/S_{0m}, rounded; throws
// ErrKind::Verification if the rounding residual exceeds eps or an entry
// rounds negative.
FusionRing verlinde(const ModularData& md, double eps = 1e-7);

// Q_J(a) = h(J) + h(a) − h(J·a) mod 1, exact.
Rat monodromy_charge(const ModularData& md, const FusionRing& ring, int J, int a);

// A bijection π with N1_{ab}^c = N2_{πa,πb}^{πc}, or nullopt.  Backtracking
// over candidate images constrained by quantum dimension and fusion
// signatures; symmetric in its arguments up to inversion of the bijection.
std::optional<std::vector<int>> fusion_isomorphic(const FusionRing& r1,
                                                  const FusionRing& r2);

}  // namespace mipf

#endif  // MIPF_FUSION_HPP
