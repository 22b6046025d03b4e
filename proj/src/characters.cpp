#include "mipf/characters.hpp"

#include "mipf/error.hpp"

namespace mipf {

namespace {

// ∏_{n≥1} (1−q^n), truncated at the cutoff.
QSeries euler_product(const Rat& cutoff) {
  QSeries p = QSeries::monomial(Rat(0), 1, cutoff);
  for (long long n = 1; Rat(n) < cutoff; ++n)
    p = p * QSeries::from_terms({{Rat(0), 1}, {Rat(n), -1}}, cutoff);
  return p;
}

// ∏ (1+q^n)², the θ₂ product with its 2q^{1/8}∏(1−q^n) part factored out.
QSeries theta2_unit(const Rat& cutoff) {
  QSeries p = QSeries::monomial(Rat(0), 1, cutoff);
  for (long long n = 1; Rat(n) < cutoff; ++n) {
    QSeries f = QSeries::from_terms({{Rat(0), 1}, {Rat(n), 1}}, cutoff);
    p = p * f * f;
  }
  return p;
}

// ∏ (1 ± q^{n−1/2})²
QSeries half_odd_square(const Rat& cutoff, long long sign) {
  QSeries p = QSeries::monomial(Rat(0), 1, cutoff);
  for (long long n = 1; Rat(2 * n - 1, 2) < cutoff; ++n) {
    QSeries f =
        QSeries::from_terms({{Rat(0), 1}, {Rat(2 * n - 1, 2), sign}}, cutoff);
    p = p * f * f;
  }
  return p;
}

}  // namespace

QSeries eta(const Rat& cutoff) {
  return euler_product(cutoff - Rat(1, 24)).shifted(Rat(1, 24));
}

QSeries theta2(const Rat& cutoff) {
  const Rat inner = cutoff - Rat(1, 8);
  return (euler_product(inner) * theta2_unit(inner))
      .scaled(2)
      .shifted(Rat(1, 8));
}

QSeries theta3(const Rat& cutoff) {
  return euler_product(cutoff) * half_odd_square(cutoff, +1);
}

QSeries theta4(const Rat& cutoff) {
  return euler_product(cutoff) * half_odd_square(cutoff, -1);
}

QSeries block_a(const Rat& cutoff) {
  // η/θ₄ = q^{1/24} ∏(1−q^{n−1/2})^{−2}: the ∏(1−q^n) parts cancel exactly.
  const Rat inner = cutoff - Rat(1, 48);
  return half_odd_square(inner, -1).inverse().sqrt().shifted(Rat(1, 48));
}

QSeries block_b(const Rat& cutoff) {
  const Rat inner = cutoff - Rat(1, 48);
  return half_odd_square(inner, +1).inverse().sqrt().shifted(Rat(1, 48));
}

QSeries block_d(const Rat& cutoff) {
  // 2η/θ₂ = q^{−1/12} ∏(1+q^n)^{−2}
  const Rat inner = cutoff + Rat(1, 24);
  return theta2_unit(inner).inverse().sqrt().shifted(Rat(-1, 24));
}

QSeries circle_theta(int r, int j, const Rat& cutoff) {
  if (r < 1) throw MipfError(ErrKind::InvalidInput, "circle_theta needs r >= 1");
  std::vector<std::pair<Rat, long long>> terms;
  for (long long n = 0;; ++n) {
    const long long up = 2 * (long long)r * n + j;
    const long long dn = -2 * (long long)r * (n + 1) + j;
    const Rat e_up = Rat(up * up, 4 * (long long)r);
    const Rat e_dn = Rat(dn * dn, 4 * (long long)r);
    bool any = false;
    if (e_up < cutoff) terms.push_back({e_up, 1}), any = true;
    if (e_dn < cutoff) terms.push_back({e_dn, 1}), any = true;
    if (!any) break;
  }
  return QSeries::from_terms(std::move(terms), cutoff);
}

QSeries circle_character(int r, int j, const Rat& cutoff) {
  // Honest bound: multiplying by η^{-1} (lead −1/24) costs 1/24 of range.
  const Rat pad = cutoff + Rat(1, 24);
  return circle_theta(r, j, pad) * eta(pad).inverse();
}

std::vector<QSeries> orbifold_characters(int r, const Rat& cutoff) {
  if (r < 1)
    throw MipfError(ErrKind::InvalidInput,
                    "orbifold characters need r >= 1");
  const Rat pad = cutoff + Rat(1, 24);
  const QSeries eta_inv = eta(pad).inverse();
  const QSeries chi0 = circle_theta(r, 0, pad) * eta_inv;
  const QSeries d = block_d(pad);
  const QSeries a = block_a(pad);
  const QSeries b = block_b(pad);

  std::vector<QSeries> chi;
  chi.push_back((chi0 + d).div_exact(2));  // [0]
  chi.push_back((chi0 - d).div_exact(2));  // [V]
  const QSeries spin = (circle_theta(r, r, pad) * eta_inv).div_exact(2);
  chi.push_back(spin);  // [S]
  chi.push_back(spin);  // [C]
  const QSeries tw = (a + b).div_exact(2);
  const QSeries twp = (a - b).div_exact(2);
  chi.push_back(tw);   // [σ]
  chi.push_back(tw);   // [σ̃]
  chi.push_back(twp);  // [σ']
  chi.push_back(twp);  // [σ̃']
  for (int l = 1; l <= r - 1; ++l)
    chi.push_back(circle_theta(r, l, pad) * eta_inv);
  return chi;
}

}  // namespace mipf
