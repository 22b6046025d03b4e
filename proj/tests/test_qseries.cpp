#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "mipf/characters.hpp"
#include "mipf/qseries.hpp"

using namespace mipf;

TEST_CASE("series arithmetic and coefficient access") {
  const Rat C(10);
  QSeries a = QSeries::from_terms({{Rat(0), 1}, {Rat(1), -2}, {Rat(3), 5}}, C);
  QSeries b = QSeries::monomial(Rat(1), 2, C);
  QSeries s = a + b;
  CHECK(s.coeff(Rat(0)) == 1);
  CHECK(s.coeff(Rat(1)) == 0);
  CHECK(s.coeff(Rat(3)) == 5);
  QSeries p = a * b;
  CHECK(p.coeff(Rat(1)) == 2);
  CHECK(p.coeff(Rat(2)) == -4);
  CHECK(p.coeff(Rat(4)) == 10);
  CHECK(p.lead() == Rat(1));
}

TEST_CASE("coefficients past the cutoff are refused, not invented") {
  QSeries a = QSeries::monomial(Rat(0), 1, Rat(3));
  CHECK(a.coeff(Rat(2)) == 0);
  CHECK_THROWS_AS(a.coeff(Rat(3)), std::exception);
  // products propagate the honest bound
  QSeries b = QSeries::monomial(Rat(2), 1, Rat(5));
  QSeries p = a * b;  // known only below 2+3 = 5
  CHECK(p.cutoff() == Rat(5));
  CHECK_THROWS_AS(p.coeff(Rat(5)), std::exception);
}

TEST_CASE("eta matches the pentagonal-number expansion") {
  // q^{-1/24} η = Σ_k (−1)^k q^{k(3k−1)/2} over all integers k.
  const Rat C(40);
  QSeries e = eta(C);
  std::vector<std::pair<Rat, long long>> terms;
  for (long long k = -6; k <= 6; ++k) {
    const Rat ex = Rat(k * (3 * k - 1), 2) + Rat(1, 24);
    if (ex < C) terms.push_back({ex, (k % 2 == 0) ? 1 : -1});
  }
  CHECK(e == QSeries::from_terms(terms, C));
}

TEST_CASE("inverse and sqrt round-trip") {
  const Rat C(12);
  QSeries e = eta(C);
  QSeries inv = e.inverse();
  QSeries one = e * inv;
  CHECK(one.coeff(Rat(0)) == 1);
  for (long long n = 1; n < 11; ++n) CHECK(one.coeff(Rat(n)) == 0);

  QSeries sq = e * e;
  QSeries back = sq.sqrt();
  CHECK(back == e);
}

TEST_CASE("sqrt demands a square leading coefficient") {
  QSeries two = QSeries::monomial(Rat(0), 2, Rat(5));
  CHECK_THROWS_AS(two.sqrt(), std::exception);
  QSeries four = QSeries::from_terms({{Rat(0), 4}, {Rat(1), 4}}, Rat(5));
  QSeries r = four.sqrt();
  CHECK(r.coeff(Rat(0)) == 2);
  CHECK(r.coeff(Rat(1)) == 1);
}

TEST_CASE("div_exact verifies integrality") {
  QSeries a = QSeries::from_terms({{Rat(0), 2}, {Rat(1), 4}}, Rat(3));
  QSeries h = a.div_exact(2);
  CHECK(h.coeff(Rat(0)) == 1);
  CHECK(h.coeff(Rat(1)) == 2);
  QSeries odd = QSeries::from_terms({{Rat(0), 2}, {Rat(1), 3}}, Rat(3));
  CHECK_THROWS_AS(odd.div_exact(2), std::exception);
}

TEST_CASE("shifted moves lead and cutoff together") {
  QSeries a = QSeries::monomial(Rat(1, 2), 3, Rat(4));
  QSeries s = a.shifted(Rat(1, 3));
  CHECK(s.lead() == Rat(5, 6));
  CHECK(s.cutoff() == Rat(4) + Rat(1, 3));
  CHECK(s.coeff(Rat(5, 6)) == 3);
}

TEST_CASE("equality compares up to the common cutoff") {
  QSeries a = QSeries::monomial(Rat(0), 1, Rat(3));
  QSeries b = QSeries::from_terms({{Rat(0), 1}, {Rat(4), 9}}, Rat(5));
  CHECK(a == b);  // they agree below 3, the only region both know
  QSeries c = QSeries::from_terms({{Rat(0), 1}, {Rat(2), 9}}, Rat(5));
  CHECK(!(a == c));
}
