// Exact truncated q-expansions with rational exponents and 64-bit integer
// coefficients.
//
// A series is stored as a leading exponent `lead`, a step denominator d, and
// coefficients c[k] sitting at exponents lead + k/d.  The leading exponent
// itself does not have to lie on the 1/d grid (a square root halves it), the
// grid only governs the spacing of successive terms.  Every series carries an
// explicit truncation bound `cutoff`: coefficients at exponents < cutoff are
// exact, nothing is claimed at or above it.  Binary operations propagate the
// honest bound (min of cutoffs for sums, min of lead+cutoff cross terms for
// products) so truncation error can never masquerade as a computed value.
//
// Coefficients stay integers throughout.  The few places where halves appear
// (symmetrized characters) go through div_exact(), which throws if a
// coefficient fails to divide — that integrality is a real statement about
// the state counts involved, and the throw is the test.

#ifndef MIPF_QSERIES_HPP
#define MIPF_QSERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "mipf/rational.hpp"

namespace mipf {

class QSeries {
 public:
  // The zero series, known below `cutoff`.
  static QSeries zero(const Rat& cutoff);
  // c·q^e + O(q^cutoff)
  static QSeries monomial(const Rat& e, long long c, const Rat& cutoff);
  static QSeries from_terms(std::vector<std::pair<Rat, long long>> terms,
                            const Rat& cutoff);

  Rat lead() const { return lead_; }
  Rat cutoff() const { return cutoff_; }
  bool is_zero() const { return c_.empty(); }
  // Leading coefficient; throws on the zero series.
  long long lead_coeff() const;

  // Coefficient at exponent e.  Zero if e is below the cutoff but off-grid or
  // past the stored range; throws if e >= cutoff (the value is unknown).
  long long coeff(const Rat& e) const;

  // Nonzero terms, exponent-ascending.
  std::vector<std::pair<Rat, long long>> terms() const;

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(long long k) const;
  QSeries div_exact(long long k) const;  // throws unless k divides every coeff
  QSeries shifted(const Rat& e) const;   // multiply by q^e

  // Reciprocal; requires leading coefficient ±1 (true for every eta/theta
  // unit we ever invert, after the explicit factor-of-two in θ₂ is peeled).
  QSeries inverse() const;

  // Branch with positive leading coefficient; requires the leading
  // coefficient to be a positive perfect square and every recurrence step to
  // stay integral.
  QSeries sqrt() const;

  bool operator==(const QSeries& o) const;

  std::string str() const;

 private:
  Rat lead_;               // exponent of c_[0] (equals cutoff_ for zero)
  long long den_ = 1;      // exponent step is 1/den_
  std::vector<long long> c_;
  Rat cutoff_;

  void normalize();
  static long long slots(const Rat& lead, const Rat& cutoff, long long den);
};

}  // namespace mipf

#endif  // MIPF_QSERIES_HPP
