// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates.  Conformal weights, central charges and q-series exponents in
// this project are rationals with small denominators (divisors of 48·r or so),
// so 64 bits of headroom is plenty; every operation still checks for overflow
// and throws rather than silently wrapping.
//
// The other job of this header is turning rational phases into complex
// numbers deterministically: unit_phase(x) evaluates e^{2πi·x} after reducing
// x mod 1 exactly.  Two S-matrix entries that are equal as rationals therefore
// come out bit-identical as doubles, which is what lets permutation-invariance
// residuals vanish exactly instead of hovering at rounding level.

#ifndef MIPF_RATIONAL_HPP
#define MIPF_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mipf {

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d);  // normalizes; throws on d == 0

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws on division by zero

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  bool is_integer() const { return den_ == 1; }
  double to_double() const { return double(num_) / double(den_); }

  // Representative of this value mod 1 in [0, 1).
  Rat mod1() const;

  // "p/q" for non-integers, "p" for integers.  parse() accepts both forms.
  std::string str() const;
  static Rat parse(const std::string& s);

 private:
  long long num_;
  long long den_;  // > 0 always
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// e^{2πi·x} with x reduced mod 1 before any floating-point work.
std::complex<double> unit_phase(const Rat& x);

// cos(2π·x) / sin(2π·x), same exact pre-reduction.
double cos2pi(const Rat& x);
double sin2pi(const Rat& x);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);  // throws on overflow

}  // namespace mipf

#endif  // MIPF_RATIONAL_HPP
