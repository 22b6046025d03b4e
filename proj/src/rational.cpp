#include "mipf/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace mipf {

namespace {

using i128 = __int128;

long long checked_ll(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error(std::string("rational overflow in ") + what);
  return (long long)v;
}

}  // namespace

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  long long g = gcd_ll(a, b);
  return checked_ll(i128(a / g) * i128(b), "lcm");
}

Rat::Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

void Rat::normalize() {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = gcd_ll(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  // Reduce crosswise first so the 128-bit intermediates stay small.
  long long g = gcd_ll(den_, o.den_);
  i128 n = i128(num_) * (o.den_ / g) + i128(o.num_) * (den_ / g);
  i128 d = i128(den_ / g) * o.den_;
  i128 gg = 1;
  {
    i128 a = n < 0 ? -n : n, b = d;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    gg = a ? a : 1;
  }
  num_ = checked_ll(n / gg, "add");
  den_ = checked_ll(d / gg, "add");
  if (num_ == 0) den_ = 1;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  long long g1 = gcd_ll(num_, o.den_);
  long long g2 = gcd_ll(o.num_, den_);
  i128 n = i128(num_ / g1) * (o.num_ / g2);
  i128 d = i128(den_ / g2) * (o.den_ / g1);
  num_ = checked_ll(n, "mul");
  den_ = checked_ll(d, "mul");
  if (num_ == 0) den_ = 1;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  Rat inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

bool operator<(const Rat& a, const Rat& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rat Rat::mod1() const {
  long long m = num_ % den_;
  if (m < 0) m += den_;
  Rat r;
  r.num_ = m;
  r.den_ = den_;
  r.normalize();
  return r;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::complex<double> unit_phase(const Rat& x) {
  return {cos2pi(x), sin2pi(x)};
}

// Exact special values first, so that e.g. S-matrix zeros are really 0.0 and
// the many ±1/√N entries that differ only by sign are bit-identical.
double cos2pi(const Rat& x) {
  Rat m = x.mod1();  // in [0,1)
  if (m.den() == 1) return 1.0;
  if (m.den() == 2) return -1.0;
  if (m.den() == 4) return 0.0;
  // fold into [0, 1/2] for sign stability: cos(2π(1-t)) = cos(2πt)
  if (Rat(1) - m < m) m = Rat(1) - m;
  // fold cos(2π(1/2 - t)) = -cos(2πt) so the argument is ≤ π/2
  if (m > Rat(1, 4)) return -std::cos(2.0 * std::numbers::pi * (Rat(1, 2) - m).to_double());
  return std::cos(2.0 * std::numbers::pi * m.to_double());
}

double sin2pi(const Rat& x) {
  Rat m = x.mod1();
  if (m.den() == 1 || m.den() == 2) return 0.0;
  if (m == Rat(1, 4)) return 1.0;
  if (m == Rat(3, 4)) return -1.0;
  // sin(2π(1-t)) = -sin(2πt)
  if (Rat(1) - m < m) return -sin2pi(Rat(1) - m);
  if (m > Rat(1, 4)) return std::cos(2.0 * std::numbers::pi * (m - Rat(1, 4)).to_double());
  return std::sin(2.0 * std::numbers::pi * m.to_double());
}

}  // namespace mipf
