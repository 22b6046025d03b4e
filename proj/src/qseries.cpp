#include "mipf/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mipf {

namespace {

// ceil of a rational
long long rat_ceil(const Rat& r) {
  long long q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() > 0) ++q;
  return q;
}

}  // namespace

long long QSeries::slots(const Rat& lead, const Rat& cutoff, long long den) {
  if (!(lead < cutoff)) return 0;
  Rat span = (cutoff - lead) * Rat(den);
  long long k = rat_ceil(span);
  if (k < 0) k = 0;
  if (k > 4'000'000)
    throw std::length_error("q-series truncation span too large");
  return k;
}

void QSeries::normalize() {
  long long keep = slots(lead_, cutoff_, den_);
  if ((long long)c_.size() > keep) c_.resize(keep);
  size_t lz = 0;
  while (lz < c_.size() && c_[lz] == 0) ++lz;
  if (lz == c_.size()) {
    c_.clear();
    lead_ = cutoff_;
    den_ = 1;
    return;
  }
  if (lz > 0) {
    c_.erase(c_.begin(), c_.begin() + lz);
    lead_ += Rat((long long)lz, den_);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QSeries QSeries::zero(const Rat& cutoff) {
  QSeries s;
  s.lead_ = cutoff;
  s.cutoff_ = cutoff;
  return s;
}

QSeries QSeries::monomial(const Rat& e, long long c, const Rat& cutoff) {
  QSeries s;
  s.cutoff_ = cutoff;
  if (c == 0 || !(e < cutoff)) {
    s.lead_ = cutoff;
    return s;
  }
  s.lead_ = e;
  s.den_ = 1;
  s.c_ = {c};
  return s;
}

QSeries QSeries::from_terms(std::vector<std::pair<Rat, long long>> terms,
                            const Rat& cutoff) {
  QSeries acc = zero(cutoff);
  if (terms.empty()) return acc;
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  long long den = 1;
  Rat lead = terms.front().first;
  for (const auto& [e, c] : terms) {
    (void)c;
    den = lcm_ll(den, (e - lead).den());
  }
  acc.lead_ = lead;
  acc.den_ = den;
  acc.c_.assign(slots(lead, cutoff, den), 0);
  for (const auto& [e, c] : terms) {
    if (!(e < cutoff)) continue;
    Rat off = (e - lead) * Rat(den);
    if (off.den() != 1 || off.num() < 0)
      throw std::logic_error("from_terms grid inconsistency");
    if (off.num() < (long long)acc.c_.size()) acc.c_[off.num()] += c;
  }
  acc.normalize();
  return acc;
}

long long QSeries::lead_coeff() const {
  if (c_.empty()) throw std::domain_error("lead_coeff of zero series");
  return c_.front();
}

long long QSeries::coeff(const Rat& e) const {
  if (!(e < cutoff_))
    throw std::out_of_range("q-series coefficient past truncation at q^" + e.str());
  if (c_.empty() || e < lead_) return 0;
  Rat off = (e - lead_) * Rat(den_);
  if (off.den() != 1) return 0;
  long long k = off.num();
  if (k < 0 || k >= (long long)c_.size()) return 0;
  return c_[k];
}

std::vector<std::pair<Rat, long long>> QSeries::terms() const {
  std::vector<std::pair<Rat, long long>> t;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) t.emplace_back(lead_ + Rat((long long)k, den_), c_[k]);
  return t;
}

QSeries QSeries::operator+(const QSeries& o) const {
  Rat cutoff = std::min(cutoff_, o.cutoff_);
  if (c_.empty() && o.c_.empty()) return zero(cutoff);
  if (c_.empty()) {
    QSeries r = o;
    r.cutoff_ = cutoff;
    r.normalize();
    return r;
  }
  if (o.c_.empty()) {
    QSeries r = *this;
    r.cutoff_ = cutoff;
    r.normalize();
    return r;
  }
  Rat lead = std::min(lead_, o.lead_);
  long long den = lcm_ll(den_, o.den_);
  den = lcm_ll(den, (lead_ - lead).den());
  den = lcm_ll(den, (o.lead_ - lead).den());
  QSeries r;
  r.lead_ = lead;
  r.den_ = den;
  r.cutoff_ = cutoff;
  r.c_.assign(slots(lead, cutoff, den), 0);
  auto fold = [&](const QSeries& s) {
    Rat base = (s.lead_ - lead) * Rat(den);
    long long b = base.num();  // base.den()==1 by den construction
    long long f = den / s.den_;
    for (size_t k = 0; k < s.c_.size(); ++k) {
      long long idx = b + (long long)k * f;
      if (idx >= 0 && idx < (long long)r.c_.size()) r.c_[idx] += s.c_[k];
    }
  };
  fold(*this);
  fold(o);
  r.normalize();
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(-1); }

QSeries QSeries::operator*(const QSeries& o) const {
  if (c_.empty() || o.c_.empty()) {
    // 0·f is known wherever 0 is known, shifted by the other lead — but with
    // an unknown factor the only safe bound is the usual product rule using
    // the zero's own cutoff as its lead.
    Rat cutoff = std::min(lead_ + o.cutoff_, o.lead_ + cutoff_);
    return zero(cutoff);
  }
  Rat lead = lead_ + o.lead_;
  Rat cutoff = std::min(lead_ + o.cutoff_, o.lead_ + cutoff_);
  long long den = lcm_ll(den_, o.den_);
  QSeries r;
  r.lead_ = lead;
  r.den_ = den;
  r.cutoff_ = cutoff;
  r.c_.assign(slots(lead, cutoff, den), 0);
  long long f1 = den / den_, f2 = den / o.den_;
  // sparse×sparse convolution: only walk nonzero coefficients
  std::vector<std::pair<long long, long long>> nza, nzb;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k]) nza.emplace_back((long long)k * f1, c_[k]);
  for (size_t k = 0; k < o.c_.size(); ++k)
    if (o.c_[k]) nzb.emplace_back((long long)k * f2, o.c_[k]);
  long long K = (long long)r.c_.size();
  for (const auto& [ia, va] : nza) {
    if (ia >= K) break;
    for (const auto& [ib, vb] : nzb) {
      long long idx = ia + ib;
      if (idx >= K) break;
      r.c_[idx] += va * vb;
    }
  }
  r.normalize();
  return r;
}

QSeries QSeries::scaled(long long k) const {
  QSeries r = *this;
  if (k == 0) return zero(cutoff_);
  for (long long& v : r.c_) v *= k;
  return r;
}

QSeries QSeries::div_exact(long long k) const {
  if (k == 0) throw std::domain_error("div_exact by zero");
  QSeries r = *this;
  for (long long& v : r.c_) {
    if (v % k != 0)
      throw std::domain_error("non-integral coefficient in exact division by " +
                              std::to_string(k));
    v /= k;
  }
  return r;
}

QSeries QSeries::shifted(const Rat& e) const {
  QSeries r = *this;
  r.lead_ += e;
  r.cutoff_ += e;
  return r;
}

QSeries QSeries::inverse() const {
  if (c_.empty()) throw std::domain_error("inverse of zero series");
  long long c0 = c_.front();
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("series inverse needs unit leading coefficient");
  long long rel = (long long)c_.size();
  long long K = slots(Rat(0), cutoff_ - lead_, den_);
  if (K < rel) K = rel;
  std::vector<long long> b(K, 0);
  b[0] = c0;  // 1/c0 with c0 = ±1
  for (long long k = 1; k < K; ++k) {
    long long s = 0;
    for (long long i = 1; i <= k && i < (long long)c_.size(); ++i)
      s += c_[i] * b[k - i];
    b[k] = -c0 * s;
  }
  QSeries r;
  r.lead_ = -lead_;
  r.den_ = den_;
  r.cutoff_ = cutoff_ - lead_ - lead_;
  r.c_ = std::move(b);
  r.normalize();
  return r;
}

QSeries QSeries::sqrt() const {
  if (c_.empty()) throw std::domain_error("sqrt of zero series (truncated)");
  long long c0 = c_.front();
  long long s0 = 0;
  while (s0 * s0 < c0) ++s0;
  if (c0 <= 0 || s0 * s0 != c0)
    throw std::domain_error("series sqrt needs a positive square leading coefficient");
  long long K = (long long)c_.size();
  std::vector<long long> s(K, 0);
  s[0] = s0;  // positive branch
  for (long long k = 1; k < K; ++k) {
    long long acc = c_[k];
    for (long long i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    if (acc % (2 * s0) != 0)
      throw std::domain_error("series sqrt left the integer lattice");
    s[k] = acc / (2 * s0);
  }
  QSeries r;
  r.lead_ = lead_ / Rat(2);
  r.den_ = den_;
  // relative precision is preserved: cutoff − lead stays the same
  r.cutoff_ = r.lead_ + (cutoff_ - lead_);
  r.c_ = std::move(s);
  r.normalize();
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  Rat cutoff = std::min(cutoff_, o.cutoff_);
  auto ta = terms(), tb = o.terms();
  auto trim = [&](std::vector<std::pair<Rat, long long>>& t) {
    t.erase(std::remove_if(t.begin(), t.end(),
                           [&](const auto& p) { return !(p.first < cutoff); }),
            t.end());
  };
  trim(ta);
  trim(tb);
  return ta == tb;
}

std::string QSeries::str() const {
  if (c_.empty()) return "O(q^" + cutoff_.str() + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long a = c >= 0 ? c : -c;
    if (a != 1 || e == Rat(0)) os << a;
    if (e != Rat(0)) {
      if (a != 1) os << "*";
      os << "q^(" << e.str() << ")";
    }
    first = false;
  }
  os << " + O(q^" << cutoff_.str() << ")";
  return os.str();
}

}  // namespace mipf
