#include "mipf/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace mipf {

CMat CMat::identity(int n) {
  CMat r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1.0;
  return r;
}

CMat CMat::transpose() const {
  CMat r(m_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CMat CMat::conj() const {
  CMat r(n_, m_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) r.at(i, j) = std::conj(at(i, j));
  return r;
}

CMat CMat::dagger() const { return conj().transpose(); }

CMat operator*(const CMat& a, const CMat& b) {
  if (a.m_ != b.n_) throw std::invalid_argument("matrix product shape mismatch");
  CMat r(a.n_, b.m_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.m_; ++k) {
      cplx aik = a.at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.m_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

CMat operator-(const CMat& a, const CMat& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_)
    throw std::invalid_argument("matrix difference shape mismatch");
  CMat r(a.n_, a.m_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

CMat operator+(const CMat& a, const CMat& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_)
    throw std::invalid_argument("matrix sum shape mismatch");
  CMat r(a.n_, a.m_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

double CMat::max_abs_diff(const CMat& a, const CMat& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_)
    throw std::invalid_argument("residual shape mismatch");
  double r = 0.0;
  for (size_t i = 0; i < a.a_.size(); ++i)
    r = std::max(r, std::abs(a.a_[i] - b.a_[i]));
  return r;
}

double CMat::max_abs() const {
  double r = 0.0;
  for (const cplx& v : a_) r = std::max(r, std::abs(v));
  return r;
}

CMat CMat::solve(CMat a, CMat b) {
  if (a.n_ != a.m_ || a.n_ != b.n_)
    throw std::invalid_argument("solve shape mismatch");
  int n = a.n_, m = b.m_;
  double scale = a.max_abs();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(a.at(i, col)) > std::abs(a.at(piv, col))) piv = i;
    if (std::abs(a.at(piv, col)) < 1e-12 * scale)
      throw std::runtime_error("singular system in CMat::solve");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(piv, j));
      for (int j = 0; j < m; ++j) std::swap(b.at(col, j), b.at(piv, j));
    }
    for (int i = col + 1; i < n; ++i) {
      cplx f = a.at(i, col) / a.at(col, col);
      if (f == cplx(0.0, 0.0)) continue;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
      for (int j = 0; j < m; ++j) b.at(i, j) -= f * b.at(col, j);
    }
  }
  CMat x(n, m);
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < m; ++j) {
      cplx s = b.at(i, j);
      for (int k = i + 1; k < n; ++k) s -= a.at(i, k) * x.at(k, j);
      x.at(i, j) = s / a.at(i, i);
    }
  return x;
}

double unitarity_residual(const CMat& s) {
  return CMat::max_abs_diff(s * s.dagger(), CMat::identity(s.rows()));
}

std::vector<int> as_permutation(const CMat& m, double eps) {
  int n = m.rows();
  if (n != m.cols()) return {};
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = std::abs(m.at(i, j));
      if (std::abs(v - 1.0) <= eps) {
        if (std::abs(m.at(i, j).real() - 1.0) > eps ||
            std::abs(m.at(i, j).imag()) > eps)
          return {};  // modulus one but not +1: not a 0/1 permutation
        if (perm[i] != -1 || used[j]) return {};
        perm[i] = j;
        used[j] = true;
      } else if (v > eps) {
        return {};
      }
    }
    if (perm[i] == -1) return {};
  }
  return perm;
}

}  // namespace mipf
