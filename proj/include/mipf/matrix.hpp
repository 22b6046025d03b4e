// Small dense complex matrices.  Everything in this project is at most a few
// hundred rows, so plain row-major storage plus O(n³) routines are fine and
// keep the dependency surface flat.

#ifndef MIPF_MATRIX_HPP
#define MIPF_MATRIX_HPP

#include <complex>
#include <vector>

namespace mipf {

using cplx = std::complex<double>;

class CMat {
 public:
  CMat() : n_(0), m_(0) {}
  CMat(int rows, int cols) : n_(rows), m_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return n_; }
  int cols() const { return m_; }

  cplx& at(int i, int j) { return a_[size_t(i) * m_ + j]; }
  const cplx& at(int i, int j) const { return a_[size_t(i) * m_ + j]; }

  static CMat identity(int n);

  CMat transpose() const;
  CMat conj() const;
  CMat dagger() const;

  friend CMat operator*(const CMat& a, const CMat& b);
  friend CMat operator-(const CMat& a, const CMat& b);
  friend CMat operator+(const CMat& a, const CMat& b);

  // max_{ij} |a_ij - b_ij|
  static double max_abs_diff(const CMat& a, const CMat& b);
  double max_abs() const;

  // Solve A X = B for X (A square, partial-pivot LU).  Throws if A is
  // numerically singular (pivot below 1e-12 of the largest entry).
  static CMat solve(CMat a, CMat b);

 private:
  int n_, m_;
  std::vector<cplx> a_;
};

// ‖S S† − 1‖_maxabs
double unitarity_residual(const CMat& s);

// If |m_ij| is a permutation matrix to within eps, return the permutation as
// perm[i] = j with m_ij ≈ ±1/phase...; here specialised to entries ≈ 1:
// returns empty vector if m is not a 0/1 permutation matrix within eps.
std::vector<int> as_permutation(const CMat& m, double eps);

}  // namespace mipf

#endif  // MIPF_MATRIX_HPP
