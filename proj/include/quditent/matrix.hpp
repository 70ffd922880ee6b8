#pragma once

#include <complex>
#include <vector>

namespace quditent {

using cx = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is tiny
// (dimension <= 16), so there is no attempt at blocking or views.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const cx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<cx>& data() { return a_; }
  const std::vector<cx>& data() const { return a_; }

  cx trace() const {
    cx t = 0.0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix adjoint() const {
    CMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  CMatrix conjugate() const {
    CMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
  }

  CMatrix operator*(const CMatrix& b) const {
    CMatrix m(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const cx aik = (*this)(i, k);
        if (aik == cx(0.0)) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  CMatrix operator-(const CMatrix& b) const {
    CMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - b.a_[i];
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cx& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cx> a_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

}  // namespace quditent
