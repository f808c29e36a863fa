#pragma once

#include <vector>

#include "mvsf/gauss_rational.hpp"

namespace mvsf {

// Dense matrix over the Gaussian rationals, sized for representation
// matrices and small exact solves.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussRational& at(int r, int c) { return a_[r * cols_ + c]; }
  const GaussRational& at(int r, int c) const { return a_[r * cols_ + c]; }

  bool isZero() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const GaussRational& c) const;
  QMatrix adjoint() const;  // conjugate transpose

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<GaussRational> a_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rowReduce(std::vector<std::vector<GaussRational>>& m);

// Solve A x = b exactly. Returns the unique solution; throws
// std::runtime_error when the system is inconsistent or underdetermined.
std::vector<GaussRational> solveExact(const QMatrix& A, const std::vector<GaussRational>& b);

// Basis of the right nullspace of A.
std::vector<std::vector<GaussRational>> nullspace(const QMatrix& A);

}  // namespace mvsf
