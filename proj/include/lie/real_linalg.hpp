#pragma once

#include <cstddef>
#include <vector>

namespace lie {

/// Dense real matrix, row-major. Used for coordinate-space operators
/// (ad matrices, Killing forms, Weyl elements).
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const double& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RealMatrix transpose() const;
  double frobenius_norm() const;
  double max_abs() const;

  RealMatrix& operator+=(const RealMatrix& o);
  RealMatrix& operator-=(const RealMatrix& o);
  RealMatrix& operator*=(double s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

RealMatrix operator+(RealMatrix a, const RealMatrix& b);
RealMatrix operator-(RealMatrix a, const RealMatrix& b);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, RealMatrix a);
std::vector<double> operator*(const RealMatrix& a, const std::vector<double>& x);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);

/// Cholesky factorization of a symmetric positive-definite matrix, A = L L^T.
/// Fails when the matrix is not numerically positive definite.
RealMatrix cholesky(const RealMatrix& a);

/// Solves L L^T x = b given the Cholesky factor L.
std::vector<double> cholesky_solve(const RealMatrix& l, const std::vector<double>& b);

/// Lower-triangular solve L y = b and transposed solve L^T x = y.
std::vector<double> forward_subst(const RealMatrix& l, const std::vector<double>& b);
std::vector<double> back_subst_t(const RealMatrix& l, const std::vector<double>& b);

/// R factor of a Householder QR of a (rows >= cols); returns cols x cols.
RealMatrix qr_r_factor(const RealMatrix& a);

struct Svd {
  std::vector<double> sigma;  // descending
  RealMatrix v;               // right singular vectors, columns
};

/// One-sided Jacobi SVD (singular values and right vectors only).
/// Accurate for small singular values, which is what rank decisions need.
Svd jacobi_svd(const RealMatrix& a);

/// Orthonormal basis of the null space of a, relative threshold on the
/// largest singular value.
std::vector<std::vector<double>> null_space(const RealMatrix& a, double rel_tol);

struct SymEigen {
  std::vector<double> eigenvalues;  // ascending
  RealMatrix eigenvectors;          // columns
};

/// Cyclic Jacobi eigensolver for real symmetric matrices.
SymEigen sym_eig(const RealMatrix& a);

}  // namespace lie
