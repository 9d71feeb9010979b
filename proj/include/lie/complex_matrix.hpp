#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lie {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The single carrier for algebra and
/// group elements throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_size(const ComplexMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ComplexMatrix adjoint() const;   // conjugate transpose
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);
ComplexMatrix operator-(ComplexMatrix a);

/// LU factorization with partial pivoting.
struct LuFactors {
  ComplexMatrix lu;            // packed L (unit diagonal) and U
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LuFactors lu_factor(const ComplexMatrix& a);
ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& rhs);
ComplexMatrix inverse(const ComplexMatrix& a);
cplx determinant(const ComplexMatrix& a);

}  // namespace lie
