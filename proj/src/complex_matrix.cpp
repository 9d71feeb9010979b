#include "lie/complex_matrix.hpp"

#include <cmath>

#include "lie/error.hpp"

namespace lie {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (!same_size(o)) fail(ErrorCode::bad_input, "matrix size mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (!same_size(o)) fail(ErrorCode::bad_input, "matrix size mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::bad_input, "matrix size mismatch in *");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= cplx(s, 0.0); }
ComplexMatrix operator-(ComplexMatrix a) { return a *= cplx(-1.0, 0.0); }

LuFactors lu_factor(const ComplexMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::bad_input, "lu_factor: matrix not square");
  const std::size_t n = a.rows();
  LuFactors f;
  f.lu = a;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

  const double scale = a.max_abs();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(f.lu(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best <= 1e-300 || best <= 1e-15 * scale) {
      f.singular = true;
      return f;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      cplx m = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& rhs) {
  if (f.singular) fail(ErrorCode::bad_input, "lu_solve: singular matrix");
  const std::size_t n = f.lu.rows();
  if (rhs.rows() != n) fail(ErrorCode::bad_input, "lu_solve: rhs size mismatch");
  ComplexMatrix x(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    // forward substitution on permuted rhs
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = rhs(f.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x(j, c);
      x(i, c) = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      cplx s = x(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x(j, c);
      x(ii, c) = s / f.lu(ii, ii);
    }
  }
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  LuFactors f = lu_factor(a);
  if (f.singular) fail(ErrorCode::bad_input, "inverse: singular matrix");
  return lu_solve(f, ComplexMatrix::identity(a.rows()));
}

cplx determinant(const ComplexMatrix& a) {
  LuFactors f = lu_factor(a);
  if (f.singular) return cplx(0.0, 0.0);
  cplx d(static_cast<double>(f.sign), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

}  // namespace lie
