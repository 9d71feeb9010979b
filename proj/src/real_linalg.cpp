#include "lie/real_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lie/error.hpp"

namespace lie {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

double RealMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& o) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& o) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::bad_input, "real matrix size mismatch in *");
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RealMatrix operator*(double s, RealMatrix a) { return a *= s; }

std::vector<double> operator*(const RealMatrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size()) fail(ErrorCode::bad_input, "real matvec size mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

RealMatrix cholesky(const RealMatrix& a) {
  const std::size_t n = a.rows();
  RealMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0) fail(ErrorCode::numeric, "cholesky: matrix not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

std::vector<double> forward_subst(const RealMatrix& l, const std::vector<double>& b) {
  const std::size_t n = l.rows();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * y[j];
    y[i] = s / l(i, i);
  }
  return y;
}

std::vector<double> back_subst_t(const RealMatrix& l, const std::vector<double>& b) {
  const std::size_t n = l.rows();
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= l(j, ii) * x[j];
    x[ii] = s / l(ii, ii);
  }
  return x;
}

std::vector<double> cholesky_solve(const RealMatrix& l, const std::vector<double>& b) {
  return back_subst_t(l, forward_subst(l, b));
}

RealMatrix qr_r_factor(const RealMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RealMatrix w = a;
  for (std::size_t k = 0; k < n && k + 1 < m; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k; i < m; ++i) alpha += w(i, k) * w(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (w(k, k) > 0.0) alpha = -alpha;
    std::vector<double> v(m, 0.0);
    for (std::size_t i = k; i < m; ++i) v[i] = w(i, k);
    v[k] -= alpha;
    double vn2 = 0.0;
    for (std::size_t i = k; i < m; ++i) vn2 += v[i] * v[i];
    if (vn2 == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += v[i] * w(i, j);
      s *= 2.0 / vn2;
      for (std::size_t i = k; i < m; ++i) w(i, j) -= s * v[i];
    }
  }
  RealMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r(i, j) = w(i, j);
  return r;
}

Svd jacobi_svd(const RealMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RealMatrix u = a;
  RealMatrix v = RealMatrix::identity(n);
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          app += u(i, p) * u(i, p);
          aqq += u(i, q) * u(i, q);
          apq += u(i, p) * u(i, q);
        }
        if (std::abs(apq) <= 1e-30 ||
            std::abs(apq) <= 1e-16 * std::sqrt(app * aqq))
          continue;
        rotated = true;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < m; ++i) {
          const double up = u(i, p), uq = u(i, q);
          u(i, p) = c * up - s * uq;
          u(i, q) = s * up + c * uq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += u(i, j) * u(i, j);
    sigma[j] = std::sqrt(s);
  }
  // sort descending, permute v accordingly
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });
  Svd out;
  out.sigma.resize(n);
  out.v = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.sigma[j] = sigma[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<std::vector<double>> null_space(const RealMatrix& a, double rel_tol) {
  const std::size_t n = a.cols();
  if (n == 0) return {};
  // QR prepass keeps the Jacobi sweep on an n x n matrix.
  const RealMatrix r = (a.rows() > n) ? qr_r_factor(a) : a;
  Svd s = jacobi_svd(r);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  std::vector<std::vector<double>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (s.sigma[j] <= rel_tol * smax) {
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = s.v(i, j);
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

SymEigen sym_eig(const RealMatrix& a) {
  const std::size_t n = a.rows();
  RealMatrix w = a;
  RealMatrix v = RealMatrix::identity(n);
  const double scale = std::max(w.frobenius_norm(), 1e-300);
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * w(i, j) * w(i, j);
    if (std::sqrt(off) <= 1e-14 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double tau = (w(q, q) - w(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double wkp = w(k, p), wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double wpk = w(p, k), wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return w(x, x) < w(y, y); });
  SymEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace lie
