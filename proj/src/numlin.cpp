#include "lie/numlin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "lie/error.hpp"

namespace lie {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || !a.same_size(b))
    fail(ErrorCode::bad_input, "commutator: inputs must be square and of equal size");
  return a * b - b * a;
}

double frobenius_real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_size(b))
    fail(ErrorCode::bad_input, "frobenius_real_inner: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s += a(i, j).real() * b(i, j).real() + a(i, j).imag() * b(i, j).imag();
  return s;
}

namespace {

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Degree-13 Pade approximant of exp on a matrix scaled into its
// accuracy region.
ComplexMatrix pade13(const ComplexMatrix& a) {
  static const std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  ComplexMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                         b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                    b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  LuFactors f = lu_factor(v - u);
  if (f.singular) fail(ErrorCode::numeric, "mat_exp: Pade denominator singular");
  return lu_solve(f, v + u);
}

}  // namespace

ComplexMatrix mat_exp(const ComplexMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::bad_input, "mat_exp: matrix not square");
  if (!a.all_finite()) fail(ErrorCode::bad_input, "mat_exp: non-finite entries");
  const double theta13 = 5.371920351148152;
  const double nrm = one_norm(a);
  int s = 0;
  if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  ComplexMatrix x = a;
  if (s > 0) x *= cplx(std::ldexp(1.0, -s), 0.0);
  ComplexMatrix e = pade13(x);
  for (int k = 0; k < s; ++k) e = e * e;
  return e;
}

namespace {

// Gauss-Legendre nodes and weights on [0, 1], by Newton iteration on the
// Legendre polynomial.
void gauss_legendre01(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(m);
  weights.resize(m);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double p0, p1, dp;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = 0.5 * (1.0 + x);
    weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Denman-Beavers iteration for the principal square root. Breaks down
// (detectably) when the spectrum touches the closed negative real axis.
ComplexMatrix sqrt_db(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  ComplexMatrix y = a;
  ComplexMatrix z = ComplexMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1.0);
  for (int it = 0; it < 60; ++it) {
    LuFactors fy = lu_factor(y);
    LuFactors fz = lu_factor(z);
    if (fy.singular || fz.singular)
      fail(ErrorCode::bad_input,
           "mat_log_principal: spectrum on the negative real axis (square root breakdown)");
    ComplexMatrix yinv = lu_solve(fy, ComplexMatrix::identity(n));
    ComplexMatrix zinv = lu_solve(fz, ComplexMatrix::identity(n));
    ComplexMatrix ynext = 0.5 * (y + zinv);
    ComplexMatrix znext = 0.5 * (z + yinv);
    double step = (ynext - y).frobenius_norm();
    y = ynext;
    z = znext;
    if (!y.all_finite() || y.frobenius_norm() > 1e12 * scale)
      fail(ErrorCode::bad_input, "mat_log_principal: square root iteration diverged");
    if (step <= 1e-14 * std::max(y.frobenius_norm(), 1.0)) return y;
  }
  fail(ErrorCode::bad_input,
       "mat_log_principal: square root iteration did not converge "
       "(spectrum near the branch cut)");
}

}  // namespace

ComplexMatrix mat_log_principal(const ComplexMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::bad_input, "mat_log_principal: matrix not square");
  if (!a.all_finite()) fail(ErrorCode::bad_input, "mat_log_principal: non-finite entries");
  const std::size_t n = a.rows();
  {
    LuFactors f = lu_factor(a);
    if (f.singular) fail(ErrorCode::bad_input, "mat_log_principal: singular matrix");
  }
  const ComplexMatrix id = ComplexMatrix::identity(n);

  ComplexMatrix x = a;
  int k = 0;
  while ((x - id).frobenius_norm() > 0.125) {
    if (k >= 50)
      fail(ErrorCode::bad_input, "mat_log_principal: inverse scaling did not contract");
    x = sqrt_db(x);
    ++k;
  }

  // Pade of log(I + Y) in Gauss-Legendre partial fraction form.
  const ComplexMatrix y = x - id;
  struct Quadrature {
    std::vector<double> nodes, weights;
  };
  static const Quadrature quad = [] {
    Quadrature q;
    gauss_legendre01(8, q.nodes, q.weights);
    return q;
  }();
  const std::vector<double>& nodes = quad.nodes;
  const std::vector<double>& weights = quad.weights;
  ComplexMatrix logx(n, n);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    ComplexMatrix denom = id + cplx(nodes[j], 0.0) * y;
    LuFactors f = lu_factor(denom);
    if (f.singular) fail(ErrorCode::numeric, "mat_log_principal: quadrature solve failed");
    logx += cplx(weights[j], 0.0) * (y * lu_solve(f, id));
  }
  logx *= cplx(std::ldexp(1.0, k), 0.0);
  return logx;
}

HermitianEigen herm_eig(const ComplexMatrix& h) {
  if (!h.is_square()) fail(ErrorCode::bad_input, "herm_eig: matrix not square");
  const std::size_t n = h.rows();
  const double scale = std::max(h.frobenius_norm(), 1e-300);
  if ((h - h.adjoint()).frobenius_norm() > 1e-10 * (1.0 + h.frobenius_norm()))
    fail(ErrorCode::bad_input, "herm_eig: input not Hermitian");

  ComplexMatrix w = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(w(i, j));
    if (std::sqrt(off) <= 1e-14 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx beta = w(p, q);
        const double babs = std::abs(beta);
        if (babs <= 1e-18 * scale) continue;
        const cplx phase = beta / babs;
        const double alpha = w(p, p).real();
        const double gamma = w(q, q).real();
        // Rotation J: J_pp = c, J_pq = s, J_qp = -conj(s), J_qq = c with
        // s = t*c*phase chosen to annihilate w(p, q).
        const double tau = (gamma - alpha) / (2.0 * babs);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;
        // w <- J* w J, applied as column then row updates
        for (std::size_t i = 0; i < n; ++i) {
          const cplx wip = w(i, p), wiq = w(i, q);
          w(i, p) = c * wip - std::conj(s) * wiq;
          w(i, q) = s * wip + c * wiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx wpj = w(p, j), wqj = w(q, j);
          w(p, j) = c * wpj - s * wqj;
          w(q, j) = std::conj(s) * wpj + c * wqj;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        w(p, p) = cplx(w(p, p).real(), 0.0);
        w(q, q) = cplx(w(q, q).real(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(s) * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return w(x, x).real() < w(y, y).real();
  });
  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace lie
