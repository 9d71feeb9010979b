#include "lie/adjoint.hpp"

#include <cmath>
#include <functional>

#include "lie/error.hpp"
#include "lie/numlin.hpp"

namespace lie {

std::vector<double> Ad(const LieAlgebra& L, const ComplexMatrix& g,
                       const std::vector<double>& x) {
  ComplexMatrix conj = g * L.element(x) * inverse(g);
  double residual = 0.0;
  std::vector<double> coords = L.coordinates(conj, &residual);
  if (residual > 1e-9 * (1.0 + conj.frobenius_norm()))
    fail(ErrorCode::bad_input,
         "Ad: conjugated element leaves the algebra (g is not in the group)");
  return coords;
}

RealMatrix Ad_operator(const LieAlgebra& L, const ComplexMatrix& g) {
  const std::size_t d = L.dim();
  RealMatrix m(d, d);
  ComplexMatrix ginv = inverse(g);
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix conj = g * L.basis_element(j) * ginv;
    double residual = 0.0;
    std::vector<double> col = L.coordinates(conj, &residual);
    if (residual > 1e-9 * (1.0 + conj.frobenius_norm()))
      fail(ErrorCode::bad_input,
           "Ad_operator: conjugation does not preserve the algebra");
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

RealMatrix ad_operator(const LieAlgebra& L, const std::vector<double>& x) {
  return L.ad_matrix(x);
}

RealMatrix mat_exp_real(const RealMatrix& a) {
  const std::size_t n = a.rows();
  ComplexMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a(i, j);
  ComplexMatrix e = mat_exp(c);
  RealMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e(i, j).real();
  return out;
}

double check_ad_exp(const LieAlgebra& L, const std::vector<double>& x) {
  ComplexMatrix g = mat_exp(L.element(x));
  RealMatrix lhs = Ad_operator(L, g);
  RealMatrix rhs = mat_exp_real(L.ad_matrix(x));
  return (lhs - rhs).frobenius_norm();
}

namespace {

constexpr double kExactFloor = 1e-10;
constexpr double kNoiseFloor = 2.5e-14;  // about 1e2 machine epsilons

SlopeFit fit_remainder(const std::function<double(double)>& remainder) {
  auto sample = [&](double t_top, int points) {
    SlopeFit fit;
    for (int k = 0; k < points; ++k) {
      double t = t_top * std::pow(10.0, -0.25 * k);
      fit.t_grid.push_back(t);
      fit.remainders.push_back(remainder(t));
    }
    return fit;
  };

  SlopeFit fit;
  try {
    fit = sample(1e-1, 9);  // down to 1e-3
  } catch (const Error&) {
    // one retry on a reduced grid when the log hits its branch cut
    fit = sample(1e-2, 9);
  }

  double emax = 0.0;
  for (double e : fit.remainders) emax = std::max(emax, e);
  if (emax < kExactFloor) {
    fit.exact = true;
    return fit;
  }

  std::vector<double> lt, le;
  for (std::size_t i = 0; i < fit.t_grid.size(); ++i) {
    if (fit.remainders[i] < kNoiseFloor) continue;  // below the noise floor
    lt.push_back(std::log(fit.t_grid[i]));
    le.push_back(std::log(fit.remainders[i]));
  }
  if (lt.size() < 3)
    fail(ErrorCode::numeric, "remainder slope fit: too few usable grid points");
  double mt = 0.0, me = 0.0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    mt += lt[i];
    me += le[i];
  }
  mt /= lt.size();
  me /= le.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    num += (lt[i] - mt) * (le[i] - me);
    den += (lt[i] - mt) * (lt[i] - mt);
  }
  fit.slope = num / den;
  return fit;
}

}  // namespace

SlopeFit bch_order_estimate(const LieAlgebra& L, const std::vector<double>& x,
                            const std::vector<double>& y, int order) {
  if (order != 1 && order != 2)
    fail(ErrorCode::argument, "bch_order_estimate: order must be 1 or 2");
  ComplexMatrix mx = L.element(x);
  ComplexMatrix my = L.element(y);
  ComplexMatrix bracket = commutator(mx, my);
  return fit_remainder([&](double t) {
    ComplexMatrix prod = mat_exp(t * mx) * mat_exp(t * my);
    ComplexMatrix lg = mat_log_principal(prod);
    ComplexMatrix expansion = t * (mx + my);
    if (order == 2) expansion += (0.5 * t * t) * bracket;
    return (lg - expansion).frobenius_norm();
  });
}

namespace {

double conjugation_remainder(const ComplexMatrix& mx, const ComplexMatrix& my,
                             const ComplexMatrix& bracket, double t) {
  ComplexMatrix prod = mat_exp(t * mx) * mat_exp(t * my) * mat_exp(-t * mx);
  ComplexMatrix expansion = t * my + (t * t) * bracket;
  return (mat_log_principal(prod) - expansion).frobenius_norm();
}

double commutator_remainder(const ComplexMatrix& mx, const ComplexMatrix& my,
                            const ComplexMatrix& bracket, double t) {
  ComplexMatrix prod = mat_exp(-t * mx) * mat_exp(-t * my) * mat_exp(t * mx) *
                       mat_exp(t * my);
  ComplexMatrix expansion = (t * t) * bracket;
  return (mat_log_principal(prod) - expansion).frobenius_norm();
}

}  // namespace

ConjugationCheck conjugation_triple_check(const LieAlgebra& L,
                                          const std::vector<double>& x,
                                          const std::vector<double>& y) {
  ComplexMatrix mx = L.element(x);
  ComplexMatrix my = L.element(y);
  ComplexMatrix bracket = commutator(mx, my);
  ConjugationCheck out;
  out.conjugation = fit_remainder(
      [&](double t) { return conjugation_remainder(mx, my, bracket, t); });
  out.group_commutator = fit_remainder(
      [&](double t) { return commutator_remainder(mx, my, bracket, t); });
  return out;
}

std::pair<double, double> conjugation_residuals(const LieAlgebra& L,
                                                const std::vector<double>& x,
                                                const std::vector<double>& y,
                                                double t) {
  ComplexMatrix mx = L.element(x);
  ComplexMatrix my = L.element(y);
  ComplexMatrix bracket = commutator(mx, my);
  return {conjugation_remainder(mx, my, bracket, t),
          commutator_remainder(mx, my, bracket, t)};
}

}  // namespace lie
