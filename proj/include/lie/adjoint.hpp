#pragma once

#include <vector>

#include "lie/algebra.hpp"
#include "lie/complex_matrix.hpp"
#include "lie/real_linalg.hpp"

namespace lie {

/// Coordinates of Ad(g) X = g X g^{-1}. Fails when the conjugated element
/// leaves the span of the basis, which signals that g is not in the group.
std::vector<double> Ad(const LieAlgebra& L, const ComplexMatrix& g,
                       const std::vector<double>& x);

/// Matrix of Ad(g) on coordinates, column by column.
RealMatrix Ad_operator(const LieAlgebra& L, const ComplexMatrix& g);

/// Matrix of ad(x) on coordinates (alias of LieAlgebra::ad_matrix, the
/// contraction of structure constants).
RealMatrix ad_operator(const LieAlgebra& L, const std::vector<double>& x);

/// Frobenius distance between Ad(exp(X)) and exp(ad(X)) as operators.
double check_ad_exp(const LieAlgebra& L, const std::vector<double>& x);

/// Matrix exponential of a real operator.
RealMatrix mat_exp_real(const RealMatrix& a);

/// Result of a log-log remainder slope fit. When every sampled remainder
/// sits below the exactness floor the pair commutes and the slope is
/// meaningless; `exact` is set instead.
struct SlopeFit {
  bool exact = false;
  double slope = 0.0;
  std::vector<double> t_grid;
  std::vector<double> remainders;
};

/// Order of the product-expansion remainder: fits the slope of
/// log E(t) against log t where E(t) is the distance between
/// log(exp(tX) exp(tY)) and the order-1 or order-2 expansion.
SlopeFit bch_order_estimate(const LieAlgebra& L, const std::vector<double>& x,
                            const std::vector<double>& y, int order);

/// Remainder slopes for the conjugation identities
///   exp(tX) exp(tY) exp(-tX)          vs  tY + t^2 [X, Y]
///   exp(-tX) exp(-tY) exp(tX) exp(tY) vs  t^2 [X, Y]
struct ConjugationCheck {
  SlopeFit conjugation;   // first identity
  SlopeFit group_commutator;  // second identity
};

ConjugationCheck conjugation_triple_check(const LieAlgebra& L,
                                          const std::vector<double>& x,
                                          const std::vector<double>& y);

/// The two conjugation-identity remainders at a single parameter value.
std::pair<double, double> conjugation_residuals(const LieAlgebra& L,
                                                const std::vector<double>& x,
                                                const std::vector<double>& y,
                                                double t);

}  // namespace lie
