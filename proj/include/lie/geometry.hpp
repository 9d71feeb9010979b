#pragma once

#include <cstdint>
#include <vector>

#include "lie/cartan.hpp"
#include "lie/weyl.hpp"

namespace lie {

enum class MetricKind { trace_form, minus_killing, custom };

/// Positive-definite ad-invariant inner product on an algebra, stored as a
/// Gram matrix in the algebra basis.
class BiInvariantMetric {
 public:
  static BiInvariantMetric trace_form(const LieAlgebra& L);
  static BiInvariantMetric minus_killing(const LieAlgebra& L);
  static BiInvariantMetric custom(const LieAlgebra& L, RealMatrix gram);

  const LieAlgebra& algebra() const { return algebra_; }
  MetricKind kind() const { return kind_; }
  const RealMatrix& gram() const { return gram_; }

  double inner(const std::vector<double>& x, const std::vector<double>& y) const;
  /// Orthonormal coordinate basis for this metric.
  const std::vector<std::vector<double>>& orthonormal_basis() const {
    return frame_;
  }

 private:
  BiInvariantMetric(LieAlgebra algebra, RealMatrix gram, MetricKind kind);
  void validate() const;

  LieAlgebra algebra_;
  RealMatrix gram_;
  MetricKind kind_;
  std::vector<std::vector<double>> frame_;
};

/// Levi-Civita connection of a bi-invariant metric on constant fields:
/// half the bracket.
std::vector<double> levi_civita(const BiInvariantMetric& m,
                                const std::vector<double>& x,
                                const std::vector<double>& y);

/// Curvature tensor R(X, Y) Z = 1/4 [[X, Y], Z].
std::vector<double> curvature_tensor(const BiInvariantMetric& m,
                                     const std::vector<double>& x,
                                     const std::vector<double>& y,
                                     const std::vector<double>& z);

/// Sectional curvature of the plane spanned by two independent vectors.
double sectional(const BiInvariantMetric& m, const std::vector<double>& x,
                 const std::vector<double>& y);

/// Ricci curvature via the trace definition, cross-checked against
/// -1/4 B(X, Y). Only the trace-form and minus-Killing metrics are
/// supported.
double ricci(const BiInvariantMetric& m, const std::vector<double>& x,
             const std::vector<double>& y);

/// Einstein constant of a simple algebra: Ric = lambda <.,.>.
double einstein_constant(const LieAlgebra& L, const BiInvariantMetric& m);

/// Shape operator data of a regular adjoint orbit through Z with
/// equivariant normal direction N: per positive root the eigenvalue
/// -a(N)/a(Z) with the root plane as eigenspace.
struct OrbitShape {
  std::vector<double> base;    // Z, Cartan coordinates
  std::vector<double> normal;  // N, Cartan coordinates
  struct Eigenpair {
    int positive_index;  // index into rs.positive
    double value;
  };
  std::vector<Eigenpair> eigenpairs;  // multiplicity 2 each (the root plane)
};

OrbitShape orbit_shape_operator(const RootSystem& rs, const BiInvariantMetric& m,
                                const std::vector<double>& z,
                                const std::vector<double>& n);

/// Weyl-canonical Cartan representative of an arbitrary algebra element,
/// by eigen-normalizing within the classical family and canonicalizing the
/// resulting torus element.
std::vector<double> canonical_cartan_form(const RootSystem& rs,
                                          const WeylGroup& w,
                                          const ComplexMatrix& y);

struct ParallelOrbitReport {
  bool pass = false;
  std::vector<double> canonical;  // canonical form of Z + N
  std::size_t orbit_dim = 0;      // dimension of the orbit of Z
  std::size_t endpoint_orbit_dim = 0;
  std::vector<int> endpoint_vanishing;  // positive roots vanishing on Z + N
  double max_deviation = 0.0;
  int samples = 0;
};

/// Equifocality in the flat ambient: pushing the orbit of Z along the
/// equivariant field built from N lands on the single orbit of Z + N.
ParallelOrbitReport parallel_orbit_check(const RootSystem& rs,
                                         const WeylGroup& w,
                                         const std::vector<double>& z,
                                         const std::vector<double>& n,
                                         int samples, std::uint64_t seed = 7);

}  // namespace lie
