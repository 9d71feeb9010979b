#include "lie/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lie/error.hpp"
#include "lie/numlin.hpp"
#include "lie/rng.hpp"

namespace lie {

BiInvariantMetric::BiInvariantMetric(LieAlgebra algebra, RealMatrix gram,
                                     MetricKind kind)
    : algebra_(std::move(algebra)), gram_(std::move(gram)), kind_(kind) {
  validate();
  // orthonormal frame by Gram-Schmidt of the coordinate directions
  const std::size_t d = algebra_.dim();
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> v(d, 0.0);
    v[i] = 1.0;
    for (const std::vector<double>& u : frame_) {
      double p = inner(u, v);
      for (std::size_t k = 0; k < d; ++k) v[k] -= p * u[k];
    }
    double nn = std::sqrt(std::max(inner(v, v), 0.0));
    for (double& x : v) x /= nn;
    frame_.push_back(std::move(v));
  }
}

void BiInvariantMetric::validate() const {
  const std::size_t d = algebra_.dim();
  if (gram_.rows() != d || gram_.cols() != d)
    fail(ErrorCode::bad_input, "metric Gram matrix has wrong size");
  if (d == 0) return;
  SymEigen e = sym_eig(gram_);
  const double scale = std::max(std::abs(e.eigenvalues.front()),
                                std::abs(e.eigenvalues.back()));
  if (e.eigenvalues.front() <= 1e-10 * scale)
    fail(ErrorCode::bad_input, "metric is not positive definite");

  // ad-skewness spot check
  Rng rng(0x5ca1e);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<double> x(d), y(d), z(d);
    for (double& v : x) v = rng.gaussian();
    for (double& v : y) v = rng.gaussian();
    for (double& v : z) v = rng.gaussian();
    double lhs = dot(algebra_.bracket(x, y), gram_ * z);
    double rhs = dot(y, gram_ * algebra_.bracket(x, z));
    double scale3 = norm(x) * norm(y) * norm(z) * gram_.max_abs() + 1.0;
    if (std::abs(lhs + rhs) > 1e-9 * scale3)
      fail(ErrorCode::bad_input, "metric is not ad-invariant");
  }
}

BiInvariantMetric BiInvariantMetric::trace_form(const LieAlgebra& L) {
  return BiInvariantMetric(L, L.gram(), MetricKind::trace_form);
}

BiInvariantMetric BiInvariantMetric::minus_killing(const LieAlgebra& L) {
  RealMatrix g = L.killing();
  g *= -1.0;
  return BiInvariantMetric(L, std::move(g), MetricKind::minus_killing);
}

BiInvariantMetric BiInvariantMetric::custom(const LieAlgebra& L, RealMatrix gram) {
  return BiInvariantMetric(L, std::move(gram), MetricKind::custom);
}

double BiInvariantMetric::inner(const std::vector<double>& x,
                                const std::vector<double>& y) const {
  return dot(x, gram_ * y);
}

std::vector<double> levi_civita(const BiInvariantMetric& m,
                                const std::vector<double>& x,
                                const std::vector<double>& y) {
  std::vector<double> br = m.algebra().bracket(x, y);
  for (double& v : br) v *= 0.5;
  return br;
}

std::vector<double> curvature_tensor(const BiInvariantMetric& m,
                                     const std::vector<double>& x,
                                     const std::vector<double>& y,
                                     const std::vector<double>& z) {
  std::vector<double> br = m.algebra().bracket(m.algebra().bracket(x, y), z);
  for (double& v : br) v *= 0.25;
  return br;
}

double sectional(const BiInvariantMetric& m, const std::vector<double>& x,
                 const std::vector<double>& y) {
  const double xx = m.inner(x, x);
  const double yy = m.inner(y, y);
  const double xy = m.inner(x, y);
  const double denom = xx * yy - xy * xy;
  if (denom <= 1e-12 * std::max(xx * yy, 1e-300))
    fail(ErrorCode::bad_input, "sectional: vectors do not span a plane");
  std::vector<double> br = m.algebra().bracket(x, y);
  return 0.25 * m.inner(br, br) / denom;
}

double ricci(const BiInvariantMetric& m, const std::vector<double>& x,
             const std::vector<double>& y) {
  if (m.kind() == MetricKind::custom)
    fail(ErrorCode::argument,
         "ricci: only the trace-form and minus-Killing metrics are supported");
  const LieAlgebra& L = m.algebra();
  double trace_value = 0.0;
  for (const std::vector<double>& e : m.orthonormal_basis())
    trace_value += m.inner(curvature_tensor(m, x, e, y), e);
  const double killing_value = -0.25 * dot(x, L.killing() * y);
  const double nx = std::sqrt(std::max(m.inner(x, x), 0.0));
  const double ny = std::sqrt(std::max(m.inner(y, y), 0.0));
  const double tol = 1e-8 * (1.0 + std::abs(killing_value)) *
                     std::max(1.0, nx * ny);
  if (std::abs(trace_value - killing_value) > tol)
    fail(ErrorCode::numeric,
         "ricci: trace definition and Killing identity disagree");
  return trace_value;
}

double einstein_constant(const LieAlgebra& L, const BiInvariantMetric& m) {
  if (L.split_simple_ideals().size() != 1)
    fail(ErrorCode::unsupported, "einstein_constant: algebra is not simple");
  const std::vector<std::vector<double>>& frame = m.orthonormal_basis();
  const std::size_t d = frame.size();
  double lambda = 0.0;
  for (const std::vector<double>& e : frame) lambda += ricci(m, e, e);
  lambda /= static_cast<double>(d);
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double want = i == j ? lambda : 0.0;
      worst = std::max(worst, std::abs(ricci(m, frame[i], frame[j]) - want));
    }
  if (worst > 1e-8 * (1.0 + std::abs(lambda)))
    fail(ErrorCode::numeric, "einstein_constant: Ricci is not proportional "
                             "to the metric");
  return lambda;
}

namespace {

std::string vanishing_roots_message(const RootSystem& rs,
                                    const std::vector<double>& z) {
  std::ostringstream os;
  os << "element is singular: vanishing roots";
  for (std::size_t pi = 0; pi < rs.positive.size(); ++pi) {
    const Root& root = rs.roots[rs.positive[pi]];
    if (std::abs(dot(root.coords, z)) <=
        1e-8 * norm(root.coords) * std::max(norm(z), 1e-300)) {
      os << " #" << pi << " (";
      for (std::size_t k = 0; k < root.coords.size(); ++k)
        os << (k ? ", " : "") << root.coords[k];
      os << ")";
    }
  }
  return os.str();
}

}  // namespace

OrbitShape orbit_shape_operator(const RootSystem& rs, const BiInvariantMetric& m,
                                const std::vector<double>& z,
                                const std::vector<double>& n) {
  (void)m;  // eigenvalues are metric independent; the metric fixes the frame
  if (!is_regular(rs, z))
    fail(ErrorCode::bad_input, "orbit_shape_operator: " +
                                   vanishing_roots_message(rs, z));
  OrbitShape shape;
  shape.base = z;
  shape.normal = n;
  for (std::size_t pi = 0; pi < rs.positive.size(); ++pi) {
    const Root& root = rs.roots[rs.positive[pi]];
    double az = dot(root.coords, z);
    double an = dot(root.coords, n);
    shape.eigenpairs.push_back({static_cast<int>(pi), -an / az});
  }
  return shape;
}

namespace {

// Pfaffian of a real antisymmetric matrix by expansion along the first
// active row; exact enough for the small sizes used here.
double pfaffian(const RealMatrix& a, std::vector<int> active) {
  if (active.empty()) return 1.0;
  const int first = active.front();
  double sum = 0.0;
  double sign = 1.0;
  for (std::size_t j = 1; j < active.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < active.size(); ++k)
      if (k != j) rest.push_back(active[k]);
    sum += sign * a(first, active[j]) * pfaffian(a, rest);
    sign = -sign;
  }
  return sum;
}

}  // namespace

std::vector<double> canonical_cartan_form(const RootSystem& rs,
                                          const WeylGroup& w,
                                          const ComplexMatrix& y) {
  const LieAlgebra& L = rs.cartan.algebra();
  if (!L.family())
    fail(ErrorCode::unsupported,
         "canonical form needs a classical family realization");
  const Family family = *L.family();
  const std::size_t n = L.ambient_size();
  const cplx im(0.0, 1.0);

  ComplexMatrix iy = im * y;
  HermitianEigen eig = herm_eig(iy);  // rejects non-skew-Hermitian input

  ComplexMatrix torus_element(n, n);
  switch (family) {
    case Family::su:
    case Family::u: {
      for (std::size_t k = 0; k < n; ++k)
        torus_element(k, k) = cplx(0.0, -eig.eigenvalues[k]);
      break;
    }
    case Family::so: {
      // angles are the positive eigenvalues of iY; for even n the
      // Pfaffian fixes the sign of the last block
      std::vector<double> angles;
      for (double lam : eig.eigenvalues)
        if (lam > 0.0) angles.push_back(lam);
      std::sort(angles.begin(), angles.end());
      const std::size_t blocks = n / 2;
      while (angles.size() > blocks) angles.erase(angles.begin());
      while (angles.size() < blocks) angles.insert(angles.begin(), 0.0);
      if (n % 2 == 0 && !angles.empty()) {
        RealMatrix re(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) re(i, j) = y(i, j).real();
        std::vector<int> active(n);
        for (std::size_t i = 0; i < n; ++i) active[i] = static_cast<int>(i);
        if (pfaffian(re, active) < 0.0) angles.front() = -angles.front();
      }
      for (std::size_t j = 0; j < blocks; ++j) {
        torus_element(2 * j, 2 * j + 1) = angles[j];
        torus_element(2 * j + 1, 2 * j) = -angles[j];
      }
      break;
    }
    case Family::sp: {
      std::vector<double> angles;
      for (double lam : eig.eigenvalues)
        if (lam > 0.0) angles.push_back(lam);
      const std::size_t half = n / 2;
      while (angles.size() > half) angles.erase(angles.begin());
      while (angles.size() < half) angles.insert(angles.begin(), 0.0);
      for (std::size_t k = 0; k < half; ++k) {
        torus_element(k, k) = cplx(0.0, -angles[k]);
        torus_element(half + k, half + k) = cplx(0.0, angles[k]);
      }
      break;
    }
    default:
      fail(ErrorCode::unsupported,
           "canonical form is not defined for family " + family_name(family));
  }

  double residual = 0.0;
  std::vector<double> coords = L.coordinates(torus_element, &residual);
  if (residual > 1e-8 * (1.0 + torus_element.frobenius_norm()))
    fail(ErrorCode::numeric,
         "canonical form: normalized element escapes the algebra");
  std::vector<double> h = rs.cartan.cartan_coords(coords);
  // the projection must be lossless: the element lies in t
  std::vector<double> back = rs.cartan.algebra_coords(h);
  double drop = 0.0;
  for (std::size_t k = 0; k < coords.size(); ++k)
    drop = std::max(drop, std::abs(back[k] - coords[k]));
  if (drop > 1e-7 * (1.0 + norm(coords)))
    fail(ErrorCode::numeric,
         "canonical form: torus element is not in the Cartan subalgebra");
  return to_fundamental_domain(rs, w, h).point;
}

ParallelOrbitReport parallel_orbit_check(const RootSystem& rs,
                                         const WeylGroup& w,
                                         const std::vector<double>& z,
                                         const std::vector<double>& n,
                                         int samples, std::uint64_t seed) {
  if (!is_regular(rs, z))
    fail(ErrorCode::bad_input,
         "parallel_orbit_check: " + vanishing_roots_message(rs, z));
  const LieAlgebra& L = rs.cartan.algebra();
  const CartanSubalgebra& t = rs.cartan;

  ParallelOrbitReport report;
  report.samples = samples;
  report.orbit_dim = L.dim() - rs.rank();

  std::vector<double> zn(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) zn[k] = z[k] + n[k];
  report.canonical = to_fundamental_domain(rs, w, zn).point;
  StabilizerAlgebra stab = stabilizer_algebra(rs, zn);
  report.endpoint_orbit_dim = stab.orbit_dim;
  report.endpoint_vanishing = stab.vanishing_roots;

  ComplexMatrix zm = t.element(z);
  ComplexMatrix nm = t.element(n);
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> xi(L.dim());
    for (double& v : xi) v = rng.gaussian();
    ComplexMatrix xim = L.element(xi);
    double nn = xim.frobenius_norm();
    if (nn > 0.0) xim *= cplx(1.0 / nn, 0.0);
    ComplexMatrix g = mat_exp(xim);
    ComplexMatrix ginv = inverse(g);
    ComplexMatrix endpoint = g * zm * ginv + g * nm * ginv;
    std::vector<double> canonical;
    try {
      canonical = canonical_cartan_form(rs, w, endpoint);
    } catch (const Error& err) {
      fail(err.code(), "parallel_orbit_check: sample " + std::to_string(s) +
                           ": " + err.what());
    }
    for (std::size_t k = 0; k < canonical.size(); ++k)
      worst = std::max(worst, std::abs(canonical[k] - report.canonical[k]));
  }
  report.max_deviation = worst;
  report.pass = worst <= 1e-6;
  return report;
}

}  // namespace lie
