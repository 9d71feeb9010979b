#include "lie/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "lie/error.hpp"
#include "lie/numlin.hpp"
#include "lie/rng.hpp"

namespace lie {

std::string family_name(Family f) {
  switch (f) {
    case Family::gl_r: return "gl_r";
    case Family::gl_c: return "gl_c";
    case Family::sl_r: return "sl_r";
    case Family::sl_c: return "sl_c";
    case Family::so: return "so";
    case Family::su: return "su";
    case Family::u: return "u";
    case Family::sp: return "sp";
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = i;
  while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
  const std::string letters = text.substr(0, i);
  const std::string digits = text.substr(i, j - i);
  const std::string suffix = text.substr(j);
  if (letters.empty() || digits.empty())
    fail(ErrorCode::argument, "cannot parse group spec '" + text + "'");

  Family f;
  if (letters == "su" && suffix.empty()) f = Family::su;
  else if (letters == "so" && suffix.empty()) f = Family::so;
  else if (letters == "sp" && suffix.empty()) f = Family::sp;
  else if (letters == "u" && suffix.empty()) f = Family::u;
  else if (letters == "sl" && suffix == "_r") f = Family::sl_r;
  else if (letters == "sl" && suffix == "_c") f = Family::sl_c;
  else if (letters == "gl" && suffix == "_r") f = Family::gl_r;
  else if (letters == "gl" && suffix == "_c") f = Family::gl_c;
  else fail(ErrorCode::argument, "unknown family in group spec '" + text + "'");

  GroupSpec s;
  s.family = f;
  s.n = static_cast<std::size_t>(std::stoul(digits));
  if (s.n == 0) fail(ErrorCode::argument, "group spec needs n >= 1: '" + text + "'");
  return s;
}

std::string GroupSpec::label() const {
  std::string base = family_name(family);
  std::string suffix;
  if (base.size() > 2 && base[2] == '_') {
    suffix = base.substr(2);
    base = base.substr(0, 2);
  }
  return base + std::to_string(n) + suffix;
}

namespace {

ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j, cplx v) {
  ComplexMatrix m(n, n);
  m(i, j) = v;
  return m;
}

const cplx kI(0.0, 1.0);

std::vector<ComplexMatrix> basis_gl_r(std::size_t n) {
  std::vector<ComplexMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.push_back(unit(n, i, j, 1.0));
  return b;
}

std::vector<ComplexMatrix> basis_sl_r(std::size_t n) {
  std::vector<ComplexMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b.push_back(unit(n, i, j, 1.0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ComplexMatrix m(n, n);
    m(k, k) = 1.0;
    m(k + 1, k + 1) = -1.0;
    b.push_back(m);
  }
  return b;
}

std::vector<ComplexMatrix> basis_so(std::size_t n) {
  std::vector<ComplexMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ComplexMatrix m(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      b.push_back(m);
    }
  return b;
}

std::vector<ComplexMatrix> basis_u(std::size_t n) {
  std::vector<ComplexMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ComplexMatrix m(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      b.push_back(m);
      ComplexMatrix w(n, n);
      w(i, j) = kI;
      w(j, i) = kI;
      b.push_back(w);
    }
  for (std::size_t k = 0; k < n; ++k) b.push_back(unit(n, k, k, kI));
  return b;
}

std::vector<ComplexMatrix> basis_su(std::size_t n) {
  std::vector<ComplexMatrix> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ComplexMatrix m(n, n);
      m(i, j) = 1.0;
      m(j, i) = -1.0;
      b.push_back(m);
      ComplexMatrix w(n, n);
      w(i, j) = kI;
      w(j, i) = kI;
      b.push_back(w);
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ComplexMatrix m(n, n);
    m(k, k) = kI;
    m(k + 1, k + 1) = -kI;
    b.push_back(m);
  }
  return b;
}

// Quaternionic skew-Hermitian matrices in the standard complex 2n x 2n
// picture: [[A, B], [-conj(B), conj(A)]] with A skew-Hermitian and B
// complex symmetric.
std::vector<ComplexMatrix> basis_sp(std::size_t n) {
  std::vector<ComplexMatrix> b;
  const std::size_t m = 2 * n;
  auto embed_a = [&](const ComplexMatrix& a) {
    ComplexMatrix z(m, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        z(i, j) = a(i, j);
        z(n + i, n + j) = std::conj(a(i, j));
      }
    return z;
  };
  auto embed_b = [&](const ComplexMatrix& bb) {
    ComplexMatrix z(m, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        z(i, n + j) = bb(i, j);
        z(n + i, j) = -std::conj(bb(i, j));
      }
    return z;
  };
  for (const ComplexMatrix& a : basis_u(n)) b.push_back(embed_a(a));
  for (std::size_t k = 0; k < n; ++k) {
    b.push_back(embed_b(unit(n, k, k, 1.0)));
    b.push_back(embed_b(unit(n, k, k, kI)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ComplexMatrix s(n, n);
      s(i, j) = 1.0;
      s(j, i) = 1.0;
      b.push_back(embed_b(s));
      ComplexMatrix t(n, n);
      t(i, j) = kI;
      t(j, i) = kI;
      b.push_back(embed_b(t));
    }
  return b;
}

void check_family_constraints(Family f, std::size_t n,
                              const std::vector<ComplexMatrix>& basis) {
  const double tol = 1e-12;
  for (const ComplexMatrix& x : basis) {
    switch (f) {
      case Family::sl_r:
      case Family::sl_c:
        if (std::abs(x.trace()) > tol)
          fail(ErrorCode::numeric, "sl basis element has nonzero trace");
        break;
      case Family::so:
        if ((x + x.transpose()).frobenius_norm() > tol)
          fail(ErrorCode::numeric, "so basis element not antisymmetric");
        break;
      case Family::u:
        if ((x + x.adjoint()).frobenius_norm() > tol)
          fail(ErrorCode::numeric, "u basis element not skew-Hermitian");
        break;
      case Family::su:
        if ((x + x.adjoint()).frobenius_norm() > tol || std::abs(x.trace()) > tol)
          fail(ErrorCode::numeric, "su basis element violates su constraints");
        break;
      case Family::sp: {
        if ((x + x.adjoint()).frobenius_norm() > tol)
          fail(ErrorCode::numeric, "sp basis element not skew-Hermitian");
        ComplexMatrix j(2 * n, 2 * n);
        for (std::size_t k = 0; k < n; ++k) {
          j(k, n + k) = 1.0;
          j(n + k, k) = -1.0;
        }
        if ((x.transpose() * j + j * x).frobenius_norm() > tol)
          fail(ErrorCode::numeric, "sp basis element violates the J relation");
        break;
      }
      default:
        break;
    }
  }
}

}  // namespace

LieAlgebra LieAlgebra::classical(Family f, std::size_t n) {
  if (n < 1) fail(ErrorCode::argument, "classical algebra needs n >= 1");
  if ((f == Family::sl_r || f == Family::sl_c || f == Family::su) && n < 2)
    fail(ErrorCode::argument, family_name(f) + " needs n >= 2");

  std::vector<ComplexMatrix> basis;
  std::size_t ambient = n;
  double scale = 1.0;
  switch (f) {
    case Family::gl_r: basis = basis_gl_r(n); break;
    case Family::gl_c: {
      basis = basis_gl_r(n);
      std::vector<ComplexMatrix> extra;
      for (const ComplexMatrix& m : basis) extra.push_back(kI * m);
      basis.insert(basis.end(), extra.begin(), extra.end());
      break;
    }
    case Family::sl_r: basis = basis_sl_r(n); break;
    case Family::sl_c: {
      basis = basis_sl_r(n);
      std::vector<ComplexMatrix> extra;
      for (const ComplexMatrix& m : basis) extra.push_back(kI * m);
      basis.insert(basis.end(), extra.begin(), extra.end());
      break;
    }
    case Family::so: basis = basis_so(n); scale = 0.5; break;
    case Family::su: basis = basis_su(n); break;
    case Family::u: basis = basis_u(n); break;
    case Family::sp: basis = basis_sp(n); ambient = 2 * n; scale = 0.5; break;
  }
  check_family_constraints(f, n, basis);
  GroupSpec spec{f, n};
  return from_basis(spec.label(), ambient, std::move(basis), scale, f, n);
}

LieAlgebra LieAlgebra::from_basis(std::string name, std::size_t ambient,
                                  std::vector<ComplexMatrix> basis,
                                  double metric_scale,
                                  std::optional<Family> family,
                                  std::size_t family_n) {
  LieAlgebra L;
  L.name_ = std::move(name);
  L.ambient_ = ambient;
  L.basis_ = std::move(basis);
  L.metric_scale_ = metric_scale;
  L.family_ = family;
  L.family_n_ = family_n;
  const std::size_t d = L.basis_.size();

  for (const ComplexMatrix& x : L.basis_)
    if (x.rows() != ambient || x.cols() != ambient)
      fail(ErrorCode::bad_input, "basis element has wrong ambient size");

  L.gram_ = RealMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double v = frobenius_real_inner(L.basis_[i], L.basis_[j]);
      L.gram_(i, j) = v;
      L.gram_(j, i) = v;
    }

  if (d > 0) {
    SymEigen ge = sym_eig(L.gram_);
    const double gmax = std::max(std::abs(ge.eigenvalues.front()),
                                 std::abs(ge.eigenvalues.back()));
    if (ge.eigenvalues.front() <= 1e-12 * gmax)
      fail(ErrorCode::bad_input,
           "basis matrices of '" + L.name_ + "' are not linearly independent");
    L.gram_chol_ = cholesky(L.gram_);
  }

  L.compute_structure_constants();
  return L;
}

void LieAlgebra::compute_structure_constants() {
  const std::size_t d = dim();
  cstruct_.assign(d * d * d, 0.0);
  double worst = 0.0;
  std::size_t worst_i = 0, worst_j = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ComplexMatrix br = commutator(basis_[i], basis_[j]);
      std::vector<double> rhs(d);
      for (std::size_t k = 0; k < d; ++k)
        rhs[k] = frobenius_real_inner(br, basis_[k]);
      std::vector<double> c = cholesky_solve(gram_chol_, rhs);
      ComplexMatrix recon(ambient_, ambient_);
      for (std::size_t k = 0; k < d; ++k) {
        if (c[k] == 0.0) continue;
        recon += c[k] * basis_[k];
      }
      double res = (br - recon).frobenius_norm();
      if (res > worst) {
        worst = res;
        worst_i = i;
        worst_j = j;
      }
      for (std::size_t k = 0; k < d; ++k) {
        cstruct_[(i * d + j) * d + k] = c[k];
        cstruct_[(j * d + i) * d + k] = -c[k];
      }
    }
  }
  if (worst > 1e-10) {
    std::ostringstream os;
    os << "basis of '" << name_ << "' is not closed under the bracket: "
       << "worst residual " << worst << " at pair (" << worst_i << ", "
       << worst_j << ")";
    fail(ErrorCode::bad_input, os.str());
  }
}

ComplexMatrix LieAlgebra::element(const std::vector<double>& coords) const {
  if (coords.size() != dim())
    fail(ErrorCode::bad_input, "coordinate vector has wrong length");
  ComplexMatrix m(ambient_, ambient_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0.0) continue;
    m += coords[k] * basis_[k];
  }
  return m;
}

std::vector<double> LieAlgebra::coordinates(const ComplexMatrix& m,
                                            double* residual) const {
  const std::size_t d = dim();
  std::vector<double> rhs(d);
  for (std::size_t k = 0; k < d; ++k)
    rhs[k] = frobenius_real_inner(m, basis_[k]);
  std::vector<double> c = d > 0 ? cholesky_solve(gram_chol_, rhs)
                                : std::vector<double>{};
  if (residual) {
    ComplexMatrix recon = element(c);
    *residual = (m - recon).frobenius_norm();
  }
  return c;
}

std::vector<double> LieAlgebra::bracket(const std::vector<double>& x,
                                        const std::vector<double>& y) const {
  const std::size_t d = dim();
  std::vector<double> z(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0.0) continue;
      const double xy = x[i] * y[j];
      const double* row = &cstruct_[(i * d + j) * d];
      for (std::size_t k = 0; k < d; ++k) z[k] += xy * row[k];
    }
  }
  return z;
}

RealMatrix LieAlgebra::ad_matrix(const std::vector<double>& x) const {
  const std::size_t d = dim();
  RealMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const double* row = &cstruct_[(i * d + j) * d];
      for (std::size_t k = 0; k < d; ++k) a(k, j) += x[i] * row[k];
    }
  }
  return a;
}

const RealMatrix& LieAlgebra::killing() const {
  std::call_once(killing_cache_->flag, [this] {
    const std::size_t d = dim();
    RealMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l)
            s += structure_constant(i, k, l) * structure_constant(j, l, k);
        b(i, j) = s;
        b(j, i) = s;
      }
    killing_cache_->matrix = b;
  });
  return killing_cache_->matrix;
}

BilinearForm LieAlgebra::killing_form() const {
  BilinearForm f;
  f.matrix = killing();
  const std::size_t d = dim();
  if (d == 0) return f;
  SymEigen e = sym_eig(f.matrix);
  double scale = 0.0;
  for (double lam : e.eigenvalues) scale = std::max(scale, std::abs(lam));
  const double tol = 1e-9 * scale;
  for (double lam : e.eigenvalues) {
    if (lam > tol) ++f.n_pos;
    else if (lam < -tol) ++f.n_neg;
    else ++f.n_zero;
  }
  return f;
}

bool LieAlgebra::is_semisimple() const {
  const std::size_t d = dim();
  if (d == 0) return true;
  const RealMatrix& b = killing();
  // geometric mean of the nonzero diagonal sets the scale of the
  // determinant test
  double logsum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const double v = std::abs(b(i, i));
    if (v > 0.0) {
      logsum += std::log(v);
      ++count;
    }
  }
  if (count == 0) return false;  // Killing form vanishes identically
  const double scale = std::exp(logsum / count);
  SymEigen e = sym_eig(b);
  for (double lam : e.eigenvalues)
    if (std::abs(lam) <= 1e-8 * scale) return false;
  return true;
}

bool LieAlgebra::is_compact_type() const {
  if (!is_semisimple())
    fail(ErrorCode::unsupported,
         "'" + name_ + "' is not semisimple; compact type is undefined");
  SymEigen e = sym_eig(killing());
  double scale = 0.0;
  for (double lam : e.eigenvalues) scale = std::max(scale, std::abs(lam));
  for (double lam : e.eigenvalues)
    if (lam >= -1e-8 * scale) return false;
  return true;
}

std::vector<std::vector<double>> LieAlgebra::center() const {
  const std::size_t d = dim();
  if (d == 0) return {};
  // null space of the stacked ad operator
  RealMatrix stacked(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        stacked(j * d + k, i) = structure_constant(i, j, k);
  std::vector<std::vector<double>> raw = null_space(stacked, 1e-9);

  // orthonormalize under Re tr(XY*)
  std::vector<std::vector<double>> out;
  for (std::vector<double>& v : raw) {
    for (const std::vector<double>& u : out) {
      double proj = dot(u, gram_ * v);
      for (std::size_t k = 0; k < d; ++k) v[k] -= proj * u[k];
    }
    double nn = std::sqrt(std::max(dot(v, gram_ * v), 0.0));
    if (nn < 1e-12) continue;
    for (double& x : v) x /= nn;
    out.push_back(std::move(v));
  }
  return out;
}

double LieAlgebra::jacobi_residual() const {
  const std::size_t d = dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          double s = 0.0;
          for (std::size_t m = 0; m < d; ++m) {
            s += structure_constant(i, j, m) * structure_constant(m, k, l);
            s += structure_constant(j, k, m) * structure_constant(m, i, l);
            s += structure_constant(k, i, m) * structure_constant(m, j, l);
          }
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

namespace {

// Gram-Schmidt append of w to span (plain Euclidean coordinates); returns
// true when w carried a new direction.
bool append_direction(std::vector<std::vector<double>>& span,
                      std::vector<double> w, double tol) {
  for (const std::vector<double>& u : span) {
    double p = dot(u, w);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= p * u[k];
  }
  double nn = norm(w);
  if (nn <= tol) return false;
  for (double& x : w) x /= nn;
  span.push_back(std::move(w));
  return true;
}

}  // namespace

std::vector<LieAlgebra> LieAlgebra::split_simple_ideals(std::uint64_t seed) const {
  if (!is_compact_type())
    fail(ErrorCode::unsupported,
         "split_simple_ideals: '" + name_ + "' is not of compact type");
  const std::size_t d = dim();
  if (d == 0) return {};

  // Work in a Frobenius-orthonormal frame so that subspace arithmetic is
  // plain Euclidean and ad operators are skew.
  const RealMatrix& l = gram_chol_;
  auto to_orig = [&](const std::vector<double>& y) { return back_subst_t(l, y); };
  auto ad_frame = [&](const std::vector<double>& y_orig) {
    // L^T ad L^{-T}, applied columnwise
    RealMatrix a = ad_matrix(y_orig);
    RealMatrix out(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<double> e(d, 0.0);
      e[c] = 1.0;
      std::vector<double> x = back_subst_t(l, e);  // frame -> orig
      std::vector<double> ax = a * x;
      // orig -> frame is multiplication by L^T
      for (std::size_t r = 0; r < d; ++r) {
        double s = 0.0;
        for (std::size_t k = r; k < d; ++k) s += l(k, r) * ax[k];
        out(r, c) = s;
      }
    }
    return out;
  };

  Rng rng(seed);
  std::vector<std::vector<double>> frame_generators;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    frame_generators.push_back(to_orig(e));
  }
  std::vector<RealMatrix> gen_ads;
  for (const std::vector<double>& g : frame_generators) gen_ads.push_back(ad_frame(g));

  for (int attempt = 0; attempt < 8; ++attempt) {
    // A generic element separates the ideals: the top eigenspace of
    // -ad(X)^2 sits inside a single simple ideal.
    std::vector<double> x_orig(d);
    for (double& v : x_orig) v = rng.gaussian();
    RealMatrix s = ad_frame(x_orig);
    RealMatrix p(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < d; ++k) acc += s(k, i) * s(k, j);
        p(i, j) = acc;  // (ad X)^T (ad X) = -(ad X)^2 for skew ad
      }
    SymEigen pe = sym_eig(p);

    std::vector<std::vector<std::vector<double>>> ideal_spans;
    // seed from the top eigenvector, grow, remove, repeat inside the
    // orthogonal complement
    std::vector<std::vector<double>> used;  // union of found ideals
    bool ok = true;
    while (true) {
      // pick the largest-eigenvalue eigenvector not inside the used span
      std::vector<double> seed_vec;
      for (std::size_t jj = d; jj-- > 0;) {
        std::vector<double> cand(d);
        for (std::size_t i = 0; i < d; ++i) cand[i] = pe.eigenvectors(i, jj);
        for (const std::vector<double>& u : used) {
          double pr = dot(u, cand);
          for (std::size_t k = 0; k < d; ++k) cand[k] -= pr * u[k];
        }
        double nn = norm(cand);
        if (nn > 1e-6) {
          for (double& v : cand) v /= nn;
          seed_vec = std::move(cand);
          break;
        }
      }
      if (seed_vec.empty()) break;

      std::vector<std::vector<double>> span{seed_vec};
      bool grew = true;
      std::size_t passes = 0;
      while (grew) {
        if (++passes > d + 1) {
          ok = false;
          break;
        }
        grew = false;
        const std::size_t cur = span.size();
        for (std::size_t v = 0; v < cur; ++v)
          for (const RealMatrix& ga : gen_ads) {
            std::vector<double> w = ga * span[v];
            double wn = norm(w);
            if (wn < 1e-12) continue;
            if (append_direction(span, std::move(w), 1e-8 * (1.0 + wn))) grew = true;
          }
      }
      if (!ok) break;
      for (const std::vector<double>& v : span) {
        std::vector<double> vv = v;
        if (!append_direction(used, std::move(vv), 1e-6)) {
          ok = false;  // overlapping ideals signal a bad generic element
          break;
        }
      }
      if (!ok) break;
      ideal_spans.push_back(std::move(span));
      if (used.size() == d) break;
    }
    if (!ok || used.size() != d) continue;

    // materialize sub-algebras and verify simplicity
    std::vector<LieAlgebra> ideals;
    bool all_simple = true;
    for (std::size_t idx = 0; idx < ideal_spans.size(); ++idx) {
      std::vector<ComplexMatrix> sub_basis;
      for (const std::vector<double>& y : ideal_spans[idx])
        sub_basis.push_back(element(to_orig(y)));
      LieAlgebra ideal = LieAlgebra::from_basis(
          name_ + "[" + std::to_string(idx) + "]", ambient_,
          std::move(sub_basis), metric_scale_);
      // an ideal is simple when every single basis vector generates it
      const std::size_t sd = ideal.dim();
      std::vector<RealMatrix> sub_ads;
      for (std::size_t i = 0; i < sd; ++i) {
        std::vector<double> e(sd, 0.0);
        e[i] = 1.0;
        sub_ads.push_back(ideal.ad_matrix(e));
      }
      for (std::size_t i = 0; i < sd && all_simple; ++i) {
        std::vector<double> e(sd, 0.0);
        e[i] = 1.0;
        std::vector<std::vector<double>> span{e};
        bool grew = true;
        std::size_t passes = 0;
        while (grew && passes <= sd + 1) {
          ++passes;
          grew = false;
          const std::size_t cur = span.size();
          for (std::size_t v = 0; v < cur; ++v)
            for (const RealMatrix& ga : sub_ads) {
              std::vector<double> w = ga * span[v];
              double wn = norm(w);
              if (wn < 1e-12) continue;
              if (append_direction(span, std::move(w), 1e-8 * (1.0 + wn)))
                grew = true;
            }
        }
        if (span.size() != sd) all_simple = false;
      }
      ideals.push_back(std::move(ideal));
      if (!all_simple) break;
    }
    if (all_simple) return ideals;
  }
  fail(ErrorCode::numeric,
       "split_simple_ideals: could not isolate simple ideals of '" + name_ + "'");
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.ambient_size() + b.ambient_size();
  std::vector<ComplexMatrix> basis;
  for (const ComplexMatrix& x : a.basis()) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < a.ambient_size(); ++i)
      for (std::size_t j = 0; j < a.ambient_size(); ++j) m(i, j) = x(i, j);
    basis.push_back(std::move(m));
  }
  for (const ComplexMatrix& y : b.basis()) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < b.ambient_size(); ++i)
      for (std::size_t j = 0; j < b.ambient_size(); ++j)
        m(a.ambient_size() + i, a.ambient_size() + j) = y(i, j);
    basis.push_back(std::move(m));
  }
  const double scale =
      a.metric_scale() == b.metric_scale() ? a.metric_scale() : 1.0;
  return LieAlgebra::from_basis(a.name() + "+" + b.name(), n, std::move(basis),
                                scale);
}

}  // namespace lie
