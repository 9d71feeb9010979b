#include "lie/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lie/error.hpp"
#include "lie/numlin.hpp"
#include "lie/rng.hpp"

namespace lie {

double scaled_inner(const LieAlgebra& L, const std::vector<double>& x,
                    const std::vector<double>& y) {
  return L.metric_scale() * dot(x, L.gram() * y);
}

namespace {

// Gram-Schmidt under the scaled trace form.
std::vector<std::vector<double>> orthonormalize_scaled(
    const LieAlgebra& L, std::vector<std::vector<double>> vecs) {
  std::vector<std::vector<double>> out;
  for (std::vector<double>& v : vecs) {
    for (const std::vector<double>& u : out) {
      double p = scaled_inner(L, u, v);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= p * u[k];
    }
    double nn = std::sqrt(std::max(scaled_inner(L, v, v), 0.0));
    if (nn < 1e-10) continue;
    for (double& x : v) x /= nn;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CartanSubalgebra::CartanSubalgebra(LieAlgebra algebra,
                                   std::vector<std::vector<double>> basis)
    : algebra_(std::move(algebra)), basis_(std::move(basis)) {
  validate();
}

void CartanSubalgebra::validate() const {
  const std::size_t r = basis_.size();
  // orthonormality and pairwise commutation
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      double g = scaled_inner(algebra_, basis_[a], basis_[b]);
      double want = a == b ? 1.0 : 0.0;
      if (std::abs(g - want) > 1e-9)
        fail(ErrorCode::numeric, "Cartan basis is not orthonormal");
      if (norm(algebra_.bracket(basis_[a], basis_[b])) > 1e-10)
        fail(ErrorCode::numeric, "Cartan basis is not abelian");
    }
  }
  // maximality: the centralizer of t has dimension exactly r
  const std::size_t d = algebra_.dim();
  if (r == 0) {
    if (d != 0)
      fail(ErrorCode::numeric, "empty Cartan basis for a nonzero algebra");
    return;
  }
  RealMatrix stacked(r * d, d);
  for (std::size_t a = 0; a < r; ++a) {
    RealMatrix ad = algebra_.ad_matrix(basis_[a]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked(a * d + i, j) = ad(i, j);
  }
  std::size_t centralizer_dim = null_space(stacked, 1e-9).size();
  if (centralizer_dim != r)
    fail(ErrorCode::numeric,
         "Cartan subalgebra is not maximal: centralizer dimension " +
             std::to_string(centralizer_dim) + " vs rank " + std::to_string(r));
}

CartanSubalgebra CartanSubalgebra::standard(const LieAlgebra& L) {
  if (!L.family())
    fail(ErrorCode::argument,
         "standard Cartan subalgebra needs a classical family");
  const Family f = *L.family();
  const std::size_t n = L.family_n();
  std::vector<ComplexMatrix> gens;
  const cplx im(0.0, 1.0);
  switch (f) {
    case Family::su:
      for (std::size_t k = 0; k + 1 < n; ++k) {
        ComplexMatrix m(n, n);
        m(k, k) = im;
        m(k + 1, k + 1) = -im;
        gens.push_back(m);
      }
      break;
    case Family::u:
      for (std::size_t k = 0; k < n; ++k) {
        ComplexMatrix m(n, n);
        m(k, k) = im;
        gens.push_back(m);
      }
      break;
    case Family::so:
      for (std::size_t j = 0; 2 * j + 1 < n; ++j) {
        ComplexMatrix m(n, n);
        m(2 * j, 2 * j + 1) = 1.0;
        m(2 * j + 1, 2 * j) = -1.0;
        gens.push_back(m);
      }
      break;
    case Family::sp:
      for (std::size_t k = 0; k < n; ++k) {
        ComplexMatrix m(2 * n, 2 * n);
        m(k, k) = im;
        m(n + k, n + k) = -im;
        gens.push_back(m);
      }
      break;
    default:
      fail(ErrorCode::argument, "no standard Cartan subalgebra for family " +
                                    family_name(f));
  }
  std::vector<std::vector<double>> coords;
  for (const ComplexMatrix& g : gens) {
    double res = 0.0;
    coords.push_back(L.coordinates(g, &res));
    if (res > 1e-10)
      fail(ErrorCode::numeric, "standard Cartan generator leaves the algebra");
  }
  return CartanSubalgebra(L, orthonormalize_scaled(L, std::move(coords)));
}

CartanSubalgebra CartanSubalgebra::centralizer(const LieAlgebra& L,
                                               std::vector<double> x,
                                               std::uint64_t seed) {
  Rng rng(seed);
  double worst_bracket = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    RealMatrix ad = L.ad_matrix(x);
    std::vector<std::vector<double>> kernel = null_space(ad, 1e-9);
    // abelian check
    double worst = 0.0;
    for (std::size_t a = 0; a < kernel.size(); ++a)
      for (std::size_t b = a + 1; b < kernel.size(); ++b)
        worst = std::max(worst, norm(L.bracket(kernel[a], kernel[b])));
    if (worst <= 1e-9)
      return CartanSubalgebra(L, orthonormalize_scaled(L, std::move(kernel)));
    worst_bracket = worst;
    for (double& v : x) v = rng.gaussian();
  }
  std::ostringstream os;
  os << "centralizer Cartan construction failed: kernel not abelian after "
        "retries (worst bracket norm "
     << worst_bracket << ")";
  fail(ErrorCode::numeric, os.str());
}

std::vector<double> CartanSubalgebra::algebra_coords(
    const std::vector<double>& h) const {
  if (h.size() != rank())
    fail(ErrorCode::bad_input, "Cartan coordinate vector has wrong length");
  std::vector<double> x(algebra_.dim(), 0.0);
  for (std::size_t a = 0; a < rank(); ++a)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += h[a] * basis_[a][k];
  return x;
}

std::vector<double> CartanSubalgebra::cartan_coords(
    const std::vector<double>& x) const {
  std::vector<double> h(rank());
  for (std::size_t a = 0; a < rank(); ++a) h[a] = scaled_inner(algebra_, basis_[a], x);
  return h;
}

ComplexMatrix CartanSubalgebra::element(const std::vector<double>& h) const {
  return algebra_.element(algebra_coords(h));
}

double RootSystem::evaluate(int root_index, const std::vector<double>& x) const {
  return dot(roots[root_index].coords, x);
}

namespace {

// Triangular frame maps for the scaled metric: with chol(c G) = Ls Ls^T,
// frame coordinates are y = Ls^T x and the frame is orthonormal.
struct Frame {
  RealMatrix ls;  // lower triangular
  std::size_t d;

  std::vector<double> to_frame(const std::vector<double>& x) const {
    std::vector<double> y(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
      double s = 0.0;
      for (std::size_t k = r; k < d; ++k) s += ls(k, r) * x[k];
      y[r] = s;
    }
    return y;
  }
  std::vector<double> to_orig(const std::vector<double>& y) const {
    return back_subst_t(ls, y);
  }
  RealMatrix conjugate(const RealMatrix& a) const {
    // Ls^T A Ls^{-T}, columnwise
    RealMatrix out(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<double> e(d, 0.0);
      e[c] = 1.0;
      std::vector<double> col = to_frame(a * to_orig(e));
      for (std::size_t r = 0; r < d; ++r) out(r, c) = col[r];
    }
    return out;
  }
};

Frame make_frame(const LieAlgebra& L) {
  Frame f;
  f.d = L.dim();
  f.ls = L.gram_cholesky();
  const double root_scale = std::sqrt(L.metric_scale());
  f.ls *= root_scale;
  return f;
}

std::vector<cplx> column(const ComplexMatrix& m, std::size_t j) {
  std::vector<cplx> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

std::vector<cplx> real_matvec(const RealMatrix& a, const std::vector<cplx>& x) {
  std::vector<cplx> y(a.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s(0.0, 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace

RootSystem root_decomposition(const LieAlgebra& L, const CartanSubalgebra& t,
                              std::uint64_t seed, double cluster_tol) {
  if (!L.is_compact_type())
    fail(ErrorCode::unsupported,
         "root decomposition needs a compact semisimple algebra; got '" +
             L.name() + "'");
  const std::size_t d = L.dim();
  const std::size_t r = t.rank();
  Frame frame = make_frame(L);

  std::vector<RealMatrix> cartan_ads;  // skew, in frame coordinates
  for (std::size_t a = 0; a < r; ++a)
    cartan_ads.push_back(frame.conjugate(L.ad_matrix(t.basis()[a])));

  Rng rng(seed);
  std::string failure = "root decomposition failed";
  for (int attempt = 0; attempt < 4; ++attempt) {
    // one eigendecomposition of a generic Cartan direction
    std::vector<double> mix(r);
    for (double& v : mix) v = rng.gaussian();
    RealMatrix s(d, d);
    for (std::size_t a = 0; a < r; ++a) {
      RealMatrix scaled = cartan_ads[a];
      scaled *= mix[a];
      s += scaled;
    }
    ComplexMatrix herm(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) herm(i, j) = cplx(0.0, s(i, j));
    HermitianEigen eig = herm_eig(herm);

    // weights as Rayleigh quotients against each ad(H_a)
    std::vector<std::vector<double>> weights(d, std::vector<double>(r));
    bool residual_ok = true;
    for (std::size_t j = 0; j < d && residual_ok; ++j) {
      std::vector<cplx> v = column(eig.eigenvectors, j);
      for (std::size_t a = 0; a < r; ++a) {
        std::vector<cplx> sv = real_matvec(cartan_ads[a], v);
        cplx quot(0.0, 0.0);
        for (std::size_t i = 0; i < d; ++i) quot += std::conj(v[i]) * sv[i];
        const double alpha = quot.imag();
        weights[j][a] = alpha;
        double res = 0.0;
        for (std::size_t i = 0; i < d; ++i)
          res += std::norm(sv[i] - cplx(0.0, alpha) * v[i]);
        if (std::sqrt(res) > std::max(1e-8, cluster_tol)) {
          residual_ok = false;  // mixed eigenspaces; redraw the direction
          break;
        }
      }
    }
    if (!residual_ok) {
      failure = "root decomposition: coincident eigenvalues kept mixing "
                "weight spaces";
      continue;
    }

    // cluster equal weights
    std::vector<std::vector<double>> cluster_weight;
    std::vector<std::vector<std::size_t>> cluster_members;
    for (std::size_t j = 0; j < d; ++j) {
      bool placed = false;
      for (std::size_t c = 0; c < cluster_weight.size() && !placed; ++c) {
        double diff = 0.0;
        for (std::size_t a = 0; a < r; ++a)
          diff = std::max(diff, std::abs(cluster_weight[c][a] - weights[j][a]));
        if (diff < cluster_tol) {
          cluster_members[c].push_back(j);
          placed = true;
        }
      }
      if (!placed) {
        cluster_weight.push_back(weights[j]);
        cluster_members.push_back({j});
      }
    }

    // zero weight space must be the complexified Cartan subalgebra
    int zero_cluster = -1;
    for (std::size_t c = 0; c < cluster_weight.size(); ++c) {
      double mag = 0.0;
      for (double w : cluster_weight[c]) mag = std::max(mag, std::abs(w));
      if (mag < cluster_tol) {
        zero_cluster = static_cast<int>(c);
        break;
      }
    }
    if (zero_cluster < 0 ||
        cluster_members[zero_cluster].size() != r) {
      failure = "root decomposition: zero weight space has complex dimension " +
                std::to_string(zero_cluster < 0
                                   ? 0
                                   : cluster_members[zero_cluster].size()) +
                ", expected " + std::to_string(r);
      continue;
    }
    bool multiplicity_ok = true;
    for (std::size_t c = 0; c < cluster_weight.size(); ++c) {
      if (static_cast<int>(c) == zero_cluster) continue;
      if (cluster_members[c].size() != 1) {
        multiplicity_ok = false;
        failure = "root decomposition: weight space of complex dimension " +
                  std::to_string(cluster_members[c].size()) +
                  " (non-semisimple input or clustering tolerance failure)";
      }
    }
    if (!multiplicity_ok) continue;

    RootSystem rs{t, {}, {}, {}, {}, {}, cluster_tol};
    for (std::size_t c = 0; c < cluster_weight.size(); ++c) {
      if (static_cast<int>(c) == zero_cluster) continue;
      Root root;
      root.coords = cluster_weight[c];
      const std::size_t j = cluster_members[c].front();
      // real plane basis from the eigenvector: generator e2 + i e1
      std::vector<cplx> v = column(eig.eigenvectors, j);
      std::vector<double> re(d), imv(d);
      for (std::size_t i = 0; i < d; ++i) {
        re[i] = v[i].real();
        imv[i] = v[i].imag();
      }
      root.e2 = frame.to_orig(re);
      root.e1 = frame.to_orig(imv);
      root.has_space = true;
      rs.roots.push_back(std::move(root));
    }

    // pair up alpha with -alpha
    const double pair_tol = cluster_tol;
    bool paired = true;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      if (rs.roots[i].pair >= 0) continue;
      int partner = -1;
      for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
        if (rs.roots[j].pair >= 0) continue;
        double diff = 0.0;
        for (std::size_t a = 0; a < r; ++a)
          diff = std::max(diff,
                          std::abs(rs.roots[i].coords[a] + rs.roots[j].coords[a]));
        if (diff < pair_tol) {
          partner = static_cast<int>(j);
          break;
        }
      }
      if (partner < 0) {
        paired = false;
        break;
      }
      rs.roots[i].pair = partner;
      rs.roots[partner].pair = static_cast<int>(i);
    }
    if (!paired) {
      failure = "root decomposition: roots do not come in +/- pairs";
      continue;
    }

    // dimension bookkeeping and the no-multiples condition
    if (d != r + rs.roots.size()) {
      failure = "root decomposition: dimension bookkeeping failed";
      continue;
    }
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
      for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
        const std::vector<double>& a = rs.roots[i].coords;
        const std::vector<double>& b = rs.roots[j].coords;
        double na = norm(a), nb = norm(b), ab = dot(a, b);
        if (std::abs(std::abs(ab) - na * nb) < 1e-9 * na * nb &&
            std::abs(na - nb) > 1e-7 * std::max(na, nb))
          fail(ErrorCode::numeric,
               "root decomposition: found a k-multiple root pair");
      }

    // normalize the planes: orthonormal (e1, e2) under Re tr(XY*), sign
    // fixed by the first significant component of e2
    const RealMatrix& gram = L.gram();
    for (Root& root : rs.roots) {
      if (!root.has_space) continue;
      double n2 = std::sqrt(dot(root.e2, gram * root.e2));
      for (double& x : root.e2) x /= n2;
      double p = dot(root.e1, gram * root.e2);
      for (std::size_t k = 0; k < d; ++k) root.e1[k] -= p * root.e2[k];
      double n1 = std::sqrt(dot(root.e1, gram * root.e1));
      for (double& x : root.e1) x /= n1;
      double lead = 0.0;
      for (double x : root.e2) {
        if (std::abs(x) > 1e-7) {
          lead = x;
          break;
        }
      }
      if (lead < 0.0)
        for (std::size_t k = 0; k < d; ++k) {
          root.e1[k] = -root.e1[k];
          root.e2[k] = -root.e2[k];
        }
      // bracket relations [H, e1] = a(H) e2, [H, e2] = -a(H) e1
      for (std::size_t a = 0; a < r; ++a) {
        std::vector<double> br1 = L.bracket(t.basis()[a], root.e1);
        std::vector<double> br2 = L.bracket(t.basis()[a], root.e2);
        double res = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
          res = std::max(res, std::abs(br1[k] - root.coords[a] * root.e2[k]));
          res = std::max(res, std::abs(br2[k] + root.coords[a] * root.e1[k]));
        }
        if (res > 1e-8)
          fail(ErrorCode::numeric,
               "root decomposition: root plane bracket relations failed");
      }
    }
    return rs;
  }
  fail(ErrorCode::numeric, failure);
}

namespace {

bool regular_against_roots(const RootSystem& rs, const std::vector<double>& x) {
  const double nx = norm(x);
  for (const Root& root : rs.roots) {
    double v = dot(root.coords, x);
    if (std::abs(v) <= 1e-8 * norm(root.coords) * nx) return false;
  }
  return true;
}

}  // namespace

bool is_regular(const RootSystem& rs, const std::vector<double>& x) {
  if (x.size() != rs.rank())
    fail(ErrorCode::bad_input, "is_regular: wrong coordinate length");
  if (norm(x) == 0.0) return false;
  return regular_against_roots(rs, x);
}

namespace {

RootSystem finish_positive(RootSystem rs, const std::vector<double>& x) {
  rs.positive.clear();
  rs.coroots.clear();
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (dot(rs.roots[i].coords, x) > 0.0) rs.positive.push_back(static_cast<int>(i));
  if (2 * rs.positive.size() != rs.roots.size())
    fail(ErrorCode::numeric, "choose_positive: positive set is not half the roots");

  // make sure every positive root carries its plane basis; the pair of
  // -alpha is (-e1, e2)
  for (int idx : rs.positive) {
    Root& root = rs.roots[idx];
    if (!root.has_space) {
      const Root& other = rs.roots[root.pair];
      root.e2 = other.e2;
      root.e1 = other.e1;
      for (double& v : root.e1) v = -v;
      root.has_space = true;
    }
  }
  for (int idx : rs.positive) rs.coroots.push_back(coroot(rs, idx));
  rs.regular_element = x;
  rs.simple.clear();
  return rs;
}

}  // namespace

RootSystem choose_positive(RootSystem rs, const std::vector<double>& x) {
  if (!is_regular(rs, x))
    fail(ErrorCode::bad_input,
         "choose_positive: element lies on a root hyperplane");
  return finish_positive(std::move(rs), x);
}

RootSystem choose_positive_auto(RootSystem rs, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> x(rs.rank());
    for (double& v : x) v = rng.gaussian();
    if (is_regular(rs, x)) return finish_positive(std::move(rs), x);
  }
  fail(ErrorCode::numeric, "choose_positive: no regular element found");
}

std::vector<int> simple_roots(RootSystem& rs) {
  if (rs.positive.empty() && !rs.roots.empty())
    fail(ErrorCode::bad_input, "simple_roots: positive set not chosen");
  const std::size_t r = rs.rank();
  std::vector<int> simple;
  const double tol = 1e-8;
  for (int a : rs.positive) {
    bool is_sum = false;
    for (int b : rs.positive) {
      if (is_sum) break;
      for (int c : rs.positive) {
        double diff = 0.0;
        for (std::size_t k = 0; k < r; ++k)
          diff = std::max(diff, std::abs(rs.roots[b].coords[k] +
                                         rs.roots[c].coords[k] -
                                         rs.roots[a].coords[k]));
        if (diff < tol) {
          is_sum = true;
          break;
        }
      }
    }
    if (!is_sum) simple.push_back(a);
  }
  if (simple.size() != r)
    fail(ErrorCode::numeric, "simple root extraction found " +
                                 std::to_string(simple.size()) +
                                 " roots at rank " + std::to_string(r));

  // every positive root decomposes over the simple set with nonnegative
  // integer coefficients
  ComplexMatrix m(r, r);
  for (std::size_t col = 0; col < r; ++col)
    for (std::size_t row = 0; row < r; ++row)
      m(row, col) = rs.roots[simple[col]].coords[row];
  LuFactors f = lu_factor(m);
  if (f.singular)
    fail(ErrorCode::numeric, "simple roots do not span the Cartan dual");
  for (int p : rs.positive) {
    ComplexMatrix rhs(r, 1);
    for (std::size_t row = 0; row < r; ++row) rhs(row, 0) = rs.roots[p].coords[row];
    ComplexMatrix sol = lu_solve(f, rhs);
    for (std::size_t row = 0; row < r; ++row) {
      double v = sol(row, 0).real();
      double nearest = std::round(v);
      if (std::abs(v - nearest) > 1e-6 || nearest < -1e-6)
        fail(ErrorCode::numeric,
             "positive root is not a nonnegative integer combination of "
             "simple roots");
    }
  }
  rs.simple = simple;
  return simple;
}

std::vector<double> coroot(const RootSystem& rs, int root_index) {
  const std::vector<double>& a = rs.roots[root_index].coords;
  double n2 = dot(a, a);
  std::vector<double> cv(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) cv[k] = 2.0 * a[k] / n2;
  return cv;
}

StabilizerAlgebra stabilizer_algebra(const RootSystem& rs,
                                     const std::vector<double>& x) {
  StabilizerAlgebra out;
  const LieAlgebra& L = rs.cartan.algebra();
  for (const std::vector<double>& h : rs.cartan.basis()) out.basis.push_back(h);
  const double nx = norm(x);
  for (std::size_t pi = 0; pi < rs.positive.size(); ++pi) {
    const Root& root = rs.roots[rs.positive[pi]];
    double v = dot(root.coords, x);
    if (std::abs(v) <= 1e-8 * norm(root.coords) * nx) {
      out.basis.push_back(root.e1);
      out.basis.push_back(root.e2);
      out.vanishing_roots.push_back(static_cast<int>(pi));
    }
  }
  out.dim = out.basis.size();
  out.orbit_dim = L.dim() - out.dim;
  return out;
}

RootSystem standard_root_system(const LieAlgebra& L, std::uint64_t seed,
                                double cluster_tol) {
  if (!L.is_compact_type())
    fail(ErrorCode::unsupported,
         "root pipeline needs a compact semisimple algebra; '" + L.name() +
             "' has an indefinite Killing form");
  CartanSubalgebra t = CartanSubalgebra::standard(L);
  RootSystem rs = root_decomposition(L, t, seed, cluster_tol);
  rs = choose_positive_auto(std::move(rs), seed + 1);
  simple_roots(rs);
  return rs;
}

}  // namespace lie
