#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lie/cartan.hpp"
#include "lie/error.hpp"
#include "lie/rng.hpp"
#include "lie/weyl.hpp"
#include "test_support.hpp"

using namespace lie;
using namespace lie::testing;

namespace {

std::vector<std::int64_t> matrix_key(const RealMatrix& m) {
  std::vector<std::int64_t> key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      key.push_back(llround(m(i, j) * 1e6));
  return key;
}

// theta vectors of the Cartan basis elements, as columns of E
RealMatrix theta_embedding(const LieAlgebra& L, const CartanSubalgebra& t) {
  std::vector<std::vector<double>> thetas;
  for (const auto& h : t.basis()) {
    ComplexMatrix hm = L.element(h);
    std::vector<double> th;
    if (L.family() == Family::su || L.family() == Family::u) {
      for (std::size_t k = 0; k < L.ambient_size(); ++k)
        th.push_back(hm(k, k).imag());
    } else if (L.family() == Family::so) {
      for (std::size_t j = 0; 2 * j + 1 < L.ambient_size(); ++j)
        th.push_back(hm(2 * j, 2 * j + 1).real());
    } else if (L.family() == Family::sp) {
      for (std::size_t k = 0; k < L.family_n(); ++k)
        th.push_back(hm(k, k).imag());
    }
    thetas.push_back(th);
  }
  RealMatrix e(thetas[0].size(), thetas.size());
  for (std::size_t col = 0; col < thetas.size(); ++col)
    for (std::size_t row = 0; row < thetas[col].size(); ++row)
      e(row, col) = thetas[col][row];
  return e;
}

// all permutation matrices of size n
std::vector<RealMatrix> permutation_matrices(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<RealMatrix> out;
  do {
    RealMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = 1.0;
    out.push_back(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// all signed permutation matrices of size n
std::vector<RealMatrix> signed_permutation_matrices(std::size_t n) {
  std::vector<RealMatrix> perms = permutation_matrices(n);
  std::vector<RealMatrix> out;
  for (const RealMatrix& p : perms)
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      RealMatrix sp = p;
      for (std::size_t col = 0; col < n; ++col)
        if (mask & (std::size_t{1} << col))
          for (std::size_t row = 0; row < n; ++row) sp(row, col) = -sp(row, col);
      out.push_back(sp);
    }
  return out;
}

std::set<std::vector<std::int64_t>> group_keys(const WeylGroup& w) {
  std::set<std::vector<std::int64_t>> keys;
  for (const WeylElement& e : w.elements) keys.insert(matrix_key(e.matrix));
  return keys;
}

}  // namespace

TEST_CASE("reflection basics") {
  LieAlgebra su3 = LieAlgebra::classical(Family::su, 3);
  RootSystem rs = standard_root_system(su3);
  for (int idx : rs.positive) {
    WeylElement w = reflection(rs, idx);
    // orthogonality
    CHECK((w.matrix.transpose() * w.matrix - RealMatrix::identity(rs.rank()))
              .frobenius_norm() < 1e-10);
    // reflects its own root vector
    std::vector<double> image = w.matrix * rs.roots[idx].coords;
    for (std::size_t k = 0; k < image.size(); ++k)
      CHECK(image[k] == doctest::Approx(-rs.roots[idx].coords[k]).epsilon(1e-10));
    // involution
    CHECK((w.matrix * w.matrix - RealMatrix::identity(rs.rank()))
              .frobenius_norm() <= 1e-12);
  }
}

TEST_CASE("reflections permute the root multiset") {
  LieAlgebra su3 = LieAlgebra::classical(Family::su, 3);
  RootSystem rs = standard_root_system(su3);
  for (int idx : rs.positive) {
    WeylElement w = reflection(rs, idx);
    for (const Root& root : rs.roots) {
      std::vector<double> image = w.matrix * root.coords;
      bool found = false;
      for (const Root& other : rs.roots) {
        double diff = 0.0;
        for (std::size_t k = 0; k < image.size(); ++k)
          diff = std::max(diff, std::abs(image[k] - other.coords[k]));
        if (diff < 1e-7) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("Weyl group of su(3) matches the permutation oracle") {
  LieAlgebra su3 = LieAlgebra::classical(Family::su, 3);
  RootSystem rs = standard_root_system(su3);
  WeylGroup w = generate(rs);
  CHECK(w.order() == 6);

  RealMatrix e = theta_embedding(su3, rs.cartan);
  std::set<std::vector<std::int64_t>> oracle;
  for (const RealMatrix& p : permutation_matrices(3))
    oracle.insert(matrix_key(e.transpose() * (p * e)));
  CHECK(oracle == group_keys(w));
}

TEST_CASE("Weyl groups of so(5), so(7) match the signed-permutation oracle") {
  LieAlgebra so5 = LieAlgebra::classical(Family::so, 5);
  RootSystem rs5 = standard_root_system(so5);
  WeylGroup w5 = generate(rs5);
  CHECK(w5.order() == 8);
  RealMatrix e5 = theta_embedding(so5, rs5.cartan);
  std::set<std::vector<std::int64_t>> oracle5;
  for (const RealMatrix& p : signed_permutation_matrices(2))
    oracle5.insert(matrix_key(e5.transpose() * (p * e5)));
  CHECK(oracle5 == group_keys(w5));

  LieAlgebra so7 = LieAlgebra::classical(Family::so, 7);
  RootSystem rs7 = standard_root_system(so7);
  WeylGroup w7 = generate(rs7);
  CHECK(w7.order() == 48);
  RealMatrix e7 = theta_embedding(so7, rs7.cartan);
  std::set<std::vector<std::int64_t>> oracle7;
  for (const RealMatrix& p : signed_permutation_matrices(3))
    oracle7.insert(matrix_key(e7.transpose() * (p * e7)));
  CHECK(oracle7 == group_keys(w7));
}

TEST_CASE("rank one gives the two-element group") {
  LieAlgebra su2 = LieAlgebra::classical(Family::su, 2);
  RootSystem rs = standard_root_system(su2);
  WeylGroup w = generate(rs);
  CHECK(w.order() == 2);
}

TEST_CASE("every element permutes the roots and stores a valid word") {
  LieAlgebra so5 = LieAlgebra::classical(Family::so, 5);
  RootSystem rs = standard_root_system(so5);
  WeylGroup w = generate(rs);
  for (const WeylElement& e : w.elements) {
    for (const Root& root : rs.roots) {
      std::vector<double> image = e.matrix * root.coords;
      bool found = false;
      for (const Root& other : rs.roots) {
        double diff = 0.0;
        for (std::size_t k = 0; k < image.size(); ++k)
          diff = std::max(diff, std::abs(image[k] - other.coords[k]));
        if (diff < 1e-7) found = true;
      }
      CHECK(found);
    }
    // the stored word reproduces the matrix
    RealMatrix prod = RealMatrix::identity(rs.rank());
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it)
      prod = reflection(rs, rs.simple[*it]).matrix * prod;
    CHECK((prod - e.matrix).frobenius_norm() < 1e-8);
  }
}

TEST_CASE("chamber signs") {
  LieAlgebra su3 = LieAlgebra::classical(Family::su, 3);
  RootSystem rs = standard_root_system(su3);

  // the sum of coroots is dominant regular
  std::vector<double> x(rs.rank(), 0.0);
  for (const auto& cv : rs.coroots)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += cv[k];
  std::vector<int> signs = chamber_of(rs, x);
  for (int s : signs) CHECK(s == 1);

  std::vector<double> nx = x;
  for (double& v : nx) v = -v;
  for (int s : chamber_of(rs, nx)) CHECK(s == -1);

  std::vector<double> zero(rs.rank(), 0.0);
  CHECK_THROWS_AS(chamber_of(rs, zero), Error);
}

TEST_CASE("sampled chamber count equals the group order") {
  for (const char* name : {"su3", "so5"}) {
    LieAlgebra L = LieAlgebra::classical(GroupSpec::parse(name));
    RootSystem rs = standard_root_system(L);
    WeylGroup w = generate(rs);
    Rng rng(11);
    std::set<std::vector<int>> chambers;
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<double> x = random_coords(rs.rank(), rng);
      if (!is_regular(rs, x)) continue;
      std::vector<int> signs;
      for (const Root& root : rs.roots)
        signs.push_back(dot(root.coords, x) > 0.0 ? 1 : -1);
      chambers.insert(signs);
    }
    CHECK(chambers.size() == w.order());
  }
}

TEST_CASE("fundamental domain walk") {
  LieAlgebra so5 = LieAlgebra::classical(Family::so, 5);
  RootSystem rs = standard_root_system(so5);
  WeylGroup w = generate(rs);
  Rng rng(13);

  // dominant points are fixed with the identity word
  std::vector<double> dom(rs.rank(), 0.0);
  for (const auto& cv : rs.coroots)
    for (std::size_t k = 0; k < dom.size(); ++k) dom[k] += cv[k];
  CanonicalPoint fixed = to_fundamental_domain(rs, w, dom);
  CHECK(fixed.applied.word.empty());
  for (std::size_t k = 0; k < dom.size(); ++k)
    CHECK(fixed.point[k] == doctest::Approx(dom[k]));

  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> x = random_coords(rs.rank(), rng);
    CanonicalPoint canon = to_fundamental_domain(rs, w, x);
    // lands in the closed chamber
    for (int idx : rs.simple)
      CHECK(dot(rs.roots[idx].coords, canon.point) >= -1e-10);
    // w x equals the canonical point
    std::vector<double> wx = canon.applied.matrix * x;
    for (std::size_t k = 0; k < wx.size(); ++k)
      CHECK(wx[k] == doctest::Approx(canon.point[k]).epsilon(1e-10));
    // matches the brute-force orbit representative
    int in_chamber = 0;
    std::vector<double> best;
    for (const auto& y : weyl_orbit(w, x)) {
      bool ok = true;
      for (int idx : rs.simple)
        if (dot(rs.roots[idx].coords, y) < -1e-10) ok = false;
      if (ok) {
        ++in_chamber;
        best = y;
      }
    }
    CHECK(in_chamber == 1);
    for (std::size_t k = 0; k < best.size(); ++k)
      CHECK(best[k] == doctest::Approx(canon.point[k]).epsilon(1e-8));
    // idempotence
    CanonicalPoint again = to_fundamental_domain(rs, w, canon.point);
    CHECK(again.applied.word.empty());
  }

  // negative of a dominant point canonicalizes back into the chamber
  std::vector<double> neg = dom;
  for (double& v : neg) v = -v;
  CanonicalPoint canon = to_fundamental_domain(rs, w, neg);
  for (int idx : rs.simple)
    CHECK(dot(rs.roots[idx].coords, canon.point) >= -1e-10);
}

TEST_CASE("orbits") {
  LieAlgebra su3 = LieAlgebra::classical(Family::su, 3);
  RootSystem rs = standard_root_system(su3);
  WeylGroup w = generate(rs);

  std::vector<double> zero(rs.rank(), 0.0);
  CHECK(weyl_orbit(w, zero).size() == 1);

  Rng rng(17);
  std::vector<double> x = random_coords(rs.rank(), rng);
  REQUIRE(is_regular(rs, x));
  CHECK(weyl_orbit(w, x).size() == 6);

  // singular orbit on one wall of so(5): orbit size |W| / stabilizer
  LieAlgebra so5 = LieAlgebra::classical(Family::so, 5);
  RootSystem rs5 = standard_root_system(so5);
  WeylGroup w5 = generate(rs5);
  // an element with exactly one vanishing root pair
  std::vector<double> on_wall;
  for (int idx : rs5.positive) {
    // try the coroot direction of another root
    std::vector<double> probe = coroot(rs5, idx);
    int vanishing = 0;
    for (const Root& root : rs5.roots)
      if (std::abs(dot(root.coords, probe)) < 1e-9 * norm(root.coords) * norm(probe))
        ++vanishing;
    if (vanishing == 2) {
      on_wall = probe;
      break;
    }
  }
  REQUIRE(!on_wall.empty());
  std::size_t orbit = weyl_orbit(w5, on_wall).size();
  CHECK(orbit == 4);
  CHECK(w5.order() % orbit == 0);
}

TEST_CASE("orbit size divides the group order") {
  LieAlgebra so7 = LieAlgebra::classical(Family::so, 7);
  RootSystem rs = standard_root_system(so7);
  WeylGroup w = generate(rs);
  Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> x = random_coords(rs.rank(), rng);
    CHECK(w.order() % weyl_orbit(w, x).size() == 0);
  }
}

TEST_CASE("regular orbit hits the closed chamber exactly once") {
  for (const char* name : {"su2", "su3", "su4", "so5", "so7", "sp3"}) {
    LieAlgebra L = LieAlgebra::classical(GroupSpec::parse(name));
    RootSystem rs = standard_root_system(L);
    WeylGroup w = generate(rs);
    Rng rng(23);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> x = random_coords(rs.rank(), rng);
      if (!is_regular(rs, x)) continue;
      auto orbit = weyl_orbit(w, x);
      CHECK(orbit.size() == w.order());
      int inside = 0;
      for (const auto& y : orbit) {
        bool ok = true;
        for (int idx : rs.simple)
          if (dot(rs.roots[idx].coords, y) < -1e-8) ok = false;
        if (ok) ++inside;
      }
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("expected orders across families") {
  CHECK(generate(standard_root_system(LieAlgebra::classical(Family::su, 4))).order() == 24);
  CHECK(generate(standard_root_system(LieAlgebra::classical(Family::sp, 3))).order() == 48);
  LieAlgebra su3 = LieAlgebra::classical(Family::su, 3);
  // centralizer Cartan gives the same order
  Rng rng(29);
  std::vector<double> x = random_coords(su3.dim(), rng);
  CartanSubalgebra t2 = CartanSubalgebra::centralizer(su3, x);
  RootSystem rs2 = choose_positive_auto(root_decomposition(su3, t2), 3);
  simple_roots(rs2);
  CHECK(generate(rs2).order() == 6);
}
