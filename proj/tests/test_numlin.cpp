#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lie/error.hpp"
#include "lie/numlin.hpp"
#include "lie/rng.hpp"
#include "test_support.hpp"

using namespace lie;
using namespace lie::testing;

namespace {

// Entrywise product via an independent naive triple loop, used as the
// oracle for the commutator.
ComplexMatrix naive_mult(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s(0.0, 0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

}  // namespace

TEST_CASE("commutator basics") {
  Rng rng(1);
  ComplexMatrix a = random_matrix(4, rng);
  CHECK((commutator(a, a)).frobenius_norm() == doctest::Approx(0.0));

  // [A_xi, A_eta] = A_{xi x eta} for the 3x3 rotation generators
  ComplexMatrix ax = so3_generator(1.0, 0.0, 0.0);
  ComplexMatrix ay = so3_generator(0.0, 1.0, 0.0);
  ComplexMatrix az = so3_generator(0.0, 0.0, 1.0);
  CHECK((commutator(ax, ay) - az).frobenius_norm() < 1e-14);
  CHECK((commutator(ay, az) - ax).frobenius_norm() < 1e-14);
  CHECK((commutator(az, ax) - ay).frobenius_norm() < 1e-14);

  // against the naive multiply oracle
  ComplexMatrix b = random_matrix(4, rng);
  ComplexMatrix expect = naive_mult(a, b) - naive_mult(b, a);
  CHECK((commutator(a, b) - expect).frobenius_norm() < 1e-12 * expect.frobenius_norm());

  ComplexMatrix wrong(3, 3);
  CHECK_THROWS_AS(commutator(a, wrong), Error);
}

TEST_CASE("commutator antisymmetry and Jacobi") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a = random_matrix(5, rng);
    ComplexMatrix b = random_matrix(5, rng);
    ComplexMatrix c = random_matrix(5, rng);
    double scale = a.frobenius_norm() * b.frobenius_norm();
    CHECK((commutator(a, b) + commutator(b, a)).frobenius_norm() <= 1e-14 * scale);
    ComplexMatrix jac = commutator(commutator(a, b), c) +
                        commutator(commutator(b, c), a) +
                        commutator(commutator(c, a), b);
    CHECK(jac.frobenius_norm() <=
          1e-12 * a.frobenius_norm() * b.frobenius_norm() * c.frobenius_norm());
  }
}

TEST_CASE("mat_exp of zero is the identity") {
  ComplexMatrix z(4, 4);
  CHECK((mat_exp(z) - ComplexMatrix::identity(4)).frobenius_norm() < 1e-15);
}

TEST_CASE("mat_exp of the z-axis generator is a rotation") {
  const double theta = 0.7;
  ComplexMatrix a = so3_generator(0.0, 0.0, theta);
  ComplexMatrix r = mat_exp(a);
  ComplexMatrix expect(3, 3);
  expect(0, 0) = std::cos(theta); expect(0, 1) = -std::sin(theta);
  expect(1, 0) = std::sin(theta); expect(1, 1) = std::cos(theta);
  expect(2, 2) = 1.0;
  CHECK((r - expect).frobenius_norm() < 1e-14);
}

TEST_CASE("mat_exp of skew-Hermitian matrices is unitary") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix x = random_skew_hermitian(5, rng);
    ComplexMatrix u = mat_exp(x);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(5)).frobenius_norm() < 1e-12);
    CHECK(std::abs(std::abs(determinant(u)) - 1.0) < 1e-12);
  }
}

TEST_CASE("mat_exp against a long Taylor series at moderate norm") {
  Rng rng(4);
  ComplexMatrix a = random_matrix(4, rng);
  a *= cplx(2.0 / a.frobenius_norm(), 0.0);
  ComplexMatrix series = ComplexMatrix::identity(4);
  ComplexMatrix term = ComplexMatrix::identity(4);
  for (int k = 1; k <= 60; ++k) {
    term = term * a;
    term *= cplx(1.0 / k, 0.0);
    series += term;
  }
  ComplexMatrix e = mat_exp(a);
  CHECK((e - series).frobenius_norm() < 1e-12 * series.frobenius_norm());
}

TEST_CASE("mat_exp at norm ten against an independent squaring oracle") {
  Rng rng(14);
  // skew-Hermitian keeps the problem well conditioned at this norm
  ComplexMatrix a = random_skew_hermitian(5, rng);
  a *= cplx(10.0 / a.frobenius_norm(), 0.0);
  ComplexMatrix scaled = a;
  scaled *= cplx(1.0 / 1024.0, 0.0);
  ComplexMatrix oracle = ComplexMatrix::identity(5);
  ComplexMatrix term = ComplexMatrix::identity(5);
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled;
    term *= cplx(1.0 / k, 0.0);
    oracle += term;
  }
  for (int s = 0; s < 10; ++s) oracle = oracle * oracle;
  ComplexMatrix e = mat_exp(a);
  CHECK((e - oracle).frobenius_norm() <= 1e-12 * oracle.frobenius_norm());

  // a general matrix at moderate norm
  ComplexMatrix g = random_matrix(4, rng);
  g *= cplx(4.0 / g.frobenius_norm(), 0.0);
  ComplexMatrix gs = g;
  gs *= cplx(1.0 / 1024.0, 0.0);
  ComplexMatrix go = ComplexMatrix::identity(4);
  ComplexMatrix gt = ComplexMatrix::identity(4);
  for (int k = 1; k <= 30; ++k) {
    gt = gt * gs;
    gt *= cplx(1.0 / k, 0.0);
    go += gt;
  }
  for (int s = 0; s < 10; ++s) go = go * go;
  CHECK((mat_exp(g) - go).frobenius_norm() <= 1e-12 * go.frobenius_norm());
}

TEST_CASE("mat_exp is multiplicative on commuting arguments") {
  Rng rng(5);
  ComplexMatrix a = random_matrix(4, rng);
  a *= cplx(1.0 / a.frobenius_norm(), 0.0);
  ComplexMatrix x = a * a;          // commutes with a^3
  ComplexMatrix y = a * a * a;
  CHECK(commutator(x, y).frobenius_norm() < 1e-14);
  ComplexMatrix lhs = mat_exp(x + y);
  ComplexMatrix rhs = mat_exp(x) * mat_exp(y);
  CHECK((lhs - rhs).frobenius_norm() < 1e-10 * lhs.frobenius_norm());
}

TEST_CASE("mat_log_principal basics") {
  CHECK(mat_log_principal(ComplexMatrix::identity(3)).frobenius_norm() < 1e-14);

  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix x = random_matrix(4, rng);
    x *= cplx(0.5 / x.frobenius_norm(), 0.0);
    ComplexMatrix back = mat_log_principal(mat_exp(x));
    CHECK((back - x).frobenius_norm() < 1e-9 * (1.0 + x.frobenius_norm()));
  }

  // eigenvalues on the cut
  ComplexMatrix minus_id = -ComplexMatrix::identity(2);
  CHECK_THROWS_AS(mat_log_principal(minus_id), Error);

  // singular input
  ComplexMatrix sing(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(mat_log_principal(sing), Error);
}

TEST_CASE("mat_log round trip at larger scales") {
  Rng rng(7);
  ComplexMatrix x = random_skew_hermitian(5, rng);
  x *= cplx(1.2 / x.frobenius_norm(), 0.0);
  ComplexMatrix a = mat_exp(x);
  ComplexMatrix l = mat_log_principal(a);
  CHECK((mat_exp(l) - a).frobenius_norm() < 1e-10 * a.frobenius_norm());
}

TEST_CASE("herm_eig on simple diagonal cases") {
  ComplexMatrix id3 = ComplexMatrix::identity(3);
  HermitianEigen e = herm_eig(id3);
  for (double lam : e.eigenvalues) CHECK(lam == doctest::Approx(1.0));

  ComplexMatrix d(3, 3);
  d(0, 0) = -2.0; d(1, 1) = 0.0; d(2, 2) = 5.0;
  HermitianEigen ed = herm_eig(d);
  CHECK(ed.eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(ed.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(ed.eigenvalues[2] == doctest::Approx(5.0));
  // eigenvectors are permuted identity columns
  for (std::size_t j = 0; j < 3; ++j) {
    double offmass = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(ed.eigenvectors(i, j)) < 0.5) offmass += std::norm(ed.eigenvectors(i, j));
    CHECK(offmass < 1e-20);
  }
}

TEST_CASE("herm_eig reconstruction and unitarity residuals") {
  Rng rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    ComplexMatrix h = random_hermitian(6, rng);
    HermitianEigen e = herm_eig(h);
    for (std::size_t i = 0; i + 1 < e.eigenvalues.size(); ++i)
      CHECK(e.eigenvalues[i] <= e.eigenvalues[i + 1]);
    ComplexMatrix lam(6, 6);
    for (std::size_t i = 0; i < 6; ++i) lam(i, i) = e.eigenvalues[i];
    ComplexMatrix recon = e.eigenvectors * lam * e.eigenvectors.adjoint();
    CHECK((h - recon).frobenius_norm() <= 1e-10 * (1.0 + h.frobenius_norm()));
    CHECK((e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::identity(6))
              .frobenius_norm() <= 1e-10);
  }
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  Rng rng(9);
  ComplexMatrix m = random_matrix(4, rng);
  CHECK_THROWS_AS(herm_eig(m), Error);
}

TEST_CASE("eigenvalues of i times a skew-Hermitian matrix are real") {
  Rng rng(10);
  ComplexMatrix x = random_skew_hermitian(5, rng);
  ComplexMatrix ix = cplx(0.0, 1.0) * x;
  HermitianEigen e = herm_eig(ix);  // would throw if ix were not Hermitian
  CHECK(e.eigenvalues.size() == 5);
}

TEST_CASE("frobenius_real_inner basics") {
  ComplexMatrix id4 = ComplexMatrix::identity(4);
  CHECK(frobenius_real_inner(id4, id4) == doctest::Approx(4.0));

  Rng rng(11);
  ComplexMatrix x = random_matrix(4, rng);
  double n2 = frobenius_real_inner(x, x);
  CHECK(n2 >= 0.0);
  CHECK(n2 == doctest::Approx(x.frobenius_norm() * x.frobenius_norm()));
  ComplexMatrix z(4, 4);
  CHECK(frobenius_real_inner(z, z) == 0.0);

  ComplexMatrix wrong(3, 3);
  CHECK_THROWS_AS(frobenius_real_inner(x, wrong), Error);
}

TEST_CASE("frobenius_real_inner is invariant under unitary conjugation") {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    ComplexMatrix g = mat_exp(random_skew_hermitian(4, rng));
    ComplexMatrix ginv = inverse(g);
    ComplexMatrix x = random_skew_hermitian(4, rng);
    ComplexMatrix y = random_skew_hermitian(4, rng);
    double lhs = frobenius_real_inner(g * x * ginv, g * y * ginv);
    double rhs = frobenius_real_inner(x, y);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}
