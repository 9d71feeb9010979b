#pragma once

#include <vector>

#include "lie/complex_matrix.hpp"
#include "lie/rng.hpp"

namespace lie::testing {

inline ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = cplx(rng.gaussian(), rng.gaussian());
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  return 0.5 * (m + m.adjoint());
}

inline ComplexMatrix random_skew_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  return 0.5 * (m - m.adjoint());
}

/// 3x3 generator of rotations about xi, acting as the cross product.
inline ComplexMatrix so3_generator(double x1, double x2, double x3) {
  ComplexMatrix a(3, 3);
  a(0, 1) = -x3; a(0, 2) = x2;
  a(1, 0) = x3;  a(1, 2) = -x1;
  a(2, 0) = -x2; a(2, 1) = x1;
  return a;
}

inline std::vector<double> random_coords(std::size_t d, Rng& rng) {
  std::vector<double> v(d);
  for (double& x : v) x = rng.gaussian();
  return v;
}

}  // namespace lie::testing
