#pragma once

#include <vector>

#include "lie/complex_matrix.hpp"

namespace lie {

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors as unitary columns.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// AB - BA. Both inputs square and of equal size.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re tr(A B*).
double frobenius_real_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix exponential by scaling and squaring with a degree-13 Pade kernel.
ComplexMatrix mat_exp(const ComplexMatrix& a);

/// Principal matrix logarithm by inverse scaling and squaring. Requires an
/// invertible input with no spectrum on the closed negative real axis;
/// intended for inputs near the identity.
ComplexMatrix mat_log_principal(const ComplexMatrix& a);

/// Cyclic Jacobi eigensolver for Hermitian matrices.
HermitianEigen herm_eig(const ComplexMatrix& h);

}  // namespace lie
