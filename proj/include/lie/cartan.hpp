#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lie/algebra.hpp"

namespace lie {

/// Inner product on algebra coordinates under the family-normalized trace
/// form (metric_scale times Re tr(XY*)).
double scaled_inner(const LieAlgebra& L, const std::vector<double>& x,
                    const std::vector<double>& y);

/// A maximal abelian subalgebra, with a basis orthonormal under the
/// family-normalized trace form. Owns a copy of its algebra, so values are
/// self-contained and freely shareable.
class CartanSubalgebra {
 public:
  /// The textbook Cartan subalgebra of a classical family: diagonals for
  /// su/u/sp, plane-rotation blocks for so.
  static CartanSubalgebra standard(const LieAlgebra& L);

  /// ker(ad X) for a generic X. Retries with fresh random elements (up to 8)
  /// when the kernel comes out non-abelian.
  static CartanSubalgebra centralizer(const LieAlgebra& L,
                                      std::vector<double> x,
                                      std::uint64_t seed = 1);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t rank() const { return basis_.size(); }
  /// Basis vectors as algebra coordinates.
  const std::vector<std::vector<double>>& basis() const { return basis_; }

  /// Cartan coordinates -> algebra coordinates.
  std::vector<double> algebra_coords(const std::vector<double>& h) const;
  /// Orthogonal projection of algebra coordinates onto t, in Cartan
  /// coordinates.
  std::vector<double> cartan_coords(const std::vector<double>& x) const;
  ComplexMatrix element(const std::vector<double>& h) const;

 private:
  CartanSubalgebra(LieAlgebra algebra, std::vector<std::vector<double>> basis);
  void validate() const;

  LieAlgebra algebra_;
  std::vector<std::vector<double>> basis_;
};

/// A root with its coordinate vector in the Cartan basis and, for pair
/// representatives and positive roots, the real plane basis (e1, e2) in
/// algebra coordinates.
struct Root {
  std::vector<double> coords;
  std::vector<double> e1, e2;
  int pair = -1;
  bool has_space = false;
};

struct RootSystem {
  CartanSubalgebra cartan;
  std::vector<Root> roots;
  std::vector<int> positive;                 // indices into roots
  std::vector<int> simple;                   // indices into roots
  std::vector<std::vector<double>> coroots;  // aligned with positive
  std::vector<double> regular_element;       // Cartan coordinates
  double cluster_tol = 1e-7;

  std::size_t rank() const { return cartan.rank(); }
  double evaluate(int root_index, const std::vector<double>& x) const;
};

/// Simultaneous eigenspace decomposition of ad over the complexification.
/// Requires a compact semisimple algebra.
RootSystem root_decomposition(const LieAlgebra& L, const CartanSubalgebra& t,
                              std::uint64_t seed = 1, double cluster_tol = 1e-7);

/// Fills the positive set from a regular element of t.
RootSystem choose_positive(RootSystem rs, const std::vector<double>& x);
/// Same, with a random regular element (retries until regular).
RootSystem choose_positive_auto(RootSystem rs, std::uint64_t seed = 1);

/// Positive roots that are not sums of two positive roots. Validates the
/// count and the nonnegative-integer decomposition of every positive root.
std::vector<int> simple_roots(RootSystem& rs);

/// 2 a / <a, a> in Cartan coordinates.
std::vector<double> coroot(const RootSystem& rs, int root_index);

struct StabilizerAlgebra {
  std::size_t dim = 0;
  std::size_t orbit_dim = 0;
  std::vector<std::vector<double>> basis;  // algebra coordinates
  std::vector<int> vanishing_roots;        // positive-root indices with a(X) = 0
};

/// t plus every root plane with a(X) = 0; reports the orbit dimension.
StabilizerAlgebra stabilizer_algebra(const RootSystem& rs,
                                     const std::vector<double>& x);

bool is_regular(const RootSystem& rs, const std::vector<double>& x);

/// Full pipeline: standard Cartan, decomposition, auto positives, simple
/// roots.
RootSystem standard_root_system(const LieAlgebra& L, std::uint64_t seed = 1,
                                double cluster_tol = 1e-7);

}  // namespace lie
