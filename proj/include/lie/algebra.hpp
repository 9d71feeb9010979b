#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lie/complex_matrix.hpp"
#include "lie/real_linalg.hpp"

namespace lie {

enum class Family { gl_r, gl_c, sl_r, sl_c, so, su, u, sp };

std::string family_name(Family f);

/// Parses compact group labels like "su3", "so7", "sp2", "sl2_r", "gl3_c".
struct GroupSpec {
  Family family;
  std::size_t n;

  static GroupSpec parse(const std::string& text);
  std::string label() const;
};

/// Symmetric bilinear form on an algebra, with its inertia.
struct BilinearForm {
  RealMatrix matrix;
  int n_pos = 0, n_zero = 0, n_neg = 0;
};

/// A finite-dimensional real matrix Lie algebra: ambient size, real basis,
/// structure constants, and a lazily computed Killing matrix. Immutable
/// after construction; safe to share across threads.
class LieAlgebra {
 public:
  static LieAlgebra classical(Family f, std::size_t n);
  static LieAlgebra classical(const GroupSpec& spec) {
    return classical(spec.family, spec.n);
  }

  /// Builds an algebra from an explicit real basis. Checks linear
  /// independence and bracket closure.
  static LieAlgebra from_basis(std::string name, std::size_t ambient,
                               std::vector<ComplexMatrix> basis,
                               double metric_scale = 1.0,
                               std::optional<Family> family = std::nullopt,
                               std::size_t family_n = 0);

  const std::string& name() const { return name_; }
  std::size_t ambient_size() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  const ComplexMatrix& basis_element(std::size_t i) const { return basis_[i]; }
  std::optional<Family> family() const { return family_; }
  std::size_t family_n() const { return family_n_; }

  /// Normalization constant of the trace form used for root coordinates;
  /// 1 for su/u, 1/2 for so/sp so that the block-angle functionals come out
  /// orthonormal.
  double metric_scale() const { return metric_scale_; }

  double structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return cstruct_[(i * dim() + j) * dim() + k];
  }

  /// Gram matrix of the basis under Re tr(X Y*), and its Cholesky factor.
  const RealMatrix& gram() const { return gram_; }
  const RealMatrix& gram_cholesky() const { return gram_chol_; }

  ComplexMatrix element(const std::vector<double>& coords) const;
  /// Coordinates of a matrix in the basis (least squares via the Gram
  /// system). Stores the off-span residual in *residual when given.
  std::vector<double> coordinates(const ComplexMatrix& m,
                                  double* residual = nullptr) const;

  /// Bracket in coordinates, through the structure constants.
  std::vector<double> bracket(const std::vector<double>& x,
                              const std::vector<double>& y) const;

  /// Matrix of ad(x) on coordinates: (ad x)_{kj} = sum_i x_i C[i][j][k].
  RealMatrix ad_matrix(const std::vector<double>& x) const;

  /// Killing matrix B_ij = tr(ad X_i ad X_j), computed once on demand.
  const RealMatrix& killing() const;
  BilinearForm killing_form() const;

  bool is_semisimple() const;
  bool is_compact_type() const;

  /// Orthonormal basis (under Re tr(XY*)) of the center, as coordinate
  /// vectors.
  std::vector<std::vector<double>> center() const;

  /// Max Jacobi-identity residual of the structure constants.
  double jacobi_residual() const;

  /// Splits a compact-type algebra into pairwise orthogonal simple ideals.
  std::vector<LieAlgebra> split_simple_ideals(std::uint64_t seed = 0x5eed) const;

 private:
  LieAlgebra() = default;
  void compute_structure_constants();

  std::string name_;
  std::size_t ambient_ = 0;
  std::vector<ComplexMatrix> basis_;
  std::vector<double> cstruct_;
  RealMatrix gram_, gram_chol_;
  double metric_scale_ = 1.0;
  std::optional<Family> family_;
  std::size_t family_n_ = 0;

  struct KillingCache {
    std::once_flag flag;
    RealMatrix matrix;
  };
  std::shared_ptr<KillingCache> killing_cache_ = std::make_shared<KillingCache>();
};

/// Block-diagonal embedding of two algebras; dimensions add and cross
/// brackets vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace lie
