#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgeom/tensor.hpp"

namespace cgeom {

/// A homogeneous manifold presented by a global frame e_1..e_dim with
/// constant structure constants and a constant metric.
///
/// Structure constants are a (1,2) tensor, `structure()(k, i, j)` being the
/// e_k component of [e_i, e_j]. Construction validates odd dimension,
/// antisymmetry, the Jacobi identity, metric symmetry and nondegeneracy.
class FrameManifold {
 public:
  FrameManifold(std::string name, std::vector<std::string> frame_names, Tensor structure, Tensor metric,
                std::optional<std::string> param = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return names_.size(); }
  /// n in dim = 2n + 1.
  std::size_t half_dim() const noexcept { return (dim() - 1) / 2; }
  const std::vector<std::string>& frame_names() const noexcept { return names_; }
  const std::optional<std::string>& param() const noexcept { return param_; }
  /// Name used when printing scalars; "t" if none is declared.
  std::string var() const { return param_.value_or("t"); }

  const Tensor& structure() const noexcept { return structure_; }
  const Tensor& metric() const noexcept { return metric_; }
  const Tensor& inverse_metric() const noexcept { return inverse_metric_; }

  /// [X, Y]^k = X^i Y^j c^k_ij; throws ValidationError on length mismatch.
  Vector bracket(const Vector& x, const Vector& y) const;
  Scalar inner(const Vector& x, const Vector& y) const;
  Vector basis(std::size_t i) const { return basis_vector(dim(), i); }
  /// Metric dual covector g(X, .) as component list.
  Vector flat(const Vector& x) const;

  std::optional<std::size_t> index_of(std::string_view frame_name) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  Tensor structure_;
  Tensor metric_;
  Tensor inverse_metric_;
  std::optional<std::string> param_;
};

/// First (i, j, l) whose Jacobi sum is nonzero, if any.
std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const Tensor& structure);

/// Inverse of a square (0,2) matrix over the field; nullopt if singular.
std::optional<Tensor> invert_metric(const Tensor& metric);

}  // namespace cgeom
