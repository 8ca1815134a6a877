#include "cgeom/frame.hpp"

#include <set>

namespace cgeom {

std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const Tensor& c) {
  const std::size_t n = c.dim();
  // [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]], component k.
  auto nested = [&](std::size_t i, std::size_t j, std::size_t l, std::size_t k) {
    Scalar acc;
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& inner = c(m, j, l);
      if (inner.is_zero()) continue;
      acc += inner * c(k, i, m);
    }
    return acc;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          Scalar sum = nested(i, j, l, k) + nested(j, l, i, k) + nested(l, i, j, k);
          if (!sum.is_zero()) return std::array<std::size_t, 3>{i, j, l};
        }
  return std::nullopt;
}

std::optional<Tensor> invert_metric(const Tensor& metric) {
  const std::size_t n = metric.dim();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = metric(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    Scalar inv = a[col][col].inverse();
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
    }
  }
  Tensor inv(n, 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j];
  return inv;
}

FrameManifold::FrameManifold(std::string name, std::vector<std::string> frame_names, Tensor structure,
                             Tensor metric, std::optional<std::string> param)
    : name_(std::move(name)),
      names_(std::move(frame_names)),
      structure_(std::move(structure)),
      metric_(std::move(metric)),
      param_(std::move(param)) {
  const std::size_t n = names_.size();
  if (n < 3 || n % 2 == 0)
    throw ValidationError("dimension must be odd and at least 3, got " + std::to_string(n));
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
    throw ValidationError("frame names must be distinct");
  if (structure_.dim() != n || structure_.upper() != 1 || structure_.lower() != 2)
    throw ValidationError("structure constants must be a (1,2) table of the frame dimension");
  if (metric_.dim() != n || metric_.rank() != 2 || metric_.upper() != 0)
    throw ValidationError("metric must be a (0,2) table of the frame dimension");

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!(structure_(k, i, j) == -structure_(k, j, i)))
          throw ValidationError("structure constants not antisymmetric at [" + names_[i] + ", " + names_[j] + "]");

  if (auto bad = find_jacobi_violation(structure_)) {
    throw ValidationError("Jacobi identity fails for (" + names_[(*bad)[0]] + ", " + names_[(*bad)[1]] + ", " +
                          names_[(*bad)[2]] + ")");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(metric_(i, j) == metric_(j, i))) throw ValidationError("metric is not symmetric");

  auto inv = invert_metric(metric_);
  if (!inv) throw ValidationError("metric is degenerate");
  inverse_metric_ = std::move(*inv);
}

Vector FrameManifold::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw ValidationError("vector length mismatch in bracket");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!structure_(k, i, j).is_zero()) r[k] += xy * structure_(k, i, j);
    }
  }
  return r;
}

Scalar FrameManifold::inner(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw ValidationError("vector length mismatch in inner product");
  Scalar acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!y[j].is_zero() && !metric_(i, j).is_zero()) acc += x[i] * metric_(i, j) * y[j];
  }
  return acc;
}

Vector FrameManifold::flat(const Vector& x) const {
  Vector r(dim());
  for (std::size_t j = 0; j < dim(); ++j) r[j] = inner(x, basis(j));
  return r;
}

std::optional<std::size_t> FrameManifold::index_of(std::string_view frame_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == frame_name) return i;
  return std::nullopt;
}

}  // namespace cgeom
