#include "cgeom/tensor.hpp"

namespace cgeom {

PTensor promote(const Tensor& t) {
  PTensor r(t.dim(), t.upper(), t.lower());
  auto src = t.components();
  auto dst = r.components();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = PScalar(src[i]);
  return r;
}

Tensor lower_index(const Tensor& t, const Tensor& metric) {
  if (t.upper() == 0) throw ValidationError("no contravariant slot to lower");
  const std::size_t n = t.dim();
  Tensor r(n, t.upper() - 1, t.lower() + 1);
  const unsigned slot = t.upper() - 1;
  std::vector<std::size_t> src(t.rank());
  for (std::size_t pos = 0; pos < r.size(); ++pos) {
    auto idx = r.unflatten(pos);
    // idx = (upper'..., b, lower...) with b the new covariant slot
    Scalar acc;
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& g = metric(idx[slot], m);
      if (g.is_zero()) continue;
      std::copy(idx.begin(), idx.end(), src.begin());
      src[slot] = m;
      acc += g * t.at(src);
    }
    r.components()[pos] = std::move(acc);
  }
  return r;
}

Tensor raise_index(const Tensor& t, const Tensor& inverse_metric) {
  if (t.lower() == 0) throw ValidationError("no covariant slot to raise");
  const std::size_t n = t.dim();
  Tensor r(n, t.upper() + 1, t.lower() - 1);
  // The raised slot sits at position upper() in both layouts.
  const unsigned slot = t.upper();
  std::vector<std::size_t> src(t.rank());
  for (std::size_t pos = 0; pos < r.size(); ++pos) {
    auto idx = r.unflatten(pos);
    Scalar acc;
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& g = inverse_metric(idx[slot], m);
      if (g.is_zero()) continue;
      std::copy(idx.begin(), idx.end(), src.begin());
      src[slot] = m;
      acc += g * t.at(src);
    }
    r.components()[pos] = std::move(acc);
  }
  return r;
}

Vector apply(const Tensor& endo, const Vector& v) {
  const std::size_t n = endo.dim();
  if (v.size() != n) throw ValidationError("vector length mismatch");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) r[i] += endo(i, j) * v[j];
  return r;
}

Tensor compose(const Tensor& a, const Tensor& b) {
  const std::size_t n = a.dim();
  Tensor r(n, 1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc;
      for (std::size_t m = 0; m < n; ++m) acc += a(i, m) * b(m, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

Tensor identity_endomorphism(std::size_t dim) {
  Tensor r(dim, 1, 1);
  for (std::size_t i = 0; i < dim; ++i) r(i, i) = 1;
  return r;
}

Scalar trace(const Tensor& endo) {
  Scalar acc;
  for (std::size_t i = 0; i < endo.dim(); ++i) acc += endo(i, i);
  return acc;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& c : r) c *= s;
  return r;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

Vector zero_vector(std::size_t dim) { return Vector(dim); }

bool is_zero(const Vector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

void for_each_index(std::size_t dim, unsigned rank, const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> idx(rank, 0);
  while (true) {
    fn(idx);
    std::size_t s = rank;
    while (s > 0) {
      if (++idx[s - 1] < dim) break;
      idx[s - 1] = 0;
      --s;
    }
    if (s == 0) return;
  }
}

}  // namespace cgeom
