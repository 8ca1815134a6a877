#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cgeom/errors.hpp"
#include "cgeom/pscalar.hpp"
#include "cgeom/scalar.hpp"

namespace cgeom {

/// Components of a constant vector field in the frame.
using Vector = std::vector<Scalar>;

/// Dense frame-constant tensor of valence (upper, lower).
///
/// Components are stored row-major with all contravariant slots first, so a
/// (1,2) tensor T has T(a, i, j) = a-th component of T(e_i, e_j). Every
/// entry is an element of `T`; `Tensor` and `PTensor` are the two
/// instantiations in use.
template <class T>
class BasicTensor {
 public:
  BasicTensor() = default;

  BasicTensor(std::size_t dim, unsigned upper, unsigned lower)
      : dim_(dim), upper_(upper), lower_(lower), data_(ipow(dim, upper + lower), T(0)) {}

  std::size_t dim() const noexcept { return dim_; }
  unsigned upper() const noexcept { return upper_; }
  unsigned lower() const noexcept { return lower_; }
  unsigned rank() const noexcept { return upper_ + lower_; }
  std::size_t size() const noexcept { return data_.size(); }

  template <class... I>
  T& operator()(I... idx) {
    return data_[flat_list({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    return data_[flat_list({static_cast<std::size_t>(idx)...})];
  }

  T& at(std::span<const std::size_t> idx) { return data_[flat(idx)]; }
  const T& at(std::span<const std::size_t> idx) const { return data_[flat(idx)]; }

  std::span<const T> components() const noexcept { return data_; }
  std::span<T> components() noexcept { return data_; }

  /// Multi-index of a flat position.
  std::vector<std::size_t> unflatten(std::size_t pos) const {
    std::vector<std::size_t> idx(rank());
    for (std::size_t s = rank(); s-- > 0;) {
      idx[s] = pos % dim_;
      pos /= dim_;
    }
    return idx;
  }

  bool is_zero() const {
    for (const auto& c : data_)
      if (!(c == T(0))) return false;
    return true;
  }

  BasicTensor& operator+=(const BasicTensor& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }

  BasicTensor scaled(const T& factor) const {
    BasicTensor r = *this;
    for (auto& c : r.data_) c *= factor;
    return r;
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.dim_ == b.dim_ && a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.data_ == b.data_;
  }

 private:
  static std::size_t ipow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
  }

  std::size_t flat_list(std::initializer_list<std::size_t> idx) const {
    return flat(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  std::size_t flat(std::span<const std::size_t> idx) const {
    if (idx.size() != rank()) throw ValidationError("tensor index arity mismatch");
    std::size_t pos = 0;
    for (std::size_t i : idx) {
      if (i >= dim_) throw ValidationError("tensor index out of range");
      pos = pos * dim_ + i;
    }
    return pos;
  }

  void check_shape(const BasicTensor& o) const {
    if (dim_ != o.dim_ || upper_ != o.upper_ || lower_ != o.lower_)
      throw ValidationError("tensor shape mismatch");
  }

  std::size_t dim_ = 0;
  unsigned upper_ = 0;
  unsigned lower_ = 0;
  std::vector<T> data_;
};

using Tensor = BasicTensor<Scalar>;
using PTensor = BasicTensor<PScalar>;

/// Promote a Scalar tensor into the p-extended field.
PTensor promote(const Tensor& t);

/// Lower the last contravariant slot; it becomes the first covariant slot.
Tensor lower_index(const Tensor& t, const Tensor& metric);

/// Raise the first covariant slot; it becomes the last contravariant slot.
Tensor raise_index(const Tensor& t, const Tensor& inverse_metric);

/// Apply a (1,1) tensor to a vector: (A v)^i = A(i, j) v^j.
Vector apply(const Tensor& endo, const Vector& v);

/// Composition of (1,1) tensors, (A B)(i, j) = A(i, m) B(m, j).
Tensor compose(const Tensor& a, const Tensor& b);

Tensor identity_endomorphism(std::size_t dim);

Scalar trace(const Tensor& endo);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector basis_vector(std::size_t dim, std::size_t i);
Vector zero_vector(std::size_t dim);
bool is_zero(const Vector& v);

/// Visit every multi-index of a given rank in lexicographic order.
void for_each_index(std::size_t dim, unsigned rank, const std::function<void(std::span<const std::size_t>)>& fn);

/// "name[e1,e2] = value" lines in lexicographic index order.
template <class T>
std::string format_tensor(const BasicTensor<T>& t, std::string_view name, std::span<const std::string> frame_names,
                          std::string_view var) {
  std::string out;
  for (std::size_t pos = 0; pos < t.size(); ++pos) {
    auto idx = t.unflatten(pos);
    out += name;
    if (!idx.empty()) {
      out += '[';
      for (std::size_t s = 0; s < idx.size(); ++s) {
        if (s) out += ',';
        out += frame_names[idx[s]];
      }
      out += ']';
    }
    out += " = " + t.components()[pos].str(var) + "\n";
  }
  return out;
}

}  // namespace cgeom
