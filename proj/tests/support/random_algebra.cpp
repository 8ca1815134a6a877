#include "random_algebra.hpp"

#include <string>
#include <vector>

namespace cgeom::testing {

namespace {

void set_bracket(Tensor& c, std::size_t i, std::size_t j, std::size_t k, int value) {
  c(k, i, j) = Scalar(value);
  c(k, j, i) = Scalar(-value);
}

int small_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Tensor base_structure(BaseAlgebra base) {
  switch (base) {
    case BaseAlgebra::So3PlusR2: {
      Tensor c(5, 1, 2);
      set_bracket(c, 0, 1, 2, 1);
      set_bracket(c, 1, 2, 0, 1);
      set_bracket(c, 2, 0, 1, 1);
      return c;
    }
    case BaseAlgebra::Heisenberg5: {
      Tensor c(5, 1, 2);
      set_bracket(c, 1, 2, 0, 1);
      set_bracket(c, 3, 4, 0, 1);
      return c;
    }
    case BaseAlgebra::So3PlusH3PlusR: {
      Tensor c(7, 1, 2);
      set_bracket(c, 0, 1, 2, 1);
      set_bracket(c, 1, 2, 0, 1);
      set_bracket(c, 2, 0, 1, 1);
      set_bracket(c, 4, 5, 3, 1);
      return c;
    }
  }
  throw ValidationError("unknown base algebra");
}

Tensor change_basis(const Tensor& structure, const Tensor& change) {
  const std::size_t n = structure.dim();
  const auto inverse = invert_metric(change);
  if (!inverse) throw ValidationError("change of basis is singular");
  // [f_i, f_j] = P(a,i) P(b,j) c^k_ab e_k and e_k = Pinv(l,k) f_l
  Tensor out(n, 1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector in_e = zero_vector(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (change(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (change(b, j).is_zero()) continue;
          const Scalar w = change(a, i) * change(b, j);
          for (std::size_t k = 0; k < n; ++k)
            if (!structure(k, a, b).is_zero()) in_e[k] += w * structure(k, a, b);
        }
      }
      for (std::size_t l = 0; l < n; ++l) {
        Scalar acc;
        for (std::size_t k = 0; k < n; ++k)
          if (!in_e[k].is_zero()) acc += (*inverse)(l, k) * in_e[k];
        out(l, i, j) = acc;
      }
    }
  return out;
}

Tensor random_invertible(std::size_t dim, std::mt19937& rng) {
  for (;;) {
    Tensor p(dim, 0, 2);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const int num = small_int(rng, -2, 2);
        const int den = small_int(rng, 1, 3);
        p(i, j) = Scalar(Rational(num, den));
      }
    if (invert_metric(p)) return p;
  }
}

Tensor random_spd_metric(std::size_t dim, std::mt19937& rng) {
  Tensor a(dim, 0, 2);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = Scalar(small_int(rng, -1, 1));
  Tensor g(dim, 0, 2);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Scalar acc(i == j ? 1 : 0);
      for (std::size_t k = 0; k < dim; ++k) acc += a(k, i) * a(k, j);
      g(i, j) = acc;
    }
  return g;
}

FrameManifold random_lie_manifold(BaseAlgebra base, std::uint32_t seed) {
  std::mt19937 rng(seed);
  const Tensor c = base_structure(base);
  const std::size_t n = c.dim();
  const Tensor structure = change_basis(c, random_invertible(n, rng));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return FrameManifold("random-" + std::to_string(seed), names, structure, random_spd_metric(n, rng));
}

}  // namespace cgeom::testing
