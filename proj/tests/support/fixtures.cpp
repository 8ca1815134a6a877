#include "fixtures.hpp"

namespace cgeom::testing {

std::filesystem::path manifold_path(const std::string& file) {
  return std::filesystem::path(CGEOM_MANIFOLD_DIR) / file;
}

ManifoldDocument load_corpus(const std::string& file) { return load_manifold_file(manifold_path(file)); }

ManifoldDocument family() { return load_corpus("nk_family.geom"); }

ManifoldDocument family(const Rational& value) { return substitute_parameter(family(), value); }

ManifoldDocument family_soliton(bool gradient) {
  return load_corpus(gradient ? "nk_family_gradient.geom" : "nk_family_soliton.geom");
}

Scalar a() { return Scalar::parameter(); }

Scalar q(long num, long den) { return Scalar(Rational(num, den)); }

}  // namespace cgeom::testing
