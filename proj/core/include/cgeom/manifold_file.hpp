#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cgeom/frame.hpp"
#include "cgeom/pscalar.hpp"

namespace cgeom {

/// Declared almost contact data: the characteristic field and phi.
struct ContactDecl {
  Vector xi;
  /// (1,1); phi(j-th column) = sum_i phi(i, j) e_i.
  Tensor phi;
};

/// Soliton data: potential field V (read as Df when `gradient`), the
/// pressure constant p, and an optional lambda.
struct SolitonConfig {
  Vector V;
  PScalar p = PScalar::pressure();
  std::optional<PScalar> lambda;
  bool gradient = false;
};

struct ManifoldDocument {
  FrameManifold manifold;
  std::optional<ContactDecl> contact;
  std::optional<SolitonConfig> soliton;
};

/// Parse and validate a manifold document. Throws ParseError for syntax
/// problems and ValidationError for structural ones.
ManifoldDocument load_manifold(std::string_view text);
ManifoldDocument load_manifold_file(const std::filesystem::path& path);

/// Parse a frame linear combination such as "(1+a) e3 - e1".
Vector parse_vector(std::string_view text, const FrameManifold& m);

/// Canonical text; load_manifold(print_manifold(d)) reproduces d.
std::string print_manifold(const ManifoldDocument& doc);

/// Specialize the manifold parameter everywhere it occurs.
ManifoldDocument substitute_parameter(const ManifoldDocument& doc, const Rational& value);

/// Fix the pressure symbol p to a value of the manifold field.
ManifoldDocument substitute_pressure(const ManifoldDocument& doc, const Scalar& value);

}  // namespace cgeom
