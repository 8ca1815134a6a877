#pragma once

#include <filesystem>
#include <string>

#include "cgeom/checks.hpp"

namespace cgeom::testing {

std::filesystem::path manifold_path(const std::string& file);
ManifoldDocument load_corpus(const std::string& file);

/// The three-dimensional family with symbolic a, or specialized at a value.
ManifoldDocument family();
ManifoldDocument family(const Rational& a);
/// The family with soliton data V = e1 and symbolic p.
ManifoldDocument family_soliton(bool gradient = false);

/// a as an element of Q(a).
Scalar a();
Scalar q(long num, long den = 1);

}  // namespace cgeom::testing
