#pragma once

#include <string_view>

namespace cgeom {

/// "cgeom <major.minor.patch>", as written into every report.
std::string_view engine_version();

}  // namespace cgeom
