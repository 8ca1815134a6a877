#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgeom/soliton.hpp"

namespace cgeom {

/// Every check ID in report order.
std::span<const std::string_view> all_check_ids();

/// The IDs the soliton pipeline reports.
std::span<const std::string_view> soliton_check_ids();

bool is_known_check(std::string_view id);

struct CheckOptions {
  int curvature_sign = 1;
  ContactConvention convention = ContactConvention::B;
  LambdaMode lambda_mode = LambdaMode::Full;
  /// Restrict the report to these IDs; empty means all.
  std::vector<std::string> identities;
};

/// Connection, curvature and (when declared) contact and *-Ricci data of a
/// document under one curvature sign.
struct Analysis {
  ManifoldDocument doc;
  Connection nabla;
  Curvature curvature;
  std::optional<ContactStructure> contact;
  std::optional<NullityResult> nullity;
  std::optional<StarRicci> star;

  static Analysis of(ManifoldDocument doc, int curvature_sign = 1);

  const FrameManifold& manifold() const noexcept { return doc.manifold; }
};

/// Runs every check (or the requested subset) and assembles the report.
/// Checks whose hypotheses fail are reported not-applicable. Throws
/// ValidationError for an unknown ID.
CheckReport run_checks(const ManifoldDocument& doc, const CheckOptions& options = {});

/// run_checks restricted to the soliton pipeline; throws ValidationError
/// when the document has no soliton data.
CheckReport run_soliton(const ManifoldDocument& doc, const CheckOptions& options = {});

}  // namespace cgeom
