#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgeom/frame.hpp"
#include "cgeom/pscalar.hpp"

namespace cgeom {

enum class Status { Pass, Fail, NotApplicable, Error };

std::string_view to_string(Status s);
std::optional<Status> status_from_string(std::string_view s);

/// Where an identity first failed: frame names of the index tuple and the
/// residual in the scalar grammar.
struct Witness {
  std::vector<std::string> at;
  std::string residual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckEntry {
  std::string id;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  /// Named derived quantities (k, lambda, sigma, r*, ...), insertion-ordered.
  std::vector<std::pair<std::string, std::string>> derived;
  std::string note;

  static CheckEntry not_applicable(std::string id, std::string why);
  static CheckEntry error(std::string id, std::string why, std::optional<Witness> witness = std::nullopt);

  void add(std::string key, std::string value) { derived.emplace_back(std::move(key), std::move(value)); }
  const std::string* derived_value(std::string_view key) const;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct CheckReport {
  std::string engine_version;
  std::string manifold_name;
  /// Curvature sign convention the checks ran under.
  int convention = 1;
  /// Sign(s) under which trace-defined S* matches the eta-Einstein form; empty
  /// when that comparison does not apply.
  std::string reconciling_convention;
  std::vector<CheckEntry> entries;

  bool ok() const;
  const CheckEntry* find(std::string_view id) const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

std::string to_json(const CheckReport& report);
CheckReport report_from_json(std::string_view text);
std::string to_text(const CheckReport& report);

/// "-2*a e2 + e3"-style text of a frame-component vector.
std::string format_vector(const Vector& v, const FrameManifold& m);

/// Collects residuals of an identity over index tuples and turns them into a
/// CheckEntry: pass if every residual vanished, otherwise fail with the
/// first nonzero residual as witness.
class ResidualProbe {
 public:
  ResidualProbe(const FrameManifold& m, std::string id);

  void expect_zero(std::span<const std::size_t> at, const Scalar& residual);
  void expect_zero(std::span<const std::size_t> at, const PScalar& residual);
  void expect_zero(std::span<const std::size_t> at, const Vector& residual);
  void expect_zero(std::initializer_list<std::size_t> at, const Scalar& r) { expect_zero(span(at), r); }
  void expect_zero(std::initializer_list<std::size_t> at, const PScalar& r) { expect_zero(span(at), r); }
  void expect_zero(std::initializer_list<std::size_t> at, const Vector& r) { expect_zero(span(at), r); }

  bool clean() const noexcept { return failures_ == 0; }
  std::size_t tested() const noexcept { return tested_; }
  std::size_t failures() const noexcept { return failures_; }

  CheckEntry finish();

 private:
  static std::span<const std::size_t> span(std::initializer_list<std::size_t> l) { return {l.begin(), l.size()}; }
  void record(std::span<const std::size_t> at, bool zero, const std::function<std::string()>& text);

  const FrameManifold& m_;
  CheckEntry entry_;
  std::size_t tested_ = 0;
  std::size_t failures_ = 0;
};

}  // namespace cgeom
