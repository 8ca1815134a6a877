#include "cgeom/report.hpp"

#include <json.hpp>
#include <sstream>

namespace cgeom {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
    case Status::Error: return "error";
  }
  return "error";
}

std::optional<Status> status_from_string(std::string_view s) {
  for (Status st : {Status::Pass, Status::Fail, Status::NotApplicable, Status::Error})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

CheckEntry CheckEntry::not_applicable(std::string id, std::string why) {
  CheckEntry e;
  e.id = std::move(id);
  e.status = Status::NotApplicable;
  e.note = std::move(why);
  return e;
}

CheckEntry CheckEntry::error(std::string id, std::string why, std::optional<Witness> witness) {
  CheckEntry e;
  e.id = std::move(id);
  e.status = Status::Error;
  e.note = std::move(why);
  e.witness = std::move(witness);
  return e;
}

const std::string* CheckEntry::derived_value(std::string_view key) const {
  for (const auto& [k, v] : derived)
    if (k == key) return &v;
  return nullptr;
}

bool CheckReport::ok() const {
  for (const auto& e : entries)
    if (e.status == Status::Fail || e.status == Status::Error) return false;
  return true;
}

const CheckEntry* CheckReport::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

std::string to_json(const CheckReport& report) {
  ordered_json j;
  j["version"] = report.engine_version;
  j["manifold"] = report.manifold_name;
  j["convention"] = report.convention > 0 ? "+1" : "-1";
  if (!report.reconciling_convention.empty()) j["reconciling_convention"] = report.reconciling_convention;
  ordered_json checks = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json c;
    c["id"] = e.id;
    c["status"] = std::string(to_string(e.status));
    if (e.witness) c["witness"] = {{"at", e.witness->at}, {"residual", e.witness->residual}};
    if (!e.derived.empty()) {
      ordered_json d = ordered_json::object();
      for (const auto& [k, v] : e.derived) d[k] = v;
      c["derived"] = std::move(d);
    }
    if (!e.note.empty()) c["note"] = e.note;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

CheckReport report_from_json(std::string_view text) {
  ordered_json j = ordered_json::parse(text);
  CheckReport r;
  r.engine_version = j.at("version").get<std::string>();
  r.manifold_name = j.at("manifold").get<std::string>();
  r.convention = j.at("convention").get<std::string>() == "-1" ? -1 : 1;
  if (j.contains("reconciling_convention")) r.reconciling_convention = j["reconciling_convention"].get<std::string>();
  for (const auto& c : j.at("checks")) {
    CheckEntry e;
    e.id = c.at("id").get<std::string>();
    auto st = status_from_string(c.at("status").get<std::string>());
    if (!st) throw std::runtime_error("unknown status in report");
    e.status = *st;
    if (c.contains("witness"))
      e.witness = Witness{c["witness"].at("at").get<std::vector<std::string>>(),
                          c["witness"].at("residual").get<std::string>()};
    if (c.contains("derived"))
      for (const auto& [k, v] : c["derived"].items()) e.derived.emplace_back(k, v.get<std::string>());
    if (c.contains("note")) e.note = c["note"].get<std::string>();
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.engine_version << "  manifold: " << report.manifold_name
      << "  convention: " << (report.convention > 0 ? "+1" : "-1");
  if (!report.reconciling_convention.empty()) out << "  reconciling convention: " << report.reconciling_convention;
  out << "\n";
  for (const auto& e : report.entries) {
    std::string tag;
    switch (e.status) {
      case Status::Pass: tag = "PASS"; break;
      case Status::Fail: tag = "FAIL"; break;
      case Status::NotApplicable: tag = "N/A "; break;
      case Status::Error: tag = "ERR "; break;
    }
    out << tag << "  " << e.id;
    if (!e.note.empty()) out << "  (" << e.note << ")";
    out << "\n";
    if (e.witness) {
      out << "        at (";
      for (std::size_t i = 0; i < e.witness->at.size(); ++i) out << (i ? ", " : "") << e.witness->at[i];
      out << ")  residual: " << e.witness->residual << "\n";
    }
    for (const auto& [k, v] : e.derived) out << "        " << k << " = " << v << "\n";
  }
  return out.str();
}

std::string format_vector(const Vector& v, const FrameManifold& m) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    bool negative = false;
    std::string coeff;
    if (auto r = v[k].constant_value()) {
      negative = *r < 0;
      Rational mag = abs(*r);
      if (mag != 1) coeff = mag.get_str() + " ";
    } else {
      std::string s = v[k].str(m.var());
      coeff = (s.find(' ') != std::string::npos ? "(" + s + ")" : s) + " ";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + m.frame_names()[k];
  }
  return out.empty() ? "0" : out;
}

ResidualProbe::ResidualProbe(const FrameManifold& m, std::string id) : m_(m) { entry_.id = std::move(id); }

void ResidualProbe::record(std::span<const std::size_t> at, bool zero, const std::function<std::string()>& text) {
  ++tested_;
  if (zero) return;
  if (failures_++ == 0) {
    Witness w;
    for (std::size_t i : at) w.at.push_back(m_.frame_names()[i]);
    w.residual = text();
    entry_.witness = std::move(w);
  }
}

void ResidualProbe::expect_zero(std::span<const std::size_t> at, const Scalar& residual) {
  record(at, residual.is_zero(), [&] { return residual.str(m_.var()); });
}

void ResidualProbe::expect_zero(std::span<const std::size_t> at, const PScalar& residual) {
  record(at, residual.is_zero(), [&] { return residual.str(m_.var()); });
}

void ResidualProbe::expect_zero(std::span<const std::size_t> at, const Vector& residual) {
  record(at, is_zero(residual), [&] { return format_vector(residual, m_); });
}

CheckEntry ResidualProbe::finish() {
  entry_.status = failures_ == 0 ? Status::Pass : Status::Fail;
  if (failures_ > 0) entry_.add("nonzero_residuals", std::to_string(failures_) + "/" + std::to_string(tested_));
  return entry_;
}

}  // namespace cgeom
