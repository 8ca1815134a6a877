#include "cgeom/checks.hpp"

#include <algorithm>
#include <array>

#include "cgeom/version.hpp"

#ifndef CGEOM_VERSION
#define CGEOM_VERSION "0.0.0"
#endif

namespace cgeom {

namespace {

constexpr std::array<std::string_view, 39> kAllIds = {
    "frame-jacobi",   "torsion-free",  "metric-compat",   "bianchi-1",
    "riem-antisym",   "riem-pair-sym", "ricci-sym",       "lie-g-routes",
    "lie-nabla-sym",  "ac-2.1",        "ac-2.2",          "ac-2.3",
    "contact-cond",   "h-2.4",         "nabla-xi-2.5",    "h-sq-2.6",
    "nullity-2.7",    "nullity-2.8",   "nabla-eta-2.9",   "nabla-phi-2.10",
    "nabla-phih-2.11", "star-sym",     "lemma-3.2",       "nabla-sstar-3.4to3.6",
    "lemma-3.4",      "soliton-1.1",   "grad-soliton-1.2", "eq-3.11",
    "eq-3.12",        "eq-3.16",       "eq-3.17",         "eq-3.19",
    "lemma-3.10",     "eq-3.28",       "eq-3.29",         "thm-3.5",
    "thm-3.11",       "poisson",       "classify",
};

constexpr std::array<std::string_view, 14> kSolitonIds = {
    "soliton-1.1", "grad-soliton-1.2", "eq-3.11",  "eq-3.12",  "eq-3.16", "eq-3.17", "eq-3.19",
    "lemma-3.10",  "eq-3.28",          "eq-3.29",  "thm-3.5",  "thm-3.11", "poisson", "classify",
};

constexpr std::string_view kContactIds[] = {
    "ac-2.1",      "ac-2.2",        "ac-2.3",        "contact-cond",   "h-2.4",           "nabla-xi-2.5",
    "h-sq-2.6",    "nullity-2.7",   "nullity-2.8",   "nabla-eta-2.9",  "nabla-phi-2.10",  "nabla-phih-2.11",
    "star-sym",    "lemma-3.2",     "nabla-sstar-3.4to3.6", "lemma-3.4",
};

void append(std::vector<CheckEntry>& out, std::vector<CheckEntry> more) {
  for (auto& e : more) out.push_back(std::move(e));
}

CheckReport assemble(const ManifoldDocument& doc, const CheckOptions& options,
                     std::span<const std::string_view> scope) {
  for (const auto& id : options.identities)
    if (!is_known_check(id)) throw ValidationError("unknown check id: " + id);

  const Analysis an = Analysis::of(doc, options.curvature_sign);
  const FrameManifold& m = an.manifold();

  CheckReport report;
  report.engine_version = std::string(engine_version());
  report.manifold_name = m.name();
  report.convention = options.curvature_sign;

  std::vector<CheckEntry> entries = check_connection_invariants(m, an.nabla, an.curvature);
  if (an.contact) {
    const ContactStructure& c = *an.contact;
    const NullityResult& nullity = *an.nullity;
    const StarRicci& star = *an.star;
    append(entries, verify_almost_contact(m, c));
    entries.push_back(check_contact_condition(m, c, options.convention));
    entries.push_back(check_h_properties(m, c));
    append(entries, check_structure_identities(m, c, an.nabla, an.curvature, nullity));
    entries.push_back(check_star_symmetry(m, star));
    entries.push_back(check_lemma_3_2(m, c, star, nullity));
    entries.push_back(check_nabla_star(m, c, star, an.nabla, nullity));
    entries.push_back(check_lemma_3_4(m, c, star, an.nabla, nullity));
    append(entries, check_q_star_identities(m, c, star, an.nabla, nullity));
    if (doc.soliton) {
      const SolitonContext ctx{m, c, an.nabla, an.curvature, star, nullity};
      append(entries, run_soliton_checks(ctx, *doc.soliton, options.lambda_mode));
    }
    if (nullity.k()) report.reconciling_convention = reconcile_convention(m, c, an.nabla).label();
  } else {
    for (std::string_view id : kContactIds)
      entries.push_back(CheckEntry::not_applicable(std::string(id), "no contact structure"));
    for (const char* id : {"eq-3.28", "eq-3.29"}) entries.push_back(CheckEntry::not_applicable(id, "no contact structure"));
  }
  for (std::string_view id : kSolitonIds) {
    const bool present = std::any_of(entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.id == id; });
    if (!present)
      entries.push_back(
          CheckEntry::not_applicable(std::string(id), an.contact ? "no soliton data" : "no contact structure"));
  }

  for (std::string_view id : scope) {
    if (!options.identities.empty() &&
        std::find(options.identities.begin(), options.identities.end(), id) == options.identities.end())
      continue;
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.id == id; });
    report.entries.push_back(std::move(*it));
  }
  return report;
}

}  // namespace

std::string_view engine_version() { return "cgeom " CGEOM_VERSION; }

std::span<const std::string_view> all_check_ids() { return kAllIds; }

std::span<const std::string_view> soliton_check_ids() { return kSolitonIds; }

bool is_known_check(std::string_view id) { return std::find(kAllIds.begin(), kAllIds.end(), id) != kAllIds.end(); }

Analysis Analysis::of(ManifoldDocument doc, int curvature_sign) {
  Connection nabla = levi_civita(doc.manifold);
  Curvature curv = riemann(doc.manifold, nabla, curvature_sign);
  Analysis an{std::move(doc), std::move(nabla), std::move(curv), std::nullopt, std::nullopt, std::nullopt};
  if (an.doc.contact) {
    an.contact = make_contact_structure(an.manifold(), *an.doc.contact);
    an.nullity = detect_nullity_k(an.manifold(), *an.contact, an.curvature);
    an.contact->k = an.nullity->k();
    an.star = star_ricci(an.manifold(), *an.contact, an.curvature);
  }
  return an;
}

CheckReport run_checks(const ManifoldDocument& doc, const CheckOptions& options) {
  return assemble(doc, options, kAllIds);
}

CheckReport run_soliton(const ManifoldDocument& doc, const CheckOptions& options) {
  if (!doc.soliton) throw ValidationError("no soliton data: add a [soliton] section");
  return assemble(doc, options, kSolitonIds);
}

}  // namespace cgeom
