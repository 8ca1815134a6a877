// Acceptance run: one PASS/FAIL line per criterion, with the failing parts
// listed underneath. Every comparison is exact; time limits are wall clock.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cgeom/checks.hpp"
#include "random_algebra.hpp"

namespace {

using namespace cgeom;
using Clock = std::chrono::steady_clock;

constexpr double kFamilyLimitSeconds = 1.0;
constexpr double kFlatLimitSeconds = 1.0;
constexpr double kIdentityLimitSeconds = 5.0;
constexpr double kPropertyLimitSeconds = 10.0;

struct Part {
  std::string what;
  bool ok;
  std::string detail;
};

struct Outcome {
  std::vector<Part> parts;
  void expect(std::string what, bool ok, std::string detail = "") {
    parts.push_back({std::move(what), ok, std::move(detail)});
  }
  bool ok() const {
    for (const auto& p : parts)
      if (!p.ok) return false;
    return true;
  }
};

ManifoldDocument corpus(const std::string& file) {
  return load_manifold_file(std::filesystem::path(CGEOM_MANIFOLD_DIR) / file);
}

const Scalar a = Scalar::parameter();
const Scalar k_family = Scalar(1) - a * a;
const PScalar steady = parse_pscalar("p/2 + 1/3");

std::string show(const std::optional<PScalar>& x) { return x ? x->str("a") : "none"; }

Outcome family_reproduction() {
  Outcome o;
  const Analysis an = Analysis::of(corpus("nk_family.geom"));
  const auto k = an.nullity->k();
  o.expect("k = 1 - a^2", k == k_family, k ? k->str("a") : "no k");
  const Tensor& s = an.star->s_star;
  o.expect("S*(e1,e1) = 0", s(0, 0).is_zero(), s(0, 0).str("a"));
  o.expect("S*(e2,e2) = -(1 - a^2)", s(1, 1) == -k_family, s(1, 1).str("a"));
  o.expect("S*(e3,e3) = -(1 - a^2)", s(2, 2) == -k_family, s(2, 2).str("a"));
  return o;
}

Outcome flat_member() {
  Outcome o;
  const ManifoldDocument doc = substitute_parameter(corpus("nk_family_soliton.geom"), Rational(1));
  const Analysis an = Analysis::of(doc);
  const FrameManifold& m = an.manifold();
  const Vector e1 = m.basis(0);
  o.expect("Riemann tensor vanishes", an.curvature.riemann.is_zero());
  o.expect("S* vanishes", an.star->s_star.is_zero());
  const Tensor lg = lie_derivative(m.metric(), e1, m);
  o.expect("L_e1 g vanishes", lg.is_zero(), "(L_e1 g)(e2,e3) = " + lg(1, 2).str());
  const auto full = solve_lambda(m, *an.star, *doc.soliton, LambdaMode::Full);
  o.expect("solve_lambda gives p/2 + 1/3", full == steady, "componentwise solve: " + show(full));
  const auto traced = solve_lambda(m, *an.star, *doc.soliton, LambdaMode::TraceOnly);
  o.expect("traced solve gives p/2 + 1/3", traced == steady, show(traced));
  const ClassifyResult cls = classify_field(m, *an.contact, e1);
  o.expect("classify_field reports Killing", cls.killing, "e1 is not Killing");
  return o;
}

Outcome gradient_branch() {
  Outcome o;
  const ManifoldDocument doc = substitute_parameter(corpus("nk_family_gradient.geom"), Rational(1));
  const Analysis an = Analysis::of(doc);
  const FrameManifold& m = an.manifold();
  const Tensor hess = hessian_candidate(m.basis(0), m, an.nabla);
  o.expect("Hess vanishes", hess.is_zero(),
           "Hess(e2,e3) = " + hess(1, 2).str() + ", Hess(e3,e2) = " + hess(2, 1).str());
  o.expect("Delta f = 0", divergence(m.basis(0), an.nabla).is_zero());

  SolitonConfig cfg = *doc.soliton;
  const CheckEntry solved = poisson_check(m, *an.star, cfg, an.nabla);
  const std::string* lam = solved.derived_value("lambda_for_poisson");
  o.expect("Poisson equation solved at p/2 + 1/3", lam && *lam == steady.str(), lam ? *lam : "none");
  cfg.lambda = steady;
  o.expect("satisfied at lambda = p/2 + 1/3", poisson_check(m, *an.star, cfg, an.nabla).status == Status::Pass);
  cfg.lambda = steady + PScalar(1);
  const CheckEntry off = poisson_check(m, *an.star, cfg, an.nabla);
  const std::string* rhs = off.derived_value("rhs");
  o.expect("demands Delta f = 3 at lambda = p/2 + 4/3", off.status == Status::Fail && rhs && *rhs == "3");
  return o;
}

Outcome identity_suite() {
  Outcome o;
  CheckOptions opts;
  opts.identities = {"ac-2.1",  "ac-2.2",       "ac-2.3",          "contact-cond",  "h-2.4",
                     "nabla-xi-2.5", "h-sq-2.6", "nullity-2.7",    "nullity-2.8",   "nabla-eta-2.9",
                     "nabla-phi-2.10", "nabla-phih-2.11", "lemma-3.2", "nabla-sstar-3.4to3.6",
                     "lemma-3.4", "eq-3.28",     "eq-3.29"};
  const CheckReport r = run_checks(corpus("nk_family.geom"), opts);
  for (const CheckEntry& e : r.entries) {
    std::string detail;
    if (e.witness) {
      detail = "at (";
      for (std::size_t i = 0; i < e.witness->at.size(); ++i) detail += (i ? ", " : "") + e.witness->at[i];
      detail += ") residual " + e.witness->residual;
      if (const auto* n = e.derived_value("nonzero_residuals")) detail += ", nonzero " + *n;
    }
    o.expect(e.id, e.status == Status::Pass, detail);
  }
  return o;
}

void invariant_parts(Outcome& o, const std::string& label, const FrameManifold& m) {
  const Connection nabla = levi_civita(m);
  const Curvature curv = riemann(m, nabla);
  for (const CheckEntry& e : check_connection_invariants(m, nabla, curv))
    o.expect(label + " " + e.id, e.status == Status::Pass, e.witness ? e.witness->residual : "");
}

Outcome property_suites(double& dim7_seconds) {
  Outcome o;
  for (const char* file : {"nk_family.geom", "nk_family_soliton.geom", "nk_family_gradient.geom",
                           "nk_flat_killing.geom", "nk_flat_steady_gradient.geom", "abelian.geom",
                           "heisenberg3.geom", "heisenberg5.geom", "round_s3.geom"})
    invariant_parts(o, file, corpus(file).manifold);
  using cgeom::testing::BaseAlgebra;
  invariant_parts(o, "random so(3)+R^2", cgeom::testing::random_lie_manifold(BaseAlgebra::So3PlusR2, 1));
  invariant_parts(o, "random h5", cgeom::testing::random_lie_manifold(BaseAlgebra::Heisenberg5, 2));
  const auto start = Clock::now();
  invariant_parts(o, "random dim 7", cgeom::testing::random_lie_manifold(BaseAlgebra::So3PlusH3PlusR, 3));
  dim7_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect("dim 7 under " + std::to_string(static_cast<int>(kPropertyLimitSeconds)) + " s",
           dim7_seconds < kPropertyLimitSeconds, std::to_string(dim7_seconds) + " s");
  return o;
}

Outcome no_constant_lambda() {
  Outcome o;
  for (long value : {0L, 2L}) {
    const ManifoldDocument doc = substitute_parameter(corpus("nk_family_soliton.geom"), Rational(value));
    const Analysis an = Analysis::of(doc);
    const auto lambda = solve_lambda(an.manifold(), *an.star, *doc.soliton, LambdaMode::Full);
    o.expect("no constant lambda at a = " + std::to_string(value), !lambda.has_value(), show(lambda));
  }
  const ManifoldDocument symbolic = corpus("nk_family_soliton.geom");
  const Analysis an = Analysis::of(symbolic);
  o.expect("no constant lambda for symbolic a",
           !solve_lambda(an.manifold(), *an.star, *symbolic.soliton, LambdaMode::Full).has_value());
  return o;
}

Outcome convention_reconciliation() {
  Outcome o;
  const ManifoldDocument doc = corpus("nk_family.geom");
  const Analysis an = Analysis::of(doc);
  const ConventionReconciliation rec = reconcile_convention(an.manifold(), *an.contact, an.nabla);
  o.expect("exactly one sign passes lemma-3.2", rec.passing.size() == 1, rec.label());
  const CheckReport report = run_checks(doc);
  o.expect("report names it", report.reconciling_convention == rec.label(), report.reconciling_convention);
  if (rec.passing.size() == 1) {
    const Analysis chosen = Analysis::of(doc, rec.passing.front());
    o.expect("chosen sign reproduces k and S*",
             chosen.nullity->k() == k_family && chosen.star->s_star(1, 1) == -k_family &&
                 chosen.star->s_star(2, 2) == -k_family && chosen.star->s_star(0, 0).is_zero());
  }
  return o;
}

bool report(int number, const std::string& title, const std::function<Outcome()>& body, double limit = 0) {
  const auto start = Clock::now();
  Outcome o = body();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0) o.expect("runtime under " + std::to_string(limit).substr(0, 3) + " s", seconds < limit);
  std::cout << "criterion " << number << ": " << (o.ok() ? "PASS" : "FAIL") << "  " << title << "  ("
            << static_cast<long>(seconds * 1000) << " ms)\n";
  for (const auto& p : o.parts)
    if (!p.ok) std::cout << "    failed: " << p.what << (p.detail.empty() ? "" : ": " + p.detail) << "\n";
  return o.ok();
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "family reproduction, symbolic a", family_reproduction, kFamilyLimitSeconds);
  all &= report(2, "flat member a = 1 with V = e1", flat_member, kFlatLimitSeconds);
  all &= report(3, "gradient branch at a = 1 with V = e1", gradient_branch);
  all &= report(4, "identity suite on the family, symbolic a", identity_suite, kIdentityLimitSeconds);
  double dim7 = 0;
  all &= report(5, "property suites on corpus and random algebras", [&] { return property_suites(dim7); });
  all &= report(6, "no constant lambda off the flat members", no_constant_lambda);
  all &= report(7, "curvature sign reconciliation", convention_reconciliation);
  return all ? 0 : 1;
}
