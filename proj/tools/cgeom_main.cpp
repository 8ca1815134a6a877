// cgeom: verify contact-geometry identities on frame-presented manifolds.
//
//   cgeom check FILE [--identity ID]... [--json] [--curvature-sign +1|-1] [--param NAME=VALUE]...
//   cgeom compute FILE --tensor NAME
//   cgeom soliton FILE [--lambda EXPR | --solve] [--trace-only] [--json]
//
// Exit status: 0 when every reported check passes or is not applicable,
// 1 when any check fails or errors, 2 on usage, parse or validation errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cgeom/checks.hpp"
#include "cgeom/manifold_file.hpp"
#include "cgeom/version.hpp"

namespace {

using namespace cgeom;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string file;
  std::vector<std::string> params;
  std::string curvature_sign;
  std::string convention = "B";
};

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw ValidationError("curvature sign must be +1 or -1, got '" + text + "'");
}

int resolve_sign(const CommonOptions& o) {
  if (!o.curvature_sign.empty()) return parse_sign(o.curvature_sign);
  if (const char* env = std::getenv("GEOM_CURVATURE_SIGN"); env && *env) return parse_sign(env);
  return 1;
}

ContactConvention parse_convention(const std::string& text) {
  if (text == "A") return ContactConvention::A;
  if (text == "B") return ContactConvention::B;
  throw ValidationError("contact convention must be A or B, got '" + text + "'");
}

/// Applies NAME=VALUE substitutions: the manifold parameter takes a rational,
/// p takes a scalar of the manifold field.
ManifoldDocument apply_params(ManifoldDocument doc, const std::vector<std::string>& params) {
  for (const auto& assignment : params) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ValidationError("--param expects NAME=VALUE, got '" + assignment + "'");
    const std::string name = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);
    const auto& param = doc.manifold.param();
    if (param && name == *param) {
      const auto r = parse_scalar(value).constant_value();
      if (!r) throw ValidationError("value for " + name + " must be a rational number");
      doc = substitute_parameter(doc, *r);
    } else if (name == "p") {
      std::optional<std::string_view> p;
      if (param) p = *param;
      doc = substitute_pressure(doc, parse_scalar(value, p));
    } else {
      throw ValidationError("unknown parameter '" + name + "'");
    }
  }
  return doc;
}

CheckOptions check_options(const CommonOptions& o) {
  CheckOptions opts;
  opts.curvature_sign = resolve_sign(o);
  opts.convention = parse_convention(o.convention);
  return opts;
}

int emit(const CheckReport& report, bool json) {
  std::cout << (json ? to_json(report) : to_text(report));
  return report.ok() ? 0 : kExitFail;
}

int run_check(const CommonOptions& o, const std::vector<std::string>& identities, bool json) {
  const ManifoldDocument doc = apply_params(load_manifold_file(o.file), o.params);
  CheckOptions opts = check_options(o);
  opts.identities = identities;
  return emit(run_checks(doc, opts), json);
}

int run_compute(const CommonOptions& o, const std::string& tensor) {
  const Analysis an = Analysis::of(apply_params(load_manifold_file(o.file), o.params), resolve_sign(o));
  const FrameManifold& m = an.manifold();
  const std::string var = m.var();
  const auto& names = m.frame_names();
  const auto need_contact = [&] {
    if (!an.contact) throw ValidationError("--tensor " + tensor + " needs a [contact] section");
    return *an.contact;
  };
  if (tensor == "connection") {
    std::cout << "# Gamma[k,i,j] = e_k component of nabla_{e_i} e_j\n"
              << format_tensor(an.nabla.gamma, "Gamma", names, var);
  } else if (tensor == "riemann") {
    std::cout << "# R[l,k,i,j] = e_l component of R(e_i, e_j) e_k\n"
              << format_tensor(an.curvature.riemann, "R", names, var);
  } else if (tensor == "ricci") {
    std::cout << format_tensor(an.curvature.ricci, "Ric", names, var);
  } else if (tensor == "scalar") {
    std::cout << "scalar = " << an.curvature.scalar.str(var) << "\n";
  } else if (tensor == "h") {
    std::cout << "# h[i,j] = e_i component of h(e_j)\n" << format_tensor(need_contact().h, "h", names, var);
  } else if (tensor == "star-ricci") {
    need_contact();
    std::cout << format_tensor(an.star->s_star, "S*", names, var);
  } else if (tensor == "star-scalar") {
    need_contact();
    std::cout << "r* = " << an.star->r_star.str(var) << "\n";
  } else if (tensor == "dEta") {
    std::cout << format_tensor(exterior_derivative_eta(m, need_contact()), "dEta", names, var);
  } else {
    throw ValidationError("unknown tensor '" + tensor + "'");
  }
  return 0;
}

struct SolitonFlags {
  std::string lambda;
  bool solve = false;
  bool trace_only = false;
  std::string field;
  bool gradient = false;
};

int run_soliton_verb(const CommonOptions& o, const SolitonFlags& f, bool json) {
  ManifoldDocument doc = load_manifold_file(o.file);
  const auto& param = doc.manifold.param();
  std::optional<std::string_view> pname;
  if (param) pname = *param;
  if (!doc.soliton && f.field.empty())
    throw ValidationError("no soliton data: add a [soliton] section or pass --field");
  if (!doc.soliton) doc.soliton = SolitonConfig{};
  if (!f.field.empty()) {
    doc.soliton->V = parse_vector(f.field, doc.manifold);
  } else if (doc.soliton->V.empty()) {
    throw ValidationError("no potential field: pass --field");
  }
  if (f.gradient) doc.soliton->gradient = true;
  if (!f.lambda.empty()) {
    PScalar lambda = parse_pscalar(f.lambda, pname);
    if (!doc.soliton->p.depends_on_pressure()) lambda = lambda.substitute_pressure(*doc.soliton->p.as_scalar());
    doc.soliton->lambda = lambda;
  } else if (f.solve) {
    doc.soliton->lambda.reset();
  }
  doc = apply_params(std::move(doc), o.params);
  CheckOptions opts = check_options(o);
  opts.lambda_mode = f.trace_only ? LambdaMode::TraceOnly : LambdaMode::Full;
  return emit(run_soliton(doc, opts), json);
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("file", o.file, "Manifold file (.geom)")->required();
  cmd->add_option("--param", o.params, "Substitute NAME=VALUE for the manifold parameter or for p");
  cmd->add_option("--curvature-sign", o.curvature_sign, "Curvature sign convention, +1 or -1");
  cmd->add_option("--contact-convention", o.convention, "Contact condition form: A or B");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of contact-geometry identities on frame manifolds", "cgeom"};
  app.set_version_flag("--version", std::string(cgeom::engine_version()));
  app.require_subcommand(1);

  CommonOptions check_opts, compute_opts, soliton_opts;
  std::vector<std::string> identities;
  bool check_json = false, soliton_json = false;
  std::string tensor;
  SolitonFlags sflags;

  auto* check = app.add_subcommand("check", "Run identity checks");
  add_common(check, check_opts);
  check->add_option("--identity", identities, "Restrict to these check IDs");
  check->add_flag("--json", check_json, "Emit the JSON report");

  auto* compute = app.add_subcommand("compute", "Print a computed tensor");
  add_common(compute, compute_opts);
  compute->add_option("--tensor", tensor, "connection|riemann|ricci|scalar|h|star-ricci|star-scalar|dEta")
      ->required();

  auto* soliton = app.add_subcommand("soliton", "Evaluate the soliton equation and its consequences");
  add_common(soliton, soliton_opts);
  auto* lambda_opt = soliton->add_option("--lambda", sflags.lambda, "Use this lambda (may mention p)");
  auto* solve_opt = soliton->add_flag("--solve", sflags.solve, "Solve for lambda, ignoring the file's value");
  lambda_opt->excludes(solve_opt);
  soliton->add_flag("--trace-only", sflags.trace_only, "Solve lambda from the traced equation only");
  soliton->add_option("--field", sflags.field, "Potential field, e.g. \"e1\" or \"2 e1 - e3\"");
  soliton->add_flag("--gradient", sflags.gradient, "Read the potential field as Df");
  soliton->add_flag("--json", soliton_json, "Emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(check_opts, identities, check_json);
    if (*compute) return run_compute(compute_opts, tensor);
    if (*soliton) return run_soliton_verb(soliton_opts, sflags, soliton_json);
  } catch (const cgeom::ParseError& e) {
    std::cerr << "cgeom: parse error: " << e.what() << "\n";
  } catch (const cgeom::ValidationError& e) {
    std::cerr << "cgeom: invalid input: " << e.what() << "\n";
  } catch (const cgeom::DomainError& e) {
    std::cerr << "cgeom: " << e.what() << "\n";
  } catch (const cgeom::PreconditionError& e) {
    std::cerr << "cgeom: " << e.what() << "\n";
  }
  return kExitUsage;
}
