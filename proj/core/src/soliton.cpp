#include "cgeom/soliton.hpp"

namespace cgeom {

namespace {

Vector column(const Tensor& t, std::size_t j, std::size_t x) {
  Vector v(t.dim());
  for (std::size_t a = 0; a < t.dim(); ++a) v[a] = t(a, j, x);
  return v;
}

// A Scalar c with t = c * reference, if one exists.
std::optional<Scalar> multiple_of(const Tensor& t, const Tensor& reference) {
  std::optional<Scalar> ratio;
  for (std::size_t pos = 0; pos < reference.size() && !ratio; ++pos)
    if (!reference.components()[pos].is_zero()) ratio = t.components()[pos] / reference.components()[pos];
  if (!ratio) return t.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  if (!(t == reference.scaled(*ratio))) return std::nullopt;
  return ratio;
}

Tensor covector(const Vector& w) {
  Tensor t(w.size(), 0, 1);
  for (std::size_t i = 0; i < w.size(); ++i) t(i) = w[i];
  return t;
}

bool star_symmetric(const StarRicci& star) {
  for (std::size_t i = 0; i < star.s_star.dim(); ++i)
    for (std::size_t j = i + 1; j < star.s_star.dim(); ++j)
      if (!(star.s_star(i, j) == star.s_star(j, i))) return false;
  return true;
}

void require_symmetric(const StarRicci& star) {
  if (!star_symmetric(star)) throw PreconditionError("S* is not symmetric, so the soliton equation is inconsistent");
}

const PScalar& require_lambda(const SolitonConfig& cfg) {
  if (!cfg.lambda) throw PreconditionError("lambda is not set");
  return *cfg.lambda;
}

CheckEntry gated(const char* id, const char* why) { return CheckEntry::not_applicable(id, why); }

constexpr const char* kNoSoliton = "soliton equation does not hold";
constexpr const char* kNoGradient = "gradient soliton equation does not hold";

}  // namespace

std::string_view to_string(IctStatus s) {
  switch (s) {
    case IctStatus::Strict: return "strict";
    case IctStatus::NonStrict: return "non-strict";
    case IctStatus::NotIct: return "not-ict";
  }
  return "not-ict";
}

PScalar steady_lambda(const FrameManifold& m, const SolitonConfig& cfg) {
  return cfg.p / Scalar(2) + PScalar(Scalar(Rational(1, static_cast<long>(m.dim()))));
}

PTensor soliton_residual(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg) {
  require_symmetric(star);
  const PScalar excess = require_lambda(cfg) - steady_lambda(m, cfg);
  PTensor r = promote(lie_derivative(m.metric(), cfg.V, m) + star.s_star.scaled(Scalar(2)));
  r -= promote(m.metric()).scaled(PScalar(2) * excess);
  return r;
}

std::optional<PScalar> solve_lambda(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg,
                                    LambdaMode mode) {
  const Tensor lhs = lie_derivative(m.metric(), cfg.V, m) + star.s_star.scaled(Scalar(2));
  std::optional<Scalar> c;
  if (mode == LambdaMode::Full) {
    c = multiple_of(lhs, m.metric());
  } else {
    Scalar tr;
    for (std::size_t a = 0; a < m.dim(); ++a)
      for (std::size_t b = 0; b < m.dim(); ++b) tr += m.inverse_metric()(a, b) * lhs(a, b);
    c = tr / Scalar(static_cast<int>(m.dim()));
  }
  if (!c) return std::nullopt;
  return PScalar(*c / Scalar(2)) + steady_lambda(m, cfg);
}

PTensor gradient_residual(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg,
                          const Connection& nabla) {
  const Tensor hess = hessian_candidate(cfg.V, m, nabla);
  if (auto w = gradient_obstruction(hess))
    throw PreconditionError("V is not gradient-like: Hess(" + m.frame_names()[w->first] + ", " +
                            m.frame_names()[w->second] + ") is not symmetric");
  require_symmetric(star);
  const PScalar excess = require_lambda(cfg) - steady_lambda(m, cfg);
  PTensor r = promote(hess + star.s_star);
  r -= promote(m.metric()).scaled(excess);
  return r;
}

CheckEntry poisson_check(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg,
                         const Connection& nabla) {
  const std::string var = m.var();
  if (!cfg.gradient) return gated("poisson", "potential field is not declared gradient");
  if (!star.r_star.is_zero())
    return gated("poisson", "the traced gradient equation reduces to a Poisson equation only when r* = 0");
  const Scalar laplacian = divergence(cfg.V, nabla);
  const Scalar dim(static_cast<int>(m.dim()));
  CheckEntry e;
  if (cfg.lambda) {
    ResidualProbe probe(m, "poisson");
    const PScalar excess = *cfg.lambda - steady_lambda(m, cfg);
    probe.expect_zero({}, PScalar(laplacian) - PScalar(dim) * excess);
    e = probe.finish();
    e.add("laplacian", laplacian.str(var));
    e.add("rhs", (PScalar(dim) * excess).str(var));
    if (e.status == Status::Pass) e.add("f", laplacian.is_zero() ? "harmonic" : "poisson");
  } else {
    e.id = "poisson";
    e.add("laplacian", laplacian.str(var));
    e.add("lambda_for_poisson", (steady_lambda(m, cfg) + PScalar(laplacian / dim)).str(var));
    e.note = "lambda unset; equation solved for lambda";
  }
  if (!is_gradient_like(cfg.V, m, nabla)) {
    e.add("gradient_like", "false");
    if (e.note.empty()) e.note = "V is not gradient-like; Delta f read as div V";
  }
  return e;
}

ClassifyResult classify_field(const FrameManifold& m, const ContactStructure& c, const Vector& v) {
  ClassifyResult r;
  const Tensor lg = lie_derivative(m.metric(), v, m);
  r.killing = lg.is_zero();
  if (auto s = multiple_of(lg, m.metric())) r.conformal_sigma = *s / Scalar(2);
  r.eta_lie_xi = c.eta_of(m.bracket(v, c.xi));
  const Tensor lie_eta = lie_derivative(covector(c.eta), v, m);
  if (lie_eta.is_zero())
    r.ict = IctStatus::Strict;
  else if (multiple_of(lie_eta, covector(c.eta)))
    r.ict = IctStatus::NonStrict;
  else
    r.ict = IctStatus::NotIct;
  return r;
}

std::vector<CheckEntry> check_q_star_identities(const FrameManifold& m, const ContactStructure& c,
                                                const StarRicci& star, const Connection& nabla,
                                                const NullityResult& nullity) {
  const auto k = nullity.k();
  if (!k) {
    const std::string why = nullity.message.empty() ? "no nullity constant" : nullity.message;
    return {CheckEntry::not_applicable("eq-3.28", why), CheckEntry::not_applicable("eq-3.29", why)};
  }
  const std::size_t n = m.dim();
  // nq(a, y, x) = e_a component of (nabla_{e_x} Q*) e_y
  const Tensor nq = covariant_derivative(star.q_star, nabla);
  // k[g(X + hX, phi Y) xi - eta(Y)(phi X + phi h X)]
  const auto rhs = [&](std::size_t x, std::size_t y) {
    const Vector ex = m.basis(x), ey = m.basis(y);
    const Vector xh = ex + c.apply_h(ex);
    return *k * (m.inner(xh, c.apply_phi(ey)) * c.xi - c.eta[y] * c.apply_phi(xh));
  };
  ResidualProbe p28(m, "eq-3.28"), p29(m, "eq-3.29");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      p28.expect_zero({x, y}, column(nq, y, x) - rhs(x, y));
      p29.expect_zero({x, y}, column(nq, x, y) - rhs(y, x));
    }
  return {p28.finish(), p29.finish()};
}

std::vector<CheckEntry> run_soliton_checks(const SolitonContext& ctx, const SolitonConfig& input, LambdaMode mode) {
  const FrameManifold& m = ctx.m;
  const ContactStructure& c = ctx.c;
  const std::size_t n = m.dim();
  const std::string var = m.var();
  std::vector<CheckEntry> out;

  if (!star_symmetric(ctx.star)) {
    const char* why = "S* is not symmetric, so the soliton equation is inconsistent";
    out.push_back(CheckEntry::error("soliton-1.1", why));
    for (const char* id : {"grad-soliton-1.2", "eq-3.11", "eq-3.12", "eq-3.16", "eq-3.17", "eq-3.19", "lemma-3.10",
                           "thm-3.5", "thm-3.11", "poisson", "classify"})
      out.push_back(gated(id, why));
    return out;
  }

  SolitonConfig cfg = input;
  std::string source = "given";
  if (!cfg.lambda) {
    cfg.lambda = solve_lambda(m, ctx.star, cfg, mode);
    source = mode == LambdaMode::Full ? "solved" : "trace";
  }

  // soliton-1.1
  bool holds = false;
  {
    ResidualProbe probe(m, "soliton-1.1");
    SolitonConfig probe_cfg = cfg;
    if (!probe_cfg.lambda) probe_cfg.lambda = solve_lambda(m, ctx.star, cfg, LambdaMode::TraceOnly);
    const PTensor r = soliton_residual(m, ctx.star, probe_cfg);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) probe.expect_zero({a, b}, r(a, b));
    CheckEntry e = probe.finish();
    if (cfg.lambda) {
      e.add("lambda", cfg.lambda->str(var));
      e.add("lambda_source", source);
    } else {
      e.status = Status::Fail;
      e.add("lambda_trace", probe_cfg.lambda->str(var));
      e.note = "no constant lambda makes L_V g + 2S* a multiple of g; witness uses the traced lambda";
    }
    holds = e.status == Status::Pass;
    out.push_back(std::move(e));
  }

  // grad-soliton-1.2
  bool grad_holds = false;
  if (!cfg.gradient) {
    out.push_back(gated("grad-soliton-1.2", "potential field is not declared gradient"));
  } else {
    const Tensor hess = hessian_candidate(cfg.V, m, ctx.nabla);
    if (auto w = gradient_obstruction(hess)) {
      out.push_back(CheckEntry::error(
          "grad-soliton-1.2", "V is not gradient-like: Hess is not symmetric",
          Witness{{m.frame_names()[w->first], m.frame_names()[w->second]},
                  (hess(w->first, w->second) - hess(w->second, w->first)).str(var)}));
    } else {
      ResidualProbe probe(m, "grad-soliton-1.2");
      SolitonConfig probe_cfg = cfg;
      if (!probe_cfg.lambda) probe_cfg.lambda = solve_lambda(m, ctx.star, cfg, LambdaMode::TraceOnly);
      const PTensor r = gradient_residual(m, ctx.star, probe_cfg, ctx.nabla);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) probe.expect_zero({a, b}, r(a, b));
      CheckEntry e = probe.finish();
      if (!cfg.lambda) e.status = Status::Fail;
      grad_holds = e.status == Status::Pass && holds;
      out.push_back(std::move(e));
    }
  }

  const auto k = ctx.nullity.k();
  const PScalar excess = cfg.lambda ? *cfg.lambda - steady_lambda(m, cfg) : PScalar();
  const Tensor lg = lie_derivative(m.metric(), cfg.V, m);
  const char* why_not = !holds ? kNoSoliton : "no nullity constant";

  // eq-3.11, eq-3.12
  if (holds && k) {
    const Tensor lnabla = lie_derivative_of_connection(cfg.V, m, ctx.nabla);
    const auto lie_nabla = [&](const Vector& x, const Vector& y) {
      Vector r(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!x[i].is_zero() && !y[j].is_zero()) r[a] += x[i] * y[j] * lnabla(a, i, j);
      return r;
    };
    const auto phi_plus_hphi = [&](const Vector& x) {
      const Vector px = c.apply_phi(x);
      return px + c.apply_h(px);
    };
    ResidualProbe p311(m, "eq-3.11"), p312(m, "eq-3.12");
    for (std::size_t x = 0; x < n; ++x) {
      const Vector ex = m.basis(x);
      for (std::size_t y = 0; y < n; ++y) {
        const Vector ey = m.basis(y);
        const Vector rhs = Scalar(2) * *k * (c.eta[y] * phi_plus_hphi(ex) + c.eta[x] * phi_plus_hphi(ey));
        p311.expect_zero({x, y}, lie_nabla(ex, ey) - rhs);
      }
      p312.expect_zero({x}, lie_nabla(ex, c.xi) - Scalar(2) * *k * phi_plus_hphi(ex));
    }
    out.push_back(p311.finish());
    out.push_back(p312.finish());
  } else {
    out.push_back(gated("eq-3.11", why_not));
    out.push_back(gated("eq-3.12", why_not));
  }

  // eq-3.16
  if (holds && k) {
    const Tensor lr = lie_derivative_of_curvature(cfg.V, m, ctx.curvature);
    ResidualProbe probe(m, "eq-3.16");
    for (std::size_t x = 0; x < n; ++x) {
      Vector v(n);
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (!c.xi[a].is_zero() && !c.xi[b].is_zero()) v[l] += c.xi[a] * c.xi[b] * lr(l, b, x, a);
      probe.expect_zero({x}, v);
    }
    CheckEntry e = probe.finish();
    if (ctx.curvature.riemann.is_zero()) e.note = "R = 0 here, so both sides vanish identically";
    out.push_back(std::move(e));
  } else {
    out.push_back(gated("eq-3.16", why_not));
  }

  // eq-3.17, eq-3.19
  if (holds) {
    ResidualProbe p317(m, "eq-3.17"), p319(m, "eq-3.19");
    for (std::size_t x = 0; x < n; ++x) {
      Scalar lg_xxi;
      for (std::size_t b = 0; b < n; ++b) lg_xxi += lg(x, b) * c.xi[b];
      p317.expect_zero({x}, PScalar(lg_xxi) - PScalar(2) * excess * PScalar(c.eta[x]));
    }
    const Scalar eta_lie_xi = c.eta_of(m.bracket(cfg.V, c.xi));
    p319.expect_zero({}, PScalar(eta_lie_xi) + excess);
    out.push_back(p317.finish());
    CheckEntry e = p319.finish();
    e.add("eta_lie_xi", eta_lie_xi.str(var));
    out.push_back(std::move(e));
  } else {
    out.push_back(gated("eq-3.17", kNoSoliton));
    out.push_back(gated("eq-3.19", kNoSoliton));
  }

  // lemma-3.10
  if (grad_holds && k) {
    ResidualProbe probe(m, "lemma-3.10");
    const auto phi_plus_phih = [&](const Vector& x) { return c.apply_phi(x + c.apply_h(x)); };
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Vector ex = m.basis(x), ey = m.basis(y);
        const Vector rhs = *k * (Scalar(2) * m.inner(c.apply_phi(ex), ey) * c.xi - c.eta[x] * phi_plus_phih(ey) +
                                 c.eta[y] * phi_plus_phih(ex));
        probe.expect_zero({x, y}, ctx.curvature.apply(ex, ey, cfg.V) - rhs);
      }
    out.push_back(probe.finish());
  } else {
    out.push_back(gated("lemma-3.10", !cfg.gradient ? "potential field is not declared gradient"
                                      : !grad_holds ? kNoGradient
                                                    : "no nullity constant"));
  }

  const auto xi_flat = [&](ResidualProbe& probe) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        probe.expect_zero({x, y}, ctx.curvature.apply(m.basis(x), m.basis(y), c.xi));
  };
  const auto star_flat = [&](ResidualProbe& probe) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) probe.expect_zero({a, b}, ctx.star.s_star(a, b));
  };

  // thm-3.5
  if (holds && k) {
    ResidualProbe probe(m, "thm-3.5");
    std::string note;
    if (!excess.is_zero()) {
      probe.expect_zero({}, *k);
      star_flat(probe);
      xi_flat(probe);
      const PTensor conformal = promote(lg) - promote(m.metric()).scaled(PScalar(2) * excess);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) probe.expect_zero({a, b}, conformal(a, b));
    } else if (k->is_zero()) {
      note = "lambda = p/2 + 1/(2n+1) with k = 0: V must be Killing";
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) probe.expect_zero({a, b}, lg(a, b));
    } else {
      note = "lambda = p/2 + 1/(2n+1) with k != 0: L_V xi must be orthogonal to xi";
      probe.expect_zero({}, c.eta_of(m.bracket(cfg.V, c.xi)));
    }
    CheckEntry e = probe.finish();
    e.note = note;
    e.add("k", k->str(var));
    e.add("sigma", excess.str(var));
    out.push_back(std::move(e));
  } else {
    out.push_back(gated("thm-3.5", why_not));
  }

  // thm-3.11
  if (grad_holds && k) {
    ResidualProbe probe(m, "thm-3.11");
    probe.expect_zero({}, *k);
    star_flat(probe);
    xi_flat(probe);
    const Scalar laplacian = divergence(cfg.V, ctx.nabla);
    probe.expect_zero({}, PScalar(laplacian) - PScalar(Scalar(static_cast<int>(n))) * excess);
    const Scalar xi_f = m.inner(cfg.V, c.xi);
    const bool along_xi = is_zero(cfg.V - xi_f * c.xi);
    if (along_xi) {
      probe.expect_zero({}, excess + PScalar(*k));
      probe.expect_zero({}, xi_f);
    }
    CheckEntry e = probe.finish();
    e.add("laplacian", laplacian.str(var));
    e.add("f", laplacian.is_zero() ? "harmonic" : "poisson");
    e.add("branch", along_xi ? "Df = (xi f) xi" : "k = 0");
    out.push_back(std::move(e));
  } else {
    out.push_back(gated("thm-3.11", !cfg.gradient ? "potential field is not declared gradient"
                                    : !grad_holds ? kNoGradient
                                                  : "no nullity constant"));
  }

  out.push_back(poisson_check(m, ctx.star, input, ctx.nabla));

  // classify
  {
    const ClassifyResult cls = classify_field(m, c, cfg.V);
    ResidualProbe probe(m, "classify");
    if (holds) probe.expect_zero({}, PScalar(cls.eta_lie_xi) + excess);
    CheckEntry e = probe.finish();
    e.add("killing", cls.killing ? "true" : "false");
    e.add("conformal_sigma", cls.conformal_sigma ? cls.conformal_sigma->str(var) : "none");
    e.add("eta_lie_xi", cls.eta_lie_xi.str(var));
    e.add("ict", std::string(to_string(cls.ict)));
    if (!holds) e.note = "soliton equation does not hold; classification only";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cgeom
