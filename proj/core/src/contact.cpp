#include "cgeom/contact.hpp"

namespace cgeom {

namespace {

const Scalar kHalf = Scalar(Rational(1, 2));

// v[a] = t(a, j, x) for a (1,2) tensor.
Vector column(const Tensor& t, std::size_t j, std::size_t x) {
  Vector v(t.dim());
  for (std::size_t a = 0; a < t.dim(); ++a) v[a] = t(a, j, x);
  return v;
}

Tensor covector(const Vector& w) {
  Tensor t(w.size(), 0, 1);
  for (std::size_t i = 0; i < w.size(); ++i) t(i) = w[i];
  return t;
}

// eta(Y) X - eta(X) Y
Vector nullity_direction(const ContactStructure& c, const Vector& x, const Vector& y) {
  return c.eta_of(y) * x - c.eta_of(x) * y;
}

// The k suggested by the first pair (e_i, e_j) where eta(e_j)e_i - eta(e_i)e_j
// is nonzero; every other pair must agree for k to be a nullity constant.
std::optional<Scalar> candidate_k(const FrameManifold& m, const ContactStructure& c, const Curvature& curv) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Vector w = nullity_direction(c, m.basis(i), m.basis(j));
      for (std::size_t l = 0; l < w.size(); ++l)
        if (!w[l].is_zero()) return curv.apply(m.basis(i), m.basis(j), c.xi)[l] / w[l];
    }
  return std::nullopt;
}

// k with h^2 = (k - 1) phi^2, if h^2 is a multiple of phi^2.
std::optional<Scalar> structure_k(const ContactStructure& c) {
  const Tensor h2 = compose(c.h, c.h);
  const Tensor phi2 = compose(c.phi, c.phi);
  std::optional<Scalar> ratio;
  for (std::size_t pos = 0; pos < phi2.size() && !ratio; ++pos)
    if (!phi2.components()[pos].is_zero()) ratio = h2.components()[pos] / phi2.components()[pos];
  if (!ratio) return std::nullopt;
  if (!(h2 == phi2.scaled(*ratio))) return std::nullopt;
  return *ratio + Scalar(1);
}

}  // namespace

std::string_view to_string(ContactConvention c) { return c == ContactConvention::A ? "A" : "B"; }

Scalar ContactStructure::eta_of(const Vector& x) const {
  Scalar acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !eta[i].is_zero()) acc += eta[i] * x[i];
  return acc;
}

ContactStructure make_contact_structure(const FrameManifold& m, const ContactDecl& decl) {
  if (decl.xi.size() != m.dim()) throw ValidationError("xi has the wrong number of components");
  if (decl.phi.dim() != m.dim() || decl.phi.upper() != 1 || decl.phi.lower() != 1)
    throw ValidationError("phi must be a (1,1) tensor of the manifold dimension");
  ContactStructure c;
  c.xi = decl.xi;
  c.eta = m.flat(decl.xi);
  c.phi = decl.phi;
  c.h = compute_h(m, decl.xi, decl.phi);
  return c;
}

std::vector<CheckEntry> verify_almost_contact(const FrameManifold& m, const ContactStructure& c) {
  const std::size_t n = m.dim();
  ResidualProbe a1(m, "ac-2.1"), a2(m, "ac-2.2"), a3(m, "ac-2.3");
  a1.expect_zero({}, c.eta_of(c.xi) - Scalar(1));
  a1.expect_zero({}, c.apply_phi(c.xi));
  for (std::size_t j = 0; j < n; ++j) {
    const Vector e = m.basis(j);
    a1.expect_zero({j}, c.apply_phi(c.apply_phi(e)) + e - c.eta[j] * c.xi);
    a1.expect_zero({j}, c.eta_of(c.apply_phi(e)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = m.basis(i), ej = m.basis(j);
      a2.expect_zero({i, j}, m.inner(c.apply_phi(ei), c.apply_phi(ej)) - m.metric()(i, j) + c.eta[i] * c.eta[j]);
      a3.expect_zero({i, j}, m.inner(c.apply_phi(ei), ej) + m.inner(ei, c.apply_phi(ej)));
    }
  return {a1.finish(), a2.finish(), a3.finish()};
}

Tensor exterior_derivative_eta(const FrameManifold& m, const ContactStructure& c) {
  const std::size_t n = m.dim();
  Tensor d(n, 0, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = -kHalf * c.eta_of(m.bracket(m.basis(i), m.basis(j)));
  return d;
}

CheckEntry check_contact_condition(const FrameManifold& m, const ContactStructure& c, ContactConvention convention) {
  const std::size_t n = m.dim();
  const Tensor d = exterior_derivative_eta(m, c);
  ResidualProbe probe_a(m, "contact-cond"), probe_b(m, "contact-cond");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = m.basis(i), ej = m.basis(j);
      probe_a.expect_zero({i, j}, m.inner(c.apply_phi(ei), ej) - d(i, j));
      probe_b.expect_zero({i, j}, m.inner(ei, c.apply_phi(ej)) - d(i, j));
    }
  const bool holds_a = probe_a.clean(), holds_b = probe_b.clean();
  CheckEntry e = convention == ContactConvention::A ? probe_a.finish() : probe_b.finish();
  e.add("convention", std::string(to_string(convention)));
  e.add("holds_under", holds_a ? "A" : holds_b ? "B" : "none");
  const bool other = convention == ContactConvention::A ? holds_b : holds_a;
  if (e.status == Status::Fail && other)
    e.note = "sign-flipped: holds under convention " +
             std::string(to_string(convention == ContactConvention::A ? ContactConvention::B : ContactConvention::A));
  return e;
}

Tensor compute_h(const FrameManifold& m, const Vector& xi, const Tensor& phi) {
  return lie_derivative(phi, xi, m).scaled(kHalf);
}

CheckEntry check_h_properties(const FrameManifold& m, const ContactStructure& c) {
  const std::size_t n = m.dim();
  ResidualProbe probe(m, "h-2.4");
  const Tensor anti = compose(c.h, c.phi) + compose(c.phi, c.h);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = m.basis(i), ej = m.basis(j);
      probe.expect_zero({i, j}, m.inner(c.apply_h(ei), ej) - m.inner(ei, c.apply_h(ej)));
      probe.expect_zero({i, j}, anti(i, j));
    }
  probe.expect_zero({}, trace(c.h));
  probe.expect_zero({}, trace(compose(c.phi, c.h)));
  probe.expect_zero({}, c.apply_h(c.xi));
  return probe.finish();
}

std::optional<Scalar> NullityResult::k() const {
  if (!k_curvature) return std::nullopt;
  return k_structure ? k_structure : k_curvature;
}

NullityResult detect_nullity_k(const FrameManifold& m, const ContactStructure& c, const Curvature& curvature) {
  NullityResult r;
  r.k_structure = structure_k(c);
  if (auto k = candidate_k(m, c, curvature)) {
    bool consistent = true;
    for (std::size_t i = 0; i < m.dim() && consistent; ++i)
      for (std::size_t j = 0; j < m.dim() && consistent; ++j) {
        const Vector ei = m.basis(i), ej = m.basis(j);
        consistent = is_zero(curvature.apply(ei, ej, c.xi) - *k * nullity_direction(c, ei, ej));
      }
    if (consistent) r.k_curvature = *k;
  }
  if (!r.k_curvature) {
    r.status = NullityStatus::NotNullity;
    r.message = "not a nullity manifold: no single k with R(X,Y)xi = k[eta(Y)X - eta(X)Y]";
  } else if (!r.k_structure || !(*r.k_structure == *r.k_curvature)) {
    r.status = NullityStatus::HSquareMismatch;
    r.message = "h^2-mismatch: h^2 != (k - 1) phi^2 for the curvature value of k";
  } else {
    r.status = NullityStatus::Found;
  }
  return r;
}

std::vector<CheckEntry> check_structure_identities(const FrameManifold& m, const ContactStructure& c,
                                                   const Connection& nabla, const Curvature& curvature,
                                                   const NullityResult& nullity) {
  const std::size_t n = m.dim();
  const std::string var = m.var();
  std::vector<CheckEntry> out;

  ResidualProbe p25(m, "nabla-xi-2.5");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = m.basis(i);
    p25.expect_zero({i}, nabla.covariant(ei, c.xi) + c.apply_phi(ei) + c.apply_phi(c.apply_h(ei)));
  }
  out.push_back(p25.finish());

  const auto needs_k = [&](const char* id) {
    return CheckEntry::not_applicable(id, nullity.message.empty() ? "no nullity constant" : nullity.message);
  };

  if (nullity.k_curvature) {
    const Scalar& k = *nullity.k_curvature;
    const Tensor h2 = compose(c.h, c.h);
    const Tensor phi2 = compose(c.phi, c.phi);
    ResidualProbe p26(m, "h-sq-2.6");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) p26.expect_zero({a, b}, h2(a, b) - (k - Scalar(1)) * phi2(a, b));
    CheckEntry e = p26.finish();
    e.add("k", k.str(var));
    if (nullity.k_structure) e.add("k_structure", nullity.k_structure->str(var));
    out.push_back(std::move(e));
  } else {
    out.push_back(needs_k("h-sq-2.6"));
  }

  // Run even without a consistent k so the witness shows where the
  // candidate from the first pair breaks.
  if (auto k = nullity.k_curvature ? nullity.k_curvature : candidate_k(m, c, curvature)) {
    ResidualProbe p27(m, "nullity-2.7");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector ei = m.basis(i), ej = m.basis(j);
        p27.expect_zero({i, j}, curvature.apply(ei, ej, c.xi) - *k * nullity_direction(c, ei, ej));
      }
    CheckEntry e = p27.finish();
    if (nullity.k_curvature)
      e.add("k", k->str(var));
    else
      e.note = nullity.message;
    out.push_back(std::move(e));
  } else {
    out.push_back(CheckEntry::not_applicable("nullity-2.7", "eta vanishes on every frame pair"));
  }

  if (nullity.k_curvature) {
    const Scalar& k = *nullity.k_curvature;
    ResidualProbe p28(m, "nullity-2.8");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector ei = m.basis(i), ej = m.basis(j);
        p28.expect_zero({i, j}, curvature.apply(c.xi, ei, ej) - k * (m.metric()(i, j) * c.xi - c.eta[j] * ei));
      }
    out.push_back(p28.finish());
  } else {
    out.push_back(needs_k("nullity-2.8"));
  }

  const Tensor nabla_eta = covariant_derivative(covector(c.eta), nabla);
  ResidualProbe p29(m, "nabla-eta-2.9");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = m.basis(x), ey = m.basis(y);
      p29.expect_zero({x, y}, nabla_eta(y, x) - m.inner(ex + c.apply_h(ex), c.apply_phi(ey)));
    }
  out.push_back(p29.finish());

  if (!nullity.k()) {
    out.push_back(needs_k("nabla-phi-2.10"));
    out.push_back(needs_k("nabla-phih-2.11"));
    return out;
  }
  const Scalar km1 = *nullity.k() - Scalar(1);

  const Tensor nabla_phi = covariant_derivative(c.phi, nabla);
  ResidualProbe p210(m, "nabla-phi-2.10");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = m.basis(x), ey = m.basis(y);
      const Vector xh = ex + c.apply_h(ex);
      p210.expect_zero({x, y}, column(nabla_phi, y, x) - (m.inner(xh, ey) * c.xi - c.eta[y] * xh));
    }
  out.push_back(p210.finish());

  const Tensor nabla_phih = covariant_derivative(compose(c.phi, c.h), nabla);
  ResidualProbe p211(m, "nabla-phih-2.11");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = m.basis(x), ey = m.basis(y);
      const Scalar xi_coeff = m.inner(ex, c.apply_h(ey)) + km1 * m.inner(ex, c.eta[y] * c.xi - ey);
      const Vector rhs = xi_coeff * c.xi + c.eta[y] * (c.apply_h(ex) + km1 * (c.eta[x] * c.xi - ex));
      p211.expect_zero({x, y}, column(nabla_phih, y, x) - rhs);
    }
  CheckEntry e = p211.finish();
  e.add("k", nullity.k()->str(var));
  out.push_back(std::move(e));
  return out;
}

}  // namespace cgeom
