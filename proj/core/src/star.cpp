#include "cgeom/star.hpp"

namespace cgeom {

namespace {

CheckEntry needs_k(const char* id, const NullityResult& nullity) {
  return CheckEntry::not_applicable(id, nullity.message.empty() ? "no nullity constant" : nullity.message);
}

}  // namespace

StarRicci star_ricci(const FrameManifold& m, const ContactStructure& c, const Curvature& curvature) {
  const std::size_t n = m.dim();
  const Tensor& phi = c.phi;
  const Tensor& R = curvature.riemann;
  StarRicci out{Tensor(n, 0, 2), Tensor(n, 1, 1), Scalar()};
  // S*(e_i, e_j) = 1/2 sum_b phi(b, j) trace(phi o R(e_i, e_b))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc;
      for (std::size_t b = 0; b < n; ++b) {
        if (phi(b, j).is_zero()) continue;
        Scalar tr;
        for (std::size_t mm = 0; mm < n; ++mm)
          for (std::size_t l = 0; l < n; ++l)
            if (!phi(mm, l).is_zero() && !R(l, mm, i, b).is_zero()) tr += phi(mm, l) * R(l, mm, i, b);
        if (!tr.is_zero()) acc += phi(b, j) * tr;
      }
      out.s_star(i, j) = Scalar(Rational(1, 2)) * acc;
    }
  const Tensor& ginv = m.inverse_metric();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      Scalar acc;
      for (std::size_t y = 0; y < n; ++y)
        if (!ginv(a, y).is_zero() && !out.s_star(x, y).is_zero()) acc += ginv(a, y) * out.s_star(x, y);
      out.q_star(a, x) = std::move(acc);
    }
  out.r_star = trace(out.q_star);
  return out;
}

CheckEntry check_star_symmetry(const FrameManifold& m, const StarRicci& star) {
  ResidualProbe probe(m, "star-sym");
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) probe.expect_zero({i, j}, star.s_star(i, j) - star.s_star(j, i));
  CheckEntry e = probe.finish();
  e.add("r_star", star.r_star.str(m.var()));
  return e;
}

CheckEntry check_lemma_3_2(const FrameManifold& m, const ContactStructure& c, const StarRicci& star,
                           const NullityResult& nullity) {
  const auto k = nullity.k();
  if (!k) return needs_k("lemma-3.2", nullity);
  ResidualProbe probe(m, "lemma-3.2");
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      probe.expect_zero({i, j}, star.s_star(i, j) + *k * (m.metric()(i, j) - c.eta[i] * c.eta[j]));
  CheckEntry e = probe.finish();
  e.add("k", k->str(m.var()));
  e.add("r_star", star.r_star.str(m.var()));
  return e;
}

CheckEntry check_nabla_star(const FrameManifold& m, const ContactStructure& c, const StarRicci& star,
                            const Connection& nabla, const NullityResult& nullity) {
  const auto k = nullity.k();
  if (!k) return needs_k("nabla-sstar-3.4to3.6", nullity);
  const std::size_t n = m.dim();
  // ns(x, y, z) = (nabla_{e_z} S*)(e_x, e_y)
  const Tensor ns = covariant_derivative(star.s_star, nabla);
  ResidualProbe probe(m, "nabla-sstar-3.4to3.6");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vector ex = m.basis(x), ey = m.basis(y), ez = m.basis(z);
        const Vector zh = ez + c.apply_h(ez);
        const Scalar rhs = *k * (c.eta[y] * m.inner(zh, c.apply_phi(ex)) + c.eta[x] * m.inner(zh, c.apply_phi(ey)));
        probe.expect_zero({x, y, z}, ns(x, y, z) - rhs);
      }
  return probe.finish();
}

CheckEntry check_lemma_3_4(const FrameManifold& m, const ContactStructure& c, const StarRicci& star,
                           const Connection& nabla, const NullityResult& nullity) {
  const auto k = nullity.k();
  if (!k) return needs_k("lemma-3.4", nullity);
  const std::size_t n = m.dim();
  const Tensor ns = covariant_derivative(star.s_star, nabla);
  ResidualProbe probe(m, "lemma-3.4");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vector ex = m.basis(x), ey = m.basis(y), ez = m.basis(z);
        const Vector phix = c.apply_phi(ex), phiy = c.apply_phi(ey);
        const Vector hz = c.apply_h(ez);
        const Scalar lhs = ns(x, y, z) - ns(y, z, x) - ns(x, z, y);
        const Scalar rhs = Scalar(-2) * *k *
                           (c.eta[y] * (m.inner(phix, ez) + m.inner(phix, hz)) +
                            c.eta[x] * (m.inner(phiy, ez) + m.inner(phiy, hz)));
        probe.expect_zero({x, y, z}, lhs - rhs);
      }
  CheckEntry e = probe.finish();
  e.add("k", k->str(m.var()));
  return e;
}

std::string ConventionReconciliation::label() const {
  if (passing.size() == 2) return "both";
  if (passing.empty()) return "none";
  return passing.front() > 0 ? "+1" : "-1";
}

ConventionReconciliation reconcile_convention(const FrameManifold& m, const ContactStructure& c,
                                              const Connection& nabla) {
  ConventionReconciliation r;
  for (int sign : {1, -1}) {
    const Curvature curv = riemann(m, nabla, sign);
    const NullityResult nullity = detect_nullity_k(m, c, curv);
    if (check_lemma_3_2(m, c, star_ricci(m, c, curv), nullity).status == Status::Pass) r.passing.push_back(sign);
  }
  return r;
}

}  // namespace cgeom
