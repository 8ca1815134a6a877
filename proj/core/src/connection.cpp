#include "cgeom/connection.hpp"

namespace cgeom {

namespace {

// ad(a, m) = e_a component of [V, e_m].
Tensor adjoint(const Vector& v, const FrameManifold& m) {
  const std::size_t n = m.dim();
  if (v.size() != n) throw ValidationError("vector length mismatch");
  Tensor ad(n, 1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k)
        if (!m.structure()(a, i, k).is_zero()) ad(a, k) += v[i] * m.structure()(a, i, k);
  }
  return ad;
}

// Leibniz expansion at one multi-index of T (extra trailing entries of idx
// are ignored): sum over upper slots of up(u, m) T(..m..) minus sum over
// lower slots of down(m, d) T(..m..).
template <class Upper, class Lower>
Scalar leibniz(const Tensor& t, std::span<const std::size_t> idx, Upper&& up, Lower&& down) {
  Scalar acc;
  const std::size_t n = t.dim();
  std::vector<std::size_t> src(idx.begin(), idx.begin() + t.rank());
  for (unsigned s = 0; s < t.rank(); ++s) {
    const std::size_t orig = src[s];
    for (std::size_t m = 0; m < n; ++m) {
      src[s] = m;
      const Scalar& value = t.at(src);
      if (value.is_zero()) continue;
      const Scalar coeff = s < t.upper() ? up(orig, m) : -down(m, orig);
      if (!coeff.is_zero()) acc += coeff * value;
    }
    src[s] = orig;
  }
  return acc;
}

}  // namespace

Vector Connection::covariant(const Vector& x, const Vector& y) const {
  const std::size_t n = gamma.dim();
  if (x.size() != n || y.size() != n) throw ValidationError("vector length mismatch");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!gamma(k, i, j).is_zero()) r[k] += xy * gamma(k, i, j);
    }
  }
  return r;
}

Vector Curvature::apply(const Vector& x, const Vector& y, const Vector& z) const {
  const std::size_t n = riemann.dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        Scalar w = x[i] * y[j] * z[k];
        for (std::size_t l = 0; l < n; ++l)
          if (!riemann(l, k, i, j).is_zero()) r[l] += w * riemann(l, k, i, j);
      }
    }
  }
  return r;
}

Connection levi_civita(const FrameManifold& m) {
  const std::size_t n = m.dim();
  const Tensor& c = m.structure();
  const Tensor& g = m.metric();
  // lowered(k, i, j) = g([e_i, e_j], e_k)
  Tensor lowered(n, 0, 3);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar acc;
        for (std::size_t a = 0; a < n; ++a)
          if (!c(a, i, j).is_zero() && !g(a, k).is_zero()) acc += c(a, i, j) * g(a, k);
        lowered(k, i, j) = std::move(acc);
      }
  // Koszul: 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
  const Scalar half = Scalar(Rational(1, 2));
  Tensor koszul(n, 0, 3);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        koszul(k, i, j) = half * (lowered(k, i, j) - lowered(i, j, k) + lowered(j, k, i));

  Connection nabla{Tensor(n, 1, 2)};
  const Tensor& ginv = m.inverse_metric();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar acc;
        for (std::size_t k = 0; k < n; ++k)
          if (!ginv(a, k).is_zero() && !koszul(k, i, j).is_zero()) acc += ginv(a, k) * koszul(k, i, j);
        nabla.gamma(a, i, j) = std::move(acc);
      }
  return nabla;
}

Curvature riemann(const FrameManifold& m, const Connection& nabla, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("curvature sign must be +1 or -1");
  const std::size_t n = m.dim();
  const Tensor& G = nabla.gamma;
  const Tensor& c = m.structure();
  Curvature curv{sign, Tensor(n, 1, 3), Tensor(n, 0, 2), Scalar()};
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Scalar acc;
          for (std::size_t q = 0; q < n; ++q) {
            if (!G(l, i, q).is_zero() && !G(q, j, k).is_zero()) acc += G(l, i, q) * G(q, j, k);
            if (!G(l, j, q).is_zero() && !G(q, i, k).is_zero()) acc -= G(l, j, q) * G(q, i, k);
            if (!c(q, i, j).is_zero() && !G(l, q, k).is_zero()) acc -= c(q, i, j) * G(l, q, k);
          }
          curv.riemann(l, k, i, j) = sign == 1 ? acc : -acc;
        }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar acc;
      for (std::size_t l = 0; l < n; ++l) acc += curv.riemann(l, y, l, x);
      curv.ricci(x, y) = std::move(acc);
    }
  const Tensor& ginv = m.inverse_metric();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!ginv(x, y).is_zero()) curv.scalar += ginv(x, y) * curv.ricci(x, y);
  return curv;
}

Tensor covariant_derivative(const Tensor& t, const Connection& nabla) {
  const std::size_t n = t.dim();
  const Tensor& G = nabla.gamma;
  Tensor out(n, t.upper(), t.lower() + 1);
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    auto idx = out.unflatten(pos);
    const std::size_t z = idx.back();
    out.components()[pos] = leibniz(
        t, idx, [&](std::size_t u, std::size_t m) -> const Scalar& { return G(u, z, m); },
        [&](std::size_t m, std::size_t d) -> const Scalar& { return G(m, z, d); });
  }
  return out;
}

Tensor lie_derivative(const Tensor& t, const Vector& v, const FrameManifold& m) {
  const Tensor ad = adjoint(v, m);
  Tensor out(t.dim(), t.upper(), t.lower());
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    auto idx = out.unflatten(pos);
    out.components()[pos] = leibniz(
        t, idx, [&](std::size_t u, std::size_t k) -> const Scalar& { return ad(u, k); },
        [&](std::size_t k, std::size_t d) -> const Scalar& { return ad(k, d); });
  }
  return out;
}

Vector lie_derivative(const Vector& x, const Vector& v, const FrameManifold& m) { return m.bracket(v, x); }

Tensor lie_derivative_metric_via_connection(const Vector& v, const FrameManifold& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  std::vector<Vector> grad(n);
  for (std::size_t i = 0; i < n; ++i) grad[i] = nabla.covariant(m.basis(i), v);
  Tensor out(n, 0, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m.inner(grad[i], m.basis(j)) + m.inner(m.basis(i), grad[j]);
  return out;
}

Tensor lie_derivative_of_connection(const Vector& v, const FrameManifold& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  Tensor out(n, 1, 2);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = m.basis(x), ey = m.basis(y);
      Vector value = m.bracket(v, nabla.covariant(ex, ey)) - nabla.covariant(m.bracket(v, ex), ey) -
                     nabla.covariant(ex, m.bracket(v, ey));
      for (std::size_t a = 0; a < n; ++a) out(a, x, y) = std::move(value[a]);
    }
  return out;
}

Tensor lie_derivative_of_curvature(const Vector& v, const FrameManifold& m, const Curvature& curvature) {
  return lie_derivative(curvature.riemann, v, m);
}

Tensor hessian_candidate(const Vector& v, const FrameManifold& m, const Connection& nabla) {
  const std::size_t n = m.dim();
  Tensor out(n, 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    Vector grad = nabla.covariant(m.basis(i), v);
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m.inner(grad, m.basis(j));
  }
  return out;
}

Scalar divergence(const Vector& v, const Connection& nabla) {
  const std::size_t n = nabla.gamma.dim();
  Scalar acc;
  for (std::size_t i = 0; i < n; ++i) acc += nabla.covariant(basis_vector(n, i), v)[i];
  return acc;
}

std::optional<std::pair<std::size_t, std::size_t>> gradient_obstruction(const Tensor& hessian) {
  for (std::size_t i = 0; i < hessian.dim(); ++i)
    for (std::size_t j = i + 1; j < hessian.dim(); ++j)
      if (!(hessian(i, j) == hessian(j, i))) return std::pair{i, j};
  return std::nullopt;
}

bool is_gradient_like(const Vector& v, const FrameManifold& m, const Connection& nabla) {
  return !gradient_obstruction(hessian_candidate(v, m, nabla));
}

std::vector<CheckEntry> check_connection_invariants(const FrameManifold& m, const Connection& nabla,
                                                    const Curvature& curvature) {
  const std::size_t n = m.dim();
  const auto e = [&](std::size_t i) { return m.basis(i); };
  std::vector<CheckEntry> out;

  ResidualProbe jacobi(m, "frame-jacobi");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        jacobi.expect_zero({i, j, l}, m.bracket(m.bracket(e(i), e(j)), e(l)) + m.bracket(m.bracket(e(j), e(l)), e(i)) +
                                          m.bracket(m.bracket(e(l), e(i)), e(j)));
  out.push_back(jacobi.finish());

  ResidualProbe torsion(m, "torsion-free");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      torsion.expect_zero({i, j}, nabla.covariant(e(i), e(j)) - nabla.covariant(e(j), e(i)) - m.bracket(e(i), e(j)));
  out.push_back(torsion.finish());

  ResidualProbe compat(m, "metric-compat");
  const Tensor ng = covariant_derivative(m.metric(), nabla);
  for (std::size_t pos = 0; pos < ng.size(); ++pos) compat.expect_zero(ng.unflatten(pos), ng.components()[pos]);
  out.push_back(compat.finish());

  const Tensor& R = curvature.riemann;
  const Tensor low = lower_index(R, m.metric());  // low(w, k, i, j) = g(R(e_i, e_j) e_k, e_w)
  ResidualProbe bianchi(m, "bianchi-1"), antisym(m, "riem-antisym"), pair(m, "riem-pair-sym");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bianchi.expect_zero({i, j, k}, curvature.apply(e(i), e(j), e(k)) + curvature.apply(e(j), e(k), e(i)) +
                                           curvature.apply(e(k), e(i), e(j)));
        for (std::size_t l = 0; l < n; ++l) {
          antisym.expect_zero({l, k, i, j}, R(l, k, i, j) + R(l, k, j, i));
          pair.expect_zero({i, j, k, l}, low(l, k, i, j) - low(j, i, k, l));
        }
      }
  out.push_back(bianchi.finish());
  out.push_back(antisym.finish());
  out.push_back(pair.finish());

  ResidualProbe ricci(m, "ricci-sym");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ricci.expect_zero({i, j}, curvature.ricci(i, j) - curvature.ricci(j, i));
  CheckEntry ricci_entry = ricci.finish();
  ricci_entry.add("scalar_curvature", curvature.scalar.str(m.var()));
  out.push_back(std::move(ricci_entry));

  ResidualProbe routes(m, "lie-g-routes"), sym(m, "lie-nabla-sym");
  for (std::size_t v = 0; v < n; ++v) {
    const Tensor diff = lie_derivative(m.metric(), e(v), m) - lie_derivative_metric_via_connection(e(v), m, nabla);
    const Tensor ln = lie_derivative_of_connection(e(v), m, nabla);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        routes.expect_zero({v, i, j}, diff(i, j));
        for (std::size_t a = 0; a < n; ++a) sym.expect_zero({v, a, i, j}, ln(a, i, j) - ln(a, j, i));
      }
  }
  out.push_back(routes.finish());
  out.push_back(sym.finish());
  return out;
}

}  // namespace cgeom
