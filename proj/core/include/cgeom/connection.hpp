#pragma once

#include <optional>
#include <utility>

#include "cgeom/frame.hpp"
#include "cgeom/report.hpp"

namespace cgeom {

/// Levi-Civita connection coefficients of a frame manifold.
struct Connection {
  /// (1,2): gamma(k, i, j) is the e_k component of nabla_{e_i} e_j.
  Tensor gamma;

  /// nabla_X Y for constant-component X and Y.
  Vector covariant(const Vector& x, const Vector& y) const;
};

/// Riemann tensor under a chosen overall sign, with Ricci and scalar
/// curvature.
///
/// With sign +1, R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z -
/// nabla_[X,Y] Z; sign -1 negates every component. Ricci(X,Y) is the trace
/// of Z -> R(Z,X)Y and the scalar curvature its metric trace.
struct Curvature {
  int sign = 1;
  /// (1,3): riemann(l, k, i, j) is the e_l component of R(e_i, e_j) e_k.
  Tensor riemann;
  Tensor ricci;
  Scalar scalar;

  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;
};

Connection levi_civita(const FrameManifold& m);

Curvature riemann(const FrameManifold& m, const Connection& nabla, int sign = 1);

/// Covariant derivative of a frame-constant tensor. The result has one more
/// covariant slot, appended last: out(..., z) = (nabla_{e_z} T)(...).
Tensor covariant_derivative(const Tensor& t, const Connection& nabla);

/// Lie derivative of a frame-constant tensor along a constant field V.
/// Only brackets enter: upper slots pick up [V, .], lower slots -T(.., [V, .], ..).
Tensor lie_derivative(const Tensor& t, const Vector& v, const FrameManifold& m);

/// L_V X = [V, X].
Vector lie_derivative(const Vector& x, const Vector& v, const FrameManifold& m);

/// (L_V g)(X, Y) = g(nabla_X V, Y) + g(X, nabla_Y V); agrees with
/// lie_derivative(metric, V) on a torsion-free metric connection.
Tensor lie_derivative_metric_via_connection(const Vector& v, const FrameManifold& m, const Connection& nabla);

/// (L_V nabla)(X, Y) = L_V(nabla_X Y) - nabla_{L_V X} Y - nabla_X (L_V Y),
/// stored like gamma: out(a, x, y).
Tensor lie_derivative_of_connection(const Vector& v, const FrameManifold& m, const Connection& nabla);

/// L_V R with the layout of Curvature::riemann.
Tensor lie_derivative_of_curvature(const Vector& v, const FrameManifold& m, const Curvature& curvature);

/// Hess(X, Y) = g(nabla_X V, Y) for V read as a gradient Df.
Tensor hessian_candidate(const Vector& v, const FrameManifold& m, const Connection& nabla);

/// Trace of X -> nabla_X V.
Scalar divergence(const Vector& v, const Connection& nabla);

/// First (i, j) with Hess(e_i, e_j) != Hess(e_j, e_i); a symmetric
/// candidate Hessian is necessary for V to be locally a gradient.
std::optional<std::pair<std::size_t, std::size_t>> gradient_obstruction(const Tensor& hessian);

bool is_gradient_like(const Vector& v, const FrameManifold& m, const Connection& nabla);

/// frame-jacobi, torsion-free, metric-compat, bianchi-1, riem-antisym,
/// riem-pair-sym, ricci-sym, lie-g-routes, lie-nabla-sym. The two Lie
/// derivative checks run over the frame fields; both sides are linear in V,
/// so that covers every constant field.
std::vector<CheckEntry> check_connection_invariants(const FrameManifold& m, const Connection& nabla,
                                                    const Curvature& curvature);

}  // namespace cgeom
