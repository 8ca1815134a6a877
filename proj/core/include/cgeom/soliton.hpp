#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cgeom/star.hpp"

namespace cgeom {

/// How solve_lambda reads L_V g + 2S* = c g: demanding it componentwise, or
/// only after tracing with g.
enum class LambdaMode { Full, TraceOnly };

/// Infinitesimal contact transformation status: L_V eta = f eta with f = 0
/// (strict), with f != 0 (non-strict), or no such f.
enum class IctStatus { Strict, NonStrict, NotIct };

std::string_view to_string(IctStatus s);

struct ClassifyResult {
  bool killing = false;
  /// sigma with L_V g = 2 sigma g, when L_V g is a multiple of g.
  std::optional<Scalar> conformal_sigma;
  /// eta(L_V xi) = eta([V, xi]).
  Scalar eta_lie_xi;
  IctStatus ict = IctStatus::NotIct;
};

/// Everything the soliton identities read, computed once per manifold.
struct SolitonContext {
  const FrameManifold& m;
  const ContactStructure& c;
  const Connection& nabla;
  const Curvature& curvature;
  const StarRicci& star;
  const NullityResult& nullity;
};

/// p/2 + 1/(2n+1), the lambda of a steady soliton.
PScalar steady_lambda(const FrameManifold& m, const SolitonConfig& cfg);

/// L_V g + 2S* - [2 lambda - (p + 2/(2n+1))] g. Throws PreconditionError
/// when lambda is unset or S* is not symmetric.
PTensor soliton_residual(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg);

/// lambda = c/2 + p/2 + 1/(2n+1) where L_V g + 2S* = c g; nullopt when the
/// full mode finds no such constant c.
std::optional<PScalar> solve_lambda(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg,
                                    LambdaMode mode = LambdaMode::Full);

/// Hess + S* - [lambda - (p/2 + 1/(2n+1))] g with Hess(X,Y) = g(nabla_X V, Y).
/// Throws PreconditionError when lambda is unset or Hess is not symmetric.
PTensor gradient_residual(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg,
                          const Connection& nabla);

/// poisson: div V = (2n+1)[lambda - (p/2 + 1/(2n+1))]. Without lambda the
/// equation is solved for it (derived lambda_for_poisson).
CheckEntry poisson_check(const FrameManifold& m, const StarRicci& star, const SolitonConfig& cfg,
                         const Connection& nabla);

ClassifyResult classify_field(const FrameManifold& m, const ContactStructure& c, const Vector& v);

/// eq-3.28 and eq-3.29, which hold on any nullity manifold.
std::vector<CheckEntry> check_q_star_identities(const FrameManifold& m, const ContactStructure& c,
                                                const StarRicci& star, const Connection& nabla,
                                                const NullityResult& nullity);

/// soliton-1.1, grad-soliton-1.2, eq-3.11, eq-3.12, eq-3.16, eq-3.17,
/// eq-3.19, lemma-3.10, thm-3.5, thm-3.11, poisson, classify. Identities
/// that follow from the soliton equation are not-applicable when it fails.
/// An unset lambda is solved for with `mode`.
std::vector<CheckEntry> run_soliton_checks(const SolitonContext& ctx, const SolitonConfig& cfg,
                                           LambdaMode mode = LambdaMode::Full);

}  // namespace cgeom
