#pragma once

#include <string>
#include <vector>

#include "cgeom/contact.hpp"

namespace cgeom {

/// *-Ricci tensor S*(X,Y) = 1/2 trace(Z -> phi R(X, phi Y) Z), its
/// metric-raised endomorphism Q* and the *-scalar curvature r*.
struct StarRicci {
  Tensor s_star;
  /// (1,1): q_star(a, x) = g^{ay} S*(x, y).
  Tensor q_star;
  Scalar r_star;
};

StarRicci star_ricci(const FrameManifold& m, const ContactStructure& c, const Curvature& curvature);

/// star-sym; derived r*.
CheckEntry check_star_symmetry(const FrameManifold& m, const StarRicci& star);

/// lemma-3.2: S* = -k (g - eta (x) eta).
CheckEntry check_lemma_3_2(const FrameManifold& m, const ContactStructure& c, const StarRicci& star,
                           const NullityResult& nullity);

/// nabla-sstar-3.4to3.6: (nabla_Z S*)(X,Y) = k[eta(Y) g(Z + hZ, phi X) + eta(X) g(Z + hZ, phi Y)].
CheckEntry check_nabla_star(const FrameManifold& m, const ContactStructure& c, const StarRicci& star,
                            const Connection& nabla, const NullityResult& nullity);

/// lemma-3.4 over every frame triple (X, Y, Z):
/// (nabla_Z S*)(X,Y) - (nabla_X S*)(Y,Z) - (nabla_Y S*)(X,Z)
///   = -2k[eta(Y) g(phi X, Z) + eta(Y) g(phi X, hZ) + eta(X) g(phi Y, Z) + eta(X) g(phi Y, hZ)].
CheckEntry check_lemma_3_4(const FrameManifold& m, const ContactStructure& c, const StarRicci& star,
                           const Connection& nabla, const NullityResult& nullity);

/// Curvature signs under which lemma-3.2 passes.
struct ConventionReconciliation {
  std::vector<int> passing;

  /// "+1", "-1", "both" or "none".
  std::string label() const;
};

ConventionReconciliation reconcile_convention(const FrameManifold& m, const ContactStructure& c,
                                              const Connection& nabla);

}  // namespace cgeom
