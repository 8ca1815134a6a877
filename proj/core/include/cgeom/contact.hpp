#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgeom/connection.hpp"
#include "cgeom/manifold_file.hpp"
#include "cgeom/report.hpp"

namespace cgeom {

/// Which 2-form the contact condition compares d(eta) against.
/// A: g(phi X, Y) = d eta(X, Y).  B: g(X, phi Y) = d eta(X, Y).
enum class ContactConvention { A, B };

std::string_view to_string(ContactConvention c);

struct ContactStructure {
  Vector xi;
  /// eta = g(., xi) as covector components.
  Vector eta;
  /// (1,1): phi(i, j) is the e_i component of phi(e_j).
  Tensor phi;
  /// (1,1): h = 1/2 L_xi phi.
  Tensor h;
  std::optional<Scalar> k;

  Scalar eta_of(const Vector& x) const;
  Vector apply_phi(const Vector& x) const { return apply(phi, x); }
  Vector apply_h(const Vector& x) const { return apply(h, x); }
};

/// Builds eta and h from the declared xi and phi.
ContactStructure make_contact_structure(const FrameManifold& m, const ContactDecl& decl);

/// ac-2.1 (phi^2 = -Id + eta (x) xi, eta(xi) = 1, phi xi = 0, eta o phi = 0),
/// ac-2.2 (g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)), ac-2.3 (phi skew).
std::vector<CheckEntry> verify_almost_contact(const FrameManifold& m, const ContactStructure& c);

/// d eta(e_i, e_j) = -1/2 eta([e_i, e_j]) for constant eta.
Tensor exterior_derivative_eta(const FrameManifold& m, const ContactStructure& c);

/// contact-cond under `convention`; derived `holds_under` names every
/// convention that holds ("A", "B" or "none").
CheckEntry check_contact_condition(const FrameManifold& m, const ContactStructure& c,
                                   ContactConvention convention = ContactConvention::B);

/// 1/2 L_xi phi.
Tensor compute_h(const FrameManifold& m, const Vector& xi, const Tensor& phi);

/// h-2.4: h g-symmetric, h phi = -phi h, tr h = tr(phi h) = 0, h xi = 0.
CheckEntry check_h_properties(const FrameManifold& m, const ContactStructure& c);

enum class NullityStatus { Found, NotNullity, HSquareMismatch };

struct NullityResult {
  NullityStatus status = NullityStatus::NotNullity;
  /// From R(X,Y)xi = k[eta(Y)X - eta(X)Y].
  std::optional<Scalar> k_curvature;
  /// From h^2 = (k - 1) phi^2.
  std::optional<Scalar> k_structure;
  std::string message;

  /// Nullity constant fed to the k-dependent identities. The structure value
  /// is preferred because it does not depend on the curvature sign.
  std::optional<Scalar> k() const;
};

NullityResult detect_nullity_k(const FrameManifold& m, const ContactStructure& c, const Curvature& curvature);

/// nabla-xi-2.5, h-sq-2.6, nullity-2.7, nullity-2.8, nabla-eta-2.9,
/// nabla-phi-2.10, nabla-phih-2.11. The k-dependent ones are not-applicable
/// without a nullity constant.
std::vector<CheckEntry> check_structure_identities(const FrameManifold& m, const ContactStructure& c,
                                                   const Connection& nabla, const Curvature& curvature,
                                                   const NullityResult& nullity);

}  // namespace cgeom
