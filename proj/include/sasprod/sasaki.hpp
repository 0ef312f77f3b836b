#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sasprod/lie_algebra.hpp"

namespace sasprod {

/// Almost contact metric structure (phi, xi, eta, g) on a metric Lie
/// algebra, with the fundamental 2-form Phi(X,Y) = g(X, phi Y) cached.
/// dim = 2n+1.
struct SasakiStructure {
  std::string name;
  MetricLieAlgebra m;
  DenseTensor phi;         // phi[i,j]: coefficient of b_i in phi(b_j)
  std::vector<Scalar> xi;
  ExteriorForm eta;
  ExteriorForm fundamental;  // Phi
  int n = 0;

  int dim() const { return m.dim(); }
  Backend backend() const { return m.backend(); }

  Scalar eta_of(const std::vector<Scalar>& x) const;
  std::vector<Scalar> apply_phi(const std::vector<Scalar>& x) const;
  /// Projection onto the contact distribution D: X - eta(X) xi.
  std::vector<Scalar> project_d(const std::vector<Scalar>& x) const;
};

/// Assembles the structure and caches Phi; performs no axiom checking
/// beyond shapes (verify_sasakian reports per-axiom verdicts).
SasakiStructure make_sasaki(std::string name, MetricLieAlgebra m,
                            DenseTensor phi, std::vector<Scalar> xi,
                            ExteriorForm eta);

struct SasakiVerdict {
  bool almost_contact = false;    // phi^2 = -Id + eta (x) xi, eta(xi)=1, ...
  bool metric_compatible = false; // g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)
  bool normal = false;            // N_phi = 0
  bool contact_condition = false; // d eta = 2 Phi
  std::vector<std::string> failures;

  bool sasakian() const {
    return almost_contact && metric_compatible && normal && contact_condition;
  }
};

SasakiVerdict verify_sasakian(const SasakiStructure& s);

/// Transverse Levi-Civita connection on D, extended linearly in X:
/// nabla^T_xi U = [xi, U], nabla^T_X U = (nabla_X U)^D for X in D.
/// Requires eta(U) = 0.
std::vector<Scalar> transverse_connection(const SasakiStructure& s,
                                          const std::vector<Scalar>& x,
                                          const std::vector<Scalar>& u);

/// Characteristic connection Gamma^C = Gamma + T^C/2 with
/// T^C(X,Y) = 2(-eta(X) phi Y + eta(Y) phi X + Phi(X,Y) xi); validated to
/// parallelize phi, eta and xi exactly. Requires a Sasakian input.
DenseTensor characteristic_connection(const SasakiStructure& s);

enum class EtaEinsteinClass { Positive, Null, Negative };

struct EtaEinsteinConstants {
  Scalar lambda;
  Scalar nu;
  EtaEinsteinClass cls;
};

/// Constants with Ric = lambda g + nu eta (x) eta, decided entrywise
/// exactly; nullopt when the structure is not eta-Einstein. The degenerate
/// n = 0 case reports (0, 0).
std::optional<EtaEinsteinConstants> eta_einstein_constants(
    const SasakiStructure& s);

/// D-homothety: phi' = phi, xi' = xi/s, eta' = s eta,
/// g' = s g + s(s-1) eta (x) eta, for s > 0. Output is re-validated.
SasakiStructure d_homothety(const SasakiStructure& s, const Scalar& factor);

/// Built-in catalog: su2, h3, sl2r, abelian1, heisenberg(n) (also reachable
/// as h3, h5, h7, ...).
SasakiStructure catalog(const std::string& name, Backend backend);
SasakiStructure heisenberg(int n, Backend backend);
std::vector<std::string> catalog_names();

const char* eta_einstein_class_name(EtaEinsteinClass cls);

}  // namespace sasprod
