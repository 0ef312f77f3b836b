#pragma once

#include "sasprod/sasaki.hpp"

namespace sasprod {

/// Parameters (a, b) of the product Hermitian structure, b != 0, with
/// lambda_ab = a^2 + b^2 - 1 cached.
struct HermitianParams {
  Scalar a;
  Scalar b;
  Scalar lambda_ab;
};

/// The Hermitian structure (J_ab, g_ab, omega_ab) on the direct sum of two
/// Sasakian Lie algebras. Basis order: factor-1 basis then factor-2 basis.
/// All invariants (J^2 = -Id, compatibility, integrability, metric blocks,
/// omega = Phi1 + Phi2 - b eta1^eta2) are validated at construction.
struct ProductHermitian {
  SasakiStructure s1, s2;
  HermitianParams params;
  MetricLieAlgebra sum;
  DenseTensor J;
  ExteriorForm omega;
  int n1 = 0, n2 = 0;
  int dim1 = 0, dim2 = 0;

  // Factor data embedded in product coordinates.
  std::vector<Scalar> xi1, xi2;
  ExteriorForm eta1, eta2, phi_form1, phi_form2;  // eta_i and Phi_i
  DenseTensor phi1, phi2;

  int dim() const { return dim1 + dim2; }
  /// Complex dimension n = n1 + n2 + 1.
  int complex_dim() const { return n1 + n2 + 1; }
  Backend backend() const { return sum.backend(); }

  Scalar eta1_of(const std::vector<Scalar>& x) const;
  Scalar eta2_of(const std::vector<Scalar>& x) const;
};

ProductHermitian build_product(const SasakiStructure& s1,
                               const SasakiStructure& s2, const Scalar& a,
                               const Scalar& b);

/// Levi-Civita connection of g_ab in closed form (factor connections plus
/// the a- and lambda_ab-corrections), cross-checked entrywise against the
/// Koszul connection of the sum algebra.
DenseTensor product_levi_civita(const ProductHermitian& p);

/// (nabla_{b_i} J) b_j as NJ[k,i,j], computed directly as
/// nabla(J .) - J nabla(.), cross-checked against the closed-form blocks.
DenseTensor nabla_J(const ProductHermitian& p);

/// delta J = g^{ij} (nabla_{b_i} J)(b_j); equals 2 n1 xi1 + 2 n2 xi2.
std::vector<Scalar> codifferential_J(const ProductHermitian& p);

/// Rough Laplacian: trace of the second covariant derivative of J.
DenseTensor rough_laplacian_J(const ProductHermitian& p);

/// P(X) = (1/2) sum R(e_i, J e_i) X, as an inverse-metric contraction.
DenseTensor p_tensor(const ProductHermitian& p);

struct HarmonicityResult {
  DenseTensor defect;  // [J, nabla*nabla J]
  bool harmonic = false;
};
HarmonicityResult harmonicity_defect(const ProductHermitian& p);

/// [J, nabla*nabla J] - 2(nabla_{delta J} J - [J, P]); zero for integrable J.
DenseTensor wood_identity_residual(const ProductHermitian& p);

/// Embedding helpers (factor = 0 or 1).
std::vector<Scalar> embed_vector(const ProductHermitian& p, int factor,
                                 const std::vector<Scalar>& v);

}  // namespace sasprod
