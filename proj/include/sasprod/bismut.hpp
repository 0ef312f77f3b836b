#pragma once

#include <optional>

#include "sasprod/hermitian_classes.hpp"

namespace sasprod {

/// Bismut connection Gamma^B = Gamma + T^B/2: computed from the torsion
/// 3-form T^B = d^c omega and cross-checked against the closed form in
/// terms of the factor characteristic connections. Validates nabla^B g = 0,
/// nabla^B J = 0 and nabla^B xi_i = 0 exactly.
DenseTensor bismut_connection(const ProductHermitian& p);

struct BismutTorsion {
  ExteriorForm form3;  // T^B as a 3-form (= d^c omega)
  DenseTensor t12;     // (1,2) view: T[k,i,j]
};

/// Torsion of the Bismut connection; the 3-form is cross-checked against
/// 2[Phi1 ^ (eta1 + a eta2) + Phi2 ^ (a eta1 + (a^2+b^2) eta2)] and the
/// (1,2) view against the torsion of Gamma^B.
BismutTorsion bismut_torsion(const ProductHermitian& p);

DenseTensor bismut_curvature(const ProductHermitian& p);

/// nabla^B T^B = 0, checked exactly.
bool parallel_torsion_check(const ProductHermitian& p);

/// Codifferential of the torsion 3-form w.r.t. the Levi-Civita connection.
ExteriorForm delta_torsion(const ProductHermitian& p);

/// Ric^B(X,Y) = g^{ij} g(R^B(b_i,X)Y, b_j), computed from the curvature and
/// cross-checked against the closed-form factor blocks.
DenseTensor ricci_bismut(const ProductHermitian& p);

/// rho^B(X,Y) = (1/2) g^{ij} g(R^B(X,Y) b_i, J b_j), computed from the
/// curvature and cross-checked against the closed-form factor blocks.
ExteriorForm rho_bismut(const ProductHermitian& p);

/// lambda^omega(X,Y) = g^{ij} dT^B(X,Y,b_i,J b_j). Requires n1, n2 >= 1.
ExteriorForm lambda_omega(const ProductHermitian& p);

/// First Bianchi identity for R^B plus J-invariance of the lowered
/// curvature; coincides with the SKT condition for these products.
bool kahler_like_check(const ProductHermitian& p);

enum class StaticVerdict { Static, NotStatic, NotApplicable };

struct StaticResult {
  StaticVerdict verdict = StaticVerdict::NotApplicable;
  std::optional<Scalar> alpha;
};

/// Static condition rho^B = alpha omega, defined only for SKT inputs.
StaticResult static_check(const ProductHermitian& p);

struct BismutAnalysis {
  DenseTensor gamma_b;
  ExteriorForm torsion3;
  DenseTensor torsion12;
  DenseTensor curvature;
  DenseTensor ricci;
  ExteriorForm rho;
  bool ric_b_zero = false;
  bool cyt = false;
  bool parallel_torsion = false;
  bool delta_torsion_zero = false;
  bool kahler_like = false;
  StaticResult static_result;
};

BismutAnalysis analyze_bismut(const ProductHermitian& p);

// ---- Inverse solvers ------------------------------------------------------

struct CytSolution {
  Scalar a;
  Scalar b_squared;
  std::optional<Scalar> exact_b;  // sqrt representative in Q(sqrt(d))
  std::string case_note;          // which case of the analysis applied
};

enum class CytSolveKind {
  Unique,      // a and b^2 determined
  Circle,      // n1 = 0: only a^2 + b^2 constrained
  AnyParams,   // n2 = 0 and lambda1 matches: every (a, b != 0) works
  NoSolution,
};

struct CytSolveResult {
  CytSolveKind kind = CytSolveKind::NoSolution;
  std::optional<CytSolution> solution;
  std::optional<Scalar> circle_radius_squared;  // a^2 + b^2 = r^2
  std::optional<Scalar> offending_b_squared;    // on NoSolution from b^2 <= 0
  std::string case_note;
};

/// Solves lambda1 = 4(n1 + a n2) - 2, lambda2 = 4(a n1 + (a^2+b^2) n2) - 2
/// for (a, b^2). Factors with n = 0 fall back to the single-equation
/// branches.
CytSolveResult cyt_solve(const Scalar& lambda1, int n1, const Scalar& lambda2,
                         int n2);

struct RicBZeroResult {
  bool solvable = false;
  std::optional<Scalar> radius_squared;  // a^2 + b^2 = (lambda2+2)/4
  std::string reason;
};

/// Ric^B = 0 iff lambda1 = 2 and lambda2 = 2(2a^2 + 2b^2 - 1) > -2.
RicBZeroResult ric_b_zero_solve(const Scalar& lambda1, const Scalar& lambda2);

/// CYT parameters for a product of Sasaki-Einstein factors
/// (lambda_i = 2 n_i): a = -(n1-1)/(2 n2), b^2 = ((n1-1)(n1+1) +
/// 2 n2(n2+1)) / (4 n2^2).
CytSolution se_product_params(int n1, int n2, Backend backend);

struct CytNormalization {
  bool solvable = false;
  Scalar s1, s2;  // D-homothety factors for each Sasakian factor
  Scalar a, b_squared;
  std::string case_note;
};

/// Given eta-Einstein constants of the two factors, produces D-homothety
/// factors and (a, b^2) realizing a CYT structure whenever the class
/// combination permits one: factor 1 positive (any factor 2), or factor 1
/// null/negative with factor 2 positive.
CytNormalization cyt_normalize(const Scalar& lambda1, int n1,
                               const Scalar& lambda2, int n2);

}  // namespace sasprod
