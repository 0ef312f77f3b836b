#pragma once

#include <map>

#include "sasprod/product.hpp"

namespace sasprod {

/// J acting on p-forms, matching the sign conventions of the d^c operator
/// below: (J alpha)(X_1..X_p) = (-1)^p alpha(J X_1, ..., J X_p), i.e. the
/// pullback along J^{-1}. Identity on 0-forms; J Phi_i = Phi_i;
/// J eta_1 = (a/b) eta_1 + ((a^2+b^2)/b) eta_2.
ExteriorForm j_on_forms(const ProductHermitian& p, const ExteriorForm& alpha);

/// d^c alpha = (-1)^p J d J alpha, a real operator with dd^c = 2i del delbar.
ExteriorForm d_c(const ProductHermitian& p, const ExteriorForm& alpha);

/// Codifferential of omega: (delta omega)(X) = -g^{ij} (nabla_{b_i}
/// omega)(b_j, X), returned as a 1-form.
ExteriorForm codifferential_omega(const ProductHermitian& p);

struct LeeFormResult {
  ExteriorForm theta;
  DenseTensor nabla_theta;    // (nabla_{b_i} theta)(b_j), Levi-Civita
  DenseTensor nabla_b_theta;  // same for the Bismut connection; always 0
};

/// Lee form theta = (delta omega) o J / (n-1); cross-checked against the
/// closed form 2b/(n1+n2) (n2 eta1 - n1 eta2). Requires n1 + n2 >= 1.
LeeFormResult lee_form(const ProductHermitian& p);

enum class Flag { Yes, No, NotApplicable };

struct HermitianClassReport {
  Flag kahler = Flag::NotApplicable;
  Flag balanced = Flag::NotApplicable;
  Flag lck = Flag::NotApplicable;
  Flag vaisman = Flag::NotApplicable;
  Flag skt = Flag::NotApplicable;
  Flag astheno_kahler = Flag::NotApplicable;
  Flag gauduchon = Flag::NotApplicable;
  std::map<int, Flag> k_gauduchon;  // k = 1 .. n-1
  ExteriorForm lee;
  Scalar certificate_c;  // C(n, n1) from the k-Gauduchon identity
};

/// Decides every flag from its defining form identity, never from the
/// algebraic classification criteria (the tests cross-check the two):
/// d omega = 0; delta omega = 0; d omega = theta ^ omega with d theta = 0;
/// nabla theta = 0; dd^c omega = 0; dd^c omega^{n-2} = 0;
/// dd^c omega^k ^ omega^{n-k-1} = 0.
HermitianClassReport classify(const ProductHermitian& p);

const char* flag_name(Flag f);

/// binom(m, t) as a Scalar, zero for t < 0 or t > m or m < 0.
Scalar binomial(int m, int t, Backend backend);

}  // namespace sasprod
