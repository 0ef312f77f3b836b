#pragma once

#include <string>
#include <vector>

#include "sasprod/exterior.hpp"
#include "sasprod/scalar.hpp"
#include "sasprod/tensor.hpp"

namespace sasprod {

/// Finite-dimensional Lie algebra given by structure constants c[k,i,j]
/// (antisymmetric in i,j): [b_i, b_j] = sum_k c[k,i,j] b_k.
struct LieAlgebra {
  int dim = 0;
  Backend backend = Backend::Exact;
  std::vector<std::string> labels;
  DenseTensor c;

  static LieAlgebra create(int dim, Backend backend);

  /// Sets [b_i, b_j] += v * b_k together with the antisymmetric mirror.
  void set_bracket(int i, int j, int k, const Scalar& v);

  std::vector<Scalar> bracket_basis(int i, int j) const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y) const;
};

struct JacobiReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // first violating triple when !ok
};
JacobiReport check_jacobi(const LieAlgebra& l);

/// Chevalley-Eilenberg differential:
/// (d a)(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i,X_j], ..no X_i.. no X_j..).
ExteriorForm ce_differential(const ExteriorForm& alpha, const LieAlgebra& l);

/// Lie algebra with an inner product. Construction validates symmetry,
/// positive definiteness (leading principal minors) and caches the exact
/// inverse.
class MetricLieAlgebra {
public:
  MetricLieAlgebra() = default;
  MetricLieAlgebra(LieAlgebra l, DenseTensor metric);

  const LieAlgebra& algebra() const { return algebra_; }
  const DenseTensor& metric() const { return metric_; }
  const DenseTensor& inverse_metric() const { return inverse_; }
  int dim() const { return algebra_.dim; }
  Backend backend() const { return algebra_.backend; }

  Scalar inner(const std::vector<Scalar>& x,
               const std::vector<Scalar>& y) const;

private:
  LieAlgebra algebra_;
  DenseTensor metric_;
  DenseTensor inverse_;
};

/// Left-invariant Levi-Civita connection Gamma[k,i,j] from the Koszul
/// identity 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
DenseTensor koszul_connection(const MetricLieAlgebra& m);

/// R[l,i,j,k]: R(b_i,b_j) b_k = sum_l R[l,i,j,k] b_l, for any connection
/// tensor gamma, via R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z -
/// nabla_[X,Y] Z.
DenseTensor curvature_tensor(const LieAlgebra& l, const DenseTensor& gamma);

/// Ric(X,Y) = sum g^{ij} g(R(b_i,X)Y, b_j).
DenseTensor ricci_tensor(const MetricLieAlgebra& m, const DenseTensor& riem);

/// nabla_X Y for coordinate vectors and a connection tensor.
std::vector<Scalar> nabla(const DenseTensor& gamma,
                          const std::vector<Scalar>& x,
                          const std::vector<Scalar>& y);
std::vector<Scalar> nabla_basis(const DenseTensor& gamma, int i,
                                const std::vector<Scalar>& y);

/// Lowered curvature R0[w,x,y,z] = g(R(b_x,b_y) b_z, b_w).
DenseTensor lower_curvature(const DenseTensor& riem, const DenseTensor& g);

}  // namespace sasprod
