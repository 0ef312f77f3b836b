#pragma once

#include <map>
#include <vector>

#include "sasprod/scalar.hpp"
#include "sasprod/tensor.hpp"

namespace sasprod {

/// Antisymmetric multilinear form of degree k, stored sparsely by strictly
/// increasing index tuples; absent keys are zero. Basis forms follow the
/// determinant convention: (e^1 ^ e^2)(b_1, b_2) = 1.
class ExteriorForm {
public:
  ExteriorForm() = default;
  ExteriorForm(int dim, int degree, Backend backend);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  Backend backend() const { return backend_; }

  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

  /// Coefficient at an arbitrary index tuple; sorts and signs, zero on a
  /// repeated index.
  Scalar coefficient(std::vector<int> idx) const;
  /// Sets the coefficient at a strictly increasing key.
  void set(std::vector<int> idx, Scalar v);
  /// Adds v at an arbitrary tuple, sorting and signing first.
  void add_term(std::vector<int> idx, const Scalar& v);

  ExteriorForm operator+(const ExteriorForm& o) const;
  ExteriorForm operator-(const ExteriorForm& o) const;
  ExteriorForm scaled(const Scalar& s) const;
  ExteriorForm operator-() const;
  bool is_zero() const;
  bool operator==(const ExteriorForm& o) const;
  bool operator!=(const ExteriorForm& o) const { return !(*this == o); }

  /// Full antisymmetric multilinear evaluation on deg-many coordinate
  /// vectors.
  Scalar eval(const std::vector<std::vector<Scalar>>& vectors) const;

  /// Interior product: (i_X alpha)(...) = alpha(X, ...).
  ExteriorForm interior(const std::vector<Scalar>& x) const;

  /// Pullback along a (1,1) tensor: (A* alpha)(X_1..X_k) =
  /// alpha(A X_1, ..., A X_k).
  ExteriorForm pullback(const DenseTensor& a) const;

private:
  int dim_ = 0;
  int degree_ = 0;
  Backend backend_ = Backend::Exact;
  std::map<std::vector<int>, Scalar> terms_;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm wedge_power(const ExteriorForm& a, int k);

/// Sign of the permutation sorting idx ascending; 0 on duplicates. Sorts idx
/// in place.
int sort_index_tuple(std::vector<int>& idx);

}  // namespace sasprod
