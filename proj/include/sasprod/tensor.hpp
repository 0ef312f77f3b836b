#pragma once

#include <vector>

#include "sasprod/scalar.hpp"

namespace sasprod {

enum class Slot { Co, Contra };

/// Dense coordinate tensor of order 0..4 on an n-dimensional space.
/// Entries are stored flat, lexicographically by index tuple; each slot is
/// marked covariant or contravariant.
class DenseTensor {
public:
  DenseTensor() = default;
  DenseTensor(int dim, std::vector<Slot> slots, Backend backend);

  int dim() const { return dim_; }
  int order() const { return static_cast<int>(slots_.size()); }
  Backend backend() const { return backend_; }
  const std::vector<Slot>& slots() const { return slots_; }

  const Scalar& at(const std::vector<int>& idx) const;
  void set(const std::vector<int>& idx, Scalar v);
  void add(const std::vector<int>& idx, const Scalar& v);

  std::size_t size() const { return data_.size(); }
  const Scalar& flat(std::size_t i) const { return data_[i]; }
  Scalar& flat(std::size_t i) { return data_[i]; }

  DenseTensor operator+(const DenseTensor& o) const;
  DenseTensor operator-(const DenseTensor& o) const;
  DenseTensor scaled(const Scalar& s) const;
  bool is_zero() const;
  bool operator==(const DenseTensor& o) const { return (*this - o).is_zero(); }
  bool operator!=(const DenseTensor& o) const { return !(*this == o); }

  std::size_t offset(const std::vector<int>& idx) const;

private:
  int dim_ = 0;
  Backend backend_ = Backend::Exact;
  std::vector<Slot> slots_;
  std::vector<Scalar> data_;
};

/// Sum over g^{ij} with the two covariant slots slot_a < slot_b of t removed:
/// result(rest) = sum_{i,j} g_inv(i,j) t(..., i, ..., j, ...). Equals the
/// orthonormal-frame sum exactly.
DenseTensor contract_pair(const DenseTensor& t, const DenseTensor& g_inv,
                          int slot_a, int slot_b);

Scalar determinant(std::vector<std::vector<Scalar>> m, Backend backend);
std::vector<std::vector<Scalar>> invert_matrix(
    const std::vector<std::vector<Scalar>>& m, Backend backend);

DenseTensor identity_endomorphism(int dim, Backend backend);

/// A[i,j] v^j for a (1,1) tensor A.
std::vector<Scalar> apply_endo(const DenseTensor& a,
                               const std::vector<Scalar>& v);
/// (A o B)[i,j] = sum_k A[i,k] B[k,j].
DenseTensor compose_endo(const DenseTensor& a, const DenseTensor& b);
DenseTensor commutator_endo(const DenseTensor& a, const DenseTensor& b);

std::vector<Scalar> zero_vector(int dim, Backend backend);
std::vector<Scalar> basis_vector(int dim, int i, Backend backend);
std::vector<Scalar> add_vectors(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y);
std::vector<Scalar> sub_vectors(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y);
std::vector<Scalar> scale_vector(const Scalar& s,
                                 const std::vector<Scalar>& x);
bool vector_is_zero(const std::vector<Scalar>& x);

}  // namespace sasprod
