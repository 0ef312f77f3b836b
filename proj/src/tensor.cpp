#include "sasprod/tensor.hpp"

#include <cmath>

namespace sasprod {

DenseTensor::DenseTensor(int dim, std::vector<Slot> slots, Backend backend)
    : dim_(dim), backend_(backend), slots_(std::move(slots)) {
  if (dim <= 0) throw Error("tensor dimension must be positive");
  if (slots_.size() > 4) throw Error("tensor order capped at 4");
  std::size_t n = 1;
  for (std::size_t k = 0; k < slots_.size(); ++k) n *= dim_;
  data_.assign(n, Scalar::zero(backend_));
}

std::size_t DenseTensor::offset(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != order())
    throw Error("tensor index arity mismatch");
  std::size_t off = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw Error("tensor index out of range");
    off = off * dim_ + static_cast<std::size_t>(i);
  }
  return off;
}

const Scalar& DenseTensor::at(const std::vector<int>& idx) const {
  return data_[offset(idx)];
}

void DenseTensor::set(const std::vector<int>& idx, Scalar v) {
  data_[offset(idx)] = std::move(v);
}

void DenseTensor::add(const std::vector<int>& idx, const Scalar& v) {
  data_[offset(idx)] += v;
}

DenseTensor DenseTensor::operator+(const DenseTensor& o) const {
  if (dim_ != o.dim_ || slots_ != o.slots_)
    throw Error("tensor shape mismatch");
  DenseTensor r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

DenseTensor DenseTensor::operator-(const DenseTensor& o) const {
  if (dim_ != o.dim_ || slots_ != o.slots_)
    throw Error("tensor shape mismatch");
  DenseTensor r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

DenseTensor DenseTensor::scaled(const Scalar& s) const {
  DenseTensor r = *this;
  for (auto& v : r.data_) v = v * s;
  return r;
}

bool DenseTensor::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

DenseTensor contract_pair(const DenseTensor& t, const DenseTensor& g_inv,
                          int slot_a, int slot_b) {
  const int ord = t.order();
  if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= ord ||
      slot_b >= ord)
    throw Error("contract_pair: slot out of range");
  if (slot_a > slot_b) std::swap(slot_a, slot_b);
  if (t.slots()[slot_a] != Slot::Co || t.slots()[slot_b] != Slot::Co)
    throw Error("contract_pair: slots must be covariant");
  if (g_inv.order() != 2 || g_inv.dim() != t.dim())
    throw Error("contract_pair: bad inverse metric");

  const int n = t.dim();
  std::vector<Slot> out_slots;
  for (int s = 0; s < ord; ++s)
    if (s != slot_a && s != slot_b) out_slots.push_back(t.slots()[s]);
  DenseTensor out(n, out_slots, t.backend());

  std::vector<int> rest(out_slots.size(), 0);
  const std::size_t m = out.size();
  std::vector<int> full(ord, 0);
  for (std::size_t off = 0; off < m; ++off) {
    // Decode the output offset into the free indices.
    std::size_t tmp = off;
    for (int s = static_cast<int>(rest.size()) - 1; s >= 0; --s) {
      rest[s] = static_cast<int>(tmp % n);
      tmp /= n;
    }
    Scalar acc = Scalar::zero(t.backend());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Scalar& w = g_inv.at({i, j});
        if (w.is_zero()) continue;
        int r = 0;
        for (int s = 0; s < ord; ++s) {
          if (s == slot_a)
            full[s] = i;
          else if (s == slot_b)
            full[s] = j;
          else
            full[s] = rest[r++];
        }
        acc += w * t.at(full);
      }
    }
    out.flat(off) = std::move(acc);
  }
  return out;
}

Scalar determinant(std::vector<std::vector<Scalar>> m, Backend backend) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant: non-square matrix");
  Scalar det = Scalar::one(backend);
  for (std::size_t col = 0; col < n; ++col) {
    // Pivot: first nonzero entry for exact scalars, largest magnitude for
    // floats.
    std::size_t piv = col;
    bool found = false;
    if (backend == Backend::Float) {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        const double mag = std::fabs(m[r][col].to_double());
        if (!m[r][col].is_zero() && mag > best) {
          best = mag;
          piv = r;
          found = true;
        }
      }
    } else {
      for (std::size_t r = col; r < n; ++r) {
        if (!m[r][col].is_zero()) {
          piv = r;
          found = true;
          break;
        }
      }
    }
    if (!found) return Scalar::zero(backend);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    const Scalar inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Scalar f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> invert_matrix(
    const std::vector<std::vector<Scalar>>& m, Backend backend) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> a = m;
  std::vector<std::vector<Scalar>> inv(
      n, std::vector<Scalar>(n, Scalar::zero(backend)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar::one(backend);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    bool found = false;
    if (backend == Backend::Float) {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        const double mag = std::fabs(a[r][col].to_double());
        if (!a[r][col].is_zero() && mag > best) {
          best = mag;
          piv = r;
          found = true;
        }
      }
    } else {
      for (std::size_t r = col; r < n; ++r) {
        if (!a[r][col].is_zero()) {
          piv = r;
          found = true;
          break;
        }
      }
    }
    if (!found) throw Error("invert_matrix: singular matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
    }
    const Scalar p = a[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] = a[col][c] * p;
      inv[col][c] = inv[col][c] * p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

DenseTensor identity_endomorphism(int dim, Backend backend) {
  DenseTensor id(dim, {Slot::Contra, Slot::Co}, backend);
  for (int i = 0; i < dim; ++i) id.set({i, i}, Scalar::one(backend));
  return id;
}

std::vector<Scalar> apply_endo(const DenseTensor& a,
                               const std::vector<Scalar>& v) {
  const int n = a.dim();
  if (a.order() != 2 || static_cast<int>(v.size()) != n)
    throw Error("apply_endo: shape mismatch");
  std::vector<Scalar> out(n, Scalar::zero(a.backend()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& e = a.at({i, j});
      if (!e.is_zero()) out[i] += e * v[j];
    }
  return out;
}

DenseTensor compose_endo(const DenseTensor& a, const DenseTensor& b) {
  const int n = a.dim();
  if (a.order() != 2 || b.order() != 2 || b.dim() != n)
    throw Error("compose_endo: shape mismatch");
  DenseTensor out(n, {Slot::Contra, Slot::Co}, a.backend());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(a.backend());
      for (int k = 0; k < n; ++k) acc += a.at({i, k}) * b.at({k, j});
      out.set({i, j}, std::move(acc));
    }
  return out;
}

DenseTensor commutator_endo(const DenseTensor& a, const DenseTensor& b) {
  return compose_endo(a, b) - compose_endo(b, a);
}

std::vector<Scalar> zero_vector(int dim, Backend backend) {
  return std::vector<Scalar>(dim, Scalar::zero(backend));
}

std::vector<Scalar> basis_vector(int dim, int i, Backend backend) {
  auto v = zero_vector(dim, backend);
  v[i] = Scalar::one(backend);
  return v;
}

std::vector<Scalar> add_vectors(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y) {
  if (x.size() != y.size()) throw Error("vector size mismatch");
  auto out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

std::vector<Scalar> sub_vectors(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y) {
  if (x.size() != y.size()) throw Error("vector size mismatch");
  auto out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

std::vector<Scalar> scale_vector(const Scalar& s,
                                 const std::vector<Scalar>& x) {
  auto out = x;
  for (auto& v : out) v = v * s;
  return out;
}

bool vector_is_zero(const std::vector<Scalar>& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace sasprod
