#include "sasprod/exterior.hpp"

#include <algorithm>

namespace sasprod {

int sort_index_tuple(std::vector<int>& idx) {
  int sign = 1;
  // Insertion sort; tuples are tiny.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

ExteriorForm::ExteriorForm(int dim, int degree, Backend backend)
    : dim_(dim), degree_(degree), backend_(backend) {
  if (dim <= 0) throw Error("form dimension must be positive");
  if (degree < 0) throw Error("form degree out of range");
  // degree > dim is allowed and forces the zero form: no strictly
  // increasing key of that length exists.
}

Scalar ExteriorForm::coefficient(std::vector<int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw Error("form coefficient arity mismatch");
  const int sign = sort_index_tuple(idx);
  if (sign == 0) return Scalar::zero(backend_);
  auto it = terms_.find(idx);
  if (it == terms_.end()) return Scalar::zero(backend_);
  return sign > 0 ? it->second : -it->second;
}

void ExteriorForm::set(std::vector<int> idx, Scalar v) {
  if (static_cast<int>(idx.size()) != degree_)
    throw Error("form set arity mismatch");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= dim_) throw Error("form index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw Error("form key must be strictly increasing");
  }
  if (v.is_zero())
    terms_.erase(idx);
  else
    terms_[std::move(idx)] = std::move(v);
}

void ExteriorForm::add_term(std::vector<int> idx, const Scalar& v) {
  if (v.is_zero()) return;
  const int sign = sort_index_tuple(idx);
  if (sign == 0) return;
  Scalar next = terms_.count(idx) ? terms_[idx] : Scalar::zero(backend_);
  next += sign > 0 ? v : -v;
  if (next.is_zero())
    terms_.erase(idx);
  else
    terms_[std::move(idx)] = std::move(next);
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw Error("form shape mismatch");
  ExteriorForm r = *this;
  for (const auto& [k, v] : o.terms_) {
    Scalar next = r.terms_.count(k) ? r.terms_[k] : Scalar::zero(backend_);
    next += v;
    if (next.is_zero())
      r.terms_.erase(k);
    else
      r.terms_[k] = std::move(next);
  }
  return r;
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

ExteriorForm ExteriorForm::operator-(const ExteriorForm& o) const {
  return *this + (-o);
}

ExteriorForm ExteriorForm::scaled(const Scalar& s) const {
  ExteriorForm r(dim_, degree_, backend_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : terms_) {
    Scalar sv = v * s;
    if (!sv.is_zero()) r.terms_[k] = std::move(sv);
  }
  return r;
}

bool ExteriorForm::is_zero() const {
  for (const auto& [k, v] : terms_)
    if (!v.is_zero()) return false;
  return true;
}

bool ExteriorForm::operator==(const ExteriorForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) return false;
  return (*this - o).is_zero();
}

Scalar ExteriorForm::eval(
    const std::vector<std::vector<Scalar>>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    throw Error("form evaluation arity mismatch");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != dim_)
      throw Error("form evaluation vector dimension mismatch");
  Scalar acc = Scalar::zero(backend_);
  const int k = degree_;
  std::vector<std::vector<Scalar>> minor(
      k, std::vector<Scalar>(k, Scalar::zero(backend_)));
  for (const auto& [key, coeff] : terms_) {
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) minor[r][s] = vectors[s][key[r]];
    acc += coeff * determinant(minor, backend_);
  }
  return acc;
}

ExteriorForm ExteriorForm::interior(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error("interior product dimension mismatch");
  if (degree_ == 0) throw Error("interior product of a 0-form");
  ExteriorForm r(dim_, degree_ - 1, backend_);
  for (const auto& [key, coeff] : terms_) {
    for (int p = 0; p < degree_; ++p) {
      if (x[key[p]].is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(degree_ - 1);
      for (int q = 0; q < degree_; ++q)
        if (q != p) rest.push_back(key[q]);
      const Scalar term = (p % 2 == 0 ? coeff : -coeff) * x[key[p]];
      r.add_term(std::move(rest), term);
    }
  }
  return r;
}

ExteriorForm ExteriorForm::pullback(const DenseTensor& a) const {
  if (a.order() != 2 || a.dim() != dim_)
    throw Error("pullback endomorphism mismatch");
  if (degree_ == 0 || degree_ > dim_) return *this;
  ExteriorForm r(dim_, degree_, backend_);
  const int k = degree_;
  // (A* alpha)_L = sum_K alpha_K det(A[K_r, L_s]).
  std::vector<int> key(k);
  std::vector<std::vector<Scalar>> minor(
      k, std::vector<Scalar>(k, Scalar::zero(backend_)));
  // Iterate over increasing tuples L.
  for (int i = 0; i < k; ++i) key[i] = i;
  while (true) {
    Scalar acc = Scalar::zero(backend_);
    for (const auto& [src, coeff] : terms_) {
      for (int rr = 0; rr < k; ++rr)
        for (int ss = 0; ss < k; ++ss) minor[rr][ss] = a.at({src[rr], key[ss]});
      acc += coeff * determinant(minor, backend_);
    }
    if (!acc.is_zero()) r.set(key, std::move(acc));
    // Advance L.
    int pos = k - 1;
    while (pos >= 0 && key[pos] == dim_ - k + pos) --pos;
    if (pos < 0) break;
    ++key[pos];
    for (int q = pos + 1; q < k; ++q) key[q] = key[q - 1] + 1;
  }
  return r;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim()) throw Error("wedge dimension mismatch");
  const int deg = a.degree() + b.degree();
  // Past the top degree every merged key repeats an index, so the loop
  // below produces the zero form of degree deg on its own.
  ExteriorForm r(a.dim(), deg, a.backend());
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      std::vector<int> merged = ka;
      merged.insert(merged.end(), kb.begin(), kb.end());
      r.add_term(std::move(merged), va * vb);
    }
  }
  return r;
}

ExteriorForm wedge_power(const ExteriorForm& a, int k) {
  if (k < 0) throw Error("negative wedge power");
  ExteriorForm r(a.dim(), 0, a.backend());
  r.set({}, Scalar::one(a.backend()));
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

}  // namespace sasprod
