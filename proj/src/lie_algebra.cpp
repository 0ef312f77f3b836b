#include "sasprod/lie_algebra.hpp"

namespace sasprod {

LieAlgebra LieAlgebra::create(int dim, Backend backend) {
  LieAlgebra l;
  l.dim = dim;
  l.backend = backend;
  l.c = DenseTensor(dim, {Slot::Contra, Slot::Co, Slot::Co}, backend);
  for (int i = 0; i < dim; ++i) l.labels.push_back("e" + std::to_string(i + 1));
  return l;
}

void LieAlgebra::set_bracket(int i, int j, int k, const Scalar& v) {
  if (i == j) throw Error("bracket [x,x] must vanish");
  c.add({k, i, j}, v);
  c.add({k, j, i}, -v);
}

std::vector<Scalar> LieAlgebra::bracket_basis(int i, int j) const {
  std::vector<Scalar> out(dim, Scalar::zero(backend));
  for (int k = 0; k < dim; ++k) out[k] = c.at({k, i, j});
  return out;
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw Error("bracket dimension mismatch");
  std::vector<Scalar> out(dim, Scalar::zero(backend));
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar f = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Scalar& ck = c.at({k, i, j});
        if (!ck.is_zero()) out[k] += f * ck;
      }
    }
  }
  return out;
}

JacobiReport check_jacobi(const LieAlgebra& l) {
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      for (int k = j + 1; k < l.dim; ++k) {
        auto cyc = l.bracket(l.bracket_basis(i, j), basis_vector(l.dim, k, l.backend));
        cyc = add_vectors(cyc, l.bracket(l.bracket_basis(j, k),
                                         basis_vector(l.dim, i, l.backend)));
        cyc = add_vectors(cyc, l.bracket(l.bracket_basis(k, i),
                                         basis_vector(l.dim, j, l.backend)));
        if (!vector_is_zero(cyc)) return {false, i, j, k};
      }
  return {};
}

ExteriorForm ce_differential(const ExteriorForm& alpha, const LieAlgebra& l) {
  if (alpha.dim() != l.dim) throw Error("ce_differential dimension mismatch");
  const int k = alpha.degree();
  ExteriorForm d(l.dim, k + 1, l.backend);
  if (k + 1 > l.dim || k == 0) return d;  // left-invariant 0-forms are constant
  std::vector<int> key(k + 1);
  for (int i = 0; i <= k; ++i) key[i] = i;
  std::vector<int> args(k);
  while (true) {
    Scalar acc = Scalar::zero(l.backend);
    for (int p = 0; p <= k; ++p) {
      for (int q = p + 1; q <= k; ++q) {
        const auto br = l.bracket_basis(key[p], key[q]);
        int r = 0;
        args[0] = 0;  // placeholder for the bracket slot
        for (int t = 0; t <= k; ++t)
          if (t != p && t != q) args[1 + r++] = key[t];
        Scalar term = Scalar::zero(l.backend);
        for (int m = 0; m < l.dim; ++m) {
          if (br[m].is_zero()) continue;
          args[0] = m;
          term += br[m] * alpha.coefficient(args);
        }
        if ((p + q) % 2 == 1) term = -term;
        acc += term;
      }
    }
    if (!acc.is_zero()) d.set(key, std::move(acc));
    int pos = k;
    while (pos >= 0 && key[pos] == l.dim - (k + 1) + pos) --pos;
    if (pos < 0) break;
    ++key[pos];
    for (int q = pos + 1; q <= k; ++q) key[q] = key[q - 1] + 1;
  }
  return d;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra l, DenseTensor metric)
    : algebra_(std::move(l)), metric_(std::move(metric)) {
  const int n = algebra_.dim;
  if (metric_.order() != 2 || metric_.dim() != n)
    throw Error("metric shape mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (metric_.at({i, j}) != metric_.at({j, i}))
        throw Error("metric must be symmetric");
  // Positive definiteness via leading principal minors.
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Scalar>> minor(
        k, std::vector<Scalar>(k, Scalar::zero(backend())));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = metric_.at({i, j});
    if (!determinant(std::move(minor), backend()).is_positive())
      throw Error("metric must be positive definite");
  }
  std::vector<std::vector<Scalar>> g(n,
                                     std::vector<Scalar>(n, Scalar::zero(backend())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = metric_.at({i, j});
  const auto inv = invert_matrix(g, backend());
  inverse_ = DenseTensor(n, {Slot::Contra, Slot::Contra}, backend());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inverse_.set({i, j}, inv[i][j]);
  // g * g^{-1} = Id must hold exactly on the exact backend.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(backend());
      for (int k = 0; k < n; ++k) acc += metric_.at({i, k}) * inverse_.at({k, j});
      const Scalar expect =
          i == j ? Scalar::one(backend()) : Scalar::zero(backend());
      if (acc != expect) throw Error("metric inverse validation failed");
    }
}

Scalar MetricLieAlgebra::inner(const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const {
  const int n = dim();
  Scalar acc = Scalar::zero(backend());
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      acc += x[i] * y[j] * metric_.at({i, j});
    }
  }
  return acc;
}

DenseTensor koszul_connection(const MetricLieAlgebra& m) {
  const int n = m.dim();
  const Backend bk = m.backend();
  const auto& l = m.algebra();
  DenseTensor gamma(n, {Slot::Contra, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i) {
    const auto bi = basis_vector(n, i, bk);
    for (int j = 0; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      const auto br_ij = l.bracket_basis(i, j);
      // rhs_k = 2 g(nabla_{b_i} b_j, b_k)
      std::vector<Scalar> rhs(n, Scalar::zero(bk));
      for (int k = 0; k < n; ++k) {
        const auto bk_vec = basis_vector(n, k, bk);
        rhs[k] = m.inner(br_ij, bk_vec) - m.inner(l.bracket_basis(j, k), bi) +
                 m.inner(l.bracket_basis(k, i), bj);
      }
      for (int kk = 0; kk < n; ++kk) {
        Scalar acc = Scalar::zero(bk);
        for (int k = 0; k < n; ++k)
          acc += m.inverse_metric().at({kk, k}) * rhs[k];
        gamma.set({kk, i, j}, acc.div(2));
      }
    }
  }
  return gamma;
}

std::vector<Scalar> nabla_basis(const DenseTensor& gamma, int i,
                                const std::vector<Scalar>& y) {
  const int n = gamma.dim();
  std::vector<Scalar> out(n, Scalar::zero(gamma.backend()));
  for (int j = 0; j < n; ++j) {
    if (y[j].is_zero()) continue;
    for (int k = 0; k < n; ++k) {
      const Scalar& g = gamma.at({k, i, j});
      if (!g.is_zero()) out[k] += y[j] * g;
    }
  }
  return out;
}

std::vector<Scalar> nabla(const DenseTensor& gamma,
                          const std::vector<Scalar>& x,
                          const std::vector<Scalar>& y) {
  const int n = gamma.dim();
  std::vector<Scalar> out(n, Scalar::zero(gamma.backend()));
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const auto part = nabla_basis(gamma, i, y);
    for (int k = 0; k < n; ++k) out[k] += x[i] * part[k];
  }
  return out;
}

DenseTensor curvature_tensor(const LieAlgebra& l, const DenseTensor& gamma) {
  const int n = l.dim;
  const Backend bk = l.backend;
  DenseTensor r(n, {Slot::Contra, Slot::Co, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto br = l.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        // R(b_i,b_j) b_k
        auto v = nabla_basis(gamma, i, nabla_basis(gamma, j,
                                                   basis_vector(n, k, bk)));
        v = sub_vectors(v, nabla_basis(gamma, j,
                                       nabla_basis(gamma, i,
                                                   basis_vector(n, k, bk))));
        v = sub_vectors(v, nabla(gamma, br, basis_vector(n, k, bk)));
        for (int ll = 0; ll < n; ++ll) r.set({ll, i, j, k}, v[ll]);
      }
    }
  return r;
}

DenseTensor lower_curvature(const DenseTensor& riem, const DenseTensor& g) {
  const int n = riem.dim();
  DenseTensor r0(n, {Slot::Co, Slot::Co, Slot::Co, Slot::Co}, riem.backend());
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Scalar acc = Scalar::zero(riem.backend());
          for (int l = 0; l < n; ++l) {
            const Scalar& rl = riem.at({l, x, y, z});
            if (!rl.is_zero()) acc += g.at({w, l}) * rl;
          }
          r0.set({w, x, y, z}, std::move(acc));
        }
  return r0;
}

DenseTensor ricci_tensor(const MetricLieAlgebra& m, const DenseTensor& riem) {
  const DenseTensor r0 = lower_curvature(riem, m.metric());
  return contract_pair(r0, m.inverse_metric(), 0, 1);
}

}  // namespace sasprod
