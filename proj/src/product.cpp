#include "sasprod/product.hpp"

namespace sasprod {

namespace {

constexpr int kProductDimCap = 12;

ExteriorForm embed_form(const ExteriorForm& f, int total_dim, int offset) {
  ExteriorForm out(total_dim, f.degree(), f.backend());
  for (const auto& [key, v] : f.terms()) {
    std::vector<int> shifted = key;
    for (int& i : shifted) i += offset;
    out.set(std::move(shifted), v);
  }
  return out;
}

DenseTensor embed_endo(const DenseTensor& a, int total_dim, int offset) {
  DenseTensor out(total_dim, {Slot::Contra, Slot::Co}, a.backend());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Scalar& v = a.at({i, j});
      if (!v.is_zero()) out.set({i + offset, j + offset}, v);
    }
  return out;
}

}  // namespace

std::vector<Scalar> embed_vector(const ProductHermitian& p, int factor,
                                 const std::vector<Scalar>& v) {
  auto out = zero_vector(p.dim(), p.backend());
  const int offset = factor == 0 ? 0 : p.dim1;
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

Scalar ProductHermitian::eta1_of(const std::vector<Scalar>& x) const {
  Scalar acc = Scalar::zero(backend());
  for (const auto& [key, v] : eta1.terms()) acc += v * x[key[0]];
  return acc;
}

Scalar ProductHermitian::eta2_of(const std::vector<Scalar>& x) const {
  Scalar acc = Scalar::zero(backend());
  for (const auto& [key, v] : eta2.terms()) acc += v * x[key[0]];
  return acc;
}

ProductHermitian build_product(const SasakiStructure& s1,
                               const SasakiStructure& s2, const Scalar& a,
                               const Scalar& b) {
  const Backend bk = s1.backend();
  if (s2.backend() != bk || a.backend() != bk || b.backend() != bk)
    throw Error("build_product: mixed backends");
  if (b.is_zero()) throw Error("build_product: b must be nonzero");
  const auto v1 = verify_sasakian(s1);
  if (!v1.sasakian())
    throw Error("build_product: factor 1 (" + s1.name + ") is not Sasakian: " +
                (v1.failures.empty() ? "" : v1.failures.front()));
  const auto v2 = verify_sasakian(s2);
  if (!v2.sasakian())
    throw Error("build_product: factor 2 (" + s2.name + ") is not Sasakian: " +
                (v2.failures.empty() ? "" : v2.failures.front()));

  ProductHermitian p;
  p.s1 = s1;
  p.s2 = s2;
  p.dim1 = s1.dim();
  p.dim2 = s2.dim();
  p.n1 = s1.n;
  p.n2 = s2.n;
  const int n = p.dim1 + p.dim2;
  if (n > kProductDimCap)
    throw Error("build_product: product dimension exceeds the cap of 12");

  const Scalar one = Scalar::one(bk);
  p.params = HermitianParams{a, b, a * a + b * b - one};
  const Scalar ab2 = a * a + b * b;

  // Direct-sum Lie algebra: brackets are componentwise.
  LieAlgebra l = LieAlgebra::create(n, bk);
  l.labels.clear();
  for (const auto& lab : s1.m.algebra().labels) l.labels.push_back("1." + lab);
  for (const auto& lab : s2.m.algebra().labels) l.labels.push_back("2." + lab);
  for (int i = 0; i < p.dim1; ++i)
    for (int j = 0; j < p.dim1; ++j)
      for (int k = 0; k < p.dim1; ++k)
        l.c.set({k, i, j}, s1.m.algebra().c.at({k, i, j}));
  for (int i = 0; i < p.dim2; ++i)
    for (int j = 0; j < p.dim2; ++j)
      for (int k = 0; k < p.dim2; ++k)
        l.c.set({k + p.dim1, i + p.dim1, j + p.dim1},
                s2.m.algebra().c.at({k, i, j}));

  // g_ab blocks: g1, a eta1 (x) eta2 off-diagonal, g2 + lambda eta2 (x) eta2.
  DenseTensor g(n, {Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < p.dim1; ++i)
    for (int j = 0; j < p.dim1; ++j) g.set({i, j}, s1.m.metric().at({i, j}));
  for (int i = 0; i < p.dim2; ++i)
    for (int j = 0; j < p.dim2; ++j) {
      Scalar v = s2.m.metric().at({i, j}) +
                 p.params.lambda_ab * s2.eta.coefficient({i}) *
                     s2.eta.coefficient({j});
      g.set({i + p.dim1, j + p.dim1}, std::move(v));
    }
  for (int i = 0; i < p.dim1; ++i)
    for (int j = 0; j < p.dim2; ++j) {
      const Scalar v = a * s1.eta.coefficient({i}) * s2.eta.coefficient({j});
      g.set({i, j + p.dim1}, v);
      g.set({j + p.dim1, i}, v);
    }
  p.sum = MetricLieAlgebra(std::move(l), std::move(g));

  p.xi1 = embed_vector(p, 0, s1.xi);
  p.xi2 = embed_vector(p, 1, s2.xi);
  p.eta1 = embed_form(s1.eta, n, 0);
  p.eta2 = embed_form(s2.eta, n, p.dim1);
  p.phi_form1 = embed_form(s1.fundamental, n, 0);
  p.phi_form2 = embed_form(s2.fundamental, n, p.dim1);
  p.phi1 = embed_endo(s1.phi, n, 0);
  p.phi2 = embed_endo(s2.phi, n, p.dim1);

  // J: phi_i on D_i, J xi1 = -(a/b) xi1 + (1/b) xi2,
  //            J xi2 = -((a^2+b^2)/b) xi1 + (a/b) xi2.
  DenseTensor J(n, {Slot::Contra, Slot::Co}, bk);
  for (int j = 0; j < n; ++j) {
    const auto bj = basis_vector(n, j, bk);
    std::vector<Scalar> img;
    if (j < p.dim1) {
      img = apply_endo(p.phi1, bj);
      const Scalar e1 = p.eta1_of(bj);
      img = add_vectors(img, scale_vector(-(a / b) * e1, p.xi1));
      img = add_vectors(img, scale_vector(e1 / b, p.xi2));
    } else {
      img = apply_endo(p.phi2, bj);
      const Scalar e2 = p.eta2_of(bj);
      img = add_vectors(img, scale_vector(-(ab2 / b) * e2, p.xi1));
      img = add_vectors(img, scale_vector((a / b) * e2, p.xi2));
    }
    for (int i = 0; i < n; ++i) J.set({i, j}, img[i]);
  }
  p.J = J;

  p.omega = p.phi_form1 + p.phi_form2 -
            wedge(p.eta1, p.eta2).scaled(b);

  // Construction-time validation of the ProductHermitian invariants.
  const DenseTensor id = identity_endomorphism(n, bk);
  if (!(compose_endo(p.J, p.J) + id).is_zero())
    throw Error("build_product: J^2 != -Id");
  for (int i = 0; i < n; ++i) {
    const auto bi = basis_vector(n, i, bk);
    const auto Jbi = apply_endo(p.J, bi);
    for (int j = i; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      const auto Jbj = apply_endo(p.J, bj);
      if (p.sum.inner(Jbi, Jbj) != p.sum.inner(bi, bj))
        throw Error("build_product: g(JX,JY) != g(X,Y)");
      if (p.omega.coefficient({i, j}) != p.sum.inner(bi, Jbj))
        throw Error("build_product: omega != g(., J.)");
      // Integrability: N_J = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] = 0.
      auto nj = p.sum.algebra().bracket(Jbi, Jbj);
      nj = sub_vectors(nj, apply_endo(p.J, p.sum.algebra().bracket(Jbi, bj)));
      nj = sub_vectors(nj, apply_endo(p.J, p.sum.algebra().bracket(bi, Jbj)));
      nj = sub_vectors(nj, p.sum.algebra().bracket_basis(i, j));
      if (!vector_is_zero(nj))
        throw Error("build_product: Nijenhuis tensor of J does not vanish");
    }
  }
  if (p.sum.inner(p.xi2, p.xi2) != ab2)
    throw Error("build_product: g(xi2,xi2) != a^2+b^2");
  if (p.sum.inner(p.xi1, p.xi2) != a)
    throw Error("build_product: g(xi1,xi2) != a");
  return p;
}

DenseTensor product_levi_civita(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const Scalar& a = p.params.a;
  const Scalar& lam = p.params.lambda_ab;
  const DenseTensor gamma1 = koszul_connection(p.s1.m);
  const DenseTensor gamma2 = koszul_connection(p.s2.m);
  DenseTensor gamma(n, {Slot::Contra, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i) {
    const auto bi = basis_vector(n, i, bk);
    for (int j = 0; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      std::vector<Scalar> v;
      if (i < p.dim1 && j < p.dim1) {
        v = embed_vector(
            p, 0, nabla_basis(gamma1, i, basis_vector(p.dim1, j, bk)));
      } else if (i >= p.dim1 && j >= p.dim1) {
        v = embed_vector(
            p, 1, nabla_basis(gamma2, i - p.dim1,
                              basis_vector(p.dim2, j - p.dim1, bk)));
        auto corr = scale_vector(p.eta2_of(bi), apply_endo(p.phi2, bj));
        corr = add_vectors(corr,
                           scale_vector(p.eta2_of(bj), apply_endo(p.phi2, bi)));
        v = sub_vectors(v, scale_vector(lam, corr));
      } else if (i < p.dim1) {
        auto corr = scale_vector(p.eta2_of(bj), apply_endo(p.phi1, bi));
        corr = add_vectors(corr,
                           scale_vector(p.eta1_of(bi), apply_endo(p.phi2, bj)));
        v = scale_vector(-a, corr);
      } else {
        auto corr = scale_vector(p.eta2_of(bi), apply_endo(p.phi1, bj));
        corr = add_vectors(corr,
                           scale_vector(p.eta1_of(bj), apply_endo(p.phi2, bi)));
        v = scale_vector(-a, corr);
      }
      for (int k = 0; k < n; ++k) gamma.set({k, i, j}, v[k]);
    }
  }
  // Koszul on the sum algebra is the independent route; they must agree
  // entrywise.
  if (gamma != koszul_connection(p.sum))
    throw Error("product_levi_civita: closed form disagrees with Koszul");
  return gamma;
}

namespace {

DenseTensor nabla_J_closed_form(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const Scalar& a = p.params.a;
  const Scalar& b = p.params.b;
  const Scalar& lam = p.params.lambda_ab;
  const Scalar ab2 = a * a + b * b;
  DenseTensor nj(n, {Slot::Contra, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i) {
    const auto bi = basis_vector(n, i, bk);
    for (int j = 0; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      std::vector<Scalar> v = zero_vector(n, bk);
      if (i < p.dim1 && j < p.dim1) {
        const Scalar g1 =
            p.s1.m.inner(basis_vector(p.dim1, i, bk), basis_vector(p.dim1, j, bk));
        const Scalar f1 = p.phi_form1.coefficient({i, j});
        v = scale_vector(g1 - (a / b) * f1, p.xi1);
        v = add_vectors(v, scale_vector(f1 / b, p.xi2));
        v = sub_vectors(v, scale_vector(p.eta1_of(bj), bi));
      } else if (i >= p.dim1 && j >= p.dim1) {
        const Scalar g2 = p.s2.m.inner(basis_vector(p.dim2, i - p.dim1, bk),
                                       basis_vector(p.dim2, j - p.dim1, bk));
        const Scalar f2 = p.phi_form2.coefficient({i, j});
        const Scalar e2i = p.eta2_of(bi);
        const Scalar e2j = p.eta2_of(bj);
        v = scale_vector(g2 + lam * e2i * e2j + (a / b) * f2, p.xi2);
        v = sub_vectors(v, scale_vector((ab2 / b) * f2, p.xi1));
        v = sub_vectors(v, scale_vector(ab2 * e2j, bi));
      } else if (i < p.dim1) {
        const Scalar e2j = p.eta2_of(bj);
        v = scale_vector(a * e2j * p.eta1_of(bi), p.xi1);
        v = sub_vectors(v, scale_vector(a * e2j, bi));
        v = add_vectors(v, scale_vector(b * e2j, apply_endo(p.phi1, bi)));
      } else {
        const Scalar e1j = p.eta1_of(bj);
        v = scale_vector(a * e1j * p.eta2_of(bi), p.xi2);
        v = sub_vectors(v, scale_vector(a * e1j, bi));
        v = sub_vectors(v, scale_vector(b * e1j, apply_endo(p.phi2, bi)));
      }
      for (int k = 0; k < n; ++k) nj.set({k, i, j}, v[k]);
    }
  }
  return nj;
}

}  // namespace

DenseTensor nabla_J(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const DenseTensor gamma = product_levi_civita(p);
  DenseTensor nj(n, {Slot::Contra, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      auto v = nabla_basis(gamma, i, apply_endo(p.J, bj));
      v = sub_vectors(v, apply_endo(p.J, nabla_basis(gamma, i, bj)));
      for (int k = 0; k < n; ++k) nj.set({k, i, j}, v[k]);
    }
  if (nj != nabla_J_closed_form(p))
    throw Error("nabla_J: direct computation disagrees with the closed form");
  return nj;
}

std::vector<Scalar> codifferential_J(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const DenseTensor nj = nabla_J(p);
  auto out = zero_vector(n, bk);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& w = p.sum.inverse_metric().at({i, j});
      if (w.is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        const Scalar& v = nj.at({k, i, j});
        if (!v.is_zero()) out[k] += w * v;
      }
    }
  auto expect = scale_vector(Scalar::integer(2 * p.n1, bk), p.xi1);
  expect = add_vectors(expect,
                       scale_vector(Scalar::integer(2 * p.n2, bk), p.xi2));
  if (!vector_is_zero(sub_vectors(out, expect)))
    throw Error("codifferential_J: delta J != 2 n1 xi1 + 2 n2 xi2");
  return out;
}

DenseTensor rough_laplacian_J(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const DenseTensor gamma = product_levi_civita(p);
  const DenseTensor nj = nabla_J(p);
  // (nabla^2_{b_i,b_j} J)(b_k) = nabla_{b_i}((nabla_{b_j}J) b_k)
  //   - (nabla_{b_j}J)(nabla_{b_i} b_k) - (nabla_{nabla_{b_i} b_j} J)(b_k).
  DenseTensor out(n, {Slot::Contra, Slot::Co}, bk);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& w = p.sum.inverse_metric().at({i, j});
      if (w.is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          Scalar acc = Scalar::zero(bk);
          for (int l = 0; l < n; ++l) {
            const Scalar& g_il = gamma.at({m, i, l});
            const Scalar& nj_ljk = nj.at({l, j, k});
            if (!g_il.is_zero() && !nj_ljk.is_zero()) acc += g_il * nj_ljk;
            const Scalar& nj_mjl = nj.at({m, j, l});
            const Scalar& g_lik = gamma.at({l, i, k});
            if (!nj_mjl.is_zero() && !g_lik.is_zero()) acc -= nj_mjl * g_lik;
            const Scalar& g_lij = gamma.at({l, i, j});
            const Scalar& nj_mlk = nj.at({m, l, k});
            if (!g_lij.is_zero() && !nj_mlk.is_zero()) acc -= g_lij * nj_mlk;
          }
          if (!acc.is_zero()) out.add({m, k}, w * acc);
        }
      }
    }
  return out;
}

DenseTensor p_tensor(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const DenseTensor gamma = product_levi_civita(p);
  const DenseTensor riem = curvature_tensor(p.sum.algebra(), gamma);
  DenseTensor out(n, {Slot::Contra, Slot::Co}, bk);
  const Scalar half = Scalar::rational(1, 2, bk);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      Scalar acc = Scalar::zero(bk);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Scalar& w = p.sum.inverse_metric().at({i, j});
          if (w.is_zero()) continue;
          for (int l = 0; l < n; ++l) {
            const Scalar& jl = p.J.at({l, j});
            if (jl.is_zero()) continue;
            const Scalar& r = riem.at({m, i, l, k});
            if (!r.is_zero()) acc += w * jl * r;
          }
        }
      out.set({m, k}, half * acc);
    }
  return out;
}

HarmonicityResult harmonicity_defect(const ProductHermitian& p) {
  const DenseTensor lap = rough_laplacian_J(p);
  DenseTensor defect = commutator_endo(p.J, lap);
  const bool harmonic = defect.is_zero();
  return {std::move(defect), harmonic};
}

DenseTensor wood_identity_residual(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const DenseTensor lap = rough_laplacian_J(p);
  const DenseTensor nj = nabla_J(p);
  const auto dj = codifferential_J(p);
  DenseTensor nabla_dj(n, {Slot::Contra, Slot::Co}, bk);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) {
      Scalar acc = Scalar::zero(bk);
      for (int i = 0; i < n; ++i) {
        if (dj[i].is_zero()) continue;
        acc += dj[i] * nj.at({m, i, k});
      }
      nabla_dj.set({m, k}, std::move(acc));
    }
  const DenseTensor rhs =
      (nabla_dj - commutator_endo(p.J, p_tensor(p))).scaled(Scalar::integer(2, bk));
  return commutator_endo(p.J, lap) - rhs;
}

}  // namespace sasprod
