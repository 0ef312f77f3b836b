#include "sasprod/bismut.hpp"

namespace sasprod {

namespace {

DenseTensor raise_three_form(const ProductHermitian& p,
                             const ExteriorForm& t3) {
  const int n = p.dim();
  const Backend bk = p.backend();
  DenseTensor t(n, {Slot::Contra, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k) {
        Scalar acc = Scalar::zero(bk);
        for (int l = 0; l < n; ++l) {
          const Scalar& w = p.sum.inverse_metric().at({k, l});
          if (w.is_zero()) continue;
          acc += w * t3.coefficient({i, j, l});
        }
        if (!acc.is_zero()) t.set({k, i, j}, std::move(acc));
      }
    }
  return t;
}

ExteriorForm torsion_closed_form(const ProductHermitian& p) {
  const Scalar& a = p.params.a;
  const Scalar ab2 = a * a + p.params.b * p.params.b;
  const Backend bk = p.backend();
  const ExteriorForm e1 = p.eta1 + p.eta2.scaled(a);
  const ExteriorForm e2 = p.eta1.scaled(a) + p.eta2.scaled(ab2);
  return (wedge(p.phi_form1, e1) + wedge(p.phi_form2, e2))
      .scaled(Scalar::integer(2, bk));
}

DenseTensor bismut_closed_form(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const Scalar& a = p.params.a;
  const Scalar two_lam = p.params.lambda_ab * 2;
  const DenseTensor gc1 = characteristic_connection(p.s1);
  const DenseTensor gc2 = characteristic_connection(p.s2);
  DenseTensor gamma(n, {Slot::Contra, Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < n; ++i) {
    const auto bi = basis_vector(n, i, bk);
    for (int j = 0; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      std::vector<Scalar> v;
      if (i < p.dim1 && j < p.dim1) {
        v = embed_vector(p, 0,
                         nabla_basis(gc1, i, basis_vector(p.dim1, j, bk)));
      } else if (i >= p.dim1 && j >= p.dim1) {
        v = embed_vector(p, 1,
                         nabla_basis(gc2, i - p.dim1,
                                     basis_vector(p.dim2, j - p.dim1, bk)));
        v = sub_vectors(v, scale_vector(two_lam * p.eta2_of(bi),
                                        apply_endo(p.phi2, bj)));
      } else if (i < p.dim1) {
        v = scale_vector(Scalar::integer(-2, bk) * a * p.eta1_of(bi),
                         apply_endo(p.phi2, bj));
      } else {
        v = scale_vector(Scalar::integer(-2, bk) * a * p.eta2_of(bi),
                         apply_endo(p.phi1, bj));
      }
      for (int k = 0; k < n; ++k) gamma.set({k, i, j}, v[k]);
    }
  }
  return gamma;
}

struct BismutCtx {
  DenseTensor gamma;    // Levi-Civita
  DenseTensor gamma_b;  // Bismut
  ExteriorForm t3;
  DenseTensor t12;
  DenseTensor rb;       // curvature of gamma_b
};

BismutCtx make_ctx(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  BismutCtx ctx;
  ctx.gamma = product_levi_civita(p);
  ctx.t3 = d_c(p, p.omega);
  if (ctx.t3 != torsion_closed_form(p))
    throw Error("bismut torsion: d^c omega disagrees with the closed form");
  ctx.t12 = raise_three_form(p, ctx.t3);
  ctx.gamma_b = ctx.gamma + ctx.t12.scaled(Scalar::rational(1, 2, bk));
  if (ctx.gamma_b != bismut_closed_form(p))
    throw Error(
        "bismut connection: Gamma + T^B/2 disagrees with the closed form");

  // Defining properties: nabla^B g = 0, nabla^B J = 0, nabla^B xi_i = 0.
  for (int i = 0; i < n; ++i) {
    if (!vector_is_zero(nabla_basis(ctx.gamma_b, i, p.xi1)) ||
        !vector_is_zero(nabla_basis(ctx.gamma_b, i, p.xi2)))
      throw Error("bismut connection: nabla^B xi != 0");
    for (int j = 0; j < n; ++j) {
      const auto bj = basis_vector(n, j, bk);
      const auto dj = nabla_basis(ctx.gamma_b, i, bj);
      const auto dJ = sub_vectors(nabla_basis(ctx.gamma_b, i, apply_endo(p.J, bj)),
                                  apply_endo(p.J, dj));
      if (!vector_is_zero(dJ)) throw Error("bismut connection: nabla^B J != 0");
      for (int k = j; k < n; ++k) {
        const auto bk_vec = basis_vector(n, k, bk);
        const auto dk = nabla_basis(ctx.gamma_b, i, bk_vec);
        if (!(p.sum.inner(dj, bk_vec) + p.sum.inner(bj, dk)).is_zero())
          throw Error("bismut connection: nabla^B g != 0");
      }
    }
  }
  ctx.rb = curvature_tensor(p.sum.algebra(), ctx.gamma_b);
  return ctx;
}

DenseTensor ricci_closed_form(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const Scalar& a = p.params.a;
  const Scalar& b = p.params.b;
  const Scalar c2 = (a * a + b * b) * 4 - Scalar::integer(2, bk);  // 2(2a^2+2b^2-1)
  const DenseTensor ric1 =
      ricci_tensor(p.s1.m, curvature_tensor(p.s1.m.algebra(),
                                            koszul_connection(p.s1.m)));
  const DenseTensor ric2 =
      ricci_tensor(p.s2.m, curvature_tensor(p.s2.m.algebra(),
                                            koszul_connection(p.s2.m)));
  DenseTensor out(n, {Slot::Co, Slot::Co}, bk);
  for (int i = 0; i < p.dim1; ++i)
    for (int j = 0; j < p.dim1; ++j) {
      Scalar v = ric1.at({i, j}) -
                 p.s1.m.metric().at({i, j}) * 2 -
                 Scalar::integer(2 * p.n1 - 2, bk) * p.s1.eta.coefficient({i}) *
                     p.s1.eta.coefficient({j});
      out.set({i, j}, std::move(v));
    }
  for (int i = 0; i < p.dim2; ++i)
    for (int j = 0; j < p.dim2; ++j) {
      Scalar v = ric2.at({i, j}) - c2 * p.s2.m.metric().at({i, j}) +
                 (c2 - Scalar::integer(2 * p.n2, bk)) *
                     p.s2.eta.coefficient({i}) * p.s2.eta.coefficient({j});
      out.set({i + p.dim1, j + p.dim1}, std::move(v));
    }
  return out;
}

ExteriorForm rho_closed_form(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const Scalar& a = p.params.a;
  const Scalar ab2 = a * a + p.params.b * p.params.b;
  const Scalar c1 = (Scalar::integer(2 * p.n1, bk) +
                     a * Scalar::integer(2 * p.n2, bk) - Scalar::one(bk)) *
                    2;
  const Scalar c2 = (a * Scalar::integer(2 * p.n1, bk) +
                     ab2 * Scalar::integer(2 * p.n2, bk) - Scalar::one(bk)) *
                    2;
  const DenseTensor ric1 =
      ricci_tensor(p.s1.m, curvature_tensor(p.s1.m.algebra(),
                                            koszul_connection(p.s1.m)));
  const DenseTensor ric2 =
      ricci_tensor(p.s2.m, curvature_tensor(p.s2.m.algebra(),
                                            koszul_connection(p.s2.m)));
  ExteriorForm out(n, 2, bk);
  auto block = [&](const DenseTensor& ric, const SasakiStructure& s,
                   const Scalar& c, int offset) {
    const int d = s.dim();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        // Ric(b_i, phi b_j) - c Phi(b_i, b_j)
        Scalar v = Scalar::zero(bk);
        for (int m = 0; m < d; ++m) {
          const Scalar& pm = s.phi.at({m, j});
          if (!pm.is_zero()) v += ric.at({i, m}) * pm;
        }
        v -= c * s.fundamental.coefficient({i, j});
        if (!v.is_zero()) out.set({i + offset, j + offset}, std::move(v));
      }
  };
  block(ric1, p.s1, c1, 0);
  block(ric2, p.s2, c2, p.dim1);
  return out;
}

ExteriorForm rho_direct(const ProductHermitian& p, const BismutCtx& ctx) {
  const int n = p.dim();
  const Backend bk = p.backend();
  // V[m][k] = g^{kl} g(b_m, J b_l)
  std::vector<std::vector<Scalar>> v(
      n, std::vector<Scalar>(n, Scalar::zero(bk)));
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      Scalar acc = Scalar::zero(bk);
      for (int l = 0; l < n; ++l) {
        const Scalar& w = p.sum.inverse_metric().at({k, l});
        if (w.is_zero()) continue;
        Scalar gml = Scalar::zero(bk);
        for (int t = 0; t < n; ++t) {
          const Scalar& jt = p.J.at({t, l});
          if (!jt.is_zero()) gml += p.sum.metric().at({m, t}) * jt;
        }
        acc += w * gml;
      }
      v[m][k] = std::move(acc);
    }
  ExteriorForm rho(n, 2, bk);
  const Scalar half = Scalar::rational(1, 2, bk);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar acc = Scalar::zero(bk);
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) {
          const Scalar& r = ctx.rb.at({m, i, j, k});
          if (!r.is_zero()) acc += r * v[m][k];
        }
      acc = acc * half;
      if (!acc.is_zero()) rho.set({i, j}, std::move(acc));
    }
  // Antisymmetry of the direct route: rho(i,i) must vanish identically.
  for (int i = 0; i < n; ++i) {
    Scalar acc = Scalar::zero(bk);
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        const Scalar& r = ctx.rb.at({m, i, i, k});
        if (!r.is_zero()) acc += r * v[m][k];
      }
    if (!acc.is_zero()) throw Error("rho_bismut: diagonal entries nonzero");
  }
  return rho;
}

DenseTensor ricci_direct(const ProductHermitian& p, const BismutCtx& ctx) {
  return contract_pair(lower_curvature(ctx.rb, p.sum.metric()),
                       p.sum.inverse_metric(), 0, 1);
}

bool parallel_torsion_impl(const ProductHermitian& p, const BismutCtx& ctx) {
  const int n = p.dim();
  for (int i = 0; i < n; ++i) {
    // (nabla^B_{b_i} T^B)(x,y,z) =
    //   -T(G x,y,z) - T(x,G y,z) - T(x,y,G z) with G = nabla^B_{b_i}.
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          Scalar acc = Scalar::zero(p.backend());
          for (int m = 0; m < n; ++m) {
            const Scalar& gx = ctx.gamma_b.at({m, i, x});
            if (!gx.is_zero()) acc += gx * ctx.t3.coefficient({m, y, z});
            const Scalar& gy = ctx.gamma_b.at({m, i, y});
            if (!gy.is_zero()) acc += gy * ctx.t3.coefficient({x, m, z});
            const Scalar& gz = ctx.gamma_b.at({m, i, z});
            if (!gz.is_zero()) acc += gz * ctx.t3.coefficient({x, y, m});
          }
          if (!acc.is_zero()) return false;
        }
  }
  return true;
}

ExteriorForm delta_torsion_impl(const ProductHermitian& p,
                                const BismutCtx& ctx) {
  const int n = p.dim();
  const Backend bk = p.backend();
  ExteriorForm out(n, 2, bk);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Scalar acc = Scalar::zero(bk);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Scalar& w = p.sum.inverse_metric().at({i, j});
          if (w.is_zero()) continue;
          // -(nabla_{b_i} T)(b_j, b_x, b_y) with the Levi-Civita connection
          Scalar term = Scalar::zero(bk);
          for (int m = 0; m < n; ++m) {
            const Scalar& gj = ctx.gamma.at({m, i, j});
            if (!gj.is_zero()) term += gj * ctx.t3.coefficient({m, x, y});
            const Scalar& gx = ctx.gamma.at({m, i, x});
            if (!gx.is_zero()) term += gx * ctx.t3.coefficient({j, m, y});
            const Scalar& gy = ctx.gamma.at({m, i, y});
            if (!gy.is_zero()) term += gy * ctx.t3.coefficient({j, x, m});
          }
          acc += w * term;
        }
      if (!acc.is_zero()) out.set({x, y}, std::move(acc));
    }
  return out;
}

bool kahler_like_impl(const ProductHermitian& p, const BismutCtx& ctx) {
  const int n = p.dim();
  const Backend bk = p.backend();
  // First Bianchi identity for R^B.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        for (int m = 0; m < n; ++m) {
          const Scalar cyc = ctx.rb.at({m, x, y, z}) +
                             ctx.rb.at({m, y, z, x}) +
                             ctx.rb.at({m, z, x, y});
          if (!cyc.is_zero()) return false;
        }
  // R^B(JX, JY, ., .) = R^B(X, Y, ., .) on the lowered tensor.
  const DenseTensor r0 = lower_curvature(ctx.rb, p.sum.metric());
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Scalar acc = Scalar::zero(bk);
          for (int xp = 0; xp < n; ++xp) {
            const Scalar& jx = p.J.at({xp, x});
            if (jx.is_zero()) continue;
            for (int yp = 0; yp < n; ++yp) {
              const Scalar& jy = p.J.at({yp, y});
              if (jy.is_zero()) continue;
              acc += jx * jy * r0.at({w, xp, yp, z});
            }
          }
          if (acc != r0.at({w, x, y, z})) return false;
        }
  return true;
}

}  // namespace

DenseTensor bismut_connection(const ProductHermitian& p) {
  return make_ctx(p).gamma_b;
}

BismutTorsion bismut_torsion(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  // The (1,2) view must be the torsion of Gamma^B.
  const int n = p.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto tor = nabla_basis(ctx.gamma_b, i, basis_vector(n, j, p.backend()));
      tor = sub_vectors(tor, nabla_basis(ctx.gamma_b, j,
                                         basis_vector(n, i, p.backend())));
      tor = sub_vectors(tor, p.sum.algebra().bracket_basis(i, j));
      for (int k = 0; k < n; ++k)
        if (tor[k] != ctx.t12.at({k, i, j}))
          throw Error("bismut_torsion: (1,2) view mismatch");
    }
  return {ctx.t3, ctx.t12};
}

DenseTensor bismut_curvature(const ProductHermitian& p) {
  return make_ctx(p).rb;
}

bool parallel_torsion_check(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  return parallel_torsion_impl(p, ctx);
}

ExteriorForm delta_torsion(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  return delta_torsion_impl(p, ctx);
}

DenseTensor ricci_bismut(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  DenseTensor ric = ricci_direct(p, ctx);
  if (ric != ricci_closed_form(p))
    throw Error("ricci_bismut: direct route disagrees with the closed form");
  return ric;
}

ExteriorForm rho_bismut(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  ExteriorForm rho = rho_direct(p, ctx);
  if (rho != rho_closed_form(p))
    throw Error("rho_bismut: direct route disagrees with the closed form");
  return rho;
}

ExteriorForm lambda_omega(const ProductHermitian& p) {
  if (p.n1 < 1 || p.n2 < 1)
    throw Error("lambda_omega: requires nondegenerate factors");
  const int n = p.dim();
  const Backend bk = p.backend();
  const ExteriorForm t3 = d_c(p, p.omega);
  const ExteriorForm dt = ce_differential(t3, p.sum.algebra());
  ExteriorForm out(n, 2, bk);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Scalar acc = Scalar::zero(bk);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar& w = p.sum.inverse_metric().at({k, l});
          if (w.is_zero()) continue;
          for (int m = 0; m < n; ++m) {
            const Scalar& jm = p.J.at({m, l});
            if (jm.is_zero()) continue;
            acc += w * jm * dt.coefficient({x, y, k, m});
          }
        }
      if (!acc.is_zero()) out.set({x, y}, std::move(acc));
    }
  return out;
}

bool kahler_like_check(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  return kahler_like_impl(p, ctx);
}

StaticResult static_check(const ProductHermitian& p) {
  const bool skt =
      ce_differential(d_c(p, p.omega), p.sum.algebra()).is_zero();
  if (!skt) return {StaticVerdict::NotApplicable, std::nullopt};
  const ExteriorForm rho = rho_bismut(p);
  if (rho.is_zero())
    return {StaticVerdict::Static, Scalar::zero(p.backend())};
  // Try rho = alpha omega head-on; the alpha != 0 branch never fires for
  // these products since rho(xi1, xi2) = 0 while omega(xi1, xi2) = -b.
  for (const auto& [key, v] : p.omega.terms()) {
    if (v.is_zero()) continue;
    const Scalar alpha = rho.coefficient(key) / v;
    if (rho == p.omega.scaled(alpha)) return {StaticVerdict::Static, alpha};
    break;
  }
  return {StaticVerdict::NotStatic, std::nullopt};
}

BismutAnalysis analyze_bismut(const ProductHermitian& p) {
  const BismutCtx ctx = make_ctx(p);
  BismutAnalysis out;
  out.gamma_b = ctx.gamma_b;
  out.torsion3 = ctx.t3;
  out.torsion12 = ctx.t12;
  out.curvature = ctx.rb;
  out.ricci = ricci_direct(p, ctx);
  if (out.ricci != ricci_closed_form(p))
    throw Error("ricci_bismut: direct route disagrees with the closed form");
  out.rho = rho_direct(p, ctx);
  if (out.rho != rho_closed_form(p))
    throw Error("rho_bismut: direct route disagrees with the closed form");
  out.ric_b_zero = out.ricci.is_zero();
  out.cyt = out.rho.is_zero();
  out.parallel_torsion = parallel_torsion_impl(p, ctx);
  out.delta_torsion_zero = delta_torsion_impl(p, ctx).is_zero();
  out.kahler_like = kahler_like_impl(p, ctx);
  const bool skt =
      ce_differential(d_c(p, p.omega), p.sum.algebra()).is_zero();
  if (!skt) {
    out.static_result = {StaticVerdict::NotApplicable, std::nullopt};
  } else if (out.cyt) {
    out.static_result = {StaticVerdict::Static, Scalar::zero(p.backend())};
  } else {
    out.static_result = static_check(p);
  }
  return out;
}

// ---- Inverse solvers ------------------------------------------------------

namespace {

std::optional<Scalar> try_exact_sqrt(const Scalar& s) {
  try {
    return s.sqrt();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

CytSolveResult cyt_solve(const Scalar& lambda1, int n1, const Scalar& lambda2,
                         int n2) {
  const Backend bk = lambda1.backend();
  const Scalar two = Scalar::integer(2, bk);
  const Scalar minus2 = Scalar::integer(-2, bk);
  CytSolveResult res;

  if (n1 < 0 || n2 < 0) throw Error("cyt_solve: negative n");
  if (n1 == 0 && n2 == 0) throw Error("cyt_solve: both factors degenerate");

  if (n2 == 0) {
    // Only lambda1 = 4 n1 - 2 constrains anything; (a, b) free.
    res.case_note = "degenerate second factor (n2 = 0)";
    if (lambda1 == Scalar::integer(4 * n1 - 2, bk)) {
      res.kind = CytSolveKind::AnyParams;
    } else {
      res.kind = CytSolveKind::NoSolution;
      res.case_note += ": lambda1 != 4 n1 - 2";
    }
    return res;
  }
  if (n1 == 0) {
    // lambda2 = 4 (a^2+b^2) n2 - 2: a circle constraint.
    res.case_note = "degenerate first factor (n1 = 0)";
    const Scalar r2 = (lambda2 + two) / Scalar::integer(4 * n2, bk);
    if (r2.is_positive()) {
      res.kind = CytSolveKind::Circle;
      res.circle_radius_squared = r2;
    } else {
      res.kind = CytSolveKind::NoSolution;
      res.offending_b_squared = r2;
      res.case_note += ": (lambda2+2)/(4 n2) <= 0";
    }
    return res;
  }

  const char* note = lambda1 == minus2
                         ? "null first factor"
                         : (lambda1 > minus2 ? "positive first factor"
                                             : "negative first factor");
  const Scalar a =
      (lambda1 + two - Scalar::integer(4 * n1, bk)) / Scalar::integer(4 * n2, bk);
  const Scalar b2 =
      (lambda2 + two - a * Scalar::integer(4 * n1, bk)) /
          Scalar::integer(4 * n2, bk) -
      a * a;
  res.case_note = note;
  if (!b2.is_positive()) {
    res.kind = CytSolveKind::NoSolution;
    res.offending_b_squared = b2;
    return res;
  }
  CytSolution sol;
  sol.a = a;
  sol.b_squared = b2;
  sol.exact_b = try_exact_sqrt(b2);
  sol.case_note = note;
  res.kind = CytSolveKind::Unique;
  res.solution = std::move(sol);
  return res;
}

RicBZeroResult ric_b_zero_solve(const Scalar& lambda1, const Scalar& lambda2) {
  const Backend bk = lambda1.backend();
  RicBZeroResult res;
  if (lambda1 != Scalar::integer(2, bk)) {
    res.reason = "lambda1 != 2";
    return res;
  }
  const Scalar r2 = (lambda2 + Scalar::integer(2, bk)).div(4);
  if (!r2.is_positive()) {
    res.reason = "lambda2 <= -2 leaves no b != 0";
    return res;
  }
  res.solvable = true;
  res.radius_squared = r2;
  return res;
}

CytSolution se_product_params(int n1, int n2, Backend backend) {
  if (n1 < 1 || n2 < 1) throw Error("se_product_params: requires n1, n2 >= 1");
  CytSolution sol;
  sol.a = Scalar::rational(-(n1 - 1), 2 * n2, backend);
  sol.b_squared = Scalar::rational(
      static_cast<long>(n1 - 1) * (n1 + 1) + 2L * n2 * (n2 + 1),
      4L * n2 * n2, backend);
  sol.exact_b = try_exact_sqrt(sol.b_squared);
  sol.case_note = "Sasaki-Einstein factors (lambda_i = 2 n_i)";
  return sol;
}

CytNormalization cyt_normalize(const Scalar& lambda1, int n1,
                               const Scalar& lambda2, int n2) {
  if (n1 < 1 || n2 < 1) throw Error("cyt_normalize: requires n1, n2 >= 1");
  const Backend bk = lambda1.backend();
  const Scalar two = Scalar::integer(2, bk);
  const Scalar minus2 = Scalar::integer(-2, bk);
  const Scalar one = Scalar::one(bk);
  CytNormalization out;
  out.s1 = one;
  out.s2 = one;

  const int cls1 = lambda1 > minus2 ? 1 : (lambda1 == minus2 ? 0 : -1);
  const int cls2 = lambda2 > minus2 ? 1 : (lambda2 == minus2 ? 0 : -1);

  if (cls1 == 1) {
    // Rescale factor 1 to lambda1' = 2 n1 - 2, take a = -n1/(2 n2) and pick
    // b by the class of factor 2.
    out.solvable = true;
    out.case_note = "positive first factor";
    out.s1 = (lambda1 + two) / Scalar::integer(2 * n1, bk);
    out.a = Scalar::rational(-n1, 2 * n2, bk);
    const Scalar n1sq = Scalar::integer(n1, bk) * Scalar::integer(n1, bk);
    if (cls2 == 1) {
      // lambda2' = 3 n1^2 / n2 - 2, b = n1/n2
      out.s2 = (lambda2 + two) * Scalar::integer(n2, bk) / (n1sq * 3);
      out.b_squared = Scalar::rational(n1 * n1, n2 * n2, bk);
    } else if (cls2 == 0) {
      out.b_squared = Scalar::rational(n1 * n1, 4 * n2 * n2, bk);
    } else {
      // lambda2' = -3 n1^2/(4 n2) - 2, b = n1/(4 n2)
      out.s2 = (lambda2 + two) * Scalar::integer(-4 * n2, bk) / (n1sq * 3);
      out.b_squared = Scalar::rational(n1 * n1, 16 * n2 * n2, bk);
    }
    return out;
  }
  if (cls2 != 1) {
    out.case_note = "no CYT normalization: first factor is null or negative "
                    "and the second is not positive";
    return out;
  }
  if (cls1 == 0) {
    // lambda1 stays -2 under any homothety; a = -n1/n2 and rescale factor 2
    // to lambda2' = 4 n2 - 2 with b = 1.
    out.solvable = true;
    out.case_note = "null first factor, positive second factor";
    out.a = Scalar::rational(-n1, n2, bk);
    out.s2 = (lambda2 + two) / Scalar::integer(4 * n2, bk);
    out.b_squared = one;
    return out;
  }
  // Negative first factor: lambda1' = -n1 - 2, lambda2' = 3 n1^2/(2 n2) - 2,
  // a = -5 n1/(4 n2), b = n1/(4 n2).
  out.solvable = true;
  out.case_note = "negative first factor, positive second factor";
  out.s1 = -(lambda1 + two) / Scalar::integer(n1, bk);
  const Scalar n1sq = Scalar::integer(n1, bk) * Scalar::integer(n1, bk);
  out.s2 = (lambda2 + two) * Scalar::integer(2 * n2, bk) / (n1sq * 3);
  out.a = Scalar::rational(-5 * n1, 4 * n2, bk);
  out.b_squared = Scalar::rational(n1 * n1, 16 * n2 * n2, bk);
  return out;
}

}  // namespace sasprod
