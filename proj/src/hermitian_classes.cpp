#include "sasprod/hermitian_classes.hpp"

namespace sasprod {

ExteriorForm j_on_forms(const ProductHermitian& p, const ExteriorForm& alpha) {
  ExteriorForm pulled = alpha.pullback(p.J);
  if (alpha.degree() % 2 == 1) return -pulled;
  return pulled;
}

ExteriorForm d_c(const ProductHermitian& p, const ExteriorForm& alpha) {
  const ExteriorForm jdj =
      j_on_forms(p, ce_differential(j_on_forms(p, alpha), p.sum.algebra()));
  if (alpha.degree() % 2 == 1) return -jdj;
  return jdj;
}

ExteriorForm codifferential_omega(const ProductHermitian& p) {
  const int n = p.dim();
  const Backend bk = p.backend();
  const DenseTensor gamma = product_levi_civita(p);
  ExteriorForm delta(n, 1, bk);
  for (int x = 0; x < n; ++x) {
    const auto bx = basis_vector(n, x, bk);
    Scalar acc = Scalar::zero(bk);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& w = p.sum.inverse_metric().at({i, j});
        if (w.is_zero()) continue;
        // (nabla_{b_i} omega)(b_j, X) =
        //   -omega(nabla_{b_i} b_j, X) - omega(b_j, nabla_{b_i} X)
        const auto dbj = nabla_basis(gamma, i, basis_vector(n, j, bk));
        const auto dbx = nabla_basis(gamma, i, bx);
        Scalar term = Scalar::zero(bk);
        for (int m = 0; m < n; ++m) {
          if (!dbj[m].is_zero())
            term -= dbj[m] * p.omega.coefficient({m, x});
          if (!dbx[m].is_zero())
            term -= p.omega.coefficient({j, m}) * dbx[m];
        }
        acc -= w * term;
      }
    if (!acc.is_zero()) delta.set({x}, std::move(acc));
  }
  return delta;
}

namespace {

/// Raises a 3-form to the (1,2) torsion tensor T[k,i,j] = g^{kl} t3(i,j,l).
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

}  // namespace

LeeFormResult lee_form(const ProductHermitian& p) {
  if (p.n1 + p.n2 < 1)
    throw Error("lee_form: degenerate with n1 = n2 = 0");
  const int n = p.dim();
  const Backend bk = p.backend();
  const ExteriorForm delta = codifferential_omega(p);
  const Scalar inv_n1 = Scalar::integer(p.n1 + p.n2, bk).inverse();
  ExteriorForm theta(n, 1, bk);
  for (int x = 0; x < n; ++x) {
    const auto jx = apply_endo(p.J, basis_vector(n, x, bk));
    Scalar acc = Scalar::zero(bk);
    for (int m = 0; m < n; ++m) {
      if (jx[m].is_zero()) continue;
      acc += delta.coefficient({m}) * jx[m];
    }
    acc = acc * inv_n1;
    if (!acc.is_zero()) theta.set({x}, std::move(acc));
  }
  // Closed form: theta = 2b/(n1+n2) (n2 eta1 - n1 eta2).
  const Scalar f = Scalar::integer(2, bk) * p.params.b * inv_n1;
  const ExteriorForm closed =
      p.eta1.scaled(f * Scalar::integer(p.n2, bk)) -
      p.eta2.scaled(f * Scalar::integer(p.n1, bk));
  if (theta != closed)
    throw Error("lee_form: computed Lee form disagrees with the closed form");

  const DenseTensor gamma = product_levi_civita(p);
  const DenseTensor gamma_b =
      gamma + raise_three_form(p, d_c(p, p.omega)).scaled(
                  Scalar::rational(1, 2, bk));
  auto covariant = [&](const DenseTensor& conn) {
    DenseTensor out(n, {Slot::Co, Slot::Co}, bk);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto dbj = nabla_basis(conn, i, basis_vector(n, j, bk));
        Scalar acc = Scalar::zero(bk);
        for (int m = 0; m < n; ++m)
          if (!dbj[m].is_zero()) acc -= theta.coefficient({m}) * dbj[m];
        out.set({i, j}, std::move(acc));
      }
    return out;
  };
  return {theta, covariant(gamma), covariant(gamma_b)};
}

Scalar binomial(int m, int t, Backend backend) {
  if (m < 0 || t < 0 || t > m) return Scalar::zero(backend);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(t));
  if (backend == Backend::Float) return Scalar::floating(b.get_d());
  return Scalar::rational(mpq_class(b));
}

HermitianClassReport classify(const ProductHermitian& p) {
  const Backend bk = p.backend();
  const int n = p.complex_dim();
  HermitianClassReport rep;
  rep.certificate_c = Scalar::zero(bk);
  rep.lee = ExteriorForm(p.dim(), 1, bk);
  const auto& l = p.sum.algebra();

  const ExteriorForm domega = ce_differential(p.omega, l);
  rep.kahler = domega.is_zero() ? Flag::Yes : Flag::No;
  rep.balanced = codifferential_omega(p).is_zero() ? Flag::Yes : Flag::No;

  if (p.n1 + p.n2 >= 1) {
    const LeeFormResult lee = lee_form(p);
    rep.lee = lee.theta;
    const bool conformal = domega == wedge(lee.theta, p.omega);
    const bool closed = ce_differential(lee.theta, l).is_zero();
    rep.lck = (conformal && closed) ? Flag::Yes : Flag::No;
    rep.vaisman = (rep.lck == Flag::Yes && lee.nabla_theta.is_zero())
                      ? Flag::Yes
                      : Flag::No;
  }

  // Powers of omega, memoized per degree.
  std::vector<ExteriorForm> powers;
  powers.push_back(wedge_power(p.omega, 0));
  for (int k = 1; k <= n; ++k) powers.push_back(wedge(powers.back(), p.omega));

  rep.skt = ce_differential(d_c(p, p.omega), l).is_zero() ? Flag::Yes
                                                          : Flag::No;
  if (n >= 3)
    rep.astheno_kahler =
        ce_differential(d_c(p, powers[n - 2]), l).is_zero() ? Flag::Yes
                                                            : Flag::No;
  for (int k = 1; k <= n - 1; ++k) {
    const ExteriorForm ddc = ce_differential(d_c(p, powers[k]), l);
    rep.k_gauduchon[k] =
        wedge(ddc, powers[n - k - 1]).is_zero() ? Flag::Yes : Flag::No;
  }
  if (n >= 2) rep.gauduchon = rep.k_gauduchon[n - 1];

  const Scalar& a = p.params.a;
  const Scalar ab2 = a * a + p.params.b * p.params.b;
  rep.certificate_c = binomial(n - 3, p.n1 - 2, bk) +
                      Scalar::integer(2, bk) * a * binomial(n - 3, p.n1 - 1, bk) +
                      ab2 * binomial(n - 3, p.n1, bk);
  return rep;
}

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::Yes: return "yes";
    case Flag::No: return "no";
    case Flag::NotApplicable: return "n/a";
  }
  return "?";
}

}  // namespace sasprod
