// Acceptance suite: one criterion per line, exact arithmetic throughout.
// Exit code = number of failed criteria.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "sasprod/report.hpp"

namespace {

using namespace sasprod;

Scalar rq(long n, long d = 1) { return Scalar::rational(n, d); }

struct RandomRational {
  std::mt19937_64 rng;
  explicit RandomRational(unsigned seed) : rng(seed) {}
  Scalar next(bool nonzero = false) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 4);
    long n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Scalar::rational(n, den(rng));
  }
};

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

const std::vector<std::pair<std::string, std::string>> kHarmonicGrid = {
    {"su2", "su2"}, {"su2", "h3"},  {"h3", "su2"},  {"h3", "h3"},
    {"sl2r", "su2"}, {"sl2r", "h3"}, {"h5", "su2"},  {"h5", "h3"},
};

ProductHermitian product_of(const std::string& f1, const std::string& f2,
                            const Scalar& a, const Scalar& b) {
  return build_product(catalog(f1, Backend::Exact),
                       catalog(f2, Backend::Exact), a, b);
}

std::vector<Scalar> d_basis(const SasakiStructure& s, int i) {
  return s.project_d(basis_vector(s.dim(), i, s.backend()));
}

// 1. Three-dimensional catalog regression: su(2)/h3/sl(2,R) are Sasakian
//    with lambda = 2 / -2 / -4.
void criterion_table1(Check& c) {
  const std::vector<std::pair<std::string, long>> expected = {
      {"su2", 2}, {"h3", -2}, {"sl2r", -4}};
  for (const auto& [name, lam] : expected) {
    const auto s = catalog(name, Backend::Exact);
    c.expect(verify_sasakian(s).sasakian(), name + " not Sasakian");
    const auto ee = eta_einstein_constants(s);
    c.expect(ee.has_value() && ee->lambda == rq(lam),
             name + " lambda != " + std::to_string(lam));
  }
}

// 2. Heisenberg family h_{2n+1}, n = 1,2,3: lambda = -2 exactly.
void criterion_heisenberg(Check& c) {
  for (int n = 1; n <= 3; ++n) {
    const auto s = heisenberg(n, Backend::Exact);
    c.expect(verify_sasakian(s).sasakian(),
             "h" + std::to_string(2 * n + 1) + " not Sasakian");
    const auto ee = eta_einstein_constants(s);
    c.expect(ee.has_value() && ee->lambda == rq(-2),
             "h" + std::to_string(2 * n + 1) + " lambda != -2");
  }
}

// 3. Harmonicity and the Wood identity on the product grid, 5 random (a,b)
//    per product.
void criterion_harmonicity(Check& c) {
  RandomRational gen(1003);
  for (const auto& [f1, f2] : kHarmonicGrid)
    for (int t = 0; t < 5; ++t) {
      const Scalar a = gen.next(), b = gen.next(true);
      const auto p = product_of(f1, f2, a, b);
      const std::string tag =
          f1 + "x" + f2 + " (a=" + a.str() + ", b=" + b.str() + ")";
      c.expect(harmonicity_defect(p).harmonic, "[J, nabla*nabla J] != 0 on " + tag);
      c.expect(wood_identity_residual(p).is_zero(),
               "Wood residual != 0 on " + tag);
    }
}

// 4. delta J = 2 n1 xi1 + 2 n2 xi2 and nabla_{delta J} J = 0 on the grid.
void criterion_codifferential(Check& c) {
  RandomRational gen(1004);
  for (const auto& [f1, f2] : kHarmonicGrid) {
    const Scalar a = gen.next(), b = gen.next(true);
    const auto p = product_of(f1, f2, a, b);
    // codifferential_J itself validates the closed form; recheck here.
    const auto dj = codifferential_J(p);
    auto expect = scale_vector(rq(2 * p.n1), p.xi1);
    expect = add_vectors(expect, scale_vector(rq(2 * p.n2), p.xi2));
    c.expect(vector_is_zero(sub_vectors(dj, expect)),
             "delta J mismatch on " + f1 + "x" + f2);
    const DenseTensor nj = nabla_J(p);
    const int n = p.dim();
    bool flat = true;
    for (int k = 0; k < n && flat; ++k)
      for (int j = 0; j < n && flat; ++j) {
        Scalar acc = rq(0);
        for (int i = 0; i < n; ++i)
          if (!dj[i].is_zero()) acc += dj[i] * nj.at({k, i, j});
        if (!acc.is_zero()) flat = false;
      }
    c.expect(flat, "nabla_{delta J} J != 0 on " + f1 + "x" + f2);
  }
}

// 5. Head-on classification flags match the algebraic classification
//    criteria on a 20-point random (a,b) grid per product.
void criterion_classification(Check& c) {
  RandomRational gen(1005);
  auto grid = kHarmonicGrid;
  grid.push_back({"abelian1", "su2"});
  grid.push_back({"abelian1", "h5"});
  for (const auto& [f1, f2] : grid)
    for (int t = 0; t < 20; ++t) {
      const Scalar a = gen.next(), b = gen.next(true);
      const auto p = product_of(f1, f2, a, b);
      const auto rep = classify(p);
      const std::string tag =
          f1 + "x" + f2 + " (a=" + a.str() + ", b=" + b.str() + ")";
      const int n = p.complex_dim();
      // balanced: never
      c.expect(rep.balanced == Flag::No, "balanced on " + tag);
      // LCK iff one factor is a line
      const bool lck_expected = p.n1 == 0 || p.n2 == 0;
      c.expect((rep.lck == Flag::Yes) == lck_expected, "lck on " + tag);
      if (lck_expected)
        c.expect(rep.vaisman == Flag::Yes, "vaisman on " + tag);
      // SKT iff dim 4, or 3x3 with a = 0
      const bool skt_expected =
          (p.dim() == 4) ||
          (p.dim1 == 3 && p.dim2 == 3 && a.is_zero());
      c.expect((rep.skt == Flag::Yes) == skt_expected, "skt on " + tag);
      // astheno iff Matsuo's equation (complex dim >= 3)
      const Scalar ab2 = a * a + b * b;
      const Scalar matsuo = rq(static_cast<long>(p.n1) * (p.n1 - 1)) +
                            rq(2) * a * rq(static_cast<long>(p.n1) * p.n2) +
                            rq(static_cast<long>(p.n2) * (p.n2 - 1)) * ab2;
      if (n >= 3)
        c.expect((rep.astheno_kahler == Flag::Yes) == matsuo.is_zero(),
                 "astheno on " + tag);
      // k-Gauduchon iff (n-1-k) * Matsuo = 0, for all 2 <= k <= n-1
      for (int k = 2; k <= n - 1; ++k) {
        const bool expect = (k == n - 1) || matsuo.is_zero();
        c.expect((rep.k_gauduchon.at(k) == Flag::Yes) == expect,
                 "k_gauduchon[" + std::to_string(k) + "] on " + tag);
      }
      if (n >= 2)
        c.expect(rep.gauduchon == Flag::Yes, "gauduchon on " + tag);
    }
}

// 6. The k-Gauduchon certificate identity on h5 x su2 for k = 2, 3.
void criterion_certificate(Check& c) {
  RandomRational gen(1006);
  for (int t = 0; t < 3; ++t) {
    const Scalar a = gen.next(), b = gen.next(true);
    const auto p = product_of("h5", "su2", a, b);
    const int n = p.complex_dim();
    const ExteriorForm vol =
        wedge(wedge(wedge(wedge_power(p.phi_form1, p.n1),
                          wedge_power(p.phi_form2, p.n2)),
                    p.eta1),
              p.eta2);
    const Scalar cert = classify(p).certificate_c;
    for (int k = 2; k <= 3; ++k) {
      const ExteriorForm lhs =
          wedge(ce_differential(d_c(p, wedge_power(p.omega, k)),
                                p.sum.algebra()),
                wedge_power(p.omega, n - k - 1));
      const Scalar coeff = rq(4) * b * rq(k) * rq(k - n + 1) * cert;
      c.expect(lhs == vol.scaled(coeff),
               "certificate identity fails at k=" + std::to_string(k) +
                   " (a=" + a.str() + ", b=" + b.str() + ")");
    }
  }
}

// 7. Bismut two-route agreement on the catalog grid, 10 random (a,b) each.
//    ricci_bismut / rho_bismut throw if the direct route ever disagrees
//    with the closed-form blocks.
void criterion_two_route(Check& c) {
  RandomRational gen(1007);
  auto grid = kHarmonicGrid;
  grid.push_back({"abelian1", "su2"});
  for (const auto& [f1, f2] : grid)
    for (int t = 0; t < 10; ++t) {
      const Scalar a = gen.next(), b = gen.next(true);
      try {
        const auto analysis = analyze_bismut(product_of(f1, f2, a, b));
        (void)analysis;
      } catch (const Error& e) {
        c.expect(false, f1 + "x" + f2 + " (a=" + a.str() + ", b=" + b.str() +
                            "): " + e.what());
      }
    }
}

// 8. CYT examples: rho^B = 0 at the parameter list of the examples section.
void criterion_cyt_examples(Check& c) {
  auto cyt = [&](const SasakiStructure& s1, const SasakiStructure& s2,
                 const Scalar& a, const Scalar& b, const std::string& tag) {
    c.expect(rho_bismut(build_product(s1, s2, a, b)).is_zero(),
             "rho^B != 0 on " + tag);
  };
  const auto su2 = catalog("su2", Backend::Exact);
  const auto h3 = catalog("h3", Backend::Exact);
  const auto sl2r = catalog("sl2r", Backend::Exact);
  const auto h5 = catalog("h5", Backend::Exact);
  cyt(h3, su2, rq(-1), rq(1), "h3 x su2 (-1, 1)");
  cyt(sl2r, su2, rq(-3, 2), rq(1, 2), "sl2r x su2 (-3/2, 1/2)");
  cyt(d_homothety(su2, rq(2)), h3, rq(-1, 2), rq(1, 2),
      "su2@2 x h3 (-1/2, 1/2)");
  cyt(d_homothety(su2, rq(2)), d_homothety(sl2r, rq(8, 3)), rq(-1, 2),
      rq(1, 4), "su2@2 x sl2r@8/3 (-1/2, 1/4)");
  cyt(h5, su2, rq(-2), rq(1), "h5 x su2 (-2, 1)");
}

// 9. Bismut flat at (0,1) on su2 x su2; Ric^B = 0 but rho^B != 0 at
//    (3/5, 4/5).
void criterion_bismut_flat(Check& c) {
  const auto p01 = product_of("su2", "su2", rq(0), rq(1));
  c.expect(bismut_connection(p01).is_zero(), "Gamma^B != 0 at (0,1)");
  c.expect(bismut_curvature(p01).is_zero(), "R^B != 0 at (0,1)");
  const auto p35 = product_of("su2", "su2", rq(3, 5), rq(4, 5));
  c.expect(ricci_bismut(p35).is_zero(), "Ric^B != 0 at (3/5,4/5)");
  c.expect(!rho_bismut(p35).is_zero(), "rho^B = 0 at (3/5,4/5)");
}

// 10. Parallel torsion and delta T^B = 0 on the grid; Kahler-like iff SKT
//     on a 10-point grid.
void criterion_torsion(Check& c) {
  RandomRational gen(1010);
  for (const auto& [f1, f2] : kHarmonicGrid) {
    const Scalar a = gen.next(), b = gen.next(true);
    const auto p = product_of(f1, f2, a, b);
    c.expect(parallel_torsion_check(p),
             "nabla^B T^B != 0 on " + f1 + "x" + f2);
    c.expect(delta_torsion(p).is_zero(), "delta T^B != 0 on " + f1 + "x" + f2);
  }
  // Kahler-like <=> SKT across a grid where SKT varies.
  const std::vector<std::pair<std::string, std::string>> kl_grid = {
      {"h3", "h3"}, {"abelian1", "su2"}, {"su2", "su2"}};
  int points = 0;
  for (const auto& [f1, f2] : kl_grid)
    for (int t = 0; t < 4 && points < 10; ++t, ++points) {
      const Scalar a = gen.next(), b = gen.next(true);
      const auto p = product_of(f1, f2, a, b);
      const bool skt = classify(p).skt == Flag::Yes;
      c.expect(kahler_like_check(p) == skt,
               "Kahler-like != SKT on " + f1 + "x" + f2 + " (a=" + a.str() +
                   ", b=" + b.str() + ")");
    }
}

// 11. Solver round-trips and the D-homothety normalization values.
void criterion_solvers(Check& c) {
  auto unique = [&](const CytSolveResult& r, const Scalar& a,
                    const Scalar& b2, const std::string& tag) {
    c.expect(r.kind == CytSolveKind::Unique && r.solution->a == a &&
                 r.solution->b_squared == b2,
             "cyt_solve mismatch for " + tag);
  };
  unique(cyt_solve(rq(-2), 1, rq(2), 1), rq(-1), rq(1), "h3 x su2");
  unique(cyt_solve(rq(-4), 1, rq(2), 1), rq(-3, 2), rq(1, 4), "sl2r x su2");
  unique(cyt_solve(rq(0), 1, rq(-2), 1), rq(-1, 2), rq(1, 4), "su2@2 x h3");
  unique(cyt_solve(rq(0), 1, rq(-11, 4), 1), rq(-1, 2), rq(1, 16),
         "su2@2 x sl2r@8/3");
  unique(cyt_solve(rq(-2), 2, rq(2), 1), rq(-2), rq(1), "h5 x su2");

  const auto se = se_product_params(1, 1, Backend::Exact);
  c.expect(se.a == rq(0) && se.b_squared == rq(1),
           "se_product_params(1,1) != (0,1)");

  // a negative first factor with a non-positive second has no solution
  for (long l2 : {-2L, -3L, -6L}) {
    const auto r = cyt_solve(rq(-4), 1, rq(l2), 1);
    c.expect(r.kind == CytSolveKind::NoSolution,
             "negative/non-positive pair unexpectedly solvable at lambda2 = " +
                 std::to_string(l2));
  }

  const auto ee =
      eta_einstein_constants(d_homothety(catalog("sl2r", Backend::Exact),
                                         rq(8, 3)));
  c.expect(ee.has_value() && ee->lambda == rq(-11, 4),
           "d_homothety(sl2r, 8/3) lambda != -11/4");
}

// 12. Property suites: Sasakian derivative identities, transverse
//     curvature comparison, curvature/phi commutation, nabla J closed form,
//     product curvature blocks, torsion frame table; exact-zero families
//     over all basis tuples of every catalog structure.
void criterion_property_suites(Check& c) {
  const std::vector<std::string> factors = {"su2", "h3", "sl2r", "h5",
                                            "abelian1"};
  // Sasakian derivative identities and [xi, X] in D.
  for (const auto& name : factors) {
    const auto s = catalog(name, Backend::Exact);
    const int n = s.dim();
    const DenseTensor gamma = koszul_connection(s.m);
    bool ok = s.m.inner(s.xi, s.xi) == rq(1);
    for (int i = 0; i < n && ok; ++i) {
      const auto bi = basis_vector(n, i, Backend::Exact);
      ok = ok && vector_is_zero(add_vectors(nabla_basis(gamma, i, s.xi),
                                            s.apply_phi(bi)));
      ok = ok && vector_is_zero(sub_vectors(
                     nabla(gamma, s.xi, bi),
                     sub_vectors(s.m.algebra().bracket(s.xi, bi),
                                 s.apply_phi(bi))));
      ok = ok && s.eta_of(s.m.algebra().bracket(s.xi, bi)).is_zero();
      for (int j = 0; j < n && ok; ++j) {
        const auto bj = basis_vector(n, j, Backend::Exact);
        const Scalar killing = s.m.inner(s.m.algebra().bracket(s.xi, bi), bj) +
                               s.m.inner(bi, s.m.algebra().bracket(s.xi, bj));
        ok = ok && killing.is_zero();
        const auto dphi = sub_vectors(nabla_basis(gamma, i, s.apply_phi(bj)),
                                      s.apply_phi(nabla_basis(gamma, i, bj)));
        auto expect = scale_vector(s.m.inner(bi, bj), s.xi);
        expect = sub_vectors(expect, scale_vector(s.eta_of(bj), bi));
        ok = ok && vector_is_zero(sub_vectors(dphi, expect));
      }
    }
    c.expect(ok, "Sasakian derivative identities fail on " + name);
  }
  // Transverse curvature comparison and the curvature/phi commutation.
  for (const auto& name : {"su2", "h3", "sl2r", "h5"}) {
    const auto s = catalog(name, Backend::Exact);
    const int n = s.dim();
    const DenseTensor gamma = koszul_connection(s.m);
    auto nt = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& u) {
      return transverse_connection(s, x, u);
    };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const auto u = d_basis(s, i);
      const auto pu = s.apply_phi(u);
      for (int j = 0; j < n && ok; ++j) {
        const auto v = d_basis(s, j);
        const auto uv = s.m.algebra().bracket(u, v);
        const Scalar phi_uv = s.m.inner(u, s.apply_phi(v));
        for (int k = 0; k < n && ok; ++k) {
          const auto w = d_basis(s, k);
          auto r = nabla(gamma, u, nabla(gamma, v, w));
          r = sub_vectors(r, nabla(gamma, v, nabla(gamma, u, w)));
          r = sub_vectors(r, nabla(gamma, uv, w));
          auto rt = nt(u, nt(v, w));
          rt = sub_vectors(rt, nt(v, nt(u, w)));
          rt = sub_vectors(rt, nt(uv, w));
          auto expect = add_vectors(
              rt, scale_vector(s.m.inner(v, s.apply_phi(w)), s.apply_phi(u)));
          expect = sub_vectors(
              expect, scale_vector(s.m.inner(u, s.apply_phi(w)),
                                   s.apply_phi(v)));
          expect = sub_vectors(expect,
                               scale_vector(rq(2) * phi_uv, s.apply_phi(w)));
          ok = ok && vector_is_zero(sub_vectors(r, expect));
        }
        auto rxi = nabla(gamma, u, nabla(gamma, v, s.xi));
        rxi = sub_vectors(rxi, nabla(gamma, v, nabla(gamma, u, s.xi)));
        rxi = sub_vectors(rxi, nabla(gamma, uv, s.xi));
        ok = ok && vector_is_zero(rxi);
      }
      // R(U, phi U) preserves D and commutes with phi there.
      auto curv = [&](const std::vector<Scalar>& w) {
        auto r = nabla(gamma, u, nabla(gamma, pu, w));
        r = sub_vectors(r, nabla(gamma, pu, nabla(gamma, u, w)));
        r = sub_vectors(r, nabla(gamma, s.m.algebra().bracket(u, pu), w));
        return r;
      };
      for (int k = 0; k < n && ok; ++k) {
        const auto w = d_basis(s, k);
        ok = ok && s.eta_of(curv(w)).is_zero();
        ok = ok && vector_is_zero(sub_vectors(curv(s.apply_phi(w)),
                                              s.apply_phi(curv(w))));
      }
    }
    c.expect(ok, "transverse curvature identities fail on " + std::string(name));
  }
  // nabla_J validates its closed form internally; bismut_torsion checks
  // the torsion frame table; the curvature blocks are checked below.
  RandomRational gen(1012);
  for (const auto& [f1, f2] : kHarmonicGrid) {
    const Scalar a = gen.next(), b = gen.next(true);
    const auto p = product_of(f1, f2, a, b);
    try {
      (void)nabla_J(p);          // throws if the closed form fails
      (void)bismut_torsion(p);   // throws if the torsion table fails
    } catch (const Error& e) {
      c.expect(false, f1 + "x" + f2 + ": " + e.what());
      continue;
    }
    // Product curvature block identities.
    const DenseTensor gamma = product_levi_civita(p);
    const DenseTensor riem = curvature_tensor(p.sum.algebra(), gamma);
    const int n = p.dim();
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      std::vector<Scalar> rxx(n, rq(0));
      for (int l = 0; l < n; ++l) {
        Scalar acc = rq(0);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (!p.xi1[x].is_zero() && !p.xi2[y].is_zero())
              acc += p.xi1[x] * p.xi2[y] * riem.at({l, x, y, k});
        rxx[l] = acc;
      }
      ok = ok && vector_is_zero(rxx);  // R(xi1, xi2) = 0
    }
    for (int i = 0; i < p.dim1 - 1 && ok; ++i)
      for (int j = 0; j < p.dim1 - 1 && ok; ++j) {
        // R(U1,V1) xi_i = 0 and the cross formula R(U1,V1)Z2.
        for (int k = p.dim1; k < n && ok; ++k) {
          const auto z = basis_vector(n, k, Backend::Exact);
          std::vector<Scalar> got(n, rq(0));
          for (int l = 0; l < n; ++l) got[l] = riem.at({l, i, j, k});
          const auto expect =
              scale_vector(rq(-2) * p.params.a *
                               p.phi_form1.coefficient({i, j}),
                           apply_endo(p.phi2, z));
          ok = ok && vector_is_zero(sub_vectors(got, expect));
        }
        std::vector<Scalar> rxi(n, rq(0));
        for (int l = 0; l < n; ++l) {
          Scalar acc = rq(0);
          for (int m = 0; m < n; ++m)
            if (!p.xi1[m].is_zero()) acc += p.xi1[m] * riem.at({l, i, j, m});
          rxi[l] = acc;
        }
        ok = ok && vector_is_zero(rxi);
      }
    c.expect(ok, "product curvature blocks fail on " + f1 + "x" + f2);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>>
      criteria = {
          {"three-dimensional catalog regression (su2/h3/sl2r, lambda = 2/-2/-4)",
           criterion_table1},
          {"Heisenberg family h_{2n+1}, n=1..3, lambda = -2",
           criterion_heisenberg},
          {"harmonicity and Wood identity on the product grid",
           criterion_harmonicity},
          {"delta J = 2n1 xi1 + 2n2 xi2 and nabla_{delta J} J = 0",
           criterion_codifferential},
          {"classification flags match the algebraic criteria",
           criterion_classification},
          {"k-Gauduchon certificate identity on h5 x su2 (k = 2,3)",
           criterion_certificate},
          {"Bismut Ric/rho two-route agreement (10 random (a,b) each)",
           criterion_two_route},
          {"CYT examples (rho^B = 0 at the listed parameters)",
           criterion_cyt_examples},
          {"Bismut flat su2 x su2 at (0,1); Ric^B = 0, rho^B != 0 at (3/5,4/5)",
           criterion_bismut_flat},
          {"parallel torsion, delta T^B = 0, Kahler-like iff SKT",
           criterion_torsion},
          {"solver round-trips and D-homothety normalizations",
           criterion_solvers},
          {"property suites (derivative identities, transverse curvature, closed forms, torsion table)",
           criterion_property_suites},
      };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (c.ok) {
      std::cout << "[PASS] " << (i + 1) << ". " << criteria[i].first << "\n";
    } else {
      std::cout << "[FAIL] " << (i + 1) << ". " << criteria[i].first << ": "
                << c.detail.str() << "\n";
      ++failures;
    }
  }
  if (failures == 0)
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures;
}
