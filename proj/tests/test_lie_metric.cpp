#include "helpers.hpp"

using namespace tst;

namespace {

const std::vector<std::string> kCatalog3 = {"su2", "h3", "sl2r"};

ExteriorForm random_form_on(const LieAlgebra& l, int degree,
                            RandomRational& gen) {
  ExteriorForm f(l.dim, degree, l.backend);
  std::vector<int> key(degree);
  for (int i = 0; i < degree; ++i) key[i] = i;
  while (true) {
    f.set(key, gen.next());
    int pos = degree - 1;
    while (pos >= 0 && key[pos] == l.dim - degree + pos) --pos;
    if (pos < 0) break;
    ++key[pos];
    for (int q = pos + 1; q < degree; ++q) key[q] = key[q - 1] + 1;
  }
  return f;
}

}  // namespace

TEST_SUITE("lie_metric") {

TEST_CASE("check_jacobi accepts the catalog and abelian algebras") {
  for (const auto& name : kCatalog3)
    CHECK(check_jacobi(catalog(name, Backend::Exact).m.algebra()).ok);
  CHECK(check_jacobi(LieAlgebra::create(4, Backend::Exact)).ok);
}

TEST_CASE("check_jacobi reports the first violating triple") {
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1+e2: the cyclic sum at (e1,e2,e3)
  // comes out to e3 - e2 != 0.
  LieAlgebra l = LieAlgebra::create(3, Backend::Exact);
  l.set_bracket(0, 1, 2, rq(1));
  l.set_bracket(1, 2, 0, rq(1));
  l.set_bracket(2, 0, 0, rq(1));
  l.set_bracket(2, 0, 1, rq(1));
  const JacobiReport rep = check_jacobi(l);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.i == 0);
  CHECK(rep.j == 1);
  CHECK(rep.k == 2);
}

TEST_CASE("Chevalley-Eilenberg differential on h3: d e^3 = -2 e^1 ^ e^2") {
  const auto s = catalog("h3", Backend::Exact);
  ExteriorForm e3(3, 1, Backend::Exact);
  e3.set({2}, rq(1));
  const ExteriorForm d = ce_differential(e3, s.m.algebra());
  ExteriorForm expect(3, 2, Backend::Exact);
  expect.set({0, 1}, rq(-2));
  CHECK(d == expect);
}

TEST_CASE("d of 0-forms vanishes and d^2 = 0") {
  RandomRational gen(19);
  for (const auto& name : kCatalog3) {
    const auto s = catalog(name, Backend::Exact);
    ExteriorForm c(3, 0, Backend::Exact);
    c.set({}, rq(5, 3));
    CHECK(ce_differential(c, s.m.algebra()).is_zero());
    const ExteriorForm deta = ce_differential(s.eta, s.m.algebra());
    CHECK(ce_differential(deta, s.m.algebra()).is_zero());  // d(d eta) = 0
    for (int deg = 1; deg <= 2; ++deg) {
      const ExteriorForm f = random_form_on(s.m.algebra(), deg, gen);
      CHECK(ce_differential(ce_differential(f, s.m.algebra()), s.m.algebra())
                .is_zero());
    }
  }
}

TEST_CASE("Koszul connection on su(2): nabla_{e1} e2 = e3") {
  const auto s = catalog("su2", Backend::Exact);
  const DenseTensor gamma = koszul_connection(s.m);
  const auto v = nabla_basis(gamma, 0, basis_vector(3, 1, Backend::Exact));
  CHECK(v[0].is_zero());
  CHECK(v[1].is_zero());
  CHECK(v[2] == rq(1));
}

TEST_CASE("Koszul connection on h3: nabla_{e1} e3 = -e2") {
  const auto s = catalog("h3", Backend::Exact);
  const DenseTensor gamma = koszul_connection(s.m);
  const auto v = nabla_basis(gamma, 0, basis_vector(3, 2, Backend::Exact));
  CHECK(v[0].is_zero());
  CHECK(v[1] == rq(-1));
  CHECK(v[2].is_zero());
}

TEST_CASE("abelian algebras are flat") {
  LieAlgebra l = LieAlgebra::create(3, Backend::Exact);
  DenseTensor g(3, {Slot::Co, Slot::Co}, Backend::Exact);
  for (int i = 0; i < 3; ++i) g.set({i, i}, rq(1));
  const MetricLieAlgebra m(std::move(l), std::move(g));
  const DenseTensor gamma = koszul_connection(m);
  CHECK(gamma.is_zero());
  CHECK(curvature_tensor(m.algebra(), gamma).is_zero());
}

TEST_CASE("Levi-Civita properties: metric and torsion-free, exactly") {
  for (const auto& name : {"su2", "h3", "sl2r", "h5"}) {
    const auto s = catalog(name, Backend::Exact);
    const int n = s.dim();
    const DenseTensor gamma = koszul_connection(s.m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto bj = basis_vector(n, j, Backend::Exact);
        const auto dj = nabla_basis(gamma, i, bj);
        for (int k = j; k < n; ++k) {
          const auto bk = basis_vector(n, k, Backend::Exact);
          const auto dk = nabla_basis(gamma, i, bk);
          // nabla g = 0 on left-invariant fields
          CHECK((s.m.inner(dj, bk) + s.m.inner(bj, dk)).is_zero());
        }
        // torsion: nabla_X Y - nabla_Y X = [X, Y]
        const auto bi = basis_vector(n, i, Backend::Exact);
        const auto tor = sub_vectors(
            sub_vectors(dj, nabla_basis(gamma, j, bi)),
            s.m.algebra().bracket_basis(i, j));
        CHECK(vector_is_zero(tor));
      }
  }
}

TEST_CASE("curvature examples and identities") {
  const auto su2 = catalog("su2", Backend::Exact);
  const DenseTensor r_su2 =
      curvature_tensor(su2.m.algebra(), koszul_connection(su2.m));
  // R(e1,e2)e2 = e1
  CHECK(r_su2.at({0, 0, 1, 1}) == rq(1));
  CHECK(r_su2.at({1, 0, 1, 1}).is_zero());
  CHECK(r_su2.at({2, 0, 1, 1}).is_zero());

  const auto h3 = catalog("h3", Backend::Exact);
  const DenseTensor r_h3 =
      curvature_tensor(h3.m.algebra(), koszul_connection(h3.m));
  // R(e1,e2)e3 = 0, consistent with R(U,V)xi = 0
  for (int l = 0; l < 3; ++l) CHECK(r_h3.at({l, 0, 1, 2}).is_zero());

  for (const auto& name : {"su2", "h3", "sl2r", "h5"}) {
    const auto s = catalog(name, Backend::Exact);
    const int n = s.dim();
    const DenseTensor r =
        curvature_tensor(s.m.algebra(), koszul_connection(s.m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            // antisymmetry in the first two arguments
            CHECK(r.at({l, i, j, k}) == -r.at({l, j, i, k}));
            // first Bianchi identity for the torsion-free connection
            CHECK((r.at({l, i, j, k}) + r.at({l, j, k, i}) +
                   r.at({l, k, i, j}))
                      .is_zero());
          }
  }
}

TEST_CASE("Ricci tensors of the catalog match the eta-Einstein constants") {
  auto diag = [](const DenseTensor& ric, std::vector<long> expect) {
    for (int i = 0; i < ric.dim(); ++i)
      for (int j = 0; j < ric.dim(); ++j)
        CHECK(ric.at({i, j}) == (i == j ? rq(expect[i]) : rq(0)));
  };
  auto ric_of = [](const std::string& name) {
    const auto s = catalog(name, Backend::Exact);
    return ricci_tensor(
        s.m, curvature_tensor(s.m.algebra(), koszul_connection(s.m)));
  };
  diag(ric_of("su2"), {2, 2, 2});
  diag(ric_of("h3"), {-2, -2, 2});
  diag(ric_of("sl2r"), {-4, -4, 2});
}

TEST_CASE("Ric is symmetric and Ric(xi, X) = 2n eta(X) on catalog") {
  for (const auto& name : {"su2", "h3", "sl2r", "h5", "h7"}) {
    const auto s = catalog(name, Backend::Exact);
    const int n = s.dim();
    const DenseTensor ric = ricci_tensor(
        s.m, curvature_tensor(s.m.algebra(), koszul_connection(s.m)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(ric.at({i, j}) == ric.at({j, i}));
    for (int j = 0; j < n; ++j) {
      Scalar ric_xi = rq(0);
      for (int i = 0; i < n; ++i)
        if (!s.xi[i].is_zero()) ric_xi += s.xi[i] * ric.at({i, j});
      const auto bj = basis_vector(n, j, Backend::Exact);
      CHECK(ric_xi == rq(2 * s.n) * s.eta_of(bj));
    }
  }
}

TEST_CASE("metric validation") {
  LieAlgebra l = LieAlgebra::create(2, Backend::Exact);
  DenseTensor bad(2, {Slot::Co, Slot::Co}, Backend::Exact);
  bad.set({0, 0}, rq(1));
  bad.set({1, 1}, rq(-1));
  CHECK_THROWS_AS(MetricLieAlgebra(l, bad), Error);  // not positive definite
  DenseTensor asym(2, {Slot::Co, Slot::Co}, Backend::Exact);
  asym.set({0, 0}, rq(1));
  asym.set({1, 1}, rq(1));
  asym.set({0, 1}, rq(1, 2));
  CHECK_THROWS_AS(MetricLieAlgebra(l, asym), Error);  // not symmetric
}

}  // TEST_SUITE
