#include "helpers.hpp"

using namespace tst;

namespace {

DenseTensor random_spd_metric(int n, RandomRational& gen) {
  // M^T M + n * Id is positive definite for any rational M.
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, rq(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = gen.next();
  DenseTensor g(n, {Slot::Co, Slot::Co}, Backend::Exact);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = i == j ? rq(n) : rq(0);
      for (int k = 0; k < n; ++k) acc += m[k][i] * m[k][j];
      g.set({i, j}, acc);
    }
  return g;
}

DenseTensor inverse_of(const DenseTensor& g) {
  const int n = g.dim();
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, rq(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g.at({i, j});
  const auto inv = invert_matrix(m, g.backend());
  DenseTensor out(n, {Slot::Contra, Slot::Contra}, g.backend());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set({i, j}, inv[i][j]);
  return out;
}

}  // namespace

TEST_SUITE("tensor_core") {

TEST_CASE("contracting g with g_inv gives the trace n") {
  RandomRational gen(7);
  for (int n : {2, 3, 5}) {
    const DenseTensor g = random_spd_metric(n, gen);
    const DenseTensor gi = inverse_of(g);
    const DenseTensor tr = contract_pair(g, gi, 0, 1);
    REQUIRE(tr.order() == 0);
    CHECK(tr.at({}) == rq(n));
  }
}

TEST_CASE("Ricci of su(2) via contract_pair is 2g") {
  const auto s = catalog("su2", Backend::Exact);
  const DenseTensor gamma = koszul_connection(s.m);
  const DenseTensor riem = curvature_tensor(s.m.algebra(), gamma);
  const DenseTensor ric = ricci_tensor(s.m, riem);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(ric.at({i, j}) == (i == j ? rq(2) : rq(0)));
}

TEST_CASE("contract_pair equals the Gram-Schmidt orthonormal frame sum") {
  // Float-backend oracle: orthonormalize the basis against a random SPD
  // metric and compare the frame sum with the inverse-metric contraction.
  RandomRational gen(23);
  const int n = 4;
  for (int trial = 0; trial < 20; ++trial) {
    const DenseTensor g_exact = random_spd_metric(n, gen);
    DenseTensor g(n, {Slot::Co, Slot::Co}, Backend::Float);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g.set({i, j}, Scalar::floating(g_exact.at({i, j}).to_double()));
    const DenseTensor gi = inverse_of(g);

    DenseTensor t(n, {Slot::Co, Slot::Co, Slot::Co}, Backend::Float);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          t.set({i, j, k}, Scalar::floating(gen.next().to_double()));

    // Gram-Schmidt w.r.t. g.
    std::vector<std::vector<double>> frame;
    auto inner = [&](const std::vector<double>& x,
                     const std::vector<double>& y) {
      double acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += x[i] * y[j] * g.at({i, j}).to_double();
      return acc;
    };
    for (int v = 0; v < n; ++v) {
      std::vector<double> u(n, 0.0);
      u[v] = 1.0;
      for (const auto& w : frame) {
        const double c = inner(u, w);
        for (int i = 0; i < n; ++i) u[i] -= c * w[i];
      }
      const double norm = std::sqrt(inner(u, u));
      for (int i = 0; i < n; ++i) u[i] /= norm;
      frame.push_back(std::move(u));
    }

    const DenseTensor viaginv = contract_pair(t, gi, 0, 1);
    for (int k = 0; k < n; ++k) {
      double frame_sum = 0;
      for (const auto& u : frame)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            frame_sum += u[i] * u[j] * t.at({i, j, k}).to_double();
      const double got = viaginv.at({k}).to_double();
      CHECK(std::abs(frame_sum - got) <= 1e-9 * (1.0 + std::abs(frame_sum)));
    }
  }
}

TEST_CASE("contract_pair is basis independent") {
  RandomRational gen(31);
  const int n = 3;
  for (int trial = 0; trial < 10; ++trial) {
    const DenseTensor g = random_spd_metric(n, gen);
    const DenseTensor gi = inverse_of(g);
    DenseTensor t(n, {Slot::Co, Slot::Co, Slot::Co}, Backend::Exact);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) t.set({i, j, k}, gen.next());

    // Random invertible change of basis B (new basis vectors in columns).
    std::vector<std::vector<Scalar>> b;
    while (true) {
      b.assign(n, std::vector<Scalar>(n, rq(0)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = gen.next();
      if (!determinant(b, Backend::Exact).is_zero()) break;
    }
    DenseTensor g2(n, {Slot::Co, Slot::Co}, Backend::Exact);
    DenseTensor t2(n, {Slot::Co, Slot::Co, Slot::Co}, Backend::Exact);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar acc = rq(0);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            acc += b[p][i] * b[q][j] * g.at({p, q});
        g2.set({i, j}, acc);
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Scalar acc = rq(0);
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              for (int r = 0; r < n; ++r)
                acc += b[p][i] * b[q][j] * b[r][k] * t.at({p, q, r});
          t2.set({i, j, k}, acc);
        }
    const DenseTensor c1 = contract_pair(t, gi, 0, 1);
    const DenseTensor c2 = contract_pair(t2, inverse_of(g2), 0, 1);
    // c2 must be the B-transform of c1.
    for (int k = 0; k < n; ++k) {
      Scalar acc = rq(0);
      for (int r = 0; r < n; ++r) acc += b[r][k] * c1.at({r});
      CHECK(c2.at({k}) == acc);
    }
  }
}

TEST_CASE("contract_pair rejects bad slots") {
  RandomRational gen(1);
  const DenseTensor g = random_spd_metric(3, gen);
  const DenseTensor gi = inverse_of(g);
  CHECK_THROWS_AS(contract_pair(g, gi, 0, 2), Error);
  CHECK_THROWS_AS(contract_pair(g, gi, 1, 1), Error);
}

}  // TEST_SUITE
