#include "sasprod/sasaki.hpp"

namespace sasprod {

Scalar SasakiStructure::eta_of(const std::vector<Scalar>& x) const {
  Scalar acc = Scalar::zero(backend());
  for (int i = 0; i < dim(); ++i) {
    const Scalar c = eta.coefficient({i});
    if (!c.is_zero() && !x[i].is_zero()) acc += c * x[i];
  }
  return acc;
}

std::vector<Scalar> SasakiStructure::apply_phi(
    const std::vector<Scalar>& x) const {
  return apply_endo(phi, x);
}

std::vector<Scalar> SasakiStructure::project_d(
    const std::vector<Scalar>& x) const {
  return sub_vectors(x, scale_vector(eta_of(x), xi));
}

SasakiStructure make_sasaki(std::string name, MetricLieAlgebra m,
                            DenseTensor phi, std::vector<Scalar> xi,
                            ExteriorForm eta) {
  SasakiStructure s;
  s.name = std::move(name);
  s.m = std::move(m);
  s.phi = std::move(phi);
  s.xi = std::move(xi);
  s.eta = std::move(eta);
  const int d = s.m.dim();
  if (s.phi.order() != 2 || s.phi.dim() != d ||
      static_cast<int>(s.xi.size()) != d || s.eta.degree() != 1 ||
      s.eta.dim() != d)
    throw Error("sasaki structure shape mismatch");
  if (d % 2 == 0) throw Error("almost contact structures need odd dimension");
  s.n = (d - 1) / 2;
  s.fundamental = ExteriorForm(d, 2, s.backend());
  for (int i = 0; i < d; ++i) {
    const auto bi = basis_vector(d, i, s.backend());
    for (int j = i + 1; j < d; ++j) {
      const Scalar v = s.m.inner(bi, s.apply_phi(basis_vector(d, j, s.backend())));
      if (!v.is_zero()) s.fundamental.set({i, j}, v);
    }
  }
  return s;
}

namespace {

std::vector<Scalar> nijenhuis_phi(const SasakiStructure& s, int i, int j) {
  // [phi,phi](X,Y) = [phiX,phiY] + phi^2[X,Y] - phi[phiX,Y] - phi[X,phiY]
  const auto& l = s.m.algebra();
  const int d = s.dim();
  const Backend bk = s.backend();
  const auto bi = basis_vector(d, i, bk);
  const auto bj = basis_vector(d, j, bk);
  const auto pi = s.apply_phi(bi);
  const auto pj = s.apply_phi(bj);
  auto out = l.bracket(pi, pj);
  out = add_vectors(out, s.apply_phi(s.apply_phi(l.bracket_basis(i, j))));
  out = sub_vectors(out, s.apply_phi(l.bracket(pi, bj)));
  out = sub_vectors(out, s.apply_phi(l.bracket(bi, pj)));
  return out;
}

}  // namespace

SasakiVerdict verify_sasakian(const SasakiStructure& s) {
  SasakiVerdict v;
  const int d = s.dim();
  const Backend bk = s.backend();
  const auto& l = s.m.algebra();

  v.almost_contact = true;
  if (s.eta_of(s.xi) != Scalar::one(bk)) {
    v.almost_contact = false;
    v.failures.push_back("eta(xi) != 1");
  }
  if (!vector_is_zero(s.apply_phi(s.xi))) {
    v.almost_contact = false;
    v.failures.push_back("phi(xi) != 0");
  }
  for (int j = 0; j < d; ++j) {
    const auto bj = basis_vector(d, j, bk);
    // phi^2 = -Id + eta (x) xi
    auto lhs = s.apply_phi(s.apply_phi(bj));
    auto rhs = scale_vector(s.eta_of(bj), s.xi);
    rhs[j] -= Scalar::one(bk);
    if (!vector_is_zero(sub_vectors(lhs, rhs))) {
      v.almost_contact = false;
      v.failures.push_back("phi^2 != -Id + eta(x)xi at " + l.labels[j]);
      break;
    }
  }
  for (int j = 0; j < d; ++j) {
    // eta o phi = 0
    if (!s.eta_of(s.apply_phi(basis_vector(d, j, bk))).is_zero()) {
      v.almost_contact = false;
      v.failures.push_back("eta o phi != 0 at " + l.labels[j]);
      break;
    }
  }

  v.metric_compatible = true;
  for (int i = 0; i < d && v.metric_compatible; ++i) {
    const auto bi = basis_vector(d, i, bk);
    // eta must be the g-dual of xi
    if (s.m.inner(s.xi, bi) != s.eta_of(bi)) {
      v.metric_compatible = false;
      v.failures.push_back("eta is not the g-dual of xi");
      break;
    }
    for (int j = i; j < d; ++j) {
      const auto bj = basis_vector(d, j, bk);
      const Scalar lhs = s.m.inner(s.apply_phi(bi), s.apply_phi(bj));
      const Scalar rhs = s.m.inner(bi, bj) - s.eta_of(bi) * s.eta_of(bj);
      if (lhs != rhs) {
        v.metric_compatible = false;
        v.failures.push_back("g(phi X, phi Y) != g(X,Y) - eta(X)eta(Y) at (" +
                             l.labels[i] + "," + l.labels[j] + ")");
        break;
      }
    }
  }

  const ExteriorForm deta = ce_differential(s.eta, l);
  v.normal = true;
  for (int i = 0; i < d && v.normal; ++i)
    for (int j = i + 1; j < d; ++j) {
      // N_phi = [phi,phi] + d eta (x) xi
      auto nf = nijenhuis_phi(s, i, j);
      nf = add_vectors(nf, scale_vector(deta.coefficient({i, j}), s.xi));
      if (!vector_is_zero(nf)) {
        v.normal = false;
        v.failures.push_back("N_phi != 0 at (" + l.labels[i] + "," +
                             l.labels[j] + ")");
        break;
      }
    }

  v.contact_condition = deta == s.fundamental.scaled(Scalar::integer(2, bk));
  if (!v.contact_condition) v.failures.push_back("d eta != 2 Phi");
  return v;
}

std::vector<Scalar> transverse_connection(const SasakiStructure& s,
                                          const std::vector<Scalar>& x,
                                          const std::vector<Scalar>& u) {
  if (!s.eta_of(u).is_zero())
    throw Error("transverse connection requires a section of D");
  const auto& l = s.m.algebra();
  const DenseTensor gamma = koszul_connection(s.m);
  const Scalar ex = s.eta_of(x);
  const auto xd = s.project_d(x);
  auto out = scale_vector(ex, l.bracket(s.xi, u));
  out = add_vectors(out, s.project_d(nabla(gamma, xd, u)));
  return out;
}

DenseTensor characteristic_connection(const SasakiStructure& s) {
  const auto verdict = verify_sasakian(s);
  if (!verdict.sasakian())
    throw Error("characteristic connection requires a Sasakian structure");
  const int d = s.dim();
  const Backend bk = s.backend();
  const DenseTensor gamma = koszul_connection(s.m);
  DenseTensor gc = gamma;
  for (int i = 0; i < d; ++i) {
    const auto bi = basis_vector(d, i, bk);
    for (int j = 0; j < d; ++j) {
      const auto bj = basis_vector(d, j, bk);
      // T^C(X,Y) = 2(-eta(X) phi Y + eta(Y) phi X + Phi(X,Y) xi)
      auto tc = scale_vector(-s.eta_of(bi), s.apply_phi(bj));
      tc = add_vectors(tc, scale_vector(s.eta_of(bj), s.apply_phi(bi)));
      tc = add_vectors(
          tc, scale_vector(s.fundamental.coefficient({i, j}), s.xi));
      for (int k = 0; k < d; ++k) gc.add({k, i, j}, tc[k]);  // gamma + T^C/2
    }
  }
  // nabla^C xi = nabla^C eta = nabla^C phi = 0, all exact.
  for (int i = 0; i < d; ++i) {
    if (!vector_is_zero(nabla_basis(gc, i, s.xi)))
      throw Error("characteristic connection: nabla^C xi != 0");
    for (int j = 0; j < d; ++j) {
      const auto bj = basis_vector(d, j, bk);
      if (!s.eta_of(nabla_basis(gc, i, bj)).is_zero())
        throw Error("characteristic connection: nabla^C eta != 0");
      const auto dphi = sub_vectors(nabla_basis(gc, i, s.apply_phi(bj)),
                                    s.apply_phi(nabla_basis(gc, i, bj)));
      if (!vector_is_zero(dphi))
        throw Error("characteristic connection: nabla^C phi != 0");
    }
  }
  return gc;
}

std::optional<EtaEinsteinConstants> eta_einstein_constants(
    const SasakiStructure& s) {
  const int d = s.dim();
  const Backend bk = s.backend();
  const DenseTensor gamma = koszul_connection(s.m);
  const DenseTensor riem = curvature_tensor(s.m.algebra(), gamma);
  const DenseTensor ric = ricci_tensor(s.m, riem);

  Scalar lambda = Scalar::zero(bk);
  if (s.n > 0) {
    // Read lambda off any D-direction with nonzero norm.
    bool found = false;
    for (int i = 0; i < d && !found; ++i) {
      const auto u = s.project_d(basis_vector(d, i, bk));
      const Scalar uu = s.m.inner(u, u);
      if (uu.is_zero()) continue;
      Scalar ric_uu = Scalar::zero(bk);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          if (u[p].is_zero() || u[q].is_zero()) continue;
          ric_uu += u[p] * u[q] * ric.at({p, q});
        }
      lambda = ric_uu / uu;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  const Scalar nu = Scalar::integer(2 * s.n, bk) - lambda;

  for (int i = 0; i < d; ++i) {
    const auto bi = basis_vector(d, i, bk);
    for (int j = i; j < d; ++j) {
      const auto bj = basis_vector(d, j, bk);
      const Scalar expect = lambda * s.m.inner(bi, bj) +
                            nu * s.eta_of(bi) * s.eta_of(bj);
      if (ric.at({i, j}) != expect) return std::nullopt;
    }
  }

  EtaEinsteinConstants out{lambda, nu, EtaEinsteinClass::Null};
  const Scalar minus2 = Scalar::integer(-2, bk);
  if (lambda > minus2)
    out.cls = EtaEinsteinClass::Positive;
  else if (lambda < minus2)
    out.cls = EtaEinsteinClass::Negative;
  return out;
}

SasakiStructure d_homothety(const SasakiStructure& s, const Scalar& factor) {
  if (!factor.is_positive()) throw Error("d_homothety requires s > 0");
  const int d = s.dim();
  const Backend bk = s.backend();
  DenseTensor g2(d, {Slot::Co, Slot::Co}, bk);
  const Scalar ss1 = factor * (factor - Scalar::one(bk));
  for (int i = 0; i < d; ++i) {
    const auto bi = basis_vector(d, i, bk);
    for (int j = 0; j < d; ++j) {
      const auto bj = basis_vector(d, j, bk);
      g2.set({i, j}, factor * s.m.inner(bi, bj) +
                         ss1 * s.eta_of(bi) * s.eta_of(bj));
    }
  }
  MetricLieAlgebra m2(s.m.algebra(), std::move(g2));
  auto out = make_sasaki(s.name + "@s=" + factor.str(), std::move(m2), s.phi,
                         scale_vector(factor.inverse(), s.xi),
                         s.eta.scaled(factor));
  const auto verdict = verify_sasakian(out);
  if (!verdict.sasakian())
    throw Error("d_homothety output failed Sasakian validation");
  return out;
}

SasakiStructure heisenberg(int n, Backend backend) {
  if (n < 1) throw Error("heisenberg(n) requires n >= 1");
  const int d = 2 * n + 1;
  LieAlgebra l = LieAlgebra::create(d, backend);
  for (int i = 0; i < n; ++i)
    l.set_bracket(2 * i, 2 * i + 1, d - 1, Scalar::integer(2, backend));
  DenseTensor g(d, {Slot::Co, Slot::Co}, backend);
  for (int i = 0; i < d; ++i) g.set({i, i}, Scalar::one(backend));
  DenseTensor phi(d, {Slot::Contra, Slot::Co}, backend);
  for (int i = 0; i < n; ++i) {
    phi.set({2 * i + 1, 2 * i}, Scalar::one(backend));
    phi.set({2 * i, 2 * i + 1}, Scalar::integer(-1, backend));
  }
  ExteriorForm eta(d, 1, backend);
  eta.set({d - 1}, Scalar::one(backend));
  return make_sasaki("h" + std::to_string(d),
                     MetricLieAlgebra(std::move(l), std::move(g)),
                     std::move(phi), basis_vector(d, d - 1, backend),
                     std::move(eta));
}

SasakiStructure catalog(const std::string& name, Backend backend) {
  auto identity_metric = [&](int d) {
    DenseTensor g(d, {Slot::Co, Slot::Co}, backend);
    for (int i = 0; i < d; ++i) g.set({i, i}, Scalar::one(backend));
    return g;
  };
  auto phi12 = [&](int d) {
    // phi e1 = e2, phi e2 = -e1, phi e3 = 0
    DenseTensor phi(d, {Slot::Contra, Slot::Co}, backend);
    phi.set({1, 0}, Scalar::one(backend));
    phi.set({0, 1}, Scalar::integer(-1, backend));
    return phi;
  };
  auto eta_last = [&](int d) {
    ExteriorForm eta(d, 1, backend);
    eta.set({d - 1}, Scalar::one(backend));
    return eta;
  };

  if (name == "su2") {
    LieAlgebra l = LieAlgebra::create(3, backend);
    l.set_bracket(0, 1, 2, Scalar::integer(2, backend));
    l.set_bracket(1, 2, 0, Scalar::integer(2, backend));
    l.set_bracket(2, 0, 1, Scalar::integer(2, backend));
    return make_sasaki("su2", MetricLieAlgebra(std::move(l), identity_metric(3)),
                       phi12(3), basis_vector(3, 2, backend), eta_last(3));
  }
  if (name == "sl2r") {
    LieAlgebra l = LieAlgebra::create(3, backend);
    l.set_bracket(0, 1, 2, Scalar::integer(2, backend));
    l.set_bracket(1, 2, 0, Scalar::integer(-1, backend));
    l.set_bracket(2, 0, 1, Scalar::integer(-1, backend));
    return make_sasaki("sl2r", MetricLieAlgebra(std::move(l), identity_metric(3)),
                       phi12(3), basis_vector(3, 2, backend), eta_last(3));
  }
  if (name == "abelian1") {
    LieAlgebra l = LieAlgebra::create(1, backend);
    DenseTensor phi(1, {Slot::Contra, Slot::Co}, backend);
    return make_sasaki("abelian1", MetricLieAlgebra(std::move(l), identity_metric(1)),
                       std::move(phi), basis_vector(1, 0, backend),
                       eta_last(1));
  }
  if (name == "h3") {
    auto s = heisenberg(1, backend);
    s.name = "h3";
    return s;
  }
  if (name.size() > 1 && name[0] == 'h') {
    // h5, h7, ... resolve to heisenberg((d-1)/2)
    try {
      const int d = std::stoi(name.substr(1));
      if (d >= 3 && d % 2 == 1) return heisenberg((d - 1) / 2, backend);
    } catch (const std::exception&) {
    }
  }
  if (name.rfind("heisenberg(", 0) == 0 && name.back() == ')') {
    const int n = std::stoi(name.substr(11, name.size() - 12));
    return heisenberg(n, backend);
  }
  throw Error("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"su2", "h3", "sl2r", "abelian1", "h5", "h7", "heisenberg(n)"};
}

const char* eta_einstein_class_name(EtaEinsteinClass cls) {
  switch (cls) {
    case EtaEinsteinClass::Positive: return "positive";
    case EtaEinsteinClass::Null: return "null";
    case EtaEinsteinClass::Negative: return "negative";
  }
  return "?";
}

}  // namespace sasprod
