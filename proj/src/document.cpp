#include "sasprod/document.hpp"

#include <fstream>

namespace sasprod {

AlgebraDocument document_from_json(const json& j) {
  AlgebraDocument doc;
  doc.name = j.value("name", "unnamed");
  if (!j.contains("dim")) throw Error("algebra document: missing dim");
  doc.dim = j.at("dim").get<int>();
  if (doc.dim <= 0) throw Error("algebra document: dim must be positive");
  for (const auto& b : j.value("brackets", json::array())) {
    BracketEntry e;
    e.i = b.at("i").get<int>();
    e.j = b.at("j").get<int>();
    if (e.i < 1 || e.j < 1 || e.i > doc.dim || e.j > doc.dim)
      throw Error("algebra document: bracket index out of range");
    if (e.i >= e.j)
      throw Error("algebra document: bracket entries require i < j");
    for (const auto& [key, val] : b.at("coefficients").items()) {
      const int k = std::stoi(key);
      if (k < 1 || k > doc.dim)
        throw Error("algebra document: coefficient index out of range");
      e.coefficients[k] = val.get<std::string>();
    }
    doc.brackets.push_back(std::move(e));
  }
  if (j.contains("metric"))
    doc.metric = j.at("metric").get<std::vector<std::vector<std::string>>>();
  const auto& s = j.at("structure");
  doc.xi = s.at("xi").get<std::vector<std::string>>();
  doc.eta = s.at("eta").get<std::vector<std::string>>();
  doc.phi = s.at("phi").get<std::vector<std::vector<std::string>>>();
  return doc;
}

json document_to_json(const AlgebraDocument& doc) {
  json j;
  j["name"] = doc.name;
  j["dim"] = doc.dim;
  json brackets = json::array();
  for (const auto& b : doc.brackets) {
    json e;
    e["i"] = b.i;
    e["j"] = b.j;
    json coeff = json::object();
    for (const auto& [k, v] : b.coefficients) coeff[std::to_string(k)] = v;
    e["coefficients"] = std::move(coeff);
    brackets.push_back(std::move(e));
  }
  j["brackets"] = std::move(brackets);
  if (!doc.metric.empty()) j["metric"] = doc.metric;
  j["structure"] = {{"xi", doc.xi}, {"eta", doc.eta}, {"phi", doc.phi}};
  return j;
}

SasakiStructure document_to_sasaki(const AlgebraDocument& doc,
                                   Backend backend) {
  const int d = doc.dim;
  LieAlgebra l = LieAlgebra::create(d, backend);
  for (const auto& b : doc.brackets)
    for (const auto& [k, v] : b.coefficients)
      l.set_bracket(b.i - 1, b.j - 1, k - 1, Scalar::parse(v, backend));
  const JacobiReport jac = check_jacobi(l);
  if (!jac.ok)
    throw Error("algebra document: Jacobi identity fails at basis triple (" +
                std::to_string(jac.i + 1) + "," + std::to_string(jac.j + 1) +
                "," + std::to_string(jac.k + 1) + ")");

  DenseTensor g(d, {Slot::Co, Slot::Co}, backend);
  if (doc.metric.empty()) {
    for (int i = 0; i < d; ++i) g.set({i, i}, Scalar::one(backend));
  } else {
    if (static_cast<int>(doc.metric.size()) != d)
      throw Error("algebra document: metric must be dim x dim");
    for (int i = 0; i < d; ++i) {
      if (static_cast<int>(doc.metric[i].size()) != d)
        throw Error("algebra document: metric must be dim x dim");
      for (int j = 0; j < d; ++j)
        g.set({i, j}, Scalar::parse(doc.metric[i][j], backend));
    }
  }

  if (static_cast<int>(doc.xi.size()) != d ||
      static_cast<int>(doc.eta.size()) != d ||
      static_cast<int>(doc.phi.size()) != d)
    throw Error("algebra document: structure fields must have length dim");
  std::vector<Scalar> xi;
  for (const auto& v : doc.xi) xi.push_back(Scalar::parse(v, backend));
  ExteriorForm eta(d, 1, backend);
  for (int i = 0; i < d; ++i) {
    const Scalar v = Scalar::parse(doc.eta[i], backend);
    if (!v.is_zero()) eta.set({i}, v);
  }
  DenseTensor phi(d, {Slot::Contra, Slot::Co}, backend);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(doc.phi[i].size()) != d)
      throw Error("algebra document: phi must be dim x dim");
    for (int j = 0; j < d; ++j)
      phi.set({i, j}, Scalar::parse(doc.phi[i][j], backend));
  }
  return make_sasaki(doc.name, MetricLieAlgebra(std::move(l), std::move(g)),
                     std::move(phi), std::move(xi), std::move(eta));
}

AlgebraDocument document_from_sasaki(const SasakiStructure& s) {
  AlgebraDocument doc;
  doc.name = s.name;
  const int d = s.dim();
  doc.dim = d;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      BracketEntry e;
      e.i = i + 1;
      e.j = j + 1;
      const auto br = s.m.algebra().bracket_basis(i, j);
      for (int k = 0; k < d; ++k)
        if (!br[k].is_zero()) e.coefficients[k + 1] = br[k].str();
      if (!e.coefficients.empty()) doc.brackets.push_back(std::move(e));
    }
  doc.metric.assign(d, std::vector<std::string>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      doc.metric[i][j] = s.m.metric().at({i, j}).str();
  for (int i = 0; i < d; ++i) {
    doc.xi.push_back(s.xi[i].str());
    doc.eta.push_back(s.eta.coefficient({i}).str());
  }
  doc.phi.assign(d, std::vector<std::string>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) doc.phi[i][j] = s.phi.at({i, j}).str();
  return doc;
}

SasakiStructure resolve_factor(const std::string& arg, Backend backend) {
  std::string name = arg;
  std::string homothety;
  const auto at = arg.find(":s=");
  if (at != std::string::npos) {
    name = arg.substr(0, at);
    homothety = arg.substr(at + 3);
  }
  SasakiStructure s;
  try {
    s = catalog(name, backend);
  } catch (const Error&) {
    std::ifstream in(name);
    if (!in) throw Error("unknown catalog name and unreadable file: " + name);
    json j;
    in >> j;
    s = document_to_sasaki(document_from_json(j), backend);
  }
  if (!homothety.empty()) s = d_homothety(s, Scalar::parse(homothety, backend));
  return s;
}

}  // namespace sasprod
