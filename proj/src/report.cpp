#include "sasprod/report.hpp"

#include <functional>
#include <sstream>

namespace sasprod {

FullAnalysis run_full_analysis(const ProductHermitian& p) {
  FullAnalysis a;
  a.verdict1 = verify_sasakian(p.s1);
  a.verdict2 = verify_sasakian(p.s2);
  a.ee1 = eta_einstein_constants(p.s1);
  a.ee2 = eta_einstein_constants(p.s2);
  a.classes = classify(p);
  a.harmonicity = harmonicity_defect(p);
  a.wood_identity_zero = wood_identity_residual(p).is_zero();
  a.delta_j = codifferential_J(p);
  a.bismut = analyze_bismut(p);
  return a;
}

json scalar_to_json(const Scalar& s) { return s.str(); }

json vector_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json form_to_json(const ExteriorForm& f) {
  json terms = json::object();
  for (const auto& [key, v] : f.terms()) {
    std::string k;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) k += ",";
      k += std::to_string(key[i] + 1);
    }
    terms[k.empty() ? "1" : k] = v.str();
  }
  return json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

json tensor_to_json(const DenseTensor& t) {
  const int n = t.dim();
  std::function<json(int, std::vector<int>&)> rec =
      [&](int depth, std::vector<int>& idx) -> json {
    if (depth == t.order()) return t.at(idx).str();
    json arr = json::array();
    for (int i = 0; i < n; ++i) {
      idx.push_back(i);
      arr.push_back(rec(depth + 1, idx));
      idx.pop_back();
    }
    return arr;
  };
  std::vector<int> idx;
  return rec(0, idx);
}

namespace {

json verdict_to_json(const SasakiVerdict& v) {
  json j;
  j["almost_contact"] = v.almost_contact;
  j["metric_compatible"] = v.metric_compatible;
  j["normal"] = v.normal;
  j["contact_condition"] = v.contact_condition;
  j["sasakian"] = v.sasakian();
  if (!v.failures.empty()) j["failures"] = v.failures;
  return j;
}

json ee_to_json(const std::optional<EtaEinsteinConstants>& ee) {
  if (!ee) return nullptr;
  return json{{"lambda", ee->lambda.str()},
              {"nu", ee->nu.str()},
              {"class", eta_einstein_class_name(ee->cls)}};
}

json flag_to_json(Flag f) {
  if (f == Flag::NotApplicable) return "n/a";
  return f == Flag::Yes;
}

const char* static_verdict_name(StaticVerdict v) {
  switch (v) {
    case StaticVerdict::Static: return "static";
    case StaticVerdict::NotStatic: return "not_static";
    case StaticVerdict::NotApplicable: return "n/a";
  }
  return "?";
}

}  // namespace

json analysis_to_json(const ProductHermitian& p, const FullAnalysis& a,
                      bool include_tensors) {
  json j;
  j["tool"] = "sasprod";
  j["input"] = {
      {"factor1", document_to_json(document_from_sasaki(p.s1))},
      {"factor2", document_to_json(document_from_sasaki(p.s2))},
      {"a", p.params.a.str()},
      {"b", p.params.b.str()},
  };
  j["backend"] = p.backend() == Backend::Exact ? "exact" : "float";
  j["tolerance"] =
      p.backend() == Backend::Exact ? json(nullptr) : json(float_epsilon());
  j["product"] = {
      {"dim", p.dim()},
      {"complex_dim", p.complex_dim()},
      {"n1", p.n1},
      {"n2", p.n2},
      {"lambda_ab", p.params.lambda_ab.str()},
  };
  j["factors"] = json::array({
      json{{"name", p.s1.name},
           {"dim", p.s1.dim()},
           {"sasakian", verdict_to_json(a.verdict1)},
           {"eta_einstein", ee_to_json(a.ee1)}},
      json{{"name", p.s2.name},
           {"dim", p.s2.dim()},
           {"sasakian", verdict_to_json(a.verdict2)},
           {"eta_einstein", ee_to_json(a.ee2)}},
  });
  json kg = json::object();
  for (const auto& [k, f] : a.classes.k_gauduchon)
    kg[std::to_string(k)] = flag_to_json(f);
  j["hermitian_classes"] = {
      {"kahler", flag_to_json(a.classes.kahler)},
      {"balanced", flag_to_json(a.classes.balanced)},
      {"lck", flag_to_json(a.classes.lck)},
      {"vaisman", flag_to_json(a.classes.vaisman)},
      {"skt", flag_to_json(a.classes.skt)},
      {"astheno_kahler", flag_to_json(a.classes.astheno_kahler)},
      {"gauduchon", flag_to_json(a.classes.gauduchon)},
      {"k_gauduchon", std::move(kg)},
      {"lee_form", form_to_json(a.classes.lee)},
      {"certificate_C", a.classes.certificate_c.str()},
  };
  j["harmonicity"] = {
      {"harmonic", a.harmonicity.harmonic},
      {"wood_identity_zero", a.wood_identity_zero},
      {"delta_J", vector_to_json(a.delta_j)},
  };
  j["bismut"] = {
      {"ric_b_zero", a.bismut.ric_b_zero},
      {"cyt", a.bismut.cyt},
      {"parallel_torsion", a.bismut.parallel_torsion},
      {"delta_torsion_zero", a.bismut.delta_torsion_zero},
      {"kahler_like", a.bismut.kahler_like},
      {"static", static_verdict_name(a.bismut.static_result.verdict)},
  };
  if (a.bismut.static_result.alpha)
    j["bismut"]["static_alpha"] = a.bismut.static_result.alpha->str();
  if (include_tensors) {
    j["tensors"] = {
        {"J", tensor_to_json(p.J)},
        {"metric", tensor_to_json(p.sum.metric())},
        {"omega", form_to_json(p.omega)},
        {"levi_civita", tensor_to_json(product_levi_civita(p))},
        {"bismut_connection", tensor_to_json(a.bismut.gamma_b)},
        {"bismut_torsion", form_to_json(a.bismut.torsion3)},
        {"bismut_ricci", tensor_to_json(a.bismut.ricci)},
        {"bismut_rho", form_to_json(a.bismut.rho)},
        {"harmonicity_defect", tensor_to_json(a.harmonicity.defect)},
    };
  }
  return j;
}

std::string analysis_to_text(const ProductHermitian& p,
                             const FullAnalysis& a) {
  std::ostringstream os;
  os << p.s1.name << " x " << p.s2.name << "  (a = " << p.params.a.str()
     << ", b = " << p.params.b.str() << ", dim = " << p.dim() << ")\n";
  auto ee_line = [&](const std::optional<EtaEinsteinConstants>& ee) {
    if (!ee) return std::string("not eta-Einstein");
    return "eta-Einstein lambda = " + ee->lambda.str() + ", nu = " +
           ee->nu.str() + " (" + eta_einstein_class_name(ee->cls) + ")";
  };
  os << "  factor1: " << (a.verdict1.sasakian() ? "Sasakian" : "NOT Sasakian")
     << ", " << ee_line(a.ee1) << "\n";
  os << "  factor2: " << (a.verdict2.sasakian() ? "Sasakian" : "NOT Sasakian")
     << ", " << ee_line(a.ee2) << "\n";
  os << "  classes: kahler=" << flag_name(a.classes.kahler)
     << " balanced=" << flag_name(a.classes.balanced)
     << " lck=" << flag_name(a.classes.lck)
     << " vaisman=" << flag_name(a.classes.vaisman)
     << " skt=" << flag_name(a.classes.skt)
     << " astheno=" << flag_name(a.classes.astheno_kahler)
     << " gauduchon=" << flag_name(a.classes.gauduchon) << "\n";
  os << "  k_gauduchon:";
  for (const auto& [k, f] : a.classes.k_gauduchon)
    os << " " << k << ":" << flag_name(f);
  os << "\n";
  os << "  harmonic=" << (a.harmonicity.harmonic ? "yes" : "no")
     << " wood_identity_zero=" << (a.wood_identity_zero ? "yes" : "no") << "\n";
  os << "  bismut: ric_b_zero=" << (a.bismut.ric_b_zero ? "yes" : "no")
     << " cyt=" << (a.bismut.cyt ? "yes" : "no")
     << " parallel_torsion=" << (a.bismut.parallel_torsion ? "yes" : "no")
     << " delta_torsion_zero=" << (a.bismut.delta_torsion_zero ? "yes" : "no")
     << " kahler_like=" << (a.bismut.kahler_like ? "yes" : "no")
     << " static=" << static_verdict_name(a.bismut.static_result.verdict)
     << "\n";
  return os.str();
}

json cyt_solution_to_json(const CytSolution& s) {
  json j;
  j["a"] = s.a.str();
  j["b_squared"] = s.b_squared.str();
  j["exact_b"] = s.exact_b ? json(s.exact_b->str()) : json(nullptr);
  j["case"] = s.case_note;
  return j;
}

json cyt_solve_to_json(const CytSolveResult& r) {
  json j;
  switch (r.kind) {
    case CytSolveKind::Unique:
      j["result"] = "solution";
      j["solution"] = cyt_solution_to_json(*r.solution);
      break;
    case CytSolveKind::Circle:
      j["result"] = "circle";
      j["radius_squared"] = r.circle_radius_squared->str();
      j["constraint"] = "a^2 + b^2 = " + r.circle_radius_squared->str();
      break;
    case CytSolveKind::AnyParams:
      j["result"] = "any";
      j["constraint"] = "any a, b != 0";
      break;
    case CytSolveKind::NoSolution:
      j["result"] = "no_solution";
      if (r.offending_b_squared)
        j["offending_b_squared"] = r.offending_b_squared->str();
      break;
  }
  j["case"] = r.case_note;
  return j;
}

json ric_b_zero_to_json(const RicBZeroResult& r) {
  json j;
  if (r.solvable) {
    j["result"] = "circle";
    j["radius_squared"] = r.radius_squared->str();
    j["constraint"] = "a^2 + b^2 = " + r.radius_squared->str();
  } else {
    j["result"] = "no_solution";
    j["reason"] = r.reason;
  }
  return j;
}

std::vector<std::string> sweep_flag_names() {
  return {"kahler",  "balanced",   "lck",        "vaisman",
          "skt",     "astheno",    "gauduchon",  "harmonic",
          "ric_b_zero", "cyt",     "kahler_like", "static"};
}

SweepRow sweep_row(const SasakiStructure& s1, const SasakiStructure& s2,
                   const Scalar& a, const Scalar& b) {
  const ProductHermitian p = build_product(s1, s2, a, b);
  const HermitianClassReport classes = classify(p);
  const BismutAnalysis bis = analyze_bismut(p);
  SweepRow row{a, b, {}};
  auto put = [&](const std::string& name, Flag f) {
    row.flags[name] = f == Flag::Yes;
  };
  put("kahler", classes.kahler);
  put("balanced", classes.balanced);
  put("lck", classes.lck);
  put("vaisman", classes.vaisman);
  put("skt", classes.skt);
  put("astheno", classes.astheno_kahler);
  put("gauduchon", classes.gauduchon);
  row.flags["harmonic"] = harmonicity_defect(p).harmonic;
  row.flags["ric_b_zero"] = bis.ric_b_zero;
  row.flags["cyt"] = bis.cyt;
  row.flags["kahler_like"] = bis.kahler_like;
  row.flags["static"] = bis.static_result.verdict == StaticVerdict::Static;
  return row;
}

json sweep_row_to_json(const SweepRow& row) {
  json j;
  j["a"] = row.a.str();
  j["b"] = row.b.str();
  for (const auto& [name, v] : row.flags) j[name] = v;
  return j;
}

}  // namespace sasprod
