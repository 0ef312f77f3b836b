#include <CLI11.hpp>
#include <iostream>

#include "sasprod/report.hpp"

namespace {

using namespace sasprod;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoSolution = 3;

Backend parse_backend(const std::string& name) {
  if (name == "exact") return Backend::Exact;
  if (name == "float") return Backend::Float;
  throw Error("unknown backend: " + name);
}

int run_analyze(const std::string& f1, const std::string& f2,
                const std::string& a_str, const std::string& b_str,
                const std::string& backend_str, const std::string& format,
                bool include_tensors) {
  const Backend bk = parse_backend(backend_str);
  const SasakiStructure s1 = resolve_factor(f1, bk);
  const SasakiStructure s2 = resolve_factor(f2, bk);
  const Scalar a = Scalar::parse(a_str, bk);
  const Scalar b = Scalar::parse(b_str, bk);
  const ProductHermitian p = build_product(s1, s2, a, b);
  const FullAnalysis analysis = run_full_analysis(p);
  if (format == "text")
    std::cout << analysis_to_text(p, analysis);
  else
    std::cout << analysis_to_json(p, analysis, include_tensors).dump(2)
              << "\n";
  return kExitOk;
}

int run_sweep(const std::string& f1, const std::string& f2,
              const std::string& a_from, const std::string& a_to,
              const std::string& b_from, const std::string& b_to,
              const std::string& step_str, const std::string& predicate,
              const std::string& backend_str, const std::string& format) {
  const Backend bk = parse_backend(backend_str);
  const SasakiStructure s1 = resolve_factor(f1, bk);
  const SasakiStructure s2 = resolve_factor(f2, bk);
  const Scalar step = Scalar::parse(step_str, bk);
  if (!step.is_positive()) throw Error("sweep: step must be positive");
  const Scalar a0 = Scalar::parse(a_from, bk), a1 = Scalar::parse(a_to, bk);
  const Scalar b0 = Scalar::parse(b_from, bk), b1 = Scalar::parse(b_to, bk);
  if (a1 < a0 || b1 < b0) throw Error("sweep: empty range");
  if (!predicate.empty()) {
    const auto names = sweep_flag_names();
    if (std::find(names.begin(), names.end(), predicate) == names.end())
      throw Error("sweep: unknown predicate " + predicate);
  }
  json rows = json::array();
  std::ostringstream text;
  // Deterministic lexicographic order in (a, b); b = 0 rows are skipped.
  for (Scalar a = a0; !(a > a1); a += step) {
    for (Scalar b = b0; !(b > b1); b += step) {
      if (b.is_zero()) continue;
      const SweepRow row = sweep_row(s1, s2, a, b);
      if (!predicate.empty() && !row.flags.at(predicate)) continue;
      rows.push_back(sweep_row_to_json(row));
      text << "a=" << row.a.str() << " b=" << row.b.str();
      for (const auto& [name, v] : row.flags) text << " " << name << "=" << v;
      text << "\n";
    }
  }
  if (format == "text")
    std::cout << text.str();
  else
    std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sasprod: Hermitian structures (J_ab, g_ab) on products of Sasakian "
      "Lie algebras: classification, harmonicity, Bismut analysis, solvers"};
  app.require_subcommand(1);

  std::string f1, f2, a_str, b_str;
  std::string backend_str = "exact";
  std::string format = "json";
  bool include_tensors = false;

  auto* analyze = app.add_subcommand(
      "analyze", "Full analysis of (J_ab, g_ab) on factor1 x factor2");
  analyze->add_option("factor1", f1,
                      "catalog name (optionally name:s=<rat>) or JSON file")
      ->required();
  analyze->add_option("factor2", f2, "second factor")->required();
  analyze->add_option("--a", a_str, "parameter a (rational)")->required();
  analyze->add_option("--b", b_str, "parameter b (rational, nonzero)")
      ->required();
  analyze->add_option("--backend", backend_str, "exact|float");
  analyze->add_option("--format", format, "json|text");
  analyze->add_flag("--include-tensors", include_tensors,
                    "include coordinate tensors in the report");

  auto* solve = app.add_subcommand("solve", "Inverse solvers");
  std::string mode;
  std::string l1_str, l2_str;
  int n1 = 0, n2 = 0;
  solve->add_option("mode", mode, "cyt|ricb|se")->required();
  solve->add_option("--l1", l1_str, "eta-Einstein lambda of factor 1");
  solve->add_option("--l2", l2_str, "eta-Einstein lambda of factor 2");
  solve->add_option("--n1", n1, "n1 (dim factor1 = 2 n1 + 1)");
  solve->add_option("--n2", n2, "n2 (dim factor2 = 2 n2 + 1)");
  solve->add_option("--backend", backend_str, "exact|float");

  auto* sweep = app.add_subcommand(
      "sweep", "Sweep (a, b) over rational grids and report flags");
  std::string a_from, a_to, b_from, b_to, step = "1", predicate;
  sweep->add_option("factor1", f1, "first factor")->required();
  sweep->add_option("factor2", f2, "second factor")->required();
  sweep->add_option("--a-from", a_from)->required();
  sweep->add_option("--a-to", a_to)->required();
  sweep->add_option("--b-from", b_from)->required();
  sweep->add_option("--b-to", b_to)->required();
  sweep->add_option("--step", step, "grid step (rational, > 0)");
  sweep->add_option("--predicate", predicate,
                    "only emit rows where this flag holds");
  sweep->add_option("--backend", backend_str, "exact|float");
  sweep->add_option("--format", format, "json|text");

  auto* cat = app.add_subcommand("catalog", "Built-in structures");
  std::string cat_action = "list";
  cat->add_option("action", cat_action, "list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (analyze->parsed())
      return run_analyze(f1, f2, a_str, b_str, backend_str, format,
                         include_tensors);
    if (sweep->parsed())
      return run_sweep(f1, f2, a_from, a_to, b_from, b_to, step, predicate,
                       backend_str, format);
    if (cat->parsed()) {
      if (cat_action != "list") throw Error("catalog: unknown action");
      for (const auto& name : catalog_names()) std::cout << name << "\n";
      return kExitOk;
    }
    if (solve->parsed()) {
      const Backend bk = parse_backend(backend_str);
      if (mode == "cyt") {
        if (l1_str.empty() || l2_str.empty())
          throw Error("solve cyt needs --l1 --n1 --l2 --n2");
        const CytSolveResult r = cyt_solve(Scalar::parse(l1_str, bk), n1,
                                           Scalar::parse(l2_str, bk), n2);
        std::cout << cyt_solve_to_json(r).dump(2) << "\n";
        return r.kind == CytSolveKind::NoSolution ? kExitNoSolution : kExitOk;
      }
      if (mode == "ricb") {
        if (l1_str.empty() || l2_str.empty())
          throw Error("solve ricb needs --l1 --l2");
        const RicBZeroResult r = ric_b_zero_solve(Scalar::parse(l1_str, bk),
                                                  Scalar::parse(l2_str, bk));
        std::cout << ric_b_zero_to_json(r).dump(2) << "\n";
        return r.solvable ? kExitOk : kExitNoSolution;
      }
      if (mode == "se") {
        if (n1 < 1 || n2 < 1) throw Error("solve se needs --n1 --n2 >= 1");
        const CytSolution s = se_product_params(n1, n2, bk);
        std::cout << cyt_solution_to_json(s).dump(2) << "\n";
        return kExitOk;
      }
      throw Error("unknown solve mode: " + mode);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
