#pragma once

#include "sasprod/bismut.hpp"
#include "sasprod/document.hpp"

namespace sasprod {

/// Everything cmd_analyze reports; each flag is reproducible by re-running
/// the corresponding module operation on the echoed input.
struct FullAnalysis {
  SasakiVerdict verdict1, verdict2;
  std::optional<EtaEinsteinConstants> ee1, ee2;
  HermitianClassReport classes;
  HarmonicityResult harmonicity;
  bool wood_identity_zero = false;
  std::vector<Scalar> delta_j;
  BismutAnalysis bismut;
};

FullAnalysis run_full_analysis(const ProductHermitian& p);

json scalar_to_json(const Scalar& s);
json vector_to_json(const std::vector<Scalar>& v);
json form_to_json(const ExteriorForm& f);
json tensor_to_json(const DenseTensor& t);

json analysis_to_json(const ProductHermitian& p, const FullAnalysis& a,
                      bool include_tensors);
std::string analysis_to_text(const ProductHermitian& p, const FullAnalysis& a);

json cyt_solve_to_json(const CytSolveResult& r);
json ric_b_zero_to_json(const RicBZeroResult& r);
json cyt_solution_to_json(const CytSolution& s);

/// One sweep row: the classification and bismut flags at (a, b).
struct SweepRow {
  Scalar a, b;
  std::map<std::string, bool> flags;
};

/// Flags available as sweep predicates.
std::vector<std::string> sweep_flag_names();
SweepRow sweep_row(const SasakiStructure& s1, const SasakiStructure& s2,
                   const Scalar& a, const Scalar& b);
json sweep_row_to_json(const SweepRow& row);

}  // namespace sasprod
