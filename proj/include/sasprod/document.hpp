#pragma once

#include <json.hpp>

#include "sasprod/sasaki.hpp"

namespace sasprod {

using json = nlohmann::ordered_json;

/// Serialized Lie algebra with a Sasakian structure. Basis indices are
/// 1-based and each bracket entry requires i < j; scalars are rational
/// strings "p/q" so nothing is contaminated by floats.
struct BracketEntry {
  int i = 0, j = 0;
  std::map<int, std::string> coefficients;  // basis index -> rational
};

struct AlgebraDocument {
  std::string name;
  int dim = 0;
  std::vector<BracketEntry> brackets;
  std::vector<std::vector<std::string>> metric;  // empty = identity
  std::vector<std::string> xi;
  std::vector<std::string> eta;
  std::vector<std::vector<std::string>> phi;  // phi[i][j]: e_i coeff of phi(e_j)
};

AlgebraDocument document_from_json(const json& j);
json document_to_json(const AlgebraDocument& doc);

/// Builds the structure, validating the Jacobi identity (reporting the
/// first violating triple on failure).
SasakiStructure document_to_sasaki(const AlgebraDocument& doc,
                                   Backend backend);
AlgebraDocument document_from_sasaki(const SasakiStructure& s);

/// Resolves a factor argument: catalog names first (with an optional
/// ":s=<rational>" D-homothety suffix), then a path to an AlgebraDocument
/// JSON file.
SasakiStructure resolve_factor(const std::string& arg, Backend backend);

}  // namespace sasprod
