#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "effmodel/model/conductor.hpp"

namespace effmodel::model {

/// Everything a degeneration run produces, already rendered as text so that
/// reports are plain values with no ring handles inside.
struct DegenerationReport {
  ConductorSpec spec;
  std::vector<std::string> change_of_variables;
  std::vector<std::string> model_equations;
  std::vector<std::string> action;  // G on the model, "Z1 -> Z1 + u1"

  struct Group {
    std::vector<std::string> generators;
    std::vector<std::string> relation_constants;
    std::vector<std::string> comul;
  };
  Group effective_model;
  std::string lambda, nu;
  std::vector<std::string> domination;  // "v1 -> pi*u1"
  bool domination_ok = false;
  std::string fiber_class;
  std::vector<std::string> stabilizer_ideal;
  std::size_t stabilizer_order = 0;
  std::string verdict;
  bool faithful = false;
  bool invariants_ok = false;

  struct Subgroup {
    std::vector<std::string> generators;
    std::vector<std::string> relation_constants;
    bool connected = false;
  };
  Subgroup subgroup;
};

/// Degree bound used by degenerate() for the invariant check.
inline constexpr int kInvariantDegree = 3;

/// build_cover -> effective_model -> identify_kernel_form -> special fiber
/// -> stabilizer -> verdicts. Errors keep their type and get the failing
/// stage's name prefixed to the message.
DegenerationReport degenerate(const ConductorSpec& spec);

nlohmann::json to_json(const DegenerationReport& r);
nlohmann::json reports_to_json(const std::vector<DegenerationReport>& rs);

/// One "path: value" line per leaf, path components joined by '.', value
/// JSON-encoded. Empty containers are leaves ("[]", "{}").
std::string json_to_text(const nlohmann::json& j);
/// Inverse of json_to_text. UsageError on malformed lines.
nlohmann::json text_to_json(const std::string& text);

}  // namespace effmodel::model
