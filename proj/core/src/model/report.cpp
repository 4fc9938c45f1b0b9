#include "effmodel/model/report.hpp"

#include <sstream>
#include <utility>

#include "effmodel/error.hpp"
#include "effmodel/hopf/classify.hpp"
#include "effmodel/model/diagnostics.hpp"
#include "effmodel/model/effective.hpp"

namespace effmodel::model {

namespace {

template <class E>
[[noreturn]] void rethrow_as(const char* stage, const E& e) {
  throw E(std::string(stage) + ": " + e.what());
}

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UnsupportedRegime& e) {
    rethrow_as(name, e);
  } catch (const VerificationFailure& e) {
    rethrow_as(name, e);
  } catch (const DomainError& e) {
    rethrow_as(name, e);
  } catch (const UsageError& e) {
    rethrow_as(name, e);
  }
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

}  // namespace

DegenerationReport degenerate(const ConductorSpec& spec) {
  DegenerationReport r;
  r.spec = spec;
  auto built = stage("build_cover", [&] { return build_cover(spec); });
  r.change_of_variables = built.change_of_variables();
  r.model_equations = built.model.equations();
  r.action = built.action.describe();

  auto em = stage("effective_model", [&] {
    auto m = effective_model(built.action);
    if (auto ax = hopf::check_axioms(m.group()); !ax.all_ok()) {
      throw VerificationFailure("effective model fails the Hopf axioms");
    }
    return m;
  });
  const auto& g = em.group();
  r.effective_model = {g.generators(), strings(g.relation_constants()), strings(g.comul())};
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.domination.push_back(g.generators()[i] + " -> " + em.sub.domination[i].to_string());
  }

  auto params = stage("identify_kernel_form", [&] {
    auto k = hopf::identify_kernel_form(g);
    if (!k) throw VerificationFailure("effective model is not of kernel form");
    return *k;
  });
  r.lambda = params.lambda.to_string();
  r.nu = params.nu.to_string();

  r.domination_ok = stage("check_domination", [&] {
    return check_domination(built.action, em.coaction, em.sub.domination).ok;
  });

  auto ck = stage("special_fiber", [&] {
    r.fiber_class = hopf::classify_fiber(hopf::special_fiber(g)).to_string();
    return special_fiber(em.coaction);
  });
  auto st = stage("stabilizer", [&] { return stabilizer(ck); });
  r.stabilizer_ideal = st.ideal_strings();
  r.stabilizer_order = st.order;
  r.faithful = stage("faithfulness_check", [&] { return faithfulness_check(ck); });
  r.verdict = verdict_name(torsor_verdict(r.faithful, st.order));
  r.invariants_ok = stage("invariants_check", [&] {
    return invariants_check(built.action, em.coaction, kInvariantDegree);
  });

  auto sg = stage("subgroup_effective_model",
                  [&] { return subgroup_effective_model(built.action, em.sub); });
  r.subgroup = {sg.group.generators(), strings(sg.group.relation_constants()), sg.connected};
  return r;
}

nlohmann::json to_json(const DegenerationReport& r) {
  using nlohmann::json;
  json j;
  j["spec"] = {{"p", r.spec.p},
               {"m1", r.spec.m1},
               {"m2", r.spec.m2},
               {"n1", r.spec.n1},
               {"m1_tilde", r.spec.m1_tilde},
               {"regime", regime_name(r.spec.regime)}};
  j["change_of_variables"] = r.change_of_variables;
  j["model_equations"] = r.model_equations;
  j["action"] = r.action;
  j["effective_model"] = {{"generators", r.effective_model.generators},
                          {"relation_constants", r.effective_model.relation_constants},
                          {"comul", r.effective_model.comul}};
  j["identified"] = {{"lambda", r.lambda}, {"nu", r.nu}};
  j["domination"] = r.domination;
  j["domination_ok"] = r.domination_ok;
  j["fiber_class"] = r.fiber_class;
  j["stabilizer"] = {{"ideal", r.stabilizer_ideal}, {"order", r.stabilizer_order}};
  j["verdict"] = r.verdict;
  j["faithful"] = r.faithful;
  j["invariants_ok"] = r.invariants_ok;
  j["subgroup"] = {{"generators", r.subgroup.generators},
                   {"relation_constants", r.subgroup.relation_constants},
                   {"connected", r.subgroup.connected}};
  return j;
}

nlohmann::json reports_to_json(const std::vector<DegenerationReport>& rs) {
  auto out = nlohmann::json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

namespace {

void flatten(const nlohmann::json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i), out);
    }
  } else {
    out << path << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string json_to_text(const nlohmann::json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

nlohmann::json text_to_json(const std::string& text) {
  nlohmann::json out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto sep = line.find(": ");
    if (sep == std::string::npos) throw UsageError("malformed report line: " + line);
    std::string pointer;
    std::istringstream path(line.substr(0, sep));
    for (std::string part; std::getline(path, part, '.');) pointer += "/" + part;
    try {
      out[nlohmann::json::json_pointer(pointer)] = nlohmann::json::parse(line.substr(sep + 2));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("malformed report line: " + line + " (" + e.what() + ")");
    }
  }
  return out;
}

}  // namespace effmodel::model
