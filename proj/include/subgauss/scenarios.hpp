#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subgauss/biased.hpp"
#include "subgauss/directional.hpp"
#include "subgauss/hypergraph.hpp"
#include "subgauss/random_vector.hpp"
#include "subgauss/report.hpp"

namespace subgauss {

// Fully determines a run together with the seed. Unset knobs fall back to
// per-scenario defaults; unset structured inputs are generated from the seed.
struct ScenarioConfig {
  std::string scenario;
  std::uint64_t seed = 0;

  std::optional<VectorSpec> vector_spec;
  std::optional<Direction> direction;
  std::optional<Hypergraph> hypergraph;
  std::optional<SubsetMeasure> measure;

  std::optional<int> n;
  std::optional<int> d;
  std::optional<double> p;
  std::optional<double> C;
  std::optional<double> K;
  std::optional<double> eta;
  std::optional<double> gamma;
  std::optional<double> lambda;
  std::optional<double> alpha;
  std::optional<double> tau;
  std::optional<double> t;
};

struct ScenarioResult {
  // (scenario tag, report); canonically sorted before serialization
  std::vector<std::pair<std::string, BoundReport>> reports;
  std::optional<Spectrum> spectrum;
  int status = 0;  // 0 all hold, 1 violation
};

struct ScenarioInfo {
  std::string name;
  std::string anchor;
  std::string fields;
};

const std::vector<ScenarioInfo>& scenario_table();
bool known_scenario(const std::string& name);

ScenarioResult run_scenario(const ScenarioConfig& config);

// reports.jsonl (always) and spectrum.csv (when a spectrum was produced)
void write_outputs(const ScenarioResult& result, const std::string& out_dir);

std::string render_scenario_list();

}  // namespace subgauss
