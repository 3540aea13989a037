#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subgauss/json_io.hpp"
#include "subgauss/scenarios.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace subgauss;

void apply_config_file(ScenarioConfig& config, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  if (j.contains("scenario")) config.scenario = j["scenario"].get<std::string>();
  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("vector_spec")) {
    config.vector_spec = vector_spec_from_json(j["vector_spec"]);
  }
  if (j.contains("direction")) config.direction = direction_from_json(j["direction"]);
  if (j.contains("hypergraph")) {
    config.hypergraph = hypergraph_from_json(j["hypergraph"]);
  }
  if (j.contains("measure")) config.measure = measure_from_json(j["measure"]);
  if (j.contains("params")) {
    const json& ps = j["params"];
    if (!ps.is_object()) throw DomainError("config: params must be an object");
    const auto opt_num = [&](const char* key, auto& slot) {
      if (ps.contains(key)) slot = ps[key].get<double>();
    };
    const auto opt_int = [&](const char* key, std::optional<int>& slot) {
      if (ps.contains(key)) slot = ps[key].get<int>();
    };
    opt_int("n", config.n);
    opt_int("d", config.d);
    opt_num("p", config.p);
    opt_num("C", config.C);
    opt_num("K", config.K);
    opt_num("eta", config.eta);
    opt_num("gamma", config.gamma);
    opt_num("lambda", config.lambda);
    opt_num("alpha", config.alpha);
    opt_num("tau", config.tau);
    opt_num("t", config.t);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification scenarios for hereditary subgaussian constants"};
  app.set_help_flag("--help", "print usage");

  std::string scenario;
  std::string config_path;
  std::string out_dir = "out";
  std::string k_flag;
  ScenarioConfig config;
  int threads = 0;

  app.add_option("scenario", scenario,
                 "scenario name, or \"list\" to show the table")
      ->required();
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", config.seed, "master seed");
  app.add_option("--out", out_dir, "output directory (reports.jsonl, spectrum.csv)");
  app.add_option("--threads", threads, "worker threads (default: SUBGAUSS_THREADS)");
  app.add_option("--n", config.n, "dimension");
  app.add_option("--d", config.d, "hyperedge arity");
  app.add_option("--p", config.p, "subset bias");
  app.add_option("--C", config.C, "good-set threshold");
  app.add_option("--K", k_flag, "subgaussian constant, or \"auto\"");
  app.add_option("--eta", config.eta, "measure defect");
  app.add_option("--gamma", config.gamma, "premise measure");
  app.add_option("--lambda", config.lambda, "deviation parameter");
  app.add_option("--alpha", config.alpha, "sup-norm split point");
  app.add_option("--tau", config.tau, "partial tail threshold");
  app.add_option("--t", config.t, "deviation level");

  CLI11_PARSE(app, argc, argv);

  if (scenario == "list") {
    std::cout << render_scenario_list();
    return 0;
  }

  try {
    if (!config_path.empty()) apply_config_file(config, config_path);
    if (!scenario.empty()) config.scenario = scenario;
    if (!k_flag.empty() && k_flag != "auto") {
      config.K = std::stod(k_flag);
    }

    if (threads == 0) {
      if (const char* env = std::getenv("SUBGAUSS_THREADS")) {
        threads = std::atoi(env);
      }
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    const ScenarioResult result = run_scenario(config);
    write_outputs(result, out_dir);

    std::size_t skipped = 0;
    std::size_t violations = 0;
    for (const auto& [scen, r] : result.reports) {
      if (r.skipped) {
        ++skipped;
      } else if (!r.holds) {
        ++violations;
        std::cout << "VIOLATION " << scen << '/' << r.name
                  << " lhs=" << fmt17(r.lhs) << " rhs=" << fmt17(r.rhs) << '\n';
      }
    }
    std::cout << config.scenario << ": " << result.reports.size() << " reports, "
              << skipped << " skipped, " << violations << " violations\n";
    return result.status;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
}
