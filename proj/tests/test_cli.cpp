#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("subgauss_cli_" + tag);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("unknown scenario and bad flags exit with a config error") {
  CHECK(run("no_such_scenario") == 2);
  CHECK(run("fact3_3 --config /nonexistent/config.json") == 2);
}

TEST_CASE("basic scenario succeeds and writes reports") {
  const fs::path dir = fresh_dir("fact");
  CHECK(run("fact3_3 --seed 5 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "reports.jsonl"));
  const std::string content = slurp(dir / "reports.jsonl");
  CHECK(content.find("\"scenario\":\"fact3_3\"") != std::string::npos);
  CHECK(content.find("\"holds\":true") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("spectrum scenarios write the csv table") {
  const fs::path dir = fresh_dir("spec");
  CHECK(run("prop3_1 --n 6 --seed 3 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "spectrum.csv"));
  const std::string content = slurp(dir / "spectrum.csv");
  CHECK(content.rfind("H_mask,weight,psi2,restricted_norm,kstar", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("capacity overflow exits with the capacity code") {
  const fs::path dir = fresh_dir("cap");
  fs::create_directories(dir);
  const fs::path cfg = dir / "config.json";
  {
    std::ofstream out(cfg);
    out << R"({"scenario":"prop3_1","measure":{"n":25,"p":0.5,"mode":"exact"}})";
  }
  CHECK(run("prop3_1 --config " + cfg.string() + " --out " +
            (dir / "out").string()) == 3);
  fs::remove_all(dir);
}

TEST_CASE("identical config and seed give byte-identical outputs") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  const std::string args = "prop4_3 --n 7 --seed 123 --threads 3 --out ";
  CHECK(run(args + a.string()) == 0);
  CHECK(run(args + b.string()) == 0);
  CHECK(slurp(a / "reports.jsonl") == slurp(b / "reports.jsonl"));
  if (fs::exists(a / "spectrum.csv")) {
    CHECK(slurp(a / "spectrum.csv") == slurp(b / "spectrum.csv"));
  }
  fs::remove_all(a);
  fs::remove_all(b);
}
