#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dnc/cache.hpp"
#include "dnc/commands.hpp"

using namespace dnc;

namespace {

std::string cli_path() {
  const char* p = std::getenv("DNC_CLI_PATH");
  REQUIRE(p != nullptr);
  return p;
}

std::string source_dir() {
  const char* p = std::getenv("DNC_SOURCE_DIR");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& cache_dir) {
  std::string cmd = "DNC_CACHE_DIR='" + cache_dir + "' " + cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("timing_ms:", 0) != 0) out << line << "\n";
  return out.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("problem parsing round-trips") {
  std::string text = "ring Q[x,y];\ncenter (x^2, x*y);\ncutoff 8;\n";
  ProblemSpec spec = parse_problem(text);
  CHECK(spec.ring_vars == std::vector<std::string>{"x", "y"});
  CHECK(spec.center.size() == 2);
  CHECK(spec.cutoff == 8);
  ProblemSpec again = parse_problem(print_problem(spec));
  CHECK(again.ring_vars == spec.ring_vars);
  CHECK(again.center_strs == spec.center_strs);
  CHECK(again.cutoff == spec.cutoff);
  CHECK(print_problem(again) == print_problem(spec));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_problem("ring Q[x];\ncenter (x + );\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_problem("ring Q[x]; center (y);"), Error);   // UnknownVariable
  CHECK_THROWS_AS(parse_problem("ring Q[x,x]; center (x);"), Error); // DuplicateVariable
  CHECK_THROWS_AS(parse_problem("center (x);"), Error);              // center before ring
  try {
    parse_problem("ring Q[x]; center (y);");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariable);
  }
}

TEST_CASE("square statements parse") {
  std::string text =
      "ring Q[x,y];\ncenter (x, y);\nring2 Q[x];\ncenter2 (x);\n"
      "map (x -> x, y -> 0);\nlift ((1), (0));\n";
  ProblemSpec spec = parse_problem(text);
  REQUIRE(spec.has_square());
  CHECK(spec.center2.size() == 1);
  CHECK(spec.map_images.size() == 2);
  REQUIRE(spec.lift.size() == 2);
  CHECK(spec.lift[0].size() == 1);
  ProblemSpec again = parse_problem(print_problem(spec));
  CHECK(again.lift_rows == spec.lift_rows);
  CHECK(again.map_entries == spec.map_entries);
}

TEST_CASE("groebner cache: store, lookup, transparency, corruption") {
  std::string dir =
      (std::filesystem::temp_directory_path() / "dnc_cache_unit").string();
  std::filesystem::remove_all(dir);
  auto ctx = make_context({"x", "y"});
  std::vector<Polynomial> gens = {parse_polynomial(ctx, "x^2 - 1"),
                                  parse_polynomial(ctx, "x*y - 1")};
  GroebnerBasis plain = buchberger(gens, MonomialOrder::degrevlex());

  FileGroebnerCache cache(dir);
  GroebnerBasis miss;
  CHECK(!cache.lookup(gens, MonomialOrder::degrevlex(), &miss));
  cache.store(gens, MonomialOrder::degrevlex(), plain);
  GroebnerBasis hit;
  REQUIRE(cache.lookup(gens, MonomialOrder::degrevlex(), &hit));
  REQUIRE(hit.basis.size() == plain.basis.size());
  for (size_t i = 0; i < hit.basis.size(); ++i) CHECK(hit.basis[i] == plain.basis[i]);

  // under a scope, buchberger returns the identical basis
  {
    GroebnerCacheScope scope(&cache);
    GroebnerBasis cached = buchberger(gens, MonomialOrder::degrevlex());
    REQUIRE(cached.basis.size() == plain.basis.size());
    for (size_t i = 0; i < cached.basis.size(); ++i) CHECK(cached.basis[i] == plain.basis[i]);
  }

  // corrupt every entry: lookups fall back to recomputation
  for (auto& entry : std::filesystem::directory_iterator(dir))
    std::ofstream(entry.path()) << "dncgb 999\ngarbage\n";
  GroebnerBasis recomputed;
  CHECK(!cache.lookup(gens, MonomialOrder::degrevlex(), &recomputed));
  {
    GroebnerCacheScope scope(&cache);
    GroebnerBasis again = buchberger(gens, MonomialOrder::degrevlex());
    REQUIRE(again.basis.size() == plain.basis.size());
    for (size_t i = 0; i < again.basis.size(); ++i) CHECK(again.basis[i] == plain.basis[i]);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("run_command dispatch and exit codes") {
  ProblemSpec spec = parse_problem("ring Q[u];\ncenter (u);\n");
  CommandOptions opts;
  CommandResult r = run_command(spec, "pi0", opts);
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("tinv*x1 - u") != std::string::npos);
  CHECK_THROWS_AS(run_command(spec, "no-such-command", opts), Error);
  CHECK_THROWS_AS(run_command(spec, "check-excessive", opts), Error);
}

TEST_CASE("cli determinism: repeated runs and cache on/off agree bytewise") {
  std::string input = write_temp("dnc_det.dnc", "ring Q[x,y];\ncenter (x, y);\ncutoff 5;\n");
  std::string cache =
      (std::filesystem::temp_directory_path() / "dnc_cache_det").string();
  std::filesystem::remove_all(cache);
  for (std::string cmd : {"rees", "pi0", "compare-deformation", "blowup"}) {
    RunResult cold = run_cli(cmd + " --input " + input, cache);
    RunResult warm = run_cli(cmd + " --input " + input, cache);
    RunResult bare = run_cli(cmd + " --input " + input + " --no-cache", cache);
    CHECK(cold.exit_code == 0);
    CHECK(strip_timing(cold.output) == strip_timing(warm.output));
    CHECK(strip_timing(cold.output) == strip_timing(bare.output));
  }
  std::filesystem::remove_all(cache);
}

TEST_CASE("golden reports") {
  namespace fs = std::filesystem;
  std::string golden_dir = source_dir() + "/tests/golden";
  std::string input_dir = source_dir() + "/tests/inputs";
  bool regen = std::getenv("DNC_REGEN_GOLDEN") != nullptr;
  std::string cache = (fs::temp_directory_path() / "dnc_cache_golden").string();
  fs::remove_all(cache);

  std::ifstream manifest(golden_dir + "/manifest.txt");
  REQUIRE(manifest.good());
  std::string line;
  int checked = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    // format: golden-name <tab> input-file <tab> cli arguments
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 + 1);
    REQUIRE(t1 != std::string::npos);
    REQUIRE(t2 != std::string::npos);
    std::string name = line.substr(0, t1);
    std::string input = line.substr(t1 + 1, t2 - t1 - 1);
    std::string args = line.substr(t2 + 1);
    RunResult run = run_cli(args + " --input " + input_dir + "/" + input, cache);
    std::string body = strip_timing(run.output);
    std::string path = golden_dir + "/" + name + ".txt";
    if (regen) {
      std::ofstream(path) << body;
    } else {
      std::ifstream in(path);
      REQUIRE_MESSAGE(in.good(), ("missing golden: " + path));
      std::ostringstream want;
      want << in.rdbuf();
      CHECK_MESSAGE(want.str() == body, ("golden mismatch: " + name));
    }
    ++checked;
  }
  CHECK(checked > 0);
  fs::remove_all(cache);
}
