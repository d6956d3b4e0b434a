#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dnc/cache.hpp"
#include "dnc/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) dnc::fail(dnc::Errc::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool parse_range(const std::string& text, std::pair<int, int>* out) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    out->first = std::stoi(text.substr(0, dots));
    out->second = std::stoi(text.substr(dots + 2));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dnc: derived deformation to the normal cone, extended Rees algebras,\n"
               "derived blow-ups and infinitesimal neighborhoods over Q"};
  app.require_subcommand(1);

  std::string input_path, out_path, at = "special", weight_str, hdeg_str;
  int cutoff = -1, level = 2;
  bool no_cache = false;

  for (auto& name : dnc::command_names()) {
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--input", input_path, "problem file")->required();
    sub->add_option("--cutoff", cutoff, "internal degree cutoff D");
    sub->add_option("--weight", weight_str, "weight range a..b");
    sub->add_option("--hdeg", hdeg_str, "homological degree range a..b");
    sub->add_option("--out", out_path, "write the report here as well");
    sub->add_flag("--no-cache", no_cache, "disable the Groebner cache");
    if (name == "fiber") sub->add_option("--at", at, "special | generic");
    if (name == "infnbhd" || name == "check-inf")
      sub->add_option("--n", level, "tower depth / triangle levels");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string command = app.get_subcommands()[0]->get_name();
    dnc::ProblemSpec spec = dnc::parse_problem(read_file(input_path));

    dnc::CommandOptions opts;
    opts.at = at;
    opts.level = level;
    if (cutoff >= 0) opts.cutoff = cutoff;
    std::pair<int, int> range;
    if (!weight_str.empty()) {
      if (!parse_range(weight_str, &range))
        dnc::fail(dnc::Errc::ParseError, "--weight expects a..b");
      opts.weight_range = range;
    }
    if (!hdeg_str.empty()) {
      if (!parse_range(hdeg_str, &range)) dnc::fail(dnc::Errc::ParseError, "--hdeg expects a..b");
      opts.hdeg_range = range;
    }

    dnc::CommandResult result;
    if (no_cache) {
      result = dnc::run_command(spec, command, opts);
    } else {
      dnc::FileGroebnerCache cache(dnc::FileGroebnerCache::default_directory());
      dnc::GroebnerCacheScope scope(&cache);
      result = dnc::run_command(spec, command, opts);
    }

    std::cout << result.text;
    std::string target = !out_path.empty() ? out_path : spec.out_path;
    if (!target.empty()) {
      std::ofstream out(target);
      out << result.text;
    }
    return result.exit_code;
  } catch (const dnc::Error& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
}
