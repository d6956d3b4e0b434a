// Acceptance suite: one test case per criterion, one printed pass/fail line
// each, everything pinned at cutoff D = 6 on the center suite
//   C0 = (), C1 = (u), C2 = (x, y), C3 = (x, x), C4 = (x^2, x*y), CU = (1).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dnc/commands.hpp"
#include "dnc/comparisons.hpp"
#include "dnc/infnbhd.hpp"

using namespace dnc;

namespace {

constexpr int kCutoff = 6;

CenterPresentation center_of(const std::vector<std::string>& vars,
                             const std::vector<std::string>& gens) {
  auto ctx = make_context(vars);
  std::vector<Polynomial> fs;
  for (auto& g : gens) fs.push_back(parse_polynomial(ctx, g));
  return make_center(ctx, fs);
}

CenterPresentation C0() { return center_of({"z"}, {}); }
CenterPresentation C1() { return center_of({"u"}, {"u"}); }
CenterPresentation C2() { return center_of({"x", "y"}, {"x", "y"}); }
CenterPresentation C3() { return center_of({"x"}, {"x", "x"}); }
CenterPresentation C4() { return center_of({"x", "y"}, {"x^2", "x*y"}); }
CenterPresentation CU() { return center_of({"z"}, {"1"}); }

std::vector<CenterPresentation> full_suite() { return {C0(), C1(), C2(), C3(), C4(), CU()}; }
std::vector<CenterPresentation> c14() { return {C1(), C2(), C3(), C4()}; }

void criterion(int number, const std::string& name, bool ok) {
  std::printf("[criterion %2d] %-58s %s\n", number, name.c_str(), ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  CHECK_MESSAGE(ok, ("criterion " + std::to_string(number) + ": " + name));
}

std::string run_cli(const std::string& args, const std::string& cache_dir, int* exit_code) {
  const char* cli = std::getenv("DNC_CLI_PATH");
  REQUIRE(cli != nullptr);
  std::string cmd =
      "DNC_CACHE_DIR='" + cache_dir + "' " + std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("timing_ms:", 0) != 0) out << line << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("criterion 1: Rees structure") {
  bool ok = true;
  for (auto& c : full_suite()) {
    ReesPresentation R = rees_extended(c);
    for (int w = 0; w >= -2; --w) {
      WeightComponentReport rep = weight_component(R, w, kCutoff);
      ok = ok && rep.checked_freeness && rep.free_spanning && rep.free_injective;
    }
    ok = ok && generated_in_weight_one(R, 3, kCutoff);
    ok = ok && weight1_equals_center_ideal(R, kCutoff);
  }
  criterion(1, "Rees structure: degrees <= 0 free, generated in weight 1", ok);
}

TEST_CASE("criterion 2: generic fiber") {
  bool ok = true;
  for (auto& c : full_suite()) {
    ReesPresentation R = rees_extended(c);
    DeformationFiber f = deformation_fiber(R, FiberKind::generic);
    Pi0Presentation p = f.cdga.pi0();
    std::vector<Polynomial> expected;
    for (int i = 0; i < c.size(); ++i)
      expected.push_back(parse_polynomial(p.ring, c.x_names[i]) -
                         c.gens[i].mapped_to(p.ring) *
                             parse_polynomial(p.ring, f.t_inverse_name));
    expected.push_back(parse_polynomial(p.ring, c.t_name) *
                           parse_polynomial(p.ring, f.t_inverse_name) -
                       Polynomial::constant(p.ring, 1));
    ok = ok && ideal_equal(p.gb.basis, expected, MonomialOrder::degrevlex());
  }
  criterion(2, "generic fiber is Q[z][t,t^-1] with x_i = f_i t", ok);
}

TEST_CASE("criterion 3: special fiber equals Sym of the conormal") {
  bool ok = true;
  for (auto& c : c14()) {
    ReesPresentation R = rees_extended(c);
    DeformationFiber f = deformation_fiber(R, FiberKind::special);
    SemifreeCDGA sym = normal_cone_model(c);
    ok = ok && same_presentation_by_name(f.cdga, sym);
    int kmax = max_relevant_hdeg(sym, kCutoff);
    HomologyTable tf = homology_table(f.cdga, 0, kmax, 0, 3, kCutoff);
    HomologyTable ts = homology_table(sym, 0, kmax, 0, 3, kCutoff);
    ok = ok && tf.equal_within_band(ts);
  }
  criterion(3, "special fiber = Sym(conormal), presentation and tables", ok);
}

TEST_CASE("criterion 4: classical deformation comparison") {
  bool ok = true;
  DeformationComparisonReport r1 = compare_classical_deformation(C1());
  DeformationComparisonReport r2 = compare_classical_deformation(C2());
  DeformationComparisonReport r3 = compare_classical_deformation(C3());
  DeformationComparisonReport r4 = compare_classical_deformation(C4());
  for (auto* r : {&r1, &r2, &r3, &r4}) ok = ok && r->pi0_surjects && r->saturation_matches;
  ok = ok && r1.saturation_noop && r2.saturation_noop;
  ok = ok && !r3.saturation_noop && !r4.saturation_noop;
  ok = ok && r3.torsion_generators == std::vector<std::string>{"x1 - x2"};
  ok = ok && !r4.torsion_generators.empty();
  criterion(4, "saturation at t^-1 matches the classical deformation oracle", ok);
}

TEST_CASE("criterion 5: blow-up charts") {
  bool ok = true;
  // C2: two charts, each pi0 a polynomial plane, vanishing higher homology
  auto charts = blowup_charts(C2());
  ok = ok && charts.size() == 2;
  for (auto& chart : charts) {
    Pi0Presentation p = chart.cdga.pi0();
    // the chart relation eliminates the second ambient coordinate
    std::vector<int> keep;
    for (int v = 0; v < p.ring->size(); ++v) {
      const std::string& n = p.ring->name(v);
      if (n == (chart.index == 1 ? "y" : "x")) continue;
      keep.push_back(v);
    }
    ok = ok && eliminate(p.gb.basis, keep).empty();
    int kmax = max_relevant_hdeg(chart.cdga, kCutoff);
    HomologyTable t = homology_table(chart.cdga, 1, kmax, 0, 0, kCutoff);
    for (int k = 1; k <= kmax; ++k)
      for (int d = 0; d <= t.certified_band; ++d) ok = ok && t.dim(k, 0, d) == 0;
    // exceptional divisor: pi0 = Q[chart coordinate], the affine chart of P^1
    SemifreeCDGA E = exceptional_divisor(chart);
    Pi0Presentation pe = E.pi0();
    std::vector<Polynomial> origin = {parse_polynomial(pe.ring, "x"),
                                      parse_polynomial(pe.ring, "y")};
    ok = ok && ideal_equal(pe.gb.basis, origin, MonomialOrder::degrevlex());
  }
  TransitionReport tr = transition(C2(), charts, 1, 2);
  ok = ok && tr.d_compatible && tr.pi0_inverse;
  // CU: the blow-up is Y itself; C0: the blow-up is empty
  auto cu = blowup_charts(CU());
  ok = ok && cu.size() == 1 && cu[0].cdga.gens().empty();
  ok = ok && blowup_charts(C0()).empty();
  criterion(5, "blow-up charts: C2 plane pattern, CU -> Y, C0 -> empty", ok);
}

TEST_CASE("criterion 6: classical blow-up comparison") {
  bool ok = true;
  for (auto& c : c14())
    for (auto& cmp : compare_classical_blowup(c)) ok = ok && cmp.matches;
  criterion(6, "chartwise saturation matches the classical blow-up charts", ok);
}

TEST_CASE("criterion 7: deformation as a blow-up") {
  bool ok = true;
  for (auto& c : {C1(), C2()}) {
    DeformationBlowupReport rep = verify_deformation_as_blowup(c);
    ok = ok && rep.all_match &&
         rep.charts.size() == static_cast<size_t>(c.size()) + 1;
  }
  criterion(7, "deformation is the punctured blow-up of X x 0 (C1, C2)", ok);
}

TEST_CASE("criterion 8: infinitesimal neighborhoods") {
  bool ok = true;
  // X^(0) = X on every center: exact pi0 kernel, plus certified homology
  for (auto& c : full_suite()) {
    ReesPresentation R = rees_extended(c);
    InfNeighborhood X0 = inf_neighborhood(R, 0);
    std::vector<int> keep;
    for (int v = 0; v < c.ambient->size(); ++v)
      keep.push_back(X0.pi0.ring->index_of(c.ambient->name(v)));
    std::vector<Polynomial> kernel;
    for (auto& g : eliminate(X0.pi0.gb.basis, keep)) kernel.push_back(g.mapped_to(c.ambient));
    ok = ok && ideal_equal(kernel, c.gens, MonomialOrder::degrevlex());
  }
  for (auto& c : c14()) {
    ReesPresentation R = rees_extended(c);
    InfNeighborhood X0 = inf_neighborhood(R, 0);
    SemifreeCDGA K = koszul_presentation(c);
    int kmax = std::max(max_relevant_hdeg(K, kCutoff), 3);
    HomologyTable tw = homology_table(X0.ambient, 0, kmax, 0, 0, kCutoff);
    HomologyTable tk = homology_table(K, 0, kmax, 0, 0, kCutoff);
    int band = std::min(tw.certified_band, tk.certified_band);
    for (int k = 0; k <= kmax; ++k)
      for (int d = 0; d <= band; ++d) ok = ok && tw.dim(k, 0, d) == tk.dim(k, 0, d);
  }
  // triangle additivity for n <= 3 on C1..C3 at D = 6
  for (auto& c : {C1(), C2(), C3()}) {
    for (int n = 1; n <= 3; ++n) {
      InfTriangleReport tri = verify_inf_triangles(c, n, kCutoff);
      ok = ok && tri.comparable && tri.additivity_sym && tri.additivity_rees;
    }
  }
  // a single consistent ideal-power index across the whole suite: the (n+1)
  // convention; degenerate centers match both powers and stay consistent
  bool all_n1 = true, distinguishes = false;
  for (auto& c : full_suite()) {
    if (c.size() == 0) continue;  // pi0_ideal_check needs n >= 1 generators
    for (int n = 1; n <= 3; ++n) {
      Pi0IdealCheckReport ic = pi0_ideal_check(c, n);
      all_n1 = all_n1 && ic.matches_power_n_plus_1;
      distinguishes = distinguishes || !ic.matches_power_n;
    }
  }
  ok = ok && all_n1 && distinguishes;
  std::printf("               resolved ideal-power index: kernel of pi0 O_Y -> pi0 O_X^(n) is "
              "I^(n+1)%s\n",
              all_n1 ? "" : " [INCONSISTENT]");
  criterion(8, "neighborhoods: X^(0)=X, triangles additive, index n+1", ok);
}

TEST_CASE("criterion 9: multiplicativity over Q[z][t^-1]") {
  auto ctx = make_context({"x", "y"});
  CenterPresentation cx = make_center(ctx, {parse_polynomial(ctx, "x")});
  CenterPresentation cy = make_center(ctx, {parse_polynomial(ctx, "y")});
  TensorResult t = derived_tensor(rees_extended(cx).cdga, rees_extended(cy).cdga, {"tinv"});
  ReesPresentation Rxy = rees_extended(C2());
  auto iso = find_presentation_isomorphism(t.algebra, Rxy.cdga);
  bool ok = iso.has_value();
  if (ok) {
    ok = ok && (*iso)["tinv"] == "tinv" && (*iso)["x1"] == "x1" && (*iso)["e1"] == "e1";
    Pi0Presentation pt = t.algebra.pi0();
    Pi0Presentation pr = Rxy.cdga.pi0();
    std::map<int, Polynomial> images;
    for (int v = 0; v < pt.ring->size(); ++v) {
      const std::string& n = pt.ring->name(v);
      images[v] = parse_polynomial(pr.ring, iso->count(n) ? (*iso)[n] : n);
    }
    std::vector<Polynomial> mapped;
    for (auto& g : pt.gb.basis) mapped.push_back(g.substituted(pr.ring, images));
    ok = ok && ideal_equal(mapped, pr.gb.basis, MonomialOrder::degrevlex());
  }
  criterion(9, "rees(C2) = rees((x)) tensor rees((y)) over Q[z][t^-1]", ok);
}

TEST_CASE("criterion 10: excessive-square checker") {
  bool ok = true;
  {
    ExcessiveSquareData data;
    data.bottom = C2();
    data.top = center_of({"x"}, {"x", "0"});
    data.ring_map = {parse_polynomial(data.top.ambient, "x"),
                     parse_polynomial(data.top.ambient, "0")};
    data.lift = {{parse_polynomial(data.top.ambient, "1"), parse_polynomial(data.top.ambient, "0")},
                 {parse_polynomial(data.top.ambient, "0"), parse_polynomial(data.top.ambient, "1")}};
    ExcessiveReport rep = check_excessive(data, kCutoff);
    ok = ok && rep.classically_cartesian && rep.conormal_surjective && rep.excessive;
  }
  {
    ExcessiveSquareData data;
    data.bottom = C2();
    data.top = center_of({"x"}, {"x"});
    data.ring_map = {parse_polynomial(data.top.ambient, "x"),
                     parse_polynomial(data.top.ambient, "0")};
    data.lift = {{parse_polynomial(data.top.ambient, "1")},
                 {parse_polynomial(data.top.ambient, "0")}};
    ExcessiveReport rep = check_excessive(data, kCutoff);
    ok = ok && rep.excessive;
  }
  {
    ExcessiveSquareData data;
    data.bottom = center_of({"x"}, {"x^2"});
    data.top = center_of({"x"}, {"x"});
    data.ring_map = {parse_polynomial(data.top.ambient, "x")};
    data.lift = {{parse_polynomial(data.top.ambient, "x")}};
    ExcessiveReport rep = check_excessive(data, kCutoff);
    ok = ok && !rep.classically_cartesian && !rep.excessive;
  }
  criterion(10, "excessive: base change and self-square yes, (x) vs (x^2) no", ok);
}

TEST_CASE("criterion 11: kernel determinism") {
  namespace fs = std::filesystem;
  const char* src = std::getenv("DNC_SOURCE_DIR");
  REQUIRE(src != nullptr);
  std::string inputs = std::string(src) + "/tests/inputs";
  std::string cache = (fs::temp_directory_path() / "dnc_cache_accept").string();
  fs::remove_all(cache);
  bool ok = true;
  struct Probe {
    const char* command;
    const char* input;
    const char* extra;
  };
  const Probe probes[] = {
      {"rees", "c3.dnc", ""},
      {"fiber", "c1.dnc", "--at generic"},
      {"normal-cone", "c4.dnc", ""},
      {"blowup", "c2.dnc", ""},
      {"exceptional", "c2.dnc", ""},
      {"compare-deformation", "c4.dnc", ""},
      {"compare-blowup", "c4.dnc", ""},
      {"infnbhd", "c2.dnc", "--n 2"},
      {"check-inf", "c1.dnc", "--n 2"},
      {"check-excessive", "sq_basechange.dnc", ""},
      {"deformation-as-blowup", "c1.dnc", ""},
      {"homology", "c3.dnc", "--cutoff 4"},
      {"pi0", "c2.dnc", ""},
  };
  for (auto& p : probes) {
    std::string args = std::string(p.command) + " --input " + inputs + "/" + p.input;
    if (p.extra[0]) args += " " + std::string(p.extra);
    int e1 = 0, e2 = 0, e3 = 0;
    std::string cold = run_cli(args, cache, &e1);
    std::string warm = run_cli(args, cache, &e2);
    std::string bare = run_cli(args + " --no-cache", cache, &e3);
    bool same = strip_timing(cold) == strip_timing(warm) &&
                strip_timing(cold) == strip_timing(bare) && e1 == e2 && e2 == e3;
    if (!same) std::printf("               determinism broke for: %s\n", p.command);
    ok = ok && same;
  }
  fs::remove_all(cache);
  criterion(11, "every command byte-deterministic, cache transparent", ok);
}
