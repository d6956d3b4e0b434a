#include "dnc/commands.hpp"

#include <chrono>

#include "dnc/comparisons.hpp"
#include "dnc/infnbhd.hpp"
#include "dnc/report.hpp"

namespace dnc {

namespace {

struct Resolved {
  CenterPresentation center;
  int cutoff;
  std::pair<int, int> hdeg, weight;
};

Resolved resolve(const ProblemSpec& spec, const CommandOptions& opts) {
  Resolved r{make_center(spec.ambient, spec.center), opts.cutoff.value_or(spec.cutoff),
             opts.hdeg_range.value_or(std::make_pair(spec.hdeg_lo, spec.hdeg_hi)),
             opts.weight_range.value_or(std::make_pair(spec.weight_lo, spec.weight_hi))};
  return r;
}

void echo_input(Report& r, const ProblemSpec& spec, const Resolved& res) {
  r.begin("input");
  std::string ring;
  for (size_t i = 0; i < spec.ring_vars.size(); ++i) ring += (i ? "," : "") + spec.ring_vars[i];
  r.kv("ring", "Q[" + ring + "]");
  std::string center;
  for (size_t i = 0; i < spec.center_strs.size(); ++i)
    center += (i ? ", " : "") + spec.center_strs[i];
  r.kv("center", "(" + center + ")");
  r.kv("cutoff", static_cast<long>(res.cutoff));
  r.end();
}

void cmd_rees(Report& r, const Resolved& res) {
  ReesPresentation R = rees_extended(res.center);
  report_cdga(r, "presentation", R.cdga);
  report_pi0(r, R.cdga.pi0());
  r.begin("structure");
  for (int w = 0; w >= -2; --w) {
    WeightComponentReport wc = weight_component(R, w, res.cutoff);
    r.check("weight " + std::to_string(w) + " free on t^" + std::to_string(w),
            wc.free_spanning && wc.free_injective);
  }
  r.check("generated in weight 1", generated_in_weight_one(R, 3, res.cutoff));
  r.check("weight 1 equals the center ideal", weight1_equals_center_ideal(R, res.cutoff));
  r.end();
}

void cmd_fiber(Report& r, const Resolved& res, const std::string& at) {
  ReesPresentation R = rees_extended(res.center);
  if (at == "special") {
    DeformationFiber f = deformation_fiber(R, FiberKind::special);
    report_cdga(r, "special_fiber", f.cdga);
    report_pi0(r, f.cdga.pi0());
  } else if (at == "generic") {
    DeformationFiber f = deformation_fiber(R, FiberKind::generic);
    report_cdga(r, "generic_fiber", f.cdga);
    Pi0Presentation p = f.cdga.pi0();
    report_pi0(r, p);
    // the underlying-family shape: reduced basis {x_i - f_i t} plus the inversion cell
    std::vector<Polynomial> expected;
    for (int i = 0; i < res.center.size(); ++i)
      expected.push_back(parse_polynomial(p.ring, res.center.x_names[i]) -
                         res.center.gens[i].mapped_to(p.ring) *
                             parse_polynomial(p.ring, f.t_inverse_name));
    expected.push_back(parse_polynomial(p.ring, res.center.t_name) *
                           parse_polynomial(p.ring, f.t_inverse_name) -
                       Polynomial::constant(p.ring, 1));
    r.check("pi0 is Q[z][t,t^-1] with x_i = f_i t",
            ideal_equal(p.gb.basis, expected, MonomialOrder::degrevlex()));
  } else {
    fail(Errc::ParseError, "fiber kind must be 'special' or 'generic'");
  }
}

void cmd_normal_cone(Report& r, const Resolved& res) {
  SemifreeCDGA sym = normal_cone_model(res.center);
  report_cdga(r, "normal_cone", sym);
  report_pi0(r, sym.pi0());
  ReesPresentation R = rees_extended(res.center);
  DeformationFiber f = deformation_fiber(R, FiberKind::special);
  r.check("presentation matches the special fiber", same_presentation_by_name(f.cdga, sym));
  int kmax = max_relevant_hdeg(sym, res.cutoff);
  HomologyTable ts = homology_table(sym, 0, kmax, res.weight.first, res.weight.second, res.cutoff);
  HomologyTable tf =
      homology_table(f.cdga, 0, kmax, res.weight.first, res.weight.second, res.cutoff);
  r.check("homology tables agree within the band", ts.equal_within_band(tf));
}

void cmd_blowup(Report& r, const Resolved& res) {
  auto charts = blowup_charts(res.center);
  r.kv("charts", static_cast<long>(charts.size()));
  if (charts.empty()) r.line("blow-up is empty");
  for (auto& chart : charts) {
    r.begin("chart " + std::to_string(chart.index));
    r.kv("exceptional_equation", chart.exceptional_equation.str());
    report_cdga(r, "presentation", chart.cdga);
    report_pi0(r, chart.cdga.pi0());
    r.end();
  }
}

void cmd_exceptional(Report& r, const Resolved& res) {
  auto charts = blowup_charts(res.center);
  r.kv("charts", static_cast<long>(charts.size()));
  for (auto& chart : charts) {
    r.begin("chart " + std::to_string(chart.index));
    SemifreeCDGA E = exceptional_divisor(chart);
    report_cdga(r, "exceptional_divisor", E);
    report_pi0(r, E.pi0());
    r.end();
  }
}

void cmd_compare_deformation(Report& r, const Resolved& res) {
  DeformationComparisonReport rep = compare_classical_deformation(res.center);
  r.check("pi0 surjects onto the classical extended Rees algebra", rep.pi0_surjects);
  r.check("saturation at t^-1 equals the classical ideal", rep.saturation_matches);
  r.kv("saturation_noop", rep.saturation_noop);
  if (!rep.torsion_generators.empty()) {
    r.begin("torsion_generators");
    for (auto& t : rep.torsion_generators) r.line(t);
    r.end();
  }
}

void cmd_compare_blowup(Report& r, const Resolved& res) {
  auto cmps = compare_classical_blowup(res.center);
  for (auto& cmp : cmps) {
    r.check("chart " + std::to_string(cmp.chart) + " matches the classical chart", cmp.matches);
    r.kv("chart " + std::to_string(cmp.chart) + " saturation_noop", cmp.saturation_noop);
  }
}

void cmd_infnbhd(Report& r, const Resolved& res, int level) {
  ReesPresentation R = rees_extended(res.center);
  FiltrationTowerReport tower = filtration_tower(R, level);
  for (auto& X : tower.levels) {
    r.begin("X^(" + std::to_string(X.level) + ")");
    report_pi0(r, X.pi0);
    r.end();
  }
  r.check("tower maps are surjections on pi0", tower.surjections_ok);
  r.check("kernels are the graded pieces I^n", tower.kernels_graded);
  r.check("kernels are nilpotent", tower.kernels_nilpotent);
}

void cmd_check_inf(Report& r, const Resolved& res, int level) {
  bool consistent_n1 = true, consistent_n = true;
  for (int n = 1; n <= level; ++n) {
    InfTriangleReport tri = verify_inf_triangles(res.center, n, res.cutoff);
    if (!tri.comparable) {
      r.kv("triangle level " + std::to_string(n),
           std::string("skipped: homogenized model, graded slices are padded"));
      continue;
    }
    r.check("triangle Sym^" + std::to_string(n) + " additivity", tri.additivity_sym);
    r.check("triangle (R)_" + std::to_string(n + 1) + " additivity", tri.additivity_rees);
    if (res.center.size() > 0) {
      Pi0IdealCheckReport ic = pi0_ideal_check(res.center, n);
      consistent_n1 = consistent_n1 && ic.matches_power_n_plus_1;
      consistent_n = consistent_n && ic.matches_power_n;
      r.kv("kernel at level " + std::to_string(n) + " equals I^" + std::to_string(n),
           ic.matches_power_n);
      r.kv("kernel at level " + std::to_string(n) + " equals I^" + std::to_string(n + 1),
           ic.matches_power_n_plus_1);
    }
  }
  if (res.center.size() > 0) {
    r.check("a single ideal-power index fits every level", consistent_n1 || consistent_n);
    r.kv("resolved_index", std::string(consistent_n1 ? "n+1" : (consistent_n ? "n" : "none")));
  }
}

void cmd_check_excessive(Report& r, const ProblemSpec& spec, const Resolved& res) {
  if (!spec.has_square())
    fail(Errc::ParseError, "check-excessive needs ring2/center2/map/lift statements");
  ExcessiveSquareData data;
  data.bottom = res.center;
  data.top = make_center(spec.ambient2, spec.center2);
  data.ring_map = spec.map_images;
  data.lift = spec.lift;
  ExcessiveReport rep = check_excessive(data, res.cutoff);
  r.kv("classically_cartesian", rep.classically_cartesian);
  r.kv("conormal_surjective", rep.conormal_surjective);
  r.kv("excessive", rep.excessive);
  r.kv("certified_band", static_cast<long>(rep.band));
}

void cmd_deformation_as_blowup(Report& r, const Resolved& res) {
  DeformationBlowupReport rep = verify_deformation_as_blowup(res.center);
  for (auto& [chart, ok] : rep.charts)
    r.check("chart " + std::to_string(chart) + " reproduces pi0 of the Rees presentation", ok);
}

void cmd_homology(Report& r, const Resolved& res) {
  ReesPresentation R = rees_extended(res.center);
  HomologyTable t = homology_table(R.cdga, res.hdeg.first, res.hdeg.second, res.weight.first,
                                   res.weight.second, res.cutoff);
  report_table(r, t);
}

void cmd_pi0(Report& r, const Resolved& res) {
  ReesPresentation R = rees_extended(res.center);
  report_pi0(r, R.cdga.pi0());
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "rees",          "fiber",          "normal-cone",        "blowup",
      "exceptional",   "compare-deformation", "compare-blowup", "infnbhd",
      "check-inf",     "check-excessive",     "deformation-as-blowup", "homology",
      "pi0"};
  return names;
}

CommandResult run_command(const ProblemSpec& spec, const std::string& command,
                          const CommandOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Resolved res = resolve(spec, opts);
  Report r(command);
  echo_input(r, spec, res);

  if (command == "rees") {
    cmd_rees(r, res);
  } else if (command == "fiber") {
    cmd_fiber(r, res, opts.at);
  } else if (command == "normal-cone") {
    cmd_normal_cone(r, res);
  } else if (command == "blowup") {
    cmd_blowup(r, res);
  } else if (command == "exceptional") {
    cmd_exceptional(r, res);
  } else if (command == "compare-deformation") {
    cmd_compare_deformation(r, res);
  } else if (command == "compare-blowup") {
    cmd_compare_blowup(r, res);
  } else if (command == "infnbhd") {
    cmd_infnbhd(r, res, opts.level);
  } else if (command == "check-inf") {
    cmd_check_inf(r, res, opts.level);
  } else if (command == "check-excessive") {
    cmd_check_excessive(r, spec, res);
  } else if (command == "deformation-as-blowup") {
    cmd_deformation_as_blowup(r, res);
  } else if (command == "homology") {
    cmd_homology(r, res);
  } else if (command == "pi0") {
    cmd_pi0(r, res);
  } else {
    fail(Errc::ParseError, "unknown command '" + command + "'");
  }

  auto stop = std::chrono::steady_clock::now();
  r.set_timing_ms(std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
  CommandResult result;
  result.exit_code = (r.has_checks() && !r.passed()) ? 2 : 0;
  result.text = r.str(true);
  return result;
}

}  // namespace dnc
