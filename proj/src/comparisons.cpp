#include "dnc/comparisons.hpp"

#include "dnc/dsl.hpp"

namespace dnc {

DeformationComparisonReport compare_classical_deformation(const CenterPresentation& center) {
  if (center.size() == 0) fail(Errc::EmptyCenter, "comparison needs a nonempty center");
  DeformationComparisonReport rep;

  ReesPresentation R = rees_extended(center);
  Pi0Presentation p = R.cdga.pi0();
  ClassicalReesIdeal oracle = classical_rees(center, true);

  // the pi0 and oracle rings have identical variable lists
  GroebnerBasis ogb = buchberger(oracle.basis, MonomialOrder::degrevlex());
  rep.pi0_surjects = true;
  for (auto& g : p.gb.basis)
    if (!in_ideal(g.mapped_to(oracle.ring), ogb)) rep.pi0_surjects = false;

  Polynomial tinv = parse_polynomial(p.ring, center.t_name);
  std::vector<Polynomial> sat = saturate(p.gb.basis, tinv);
  std::vector<Polynomial> oracle_in_p;
  for (auto& g : oracle.basis) oracle_in_p.push_back(g.mapped_to(p.ring));
  rep.saturation_matches = ideal_equal(sat, oracle_in_p, MonomialOrder::degrevlex());
  rep.saturation_noop = ideal_equal(sat, p.gb.basis, MonomialOrder::degrevlex());
  if (!rep.saturation_noop) {
    GroebnerBasis satgb = buchberger(sat, MonomialOrder::degrevlex());
    for (auto& g : satgb.basis)
      if (!in_ideal(g, p.gb)) rep.torsion_generators.push_back(g.str());
  }
  return rep;
}

std::vector<BlowupChartComparison> compare_classical_blowup(const CenterPresentation& center) {
  if (center.size() == 0) fail(Errc::EmptyCenter, "comparison needs a nonempty center");
  std::vector<BlowupChartComparison> out;
  std::vector<ChartPresentation> charts = blowup_charts(center);
  for (int j = 1; j <= center.size(); ++j) {
    const ChartPresentation& chart = charts[j - 1];
    Pi0Presentation p = chart.cdga.pi0();
    BlowupChartComparison cmp;
    cmp.chart = j;
    Polynomial fj = chart.exceptional_equation.mapped_to(p.ring);
    std::vector<Polynomial> sat;
    if (fj.is_zero()) {
      // blow-up chart of a zero generator: the saturation convention keeps the ideal
      sat = p.gb.basis;
    } else {
      sat = saturate(p.gb.basis, fj);
    }
    std::vector<std::string> ys;
    for (int i = 0; i < center.size(); ++i) ys.push_back(chart.y_names[i]);
    std::vector<Polynomial> classical = classical_blowup_chart(center, j, p.ring, ys);
    cmp.matches = ideal_equal(sat, classical, MonomialOrder::degrevlex());
    cmp.saturation_noop = ideal_equal(sat, p.gb.basis, MonomialOrder::degrevlex());
    out.push_back(cmp);
  }
  return out;
}

bool compare_classical_cone(const CenterPresentation& center) {
  if (center.size() == 0) fail(Errc::EmptyCenter, "comparison needs a nonempty center");
  ReesPresentation R = rees_extended(center);
  Pi0Presentation p = R.cdga.pi0();
  Polynomial tinv = parse_polynomial(p.ring, center.t_name);
  std::vector<Polynomial> sat = saturate(p.gb.basis, tinv);

  ClassicalReesIdeal cone = classical_normal_cone(center);
  // set t^-1 = 0 in the saturated ideal and compare in the cone ring
  std::map<int, Polynomial> kill;
  kill[p.ring->index_of(center.t_name)] = Polynomial::zero(cone.ring);
  std::vector<Polynomial> special;
  for (auto& g : sat) {
    Polynomial img = g.substituted(cone.ring, kill);
    if (!img.is_zero()) special.push_back(img);
  }
  return ideal_equal(special, cone.basis, MonomialOrder::degrevlex());
}

}  // namespace dnc
