#pragma once
#include "dnc/blowup.hpp"
#include "dnc/classical.hpp"

namespace dnc {

// Schematic-closure comparison of the deformation: saturate(pi0 R^ext, t^-1)
// against the elimination oracle's extended Rees ideal.
struct DeformationComparisonReport {
  bool pi0_surjects = false;       // classical ideal contains the pi0 ideal
  bool saturation_matches = false;  // sat(J, t^-1) equals the classical ideal
  bool saturation_noop = false;     // no t-torsion
  std::vector<std::string> torsion_generators;
};

DeformationComparisonReport compare_classical_deformation(const CenterPresentation& center);

// Chartwise: saturate(pi0 chart, f_j) against the classical blow-up chart.
struct BlowupChartComparison {
  int chart = 0;
  bool matches = false;
  bool saturation_noop = false;
};

std::vector<BlowupChartComparison> compare_classical_blowup(const CenterPresentation& center);

// Special-fibre closure: the image of sat(J, t^-1) at t^-1 = 0 equals the
// classical normal cone ideal (Rees ideal + (f)).
bool compare_classical_cone(const CenterPresentation& center);

}  // namespace dnc
