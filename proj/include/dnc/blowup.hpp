#pragma once
#include "dnc/rees.hpp"

namespace dnc {

// Chart j of Proj of the Rees algebra: Q[z][y_i (i != j)] with cells
// d e_i = y_i*f_j - f_i, obtained from the localized Rees presentation by
// passing to weight 0 and cancelling the contractible pair (e_j, s = t^-1 x_j).
struct ChartPresentation {
  int index = 0;  // 1-based
  SemifreeCDGA cdga;
  SemifreeCDGA precancel;  // with s and e_j still present
  Polynomial exceptional_equation;  // f_j, in the ambient ring
  std::vector<std::string> y_names;  // indexed by center position (empty at j-1)
  std::string s_name;
};

// n charts; empty list for the empty center (the blow-up of Y in Y is empty).
// Every chart build re-asserts that cancel_cell changed neither pi0 nor the
// certified homology table.
std::vector<ChartPresentation> blowup_charts(const CenterPresentation& center,
                                             int verify_cutoff = 4);

// derived quotient of the chart by its exceptional equation
SemifreeCDGA exceptional_divisor(const ChartPresentation& chart);

struct TransitionReport {
  int from_chart = 0, to_chart = 0;
  bool d_compatible = false;
  bool pi0_inverse = false;
  std::vector<std::pair<std::string, std::string>> substitution;  // var -> image
};

// gluing map from chart k to chart j over the overlap, with its checks
TransitionReport transition(const CenterPresentation& center,
                            const std::vector<ChartPresentation>& charts, int j, int k);

struct ExcessiveSquareData {
  CenterPresentation bottom;               // f over A
  CenterPresentation top;                  // f' over A'
  std::vector<Polynomial> ring_map;        // image of each ambient variable of A in A'
  std::vector<std::vector<Polynomial>> lift;  // phi(f_i) = sum_j lift[i][j] * f'_j
};

struct ExcessiveReport {
  bool classically_cartesian = false;
  bool conormal_surjective = false;
  bool excessive = false;
  int band = 0;  // internal degrees in which pi1-surjectivity is certified
};

ExcessiveReport check_excessive(const ExcessiveSquareData& data, int cutoff);

struct DeformationBlowupReport {
  std::vector<std::pair<int, bool>> charts;  // chart index, pi0 identity verified
  bool all_match = false;
};

// The normal deformation is the blow-up of X x {0} in Y x A^1 minus the
// blow-up inside Y x {0}; verified chart by chart on pi0
DeformationBlowupReport verify_deformation_as_blowup(const CenterPresentation& center);

}  // namespace dnc
