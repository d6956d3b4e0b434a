#pragma once
#include "dnc/rees.hpp"

namespace dnc {

// X^(n): weight-0 part of R{n} = R^ext tensored down by t^{-(n+1)},
// materialized by a cell zeta with d zeta = t^{-(n+1)} plus the exact pi0
// presentation over Q[z][u_1..u_n], u_i the balanced monomials x_i t^{-1}.
struct InfNeighborhood {
  int level = 0;
  SemifreeCDGA ambient;  // R{n}; weight-0 slices of this algebra are X^(n)
  std::string zeta_name;
  Pi0Presentation pi0;
  std::vector<std::string> u_names;
};

InfNeighborhood inf_neighborhood(const ReesPresentation& R, int n);

// Euler-characteristic additivity of the two exact triangles, per internal
// degree within the shared certified band.
struct InfTriangleReport {
  int level = 0;
  int band = 0;
  // degreewise slices only compare when no participating algebra had to be
  // homogenized: padding with h shifts the graded pieces of inhomogeneous
  // centers and the chi identities hold only for the honest grading
  bool comparable = false;
  bool additivity_sym = false;   // Sym^n(conormal) -> O_{X^(n)} -> O_{X^(n-1)}
  bool additivity_rees = false;  // (R^ext)_{n+1} -> O_Y -> O_{X^(n)}
  std::vector<std::pair<std::string, int>> failures;  // triangle tag, degree
};

InfTriangleReport verify_inf_triangles(const CenterPresentation& center, int n, int cutoff);

// Which classical ideal power realizes ker(pi0 O_Y -> pi0 O_{X^(n)}).
// Determined empirically from the oracle; never hardcoded.
struct Pi0IdealCheckReport {
  int level = 0;
  bool matches_power_n = false;
  bool matches_power_n_plus_1 = false;
  std::vector<std::string> kernel_basis;
};

Pi0IdealCheckReport pi0_ideal_check(const CenterPresentation& center, int n);

struct FiltrationTowerReport {
  std::vector<InfNeighborhood> levels;
  bool surjections_ok = false;        // each pi0 X^(n) surjects onto pi0 X^(n-1)
  bool kernels_graded = false;        // kernel at level n is generated by I^n
  bool kernels_nilpotent = false;     // some power of each kernel drops a level
  int nilpotency_bound = 0;
};

FiltrationTowerReport filtration_tower(const ReesPresentation& R, int n_max);

}  // namespace dnc
