#pragma once
#include "dnc/cdga.hpp"
#include "dnc/center.hpp"
#include "dnc/homology.hpp"

namespace dnc {

// A[t^-1][x_1..x_n] with cells d e_i = x_i*t^-1 - f_i; t^-1 has weight -1,
// the x_i weight +1.
struct ReesPresentation {
  SemifreeCDGA cdga;
  CenterPresentation center;
};

ReesPresentation rees_extended(const CenterPresentation& center);

enum class FiberKind { special, generic };

struct DeformationFiber {
  FiberKind kind;
  SemifreeCDGA cdga;
  std::string t_inverse_name;  // generic fiber only: the adjoined t
};

DeformationFiber deformation_fiber(const ReesPresentation& R, FiberKind kind);

// Koszul model of X itself: cells d e_i = -f_i (the sign matching the
// special fiber of the Rees presentation)
SemifreeCDGA koszul_presentation(const CenterPresentation& center);

// free rank-n conormal over the Koszul model, generators of weight 1
DGModuleSpec conormal_model(const CenterPresentation& center);

// Sym of the conormal; agrees with the special fiber generator-by-generator
SemifreeCDGA normal_cone_model(const CenterPresentation& center);

struct WeightComponentReport {
  int weight = 0;
  int cutoff = 0;
  HomologyTable table;
  std::map<std::pair<int, int>, std::vector<std::string>> basis;  // (hdeg, intdeg) -> monomials
  // weight <= 0 only: pi0-level freeness of the component on t^{-|n|}
  bool checked_freeness = false;
  bool free_spanning = false;   // every normal form lands in Q[z]*t^{-|n|}
  bool free_injective = false;  // no relation inside Q[z][t^-1]
};

WeightComponentReport weight_component(const ReesPresentation& R, int weight, int cutoff);

// pi0-level: the weight-1 evaluation x_i -> f_i, t^-1 -> 1 carries the
// weight-1 component onto exactly the ideal (f)
bool weight1_equals_center_ideal(const ReesPresentation& R, int cutoff);

// every weight-w >= 1 monomial factors as (weight-1) * (weight w-1) monomial
bool generated_in_weight_one(const ReesPresentation& R, int max_weight, int cutoff);

// the weight-0 subalgebra of the Rees presentation, free on u_i = x_i t^-1:
// Q[z][u_1..u_n] with cells d e_i = u_i - f_i
struct Weight0Subalgebra {
  SemifreeCDGA cdga;
  std::vector<std::string> u_names;
};

Weight0Subalgebra weight0_subalgebra(const CenterPresentation& center);

// Fil_n as a module over the weight-0 subalgebra: generated by the t-free
// weight-n monomials x^gamma, |gamma| = n
struct AdicFiltrationPiece {
  int level = 0;
  DGModuleSpec module;
  std::vector<Polynomial> pi0_image;  // ideal generators in the ambient ring
};

AdicFiltrationPiece adic_filtration(const ReesPresentation& R, int n);

// dimensions of the fibre I = Fib(O_Y -> O_X) per (hdeg, internal degree),
// computed from the Koszul model: H_0(I) = B_1/dB_2 and H_k(I) = H_{k+1}(B);
// the independent evidence for Fil_1 matching the weight-1 component
std::map<std::pair<int, int>, long> fiber_ideal_dims(const CenterPresentation& center, int cutoff);

}  // namespace dnc
