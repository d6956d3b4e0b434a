#pragma once
#include "dnc/polynomial.hpp"

namespace dnc {

// A closed immersion X = Spec(A//(f_1..f_n)) into Y = Spec(A), A = Q[z].
// Generator lists may be redundant or non-regular; they are never minimized.
// Pure polynomial data: both the dg engine and the classical oracle consume
// it, neither through the other.
struct CenterPresentation {
  ContextPtr ambient;
  std::vector<Polynomial> gens;
  std::vector<std::string> x_names;  // Rees generators, collision-free
  std::vector<std::string> e_names;  // Koszul cells
  std::string t_name;                // the coordinate t^-1

  int size() const { return static_cast<int>(gens.size()); }
};

CenterPresentation make_center(const ContextPtr& ambient, const std::vector<Polynomial>& gens);

}  // namespace dnc
