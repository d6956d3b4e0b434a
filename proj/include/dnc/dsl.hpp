#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dnc/polynomial.hpp"

namespace dnc {

// Parsed problem description.
//
// Grammar (statements in any order, each terminated by ';'):
//   ring Q[v1,...,vm]
//   center (p1, ..., pn)          // may be empty: center ()
//   cutoff N
//   hdeg a..b
//   weight a..b
//   out "path"
//   ring2 Q[w1,...,wk]            // check-excessive only: the ambient A'
//   center2 (q1, ..., qs)         //   the second center f'
//   map (v -> p, ...)             //   ring map A -> A', images over ring2
//   lift ((c11,...,c1s), ..., (cn1,...,cns))  // phi(f_i) = sum_j c_ij * q_j
//
// Polynomials: integer/rational coefficients, explicit '*', '^' powers.
struct ProblemSpec {
  std::vector<std::string> ring_vars;
  std::vector<std::string> center_strs;
  int cutoff = 6;
  int hdeg_lo = 0, hdeg_hi = 3;
  int weight_lo = -3, weight_hi = 3;
  std::string out_path;

  std::vector<std::string> ring2_vars;
  std::vector<std::string> center2_strs;
  std::vector<std::pair<std::string, std::string>> map_entries;  // var -> poly string
  std::vector<std::vector<std::string>> lift_rows;

  // resolved forms
  ContextPtr ambient;
  std::vector<Polynomial> center;
  ContextPtr ambient2;                    // null unless ring2 given
  std::vector<Polynomial> center2;
  std::vector<Polynomial> map_images;     // per ambient variable, over ambient2
  std::vector<std::vector<Polynomial>> lift;  // over ambient2

  bool has_square() const { return ambient2 != nullptr; }
};

ProblemSpec parse_problem(const std::string& text);

// canonical re-print; parse_problem(print_problem(s)) reproduces s
std::string print_problem(const ProblemSpec& spec);

Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text);

}  // namespace dnc
