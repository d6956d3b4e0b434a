#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnc/groebner.hpp"
#include "dnc/polynomial.hpp"

namespace dnc {

// A cell of a semifree cdga: homological degree, Gm-weight and the internal
// degree used to slice chain groups into finite pieces. intdeg -1 means
// "assign from the differential" (max term degree, else 1).
struct GeneratorSpec {
  std::string name;
  int hdeg = 0;
  int weight = 0;
  int intdeg = -1;
};

struct Pi0Presentation {
  ContextPtr ring;  // base variables + hdeg-0 generators, declaration order
  GroebnerBasis gb;
  std::vector<Polynomial> ideal_gens() const { return gb.basis; }
};

// Free graded-commutative algebra over Q on base variables (hdeg 0, weight 0,
// intdeg 1) and bigraded generators, with a differential of hdeg -1 that
// preserves the weight. Odd-hdeg generators square to zero; elements are
// polynomials in the combined context with odd exponents <= 1 and Koszul
// signs handled by mul()/d().
class SemifreeCDGA {
 public:
  const ContextPtr& base() const { return base_; }
  const ContextPtr& full() const { return full_; }
  const std::vector<GeneratorSpec>& gens() const { return gens_; }
  int nvars() const { return full_->size(); }
  int nbase() const { return base_->size(); }

  int hdeg_of_var(int v) const { return hdeg_[v]; }
  int weight_of_var(int v) const { return weight_[v]; }
  int intdeg_of_var(int v) const { return intdeg_[v]; }
  bool odd(int v) const { return hdeg_[v] % 2 != 0; }
  const Polynomial& diff_of_var(int v) const { return diff_[v]; }

  // gradings of monomials/polynomials; hdeg/weight require homogeneity for
  // polynomials (Internal error otherwise), intdeg returns the max
  int hdeg_of(const Monomial& m) const;
  int weight_of(const Monomial& m) const;
  int intdeg_of(const Monomial& m) const;
  int hdeg_of(const Polynomial& p) const;
  int weight_of(const Polynomial& p) const;
  bool is_weight_homogeneous(const Polynomial& p, int* weight_out) const;
  bool is_hdeg_homogeneous(const Polynomial& p, int* hdeg_out) const;
  bool is_intdeg_homogeneous(const Polynomial& p, int* intdeg_out) const;

  // graded-commutative product with Koszul signs; rejects monomials with
  // squared odd variables by mapping them to zero
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul_mon(const Monomial& a, const Monomial& b, int* sign_out) const;
  Polynomial d(const Polynomial& p) const;

  Polynomial poly(const std::string& expr) const;  // parse over the full context
  Polynomial var(const std::string& name) const;

  Pi0Presentation pi0() const;

  int gen_index(const std::string& name) const;       // into gens()
  int var_index(const std::string& name) const;       // into full context
  bool has_gen(const std::string& name) const { return gen_index(name) >= 0; }

  friend class CDGABuilder;

 private:
  ContextPtr base_;
  ContextPtr full_;
  std::vector<GeneratorSpec> gens_;
  std::vector<Polynomial> diff_;  // per full variable; zero for base vars
  std::vector<int> hdeg_, weight_, intdeg_;
};

// Incremental constructor; generators may only reference earlier cells in
// their differentials (semifree filtration).
class CDGABuilder {
 public:
  explicit CDGABuilder(ContextPtr base);

  // diff_expr parsed over base + generators added so far; empty = zero
  CDGABuilder& add(const GeneratorSpec& spec, const std::string& diff_expr = "");
  CDGABuilder& add(const GeneratorSpec& spec, const Polynomial& diff);

  const ContextPtr& current_context() const { return ctx_; }
  Polynomial poly(const std::string& expr) const;

  // validates: degree/weight homogeneity of differentials, d^2 = 0
  SemifreeCDGA build() const;

 private:
  ContextPtr base_;
  ContextPtr ctx_;
  std::vector<GeneratorSpec> gens_;
  std::vector<Polynomial> diffs_;
};

SemifreeCDGA make_cdga(const ContextPtr& base, const std::vector<GeneratorSpec>& gens,
                       const std::vector<Polynomial>& diffs);

// --- operations ---

// adjoin one hdeg-1 cell per element, d e_i = elem_i
SemifreeCDGA derived_quotient(const SemifreeCDGA& A,
                              const std::vector<std::pair<Polynomial, int>>& elems,
                              const std::string& cell_stem = "e");

struct TensorResult {
  SemifreeCDGA algebra;
  std::vector<std::pair<std::string, std::string>> renames;  // applied to the right factor
};

// coproduct over the shared base; generators named in `share` are identified
// (must agree in degrees, weight and differential)
TensorResult derived_tensor(const SemifreeCDGA& A1, const SemifreeCDGA& A2,
                            const std::vector<std::string>& share = {});

// substitute variables (base or hdeg-0 generators) and drop them from the
// presentation; images are expressions over the remaining variables
SemifreeCDGA base_change(const SemifreeCDGA& A, const std::map<std::string, std::string>& subst);
SemifreeCDGA base_change(const SemifreeCDGA& A, const std::map<std::string, Polynomial>& subst);

struct LocalizeResult {
  SemifreeCDGA algebra;
  std::string inverse_name;
  std::string cell_name;
};

// adjoin g^{-1} (hdeg 0, weight -w(g)) and a relation cell r with
// d r = g*g^{-1} - 1
LocalizeResult localize(const SemifreeCDGA& A, const std::string& gen_name);

// remove a contractible pair: d e = c*s - p with s a free hdeg-0 generator
// not occurring in p, e occurring in no other differential
SemifreeCDGA cancel_cell(const SemifreeCDGA& A, const std::string& e_name,
                         const std::string& s_name);

// Finite free dg-module presented over a semifree algebra. Differentials are
// algebra-linear combinations of the module generators, expressed over the
// context algebra.full() + module generator names.
struct DGModuleSpec {
  SemifreeCDGA algebra;
  std::vector<GeneratorSpec> gens;
  std::vector<Polynomial> diffs;
  ContextPtr module_context() const;  // algebra vars followed by module gens
};

// free graded-commutative algebra on the module generators over M.algebra
SemifreeCDGA sym_algebra(const DGModuleSpec& M);

struct HomogenizeResult {
  SemifreeCDGA algebra;
  bool changed = false;
  std::string h_name;  // empty if unchanged
};

// make every differential internal-degree homogeneous by inserting powers of
// a fresh weight-0 base variable h of internal degree 1
HomogenizeResult homogenize(const SemifreeCDGA& A);

// exact presentation equality after matching generators by name (order-free)
bool same_presentation_by_name(const SemifreeCDGA& A, const SemifreeCDGA& B);

// search for a bijection base-identical, (hdeg, weight, intdeg)-preserving,
// differential-compatible; returns the generator mapping A -> B if found
std::optional<std::map<std::string, std::string>> find_presentation_isomorphism(
    const SemifreeCDGA& A, const SemifreeCDGA& B);

// Morphism of cdgas determined by images of every variable of src.
struct CDGAHom {
  const SemifreeCDGA* src;
  const SemifreeCDGA* dst;
  std::map<int, Polynomial> images;  // per src full-variable index, over dst.full()

  Polynomial apply(const Polynomial& p) const;
  bool commutes_with_d(std::string* witness = nullptr) const;
};

CDGAHom make_hom(const SemifreeCDGA& src, const SemifreeCDGA& dst,
                 const std::map<std::string, std::string>& images);

}  // namespace dnc
