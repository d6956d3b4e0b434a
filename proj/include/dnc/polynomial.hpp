#pragma once
#include <map>
#include <string>
#include <vector>

#include "dnc/monomial.hpp"
#include "dnc/order.hpp"
#include "dnc/rational.hpp"
#include "dnc/variables.hpp"

namespace dnc {

struct Term {
  Monomial mon;
  Rational coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted descending
// under degrevlex; no zero coefficients are stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Polynomial(ContextPtr ctx, std::vector<Term> terms);

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, int index, int exp = 1);
  static Polynomial from_monomial(ContextPtr ctx, const Monomial& m, const Rational& c = 1);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  int total_degree() const;  // -1 for zero
  int nterms() const { return static_cast<int>(terms_.size()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // leading term under an arbitrary order (linear scan)
  const Term& leading_term(const MonomialOrder& order) const;

  // coefficient of an exact monomial (0 if absent)
  Rational coefficient(const Monomial& m) const;

  // true if no term uses a variable outside `allowed` (by index flag vector)
  bool supported_on(const std::vector<char>& allowed) const;
  bool uses_variable(int index) const;

  // rewrite into `target`, matching variables by name
  Polynomial mapped_to(const ContextPtr& target) const;
  // simultaneous substitution var index -> polynomial (over target ctx);
  // unmapped variables must exist in target by name
  Polynomial substituted(const ContextPtr& target,
                         const std::map<int, Polynomial>& images) const;

  std::string str() const;  // canonical: degrevlex descending

 private:
  void normalize();  // sort + combine + strip zeros
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace dnc
