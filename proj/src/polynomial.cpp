#include "dnc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dnc {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.context(), b.context()))
    fail(Errc::MixedRings, "operands live in different variable contexts");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const int n = ctx_ ? ctx_->size() : 0;
  MonomialOrder drl = MonomialOrder::degrevlex();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return drl.cmp(a.mon, b.mon, n) > 0; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mon == t.mon)
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  terms_.clear();
  for (auto& t : out)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, int index, int exp) {
  if (!ctx || index < 0 || index >= ctx->size())
    fail(Errc::UnknownVariable, "variable index out of range");
  Polynomial p(std::move(ctx));
  p.terms_.push_back({Monomial::var(index, exp), 1});
  return p;
}

Polynomial Polynomial::from_monomial(ContextPtr ctx, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.mon.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  std::vector<Term> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return Polynomial(ctx_ ? ctx_ : o.ctx_, std::move(ts));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial p(ctx_);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  std::map<Monomial, Rational> acc;
  for (auto& a : terms_)
    for (auto& b : o.terms_) acc[a.mon * b.mon] += a.coeff * b.coeff;
  std::vector<Term> ts;
  for (auto& [m, c] : acc)
    if (c != 0) ts.push_back({m, c});
  return Polynomial(ctx_ ? ctx_ : o.ctx_, std::move(ts));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ctx_);
  Polynomial p(ctx_);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(int n) const {
  if (n < 0) fail(Errc::Internal, "negative power");
  Polynomial r = Polynomial::constant(ctx_, 1);
  Polynomial b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ctx_, o.ctx_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) fail(Errc::Internal, "leading term of zero");
  const int n = ctx_->size();
  const Term* best = &terms_[0];
  for (auto& t : terms_)
    if (order.cmp(t.mon, best->mon, n) > 0) best = &t;
  return *best;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.mon == m) return t.coeff;
  return 0;
}

bool Polynomial::supported_on(const std::vector<char>& allowed) const {
  for (auto& t : terms_)
    for (auto& [v, e] : t.mon.exponents())
      if (v >= static_cast<int>(allowed.size()) || !allowed[v]) return false;
  return true;
}

bool Polynomial::uses_variable(int index) const {
  for (auto& t : terms_)
    if (t.mon.exponent(index) > 0) return true;
  return false;
}

Polynomial Polynomial::mapped_to(const ContextPtr& target) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (auto& t : terms_) {
    std::vector<std::pair<int, int>> exps;
    for (auto& [v, e] : t.mon.exponents()) {
      int idx = target->index_of(ctx_->name(v));
      if (idx < 0)
        fail(Errc::UnknownVariable, "variable '" + ctx_->name(v) + "' absent from target ring");
      exps.push_back({idx, e});
    }
    ts.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial(target, std::move(ts));
}

Polynomial Polynomial::substituted(const ContextPtr& target,
                                   const std::map<int, Polynomial>& images) const {
  Polynomial result = Polynomial::zero(target);
  for (auto& t : terms_) {
    Polynomial factor = Polynomial::constant(target, t.coeff);
    for (auto& [v, e] : t.mon.exponents()) {
      auto it = images.find(v);
      if (it != images.end()) {
        factor = factor * it->second.pow(e);
      } else {
        int idx = target->index_of(ctx_->name(v));
        if (idx < 0)
          fail(Errc::UnknownVariable,
               "variable '" + ctx_->name(v) + "' absent from substitution target");
        factor = factor * Polynomial::variable(target, idx, e);
      }
    }
    result = result + factor;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (c == 1) && !t.mon.is_one();
    if (!unit_coeff) os << to_string(c);
    bool first_var = true;
    for (auto& [v, e] : t.mon.exponents()) {
      if (!first_var || !unit_coeff) os << "*";
      os << ctx_->name(v);
      if (e > 1) os << "^" << e;
      first_var = false;
    }
  }
  return os.str();
}

}  // namespace dnc
