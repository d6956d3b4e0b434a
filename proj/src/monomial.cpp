#include "dnc/monomial.hpp"

#include <algorithm>

#include "dnc/error.hpp"

namespace dnc {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  // merge duplicates, drop zeros
  std::vector<std::pair<int, int>> out;
  for (auto& [v, e] : exps_) {
    if (!out.empty() && out.back().first == v)
      out.back().second += e;
    else
      out.push_back({v, e});
  }
  exps_.clear();
  for (auto& [v, e] : out) {
    if (e < 0) fail(Errc::Internal, "negative exponent");
    if (e > 0) exps_.push_back({v, e});
  }
}

Monomial Monomial::var(int index, int exp) { return Monomial({{index, exp}}); }

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(int var) const {
  for (auto& [v, e] : exps_)
    if (v == var) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() && b != o.exps_.end()) {
    if (a->first < b->first)
      r.exps_.push_back(*a++);
    else if (a->first > b->first)
      r.exps_.push_back(*b++);
    else {
      r.exps_.push_back({a->first, a->second + b->second});
      ++a, ++b;
    }
  }
  r.exps_.insert(r.exps_.end(), a, exps_.end());
  r.exps_.insert(r.exps_.end(), b, o.exps_.end());
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.exps_.begin();
  for (auto& [v, e] : exps_) {
    while (b != o.exps_.end() && b->first < v) ++b;
    if (b == o.exps_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
  Monomial r;
  auto a = numerator.exps_.begin();
  for (auto& [v, e] : exps_) {
    while (a != numerator.exps_.end() && a->first < v) r.exps_.push_back(*a++);
    if (a == numerator.exps_.end() || a->first != v || a->second < e)
      fail(Errc::Internal, "monomial division not exact");
    if (a->second > e) r.exps_.push_back({v, a->second - e});
    ++a;
  }
  r.exps_.insert(r.exps_.end(), a, numerator.exps_.end());
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() && j != b.exps_.end()) {
    if (i->first < j->first)
      r.exps_.push_back(*i++);
    else if (i->first > j->first)
      r.exps_.push_back(*j++);
    else {
      r.exps_.push_back({i->first, std::max(i->second, j->second)});
      ++i, ++j;
    }
  }
  r.exps_.insert(r.exps_.end(), i, a.exps_.end());
  r.exps_.insert(r.exps_.end(), j, b.exps_.end());
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() && j != b.exps_.end()) {
    if (i->first < j->first)
      ++i;
    else if (i->first > j->first)
      ++j;
    else {
      r.exps_.push_back({i->first, std::min(i->second, j->second)});
      ++i, ++j;
    }
  }
  return r;
}

}  // namespace dnc
