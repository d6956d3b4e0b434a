#pragma once
#include <utility>
#include <vector>

namespace dnc {

// Sparse exponent vector: (variable index, exponent > 0) sorted by index.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> exps);

  static Monomial one() { return Monomial(); }
  static Monomial var(int index, int exp = 1);

  bool is_one() const { return exps_.empty(); }
  int total_degree() const;
  int exponent(int var) const;
  int nvars_used() const { return static_cast<int>(exps_.size()); }
  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // requires divides()
  Monomial divide_into(const Monomial& numerator) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // representation ordering, NOT a monomial order; for map keys only
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }
  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::pair<int, int>> exps_;
};

}  // namespace dnc
