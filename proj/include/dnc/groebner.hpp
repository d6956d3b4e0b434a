#pragma once
#include <vector>

#include "dnc/polynomial.hpp"

namespace dnc {

// Reduced Groebner basis: monic elements, no head divisible by another head,
// tails fully reduced, sorted ascending by leading monomial.
struct GroebnerBasis {
  ContextPtr ctx;
  MonomialOrder order;
  std::vector<Polynomial> basis;

  bool is_trivial_unit() const;  // basis == {1}
  bool is_zero_ideal() const { return basis.empty(); }
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool in_ideal(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_equal(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                 const MonomialOrder& order);

// generators of I ∩ Q[keep] (indices into the ring), returned in the original ring
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& I, const std::vector<int>& keep);

// I : f^∞ via the Rabinowitsch trick
std::vector<Polynomial> saturate(const std::vector<Polynomial>& I, const Polynomial& f);

// all n-fold products of the generators; I^0 = (1)
std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& I, int n, const ContextPtr& ctx);

// --- Groebner cache hook (installed by the CLI layer; see cache.hpp) ---
class GroebnerCacheBase {
 public:
  virtual ~GroebnerCacheBase() = default;
  virtual bool lookup(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                      GroebnerBasis* out) = 0;
  virtual void store(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                     const GroebnerBasis& gb) = 0;
};

// RAII: while alive, buchberger() on this thread consults the cache.
class GroebnerCacheScope {
 public:
  explicit GroebnerCacheScope(GroebnerCacheBase* cache);
  ~GroebnerCacheScope();
  GroebnerCacheScope(const GroebnerCacheScope&) = delete;
  GroebnerCacheScope& operator=(const GroebnerCacheScope&) = delete;

 private:
  GroebnerCacheBase* previous_;
};

}  // namespace dnc
