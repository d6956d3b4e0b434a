#include "dnc/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dnc {

namespace {

thread_local GroebnerCacheBase* tls_cache = nullptr;

// working representation: terms in a map sorted descending under the order
struct OrderCmp {
  MonomialOrder order;
  int nvars;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order.cmp(a, b, nvars) > 0;  // descending
  }
};
using OrderedTerms = std::map<Monomial, Rational, OrderCmp>;

OrderedTerms to_ordered(const Polynomial& p, const OrderCmp& cmp) {
  OrderedTerms m(cmp);
  for (auto& t : p.terms()) m[t.mon] = t.coeff;
  return m;
}

Polynomial from_ordered(const ContextPtr& ctx, const OrderedTerms& m) {
  std::vector<Term> ts;
  ts.reserve(m.size());
  for (auto& [mon, c] : m) ts.push_back({mon, c});
  return Polynomial(ctx, std::move(ts));
}

// p -= c * mon * g
void submul(OrderedTerms& p, const Rational& c, const Monomial& mon, const Polynomial& g) {
  for (auto& t : g.terms()) {
    Monomial m = t.mon * mon;
    auto it = p.find(m);
    if (it == p.end()) {
      Rational v = -c * t.coeff;
      if (v != 0) p.emplace(std::move(m), std::move(v));
    } else {
      it->second -= c * t.coeff;
      if (it->second == 0) p.erase(it);
    }
  }
}

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& G,
                       const std::vector<Monomial>& heads, const MonomialOrder& order) {
  const ContextPtr& ctx = p.context();
  OrderCmp cmp{order, ctx->size()};
  OrderedTerms work = to_ordered(p, cmp);
  OrderedTerms rem(cmp);
  while (!work.empty()) {
    auto lt = *work.begin();
    bool reduced = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (heads[i].divides(lt.first)) {
        Monomial q = heads[i].divide_into(lt.first);
        Rational c = lt.second / G[i].leading_term(order).coeff;
        submul(work, c, q, G[i]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.insert(lt);
      work.erase(work.begin());
    }
  }
  return from_ordered(ctx, rem);
}

std::vector<Monomial> head_monomials(const std::vector<Polynomial>& G, const MonomialOrder& order) {
  std::vector<Monomial> heads;
  heads.reserve(G.size());
  for (auto& g : G) heads.push_back(g.leading_term(order).mon);
  return heads;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  Monomial l = Monomial::lcm(lf.mon, lg.mon);
  Polynomial a = Polynomial::from_monomial(f.context(), lf.mon.divide_into(l), Rational(1) / lf.coeff);
  Polynomial b = Polynomial::from_monomial(g.context(), lg.mon.divide_into(l), Rational(1) / lg.coeff);
  return a * f - b * g;
}

// minimalize + tail-reduce + monic + sort: the unique reduced basis
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const ContextPtr& ctx,
                                     const MonomialOrder& order) {
  const int n = ctx->size();
  // drop elements whose head is divisible by another head
  std::vector<Monomial> heads = head_monomials(G, order);
  std::vector<char> keep(G.size(), 1);
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (heads[j].divides(heads[i]) && !(heads[i] == heads[j] && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Polynomial> M;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(G[i]);

  // tail-reduce each against the others until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < M.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < M.size(); ++j)
        if (j != i) others.push_back(M[j]);
      if (others.empty()) continue;
      Polynomial r = reduce_full(M[i], others, head_monomials(others, order), order);
      if (r != M[i]) {
        changed = true;
        if (r.is_zero()) {
          M.erase(M.begin() + i);
          --i;
        } else {
          M[i] = r;
        }
      }
    }
  }
  for (auto& g : M) g = g * (Rational(1) / g.leading_term(order).coeff);
  std::sort(M.begin(), M.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.cmp(a.leading_term(order).mon, b.leading_term(order).mon, n) < 0;
  });
  return M;
}

}  // namespace

bool GroebnerBasis::is_trivial_unit() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  ContextPtr ctx;
  for (auto& g : gens) {
    if (!ctx) ctx = g.context();
    else if (!same_ring(ctx, g.context()))
      fail(Errc::MixedRings, "generators live in different variable contexts");
  }
  if (!ctx) return {ctx, order, {}};

  if (tls_cache) {
    GroebnerBasis cached;
    if (tls_cache->lookup(gens, order, &cached)) return cached;
  }

  std::vector<Polynomial> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g);

  const int n = ctx->size();
  auto lcm_of = [&](const Polynomial& a, const Polynomial& b) {
    return Monomial::lcm(a.leading_term(order).mon, b.leading_term(order).mon);
  };

  // pair queue, normal selection strategy (smallest lcm first)
  std::set<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.insert({i, j});

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = lcm_of(G[best->first], G[best->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = lcm_of(G[it->first], G[it->second]);
      if (order.cmp(l, best_lcm, n) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);

    const Monomial& hi = G[i].leading_term(order).mon;
    const Monomial& hj = G[j].leading_term(order).mon;
    // product criterion: coprime heads reduce to zero
    if (Monomial::gcd(hi, hj).is_one()) continue;

    Polynomial s = s_polynomial(G[i], G[j], order);
    Polynomial r = reduce_full(s, G, head_monomials(G, order), order);
    if (!r.is_zero()) {
      G.push_back(r);
      for (size_t k = 0; k + 1 < G.size(); ++k) pairs.insert({k, G.size() - 1});
    }
  }

  GroebnerBasis gb{ctx, order, reduce_basis(std::move(G), ctx, order)};
  if (tls_cache) tls_cache->store(gens, order, gb);
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (gb.basis.empty()) return p;
  if (!same_ring(p.context(), gb.ctx))
    fail(Errc::MixedRings, "polynomial not in the basis' ring");
  return reduce_full(p, gb.basis, head_monomials(gb.basis, gb.order), gb.order);
}

bool in_ideal(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

bool ideal_equal(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                 const MonomialOrder& order) {
  GroebnerBasis gi = buchberger(I, order);
  GroebnerBasis gj = buchberger(J, order);
  if (gi.basis.size() != gj.basis.size()) return false;
  for (size_t k = 0; k < gi.basis.size(); ++k)
    if (gi.basis[k] != gj.basis[k]) return false;
  return true;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& I, const std::vector<int>& keep) {
  if (I.empty()) return {};
  const ContextPtr& ctx = I[0].context();
  std::vector<char> kept(ctx->size(), 0);
  for (int v : keep) {
    if (v < 0 || v >= ctx->size()) fail(Errc::UnknownVariable, "keep index out of range");
    kept[v] = 1;
  }
  // permuted ring: kept variables first, eliminated block last
  std::vector<std::string> names;
  for (int v = 0; v < ctx->size(); ++v)
    if (kept[v]) names.push_back(ctx->name(v));
  int split = static_cast<int>(names.size());
  for (int v = 0; v < ctx->size(); ++v)
    if (!kept[v]) names.push_back(ctx->name(v));
  ContextPtr permuted = make_context(names);

  std::vector<Polynomial> lifted;
  for (auto& g : I) lifted.push_back(g.mapped_to(permuted));
  GroebnerBasis gb = buchberger(lifted, MonomialOrder::block(split));

  std::vector<char> allowed(permuted->size(), 0);
  for (int v = 0; v < split; ++v) allowed[v] = 1;
  std::vector<Polynomial> out;
  for (auto& g : gb.basis)
    if (g.supported_on(allowed)) out.push_back(g.mapped_to(ctx));
  return out;
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& I, const Polynomial& f) {
  if (f.is_zero()) fail(Errc::ZeroSaturant, "cannot saturate at zero");
  const ContextPtr& ctx = f.context();
  for (auto& g : I) require_same_ring(g, f);

  std::vector<std::string> names = ctx->names();
  names.push_back(fresh_name(names, "w"));
  ContextPtr ext = make_context(names);
  int w = ext->size() - 1;

  std::vector<Polynomial> J;
  for (auto& g : I) J.push_back(g.mapped_to(ext));
  J.push_back(Polynomial::variable(ext, w) * f.mapped_to(ext) -
              Polynomial::constant(ext, 1));

  std::vector<int> keep;
  for (int v = 0; v + 1 < ext->size(); ++v) keep.push_back(v);
  std::vector<Polynomial> elim = eliminate(J, keep);
  std::vector<Polynomial> out;
  for (auto& g : elim) out.push_back(g.mapped_to(ctx));
  return out;
}

std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& I, int n, const ContextPtr& ctx) {
  if (n < 0) fail(Errc::Internal, "negative ideal power");
  if (n == 0) return {Polynomial::constant(ctx, 1)};
  if (I.empty()) return {};
  // all n-fold products, combinations with repetition
  std::vector<Polynomial> out;
  std::vector<size_t> idx(n, 0);
  while (true) {
    Polynomial p = Polynomial::constant(ctx, 1);
    for (int k = 0; k < n; ++k) p = p * I[idx[k]];
    out.push_back(p);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == I.size() - 1) --pos;
    if (pos < 0) break;
    size_t v = idx[pos] + 1;
    for (int k = pos; k < n; ++k) idx[k] = v;
  }
  return out;
}

GroebnerCacheScope::GroebnerCacheScope(GroebnerCacheBase* cache) : previous_(tls_cache) {
  tls_cache = cache;
}
GroebnerCacheScope::~GroebnerCacheScope() { tls_cache = previous_; }

}  // namespace dnc
