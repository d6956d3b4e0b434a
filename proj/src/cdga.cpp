#include "dnc/cdga.hpp"

#include <algorithm>
#include <functional>

#include "dnc/dsl.hpp"

namespace dnc {

// --- gradings ---

int SemifreeCDGA::hdeg_of(const Monomial& m) const {
  int d = 0;
  for (auto& [v, e] : m.exponents()) d += hdeg_[v] * e;
  return d;
}

int SemifreeCDGA::weight_of(const Monomial& m) const {
  int w = 0;
  for (auto& [v, e] : m.exponents()) w += weight_[v] * e;
  return w;
}

int SemifreeCDGA::intdeg_of(const Monomial& m) const {
  int d = 0;
  for (auto& [v, e] : m.exponents()) d += intdeg_[v] * e;
  return d;
}

bool SemifreeCDGA::is_weight_homogeneous(const Polynomial& p, int* weight_out) const {
  if (p.is_zero()) return true;
  int w = weight_of(p.terms()[0].mon);
  for (auto& t : p.terms())
    if (weight_of(t.mon) != w) return false;
  if (weight_out) *weight_out = w;
  return true;
}

bool SemifreeCDGA::is_hdeg_homogeneous(const Polynomial& p, int* hdeg_out) const {
  if (p.is_zero()) return true;
  int k = hdeg_of(p.terms()[0].mon);
  for (auto& t : p.terms())
    if (hdeg_of(t.mon) != k) return false;
  if (hdeg_out) *hdeg_out = k;
  return true;
}

bool SemifreeCDGA::is_intdeg_homogeneous(const Polynomial& p, int* intdeg_out) const {
  if (p.is_zero()) return true;
  int d = intdeg_of(p.terms()[0].mon);
  for (auto& t : p.terms())
    if (intdeg_of(t.mon) != d) return false;
  if (intdeg_out) *intdeg_out = d;
  return true;
}

int SemifreeCDGA::hdeg_of(const Polynomial& p) const {
  int k = 0;
  if (!is_hdeg_homogeneous(p, &k)) fail(Errc::Internal, "inhomogeneous hdeg");
  return k;
}

int SemifreeCDGA::weight_of(const Polynomial& p) const {
  int w = 0;
  if (!is_weight_homogeneous(p, &w)) fail(Errc::Internal, "inhomogeneous weight");
  return w;
}

// --- Koszul products ---

Polynomial SemifreeCDGA::mul_mon(const Monomial& a, const Monomial& b, int* sign_out) const {
  // collect odd variables; a squared odd variable kills the product
  std::vector<int> odds_a, odds_b;
  for (auto& [v, e] : a.exponents()) {
    if (odd(v)) {
      if (e > 1) return Polynomial::zero(full_);
      odds_a.push_back(v);
    }
  }
  for (auto& [v, e] : b.exponents()) {
    if (odd(v)) {
      if (e > 1) return Polynomial::zero(full_);
      odds_b.push_back(v);
    }
  }
  for (int v : odds_a)
    if (std::binary_search(odds_b.begin(), odds_b.end(), v)) return Polynomial::zero(full_);
  // inversions between the two sorted lists give the Koszul sign
  long inv = 0;
  for (int va : odds_a)
    for (int vb : odds_b)
      if (va > vb) ++inv;
  int sign = (inv % 2 == 0) ? 1 : -1;
  if (sign_out) *sign_out = sign;
  return Polynomial::from_monomial(full_, a * b, sign);
}

Polynomial SemifreeCDGA::mul(const Polynomial& a, const Polynomial& b) const {
  Polynomial out = Polynomial::zero(full_);
  for (auto& ta : a.terms())
    for (auto& tb : b.terms())
      out = out + mul_mon(ta.mon, tb.mon, nullptr) * (ta.coeff * tb.coeff);
  return out;
}

Polynomial SemifreeCDGA::d(const Polynomial& p) const {
  Polynomial out = Polynomial::zero(full_);
  for (auto& t : p.terms()) {
    // Leibniz over the canonical ascending-variable form of the monomial
    int prefix_parity = 0;
    const auto& exps = t.mon.exponents();
    for (size_t i = 0; i < exps.size(); ++i) {
      auto [v, e] = exps[i];
      if (!diff_[v].is_zero()) {
        // m = A * v^e * B; contribution: +/- A * (e v^{e-1}) * d(v) * B
        std::vector<std::pair<int, int>> left(exps.begin(), exps.begin() + i);
        if (e > 1) left.push_back({v, e - 1});
        std::vector<std::pair<int, int>> right(exps.begin() + i + 1, exps.end());
        Rational c = t.coeff * e;
        if (prefix_parity % 2) c = -c;
        Polynomial piece = mul(Polynomial::from_monomial(full_, Monomial(std::move(left)), c),
                               diff_[v]);
        piece = mul(piece, Polynomial::from_monomial(full_, Monomial(std::move(right)), 1));
        out = out + piece;
      }
      if (odd(v)) prefix_parity += e;
    }
  }
  return out;
}

Polynomial SemifreeCDGA::poly(const std::string& expr) const {
  return parse_polynomial(full_, expr);
}

Polynomial SemifreeCDGA::var(const std::string& name) const {
  int idx = full_->index_of(name);
  if (idx < 0) fail(Errc::UnknownVariable, "no variable '" + name + "'");
  return Polynomial::variable(full_, idx);
}

int SemifreeCDGA::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

int SemifreeCDGA::var_index(const std::string& name) const { return full_->index_of(name); }

Pi0Presentation SemifreeCDGA::pi0() const {
  std::vector<std::string> names;
  for (int v = 0; v < nbase(); ++v) names.push_back(base_->name(v));
  for (auto& g : gens_)
    if (g.hdeg == 0) names.push_back(g.name);
  ContextPtr ring = make_context(names);
  std::vector<Polynomial> ideal;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].hdeg == 1) {
      const Polynomial& dg = diff_[nbase() + i];
      if (!dg.is_zero()) ideal.push_back(dg.mapped_to(ring));
    }
  }
  return {ring, buchberger(ideal, MonomialOrder::degrevlex())};
}

// --- builder ---

CDGABuilder::CDGABuilder(ContextPtr base) : base_(std::move(base)), ctx_(base_) {}

Polynomial CDGABuilder::poly(const std::string& expr) const { return parse_polynomial(ctx_, expr); }

CDGABuilder& CDGABuilder::add(const GeneratorSpec& spec, const std::string& diff_expr) {
  Polynomial dp = diff_expr.empty() ? Polynomial::zero(ctx_) : parse_polynomial(ctx_, diff_expr);
  return add(spec, dp);
}

CDGABuilder& CDGABuilder::add(const GeneratorSpec& spec, const Polynomial& diff) {
  if (spec.hdeg < 0) fail(Errc::DegreeMismatch, "negative homological degree");
  if (ctx_->has(spec.name)) fail(Errc::NameCollision, "generator '" + spec.name + "' already present");
  if (!same_ring(diff.context(), ctx_) && !diff.is_zero())
    fail(Errc::MixedRings, "differential of '" + spec.name + "' not over the current cells");
  gens_.push_back(spec);
  diffs_.push_back(diff);
  std::vector<std::string> names = ctx_->names();
  names.push_back(spec.name);
  ctx_ = make_context(names);
  return *this;
}

SemifreeCDGA CDGABuilder::build() const {
  SemifreeCDGA A;
  A.base_ = base_;
  A.full_ = ctx_;
  A.gens_ = gens_;
  const int nb = base_->size();
  const int nv = ctx_->size();
  A.hdeg_.assign(nv, 0);
  A.weight_.assign(nv, 0);
  A.intdeg_.assign(nv, 1);
  A.diff_.assign(nv, Polynomial::zero(ctx_));
  for (size_t i = 0; i < gens_.size(); ++i) {
    int v = nb + static_cast<int>(i);
    A.hdeg_[v] = gens_[i].hdeg;
    A.weight_[v] = gens_[i].weight;
    A.diff_[v] = diffs_[i].is_zero() ? Polynomial::zero(ctx_) : diffs_[i].mapped_to(ctx_);
  }
  // internal degrees resolve in declaration order
  for (size_t i = 0; i < gens_.size(); ++i) {
    int v = nb + static_cast<int>(i);
    if (gens_[i].intdeg >= 0) {
      A.intdeg_[v] = gens_[i].intdeg;
    } else {
      int d = 1;
      for (auto& t : A.diff_[v].terms()) d = std::max(d, A.intdeg_of(t.mon));
      A.intdeg_[v] = d;
    }
    A.gens_[i].intdeg = A.intdeg_[v];
  }
  // validate differentials
  for (size_t i = 0; i < gens_.size(); ++i) {
    int v = nb + static_cast<int>(i);
    const Polynomial& dv = A.diff_[v];
    if (gens_[i].hdeg == 0 && !dv.is_zero())
      fail(Errc::DegreeMismatch, "hdeg-0 generator '" + gens_[i].name + "' has nonzero differential");
    int k = 0, w = 0;
    if (!A.is_hdeg_homogeneous(dv, &k) || (!dv.is_zero() && k != gens_[i].hdeg - 1))
      fail(Errc::DegreeMismatch, "d(" + gens_[i].name + ") is not of homological degree " +
                                     std::to_string(gens_[i].hdeg - 1));
    if (!A.is_weight_homogeneous(dv, &w) || (!dv.is_zero() && w != gens_[i].weight))
      fail(Errc::WeightMismatch, "d(" + gens_[i].name + ") does not preserve the weight");
    for (auto& t : dv.terms())
      if (A.intdeg_of(t.mon) > A.intdeg_[v])
        fail(Errc::DegreeMismatch, "d(" + gens_[i].name + ") exceeds its internal degree");
  }
  // d^2 = 0, generator by generator (Leibniz extends this to the algebra)
  for (size_t i = 0; i < gens_.size(); ++i) {
    int v = nb + static_cast<int>(i);
    Polynomial dd = A.d(A.diff_[v]);
    if (!dd.is_zero())
      fail(Errc::DSquareNonzero,
           "d^2(" + gens_[i].name + ") = " + dd.str());
  }
  return A;
}

SemifreeCDGA make_cdga(const ContextPtr& base, const std::vector<GeneratorSpec>& gens,
                       const std::vector<Polynomial>& diffs) {
  if (gens.size() != diffs.size()) fail(Errc::Internal, "gens/diffs size mismatch");
  CDGABuilder b(base);
  for (size_t i = 0; i < gens.size(); ++i) b.add(gens[i], diffs[i]);
  return b.build();
}

// --- operations ---

SemifreeCDGA derived_quotient(const SemifreeCDGA& A,
                              const std::vector<std::pair<Polynomial, int>>& elems,
                              const std::string& cell_stem) {
  CDGABuilder b(A.base());
  for (size_t i = 0; i < A.gens().size(); ++i)
    b.add(A.gens()[i], A.diff_of_var(A.nbase() + static_cast<int>(i)).mapped_to(b.current_context()));
  std::vector<std::string> taken = b.current_context()->names();
  int counter = 1;
  for (auto& [elem, w] : elems) {
    Polynomial cyc = elem.is_zero() ? Polynomial::zero(b.current_context())
                                    : elem.mapped_to(b.current_context());
    if (!cyc.is_zero()) {
      // must be an hdeg-0 element of the stated weight
      for (auto& t : cyc.terms()) {
        if (A.hdeg_of(t.mon) != 0) fail(Errc::NotDegreeZero, "quotient element has positive hdeg");
        if (A.weight_of(t.mon) != w) fail(Errc::WeightMismatch, "quotient element weight mismatch");
      }
    }
    std::string name = fresh_name(taken, cell_stem + std::to_string(counter));
    ++counter;
    taken.push_back(name);
    b.add({name, 1, w, -1}, cyc);
  }
  return b.build();
}

TensorResult derived_tensor(const SemifreeCDGA& A1, const SemifreeCDGA& A2,
                            const std::vector<std::string>& share) {
  if (!same_ring(A1.base(), A2.base()))
    fail(Errc::BaseMismatch, "tensor factors have different base rings");
  auto shared = [&](const std::string& n) {
    return std::find(share.begin(), share.end(), n) != share.end();
  };
  for (auto& s : share) {
    int i1 = A1.gen_index(s), i2 = A2.gen_index(s);
    if (i1 < 0 || i2 < 0) fail(Errc::UnknownVariable, "shared generator '" + s + "' missing");
    const GeneratorSpec& g1 = A1.gens()[i1];
    const GeneratorSpec& g2 = A2.gens()[i2];
    if (g1.hdeg != g2.hdeg || g1.weight != g2.weight || g1.intdeg != g2.intdeg)
      fail(Errc::BaseMismatch, "shared generator '" + s + "' has mismatched degrees");
  }

  CDGABuilder b(A1.base());
  for (size_t i = 0; i < A1.gens().size(); ++i)
    b.add(A1.gens()[i], A1.diff_of_var(A1.nbase() + static_cast<int>(i)).mapped_to(b.current_context()));

  TensorResult result{SemifreeCDGA{}, {}};
  std::vector<std::string> taken = b.current_context()->names();
  std::map<std::string, std::string> rename;  // A2 names -> result names
  for (int v = 0; v < A2.nbase(); ++v) rename[A2.base()->name(v)] = A2.base()->name(v);
  for (auto& g : A2.gens())
    if (shared(g.name)) rename[g.name] = g.name;

  for (size_t i = 0; i < A2.gens().size(); ++i) {
    const GeneratorSpec& g = A2.gens()[i];
    if (shared(g.name)) {
      // differential equality under the partial rename
      const Polynomial& d2 = A2.diff_of_var(A2.nbase() + static_cast<int>(i));
      const Polynomial& d1 = A1.diff_of_var(A1.nbase() + A1.gen_index(g.name));
      std::map<int, Polynomial> images;
      for (auto& [from, to] : rename) {
        int src = A2.full()->index_of(from);
        int dst = b.current_context()->index_of(to);
        if (src >= 0 && dst >= 0)
          images[src] = Polynomial::variable(b.current_context(), dst);
      }
      if (d2.substituted(b.current_context(), images) != d1.mapped_to(b.current_context()))
        fail(Errc::BaseMismatch, "shared generator '" + g.name + "' has mismatched differential");
      continue;
    }
    std::string name = g.name;
    if (std::find(taken.begin(), taken.end(), name) != taken.end()) {
      name = fresh_name(taken, g.name);
      result.renames.push_back({g.name, name});
    }
    rename[g.name] = name;
    taken.push_back(name);
    const Polynomial& dg = A2.diff_of_var(A2.nbase() + static_cast<int>(i));
    std::map<int, Polynomial> images;
    for (auto& [from, to] : rename) {
      int src = A2.full()->index_of(from);
      int dst = b.current_context()->index_of(to);
      if (src >= 0 && dst >= 0) images[src] = Polynomial::variable(b.current_context(), dst);
    }
    GeneratorSpec spec = g;
    spec.name = name;
    b.add(spec, dg.substituted(b.current_context(), images));
  }
  result.algebra = b.build();
  return result;
}

SemifreeCDGA base_change(const SemifreeCDGA& A, const std::map<std::string, Polynomial>& subst) {
  // drop substituted variables; keep everything else verbatim
  std::vector<char> removed(A.nvars(), 0);
  for (auto& [name, img] : subst) {
    int v = A.var_index(name);
    if (v < 0) fail(Errc::UnknownVariable, "base_change of unknown variable '" + name + "'");
    if (A.hdeg_of_var(v) != 0) fail(Errc::NotDegreeZero, "base_change target must be hdeg 0");
    // identity entries are no-ops
    if (img.nterms() == 1 && img.terms()[0].coeff == 1 && img.terms()[0].mon.total_degree() == 1 &&
        img.context()->name(img.terms()[0].mon.exponents()[0].first) == name)
      continue;
    removed[v] = 1;
  }

  std::vector<std::string> new_base;
  for (int v = 0; v < A.nbase(); ++v)
    if (!removed[v]) new_base.push_back(A.base()->name(v));
  CDGABuilder b(make_context(new_base));

  // substitution images over the new full context, built lazily per generator
  for (size_t i = 0; i < A.gens().size(); ++i) {
    int v = A.nbase() + static_cast<int>(i);
    if (removed[v]) continue;
    const ContextPtr& cur = b.current_context();
    std::map<int, Polynomial> images;
    for (auto& [name, img] : subst) {
      int src = A.var_index(name);
      if (!removed[src]) continue;
      images[src] = img.mapped_to(cur);
    }
    Polynomial dg = A.diff_of_var(v).substituted(cur, images);
    b.add(A.gens()[i], dg);
  }
  SemifreeCDGA out = b.build();
  // weight/hdeg sanity of the substitution itself
  for (auto& [name, img] : subst) {
    int v = A.var_index(name);
    if (!removed[v]) continue;
    if (img.is_zero()) continue;
    Polynomial mapped = img.mapped_to(out.full());
    int w = 0;
    if (!out.is_weight_homogeneous(mapped, &w) || w != A.weight_of_var(v))
      fail(Errc::WeightMismatch, "substitution image of '" + name + "' changes the weight");
    int k = 0;
    if (!out.is_hdeg_homogeneous(mapped, &k) || k != 0)
      fail(Errc::DegreeMismatch, "substitution image of '" + name + "' is not hdeg 0");
  }
  return out;
}

SemifreeCDGA base_change(const SemifreeCDGA& A, const std::map<std::string, std::string>& subst) {
  std::map<std::string, Polynomial> images;
  for (auto& [name, expr] : subst) images[name] = parse_polynomial(A.full(), expr);
  return base_change(A, images);
}

LocalizeResult localize(const SemifreeCDGA& A, const std::string& gen_name) {
  int v = A.var_index(gen_name);
  if (v < 0) fail(Errc::UnknownVariable, "localize at unknown variable '" + gen_name + "'");
  if (A.hdeg_of_var(v) != 0) fail(Errc::NotDegreeZero, "localize only at hdeg-0 variables");

  std::vector<std::string> taken = A.full()->names();
  std::string inv = fresh_name(taken, gen_name + "_inv");
  taken.push_back(inv);
  std::string cell = fresh_name(taken, "r_" + gen_name);

  CDGABuilder b(A.base());
  for (size_t i = 0; i < A.gens().size(); ++i)
    b.add(A.gens()[i], A.diff_of_var(A.nbase() + static_cast<int>(i)).mapped_to(b.current_context()));
  // inverses of weighted positive-degree variables carry internal degree 0 so
  // weight pins their exponent; everything else costs degree 1 to keep slices finite
  int intdeg_inv = (A.intdeg_of_var(v) >= 1 && A.weight_of_var(v) != 0) ? 0 : 1;
  b.add({inv, 0, -A.weight_of_var(v), intdeg_inv});
  const ContextPtr& cur = b.current_context();
  Polynomial relation = Polynomial::variable(cur, cur->index_of(gen_name)) *
                            Polynomial::variable(cur, cur->index_of(inv)) -
                        Polynomial::constant(cur, 1);
  b.add({cell, 1, 0, -1}, relation);
  return {b.build(), inv, cell};
}

SemifreeCDGA cancel_cell(const SemifreeCDGA& A, const std::string& e_name,
                         const std::string& s_name) {
  int ev = A.var_index(e_name);
  int sv = A.var_index(s_name);
  if (ev < 0 || sv < 0) fail(Errc::UnknownVariable, "cancel_cell names unknown");
  if (ev < A.nbase() || sv < A.nbase())
    fail(Errc::CellNotCancellable, "cancel_cell applies to generators, not base variables");
  if (A.hdeg_of_var(ev) != 1 || A.hdeg_of_var(sv) != 0)
    fail(Errc::CellNotCancellable, "expected an (hdeg 1, hdeg 0) pair");

  const Polynomial& de = A.diff_of_var(ev);
  Rational c = de.coefficient(Monomial::var(sv));
  if (c == 0) fail(Errc::CellNotCancellable, "d(" + e_name + ") has no linear '" + s_name + "' term");
  // p = s - d(e)/c, must avoid s and e
  Polynomial p = Polynomial::variable(A.full(), sv) - de * (Rational(1) / c);
  if (p.uses_variable(sv) || p.uses_variable(ev))
    fail(Errc::CellNotCancellable, "'" + s_name + "' occurs nonlinearly in d(" + e_name + ")");
  for (int v = 0; v < A.nvars(); ++v) {
    if (v == ev) continue;
    if (A.diff_of_var(v).uses_variable(ev))
      fail(Errc::CellNotCancellable, "'" + e_name + "' occurs in another differential");
  }

  CDGABuilder b(A.base());
  for (size_t i = 0; i < A.gens().size(); ++i) {
    int v = A.nbase() + static_cast<int>(i);
    if (v == ev || v == sv) continue;
    const ContextPtr& cur = b.current_context();
    std::map<int, Polynomial> images;
    images[sv] = p.mapped_to(cur);
    b.add(A.gens()[i], A.diff_of_var(v).substituted(cur, images));
  }
  return b.build();
}

ContextPtr DGModuleSpec::module_context() const {
  std::vector<std::string> names = algebra.full()->names();
  for (auto& g : gens) names.push_back(g.name);
  return make_context(names);
}

SemifreeCDGA sym_algebra(const DGModuleSpec& M) {
  CDGABuilder b(M.algebra.base());
  for (size_t i = 0; i < M.algebra.gens().size(); ++i)
    b.add(M.algebra.gens()[i],
          M.algebra.diff_of_var(M.algebra.nbase() + static_cast<int>(i))
              .mapped_to(b.current_context()));
  for (size_t i = 0; i < M.gens.size(); ++i) {
    const Polynomial& dg = M.diffs.size() > i ? M.diffs[i] : Polynomial();
    if (dg.is_zero())
      b.add(M.gens[i], Polynomial::zero(b.current_context()));
    else
      b.add(M.gens[i], dg.mapped_to(b.current_context()));
  }
  return b.build();
}

HomogenizeResult homogenize(const SemifreeCDGA& A) {
  bool needs = false;
  for (int v = 0; v < A.nvars(); ++v)
    if (!A.is_intdeg_homogeneous(A.diff_of_var(v), nullptr) ||
        (!A.diff_of_var(v).is_zero() &&
         A.intdeg_of(A.diff_of_var(v).terms()[0].mon) != A.intdeg_of_var(v)))
      needs = true;
  if (!needs) return {A, false, ""};

  std::string h = fresh_name(A.full()->names(), "h");
  std::vector<std::string> new_base = A.base()->names();
  new_base.push_back(h);
  CDGABuilder b(make_context(new_base));
  for (size_t i = 0; i < A.gens().size(); ++i) {
    int v = A.nbase() + static_cast<int>(i);
    const ContextPtr& cur = b.current_context();
    int hidx = cur->index_of(h);
    Polynomial dg = Polynomial::zero(cur);
    int target = A.intdeg_of_var(v);
    for (auto& t : A.diff_of_var(v).terms()) {
      int deficit = target - A.intdeg_of(t.mon);
      if (deficit < 0)
        fail(Errc::DegreeMismatch,
             "differential of '" + A.gens()[i].name + "' exceeds its internal degree");
      Polynomial mono = Polynomial::from_monomial(A.full(), t.mon, t.coeff).mapped_to(cur);
      if (deficit > 0) mono = mono * Polynomial::variable(cur, hidx, deficit);
      dg = dg + mono;
    }
    GeneratorSpec spec = A.gens()[i];
    b.add(spec, dg);
  }
  return {b.build(), true, h};
}

// --- comparisons ---

bool same_presentation_by_name(const SemifreeCDGA& A, const SemifreeCDGA& B) {
  if (!same_ring(A.base(), B.base())) return false;
  if (A.gens().size() != B.gens().size()) return false;
  for (auto& g : A.gens()) {
    int j = B.gen_index(g.name);
    if (j < 0) return false;
    const GeneratorSpec& h = B.gens()[j];
    if (g.hdeg != h.hdeg || g.weight != h.weight || g.intdeg != h.intdeg) return false;
    const Polynomial& da = A.diff_of_var(A.nbase() + A.gen_index(g.name));
    const Polynomial& db = B.diff_of_var(B.nbase() + j);
    if (da.is_zero() != db.is_zero()) return false;
    if (!da.is_zero() && da.mapped_to(B.full()) != db) return false;
  }
  return true;
}

namespace {

bool try_assign(const SemifreeCDGA& A, const SemifreeCDGA& B, size_t pos,
                std::vector<int>& image, std::vector<char>& used) {
  if (pos == A.gens().size()) {
    // verify differentials under the complete assignment
    std::map<int, Polynomial> images;
    for (int v = 0; v < A.nbase(); ++v) {
      int dst = B.full()->index_of(A.base()->name(v));
      images[v] = Polynomial::variable(B.full(), dst);
    }
    for (size_t i = 0; i < A.gens().size(); ++i)
      images[A.nbase() + static_cast<int>(i)] =
          Polynomial::variable(B.full(), B.nbase() + image[i]);
    for (size_t i = 0; i < A.gens().size(); ++i) {
      Polynomial lhs = A.diff_of_var(A.nbase() + static_cast<int>(i)).substituted(B.full(), images);
      const Polynomial& rhs = B.diff_of_var(B.nbase() + image[i]);
      if (lhs != rhs) return false;
    }
    return true;
  }
  const GeneratorSpec& g = A.gens()[pos];
  for (size_t j = 0; j < B.gens().size(); ++j) {
    if (used[j]) continue;
    const GeneratorSpec& h = B.gens()[j];
    if (g.hdeg != h.hdeg || g.weight != h.weight || g.intdeg != h.intdeg) continue;
    if (A.diff_of_var(A.nbase() + static_cast<int>(pos)).nterms() !=
        B.diff_of_var(B.nbase() + static_cast<int>(j)).nterms())
      continue;
    image[pos] = static_cast<int>(j);
    used[j] = 1;
    if (try_assign(A, B, pos + 1, image, used)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_presentation_isomorphism(
    const SemifreeCDGA& A, const SemifreeCDGA& B) {
  if (!same_ring(A.base(), B.base())) return std::nullopt;
  if (A.gens().size() != B.gens().size()) return std::nullopt;
  std::vector<int> image(A.gens().size(), -1);
  std::vector<char> used(B.gens().size(), 0);
  if (!try_assign(A, B, 0, image, used)) return std::nullopt;
  std::map<std::string, std::string> out;
  for (size_t i = 0; i < A.gens().size(); ++i) out[A.gens()[i].name] = B.gens()[image[i]].name;
  return out;
}

// --- morphisms ---

Polynomial CDGAHom::apply(const Polynomial& p) const {
  Polynomial out = Polynomial::zero(dst->full());
  for (auto& t : p.terms()) {
    Polynomial factor = Polynomial::constant(dst->full(), t.coeff);
    for (auto& [v, e] : t.mon.exponents()) {
      auto it = images.find(v);
      Polynomial img;
      if (it != images.end()) {
        img = it->second;
      } else {
        int dv = dst->full()->index_of(src->full()->name(v));
        if (dv < 0)
          fail(Errc::UnknownVariable, "no image for variable '" + src->full()->name(v) + "'");
        img = Polynomial::variable(dst->full(), dv);
      }
      for (int k = 0; k < e; ++k) factor = dst->mul(factor, img);
    }
    out = out + factor;
  }
  return out;
}

bool CDGAHom::commutes_with_d(std::string* witness) const {
  for (int v = 0; v < src->nvars(); ++v) {
    Polynomial lhs = apply(src->diff_of_var(v));
    Polynomial gen = Polynomial::variable(src->full(), v);
    Polynomial rhs = dst->d(apply(gen));
    if (lhs != rhs) {
      if (witness) *witness = src->full()->name(v);
      return false;
    }
  }
  return true;
}

CDGAHom make_hom(const SemifreeCDGA& src, const SemifreeCDGA& dst,
                 const std::map<std::string, std::string>& images) {
  CDGAHom hom{&src, &dst, {}};
  for (auto& [name, expr] : images) {
    int v = src.var_index(name);
    if (v < 0) fail(Errc::UnknownVariable, "hom image for unknown variable '" + name + "'");
    hom.images[v] = parse_polynomial(dst.full(), expr);
  }
  return hom;
}

}  // namespace dnc
