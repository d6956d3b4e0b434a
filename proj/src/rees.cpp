#include "dnc/rees.hpp"

#include <algorithm>
#include <functional>

#include "dnc/dsl.hpp"

namespace dnc {

namespace {

int rees_intdeg(const Polynomial& f) { return std::max(1, f.total_degree()); }

}  // namespace

ReesPresentation rees_extended(const CenterPresentation& center) {
  CDGABuilder b(center.ambient);
  b.add({center.t_name, 0, -1, 0});
  for (int i = 0; i < center.size(); ++i)
    b.add({center.x_names[i], 0, 1, rees_intdeg(center.gens[i])});
  for (int i = 0; i < center.size(); ++i) {
    const ContextPtr& cur = b.current_context();
    Polynomial de = parse_polynomial(cur, center.x_names[i] + "*" + center.t_name) -
                    center.gens[i].mapped_to(cur);
    b.add({center.e_names[i], 1, 0}, de);
  }
  return {b.build(), center};
}

DeformationFiber deformation_fiber(const ReesPresentation& R, FiberKind kind) {
  if (kind == FiberKind::special) {
    SemifreeCDGA fib = base_change(
        R.cdga, std::map<std::string, Polynomial>{{R.center.t_name, Polynomial::zero(R.cdga.full())}});
    return {kind, fib, ""};
  }
  LocalizeResult loc = localize(R.cdga, R.center.t_name);
  return {kind, loc.algebra, loc.inverse_name};
}

SemifreeCDGA koszul_presentation(const CenterPresentation& center) {
  CDGABuilder b(center.ambient);
  for (int i = 0; i < center.size(); ++i)
    b.add({center.e_names[i], 1, 0, rees_intdeg(center.gens[i])},
          -center.gens[i].mapped_to(b.current_context()));
  return b.build();
}

DGModuleSpec conormal_model(const CenterPresentation& center) {
  DGModuleSpec M;
  M.algebra = koszul_presentation(center);
  for (int i = 0; i < center.size(); ++i)
    M.gens.push_back({center.x_names[i], 0, 1, rees_intdeg(center.gens[i])});
  M.diffs.assign(center.size(), Polynomial());
  return M;
}

SemifreeCDGA normal_cone_model(const CenterPresentation& center) {
  return sym_algebra(conormal_model(center));
}

WeightComponentReport weight_component(const ReesPresentation& R, int weight, int cutoff) {
  WeightComponentReport rep;
  rep.weight = weight;
  rep.cutoff = cutoff;
  int kmax = max_relevant_hdeg(R.cdga, cutoff);
  rep.table = homology_table(R.cdga, 0, kmax, weight, weight, cutoff);
  HomogenizeResult hr = homogenize(R.cdga);
  for (int k = 0; k <= kmax; ++k)
    for (auto& [d, mons] : slice_basis(hr.algebra, k, weight, cutoff))
      for (auto& m : mons)
        rep.basis[{k, d}].push_back(Polynomial::from_monomial(hr.algebra.full(), m, 1).str());

  if (weight <= 0) {
    rep.checked_freeness = true;
    Pi0Presentation p = R.cdga.pi0();
    // spanning: every weight-w basis monomial reduces into Q[z] * t^{-|w|};
    // reduce under a block order eliminating the x-block so normal forms
    // are pushed out of the Rees variables whenever possible
    GroebnerBasis xelim = buchberger(
        p.gb.basis, MonomialOrder::block(R.center.ambient->size() + 1));
    rep.free_spanning = true;
    auto hdeg0 = slice_basis(hr.algebra, 0, weight, cutoff);
    int tvar = p.ring->index_of(R.center.t_name);
    std::vector<char> zt_only(p.ring->size(), 0);
    for (int v = 0; v < R.center.ambient->size(); ++v)
      zt_only[p.ring->index_of(R.center.ambient->name(v))] = 1;
    zt_only[tvar] = 1;
    std::string hname = hr.changed ? hr.h_name : "";
    for (auto& [d, mons] : hdeg0) {
      for (auto& m : mons) {
        // drop homogenization powers before reducing
        Polynomial in_pi0 = Polynomial::zero(p.ring);
        {
          std::vector<std::pair<int, int>> exps;
          for (auto& [v, e] : m.exponents()) {
            const std::string& n = hr.algebra.full()->name(v);
            if (n == hname) continue;
            exps.push_back({p.ring->index_of(n), e});
          }
          in_pi0 = Polynomial::from_monomial(p.ring, Monomial(std::move(exps)), 1);
        }
        Polynomial nf = normal_form(in_pi0, xelim);
        for (auto& t : nf.terms()) {
          bool ok = true;
          for (auto& [v, e] : t.mon.exponents())
            if (!zt_only[v]) ok = false;
          if (!ok || t.mon.exponent(tvar) != -weight) rep.free_spanning = false;
        }
      }
    }
    // injectivity: no relations land inside Q[z][t^-1]
    std::vector<int> keep;
    for (int v = 0; v < p.ring->size(); ++v)
      if (zt_only[v]) keep.push_back(v);
    rep.free_injective = eliminate(p.gb.basis, keep).empty();
  }
  return rep;
}

bool weight1_equals_center_ideal(const ReesPresentation& R, int cutoff) {
  const CenterPresentation& c = R.center;
  Pi0Presentation p = R.cdga.pi0();
  // evaluation x_i -> f_i, t^-1 -> 1 kills the pi0 ideal by construction
  std::map<int, Polynomial> eval;
  eval[p.ring->index_of(c.t_name)] = Polynomial::constant(c.ambient, 1);
  for (int i = 0; i < c.size(); ++i)
    eval[p.ring->index_of(c.x_names[i])] = c.gens[i];
  for (auto& g : p.gb.basis)
    if (!g.substituted(c.ambient, eval).is_zero()) return false;

  GroebnerBasis gbf = buchberger(c.gens, MonomialOrder::degrevlex());
  // image of every weight-1 monomial lies in (f); the generators f_i are hit by x_i
  HomogenizeResult hr = homogenize(R.cdga);
  auto slices = slice_basis(hr.algebra, 0, 1, cutoff);
  std::string hname = hr.changed ? hr.h_name : "";
  for (auto& [d, mons] : slices) {
    for (auto& m : mons) {
      std::vector<std::pair<int, int>> exps;
      for (auto& [v, e] : m.exponents()) {
        const std::string& n = hr.algebra.full()->name(v);
        if (n == hname) continue;
        exps.push_back({p.ring->index_of(n), e});
      }
      Polynomial mono = Polynomial::from_monomial(p.ring, Monomial(std::move(exps)), 1);
      Polynomial img = mono.substituted(c.ambient, eval);
      if (c.size() == 0) {
        if (!img.is_zero()) return false;
      } else if (!in_ideal(img, gbf)) {
        return false;
      }
    }
  }
  return true;
}

bool generated_in_weight_one(const ReesPresentation& R, int max_weight, int cutoff) {
  HomogenizeResult hr = homogenize(R.cdga);
  const SemifreeCDGA& H = hr.algebra;
  std::vector<int> xvars;
  for (auto& x : R.center.x_names) xvars.push_back(H.var_index(x));
  for (int w = 1; w <= max_weight; ++w) {
    for (auto& [d, mons] : slice_basis(H, 0, w, cutoff)) {
      for (auto& m : mons) {
        bool factorable = false;
        for (int xv : xvars)
          if (m.exponent(xv) > 0) factorable = true;
        if (!factorable) return false;  // weight >= 1 forces an x factor
      }
    }
  }
  return true;
}

Weight0Subalgebra weight0_subalgebra(const CenterPresentation& center) {
  Weight0Subalgebra W;
  std::vector<std::string> taken = center.ambient->names();
  for (int i = 1; i <= center.size(); ++i) {
    std::string u = fresh_name(taken, "u" + std::to_string(i));
    taken.push_back(u);
    W.u_names.push_back(u);
  }
  CDGABuilder b(center.ambient);
  for (int i = 0; i < center.size(); ++i)
    b.add({W.u_names[i], 0, 0, rees_intdeg(center.gens[i])});
  for (int i = 0; i < center.size(); ++i) {
    const ContextPtr& cur = b.current_context();
    Polynomial de = parse_polynomial(cur, W.u_names[i]) - center.gens[i].mapped_to(cur);
    b.add({center.e_names[i], 1, 0}, de);
  }
  W.cdga = b.build();
  return W;
}

AdicFiltrationPiece adic_filtration(const ReesPresentation& R, int n) {
  if (n < 0) fail(Errc::IndexOutOfRange, "adic filtration level must be >= 0");
  const CenterPresentation& c = R.center;
  AdicFiltrationPiece piece;
  piece.level = n;
  Weight0Subalgebra W = weight0_subalgebra(c);
  piece.module.algebra = W.cdga;

  // exponent vectors gamma with |gamma| = n
  std::vector<std::vector<int>> gammas;
  std::vector<int> cur(c.size(), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == c.size()) {
      if (left == 0) gammas.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (c.size() == 0) {
    if (n == 0) gammas.push_back({});
  } else {
    rec(0, n);
  }

  for (auto& gamma : gammas) {
    std::string name = "m";
    int intdeg = 0;
    Polynomial image = Polynomial::constant(c.ambient, 1);
    for (size_t i = 0; i < gamma.size(); ++i) {
      name += "_" + std::to_string(gamma[i]);
      intdeg += gamma[i] * rees_intdeg(c.gens[i]);
      if (gamma[i] > 0) image = image * c.gens[i].pow(gamma[i]);
    }
    piece.module.gens.push_back({name, 0, n, std::max(intdeg, 0)});
    piece.module.diffs.push_back(Polynomial());
    piece.pi0_image.push_back(image);
  }
  return piece;
}

std::map<std::pair<int, int>, long> fiber_ideal_dims(const CenterPresentation& center,
                                                     int cutoff) {
  SemifreeCDGA B = koszul_presentation(center);
  HomogenizeResult hr = homogenize(B);
  const SemifreeCDGA& H = hr.algebra;
  std::map<std::pair<int, int>, long> out;
  // H_0(I) = B_1 / d(B_2), degree by degree
  auto b1 = slice_basis(H, 1, 0, cutoff);
  auto b2 = slice_basis(H, 2, 0, cutoff);
  for (int d = 0; d <= cutoff; ++d) {
    long dim1 = b1.count(d) ? static_cast<long>(b1[d].size()) : 0;
    long r = 0;
    if (b2.count(d) && dim1 > 0)
      r = rank(differential_matrix(H, 2, 0, d, b2[d], b1[d]));
    out[{0, d}] = dim1 - r;
  }
  // H_k(I) = H_{k+1}(B) for k >= 1
  int kmax = max_relevant_hdeg(H, cutoff);
  HomologyTable t = homology_table(B, 0, kmax, 0, 0, cutoff);
  for (int k = 1; k + 1 <= kmax; ++k)
    for (int d = 0; d <= cutoff; ++d) out[{k, d}] = t.dim(k + 1, 0, d);
  return out;
}

}  // namespace dnc
