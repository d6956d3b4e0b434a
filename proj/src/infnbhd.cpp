#include "dnc/infnbhd.hpp"

#include <algorithm>

#include "dnc/dsl.hpp"

namespace dnc {

namespace {

// alternating sum of homology dimensions over a weight slice, per degree
std::map<int, long> euler_profile(const SemifreeCDGA& A, int weight, int cutoff) {
  int kmax = max_relevant_hdeg(A, cutoff);
  HomologyTable t = homology_table(A, 0, kmax, weight, weight, cutoff);
  std::map<int, long> chi;
  for (int d = 0; d <= cutoff; ++d) {
    long v = 0;
    for (int k = 0; k <= kmax; ++k) v += (k % 2 == 0 ? 1 : -1) * t.dim(k, weight, d);
    chi[d] = v;
  }
  return chi;
}

int table_band(const SemifreeCDGA& A, int cutoff) {
  HomogenizeResult hr = homogenize(A);
  return cutoff - max_differential_degree(hr.algebra);
}

}  // namespace

InfNeighborhood inf_neighborhood(const ReesPresentation& R, int n) {
  if (n < 0) fail(Errc::IndexOutOfRange, "neighborhood level must be >= 0");
  const CenterPresentation& c = R.center;
  InfNeighborhood X;
  X.level = n;

  // R{n} = R^ext with one cell killing t^{-(n+1)}
  CDGABuilder b(c.ambient);
  for (size_t i = 0; i < R.cdga.gens().size(); ++i)
    b.add(R.cdga.gens()[i],
          R.cdga.diff_of_var(R.cdga.nbase() + static_cast<int>(i)).mapped_to(b.current_context()));
  X.zeta_name = fresh_name(b.current_context()->names(), "zeta");
  {
    const ContextPtr& cur = b.current_context();
    Polynomial tpow = Polynomial::variable(cur, cur->index_of(c.t_name), n + 1);
    b.add({X.zeta_name, 1, -(n + 1), 0}, tpow);
  }
  X.ambient = b.build();

  // exact pi0 of the weight-0 part over Q[z][u]
  std::vector<std::string> names = c.ambient->names();
  names.push_back(c.t_name);
  for (auto& x : c.x_names) names.push_back(x);
  std::vector<std::string> unames;
  for (int i = 1; i <= c.size(); ++i) {
    std::string u = fresh_name(names, "u" + std::to_string(i));
    names.push_back(u);
    unames.push_back(u);
  }
  ContextPtr work = make_context(names);
  std::vector<Polynomial> ideal;
  for (int i = 0; i < c.size(); ++i)
    ideal.push_back(parse_polynomial(work, c.x_names[i] + "*" + c.t_name) -
                    c.gens[i].mapped_to(work));
  ideal.push_back(Polynomial::variable(work, work->index_of(c.t_name), n + 1));
  for (int i = 0; i < c.size(); ++i)
    ideal.push_back(parse_polynomial(work, unames[i]) -
                    parse_polynomial(work, c.x_names[i] + "*" + c.t_name));
  std::vector<int> keep;
  for (int v = 0; v < c.ambient->size(); ++v) keep.push_back(work->index_of(c.ambient->name(v)));
  for (auto& u : unames) keep.push_back(work->index_of(u));
  std::vector<Polynomial> elim = eliminate(ideal, keep);

  std::vector<std::string> small = c.ambient->names();
  for (auto& u : unames) small.push_back(u);
  ContextPtr uring = make_context(small);
  std::vector<Polynomial> in_small;
  for (auto& g : elim) in_small.push_back(g.mapped_to(uring));
  X.pi0 = {uring, buchberger(in_small, MonomialOrder::degrevlex())};
  X.u_names = unames;
  return X;
}

InfTriangleReport verify_inf_triangles(const CenterPresentation& center, int n, int cutoff) {
  if (n < 1) fail(Errc::IndexOutOfRange, "triangle check needs n >= 1");
  InfTriangleReport rep;
  rep.level = n;

  ReesPresentation R = rees_extended(center);
  InfNeighborhood Xn = inf_neighborhood(R, n);
  InfNeighborhood Xn1 = inf_neighborhood(R, n - 1);
  SemifreeCDGA sym = normal_cone_model(center);
  CDGABuilder oy(center.ambient);
  SemifreeCDGA OY = oy.build();

  rep.band = std::min({table_band(R.cdga, cutoff), table_band(Xn.ambient, cutoff),
                       table_band(Xn1.ambient, cutoff), table_band(sym, cutoff)});
  if (rep.band < 0) fail(Errc::CutoffTooSmall, "no certified degrees for the triangle check");

  rep.comparable = !homogenize(R.cdga).changed && !homogenize(Xn.ambient).changed &&
                   !homogenize(Xn1.ambient).changed && !homogenize(sym).changed;
  if (!rep.comparable) return rep;

  auto chi_sym = euler_profile(sym, n, cutoff);
  auto chi_xn = euler_profile(Xn.ambient, 0, cutoff);
  auto chi_xn1 = euler_profile(Xn1.ambient, 0, cutoff);
  auto chi_oy = euler_profile(OY, 0, cutoff);
  auto chi_rn1 = euler_profile(R.cdga, n + 1, cutoff);

  rep.additivity_sym = true;
  rep.additivity_rees = true;
  for (int d = 0; d <= rep.band; ++d) {
    if (chi_sym[d] != chi_xn[d] - chi_xn1[d]) {
      rep.additivity_sym = false;
      rep.failures.push_back({"sym", d});
    }
    if (chi_rn1[d] != chi_oy[d] - chi_xn[d]) {
      rep.additivity_rees = false;
      rep.failures.push_back({"rees", d});
    }
  }
  return rep;
}

Pi0IdealCheckReport pi0_ideal_check(const CenterPresentation& center, int n) {
  if (n < 1) fail(Errc::IndexOutOfRange, "ideal check needs n >= 1");
  Pi0IdealCheckReport rep;
  rep.level = n;
  ReesPresentation R = rees_extended(center);
  InfNeighborhood X = inf_neighborhood(R, n);

  // kernel of Q[z] -> pi0 X^(n)
  std::vector<int> keep;
  for (int v = 0; v < center.ambient->size(); ++v)
    keep.push_back(X.pi0.ring->index_of(center.ambient->name(v)));
  std::vector<Polynomial> kernel_big = eliminate(X.pi0.gb.basis, keep);
  std::vector<Polynomial> kernel;
  for (auto& g : kernel_big) kernel.push_back(g.mapped_to(center.ambient));
  GroebnerBasis kgb = buchberger(kernel, MonomialOrder::degrevlex());
  for (auto& g : kgb.basis) rep.kernel_basis.push_back(g.str());

  rep.matches_power_n =
      ideal_equal(kernel, ideal_power(center.gens, n, center.ambient), MonomialOrder::degrevlex());
  rep.matches_power_n_plus_1 = ideal_equal(
      kernel, ideal_power(center.gens, n + 1, center.ambient), MonomialOrder::degrevlex());
  return rep;
}

FiltrationTowerReport filtration_tower(const ReesPresentation& R, int n_max) {
  if (n_max < 0) fail(Errc::IndexOutOfRange, "tower height must be >= 0");
  FiltrationTowerReport rep;
  for (int n = 0; n <= n_max; ++n) rep.levels.push_back(inf_neighborhood(R, n));
  rep.surjections_ok = true;
  rep.kernels_graded = true;
  rep.kernels_nilpotent = true;
  rep.nilpotency_bound = 0;

  const CenterPresentation& c = R.center;
  for (int n = 1; n <= n_max; ++n) {
    const Pi0Presentation& pn = rep.levels[n].pi0;
    const Pi0Presentation& pn1 = rep.levels[n - 1].pi0;
    // same ring by construction
    for (auto& g : pn.gb.basis)
      if (!in_ideal(g.mapped_to(pn1.ring), pn1.gb)) rep.surjections_ok = false;

    // kernel of the level drop is the degree-n graded piece: K_{n-1} = K_n + I^n
    std::vector<Polynomial> rhs = pn.gb.basis;
    for (auto& g : ideal_power(c.gens, n, c.ambient)) rhs.push_back(g.mapped_to(pn.ring));
    if (!ideal_equal(pn1.gb.basis, rhs, MonomialOrder::degrevlex())) rep.kernels_graded = false;

    // nilpotency: a small power of K_{n-1} falls into K_n
    bool nil = false;
    for (int cpow = 1; cpow <= n_max + 2 && !nil; ++cpow) {
      bool all_in = true;
      for (auto& prod : ideal_power(pn1.gb.basis, cpow, pn.ring))
        if (!in_ideal(prod, pn.gb)) all_in = false;
      if (all_in) {
        nil = true;
        rep.nilpotency_bound = std::max(rep.nilpotency_bound, cpow);
      }
    }
    if (!nil) rep.kernels_nilpotent = false;
  }
  return rep;
}

}  // namespace dnc
