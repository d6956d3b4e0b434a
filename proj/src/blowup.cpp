#include "dnc/blowup.hpp"

#include <algorithm>

#include "dnc/dsl.hpp"

namespace dnc {

namespace {

int fdeg(const Polynomial& f) { return std::max(1, f.total_degree()); }

}  // namespace

std::vector<ChartPresentation> blowup_charts(const CenterPresentation& center,
                                             int verify_cutoff) {
  std::vector<ChartPresentation> charts;
  const int n = center.size();
  for (int j = 1; j <= n; ++j) {
    ChartPresentation chart;
    chart.index = j;
    chart.exceptional_equation = center.gens[j - 1];
    chart.y_names.assign(n, "");

    std::vector<std::string> taken = center.ambient->names();
    for (int i = 1; i <= n; ++i) {
      if (i == j) continue;
      std::string y = fresh_name(taken, "y" + std::to_string(i));
      taken.push_back(y);
      chart.y_names[i - 1] = y;
    }
    chart.s_name = fresh_name(taken, "s");
    taken.push_back(chart.s_name);

    // weight-0 stage of the localized Rees presentation: free on y_i and
    // s = t^-1 x_j, cells d e_j = s - f_j and d e_i = y_i s - f_i
    CDGABuilder pre(center.ambient);
    for (int i = 1; i <= n; ++i)
      if (i != j) pre.add({chart.y_names[i - 1], 0, 0, 1});
    pre.add({chart.s_name, 0, 0, fdeg(center.gens[j - 1])});
    for (int i = 1; i <= n; ++i) {
      const ContextPtr& cur = pre.current_context();
      Polynomial de;
      if (i == j)
        de = parse_polynomial(cur, chart.s_name) - center.gens[i - 1].mapped_to(cur);
      else
        de = parse_polynomial(cur, chart.y_names[i - 1] + "*" + chart.s_name) -
             center.gens[i - 1].mapped_to(cur);
      pre.add({center.e_names[i - 1], 1, 0}, de);
    }
    chart.precancel = pre.build();
    chart.cdga = cancel_cell(chart.precancel, center.e_names[j - 1], chart.s_name);

    // the cancellation must be invisible to pi0 and to certified homology
    Pi0Presentation ppre = chart.precancel.pi0();
    Pi0Presentation ppost = chart.cdga.pi0();
    std::vector<int> keep;
    for (int v = 0; v < ppre.ring->size(); ++v)
      if (ppre.ring->name(v) != chart.s_name) keep.push_back(v);
    std::vector<Polynomial> eliminated = eliminate(ppre.gb.basis, keep);
    std::vector<Polynomial> lifted;
    for (auto& g : ppost.gb.basis) lifted.push_back(g.mapped_to(ppre.ring));
    if (!ideal_equal(eliminated, lifted, MonomialOrder::degrevlex()))
      fail(Errc::Internal, "cancel_cell changed pi0 of a blow-up chart");
    // the graded table comparison needs the contraction s -> f_j to preserve
    // the internal degree; a unit-type exceptional equation drops it
    bool degree_preserving = true;
    int sdeg = chart.precancel.intdeg_of_var(chart.precancel.var_index(chart.s_name));
    for (auto& t : center.gens[j - 1].terms())
      if (t.mon.total_degree() != sdeg) degree_preserving = false;
    if (center.gens[j - 1].is_zero()) degree_preserving = false;
    if (verify_cutoff > 0 && degree_preserving) {
      int kmax = std::max(max_relevant_hdeg(chart.precancel, verify_cutoff),
                          max_relevant_hdeg(chart.cdga, verify_cutoff));
      HomologyTable tpre = homology_table(chart.precancel, 0, kmax, 0, 0, verify_cutoff);
      HomologyTable tpost = homology_table(chart.cdga, 0, kmax, 0, 0, verify_cutoff);
      if (!tpre.equal_within_band(tpost))
        fail(Errc::Internal, "cancel_cell changed the certified homology of a chart");
    }
    charts.push_back(std::move(chart));
  }
  return charts;
}

SemifreeCDGA exceptional_divisor(const ChartPresentation& chart) {
  Polynomial f = chart.exceptional_equation.mapped_to(chart.cdga.full());
  return derived_quotient(chart.cdga, {{f, 0}}, "eps");
}

TransitionReport transition(const CenterPresentation& center,
                            const std::vector<ChartPresentation>& charts, int j, int k) {
  const int n = center.size();
  if (j < 1 || j > n || k < 1 || k > n || j == k)
    fail(Errc::IndexOutOfRange, "transition chart indices");
  TransitionReport rep;
  rep.from_chart = k;
  rep.to_chart = j;

  const ChartPresentation& Cj = charts[j - 1];
  const ChartPresentation& Ck = charts[k - 1];
  LocalizeResult Lj = localize(Cj.cdga, Cj.y_names[k - 1]);
  LocalizeResult Lk = localize(Ck.cdga, Ck.y_names[j - 1]);

  const std::string w = Lj.inverse_name;      // (y_k^{(j)})^{-1}
  const std::string wk = Lk.inverse_name;     // (y_j^{(k)})^{-1}
  const std::string yk = Cj.y_names[k - 1];
  std::string fj = center.gens[j - 1].mapped_to(Lj.algebra.full()).str();

  // chart-k variables in chart-j coordinates
  std::map<std::string, std::string> to_j;
  for (int v = 0; v < center.ambient->size(); ++v)
    to_j[center.ambient->name(v)] = center.ambient->name(v);
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    if (i == j)
      to_j[Ck.y_names[i - 1]] = w;
    else
      to_j[Ck.y_names[i - 1]] = Cj.y_names[i - 1] + "*" + w;
  }
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    const std::string& e = center.e_names[i - 1];
    const std::string& ek = center.e_names[k - 1];
    if (i == j)
      to_j[e] = "-" + w + "*" + ek + " + (" + fj + ")*" + Lj.cell_name;
    else
      to_j[e] = e + " - " + Cj.y_names[i - 1] + "*" + w + "*" + ek + " + " +
                Cj.y_names[i - 1] + "*(" + fj + ")*" + Lj.cell_name;
  }
  to_j[wk] = yk;
  to_j[Lk.cell_name] = Lj.cell_name;

  CDGAHom hom = make_hom(Lk.algebra, Lj.algebra, to_j);
  std::string witness;
  rep.d_compatible = hom.commutes_with_d(&witness);
  for (auto& [from, img] : to_j) rep.substitution.push_back({from, img});

  // inverse substitution on pi0 and the round trip
  std::map<std::string, std::string> to_k;
  for (int v = 0; v < center.ambient->size(); ++v)
    to_k[center.ambient->name(v)] = center.ambient->name(v);
  for (int i = 1; i <= n; ++i) {
    if (i == j) continue;
    if (i == k)
      to_k[Cj.y_names[i - 1]] = wk;
    else
      to_k[Cj.y_names[i - 1]] = Ck.y_names[i - 1] + "*" + wk;
  }
  to_k[w] = Ck.y_names[j - 1];

  Pi0Presentation pk = Lk.algebra.pi0();
  Pi0Presentation pj = Lj.algebra.pi0();
  rep.pi0_inverse = true;
  auto roundtrip_ok = [&](const Pi0Presentation& start, const Pi0Presentation& other,
                          const std::map<std::string, std::string>& fwd,
                          const std::map<std::string, std::string>& bwd) {
    for (int v = 0; v < start.ring->size(); ++v) {
      const std::string& name = start.ring->name(v);
      auto f1 = fwd.find(name);
      Polynomial step1 = f1 != fwd.end() ? parse_polynomial(other.ring, f1->second)
                                         : parse_polynomial(other.ring, name);
      std::map<int, Polynomial> back;
      for (int u = 0; u < other.ring->size(); ++u) {
        const std::string& un = other.ring->name(u);
        auto f2 = bwd.find(un);
        back[u] = f2 != bwd.end() ? parse_polynomial(start.ring, f2->second)
                                  : parse_polynomial(start.ring, un);
      }
      Polynomial round = step1.substituted(start.ring, back);
      Polynomial orig = Polynomial::variable(start.ring, v);
      if (!in_ideal(round - orig, start.gb)) return false;
    }
    return true;
  };
  if (!roundtrip_ok(pk, pj, to_j, to_k)) rep.pi0_inverse = false;
  if (!roundtrip_ok(pj, pk, to_k, to_j)) rep.pi0_inverse = false;
  return rep;
}

ExcessiveReport check_excessive(const ExcessiveSquareData& data, int cutoff) {
  ExcessiveReport rep;
  const ContextPtr& A2 = data.top.ambient;
  if (static_cast<int>(data.ring_map.size()) != data.bottom.ambient->size())
    fail(Errc::Internal, "ring map must list an image per ambient variable");
  // images of the bottom generators
  std::map<int, Polynomial> phi;
  for (int v = 0; v < data.bottom.ambient->size(); ++v) phi[v] = data.ring_map[v];
  std::vector<Polynomial> phif;
  for (auto& f : data.bottom.gens) phif.push_back(f.substituted(A2, phi));

  // declared lifts must reproduce phi(f_i) exactly
  if (data.lift.size() != phif.size())
    fail(Errc::Internal, "lift matrix needs one row per bottom generator");
  for (size_t i = 0; i < phif.size(); ++i) {
    if (static_cast<int>(data.lift[i].size()) != data.top.size())
      fail(Errc::Internal, "lift row width must match the top center");
    Polynomial sum = Polynomial::zero(A2);
    for (int j = 0; j < data.top.size(); ++j)
      sum = sum + data.lift[i][j] * data.top.gens[j];
    if (sum != phif[i])
      fail(Errc::Internal, "lift row " + std::to_string(i + 1) +
                               " does not reproduce the mapped generator");
  }

  rep.classically_cartesian =
      ideal_equal(phif, data.top.gens, MonomialOrder::degrevlex());

  // pi1-surjectivity of e^sharp through truncated H1 of the two Koszul models
  CenterPresentation pulled = make_center(A2, phif);
  SemifreeCDGA src = koszul_presentation(pulled);
  SemifreeCDGA dst = koszul_presentation(data.top);
  std::map<std::string, std::string> images;
  for (int v = 0; v < A2->size(); ++v) images[A2->name(v)] = A2->name(v);
  for (int i = 0; i < pulled.size(); ++i) {
    std::string img = "0";
    bool first = true;
    for (int j = 0; j < data.top.size(); ++j) {
      if (data.lift[i][j].is_zero()) continue;
      std::string term = "(" + data.lift[i][j].str() + ")*" + data.top.e_names[j];
      img = first ? term : img + " + " + term;
      first = false;
    }
    images[pulled.e_names[i]] = img;
  }
  HkSurjectivityReport h1 = hk_surjective(src, dst, images, 1, 0, cutoff);
  rep.conormal_surjective = h1.surjective;
  rep.band = h1.band;
  rep.excessive = rep.classically_cartesian && rep.conormal_surjective;
  return rep;
}

DeformationBlowupReport verify_deformation_as_blowup(const CenterPresentation& center) {
  const int n = center.size();
  if (n == 0) fail(Errc::EmptyCenter, "deformation-as-blow-up needs a nonempty center");

  // the center (f_1..f_n, t^-1) inside Y x A^1
  std::vector<std::string> names2 = center.ambient->names();
  names2.push_back(center.t_name);
  ContextPtr ambient2 = make_context(names2);
  std::vector<Polynomial> gens2;
  for (auto& f : center.gens) gens2.push_back(f.mapped_to(ambient2));
  gens2.push_back(Polynomial::variable(ambient2, ambient2->size() - 1));
  CenterPresentation big = make_center(ambient2, gens2);
  std::vector<ChartPresentation> charts = blowup_charts(big);

  ReesPresentation R = rees_extended(center);
  Pi0Presentation pR = R.cdga.pi0();

  DeformationBlowupReport rep;
  rep.all_match = true;

  // chart n+1 is the Rees presentation on the nose, up to renaming y_i -> x_i
  {
    Pi0Presentation pc = charts[n].cdga.pi0();
    std::map<int, Polynomial> images;
    for (int v = 0; v < pc.ring->size(); ++v) {
      const std::string& name = pc.ring->name(v);
      std::string target = name;
      for (int i = 0; i < n; ++i)
        if (name == charts[n].y_names[i]) target = center.x_names[i];
      images[v] = parse_polynomial(pR.ring, target);
    }
    std::vector<Polynomial> mapped;
    for (auto& g : pc.gb.basis) mapped.push_back(g.substituted(pR.ring, images));
    bool ok = ideal_equal(mapped, pR.gb.basis, MonomialOrder::degrevlex());
    rep.charts.push_back({n + 1, ok});
    rep.all_match = rep.all_match && ok;
  }

  // chart j <= n: localize at the transform of t^-1 and compare with the
  // corresponding localization of pi0(R^ext)
  for (int j = 1; j <= n; ++j) {
    const ChartPresentation& chart = charts[j - 1];
    const std::string& ytr = chart.y_names[n];  // transform variable of t^-1
    Pi0Presentation pc = chart.cdga.pi0();

    std::vector<std::string> cl = pc.ring->names();
    std::string v = fresh_name(cl, "v");
    cl.push_back(v);
    ContextPtr cring = make_context(cl);
    std::vector<Polynomial> cideal;
    for (auto& g : pc.gb.basis) cideal.push_back(g.mapped_to(cring));
    cideal.push_back(parse_polynomial(cring, ytr + "*" + v + " - 1"));
    GroebnerBasis cgb = buchberger(cideal, MonomialOrder::degrevlex());

    std::vector<std::string> rl = pR.ring->names();
    std::string w = fresh_name(rl, "w");
    rl.push_back(w);
    ContextPtr rring = make_context(rl);
    std::vector<Polynomial> rideal;
    for (auto& g : pR.gb.basis) rideal.push_back(g.mapped_to(rring));
    rideal.push_back(parse_polynomial(rring, center.x_names[j - 1] + "*" + w + " - 1"));
    GroebnerBasis rgb = buchberger(rideal, MonomialOrder::degrevlex());

    // psi: Rees side -> chart side, rho: chart side -> Rees side
    std::map<std::string, std::string> psi, rho;
    for (int a = 0; a < center.ambient->size(); ++a)
      psi[center.ambient->name(a)] = rho[center.ambient->name(a)] = center.ambient->name(a);
    std::string fj = center.gens[j - 1].mapped_to(cring).str();
    for (int i = 0; i < n; ++i) {
      if (i == j - 1)
        psi[center.x_names[i]] = v;
      else
        psi[center.x_names[i]] = chart.y_names[i] + "*" + v;
    }
    psi[center.t_name] = ytr + "*(" + fj + ")";
    psi[w] = ytr;
    for (int i = 0; i < n; ++i)
      if (i != j - 1) rho[chart.y_names[i]] = center.x_names[i] + "*" + w;
    rho[ytr] = w;
    rho[v] = center.x_names[j - 1];
    rho[center.t_name] = center.t_name;

    auto maps_into = [&](const GroebnerBasis& fromgb, const ContextPtr& fromring,
                         const GroebnerBasis& togb, const ContextPtr& toring,
                         const std::map<std::string, std::string>& sub) {
      for (auto& g : fromgb.basis) {
        std::map<int, Polynomial> imgs;
        for (int a = 0; a < fromring->size(); ++a) {
          auto it = sub.find(fromring->name(a));
          imgs[a] = it != sub.end() ? parse_polynomial(toring, it->second)
                                    : parse_polynomial(toring, fromring->name(a));
        }
        if (!in_ideal(g.substituted(toring, imgs), togb)) return false;
      }
      return true;
    };
    auto roundtrip = [&](const ContextPtr& ring, const GroebnerBasis& gb,
                         const std::map<std::string, std::string>& fwd,
                         const ContextPtr& oring,
                         const std::map<std::string, std::string>& bwd) {
      for (int a = 0; a < ring->size(); ++a) {
        auto it = fwd.find(ring->name(a));
        Polynomial mid = it != fwd.end() ? parse_polynomial(oring, it->second)
                                         : parse_polynomial(oring, ring->name(a));
        std::map<int, Polynomial> back;
        for (int bidx = 0; bidx < oring->size(); ++bidx) {
          auto ib = bwd.find(oring->name(bidx));
          back[bidx] = ib != bwd.end() ? parse_polynomial(ring, ib->second)
                                       : parse_polynomial(ring, oring->name(bidx));
        }
        Polynomial round = mid.substituted(ring, back);
        if (!in_ideal(round - Polynomial::variable(ring, a), gb)) return false;
      }
      return true;
    };

    bool ok = maps_into(rgb, rring, cgb, cring, psi) &&
              maps_into(cgb, cring, rgb, rring, rho) &&
              roundtrip(rring, rgb, psi, cring, rho) &&
              roundtrip(cring, cgb, rho, rring, psi);
    rep.charts.push_back({j, ok});
    rep.all_match = rep.all_match && ok;
  }
  std::sort(rep.charts.begin(), rep.charts.end());
  return rep;
}

}  // namespace dnc
