#include "dnc/classical.hpp"

namespace dnc {

namespace {

ContextPtr rees_ring(const CenterPresentation& center, bool extended) {
  std::vector<std::string> names = center.ambient->names();
  if (extended) names.push_back(center.t_name);
  for (auto& x : center.x_names) names.push_back(x);
  return make_context(names);
}

}  // namespace

ClassicalReesIdeal classical_rees(const CenterPresentation& center, bool extended) {
  if (center.size() == 0) fail(Errc::EmptyCenter, "classical Rees ideal needs generators");
  ContextPtr ring = rees_ring(center, extended);
  std::vector<std::string> names = ring->names();
  std::string T = fresh_name(names, "T");
  names.push_back(T);
  ContextPtr work = make_context(names);
  int Tv = work->size() - 1;

  std::vector<Polynomial> rel;
  for (int i = 0; i < center.size(); ++i) {
    Polynomial Xi = Polynomial::variable(work, work->index_of(center.x_names[i]));
    rel.push_back(Xi - center.gens[i].mapped_to(work) * Polynomial::variable(work, Tv));
  }
  if (extended) {
    Polynomial tinv = Polynomial::variable(work, work->index_of(center.t_name));
    rel.push_back(tinv * Polynomial::variable(work, Tv) - Polynomial::constant(work, 1));
  }
  std::vector<int> keep;
  for (int v = 0; v + 1 < work->size(); ++v) keep.push_back(v);
  std::vector<Polynomial> elim = eliminate(rel, keep);
  std::vector<Polynomial> in_ring;
  for (auto& g : elim) in_ring.push_back(g.mapped_to(ring));
  GroebnerBasis gb = buchberger(in_ring, MonomialOrder::degrevlex());
  return {ring, gb.basis, extended};
}

std::vector<Polynomial> classical_blowup_chart(const CenterPresentation& center, int j,
                                               const ContextPtr& chart_ring,
                                               const std::vector<std::string>& y_names) {
  if (center.size() == 0) fail(Errc::EmptyCenter, "classical blow-up chart needs generators");
  if (j < 1 || j > center.size()) fail(Errc::IndexOutOfRange, "chart index");
  ClassicalReesIdeal rees = classical_rees(center, false);
  // X_i -> y_i (i != j), X_j -> 1
  std::map<int, Polynomial> images;
  for (int i = 0; i < center.size(); ++i) {
    int Xv = rees.ring->index_of(center.x_names[i]);
    if (i == j - 1)
      images[Xv] = Polynomial::constant(chart_ring, 1);
    else
      images[Xv] = Polynomial::variable(chart_ring, chart_ring->index_of(y_names[i]));
  }
  std::vector<Polynomial> out;
  for (auto& g : rees.basis) {
    Polynomial img = g.substituted(chart_ring, images);
    if (!img.is_zero()) out.push_back(img);
  }
  GroebnerBasis gb = buchberger(out, MonomialOrder::degrevlex());
  return gb.basis;
}

ClassicalReesIdeal classical_normal_cone(const CenterPresentation& center) {
  ClassicalReesIdeal rees = classical_rees(center, false);
  std::vector<Polynomial> gens = rees.basis;
  for (auto& f : center.gens) gens.push_back(f.mapped_to(rees.ring));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex());
  return {rees.ring, gb.basis, false};
}

}  // namespace dnc
