#include "dnc/center.hpp"

namespace dnc {

CenterPresentation make_center(const ContextPtr& ambient, const std::vector<Polynomial>& gens) {
  CenterPresentation c;
  c.ambient = ambient;
  c.gens = gens;
  for (auto& g : gens)
    if (!same_ring(g.context(), ambient))
      fail(Errc::MixedRings, "center generator outside the ambient ring");
  std::vector<std::string> taken = ambient->names();
  c.t_name = fresh_name(taken, "tinv");
  taken.push_back(c.t_name);
  for (int i = 1; i <= c.size(); ++i) {
    std::string x = fresh_name(taken, "x" + std::to_string(i));
    taken.push_back(x);
    c.x_names.push_back(x);
  }
  for (int i = 1; i <= c.size(); ++i) {
    std::string e = fresh_name(taken, "e" + std::to_string(i));
    taken.push_back(e);
    c.e_names.push_back(e);
  }
  return c;
}

}  // namespace dnc
