#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnc/dsl.hpp"
#include "dnc/infnbhd.hpp"

using namespace dnc;

namespace {

CenterPresentation center_of(const std::vector<std::string>& vars,
                             const std::vector<std::string>& gens) {
  auto ctx = make_context(vars);
  std::vector<Polynomial> fs;
  for (auto& g : gens) fs.push_back(parse_polynomial(ctx, g));
  return make_center(ctx, fs);
}

// kernel of Q[z] -> pi0 X^(n), reduced
std::vector<Polynomial> ambient_kernel(const CenterPresentation& c, const InfNeighborhood& X) {
  std::vector<int> keep;
  for (int v = 0; v < c.ambient->size(); ++v)
    keep.push_back(X.pi0.ring->index_of(c.ambient->name(v)));
  std::vector<Polynomial> out;
  for (auto& g : eliminate(X.pi0.gb.basis, keep)) out.push_back(g.mapped_to(c.ambient));
  return out;
}

}  // namespace

TEST_CASE("X^(0) recovers X") {
  for (auto& c : {center_of({"u"}, {"u"}), center_of({"x", "y"}, {"x", "y"}),
                  center_of({"x"}, {"x", "x"}), center_of({"x", "y"}, {"x^2", "x*y"})}) {
    ReesPresentation R = rees_extended(c);
    InfNeighborhood X0 = inf_neighborhood(R, 0);
    // pi0 kernel in the ambient equals (f)
    CHECK(ideal_equal(ambient_kernel(c, X0), c.gens, MonomialOrder::degrevlex()));
    // and the u-variables die: pi0 ideal contains every u_i
    for (auto& u : X0.u_names)
      CHECK(in_ideal(parse_polynomial(X0.pi0.ring, u), X0.pi0.gb));
    // certified homology of the weight-0 part matches the Koszul model of X
    SemifreeCDGA K = koszul_presentation(c);
    int cutoff = 5;
    int kmax = std::max(max_relevant_hdeg(K, cutoff), 3);
    HomologyTable tw = homology_table(X0.ambient, 0, kmax, 0, 0, cutoff);
    HomologyTable tk = homology_table(K, 0, kmax, 0, 0, cutoff);
    int band = std::min(tw.certified_band, tk.certified_band);
    for (int k = 0; k <= kmax; ++k)
      for (int d = 0; d <= band; ++d) CHECK(tw.dim(k, 0, d) == tk.dim(k, 0, d));
  }
}

TEST_CASE("first neighborhoods are the classical thickenings") {
  {
    ReesPresentation R = rees_extended(center_of({"u"}, {"u"}));
    InfNeighborhood X1 = inf_neighborhood(R, 1);
    auto ker = ambient_kernel(R.center, X1);
    CHECK(ideal_equal(ker, {parse_polynomial(R.center.ambient, "u^2")},
                      MonomialOrder::degrevlex()));
  }
  {
    ReesPresentation R = rees_extended(center_of({"x", "y"}, {"x", "y"}));
    InfNeighborhood X1 = inf_neighborhood(R, 1);
    auto ker = ambient_kernel(R.center, X1);
    std::vector<Polynomial> sq = {parse_polynomial(R.center.ambient, "x^2"),
                                  parse_polynomial(R.center.ambient, "x*y"),
                                  parse_polynomial(R.center.ambient, "y^2")};
    CHECK(ideal_equal(ker, sq, MonomialOrder::degrevlex()));
  }
}

TEST_CASE("pi0 ideal check resolves the power empirically") {
  // the kernel is I^{n+1} on the whole suite, never I^n (for distinct powers)
  for (auto& c : {center_of({"u"}, {"u"}), center_of({"x", "y"}, {"x", "y"}),
                  center_of({"x"}, {"x", "x"}), center_of({"x", "y"}, {"x^2", "x*y"})}) {
    for (int n = 1; n <= 3; ++n) {
      Pi0IdealCheckReport rep = pi0_ideal_check(c, n);
      CHECK(rep.matches_power_n_plus_1);
      // I^n = I^{n+1} can only coincide for degenerate centers, not these
      CHECK(!rep.matches_power_n);
    }
  }
}

TEST_CASE("triangle additivity per degree slice") {
  for (auto& c : {center_of({"u"}, {"u"}), center_of({"x", "y"}, {"x", "y"}),
                  center_of({"x"}, {"x", "x"})}) {
    for (int n = 1; n <= 3; ++n) {
      InfTriangleReport rep = verify_inf_triangles(c, n, 6);
      CHECK(rep.comparable);
      CHECK(rep.additivity_sym);
      CHECK(rep.additivity_rees);
      CHECK(rep.band >= 3);
    }
  }
}

TEST_CASE("triangle additivity for the non-lci center") {
  InfTriangleReport rep = verify_inf_triangles(center_of({"x", "y"}, {"x^2", "x*y"}), 1, 6);
  CHECK(rep.comparable);
  CHECK(rep.additivity_sym);
  CHECK(rep.additivity_rees);
}

TEST_CASE("triangle slices of inhomogeneous centers are not graded-comparable") {
  InfTriangleReport rep = verify_inf_triangles(center_of({"z"}, {"1"}), 1, 6);
  CHECK(!rep.comparable);
  InfTriangleReport rep2 = verify_inf_triangles(center_of({"x", "y"}, {"y - x^2"}), 1, 6);
  CHECK(!rep2.comparable);
}

TEST_CASE("filtration tower of C1") {
  ReesPresentation R = rees_extended(center_of({"u"}, {"u"}));
  FiltrationTowerReport rep = filtration_tower(R, 3);
  REQUIRE(rep.levels.size() == 4);
  CHECK(rep.surjections_ok);
  CHECK(rep.kernels_graded);
  CHECK(rep.kernels_nilpotent);
  // pi0 tower is Q[u]/(u^{n+1})
  for (int n = 0; n <= 3; ++n) {
    auto ker = ambient_kernel(R.center, rep.levels[n]);
    Polynomial expected = parse_polynomial(R.center.ambient, "u").pow(n + 1);
    CHECK(ideal_equal(ker, {expected}, MonomialOrder::degrevlex()));
  }
}

TEST_CASE("filtration tower of C2 builds fat points") {
  ReesPresentation R = rees_extended(center_of({"x", "y"}, {"x", "y"}));
  FiltrationTowerReport rep = filtration_tower(R, 2);
  CHECK(rep.surjections_ok);
  CHECK(rep.kernels_graded);
  CHECK(rep.kernels_nilpotent);
}

TEST_CASE("degenerate towers") {
  // empty center: every neighborhood is Y
  ReesPresentation R0 = rees_extended(make_center(make_context({"z"}), {}));
  FiltrationTowerReport rep = filtration_tower(R0, 2);
  CHECK(rep.surjections_ok);
  for (auto& X : rep.levels) CHECK(X.pi0.gb.basis.empty());
  CHECK_THROWS_AS(inf_neighborhood(R0, -1), Error);
  CHECK_THROWS_AS(pi0_ideal_check(make_center(make_context({"z"}), {}), 0), Error);
}
