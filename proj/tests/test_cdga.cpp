#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnc/cdga.hpp"
#include "dnc/dsl.hpp"
#include "dnc/homology.hpp"

using namespace dnc;

namespace {

SemifreeCDGA koszul_xy() {
  CDGABuilder b(make_context({"x", "y"}));
  b.add({"e1", 1, 0}, "x");
  b.add({"e2", 1, 0}, "y");
  return b.build();
}

}  // namespace

TEST_CASE("koszul quotient of one element") {
  CDGABuilder b(make_context({"u"}));
  b.add({"e", 1, 0}, "u");
  SemifreeCDGA A = b.build();
  Pi0Presentation p = A.pi0();
  REQUIRE(p.gb.basis.size() == 1);
  CHECK(p.gb.basis[0].str() == "u");
  CHECK(A.hdeg_of(A.var("e")) == 1);
}

TEST_CASE("trivial algebra") {
  CDGABuilder b(make_context({}));
  SemifreeCDGA A = b.build();
  CHECK(A.pi0().gb.basis.empty());
  CHECK(A.nvars() == 0);
}

TEST_CASE("d-square validation") {
  // de = u with df = u*e has d^2 f = u^2 != 0
  {
    CDGABuilder b(make_context({"u"}));
    b.add({"e", 1, 0}, "u");
    b.add({"f", 2, 0}, "u*e");
    CHECK_THROWS_AS(b.build(), Error);
    try {
      b.build();
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DSquareNonzero);
    }
  }
  // de = 0 with df = u*e is accepted: d^2 f = u*de = 0
  {
    CDGABuilder b(make_context({"u"}));
    b.add({"e", 1, 0});
    b.add({"f", 2, 0}, "u*e");
    CHECK_NOTHROW(b.build());
  }
}

TEST_CASE("degree and weight validation") {
  {
    CDGABuilder b(make_context({"u"}));
    // hdeg mismatch: d of an hdeg-3 cell must be hdeg 2
    b.add({"e", 1, 0}, "u");
    b.add({"f", 3, 0}, "e");
    CHECK_THROWS_AS(b.build(), Error);
  }
  {
    CDGABuilder b(make_context({"u"}));
    b.add({"t", 0, -1});
    b.add({"e", 1, 0}, "t");  // weight -1 cycle against weight-0 cell
    CHECK_THROWS_AS(b.build(), Error);
  }
}

TEST_CASE("koszul signs") {
  SemifreeCDGA A = koszul_xy();
  Polynomial e1 = A.var("e1"), e2 = A.var("e2");
  CHECK(A.mul(e1, e1).is_zero());
  CHECK(A.mul(e1, e2) == -A.mul(e2, e1));
  // d(e1*e2) = x*e2 - y*e1
  Polynomial p = A.d(A.mul(e1, e2));
  CHECK(p == A.poly("x*e2 - y*e1"));
  CHECK(A.d(p).is_zero());
}

TEST_CASE("derived quotient builds the koszul complex") {
  auto ctx = make_context({"x", "y"});
  CDGABuilder b(ctx);
  SemifreeCDGA base = b.build();
  SemifreeCDGA K = derived_quotient(
      base, {{parse_polynomial(ctx, "x"), 0}, {parse_polynomial(ctx, "y"), 0}});
  CHECK(same_presentation_by_name(K, koszul_xy()));
  // empty quotient is the identity
  SemifreeCDGA same = derived_quotient(K, {});
  CHECK(same_presentation_by_name(same, K));
  // zero cosection: H1 free of rank one per degree
  SemifreeCDGA Z = derived_quotient(b.build(), {{Polynomial::zero(ctx), 0}});
  HomologyTable t = homology_table(Z, 1, 1, 0, 0, 3);
  CHECK(t.dim(1, 0, 1) == 1);
  // weight mismatch rejected
  CHECK_THROWS_AS(derived_quotient(base, {{parse_polynomial(ctx, "x"), 5}}), Error);
}

TEST_CASE("pi0 of a derived quotient is the pi0 quotient") {
  auto ctx = make_context({"x", "y"});
  CDGABuilder b(ctx);
  b.add({"t", 0, -1, 0});
  b.add({"e1", 1, -1}, "x*t");
  SemifreeCDGA A = b.build();
  std::vector<std::pair<Polynomial, int>> elems = {{parse_polynomial(ctx, "y^2 - x"), 0}};
  SemifreeCDGA Q = derived_quotient(A, elems);
  Pi0Presentation pa = A.pi0();
  Pi0Presentation pq = Q.pi0();
  std::vector<Polynomial> expected = pa.gb.basis;
  expected.push_back(parse_polynomial(pa.ring, "y^2 - x"));
  std::vector<Polynomial> got;
  for (auto& g : pq.gb.basis) got.push_back(g.mapped_to(pa.ring));
  CHECK(ideal_equal(got, expected, MonomialOrder::degrevlex()));
}

TEST_CASE("homology of regular koszul complexes vanishes") {
  SemifreeCDGA K = koszul_xy();
  HomologyTable t = homology_table(K, 0, 2, 0, 0, 6);
  CHECK(t.certified_band == 5);
  CHECK(t.dim(0, 0, 0) == 1);  // Q at the origin
  for (int d = 1; d <= t.certified_band; ++d) CHECK(t.dim(0, 0, d) == 0);
  for (int k = 1; k <= 2; ++k)
    for (int d = 0; d <= t.certified_band; ++d) CHECK(t.dim(k, 0, d) == 0);
}

TEST_CASE("zero differential homology") {
  CDGABuilder b(make_context({"x"}));
  b.add({"e", 1, 0});
  SemifreeCDGA A = b.build();
  HomologyTable t = homology_table(A, 1, 1, 0, 0, 3);
  for (int d = 1; d <= 3; ++d) CHECK(t.dim(1, 0, d) == 1);  // x^{d-1} e
}

TEST_CASE("self-intersection: K(x) tensor K(x) over Q[x]") {
  auto ctx = make_context({"x"});
  CDGABuilder b(ctx);
  SemifreeCDGA base = b.build();
  SemifreeCDGA K1 = derived_quotient(base, {{parse_polynomial(ctx, "x"), 0}});
  TensorResult t = derived_tensor(K1, K1);
  REQUIRE(t.renames.size() == 1);  // the second e1 gets a fresh name
  HomologyTable h = homology_table(t.algebra, 1, 1, 0, 0, 4);
  CHECK(h.dim(1, 0, 1) == 1);  // the cycle e1 - e2
  for (int d = 2; d <= h.certified_band; ++d) CHECK(h.dim(1, 0, d) == 0);
}

TEST_CASE("tensor of koszul complexes matches the joint koszul complex") {
  auto ctx = make_context({"x", "y"});
  CDGABuilder b(ctx);
  SemifreeCDGA base = b.build();
  SemifreeCDGA Kx = derived_quotient(base, {{parse_polynomial(ctx, "x"), 0}});
  SemifreeCDGA Ky = derived_quotient(base, {{parse_polynomial(ctx, "y"), 0}});
  TensorResult t = derived_tensor(Kx, Ky);
  SemifreeCDGA Kxy = derived_quotient(base, {{parse_polynomial(ctx, "x"), 0},
                                             {parse_polynomial(ctx, "y"), 0}});
  CHECK(find_presentation_isomorphism(t.algebra, Kxy).has_value());
  HomologyTable a = homology_table(t.algebra, 0, 2, 0, 0, 5);
  HomologyTable c = homology_table(Kxy, 0, 2, 0, 0, 5);
  CHECK(a.equal_within_band(c));
  // unit: tensor with the base itself
  TensorResult u = derived_tensor(Kx, base);
  CHECK(same_presentation_by_name(u.algebra, Kx));
  // base mismatch rejected
  CDGABuilder other(make_context({"z"}));
  CHECK_THROWS_AS(derived_tensor(Kx, other.build()), Error);
}

TEST_CASE("base_change: identity and collapse") {
  auto ctx = make_context({"x", "y"});
  CDGABuilder b(ctx);
  SemifreeCDGA Kx = derived_quotient(b.build(), {{parse_polynomial(ctx, "x"), 0}});
  SemifreeCDGA same = base_change(Kx, std::map<std::string, std::string>{{"x", "x"}, {"y", "y"}});
  CHECK(same_presentation_by_name(same, Kx));
  SemifreeCDGA collapsed = base_change(Kx, std::map<std::string, std::string>{{"y", "0"}});
  CHECK(collapsed.base()->names() == std::vector<std::string>{"x"});
  CHECK(collapsed.gens().size() == 1);
}

TEST_CASE("localize adjoins a strict inverse") {
  CDGABuilder b(make_context({}));
  b.add({"t", 0, -1});
  SemifreeCDGA A = b.build();
  LocalizeResult loc = localize(A, "t");
  CHECK(loc.algebra.gens().size() == 3);
  int inv = loc.algebra.var_index(loc.inverse_name);
  CHECK(loc.algebra.weight_of_var(inv) == 1);
  // pi0 = Q[t, t_inv]/(t*t_inv - 1); a second inverse agrees on pi0
  Pi0Presentation p = loc.algebra.pi0();
  CHECK(p.gb.basis.size() == 1);
  LocalizeResult loc2 = localize(loc.algebra, "t");
  Pi0Presentation p2 = loc2.algebra.pi0();
  GroebnerBasis gb = p2.gb;
  Polynomial diff = parse_polynomial(p2.ring, loc.inverse_name) -
                    parse_polynomial(p2.ring, loc2.inverse_name);
  CHECK(in_ideal(diff, gb));
  CHECK_THROWS_AS(localize(A, "missing"), Error);
}

TEST_CASE("cancel_cell removes a contractible pair") {
  // d e = s - u^2 over Q[u]: cancelling returns the base
  {
    CDGABuilder b(make_context({"u"}));
    b.add({"s", 0, 0});
    b.add({"e", 1, 0}, "s - u^2");
    SemifreeCDGA A = b.build();
    SemifreeCDGA C = cancel_cell(A, "e", "s");
    CHECK(C.gens().empty());
    CHECK(C.base()->names() == std::vector<std::string>{"u"});
  }
  // chart-style: d e2 = v*s - y collapses to v*x - y under s -> x
  {
    CDGABuilder b(make_context({"x", "y"}));
    b.add({"v", 0, 0});
    b.add({"s", 0, 0});
    b.add({"e1", 1, 0}, "s - x");
    b.add({"e2", 1, 0}, "v*s - y");
    SemifreeCDGA A = b.build();
    SemifreeCDGA C = cancel_cell(A, "e1", "s");
    REQUIRE(C.gens().size() == 2);
    CHECK(C.diff_of_var(C.var_index("e2")) == C.poly("v*x - y"));
    // pi0 unchanged after eliminating the cancelled variable, homology unchanged
    Pi0Presentation pa = A.pi0();
    std::vector<int> keep;
    for (int v = 0; v < pa.ring->size(); ++v)
      if (pa.ring->name(v) != "s") keep.push_back(v);
    std::vector<Polynomial> elim = eliminate(pa.gb.basis, keep);
    std::vector<Polynomial> lifted;
    for (auto& g : C.pi0().gb.basis) lifted.push_back(g.mapped_to(pa.ring));
    CHECK(ideal_equal(elim, lifted, MonomialOrder::degrevlex()));
    HomologyTable ta = homology_table(A, 0, 2, 0, 0, 5);
    HomologyTable tc = homology_table(C, 0, 2, 0, 0, 5);
    CHECK(ta.equal_within_band(tc));
  }
  // nonlinear occurrence is rejected
  {
    CDGABuilder b(make_context({"u"}));
    b.add({"s", 0, 0});
    b.add({"e", 1, 0}, "s*u - u^2");
    SemifreeCDGA A = b.build();
    CHECK_THROWS_AS(cancel_cell(A, "e", "s"), Error);
  }
}

TEST_CASE("sym_algebra of free modules") {
  // rank 2 in hdeg 0: a polynomial algebra
  CDGABuilder b(make_context({}));
  DGModuleSpec M{b.build(), {{"x1", 0, 1}, {"x2", 0, 1}}, {}};
  SemifreeCDGA S = sym_algebra(M);
  CHECK(S.gens().size() == 2);
  auto piece2 = slice_basis(S, 0, 2, 4);
  long total = 0;
  for (auto& [d, mons] : piece2) total += static_cast<long>(mons.size());
  CHECK(total == 3);  // x1^2, x1 x2, x2^2

  // rank 1 in hdeg 1: exterior, Sym^n dims 1,1,0,...
  DGModuleSpec E{b.build(), {{"e", 1, 1}}, {}};
  SemifreeCDGA X = sym_algebra(E);
  auto w0 = slice_basis(X, 0, 0, 4);
  auto w1 = slice_basis(X, 1, 1, 4);
  long n0 = 0, n1 = 0;
  for (auto& [d, mons] : w0) n0 += static_cast<long>(mons.size());
  for (auto& [d, mons] : w1) n1 += static_cast<long>(mons.size());
  CHECK(n0 == 1);
  CHECK(n1 == 1);
  auto w2 = slice_basis(X, 2, 2, 4);
  long n2 = 0;
  for (auto& [d, mons] : w2) n2 += static_cast<long>(mons.size());
  CHECK(n2 == 0);
}

TEST_CASE("homogenize inserts h exactly when needed") {
  auto ctx = make_context({"x", "y"});
  CDGABuilder b(ctx);
  b.add({"e", 1, 0}, "y - x^2");
  SemifreeCDGA A = b.build();
  HomogenizeResult hr = homogenize(A);
  CHECK(hr.changed);
  const SemifreeCDGA& H = hr.algebra;
  int e = H.var_index("e");
  CHECK(H.intdeg_of_var(e) == 2);
  CHECK(H.diff_of_var(e) == H.poly("y*" + hr.h_name + " - x^2"));
  // homogeneous input is untouched
  SemifreeCDGA K = koszul_xy();
  CHECK(!homogenize(K).changed);
}

TEST_CASE("euler characteristic equals alternating chain dimensions") {
  // on a homogeneous algebra, per (weight, degree) slice
  CDGABuilder b(make_context({"x"}));
  b.add({"t", 0, -1, 0});
  b.add({"x1", 0, 1, 1});
  b.add({"e1", 1, 0}, "x1*t - x");
  SemifreeCDGA A = b.build();
  int kmax = max_relevant_hdeg(A, 5) + 1;
  HomologyTable t = homology_table(A, 0, kmax, 0, 0, 5);
  for (int d = 0; d <= t.certified_band; ++d) {
    long chi_h = 0, chi_c = 0;
    for (int k = 0; k <= kmax; ++k) {
      long sign = (k % 2 == 0) ? 1 : -1;
      chi_h += sign * t.dim(k, 0, d);
      auto dims = chain_dimensions(A, k, 0, 5);
      chi_c += sign * (dims.count(d) ? dims[d] : 0);
    }
    CHECK(chi_h == chi_c);
  }
}

TEST_CASE("hom commutes check and hk surjectivity") {
  auto ctx = make_context({"x"});
  CDGABuilder b1(ctx);
  b1.add({"E1", 1, 0}, "x");
  SemifreeCDGA src = b1.build();
  CDGABuilder b2(ctx);
  b2.add({"e1", 1, 0}, "x");
  SemifreeCDGA dst = b2.build();
  HkSurjectivityReport rep = hk_surjective(src, dst, {{"E1", "e1"}}, 1, 0, 5);
  CHECK(rep.surjective);
  // the zero map out of trivial H1 is not surjective onto a nontrivial one
  CDGABuilder b3(ctx);
  SemifreeCDGA triv = b3.build();
  CDGABuilder b4(ctx);
  b4.add({"e1", 1, 0});  // de1 = 0, H1 nonzero
  SemifreeCDGA loose = b4.build();
  HkSurjectivityReport rep2 = hk_surjective(triv, loose, {}, 1, 0, 5);
  CHECK(!rep2.surjective);
}
