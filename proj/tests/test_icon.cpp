#include <doctest.h>

#include "grayfac/catalog.hpp"
#include "grayfac/icon.hpp"
#include "grayfac/search.hpp"

using namespace grayfac;

namespace {

std::vector<Fin2CategoryPtr> small_catalog() {
  return {standard_cell(0), standard_cell(1), standard_cell(2), walking_invertible_2cell(), walking_isomorphism()};
}

bool skip_pair(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b) {
  return a->name() == "walking_iso_1cell" && b->name() == "walking_iso_1cell";
}

}  // namespace

TEST_CASE("icons form a 2-category") {
  auto a = standard_cell(1);
  auto b = walking_invertible_2cell();
  auto c = standard_cell(2);
  std::vector<PseudoFunctor> fs, hs;
  for (const auto& f : enumerate_2functors(a, b)) fs.push_back(as_pseudo(f));
  for (const auto& h : enumerate_2functors(b, c)) hs.push_back(as_pseudo(h));
  std::size_t triples = 0;
  for (const auto& f : fs) {
    CHECK(identity_icon(f).is_valid());
    for (const auto& g : fs) {
      for (const auto& h : fs) {
        auto ab = enumerate_icons(f, g);
        auto bc = enumerate_icons(g, h);
        for (const auto& x : ab) {
          CHECK(x.is_valid());
          CHECK(vcomp(x, identity_icon(f)) == x);
          CHECK(vcomp(identity_icon(g), x) == x);
          for (const auto& y : bc) {
            Icon yx = vcomp(y, x);
            CHECK(yx.is_valid());
            for (const auto& z : enumerate_icons(h, h)) {
              CHECK(vcomp(z, yx) == vcomp(vcomp(z, y), x));
              ++triples;
            }
          }
        }
      }
    }
  }
  CHECK(triples > 0);
  // interchange between vertical and horizontal composition
  for (const auto& f : fs) {
    for (const auto& g : fs) {
      for (const auto& k : hs) {
        for (const auto& l : hs) {
          for (const auto& x : enumerate_icons(f, g)) {
            for (const auto& y : enumerate_icons(k, l)) {
              Icon h = hcomp(y, x);
              CHECK(h.is_valid());
              CHECK(h == vcomp(hcomp(y, identity_icon(g)), hcomp(identity_icon(k), x)));
              CHECK(h == vcomp(hcomp(identity_icon(l), x), hcomp(y, identity_icon(f))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("strict functors are cubical, R is cubical") {
  for (const auto& a : small_catalog()) {
    for (const auto& b : small_catalog()) {
      if (skip_pair(a, b)) continue;
      auto t = gray_tensor(a, b);
      PseudoFunctor r = universal_R(t);
      CAPTURE(a->name());
      CAPTURE(b->name());
      CHECK(r.is_valid());
      CHECK(is_cubical(r, *a, *b));
      CHECK(is_cubical(as_pseudo(projection(t.prod, a, b, 0)), *a, *b));
      // comparison cells are identities exactly on the degenerate pairs
      const int nb1 = b->num_1cells();
      t.prod->underlying().comp_table().for_each([&](int g, int f, int) {
        bool degenerate = a->is_identity1(pair_part(f, nb1, 0)) || b->is_identity1(pair_part(g, nb1, 1));
        CHECK(t.cat->is_identity2(r.comp.get(g, f)) == degenerate);
      });
      // Q∘R is the identity on all data
      CHECK(compose(as_pseudo(t.q), r) == as_pseudo(identity_2functor(t.prod)));
    }
  }
}

TEST_CASE("R on the free 1-cell squared") {
  auto s1 = standard_cell(1);
  auto t = gray_tensor(s1, s1);
  PseudoFunctor r = universal_R(t);
  const int n1 = s1->num_1cells();
  CellId u = *s1->find1("u");
  CellId id0 = s1->id1(0), id1 = s1->id1(1);
  CHECK(t.word(r.c1[pair_id(id0, id0, n1)]).letters.empty());
  const Word& diag = t.word(r.c1[pair_id(u, u, n1)]);
  REQUIRE(diag.letters.size() == 2);
  CHECK(diag.letters[0] == Letter{1, u});
  CHECK(diag.letters[1] == Letter{0, u});
  // the diagonal passes through (0, 1)
  CHECK(word_target(*s1, *s1, Word{0, 0, {diag.letters[0]}}) == std::pair<ObjId, ObjId>{0, 1});
  // a degenerate comparison forced to be non-identity is no longer cubical
  CellId f = pair_id(id0, u, n1);  // (1, u)
  CellId g = pair_id(u, id1, n1);  // (u, 1)
  CHECK(t.cat->is_identity2(r.comp.get(g, f)));
  CellId other = kNone;
  for (CellId s = 0; s < t.cat->num_2cells(); ++s) {
    if (!t.cat->is_identity2(s)) other = s;
  }
  PseudoFunctor bad = r;
  bad.comp.set(g, f, other);
  CHECK_FALSE(is_cubical(bad, *s1, *s1));
}

TEST_CASE("cubical functors correspond to 2-functors out of the Gray tensor") {
  const std::vector<std::pair<Fin2CategoryPtr, Fin2CategoryPtr>> pairs = {
      {standard_cell(1), standard_cell(1)}, {standard_cell(2), standard_cell(1)},
      {standard_cell(1), walking_invertible_2cell()}};
  const std::vector<Fin2CategoryPtr> targets = {standard_cell(1), standard_cell(2), walking_invertible_2cell(),
                                                pseudo_commutative_square()};
  for (const auto& [a, b] : pairs) {
    auto t = gray_tensor(a, b);
    for (const auto& c : targets) {
      CAPTURE(a->name());
      CAPTURE(b->name());
      CAPTURE(c->name());
      auto ls = enumerate_2functors(t.cat, c);
      for (const auto& l : ls) {
        PseudoFunctor f = cubical_from_2functor(t, l);
        CHECK(f.is_valid());
        CHECK(is_cubical(f, *a, *b));
        CHECK(two_functor_from_cubical(t, f) == l);
      }
      auto cubs = enumerate_cubical(t.prod, a, b, c);
      CHECK(cubs.size() == ls.size());
      for (const auto& f : cubs) {
        TwoFunctor l = two_functor_from_cubical(t, f);
        CHECK(l.is_valid());
        CHECK(cubical_from_2functor(t, l) == f);
      }
      auto ps = build_hom(b, c, HomKind::Pseudo);
      Limits wide;
      wide.max_objects = 16;
      wide.max_one_cells = 120;
      wide.max_two_cells = 200;
      CHECK(count_2functors(a, ps.cat, wide) == ls.size());
    }
    // the identity corresponds to R
    CHECK(cubical_from_2functor(t, identity_2functor(t.cat)) == universal_R(t));
    CHECK(two_functor_from_cubical(t, universal_R(t)) == identity_2functor(t.cat));
  }
}

TEST_CASE("evaluation is cubical") {
  const std::vector<std::pair<Fin2CategoryPtr, Fin2CategoryPtr>> pairs = {
      {standard_cell(1), standard_cell(1)}, {standard_cell(1), walking_invertible_2cell()},
      {standard_cell(2), standard_cell(1)}, {standard_cell(0), standard_cell(2)}};
  for (const auto& [b, c] : pairs) {
    auto ps = build_hom(b, c, HomKind::Pseudo);
    auto prod = product(ps.cat, b);
    PseudoFunctor ev = ev_cubical(ps, prod);
    CAPTURE(b->name());
    CAPTURE(c->name());
    CHECK(ev.is_valid());
    CHECK(is_cubical(ev, *ps.cat, *b));
    for (ObjId fa = 0; fa < prod->num_objects(); ++fa) {
      ObjId f = pair_part(fa, b->num_objects(), 0);
      ObjId x = pair_part(fa, b->num_objects(), 1);
      CHECK(ev.obj[fa] == ps.functors[f].obj[x]);
    }
    auto t = gray_tensor(ps.cat, b);
    TwoFunctor e = two_functor_from_cubical(t, ev);
    CHECK(e.is_valid());
    CHECK(cubical_from_2functor(t, e) == ev);
  }
  // B = C = S1: the table on 1-cells, by hand
  auto s1 = standard_cell(1);
  auto ps = build_hom(s1, s1, HomKind::Pseudo);
  auto prod = product(ps.cat, s1);
  PseudoFunctor ev = ev_cubical(ps, prod);
  const int n1 = s1->num_1cells();
  for (CellId e = 0; e < ps.cat->num_1cells(); ++e) {
    const Transformation& eta = ps.transformations[e];
    for (CellId al = 0; al < n1; ++al) {
      CellId want = s1->comp1(eta.object[s1->cell1(al).tgt], ps.functors[eta.src].c1[al]);
      CHECK(ev.c1[pair_id(e, al, n1)] == want);
    }
  }
}

TEST_CASE("pseudolimit of an arrow") {
  auto s0 = standard_cell(0);
  auto s1 = standard_cell(1);
  auto s2 = standard_cell(2);
  SUBCASE("identity on S1") {
    auto cone = pseudolimit_of_arrow(as_pseudo(identity_2functor(s1)));
    CHECK(find_isomorphism(cone.apex, s1).has_value());
  }
  SUBCASE("S1 to the terminal 2-category") {
    auto f = as_pseudo(enumerate_2functors(s1, s0)[0]);
    auto cone = pseudolimit_of_arrow(f);
    CHECK(cone.apex->num_objects() == 2);
    CHECK(cone.apex->num_1cells() == 3);
    for (const auto& t : cone.triples) CHECK(t.g == s0->id1(0));
  }
  std::vector<PseudoFunctor> fs = {as_pseudo(identity_2functor(walking_invertible_2cell())),
                                   as_pseudo(enumerate_2functors(s2, s1)[2]), universal_R(gray_tensor(s1, s1))};
  for (const auto& f : fs) {
    auto cone = pseudolimit_of_arrow(f);
    CAPTURE(f.dom->name());
    CHECK(cone.s.is_valid());
    CHECK(cone.t.is_valid());
    CHECK(cone.lambda.is_valid());
    for (ObjId x = 0; x < cone.apex->num_objects(); ++x) CHECK(cone.s.obj[x] == x);
    for (std::size_t i = 0; i < cone.triples.size(); ++i) CHECK(cone.lambda.component[i] == cone.triples[i].theta);
    for (CellId s = 0; s < cone.apex->num_2cells(); ++s) {
      bool both = f.dom->is_identity2(cone.s.c2[s]) && f.cod->is_identity2(cone.t.c2[s]);
      CHECK(both == cone.apex->is_identity2(s));
    }
    auto report = check_pseudolimit(cone, f, {s0, s1, s2});
    CHECK(report.cones > 0);
    CHECK(report.cell_problems > 0);
    CHECK(report.ok());
  }
  // universal_R(S1,S1): every triple (f, θ, g) with θ: g ≅ R f
  auto t = gray_tensor(s1, s1);
  auto r = universal_R(t);
  auto cone = pseudolimit_of_arrow(r);
  std::size_t expect = 0;
  for (CellId f = 0; f < t.prod->num_1cells(); ++f) {
    for (CellId g : t.cat->hom1(t.prod->cell1(f).src, t.prod->cell1(f).tgt)) {
      for (CellId th : t.cat->hom2(g, r.c1[f])) expect += t.cat->is_invertible2(th);
    }
  }
  CHECK(cone.apex->num_1cells() == static_cast<int>(expect));
}

TEST_CASE("Q is an equivalence in the 2-category of icons") {
  for (const auto& a : small_catalog()) {
    for (const auto& b : small_catalog()) {
      if (skip_pair(a, b)) continue;
      auto t = gray_tensor(a, b);
      auto eq = icon_equivalence_Q(t);
      CAPTURE(a->name());
      CAPTURE(b->name());
      CHECK(eq.qr_identity);
      CHECK(eq.bijective_on_objects);
      CHECK(eq.locally_fully_faithful);
      CHECK(eq.locally_essentially_surjective);
      CHECK(eq.icon_axioms);
    }
  }
  auto s0 = standard_cell(0);
  auto e0 = icon_equivalence_Q(gray_tensor(s0, s0));
  CHECK(e0.unit == identity_icon(e0.unit.src));
  auto s1 = standard_cell(1);
  auto t = gray_tensor(s1, s1);
  auto e1 = icon_equivalence_Q(t);
  for (CellId w = 0; w < t.cat->num_1cells(); ++w) {
    bool diagonal = t.word(w).letters.size() == 2;
    bool rq_fixed = e1.unit.tgt.c1[w] == w;
    CHECK(t.cat->is_identity2(e1.unit.component[w]) == rq_fixed);
    // only the diagonal through (1, 0) moves, to the one through (0, 1)
    if (!rq_fixed) {
      CHECK(diagonal);
      CHECK(t.word(w).letters[0].coord == 0);
    }
  }
}
