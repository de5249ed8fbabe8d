#include <doctest.h>

#include <functional>
#include <set>

#include "grayfac/catalog.hpp"
#include "grayfac/homs.hpp"
#include "grayfac/search.hpp"

using namespace grayfac;

namespace {

const std::vector<std::string> kSmall = {"S0", "S1", "S2", "walking_iso", "walking_iso_1cell", "loop"};

// Pseudonatural transformations counted by trying every tuple of components.
std::size_t brute_pseudo_count(const TwoFunctor& f, const TwoFunctor& g) {
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  std::vector<std::vector<CellId>> obj_choices;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    auto h = b.hom1(f.obj[x], g.obj[x]);
    obj_choices.emplace_back(h.begin(), h.end());
  }
  std::size_t count = 0;
  Transformation t{0, 0, std::vector<CellId>(a.num_objects()), std::vector<CellId>(a.num_1cells())};
  std::function<void(int)> arrows = [&](int k) {
    if (k == a.num_1cells()) {
      if (is_pseudonatural(f, g, t)) ++count;
      return;
    }
    for (CellId c = 0; c < b.num_2cells(); ++c) {
      t.arrow[k] = c;
      arrows(k + 1);
    }
  };
  std::function<void(int)> objects = [&](int k) {
    if (k == a.num_objects()) {
      arrows(0);
      return;
    }
    for (CellId e : obj_choices[k]) {
      t.object[k] = e;
      objects(k + 1);
    }
  };
  objects(0);
  return count;
}

bool bijective(const TwoFunctor& f) {
  auto perm = [](const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int x : v) {
      if (x < 0 || x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  return perm(f.obj, f.cod->num_objects()) && perm(f.c1, f.cod->num_1cells()) && perm(f.c2, f.cod->num_2cells());
}

}  // namespace

TEST_CASE("hom kinds parse") {
  CHECK(parse_hom_kind("ps") == HomKind::Pseudo);
  CHECK(parse_hom_kind("pseudo") == HomKind::Pseudo);
  CHECK(parse_hom_kind("funny") == HomKind::Funny);
  CHECK(to_string(HomKind::Strict) == "strict");
  CHECK_THROWS_AS(parse_hom_kind("lax"), Error);
}

TEST_CASE("pseudo hom of S1 with itself") {
  auto s1 = standard_cell(1);
  HomCategory h = build_hom(s1, s1, HomKind::Pseudo);
  CHECK(h.cat->num_objects() == 3);
  int id = -1;
  for (int i = 0; i < 3; ++i) {
    if (h.functors[i] == identity_2functor(s1)) id = i;
  }
  REQUIRE(id >= 0);
  CHECK(h.cat->hom1(id, id).size() == 1);
  CHECK(h.cat->is_identity1(h.cat->hom1(id, id)[0]));
}

TEST_CASE("homs out of S0 recover the codomain") {
  auto s0 = standard_cell(0);
  for (const auto& name : kSmall) {
    auto b = catalog_get(name);
    for (HomKind k : {HomKind::Strict, HomKind::Funny, HomKind::Pseudo}) {
      HomCategory h = build_hom(s0, b, k);
      CAPTURE(name);
      CHECK(find_isomorphism(h.cat, b).has_value());
    }
  }
}

TEST_CASE("funny hom between constants is a product of hom-categories") {
  auto s1 = standard_cell(1);
  for (const auto& name : {"S2", "walking_iso"}) {
    auto b = catalog_get(name);
    HomCategory h = build_hom(s1, b, HomKind::Funny);
    for (int i = 0; i < h.cat->num_objects(); ++i) {
      for (int j = 0; j < h.cat->num_objects(); ++j) {
        const TwoFunctor& f = h.functors[i];
        const TwoFunctor& g = h.functors[j];
        std::size_t twos = 0;
        std::size_t ones = b->hom1(f.obj[0], g.obj[0]).size() * b->hom1(f.obj[1], g.obj[1]).size();
        for (CellId e : h.cat->hom1(i, j)) {
          for (CellId e2 : h.cat->hom1(i, j)) twos += h.cat->hom2(e, e2).size();
        }
        std::size_t expect2 = 0;
        for (CellId p : b->hom1(f.obj[0], g.obj[0])) {
          for (CellId p2 : b->hom1(f.obj[0], g.obj[0])) {
            for (CellId q : b->hom1(f.obj[1], g.obj[1])) {
              for (CellId q2 : b->hom1(f.obj[1], g.obj[1])) {
                expect2 += b->hom2(p, p2).size() * b->hom2(q, q2).size();
              }
            }
          }
        }
        CHECK(h.cat->hom1(i, j).size() == ones);
        CHECK(twos == expect2);
      }
    }
  }
  // S1 into S1: constant-at-0 to constant-at-1 has one component choice u at each object
  HomCategory h = build_hom(s1, s1, HomKind::Funny);
  int c0 = -1, c1 = -1;
  for (int i = 0; i < 3; ++i) {
    if (h.functors[i].obj == std::vector<ObjId>{0, 0}) c0 = i;
    if (h.functors[i].obj == std::vector<ObjId>{1, 1}) c1 = i;
  }
  CHECK(h.cat->hom1(c0, c1).size() == 1);
}

TEST_CASE("pseudonatural enumeration agrees with brute force") {
  for (const auto& an : {"S1", "S2", "walking_iso_1cell"}) {
    for (const auto& bn : {"S1", "S2", "walking_iso", "walking_iso_1cell"}) {
      auto a = catalog_get(an);
      auto b = catalog_get(bn);
      HomCategory h = build_hom(a, b, HomKind::Pseudo);
      for (int i = 0; i < h.cat->num_objects(); ++i) {
        for (int j = 0; j < h.cat->num_objects(); ++j) {
          CAPTURE(an);
          CAPTURE(bn);
          CHECK(h.cat->hom1(i, j).size() == brute_pseudo_count(h.functors[i], h.functors[j]));
        }
      }
      for (const Transformation& t : h.transformations) {
        CHECK(is_pseudonatural(h.functors[t.src], h.functors[t.tgt], t));
        for (CellId c : t.arrow) CHECK(b->is_invertible2(c));
      }
    }
  }
}

TEST_CASE("strict transformations are 2-natural and all homs validate") {
  for (const auto& an : kSmall) {
    for (const auto& bn : kSmall) {
      auto a = catalog_get(an);
      auto b = catalog_get(bn);
      for (HomKind k : {HomKind::Strict, HomKind::Funny, HomKind::Pseudo}) {
        HomCategory h = build_hom(a, b, k);
        CAPTURE(an);
        CAPTURE(bn);
        CHECK_NOTHROW(h.cat->validate());
        if (k == HomKind::Strict) {
          for (const Transformation& t : h.transformations) CHECK(is_2natural(h.functors[t.src], h.functors[t.tgt], t));
        }
      }
    }
  }
}

TEST_CASE("inclusions form a commuting triangle") {
  for (const auto& an : kSmall) {
    for (const auto& bn : kSmall) {
      auto a = catalog_get(an);
      auto b = catalog_get(bn);
      HomCategory s = build_hom(a, b, HomKind::Strict);
      HomCategory p = build_hom(a, b, HomKind::Pseudo);
      HomCategory f = build_hom(a, b, HomKind::Funny);
      Inclusions in = inclusions(s, p, f);
      CAPTURE(an);
      CAPTURE(bn);
      CHECK(in.j1.is_valid());
      CHECK(in.j2.is_valid());
      CHECK(in.j.is_valid());
      CHECK(in.j == compose(in.j2, in.j1));
      if (an == "S0") {
        CHECK(bijective(in.j1));
        CHECK(bijective(in.j2));
        CHECK(bijective(in.j));
      }
    }
  }
  auto s1 = standard_cell(1);
  HomCategory p = build_hom(s1, s1, HomKind::Pseudo);
  Inclusions in = inclusions(build_hom(s1, s1, HomKind::Strict), p, build_hom(s1, s1, HomKind::Funny));
  std::set<CellId> images(in.j2.c1.begin(), in.j2.c1.end());
  CHECK(images.size() == in.j2.c1.size());
}

TEST_CASE("J2 is invertible into a locally contractible codomain") {
  for (const auto& c : locally_contractible_catalog()) {
    for (const auto& bn : kSmall) {
      auto b = catalog_get(bn);
      HomCategory p = build_hom(b, c, HomKind::Pseudo);
      HomCategory f = build_hom(b, c, HomKind::Funny);
      Inclusions in = inclusions(build_hom(b, c, HomKind::Strict), p, f);
      CAPTURE(bn);
      CAPTURE(c->name());
      CHECK(bijective(in.j2));
    }
  }
}

TEST_CASE("maps into a pseudo hom are symmetric in the two arguments") {
  const std::vector<std::string> names = {"S0", "S1", "S2", "walking_iso"};
  for (const auto& an : names) {
    for (const auto& bn : names) {
      for (const auto& cn : {"S1", "S2", "walking_iso"}) {
        auto a = catalog_get(an);
        auto b = catalog_get(bn);
        auto c = catalog_get(cn);
        auto left = count_2functors(a, build_hom(b, c, HomKind::Pseudo).cat);
        auto right = count_2functors(b, build_hom(a, c, HomKind::Pseudo).cat);
        CAPTURE(an);
        CAPTURE(bn);
        CAPTURE(cn);
        CHECK(left == right);
      }
    }
  }
}
