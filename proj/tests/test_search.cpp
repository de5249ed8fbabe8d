#include "doctest.h"

#include "grayfac/catalog.hpp"
#include "grayfac/search.hpp"

using namespace grayfac;

TEST_CASE("2-functor counts on standard cells") {
  auto s0 = standard_cell(0), s1 = standard_cell(1), s2 = standard_cell(2);
  CHECK(enumerate_2functors(s1, s1).size() == 3);
  CHECK(enumerate_2functors(s1, s0).size() == 1);
  CHECK(enumerate_2functors(s0, s2).size() == 2);
  auto pc = pseudo_commutative_square();
  CHECK(enumerate_2functors(s0, pc).size() == 4);
  // 1-cells of pc (each is a 2-functor S1 -> pc)
  CHECK(enumerate_2functors(s1, pc).size() == 10);
  // 2-cells of pc
  CHECK(enumerate_2functors(s2, pc).size() == 12);
}

TEST_CASE("every enumerated map is a valid 2-functor and the serial path agrees") {
  std::vector<Fin2CategoryPtr> cats;
  for (const auto& e : catalog()) cats.push_back(e.make());
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      if (a->num_1cells() > 10 || b->num_1cells() > 10) continue;
      CAPTURE(a->name());
      CAPTURE(b->name());
      auto par = enumerate_2functors(a, b, {}, true);
      auto ser = enumerate_2functors(a, b, {}, false);
      CHECK(par == ser);
      CHECK(count_2functors(a, b, {}, true) == par.size());
      for (const auto& f : par) CHECK(f.is_valid());
    }
  }
}

TEST_CASE("isomorphism search") {
  auto s1 = standard_cell(1), s2 = standard_cell(2);
  auto iso = find_isomorphism(s1, s1);
  REQUIRE(iso);
  CHECK(*iso == identity_2functor(s1));
  CHECK_FALSE(find_isomorphism(s1, s2));
  auto pc = pseudo_commutative_square();
  auto self = find_isomorphism(pc, pc);
  REQUIRE(self);
  CHECK(is_isomorphism(*self));
  CHECK(compose(inverse(*self), *self) == identity_2functor(pc));
}

TEST_CASE("size limit") {
  Limits tiny;
  tiny.max_one_cells = 3;
  CHECK_THROWS_AS(enumerate_2functors(standard_cell(2), standard_cell(1), tiny), Error);
}
