#include "doctest.h"

#include "grayfac/catalog.hpp"
#include "grayfac/kernel.hpp"

using namespace grayfac;

namespace {

struct Counts {
  int objects, one, two;
};

Counts counts(const Fin2Category& c) { return {c.num_objects(), c.num_1cells(), c.num_2cells()}; }

// Rebuilds c from its raw tables, optionally breaking one hcomp entry.
Fin2CategoryPtr rebuild(const Fin2Category& c, int corrupt_h = -1) {
  Fin2Category::Builder b(c.name());
  for (ObjId x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
  for (CellId f = 0; f < c.num_1cells(); ++f) b.add_1cell(c.cell1(f).name, c.cell1(f).src, c.cell1(f).tgt);
  for (ObjId x = 0; x < c.num_objects(); ++x) b.set_identity1(x, c.id1(x));
  for (CellId s = 0; s < c.num_2cells(); ++s) {
    if (c.is_identity2(s)) {
      b.add_identity2(c.cell2(s).src, c.cell2(s).name);
    } else {
      b.add_2cell(c.cell2(s).name, c.cell2(s).src, c.cell2(s).tgt);
    }
  }
  for (auto [g, f, gf] : c.underlying().comp_table().sorted_entries()) b.set_comp1(g, f, gf);
  for (auto [t, s, ts] : c.vcomp_table().sorted_entries()) b.set_vcomp(t, s, ts);
  int i = 0;
  for (auto [t, s, ts] : c.hcomp_table().sorted_entries()) {
    if (i++ == corrupt_h) {
      // pick another cell with the same boundary if one exists, else a wrong one
      CellId other = ts;
      for (CellId u : c.hom2(c.cell2(ts).src, c.cell2(ts).tgt)) {
        if (u != ts) other = u;
      }
      if (other == ts) other = (ts + 1) % c.num_2cells();
      b.set_hcomp(t, s, other);
    } else {
      b.set_hcomp(t, s, ts);
    }
  }
  return b.build();
}

}  // namespace

TEST_CASE("standard cells have the expected sizes") {
  auto s0 = counts(*standard_cell(0));
  auto s1 = counts(*standard_cell(1));
  auto s2 = counts(*standard_cell(2));
  CHECK(s0.objects == 1);
  CHECK(s0.one == 1);
  CHECK(s0.two == 1);
  CHECK(s1.objects == 2);
  CHECK(s1.one == 3);
  CHECK(s1.two == 3);
  CHECK(s2.objects == 2);
  CHECK(s2.one == 4);
  CHECK(s2.two == 5);
}

TEST_CASE("every catalog entry validates serially and in parallel") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    auto c = e.make();
    CHECK_NOTHROW(c->validate(true));
    CHECK_NOTHROW(validate_serial(*c));
    auto again = rebuild(*c);
    CHECK(again->same_tables(*c));
  }
}

TEST_CASE("pseudo-commutative square fixture") {
  auto c = pseudo_commutative_square();
  CHECK(c->num_objects() == 4);
  CHECK(c->num_1cells() == 10);
  CHECK(c->num_2cells() == 12);
  CHECK(is_locally_contractible(*c));
}

TEST_CASE("square with two 2-cells fixture satisfies the pasting equation") {
  auto c = square_with_two_cells();
  CHECK(c->num_objects() == 4);
  CHECK(c->num_1cells() == 14);
  CHECK(c->num_2cells() == 24);
  CellId f = path_cell(*c, {"f"}), f2 = path_cell(*c, {"f'"});
  CellId g = path_cell(*c, {"g"}), g2 = path_cell(*c, {"g'"});
  CellId r = path_cell(*c, {"r"}), s = path_cell(*c, {"s"});
  CellId gr = path_cell(*c, {"r", "g"}), sf = path_cell(*c, {"f", "s"});
  CellId g2r = path_cell(*c, {"r", "g'"}), sf2 = path_cell(*c, {"f'", "s"});
  CHECK(c->hom2(gr, sf).size() == 1);
  CHECK(c->hom2(g2r, sf2).size() == 1);
  CellId alpha = c->hom2(f, f2)[0];
  CellId beta = c->hom2(g, g2)[0];
  CellId theta = c->hom2(gr, sf)[0];
  CellId theta2 = c->hom2(g2r, sf2)[0];
  CHECK(c->is_invertible2(theta));
  CHECK(c->is_invertible2(theta2));
  CHECK_FALSE(c->is_invertible2(alpha));
  CellId lhs = c->vcomp(theta2, c->whisker_pre(beta, r));
  CellId rhs = c->vcomp(c->whisker_post(s, alpha), theta);
  CHECK(lhs == rhs);
  CHECK(c->cell2(lhs).src == gr);
  CHECK(c->cell2(lhs).tgt == sf2);
}

TEST_CASE("broken interchange is rejected") {
  auto c = square_with_two_cells();
  bool rejected_some = false;
  for (std::size_t i = 0; i < c->hcomp_table().size(); ++i) {
    try {
      rebuild(*c, static_cast<int>(i));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AxiomViolation);
      rejected_some = true;
      continue;
    }
    FAIL("corrupted hcomp entry accepted");
  }
  CHECK(rejected_some);
}

TEST_CASE("local contractibility") {
  CHECK(is_locally_contractible(*standard_cell(0)));
  CHECK(is_locally_contractible(*standard_cell(1)));
  CHECK_FALSE(is_locally_contractible(*standard_cell(2)));
  CHECK(is_locally_contractible(*walking_invertible_2cell()));
  for (const auto& c : locally_contractible_catalog()) {
    for (CellId s = 0; s < c->num_2cells(); ++s) CHECK(c->is_invertible2(s));
  }
}

TEST_CASE("discrete part and object inclusion") {
  auto pc = pseudo_commutative_square();
  auto d = discrete(*pc);
  CHECK(d->num_objects() == 4);
  CHECK(d->num_1cells() == 4);
  CHECK(d->num_2cells() == 4);
  CHECK(object_inclusion(pc).is_valid());
  CHECK(discrete(*standard_cell(0))->same_tables(*standard_cell(0)));
}

TEST_CASE("locally discrete 2-category recovers its underlying category") {
  for (const auto& e : catalog()) {
    auto c = e.make();
    auto ld = locally_discrete(c->underlying_ptr(), "ld");
    CHECK(ld->underlying() == c->underlying());
    CHECK(is_locally_discrete(*ld));
  }
}

TEST_CASE("identity and composite 2-functors") {
  auto c = square_with_two_cells();
  auto id = identity_2functor(c);
  CHECK(id.is_valid());
  CHECK(compose(id, id) == id);
  auto p = as_pseudo(id);
  CHECK(p.is_valid());
  CHECK(p.is_normal());
  CHECK(compose(p, p) == p);
}
