#include "grayfac/icon.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "grayfac/search.hpp"

namespace grayfac {

namespace {

[[noreturn]] void violation(const std::string& axiom, const std::string& witness) {
  throw Error(ErrorKind::AxiomViolation, axiom + " (" + witness + ")");
}

void check_cells(std::size_t total, const Limits& limits, const std::string& what) {
  if (total > limits.max_cells) {
    throw Error(ErrorKind::SizeLimit, what + " exceed " + std::to_string(limits.max_cells) + " cells");
  }
}

CellId inverse_of(const Fin2Category& c, CellId s) {
  auto inv = c.inverse2(s);
  if (!inv) violation("invertible 2-cell", c.cell2(s).name);
  return *inv;
}

struct IconChecks {
  // checks indexed by the position at which their last component is fixed
  std::vector<std::vector<ObjId>> unit;
  std::vector<std::vector<CellId>> nat;
  std::vector<std::vector<std::pair<CellId, CellId>>> comp;
};

IconChecks icon_checks(const Fin2Category& a) {
  IconChecks k;
  const int n = a.num_1cells();
  k.unit.resize(n);
  k.nat.resize(n);
  k.comp.resize(n);
  for (ObjId x = 0; x < a.num_objects(); ++x) k.unit[a.id1(x)].push_back(x);
  for (CellId s = 0; s < a.num_2cells(); ++s) k.nat[std::max(a.cell2(s).src, a.cell2(s).tgt)].push_back(s);
  a.underlying().comp_table().for_each([&](int g, int f, int gf) { k.comp[std::max({g, f, gf})].push_back({g, f}); });
  return k;
}

bool unit_ok(const Icon& i, ObjId x) {
  const Fin2Category& a = *i.src.dom;
  const Fin2Category& b = *i.src.cod;
  return b.vcomp(i.tgt.unit[x], i.component[a.id1(x)]) == i.src.unit[x];
}

bool nat_ok(const Icon& i, CellId s) {
  const Fin2Category& a = *i.src.dom;
  const Fin2Category& b = *i.src.cod;
  const TwoCell& c = a.cell2(s);
  CellId lhs = b.vcomp(i.tgt.c2[s], i.component[c.src]);
  return lhs != kNone && lhs == b.vcomp(i.component[c.tgt], i.src.c2[s]);
}

bool comp_ok(const Icon& i, CellId g, CellId f) {
  const Fin2Category& a = *i.src.dom;
  const Fin2Category& b = *i.src.cod;
  CellId lhs = b.vcomp(i.tgt.comp.get(g, f), i.component[a.comp1(g, f)]);
  return lhs != kNone && lhs == b.vcomp(b.hcomp(i.component[g], i.component[f]), i.src.comp.get(g, f));
}

}  // namespace

// -------------------------------------------------------------------- icons

void Icon::validate() const {
  const Fin2Category& a = *src.dom;
  const Fin2Category& b = *src.cod;
  if (src.obj != tgt.obj) violation("icon endpoints agree on objects", a.name());
  if (static_cast<int>(component.size()) != a.num_1cells()) violation("icon shape", "one component per 1-cell");
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    CellId c = component[f];
    if (c < 0 || c >= b.num_2cells() || b.cell2(c).src != src.c1[f] || b.cell2(c).tgt != tgt.c1[f]) {
      violation("icon component boundaries", a.cell1(f).name);
    }
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (!unit_ok(*this, x)) violation("icon unit axiom", a.object_name(x));
  }
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    if (!nat_ok(*this, s)) violation("icon naturality", a.cell2(s).name);
  }
  a.underlying().comp_table().for_each([&](int g, int f, int) {
    if (!comp_ok(*this, g, f)) violation("icon composition axiom", a.cell1(g).name + " o " + a.cell1(f).name);
  });
}

bool Icon::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

Icon identity_icon(const PseudoFunctor& f) {
  Icon i{f, f, {}};
  for (CellId c : f.c1) i.component.push_back(f.cod->id2(c));
  return i;
}

Icon vcomp(const Icon& beta, const Icon& alpha) {
  Icon i{alpha.src, beta.tgt, {}};
  for (std::size_t f = 0; f < alpha.component.size(); ++f) {
    i.component.push_back(alpha.src.cod->vcomp(beta.component[f], alpha.component[f]));
  }
  return i;
}

Icon hcomp(const Icon& beta, const Icon& alpha) {
  Icon i{compose(beta.src, alpha.src), compose(beta.tgt, alpha.tgt), {}};
  const Fin2Category& c = *beta.src.cod;
  for (std::size_t f = 0; f < alpha.component.size(); ++f) {
    i.component.push_back(c.vcomp(beta.component[alpha.tgt.c1[f]], beta.src.c2[alpha.component[f]]));
  }
  return i;
}

std::vector<Icon> enumerate_icons(const PseudoFunctor& f, const PseudoFunctor& g, const Limits& limits) {
  std::vector<Icon> out;
  if (f.obj != g.obj) return out;
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  IconChecks checks = icon_checks(a);
  Icon cur{f, g, std::vector<CellId>(a.num_1cells(), kNone)};
  std::function<void(CellId)> step = [&](CellId k) {
    if (k == a.num_1cells()) {
      if (out.size() >= limits.max_results) throw Error(ErrorKind::SizeLimit, "too many icons");
      out.push_back(cur);
      return;
    }
    for (CellId c : b.hom2(f.c1[k], g.c1[k])) {
      cur.component[k] = c;
      bool ok = true;
      for (ObjId x : checks.unit[k]) ok = ok && unit_ok(cur, x);
      for (CellId s : checks.nat[k]) ok = ok && nat_ok(cur, s);
      for (const auto& [g2, f2] : checks.comp[k]) ok = ok && comp_ok(cur, g2, f2);
      if (ok) step(k + 1);
    }
    cur.component[k] = kNone;
  };
  step(0);
  return out;
}

// ----------------------------------------------------------------- cubical

bool is_cubical(const PseudoFunctor& f, const Fin2Category& a, const Fin2Category& b) {
  if (!f.is_normal()) return false;
  const Fin2Category& c = *f.cod;
  const int nb1 = b.num_1cells();
  bool ok = true;
  f.dom->underlying().comp_table().for_each([&](int g, int h, int) {
    if (!ok) return;
    bool degenerate = a.is_identity1(pair_part(h, nb1, 0)) || b.is_identity1(pair_part(g, nb1, 1));
    if (degenerate && !c.is_identity2(f.comp.get(g, h))) ok = false;
  });
  return ok;
}

namespace {

CellId letter_word(const GrayTensor& t, ObjId x, ObjId y, std::vector<Letter> raw) {
  return t.find_word(word_reduce(*t.a, *t.b, x, y, raw));
}

}  // namespace

PseudoFunctor universal_R(const GrayTensor& t) {
  const Fin2Category& a = *t.a;
  const Fin2Category& b = *t.b;
  const Fin2Category& p = *t.prod;
  const Fin2Category& g = *t.cat;
  const int nb1 = b.num_1cells();
  const int nb2 = b.num_2cells();
  PseudoFunctor r{t.prod, t.cat, {}, {}, {}, {}, {}};
  for (ObjId x = 0; x < p.num_objects(); ++x) r.obj.push_back(x);
  for (CellId fg = 0; fg < p.num_1cells(); ++fg) {
    CellId f = pair_part(fg, nb1, 0);
    CellId h = pair_part(fg, nb1, 1);
    r.c1.push_back(letter_word(t, a.cell1(f).src, b.cell1(h).src, {{1, h}, {0, f}}));
  }
  for (CellId s = 0; s < p.num_2cells(); ++s) {
    CellId sa = pair_part(s, nb2, 0);
    CellId sb = pair_part(s, nb2, 1);
    CellId src = pair_id(a.cell2(sa).src, b.cell2(sb).src, nb1);
    CellId tgt = pair_id(a.cell2(sa).tgt, b.cell2(sb).tgt, nb1);
    r.c2.push_back(t.find_cell(r.c1[src], r.c1[tgt], s));
  }
  for (ObjId x = 0; x < p.num_objects(); ++x) r.unit.push_back(g.id2(g.id1(x)));
  p.underlying().comp_table().for_each([&](int h, int f, int hf) {
    r.comp.set(h, f, t.find_cell(r.c1[hf], g.comp1(r.c1[h], r.c1[f]), p.id2(hf)));
  });
  return r;
}

PseudoFunctor ev_cubical(const HomCategory& ps, const Fin2CategoryPtr& prod) {
  const Fin2Category& b = *ps.a;
  const Fin2Category& c = *ps.b;
  const Fin2Category& h = *ps.cat;
  const int nb0 = b.num_objects();
  const int nb1 = b.num_1cells();
  const int nb2 = b.num_2cells();
  if (prod->num_objects() != h.num_objects() * nb0 || prod->num_1cells() != h.num_1cells() * nb1) {
    throw Error(ErrorKind::MalformedSpec, "evaluation needs the product Ps(B,C) × B");
  }
  PseudoFunctor e{prod, ps.b, {}, {}, {}, {}, {}};
  for (ObjId fa = 0; fa < prod->num_objects(); ++fa) {
    e.obj.push_back(ps.functors[pair_part(fa, nb0, 0)].obj[pair_part(fa, nb0, 1)]);
  }
  for (CellId ea = 0; ea < prod->num_1cells(); ++ea) {
    const Transformation& eta = ps.transformations[pair_part(ea, nb1, 0)];
    CellId alpha = pair_part(ea, nb1, 1);
    const TwoFunctor& f = ps.functors[eta.src];
    e.c1.push_back(c.comp1(eta.object[b.cell1(alpha).tgt], f.c1[alpha]));
  }
  for (CellId gs = 0; gs < prod->num_2cells(); ++gs) {
    const Modification& gamma = ps.modifications[pair_part(gs, nb2, 0)];
    CellId sigma = pair_part(gs, nb2, 1);
    const TwoFunctor& f = ps.functors[ps.transformations[gamma.src].src];
    e.c2.push_back(c.hcomp(gamma.object[b.tgt0(sigma)], f.c2[sigma]));
  }
  for (ObjId x = 0; x < prod->num_objects(); ++x) e.unit.push_back(c.id2(c.id1(e.obj[x])));
  prod->underlying().comp_table().for_each([&](int second, int first, int) {
    const Transformation& eta = ps.transformations[pair_part(first, nb1, 0)];
    const Transformation& mu = ps.transformations[pair_part(second, nb1, 0)];
    CellId alpha = pair_part(first, nb1, 1);
    CellId beta = pair_part(second, nb1, 1);
    const TwoFunctor& f = ps.functors[eta.src];
    CellId mu_c = mu.object[b.cell1(beta).tgt];
    e.comp.set(second, first, c.whisker_post(mu_c, c.whisker_pre(eta.arrow[beta], f.c1[alpha])));
  });
  return e;
}

PseudoFunctor cubical_from_2functor(const GrayTensor& t, const TwoFunctor& l) {
  return compose(as_pseudo(l), universal_R(t));
}

TwoFunctor two_functor_from_cubical(const GrayTensor& t, const PseudoFunctor& f) {
  const Fin2Category& a = *t.a;
  const Fin2Category& b = *t.b;
  const Fin2Category& p = *t.prod;
  const Fin2Category& c = *f.cod;
  const int nb1 = b.num_1cells();
  TwoFunctor l{t.cat, f.cod, f.obj, {}, {}};
  std::vector<CellId> phi;  // φ_w: f(Kw) ⇒ L(w)
  for (const Word& w : t.funny.words) {
    ObjId x = w.a;
    ObjId y = w.b;
    CellId image = c.id1(f.obj[pair_id(x, y, b.num_objects())]);
    CellId prefix = p.id1(pair_id(x, y, b.num_objects()));
    CellId ph = c.vcomp(f.unit[pair_id(x, y, b.num_objects())], c.id2(f.c1[prefix]));
    for (const Letter& le : w.letters) {
      CellId k = le.coord == 0 ? pair_id(le.cell, b.id1(y), nb1) : pair_id(a.id1(x), le.cell, nb1);
      if (le.coord == 0) {
        x = a.cell1(le.cell).tgt;
      } else {
        y = b.cell1(le.cell).tgt;
      }
      ph = c.vcomp(c.whisker_post(f.c1[k], ph), f.comp.get(k, prefix));
      image = c.comp1(f.c1[k], image);
      prefix = p.comp1(k, prefix);
    }
    l.c1.push_back(image);
    phi.push_back(ph);
  }
  for (const auto& cell : t.factor.cells) {
    l.c2.push_back(c.vcomp(phi[cell.tgt], c.vcomp(f.c2[cell.base], inverse_of(c, phi[cell.src]))));
  }
  return l;
}

std::vector<PseudoFunctor> enumerate_cubical(const Fin2CategoryPtr& prod, const Fin2CategoryPtr& ap,
                                             const Fin2CategoryPtr& bp, const Fin2CategoryPtr& cp,
                                             const Limits& limits) {
  check_operand_size(*prod, limits);
  check_operand_size(*cp, limits);
  const Fin2Category& d = *prod;
  const Fin2Category& a = *ap;
  const Fin2Category& b = *bp;
  const Fin2Category& c = *cp;
  const int nb1 = b.num_1cells();
  std::vector<PseudoFunctor> out;
  PseudoFunctor f{prod, cp, std::vector<ObjId>(d.num_objects()), std::vector<CellId>(d.num_1cells(), kNone),
                  std::vector<CellId>(d.num_2cells(), kNone), {}, {}};
  std::vector<std::array<int, 3>> pairs = d.underlying().comp_table().sorted_entries();
  std::vector<std::array<int, 3>> degenerate, free;
  for (const auto& e : pairs) {
    bool deg = a.is_identity1(pair_part(e[1], nb1, 0)) || b.is_identity1(pair_part(e[0], nb1, 1));
    (deg ? degenerate : free).push_back(e);
  }
  std::function<void(std::size_t)> comps = [&](std::size_t k) {
    if (k == free.size()) {
      if (f.is_valid()) {
        if (out.size() >= limits.max_results) throw Error(ErrorKind::SizeLimit, "too many cubical functors");
        out.push_back(f);
      }
      return;
    }
    const auto& [g, h, gh] = free[k];
    for (CellId s : c.hom2(f.c1[gh], c.comp1(f.c1[g], f.c1[h]))) {
      if (!c.is_invertible2(s)) continue;
      f.comp.set(g, h, s);
      comps(k + 1);
    }
  };
  std::function<void(CellId)> cells2 = [&](CellId s) {
    if (s == d.num_2cells()) {
      f.comp = PairTable{};
      for (const auto& [g, h, gh] : degenerate) f.comp.set(g, h, c.id2(f.c1[gh]));
      comps(0);
      return;
    }
    if (d.is_identity2(s)) {
      f.c2[s] = c.id2(f.c1[d.cell2(s).src]);
      cells2(s + 1);
      return;
    }
    for (CellId t : c.hom2(f.c1[d.cell2(s).src], f.c1[d.cell2(s).tgt])) {
      f.c2[s] = t;
      cells2(s + 1);
    }
  };
  std::function<void(CellId)> cells1 = [&](CellId g) {
    if (g == d.num_1cells()) {
      for (const auto& [x, h, xh] : degenerate) {
        if (f.c1[xh] != c.comp1(f.c1[x], f.c1[h])) return;
      }
      cells2(0);
      return;
    }
    if (d.is_identity1(g)) {
      f.c1[g] = c.id1(f.obj[d.cell1(g).src]);
      cells1(g + 1);
      return;
    }
    for (CellId h : c.hom1(f.obj[d.cell1(g).src], f.obj[d.cell1(g).tgt])) {
      f.c1[g] = h;
      cells1(g + 1);
    }
  };
  std::function<void(ObjId)> objects = [&](ObjId x) {
    if (x == d.num_objects()) {
      f.unit.clear();
      for (ObjId y = 0; y < d.num_objects(); ++y) f.unit.push_back(c.id2(c.id1(f.obj[y])));
      cells1(0);
      return;
    }
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      f.obj[x] = y;
      objects(x + 1);
    }
  };
  objects(0);
  return out;
}

namespace {

int functor_index(const HomCategory& h, const TwoFunctor& f) {
  for (std::size_t i = 0; i < h.functors.size(); ++i) {
    if (h.functors[i] == f) return static_cast<int>(i);
  }
  throw Error(ErrorKind::AxiomViolation, "2-functor missing from the hom");
}

CellId require(CellId c, const char* what) {
  if (c == kNone) throw Error(ErrorKind::AxiomViolation, what);
  return c;
}

}  // namespace

TwoFunctor curry(const GrayTensor& t, const HomCategory& ps, const TwoFunctor& l) {
  const Fin2Category& a = *t.a;
  const Fin2Category& b = *t.b;
  const Fin2Category& p = *t.prod;
  const int nb0 = b.num_objects();
  const int nb1 = b.num_1cells();
  const int nb2 = b.num_2cells();
  TwoFunctor out{t.a, ps.cat, {}, {}, {}};
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    TwoFunctor fx{ps.a, ps.b, {}, {}, {}};
    for (ObjId y = 0; y < nb0; ++y) fx.obj.push_back(l.obj[pair_id(x, y, nb0)]);
    std::vector<CellId> words;
    for (CellId g = 0; g < nb1; ++g) {
      words.push_back(letter_word(t, x, b.cell1(g).src, {{1, g}}));
      fx.c1.push_back(l.c1[words.back()]);
    }
    for (CellId s = 0; s < nb2; ++s) {
      CellId pair = pair_id(a.id2(a.id1(x)), s, nb2);
      fx.c2.push_back(l.c2[require(t.find_cell(words[b.cell2(s).src], words[b.cell2(s).tgt], pair), "Gray cell")]);
    }
    out.obj.push_back(functor_index(ps, fx));
  }
  std::vector<std::vector<CellId>> letter(a.num_1cells());  // word of (f, y)
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    Transformation eta{out.obj[a.cell1(f).src], out.obj[a.cell1(f).tgt], {}, {}};
    for (ObjId y = 0; y < nb0; ++y) {
      letter[f].push_back(letter_word(t, a.cell1(f).src, y, {{0, f}}));
      eta.object.push_back(l.c1[letter[f].back()]);
    }
    for (CellId g = 0; g < nb1; ++g) {
      ObjId x = a.cell1(f).src;
      ObjId y = b.cell1(g).src;
      CellId r = letter_word(t, x, y, {{1, g}, {0, f}});
      CellId fg = letter_word(t, x, y, {{0, f}, {1, g}});
      CellId cell = require(t.find_cell(r, fg, p.id2(pair_id(f, g, nb1))), "interchange cell");
      eta.arrow.push_back(l.c2[cell]);
    }
    out.c1.push_back(require(ps.find_transformation(eta), "transformation missing from the hom"));
  }
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    Modification m{out.c1[a.cell2(s).src], out.c1[a.cell2(s).tgt], {}};
    for (ObjId y = 0; y < nb0; ++y) {
      CellId pair = pair_id(s, b.id2(b.id1(y)), nb2);
      CellId cell = require(t.find_cell(letter[a.cell2(s).src][y], letter[a.cell2(s).tgt][y], pair), "Gray cell");
      m.object.push_back(l.c2[cell]);
    }
    out.c2.push_back(require(ps.find_modification(m), "modification missing from the hom"));
  }
  return out;
}

TwoFunctor postcompose(const HomCategory& src, const HomCategory& tgt, const TwoFunctor& h) {
  TwoFunctor out{src.cat, tgt.cat, {}, {}, {}};
  for (const TwoFunctor& f : src.functors) out.obj.push_back(functor_index(tgt, compose(h, f)));
  for (const Transformation& t : src.transformations) {
    Transformation u{out.obj[t.src], out.obj[t.tgt], {}, {}};
    for (CellId e : t.object) u.object.push_back(h.c1[e]);
    for (CellId e : t.arrow) u.arrow.push_back(h.c2[e]);
    out.c1.push_back(require(tgt.find_transformation(u), "transformation missing from the hom"));
  }
  for (const Modification& m : src.modifications) {
    Modification n{out.c1[m.src], out.c1[m.tgt], {}};
    for (CellId e : m.object) n.object.push_back(h.c2[e]);
    out.c2.push_back(require(tgt.find_modification(n), "modification missing from the hom"));
  }
  return out;
}

// ------------------------------------------------------------- pseudolimit

PseudolimitCone pseudolimit_of_arrow(const PseudoFunctor& f, const Limits& limits) {
  f.validate();
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  PseudolimitCone cone;
  std::map<std::array<CellId, 3>, CellId> triple_id;
  for (CellId h = 0; h < a.num_1cells(); ++h) {
    ObjId x = a.cell1(h).src;
    ObjId y = a.cell1(h).tgt;
    for (CellId g : b.hom1(f.obj[x], f.obj[y])) {
      for (CellId th : b.hom2(g, f.c1[h])) {
        if (!b.is_invertible2(th)) continue;
        triple_id[{h, th, g}] = static_cast<CellId>(cone.triples.size());
        cone.triples.push_back({h, th, g});
      }
    }
    check_cells(cone.triples.size(), limits, "pseudolimit 1-cells");
  }
  std::map<std::array<CellId, 4>, CellId> pair_id2;
  std::vector<std::array<CellId, 2>> ends;
  for (CellId i = 0; i < static_cast<CellId>(cone.triples.size()); ++i) {
    const auto& t1 = cone.triples[i];
    for (CellId j = 0; j < static_cast<CellId>(cone.triples.size()); ++j) {
      const auto& t2 = cone.triples[j];
      if (a.cell1(t1.f).src != a.cell1(t2.f).src || a.cell1(t1.f).tgt != a.cell1(t2.f).tgt) continue;
      for (CellId beta : a.hom2(t1.f, t2.f)) {
        for (CellId alpha : b.hom2(t1.g, t2.g)) {
          if (b.vcomp(t2.theta, alpha) != b.vcomp(f.c2[beta], t1.theta)) continue;
          pair_id2[{i, j, beta, alpha}] = static_cast<CellId>(cone.pairs.size());
          cone.pairs.push_back({beta, alpha});
          ends.push_back({i, j});
        }
      }
      check_cells(cone.triples.size() + cone.pairs.size(), limits, "pseudolimit 2-cells");
    }
  }
  auto name_of = [&](const PseudolimitCone::Triple& t) {
    return "(" + a.cell1(t.f).name + "," + b.cell2(t.theta).name + "," + b.cell1(t.g).name + ")";
  };
  Fin2Category::Builder builder("pslim");
  for (ObjId x = 0; x < a.num_objects(); ++x) builder.add_object(a.object_name(x));
  for (const auto& t : cone.triples) builder.add_1cell(name_of(t), a.cell1(t.f).src, a.cell1(t.f).tgt);
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    builder.set_identity1(x, triple_id.at({a.id1(x), inverse_of(b, f.unit[x]), b.id1(f.obj[x])}));
  }
  for (std::size_t k = 0; k < cone.pairs.size(); ++k) {
    const auto& [beta, alpha] = cone.pairs[k];
    const auto& [i, j] = ends[k];
    if (i == j && a.is_identity2(beta) && b.is_identity2(alpha)) {
      builder.add_identity2(i, "1_" + name_of(cone.triples[i]));
    } else {
      builder.add_2cell("(" + a.cell2(beta).name + "," + b.cell2(alpha).name + ")", i, j);
    }
  }
  std::map<std::pair<CellId, CellId>, CellId> comp;
  for (CellId i = 0; i < static_cast<CellId>(cone.triples.size()); ++i) {
    const auto& t1 = cone.triples[i];
    for (CellId j = 0; j < static_cast<CellId>(cone.triples.size()); ++j) {
      const auto& t2 = cone.triples[j];
      if (a.cell1(t2.f).src != a.cell1(t1.f).tgt) continue;
      CellId phi = b.vcomp(inverse_of(b, f.comp.get(t2.f, t1.f)), b.hcomp(t2.theta, t1.theta));
      CellId r = triple_id.at({a.comp1(t2.f, t1.f), phi, b.comp1(t2.g, t1.g)});
      builder.set_comp1(j, i, r);
      comp[{j, i}] = r;
    }
  }
  for (CellId k = 0; k < static_cast<CellId>(cone.pairs.size()); ++k) {
    for (CellId m = 0; m < static_cast<CellId>(cone.pairs.size()); ++m) {
      if (ends[m][0] == ends[k][1]) {
        CellId r = pair_id2.at({ends[k][0], ends[m][1], a.vcomp(cone.pairs[m].first, cone.pairs[k].first),
                                b.vcomp(cone.pairs[m].second, cone.pairs[k].second)});
        builder.set_vcomp(m, k, r);
      }
      auto it_src = comp.find({ends[m][0], ends[k][0]});
      if (it_src != comp.end()) {
        CellId r = pair_id2.at({it_src->second, comp.at({ends[m][1], ends[k][1]}),
                                a.hcomp(cone.pairs[m].first, cone.pairs[k].first),
                                b.hcomp(cone.pairs[m].second, cone.pairs[k].second)});
        builder.set_hcomp(m, k, r);
      }
    }
  }
  cone.apex = builder.build();
  std::vector<ObjId> ids(a.num_objects());
  for (ObjId x = 0; x < a.num_objects(); ++x) ids[x] = x;
  cone.s = TwoFunctor{cone.apex, f.dom, ids, {}, {}};
  cone.t = TwoFunctor{cone.apex, f.cod, f.obj, {}, {}};
  for (const auto& t : cone.triples) {
    cone.s.c1.push_back(t.f);
    cone.t.c1.push_back(t.g);
  }
  for (const auto& [beta, alpha] : cone.pairs) {
    cone.s.c2.push_back(beta);
    cone.t.c2.push_back(alpha);
  }
  cone.lambda = Icon{as_pseudo(cone.t), compose(f, as_pseudo(cone.s)), {}};
  for (const auto& t : cone.triples) cone.lambda.component.push_back(t.theta);
  return cone;
}

PseudolimitReport check_pseudolimit(const PseudolimitCone& cone, const PseudoFunctor& f,
                                    const std::vector<Fin2CategoryPtr>& probes, const Limits& limits) {
  PseudolimitReport report;
  const Fin2Category& b = *f.cod;
  for (const auto& x : probes) {
    std::vector<TwoFunctor> ks = enumerate_2functors(x, cone.apex, limits);
    auto cone_of = [&](const TwoFunctor& k) {
      std::vector<int> key = compose(cone.s, k).c1;
      TwoFunctor tk = compose(cone.t, k);
      std::vector<int> key2 = compose(cone.s, k).c2;
      key.insert(key.end(), key2.begin(), key2.end());
      key.insert(key.end(), tk.c1.begin(), tk.c1.end());
      key.insert(key.end(), tk.c2.begin(), tk.c2.end());
      for (CellId e : k.c1) key.push_back(cone.lambda.component[e]);
      return key;
    };
    std::map<std::vector<int>, std::size_t> hits;
    for (const auto& k : ks) ++hits[cone_of(k)];
    // clause 1: each cone (P, Q, τ) factors through exactly one k
    std::size_t hit_total = 0;
    for (const TwoFunctor& p : enumerate_2functors(x, f.dom, limits)) {
      PseudoFunctor fp = compose(f, as_pseudo(p));
      for (const TwoFunctor& q : enumerate_2functors(x, f.cod, limits)) {
        if (q.obj != fp.obj) continue;
        for (const Icon& tau : enumerate_icons(as_pseudo(q), fp, limits)) {
          ++report.cones;
          std::vector<int> key = p.c1;
          key.insert(key.end(), p.c2.begin(), p.c2.end());
          key.insert(key.end(), q.c1.begin(), q.c1.end());
          key.insert(key.end(), q.c2.begin(), q.c2.end());
          key.insert(key.end(), tau.component.begin(), tau.component.end());
          auto it = hits.find(key);
          std::size_t n = it == hits.end() ? 0 : it->second;
          hit_total += n;
          if (n != 1) ++report.cone_failures;
        }
      }
    }
    if (hit_total != ks.size()) ++report.cone_failures;
    // clause 2: compatible (ρ, σ) lift to exactly one θ: k ⇒ k'
    for (const auto& k : ks) {
      for (const auto& k2 : ks) {
        if (k.obj != k2.obj) continue;
        std::map<std::vector<int>, std::size_t> lifts;
        for (const Icon& th : enumerate_icons(as_pseudo(k), as_pseudo(k2), limits)) {
          std::vector<int> key;
          for (CellId c : th.component) key.push_back(cone.s.c2[c]);
          for (CellId c : th.component) key.push_back(cone.t.c2[c]);
          ++lifts[key];
        }
        TwoFunctor sk = compose(cone.s, k), sk2 = compose(cone.s, k2);
        TwoFunctor tk = compose(cone.t, k), tk2 = compose(cone.t, k2);
        std::size_t lift_total = 0;
        for (const Icon& rho : enumerate_icons(as_pseudo(sk), as_pseudo(sk2), limits)) {
          for (const Icon& sigma : enumerate_icons(as_pseudo(tk), as_pseudo(tk2), limits)) {
            bool compatible = true;
            for (CellId e = 0; e < x->num_1cells() && compatible; ++e) {
              CellId tau = cone.lambda.component[k.c1[e]];
              CellId tau2 = cone.lambda.component[k2.c1[e]];
              compatible = b.vcomp(f.c2[rho.component[e]], tau) == b.vcomp(tau2, sigma.component[e]);
            }
            if (!compatible) continue;
            ++report.cell_problems;
            std::vector<int> key = rho.component;
            key.insert(key.end(), sigma.component.begin(), sigma.component.end());
            auto it = lifts.find(key);
            std::size_t n = it == lifts.end() ? 0 : it->second;
            lift_total += n;
            if (n != 1) ++report.cell_failures;
          }
        }
        std::size_t all = 0;
        for (const auto& [key, n] : lifts) all += n;
        if (lift_total != all) ++report.cell_failures;
      }
    }
  }
  return report;
}

// ------------------------------------------------------ Q as an equivalence

IconEquivalence icon_equivalence_Q(const GrayTensor& t) {
  const Fin2Category& g = *t.cat;
  const Fin2Category& p = *t.prod;
  const TwoFunctor& q = t.q;
  IconEquivalence out;
  PseudoFunctor r = universal_R(t);
  PseudoFunctor rq = compose(r, as_pseudo(q));
  PseudoFunctor id = as_pseudo(identity_2functor(t.cat));
  out.unit = Icon{id, rq, {}};
  out.counit = Icon{rq, id, {}};
  bool complete = true;
  for (CellId w = 0; w < g.num_1cells(); ++w) {
    CellId c = t.find_cell(w, rq.c1[w], p.id2(q.c1[w]));
    if (c == kNone || !g.is_invertible2(c)) {
      complete = false;
      out.unit.component.push_back(kNone);
      out.counit.component.push_back(kNone);
      continue;
    }
    out.unit.component.push_back(c);
    out.counit.component.push_back(*g.inverse2(c));
  }
  out.icon_axioms = complete && out.unit.is_valid() && out.counit.is_valid() &&
                    vcomp(out.counit, out.unit) == identity_icon(id) &&
                    vcomp(out.unit, out.counit) == identity_icon(rq);
  out.qr_identity = compose(as_pseudo(q), r) == as_pseudo(identity_2functor(t.prod));
  std::vector<bool> seen(p.num_objects(), false);
  out.bijective_on_objects = q.obj.size() == seen.size();
  for (ObjId x : q.obj) {
    if (x < 0 || x >= p.num_objects() || seen[x]) out.bijective_on_objects = false;
    else seen[x] = true;
  }
  out.locally_fully_faithful = true;
  for (ObjId x = 0; x < g.num_objects() && out.locally_fully_faithful; ++x) {
    for (ObjId y = 0; y < g.num_objects() && out.locally_fully_faithful; ++y) {
      for (CellId w1 : g.hom1(x, y)) {
        for (CellId w2 : g.hom1(x, y)) {
          std::vector<CellId> images;
          for (CellId s : g.hom2(w1, w2)) images.push_back(q.c2[s]);
          std::sort(images.begin(), images.end());
          auto target = p.hom2(q.c1[w1], q.c1[w2]);
          std::vector<CellId> want(target.begin(), target.end());
          std::sort(want.begin(), want.end());
          if (images != want) out.locally_fully_faithful = false;
        }
      }
    }
  }
  out.locally_essentially_surjective = true;
  for (CellId e = 0; e < p.num_1cells(); ++e) {
    ObjId x = p.cell1(e).src;
    ObjId y = p.cell1(e).tgt;
    bool found = false;
    for (CellId w : g.hom1(x, y)) {
      for (CellId s : p.hom2(q.c1[w], e)) found = found || p.is_invertible2(s);
    }
    if (!found) out.locally_essentially_surjective = false;
  }
  return out;
}

}  // namespace grayfac
