#include "grayfac/homs.hpp"

#include <functional>

#include "grayfac/search.hpp"

namespace grayfac {

std::string_view to_string(HomKind kind) {
  switch (kind) {
    case HomKind::Strict: return "strict";
    case HomKind::Funny: return "funny";
    case HomKind::Pseudo: return "ps";
  }
  return "strict";
}

HomKind parse_hom_kind(std::string_view s) {
  if (s == "strict") return HomKind::Strict;
  if (s == "funny") return HomKind::Funny;
  if (s == "ps" || s == "pseudo") return HomKind::Pseudo;
  throw Error(ErrorKind::MalformedSpec, "unknown hom kind " + std::string(s));
}

namespace {

std::vector<int> key1(const Transformation& t) {
  std::vector<int> k{t.src, t.tgt};
  k.insert(k.end(), t.object.begin(), t.object.end());
  k.insert(k.end(), t.arrow.begin(), t.arrow.end());
  return k;
}

std::vector<int> key2(const Modification& m) {
  std::vector<int> k{m.src, m.tgt};
  k.insert(k.end(), m.object.begin(), m.object.end());
  return k;
}

// η_f with the identity convention at identity 1-cells
CellId arrow_component(const Fin2Category& a, const Fin2Category& b, const Transformation& t, CellId f) {
  if (a.is_identity1(f)) return b.id2(t.object[a.cell1(f).src]);
  return t.arrow[f];
}

bool naturality_at(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& F, const TwoFunctor& G,
                   const Transformation& t, CellId s) {
  CellId f = a.cell2(s).src;
  CellId g = a.cell2(s).tgt;
  CellId ea = t.object[a.src0(s)];
  CellId eb = t.object[a.tgt0(s)];
  CellId lhs = b.vcomp(b.whisker_pre(G.c2[s], ea), arrow_component(a, b, t, f));
  CellId rhs = b.vcomp(arrow_component(a, b, t, g), b.whisker_post(eb, F.c2[s]));
  return lhs != kNone && lhs == rhs;
}

bool composition_at(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& F, const TwoFunctor& G,
                    const Transformation& t, CellId g, CellId f) {
  CellId gf = a.comp1(g, f);
  CellId want = b.vcomp(b.whisker_post(G.c1[g], arrow_component(a, b, t, f)),
                        b.whisker_pre(arrow_component(a, b, t, g), F.c1[f]));
  return want != kNone && want == arrow_component(a, b, t, gf);
}

// odometer over a list of candidate lists
void for_each_tuple(const std::vector<std::span<const CellId>>& lists,
                    const std::function<void(const std::vector<CellId>&)>& visit) {
  for (const auto& l : lists) {
    if (l.empty()) return;
  }
  std::vector<std::size_t> digit(lists.size(), 0);
  std::vector<CellId> tuple(lists.size());
  while (true) {
    for (std::size_t i = 0; i < lists.size(); ++i) tuple[i] = lists[i][digit[i]];
    visit(tuple);
    std::size_t k = lists.size();
    while (true) {
      if (k == 0) return;
      --k;
      if (++digit[k] < lists[k].size()) break;
      digit[k] = 0;
    }
  }
}

}  // namespace

bool is_2natural(const TwoFunctor& F, const TwoFunctor& G, const Transformation& t) {
  const Fin2Category& a = *F.dom;
  const Fin2Category& b = *F.cod;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    const Arrow& e = b.cell1(t.object[x]);
    if (e.src != F.obj[x] || e.tgt != G.obj[x]) return false;
  }
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    CellId ea = t.object[a.cell1(f).src];
    CellId eb = t.object[a.cell1(f).tgt];
    if (b.comp1(eb, F.c1[f]) != b.comp1(G.c1[f], ea)) return false;
  }
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    if (b.whisker_post(t.object[a.tgt0(s)], F.c2[s]) != b.whisker_pre(G.c2[s], t.object[a.src0(s)])) return false;
  }
  return true;
}

bool is_pseudonatural(const TwoFunctor& F, const TwoFunctor& G, const Transformation& t) {
  const Fin2Category& a = *F.dom;
  const Fin2Category& b = *F.cod;
  if (static_cast<int>(t.arrow.size()) != a.num_1cells()) return false;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    const Arrow& e = b.cell1(t.object[x]);
    if (e.src != F.obj[x] || e.tgt != G.obj[x]) return false;
  }
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    CellId c = t.arrow[f];
    CellId ea = t.object[a.cell1(f).src];
    CellId eb = t.object[a.cell1(f).tgt];
    if (c < 0 || c >= b.num_2cells() || b.cell2(c).src != b.comp1(eb, F.c1[f]) ||
        b.cell2(c).tgt != b.comp1(G.c1[f], ea) || !b.is_invertible2(c)) {
      return false;
    }
    if (a.is_identity1(f) && c != b.id2(ea)) return false;
  }
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    if (!naturality_at(a, b, F, G, t, s)) return false;
  }
  bool ok = true;
  a.underlying().comp_table().for_each([&](int g, int f, int) {
    if (ok && !composition_at(a, b, F, G, t, g, f)) ok = false;
  });
  return ok;
}

CellId HomCategory::find_transformation(const Transformation& t) const {
  auto it = by_key1.find(key1(t));
  return it == by_key1.end() ? kNone : it->second;
}

CellId HomCategory::find_modification(const Modification& m) const {
  auto it = by_key2.find(key2(m));
  return it == by_key2.end() ? kNone : it->second;
}

namespace {

// Pseudonatural transformations F => G with the given object components.
void pseudo_arrows(const Fin2Category& a, const Fin2Category& b, const TwoFunctor& F, const TwoFunctor& G,
                   Transformation& t, const std::function<void()>& visit) {
  std::vector<CellId> vars;
  std::vector<int> pos(a.num_1cells(), -1);
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    if (!a.is_identity1(f)) {
      pos[f] = static_cast<int>(vars.size());
      vars.push_back(f);
    }
  }
  t.arrow.assign(a.num_1cells(), kNone);
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    if (a.is_identity1(f)) t.arrow[f] = b.id2(t.object[a.cell1(f).src]);
  }
  // checks whose cells are all identities depend on object components only
  std::vector<std::vector<CellId>> nat(vars.size());
  std::vector<std::vector<std::pair<CellId, CellId>>> comp(vars.size());
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    int p = std::max(pos[a.cell2(s).src], pos[a.cell2(s).tgt]);
    if (p < 0) {
      if (!naturality_at(a, b, F, G, t, s)) return;
    } else {
      nat[p].push_back(s);
    }
  }
  std::vector<std::array<int, 3>> entries = a.underlying().comp_table().sorted_entries();
  for (const auto& [g, f, gf] : entries) {
    int p = std::max({pos[g], pos[f], pos[gf]});
    if (p < 0) {
      if (!composition_at(a, b, F, G, t, g, f)) return;
    } else {
      comp[p].push_back({g, f});
    }
  }
  std::function<void(std::size_t)> step = [&](std::size_t p) {
    if (p == vars.size()) {
      visit();
      return;
    }
    CellId f = vars[p];
    CellId ea = t.object[a.cell1(f).src];
    CellId eb = t.object[a.cell1(f).tgt];
    CellId src = b.comp1(eb, F.c1[f]);
    CellId tgt = b.comp1(G.c1[f], ea);
    for (CellId c : b.hom2(src, tgt)) {
      if (!b.is_invertible2(c)) continue;
      t.arrow[f] = c;
      bool ok = true;
      for (CellId s : nat[p]) ok = ok && naturality_at(a, b, F, G, t, s);
      for (const auto& [g2, f2] : comp[p]) ok = ok && composition_at(a, b, F, G, t, g2, f2);
      if (ok) step(p + 1);
    }
    t.arrow[f] = kNone;
  };
  step(0);
}

bool modification_ok(HomKind kind, const Fin2Category& a, const Fin2Category& b, const TwoFunctor& F,
                     const TwoFunctor& G, const Transformation& s, const Transformation& t,
                     const std::vector<CellId>& gamma) {
  if (kind == HomKind::Funny) return true;
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    CellId ga = gamma[a.cell1(f).src];
    CellId gb = gamma[a.cell1(f).tgt];
    CellId left = b.whisker_pre(gb, F.c1[f]);
    CellId right = b.whisker_post(G.c1[f], ga);
    if (kind == HomKind::Strict) {
      if (left != right) return false;
    } else {
      if (b.vcomp(arrow_component(a, b, t, f), left) != b.vcomp(right, arrow_component(a, b, s, f))) return false;
    }
  }
  return true;
}

}  // namespace

HomCategory build_hom(const Fin2CategoryPtr& ap, const Fin2CategoryPtr& bp, HomKind kind, const Limits& limits) {
  const Fin2Category& a = *ap;
  const Fin2Category& b = *bp;
  HomCategory h;
  h.kind = kind;
  h.a = ap;
  h.b = bp;
  h.functors = enumerate_2functors(ap, bp, limits);
  const int nf = static_cast<int>(h.functors.size());
  auto too_big = [&] {
    if (static_cast<std::size_t>(nf) + h.transformations.size() + h.modifications.size() > limits.max_cells) {
      throw Error(ErrorKind::SizeLimit, "hom 2-category exceeds " + std::to_string(limits.max_cells) + " cells");
    }
  };
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) {
      const TwoFunctor& F = h.functors[i];
      const TwoFunctor& G = h.functors[j];
      std::vector<std::span<const CellId>> lists;
      for (ObjId x = 0; x < a.num_objects(); ++x) lists.push_back(b.hom1(F.obj[x], G.obj[x]));
      for_each_tuple(lists, [&](const std::vector<CellId>& comps) {
        Transformation t{i, j, comps, {}};
        if (kind == HomKind::Strict && !is_2natural(F, G, t)) return;
        if (kind == HomKind::Pseudo) {
          pseudo_arrows(a, b, F, G, t, [&] { h.transformations.push_back(t); });
        } else {
          h.transformations.push_back(t);
        }
      });
      too_big();
    }
  }
  for (CellId e = 0; e < static_cast<CellId>(h.transformations.size()); ++e) {
    h.by_key1[key1(h.transformations[e])] = e;
  }
  std::vector<std::vector<CellId>> by_pair(static_cast<std::size_t>(nf) * nf);
  for (CellId e = 0; e < static_cast<CellId>(h.transformations.size()); ++e) {
    by_pair[h.transformations[e].src * nf + h.transformations[e].tgt].push_back(e);
  }
  for (CellId e = 0; e < static_cast<CellId>(h.transformations.size()); ++e) {
    const Transformation& s = h.transformations[e];
    const TwoFunctor& F = h.functors[s.src];
    const TwoFunctor& G = h.functors[s.tgt];
    for (CellId e2 : by_pair[s.src * nf + s.tgt]) {
      const Transformation& t = h.transformations[e2];
      std::vector<std::span<const CellId>> lists;
      for (ObjId x = 0; x < a.num_objects(); ++x) lists.push_back(b.hom2(s.object[x], t.object[x]));
      for_each_tuple(lists, [&](const std::vector<CellId>& gamma) {
        if (modification_ok(kind, a, b, F, G, s, t, gamma)) h.modifications.push_back({e, e2, gamma});
      });
    }
    too_big();
  }
  for (CellId m = 0; m < static_cast<CellId>(h.modifications.size()); ++m) {
    h.by_key2[key2(h.modifications[m])] = m;
  }

  Fin2Category::Builder builder("[" + a.name() + "," + b.name() + "]_" + std::string(to_string(kind)));
  for (int i = 0; i < nf; ++i) builder.add_object("F" + std::to_string(i));
  for (CellId e = 0; e < static_cast<CellId>(h.transformations.size()); ++e) {
    builder.add_1cell("t" + std::to_string(e), h.transformations[e].src, h.transformations[e].tgt);
  }
  auto identity_of = [&](int i) {
    const TwoFunctor& F = h.functors[i];
    Transformation t{i, i, {}, {}};
    for (ObjId x = 0; x < a.num_objects(); ++x) t.object.push_back(b.id1(F.obj[x]));
    if (kind == HomKind::Pseudo) {
      for (CellId f = 0; f < a.num_1cells(); ++f) t.arrow.push_back(b.id2(F.c1[f]));
    }
    return h.find_transformation(t);
  };
  for (int i = 0; i < nf; ++i) builder.set_identity1(i, identity_of(i));
  for (CellId m = 0; m < static_cast<CellId>(h.modifications.size()); ++m) {
    const Modification& mod = h.modifications[m];
    bool identity = mod.src == mod.tgt;
    for (ObjId x = 0; x < a.num_objects() && identity; ++x) {
      identity = mod.object[x] == b.id2(h.transformations[mod.src].object[x]);
    }
    if (identity) {
      builder.add_identity2(mod.src, "1_t" + std::to_string(mod.src));
    } else {
      builder.add_2cell("m" + std::to_string(m), mod.src, mod.tgt);
    }
  }
  // composition of transformations
  auto compose_t = [&](const Transformation& mu, const Transformation& eta) {
    Transformation r{eta.src, mu.tgt, {}, {}};
    for (ObjId x = 0; x < a.num_objects(); ++x) r.object.push_back(b.comp1(mu.object[x], eta.object[x]));
    if (kind == HomKind::Pseudo) {
      for (CellId f = 0; f < a.num_1cells(); ++f) {
        CellId ea = eta.object[a.cell1(f).src];
        CellId mb = mu.object[a.cell1(f).tgt];
        r.arrow.push_back(b.vcomp(b.whisker_pre(mu.arrow[f], ea), b.whisker_post(mb, eta.arrow[f])));
      }
    }
    return r;
  };
  std::vector<std::vector<CellId>> from(nf);
  for (CellId e = 0; e < static_cast<CellId>(h.transformations.size()); ++e) {
    from[h.transformations[e].src].push_back(e);
  }
  std::map<std::pair<CellId, CellId>, CellId> comp1;
  for (CellId e = 0; e < static_cast<CellId>(h.transformations.size()); ++e) {
    for (CellId e2 : from[h.transformations[e].tgt]) {
      CellId r = h.find_transformation(compose_t(h.transformations[e2], h.transformations[e]));
      if (r == kNone) throw Error(ErrorKind::AxiomViolation, "composite transformation missing from the hom");
      builder.set_comp1(e2, e, r);
      comp1[{e2, e}] = r;
    }
  }
  std::vector<std::vector<CellId>> mods_from(h.transformations.size()), mods_at(nf);
  for (CellId m = 0; m < static_cast<CellId>(h.modifications.size()); ++m) {
    mods_from[h.modifications[m].src].push_back(m);
    mods_at[h.transformations[h.modifications[m].src].src].push_back(m);
  }
  for (CellId m = 0; m < static_cast<CellId>(h.modifications.size()); ++m) {
    const Modification& g1 = h.modifications[m];
    for (CellId m2 : mods_from[g1.tgt]) {
      const Modification& g2 = h.modifications[m2];
      Modification r{g1.src, g2.tgt, {}};
      for (ObjId x = 0; x < a.num_objects(); ++x) r.object.push_back(b.vcomp(g2.object[x], g1.object[x]));
      builder.set_vcomp(m2, m, h.find_modification(r));
    }
    for (CellId m2 : mods_at[h.transformations[g1.src].tgt]) {
      const Modification& g2 = h.modifications[m2];
      Modification r{comp1.at({g2.src, g1.src}), comp1.at({g2.tgt, g1.tgt}), {}};
      for (ObjId x = 0; x < a.num_objects(); ++x) r.object.push_back(b.hcomp(g2.object[x], g1.object[x]));
      builder.set_hcomp(m2, m, h.find_modification(r));
    }
  }
  h.cat = builder.build();
  return h;
}

Inclusions inclusions(const HomCategory& strict, const HomCategory& pseudo, const HomCategory& funny) {
  const Fin2Category& a = *strict.a;
  const Fin2Category& b = *strict.b;
  Inclusions out;
  auto ids = [](int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
  };
  const int nf = static_cast<int>(strict.functors.size());
  out.j1 = TwoFunctor{strict.cat, pseudo.cat, ids(nf), {}, {}};
  for (const Transformation& t : strict.transformations) {
    Transformation p = t;
    for (CellId f = 0; f < a.num_1cells(); ++f) {
      p.arrow.push_back(b.id2(b.comp1(t.object[a.cell1(f).tgt], strict.functors[t.src].c1[f])));
    }
    out.j1.c1.push_back(pseudo.find_transformation(p));
  }
  for (const Modification& m : strict.modifications) {
    out.j1.c2.push_back(pseudo.find_modification({out.j1.c1[m.src], out.j1.c1[m.tgt], m.object}));
  }
  out.j2 = TwoFunctor{pseudo.cat, funny.cat, ids(nf), {}, {}};
  for (const Transformation& t : pseudo.transformations) {
    out.j2.c1.push_back(funny.find_transformation({t.src, t.tgt, t.object, {}}));
  }
  for (const Modification& m : pseudo.modifications) {
    out.j2.c2.push_back(funny.find_modification({out.j2.c1[m.src], out.j2.c1[m.tgt], m.object}));
  }
  out.j = TwoFunctor{strict.cat, funny.cat, ids(nf), {}, {}};
  for (const Transformation& t : strict.transformations) {
    out.j.c1.push_back(funny.find_transformation({t.src, t.tgt, t.object, {}}));
  }
  for (const Modification& m : strict.modifications) {
    out.j.c2.push_back(funny.find_modification({out.j.c1[m.src], out.j.c1[m.tgt], m.object}));
  }
  return out;
}

}  // namespace grayfac
