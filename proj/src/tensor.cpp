#include "grayfac/tensor.hpp"

#include <algorithm>

namespace grayfac {

namespace {

const Fin2Category& factor(const Fin2Category& a, const Fin2Category& b, int coord) { return coord == 0 ? a : b; }

void check_cells(std::size_t total, const Limits& limits, const std::string& what) {
  if (total > limits.max_cells) {
    throw Error(ErrorKind::SizeLimit, what + " exceeds " + std::to_string(limits.max_cells) + " cells");
  }
}

std::string letter_name(const Fin2Category& a, const Fin2Category& b, const Letter& l, ObjId x, ObjId y) {
  if (l.coord == 0) return "(" + a.cell1(l.cell).name + "," + b.object_name(y) + ")";
  return "(" + a.object_name(x) + "," + b.cell1(l.cell).name + ")";
}

std::string word_name(const Fin2Category& a, const Fin2Category& b, const Word& w) {
  if (w.letters.empty()) return "1_(" + a.object_name(w.a) + "," + b.object_name(w.b) + ")";
  std::string out;
  ObjId x = w.a;
  ObjId y = w.b;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ";";
    out += letter_name(a, b, l, x, y);
    (l.coord == 0 ? x : y) = factor(a, b, l.coord).cell1(l.cell).tgt;
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ product

Fin2CategoryPtr product(const Fin2CategoryPtr& ap, const Fin2CategoryPtr& bp, const Limits& limits) {
  const Fin2Category& a = *ap;
  const Fin2Category& b = *bp;
  check_cells(static_cast<std::size_t>(a.num_objects()) * b.num_objects() +
                  static_cast<std::size_t>(a.num_1cells()) * b.num_1cells() +
                  static_cast<std::size_t>(a.num_2cells()) * b.num_2cells(),
              limits, "product " + a.name() + " × " + b.name());
  const int n0 = b.num_objects(), n1 = b.num_1cells(), n2 = b.num_2cells();
  Fin2Category::Builder builder("(" + a.name() + " × " + b.name() + ")");
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < n0; ++y) builder.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  }
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    for (CellId g = 0; g < n1; ++g) {
      builder.add_1cell("(" + a.cell1(f).name + "," + b.cell1(g).name + ")", pair_id(a.cell1(f).src, b.cell1(g).src, n0),
                        pair_id(a.cell1(f).tgt, b.cell1(g).tgt, n0));
    }
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < n0; ++y) builder.set_identity1(pair_id(x, y, n0), pair_id(a.id1(x), b.id1(y), n1));
  }
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    for (CellId t = 0; t < n2; ++t) {
      CellId src = pair_id(a.cell2(s).src, b.cell2(t).src, n1);
      if (a.is_identity2(s) && b.is_identity2(t)) {
        builder.add_identity2(src, "(" + a.cell2(s).name + "," + b.cell2(t).name + ")");
      } else {
        builder.add_2cell("(" + a.cell2(s).name + "," + b.cell2(t).name + ")", src,
                          pair_id(a.cell2(s).tgt, b.cell2(t).tgt, n1));
      }
    }
  }
  auto ea = a.underlying().comp_table().sorted_entries();
  auto eb = b.underlying().comp_table().sorted_entries();
  for (const auto& [g, f, gf] : ea) {
    for (const auto& [g2, f2, gf2] : eb) builder.set_comp1(pair_id(g, g2, n1), pair_id(f, f2, n1), pair_id(gf, gf2, n1));
  }
  ea = a.vcomp_table().sorted_entries();
  eb = b.vcomp_table().sorted_entries();
  for (const auto& [t, s, ts] : ea) {
    for (const auto& [t2, s2, ts2] : eb) builder.set_vcomp(pair_id(t, t2, n2), pair_id(s, s2, n2), pair_id(ts, ts2, n2));
  }
  ea = a.hcomp_table().sorted_entries();
  eb = b.hcomp_table().sorted_entries();
  for (const auto& [t, s, ts] : ea) {
    for (const auto& [t2, s2, ts2] : eb) builder.set_hcomp(pair_id(t, t2, n2), pair_id(s, s2, n2), pair_id(ts, ts2, n2));
  }
  // componentwise tables of valid factors satisfy every law
  return builder.build(false);
}

TwoFunctor projection(const Fin2CategoryPtr& prod, const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, int which) {
  TwoFunctor p{prod, which == 0 ? a : b, {}, {}, {}};
  for (ObjId x = 0; x < prod->num_objects(); ++x) p.obj.push_back(pair_part(x, b->num_objects(), which));
  for (CellId f = 0; f < prod->num_1cells(); ++f) p.c1.push_back(pair_part(f, b->num_1cells(), which));
  for (CellId s = 0; s < prod->num_2cells(); ++s) p.c2.push_back(pair_part(s, b->num_2cells(), which));
  return p;
}

TwoFunctor product_map(const TwoFunctor& f, const TwoFunctor& g, const Fin2CategoryPtr& dom,
                       const Fin2CategoryPtr& cod) {
  const Fin2Category& db = *g.dom;
  const Fin2Category& cb = *g.cod;
  TwoFunctor h{dom, cod, {}, {}, {}};
  for (ObjId x = 0; x < dom->num_objects(); ++x) {
    h.obj.push_back(pair_id(f.obj[pair_part(x, db.num_objects(), 0)], g.obj[pair_part(x, db.num_objects(), 1)],
                            cb.num_objects()));
  }
  for (CellId c = 0; c < dom->num_1cells(); ++c) {
    h.c1.push_back(pair_id(f.c1[pair_part(c, db.num_1cells(), 0)], g.c1[pair_part(c, db.num_1cells(), 1)],
                           cb.num_1cells()));
  }
  for (CellId c = 0; c < dom->num_2cells(); ++c) {
    h.c2.push_back(pair_id(f.c2[pair_part(c, db.num_2cells(), 0)], g.c2[pair_part(c, db.num_2cells(), 1)],
                           cb.num_2cells()));
  }
  return h;
}

TwoFunctor pairing(const TwoFunctor& f, const TwoFunctor& g, const Fin2CategoryPtr& prod) {
  const Fin2Category& b = *g.cod;
  TwoFunctor h{f.dom, prod, {}, {}, {}};
  for (std::size_t i = 0; i < f.obj.size(); ++i) h.obj.push_back(pair_id(f.obj[i], g.obj[i], b.num_objects()));
  for (std::size_t i = 0; i < f.c1.size(); ++i) h.c1.push_back(pair_id(f.c1[i], g.c1[i], b.num_1cells()));
  for (std::size_t i = 0; i < f.c2.size(); ++i) h.c2.push_back(pair_id(f.c2[i], g.c2[i], b.num_2cells()));
  return h;
}

// ------------------------------------------------------------------- words

std::pair<ObjId, ObjId> word_target(const Fin2Category& a, const Fin2Category& b, const Word& w) {
  ObjId x = w.a;
  ObjId y = w.b;
  for (const Letter& l : w.letters) (l.coord == 0 ? x : y) = factor(a, b, l.coord).cell1(l.cell).tgt;
  return {x, y};
}

Word word_reduce(const Fin2Category& a, const Fin2Category& b, ObjId x, ObjId y, const std::vector<Letter>& raw) {
  Word w{x, y, {}};
  ObjId pos[2] = {x, y};
  for (const Letter& l : raw) {
    const Fin2Category& c = factor(a, b, l.coord);
    if (l.cell < 0 || l.cell >= c.num_1cells() || c.cell1(l.cell).src != pos[l.coord]) {
      throw Error(ErrorKind::MalformedSpec, "letters do not compose");
    }
    pos[l.coord] = c.cell1(l.cell).tgt;
    if (c.is_identity1(l.cell)) continue;
    if (!w.letters.empty() && w.letters.back().coord == l.coord) {
      CellId fused = c.comp1(l.cell, w.letters.back().cell);
      w.letters.pop_back();
      if (!c.is_identity1(fused)) w.letters.push_back({l.coord, fused});
      continue;
    }
    w.letters.push_back(l);
  }
  return w;
}

// ------------------------------------------------------------------- funny

CellId FunnyUnderlying::find(const Word& w) const {
  auto it = index.find(w);
  return it == index.end() ? kNone : it->second;
}

FunnyUnderlying funny_underlying(const Fin2CategoryPtr& ap, const Fin2CategoryPtr& bp, const Limits& limits) {
  const Fin2Category& a = *ap;
  const Fin2Category& b = *bp;
  FunnyUnderlying u;
  u.a = ap;
  u.b = bp;
  std::vector<std::pair<ObjId, ObjId>> targets;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < b.num_objects(); ++y) {
      u.words.push_back({x, y, {}});
      targets.push_back({x, y});
    }
  }
  std::size_t begin = 0;
  for (std::size_t len = 1;; ++len) {
    std::size_t end = u.words.size();
    for (std::size_t i = begin; i < end; ++i) {
      int last = u.words[i].letters.empty() ? -1 : u.words[i].letters.back().coord;
      for (int coord = 0; coord < 2; ++coord) {
        if (coord == last) continue;
        const Fin2Category& c = factor(a, b, coord);
        ObjId at = coord == 0 ? targets[i].first : targets[i].second;
        for (CellId f : c.underlying().out(at)) {
          if (c.is_identity1(f)) continue;
          if (len > limits.max_word_len) {
            throw Error(ErrorKind::WordExplosion, "reduced words of length " + std::to_string(len) + " in " +
                                                      a.name() + " ⋆ " + b.name() + " exceed the bound " +
                                                      std::to_string(limits.max_word_len));
          }
          Word w = u.words[i];
          w.letters.push_back({coord, f});
          auto t = targets[i];
          (coord == 0 ? t.first : t.second) = c.cell1(f).tgt;
          u.words.push_back(std::move(w));
          targets.push_back(t);
        }
      }
    }
    check_cells(u.words.size(), limits, "funny tensor " + a.name() + " ⋆ " + b.name());
    if (u.words.size() == end) break;
    begin = end;
  }
  FinCategory::Builder builder;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < b.num_objects(); ++y) builder.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  }
  const int nb = b.num_objects();
  std::vector<std::vector<CellId>> out(builder.num_objects());
  for (std::size_t i = 0; i < u.words.size(); ++i) {
    const Word& w = u.words[i];
    ObjId src = pair_id(w.a, w.b, nb);
    ObjId tgt = pair_id(targets[i].first, targets[i].second, nb);
    CellId id = builder.add_arrow(word_name(a, b, w), src, tgt);
    if (w.letters.empty()) builder.set_identity(src, id);
    u.index.emplace(w, id);
    out[src].push_back(id);
  }
  for (std::size_t i = 0; i < u.words.size(); ++i) {
    const Word& w = u.words[i];
    for (CellId g : out[pair_id(targets[i].first, targets[i].second, nb)]) {
      std::vector<Letter> raw = w.letters;
      raw.insert(raw.end(), u.words[g].letters.begin(), u.words[g].letters.end());
      builder.set_comp(g, static_cast<CellId>(i), u.find(word_reduce(a, b, w.a, w.b, raw)));
    }
  }
  u.cat = builder.build(false);
  return u;
}

Fin2CategoryPtr funny_skeleton(const FunnyUnderlying& u) {
  return locally_discrete(u.cat, "(" + u.a->name() + " ⋆ " + u.b->name() + ")");
}

namespace {

bool touches_identity(const Fin2Category& c) {
  for (CellId s = 0; s < c.num_2cells(); ++s) {
    if (c.is_identity2(s)) continue;
    if (c.is_identity1(c.cell2(s).src) || c.is_identity1(c.cell2(s).tgt)) return true;
  }
  return false;
}

}  // namespace

FunnyFull funny_full(const Fin2CategoryPtr& ap, const Fin2CategoryPtr& bp, const Limits& limits) {
  const Fin2Category& a = *ap;
  const Fin2Category& b = *bp;
  if (touches_identity(a) || touches_identity(b)) {
    throw Error(ErrorKind::UnsupportedInput,
                "a factor has a 2-cell whose boundary includes an identity 1-cell; the 2-cells of the funny tensor "
                "are not certified by the letterwise closure");
  }
  FunnyFull out;
  out.under = funny_underlying(ap, bp, limits);
  const FunnyUnderlying& u = out.under;
  const FinCategory& uc = *u.cat;
  Fin2Category::Builder builder("(" + a.name() + " ⋆ " + b.name() + ")");
  for (ObjId x = 0; x < uc.num_objects(); ++x) builder.add_object(uc.object_name(x));
  for (CellId f = 0; f < uc.num_arrows(); ++f) builder.add_1cell(uc.arrow(f).name, uc.src(f), uc.tgt(f));
  for (ObjId x = 0; x < uc.num_objects(); ++x) builder.set_identity1(x, uc.identity(x));
  uc.comp_table().for_each([&](int g, int f, int gf) { builder.set_comp1(g, f, gf); });

  std::map<std::pair<CellId, std::vector<CellId>>, CellId> index;
  std::vector<std::pair<CellId, CellId>> bounds;
  for (CellId w1 = 0; w1 < uc.num_arrows(); ++w1) {
    const Word& v1 = u.words[w1];
    for (CellId w2 : uc.hom(uc.src(w1), uc.tgt(w1))) {
      const Word& v2 = u.words[w2];
      if (v1.letters.size() != v2.letters.size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < v1.letters.size() && same; ++i) same = v1.letters[i].coord == v2.letters[i].coord;
      if (!same) continue;
      std::vector<std::span<const CellId>> homs;
      bool empty = false;
      for (std::size_t i = 0; i < v1.letters.size(); ++i) {
        const Fin2Category& c = factor(a, b, v1.letters[i].coord);
        homs.push_back(c.hom2(v1.letters[i].cell, v2.letters[i].cell));
        if (homs.back().empty()) empty = true;
      }
      if (empty) continue;
      std::vector<std::size_t> digit(homs.size(), 0);
      bool done = false;
      while (!done) {
        std::vector<CellId> cells;
        bool identity = w1 == w2;
        std::string name;
        ObjId x = v1.a;
        ObjId y = v1.b;
        for (std::size_t i = 0; i < homs.size(); ++i) {
          CellId s = homs[i][digit[i]];
          const Letter& l = v1.letters[i];
          const Fin2Category& c = factor(a, b, l.coord);
          cells.push_back(s);
          identity = identity && c.is_identity2(s);
          if (!name.empty()) name += ";";
          name += l.coord == 0 ? "(" + c.cell2(s).name + "," + b.object_name(y) + ")"
                               : "(" + a.object_name(x) + "," + c.cell2(s).name + ")";
          (l.coord == 0 ? x : y) = c.cell1(l.cell).tgt;
        }
        CellId id = identity ? builder.add_identity2(w1, "1_" + uc.arrow(w1).name)
                             : builder.add_2cell("[" + name + "]", w1, w2);
        index[{w1, cells}] = id;
        bounds.push_back({w1, w2});
        out.letter_cells.push_back(cells);
        std::size_t k = homs.size();
        while (true) {
          if (k == 0) {
            done = true;
            break;
          }
          --k;
          if (++digit[k] < homs[k].size()) break;
          digit[k] = 0;
        }
      }
      check_cells(uc.num_objects() + uc.num_arrows() + out.letter_cells.size(), limits, "funny tensor 2-cells");
    }
  }
  const auto n = static_cast<CellId>(out.letter_cells.size());
  std::vector<std::vector<CellId>> by_src(uc.num_arrows()), by_obj(uc.num_objects());
  for (CellId s = 0; s < n; ++s) {
    by_src[bounds[s].first].push_back(s);
    by_obj[uc.src(bounds[s].first)].push_back(s);
  }
  for (CellId s = 0; s < n; ++s) {
    for (CellId t : by_src[bounds[s].second]) {
      std::vector<CellId> cells(out.letter_cells[s].size());
      const Word& w = u.words[bounds[s].first];
      for (std::size_t i = 0; i < cells.size(); ++i) {
        cells[i] = factor(a, b, w.letters[i].coord).vcomp(out.letter_cells[t][i], out.letter_cells[s][i]);
      }
      builder.set_vcomp(t, s, index.at({bounds[s].first, cells}));
    }
  }
  for (CellId s = 0; s < n; ++s) {
    const Word& ws = u.words[bounds[s].first];
    for (CellId t : by_obj[uc.tgt(bounds[s].first)]) {
      const Word& wt = u.words[bounds[t].first];
      std::vector<std::pair<int, CellId>> stack;
      auto push = [&](int coord, CellId cell) {
        const Fin2Category& c = factor(a, b, coord);
        if (!stack.empty() && stack.back().first == coord) {
          CellId fused = c.hcomp(cell, stack.back().second);
          stack.pop_back();
          if (!c.is_identity1(c.cell2(fused).src)) stack.push_back({coord, fused});
          return;
        }
        stack.push_back({coord, cell});
      };
      for (std::size_t i = 0; i < ws.letters.size(); ++i) push(ws.letters[i].coord, out.letter_cells[s][i]);
      for (std::size_t i = 0; i < wt.letters.size(); ++i) push(wt.letters[i].coord, out.letter_cells[t][i]);
      std::vector<CellId> cells;
      for (const auto& p : stack) cells.push_back(p.second);
      CellId src = uc.compose(bounds[t].first, bounds[s].first);
      builder.set_hcomp(t, s, index.at({src, cells}));
    }
  }
  out.cat = builder.build();
  return out;
}

CellId comparison_K_raw(const Fin2Category& prod, const Fin2Category& a, const Fin2Category& b, ObjId x, ObjId y,
                        const std::vector<Letter>& raw) {
  CellId fa = a.id1(x);
  CellId fb = b.id1(y);
  for (const Letter& l : raw) {
    if (l.coord == 0) {
      fa = a.comp1(l.cell, fa);
    } else {
      fb = b.comp1(l.cell, fb);
    }
    if (fa == kNone || fb == kNone) throw Error(ErrorKind::MalformedSpec, "letters do not compose");
  }
  (void)prod;
  return pair_id(fa, fb, b.num_1cells());
}

Functor comparison_K(const FunnyUnderlying& u, const Fin2CategoryPtr& prod) {
  Functor k{u.cat, prod->underlying_ptr(), {}, {}};
  for (ObjId x = 0; x < u.cat->num_objects(); ++x) k.obj.push_back(x);
  for (const Word& w : u.words) k.arr.push_back(comparison_K_raw(*prod, *u.a, *u.b, w.a, w.b, w.letters));
  return k;
}

TwoFunctor comparison_K_skeleton(const FunnyUnderlying& u, const Fin2CategoryPtr& skeleton,
                                 const Fin2CategoryPtr& prod) {
  Functor k = comparison_K(u, prod);
  TwoFunctor out{skeleton, prod, k.obj, k.arr, {}};
  for (CellId f = 0; f < skeleton->num_2cells(); ++f) out.c2.push_back(prod->id2(k.arr[skeleton->cell2(f).src]));
  return out;
}

TwoFunctor comparison_K_full(const FunnyFull& f, const Fin2CategoryPtr& prod) {
  Functor k = comparison_K(f.under, prod);
  const Fin2Category& a = *f.under.a;
  const Fin2Category& b = *f.under.b;
  TwoFunctor out{f.cat, prod, k.obj, k.arr, {}};
  for (CellId s = 0; s < f.cat->num_2cells(); ++s) {
    const Word& w = f.under.words[f.cat->cell2(s).src];
    CellId sa = a.id2(a.id1(w.a));
    CellId sb = b.id2(b.id1(w.b));
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (w.letters[i].coord == 0) {
        sa = a.hcomp(f.letter_cells[s][i], sa);
      } else {
        sb = b.hcomp(f.letter_cells[s][i], sb);
      }
    }
    out.c2.push_back(pair_id(sa, sb, b.num_2cells()));
  }
  return out;
}

Word map_word(const Fin2Category& a2, const Fin2Category& b2, const TwoFunctor& f, const TwoFunctor& g,
              const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.letters.size());
  for (const Letter& l : w.letters) raw.push_back({l.coord, l.coord == 0 ? f.c1[l.cell] : g.c1[l.cell]});
  return word_reduce(a2, b2, f.obj[w.a], g.obj[w.b], raw);
}

Functor funny_map(const FunnyUnderlying& src, const FunnyUnderlying& tgt, const TwoFunctor& f, const TwoFunctor& g) {
  Functor h{src.cat, tgt.cat, {}, {}};
  const int nb = src.b->num_objects();
  for (ObjId x = 0; x < src.cat->num_objects(); ++x) {
    h.obj.push_back(tgt.object(f.obj[pair_part(x, nb, 0)], g.obj[pair_part(x, nb, 1)]));
  }
  for (const Word& w : src.words) h.arr.push_back(tgt.find(map_word(*tgt.a, *tgt.b, f, g, w)));
  return h;
}

// -------------------------------------------------------------------- gray

GrayTensor gray_tensor(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits, bool with_full_p) {
  GrayTensor t;
  t.a = a;
  t.b = b;
  t.funny = funny_underlying(a, b, limits);
  t.prod = product(a, b, limits);
  Functor k = comparison_K(t.funny, t.prod);
  t.factor = factor_through_underlying(t.funny.cat, k, t.prod, "(" + a->name() + " ⊗ " + b->name() + ")");
  t.cat = t.factor.middle;
  check_cells(t.cat->total_cells(), limits, "Gray tensor " + t.cat->name());
  t.q = t.factor.m;
  t.p = LeftLegData::underlying_only(t.funny.cat, t.cat, Functor{t.funny.cat, t.cat->underlying_ptr(),
                                                                  k.obj, identity_functor(t.funny.cat).arr});
  if (with_full_p) {
    try {
      t.full = funny_full(a, b, limits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedInput && e.kind() != ErrorKind::SizeLimit) throw;
    }
    if (t.full) {
      TwoFunctor kf = comparison_K_full(*t.full, t.prod);
      TwoFunctor p{t.full->cat, t.cat, kf.obj, identity_functor(t.funny.cat).arr, {}};
      for (CellId s = 0; s < t.full->cat->num_2cells(); ++s) {
        const TwoCell& c = t.full->cat->cell2(s);
        p.c2.push_back(t.find_cell(c.src, c.tgt, kf.c2[s]));
      }
      t.p.full = p;
    }
  }
  return t;
}

TwoFunctor gray_map(const GrayTensor& src, const GrayTensor& tgt, const TwoFunctor& f, const TwoFunctor& g) {
  Functor u = funny_map(src.funny, tgt.funny, f, g);
  TwoFunctor h{src.cat, tgt.cat, u.obj, u.arr, {}};
  const int n2 = src.b->num_2cells();
  const int m2 = tgt.b->num_2cells();
  for (const auto& c : src.factor.cells) {
    CellId pair = pair_id(f.c2[pair_part(c.base, n2, 0)], g.c2[pair_part(c.base, n2, 1)], m2);
    h.c2.push_back(tgt.find_cell(u.arr[c.src], u.arr[c.tgt], pair));
  }
  return h;
}

CellId interchanger(const GrayTensor& t, CellId f, CellId g) {
  const Fin2Category& a = *t.a;
  const Fin2Category& b = *t.b;
  ObjId x = a.cell1(f).src;
  ObjId y = b.cell1(g).src;
  CellId w1 = t.find_word(word_reduce(a, b, x, y, {{0, f}, {1, g}}));
  CellId w2 = t.find_word(word_reduce(a, b, x, y, {{1, g}, {0, f}}));
  CellId pair = t.prod->id2(pair_id(f, g, b.num_1cells()));
  return t.find_cell(w1, w2, pair);
}

}  // namespace grayfac
