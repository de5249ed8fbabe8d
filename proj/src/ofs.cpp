#include "grayfac/ofs.hpp"

#include <map>

#include "grayfac/search.hpp"
#include "parallel.hpp"

namespace grayfac {

namespace {

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

bool bijective(const std::vector<int>& m, int n) {
  if (static_cast<int>(m.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : m) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> invert(const std::vector<int>& m) {
  std::vector<int> inv(m.size(), kNone);
  for (std::size_t i = 0; i < m.size(); ++i) inv[m[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

bool is_bo(const Functor& f) { return bijective(f.obj, f.cod->num_objects()); }

bool is_ff(const Functor& f) {
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < a.num_objects(); ++y) {
      auto src = a.hom(x, y);
      auto tgt = b.hom(f.obj[x], f.obj[y]);
      if (src.size() != tgt.size()) return false;
      std::vector<char> seen(b.num_arrows(), 0);
      for (CellId h : src) {
        if (seen[f.arr[h]]) return false;
        seen[f.arr[h]] = 1;
      }
    }
  }
  return true;
}

bool is_boba(const TwoFunctor& f) {
  return bijective(f.obj, f.cod->num_objects()) && bijective(f.c1, f.cod->num_1cells());
}

bool is_lff(const TwoFunctor& f) {
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  std::vector<int> stamp(b.num_2cells(), -1);
  int round = 0;
  for (CellId g = 0; g < a.num_1cells(); ++g) {
    for (CellId h : a.hom1(a.cell1(g).src, a.cell1(g).tgt)) {
      auto src = a.hom2(g, h);
      auto tgt = b.hom2(f.c1[g], f.c1[h]);
      if (src.size() != tgt.size()) return false;
      ++round;
      for (CellId s : src) {
        if (stamp[f.c2[s]] == round) return false;
        stamp[f.c2[s]] = round;
      }
    }
  }
  return true;
}

CellId MiddleFactor::find(CellId f, CellId g, CellId base) const {
  auto it = first.find(pair_key(f, g));
  if (it == first.end()) return kNone;
  CellId c = it->second + base_pos[base];
  if (c < 0 || c >= static_cast<CellId>(cells.size()) || cells[c].src != f || cells[c].tgt != g ||
      cells[c].base != base) {
    return kNone;
  }
  return c;
}

MiddleFactor factor_through_underlying(const FinCategoryPtr& u, const Functor& f, const Fin2CategoryPtr& b,
                                       std::string name, bool validate) {
  MiddleFactor out;
  const FinCategory& uc = *u;
  const Fin2Category& bc = *b;
  out.base_pos.assign(bc.num_2cells(), 0);
  for (CellId x = 0; x < bc.num_1cells(); ++x) {
    for (CellId y : bc.hom1(bc.cell1(x).src, bc.cell1(x).tgt)) {
      int i = 0;
      for (CellId t : bc.hom2(x, y)) out.base_pos[t] = i++;
    }
  }
  Fin2Category::Builder builder(std::move(name));
  for (ObjId x = 0; x < uc.num_objects(); ++x) builder.add_object(uc.object_name(x));
  for (CellId g = 0; g < uc.num_arrows(); ++g) builder.add_1cell(uc.arrow(g).name, uc.src(g), uc.tgt(g));
  for (ObjId x = 0; x < uc.num_objects(); ++x) builder.set_identity1(x, uc.identity(x));
  uc.comp_table().for_each([&](int g, int f, int gf) { builder.set_comp1(g, f, gf); });
  for (CellId g = 0; g < uc.num_arrows(); ++g) {
    for (CellId h : uc.hom(uc.src(g), uc.tgt(g))) {
      out.first[pair_key(g, h)] = static_cast<CellId>(out.cells.size());
      for (CellId t : bc.hom2(f.arr[g], f.arr[h])) {
        if (g == h && t == bc.id2(f.arr[g])) {
          builder.add_identity2(g, "1_" + uc.arrow(g).name);
        } else {
          builder.add_2cell(uc.arrow(g).name + " =" + bc.cell2(t).name + "=> " + uc.arrow(h).name, g, h);
        }
        out.cells.push_back({g, h, t});
      }
    }
  }
  const auto n = static_cast<CellId>(out.cells.size());
  std::vector<std::vector<CellId>> from(uc.num_objects());
  for (CellId c = 0; c < n; ++c) from[uc.src(out.cells[c].src)].push_back(c);
  for (CellId c = 0; c < n; ++c) {
    const auto& [g, h, t] = out.cells[c];
    for (CellId k : uc.hom(uc.src(g), uc.tgt(g))) {
      for (CellId t2 : bc.hom2(f.arr[h], f.arr[k])) {
        builder.set_vcomp(out.find(h, k, t2), c, out.find(g, k, bc.vcomp(t2, t)));
      }
    }
    for (CellId d : from[uc.tgt(g)]) {
      const auto& [g2, h2, t2] = out.cells[d];
      builder.set_hcomp(d, c, out.find(uc.compose(g2, g), uc.compose(h2, h), bc.hcomp(t2, t)));
    }
  }
  out.middle = builder.build(validate);
  out.m = TwoFunctor{out.middle, b, f.obj, f.arr, {}};
  out.m.c2.reserve(n);
  for (const auto& c : out.cells) out.m.c2.push_back(c.base);
  return out;
}

Factorization factor_2functor(const TwoFunctor& f) {
  const Fin2Category& a = *f.dom;
  MiddleFactor mf = factor_through_underlying(a.underlying_ptr(), f.underlying(), f.cod, "im(" + a.name() + ")");
  Factorization out;
  out.middle = mf.middle;
  out.m = mf.m;
  out.e = TwoFunctor{f.dom, mf.middle, {}, {}, {}};
  for (ObjId x = 0; x < a.num_objects(); ++x) out.e.obj.push_back(x);
  for (CellId g = 0; g < a.num_1cells(); ++g) out.e.c1.push_back(g);
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    out.e.c2.push_back(mf.find(a.cell2(s).src, a.cell2(s).tgt, f.c2[s]));
  }
  return out;
}

CategoryFactorization factor_functor(const Functor& f) {
  const FinCategory& a = *f.dom;
  const FinCategory& b = *f.cod;
  FinCategory::Builder builder;
  for (ObjId x = 0; x < a.num_objects(); ++x) builder.add_object(a.object_name(x));
  std::map<std::array<int, 3>, CellId> arrow;
  std::vector<std::array<int, 3>> data;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    for (ObjId y = 0; y < a.num_objects(); ++y) {
      for (CellId h : b.hom(f.obj[x], f.obj[y])) {
        CellId id = builder.add_arrow("(" + a.object_name(x) + "," + b.arrow(h).name + "," + a.object_name(y) + ")",
                                      x, y);
        if (x == y && h == b.identity(f.obj[x])) builder.set_identity(x, id);
        arrow[{x, y, h}] = id;
        data.push_back({x, y, h});
      }
    }
  }
  for (const auto& [d1, i1] : arrow) {
    for (ObjId z = 0; z < a.num_objects(); ++z) {
      for (CellId h2 : b.hom(f.obj[d1[1]], f.obj[z])) {
        builder.set_comp(arrow.at({d1[1], z, h2}), i1, arrow.at({d1[0], z, b.compose(h2, d1[2])}));
      }
    }
  }
  CategoryFactorization out;
  out.middle = builder.build();
  out.e = Functor{f.dom, out.middle, {}, {}};
  for (ObjId x = 0; x < a.num_objects(); ++x) out.e.obj.push_back(x);
  for (CellId g = 0; g < a.num_arrows(); ++g) out.e.arr.push_back(arrow.at({a.src(g), a.tgt(g), f.arr[g]}));
  out.m = Functor{out.middle, f.cod, f.obj, {}};
  for (const auto& d : data) out.m.arr.push_back(d[2]);
  return out;
}

LeftLegData LeftLegData::from(const TwoFunctor& e) {
  return LeftLegData{e.dom->underlying_ptr(), e.cod, e.underlying(), e};
}

LeftLegData LeftLegData::underlying_only(const FinCategoryPtr& dom, const Fin2CategoryPtr& cod, const Functor& f) {
  return LeftLegData{dom, cod, f, std::nullopt};
}

LiftingSquare make_square(const TwoFunctor& e, const TwoFunctor& m, const TwoFunctor& top, const TwoFunctor& bottom) {
  return LiftingSquare{LeftLegData::from(e), m, top.underlying(), top, bottom};
}

TwoFunctor solve_lifting(const LiftingSquare& sq) {
  const Functor& e = sq.e.functor;
  const Fin2Category& b = *sq.e.cod;
  const Fin2Category& c = *sq.m.dom;
  if (!bijective(e.obj, b.num_objects()) || !bijective(e.arr, b.num_1cells())) {
    throw Error(ErrorKind::NotOrthogonal, "left leg is not bijective on objects and 1-cells");
  }
  const FinCategory& a = *sq.e.dom;
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (sq.m.obj[sq.top.obj[x]] != sq.bottom.obj[e.obj[x]]) {
      throw Error(ErrorKind::NonCommuting, "square differs at object " + a.object_name(x));
    }
  }
  for (CellId f = 0; f < a.num_arrows(); ++f) {
    if (sq.m.c1[sq.top.arr[f]] != sq.bottom.c1[e.arr[f]]) {
      throw Error(ErrorKind::NonCommuting, "square differs at 1-cell " + a.arrow(f).name);
    }
  }
  if (sq.e.full && sq.top_full) {
    const TwoFunctor& ef = *sq.e.full;
    for (CellId s = 0; s < ef.dom->num_2cells(); ++s) {
      if (sq.m.c2[sq.top_full->c2[s]] != sq.bottom.c2[ef.c2[s]]) {
        throw Error(ErrorKind::NonCommuting, "square differs at 2-cell " + ef.dom->cell2(s).name);
      }
    }
  }
  auto einv_obj = invert(e.obj);
  auto einv_arr = invert(e.arr);
  TwoFunctor d{sq.e.cod, sq.m.dom, {}, {}, {}};
  for (ObjId y = 0; y < b.num_objects(); ++y) d.obj.push_back(sq.top.obj[einv_obj[y]]);
  for (CellId g = 0; g < b.num_1cells(); ++g) d.c1.push_back(sq.top.arr[einv_arr[g]]);
  d.c2.assign(b.num_2cells(), kNone);
  auto failure = detail::first_failure(
      b.num_2cells(),
      [&](std::ptrdiff_t s) -> std::optional<std::string> {
        CellId want = sq.bottom.c2[s];
        CellId found = kNone;
        int hits = 0;
        for (CellId t : c.hom2(d.c1[b.cell2(s).src], d.c1[b.cell2(s).tgt])) {
          if (sq.m.c2[t] == want) {
            found = t;
            ++hits;
          }
        }
        if (hits != 1) {
          return (hits == 0 ? "no preimage for 2-cell " : "several preimages for 2-cell ") + b.cell2(s).name;
        }
        d.c2[s] = found;
        return std::nullopt;
      },
      true);
  if (failure) throw Error(ErrorKind::NotOrthogonal, *failure);
  try {
    d.validate();
  } catch (const Error& err) {
    throw Error(ErrorKind::NotOrthogonal, "filler is not a 2-functor: " + err.detail());
  }
  if (sq.e.full && sq.top_full) {
    if (!(compose(d, *sq.e.full) == *sq.top_full)) throw Error(ErrorKind::NonCommuting, "upper triangle fails");
  }
  if (!(compose(sq.m, d) == sq.bottom)) throw Error(ErrorKind::NonCommuting, "lower triangle fails");
  return d;
}

TwoFunctor solve_lifting(const TwoFunctor& e, const TwoFunctor& m, const TwoFunctor& top, const TwoFunctor& bottom) {
  return solve_lifting(make_square(e, m, top, bottom));
}

Functor solve_lifting(const Functor& e, const Functor& m, const Functor& top, const Functor& bottom) {
  const FinCategory& b = *e.cod;
  const FinCategory& c = *m.dom;
  if (!bijective(e.obj, b.num_objects())) throw Error(ErrorKind::NotOrthogonal, "left leg is not bijective on objects");
  if (!(compose(m, top) == compose(bottom, e))) throw Error(ErrorKind::NonCommuting, "square does not commute");
  auto einv = invert(e.obj);
  Functor d{e.cod, m.dom, {}, {}};
  for (ObjId y = 0; y < b.num_objects(); ++y) d.obj.push_back(top.obj[einv[y]]);
  for (CellId g = 0; g < b.num_arrows(); ++g) {
    CellId found = kNone;
    int hits = 0;
    for (CellId h : c.hom(d.obj[b.src(g)], d.obj[b.tgt(g)])) {
      if (m.arr[h] == bottom.arr[g]) {
        found = h;
        ++hits;
      }
    }
    if (hits != 1) {
      throw Error(ErrorKind::NotOrthogonal,
                  (hits == 0 ? "no preimage for arrow " : "several preimages for arrow ") + b.arrow(g).name);
    }
    d.arr.push_back(found);
  }
  try {
    d.validate();
  } catch (const Error& err) {
    throw Error(ErrorKind::NotOrthogonal, "filler is not a functor: " + err.detail());
  }
  if (!(compose(d, e) == top)) throw Error(ErrorKind::NonCommuting, "upper triangle fails");
  if (!(compose(m, d) == bottom)) throw Error(ErrorKind::NonCommuting, "lower triangle fails");
  return d;
}

std::vector<std::pair<TwoFunctor, TwoFunctor>> commuting_squares(const TwoFunctor& e, const TwoFunctor& m,
                                                                  std::size_t max_probes, const Limits& limits) {
  auto tops = enumerate_2functors(e.dom, m.dom, limits);
  auto bottoms = enumerate_2functors(e.cod, m.cod, limits);
  std::vector<std::pair<TwoFunctor, TwoFunctor>> out;
  for (const auto& top : tops) {
    auto mt = compose(m, top);
    for (const auto& bottom : bottoms) {
      if (out.size() >= max_probes) return out;
      if (mt == compose(bottom, e)) out.emplace_back(top, bottom);
    }
  }
  return out;
}

OrthogonalityReport check_orthogonality(const TwoFunctor& e, const TwoFunctor& m,
                                        const std::vector<std::pair<TwoFunctor, TwoFunctor>>& probes,
                                        const Limits& limits) {
  OrthogonalityReport report;
  auto candidates = enumerate_2functors(e.cod, m.dom, limits);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& [top, bottom] = probes[i];
    ++report.probes;
    if (!(compose(m, top) == compose(bottom, e))) {
      report.failures.push_back("probe " + std::to_string(i) + ": square does not commute");
      continue;
    }
    std::size_t fillers = 0;
    for (const auto& d : candidates) {
      if (compose(d, e) == top && compose(m, d) == bottom) ++fillers;
    }
    if (fillers == 1) {
      ++report.unique;
    } else {
      report.failures.push_back("probe " + std::to_string(i) + ": " + std::to_string(fillers) + " fillers");
    }
  }
  return report;
}

}  // namespace grayfac
