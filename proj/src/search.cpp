#include "grayfac/search.hpp"

#include <algorithm>
#include <atomic>

#include "parallel.hpp"

namespace grayfac {

namespace {

enum class CheckKind { Comp1, VComp, HComp };

struct Check {
  CheckKind kind;
  CellId x, y, xy;
};

class Search {
 public:
  Search(const Fin2Category& a, const Fin2Category& b, bool injective)
      : a_(a), b_(b), injective_(injective) {
    pos1_.assign(a.num_1cells(), -1);
    pos2_.assign(a.num_2cells(), -1);
    for (CellId f = 0; f < a.num_1cells(); ++f) {
      if (!a.is_identity1(f)) {
        pos1_[f] = static_cast<int>(vars_.size());
        vars_.push_back(f);
      }
    }
    n1_ = static_cast<int>(vars_.size());
    for (CellId s = 0; s < a.num_2cells(); ++s) {
      if (!a.is_identity2(s)) {
        pos2_[s] = static_cast<int>(vars_.size());
        vars_.push_back(s);
      }
    }
    checks_.assign(vars_.size(), {});
    auto add = [&](CheckKind k, int p, CellId x, CellId y, CellId xy) {
      if (p >= 0) checks_[p].push_back({k, x, y, xy});
    };
    a.underlying().comp_table().for_each([&](int g, int f, int gf) {
      add(CheckKind::Comp1, std::max({pos1_[g], pos1_[f], pos1_[gf]}), g, f, gf);
    });
    a.vcomp_table().for_each([&](int t, int s, int ts) {
      add(CheckKind::VComp, std::max({pos2_[t], pos2_[s], pos2_[ts]}), t, s, ts);
    });
    a.hcomp_table().for_each([&](int t, int s, int ts) {
      add(CheckKind::HComp, std::max({pos2_[t], pos2_[s], pos2_[ts]}), t, s, ts);
    });
    // deterministic check order regardless of hash iteration order
    for (auto& list : checks_) {
      std::sort(list.begin(), list.end(), [](const Check& p, const Check& q) {
        return std::tie(p.kind, p.x, p.y) < std::tie(q.kind, q.x, q.y);
      });
    }
    num_object_maps_ = 1;
    for (int i = 0; i < a.num_objects(); ++i) {
      num_object_maps_ *= static_cast<std::size_t>(b.num_objects());
    }
    if (a.num_objects() == 0) num_object_maps_ = 1;
  }

  std::size_t num_object_maps() const { return num_object_maps_; }

  /// Runs the search below the object map with index i; returns false if
  /// visit asked to stop.
  template <class Visit>
  bool run(std::size_t i, const Visit& visit) const {
    State st;
    st.f.obj.assign(a_.num_objects(), 0);
    std::size_t rest = i;
    for (int x = a_.num_objects() - 1; x >= 0; --x) {
      st.f.obj[x] = static_cast<ObjId>(rest % b_.num_objects());
      rest /= b_.num_objects();
    }
    if (injective_) {
      std::vector<char> seen(b_.num_objects(), 0);
      for (ObjId y : st.f.obj) {
        if (seen[y]) return true;
        seen[y] = 1;
      }
      st.used1.assign(b_.num_1cells(), 0);
      st.used2.assign(b_.num_2cells(), 0);
    }
    st.f.c1.assign(a_.num_1cells(), kNone);
    st.f.c2.assign(a_.num_2cells(), kNone);
    for (ObjId x = 0; x < a_.num_objects(); ++x) {
      CellId img = b_.id1(st.f.obj[x]);
      st.f.c1[a_.id1(x)] = img;
      if (injective_) st.used1[img] = 1;
    }
    return step(st, 0, visit);
  }

 private:
  struct State {
    TwoFunctor f;
    std::vector<char> used1, used2;
  };

  bool holds(const State& st, int p) const {
    const auto& c1 = st.f.c1;
    const auto& c2 = st.f.c2;
    for (const Check& c : checks_[p]) {
      switch (c.kind) {
        case CheckKind::Comp1:
          if (b_.comp1(c1[c.x], c1[c.y]) != c1[c.xy]) return false;
          break;
        case CheckKind::VComp:
          if (b_.vcomp(c2[c.x], c2[c.y]) != c2[c.xy]) return false;
          break;
        case CheckKind::HComp:
          if (b_.hcomp(c2[c.x], c2[c.y]) != c2[c.xy]) return false;
          break;
      }
    }
    return true;
  }

  template <class Visit>
  bool step(State& st, int p, const Visit& visit) const {
    if (p == n1_) {
      for (CellId f = 0; f < a_.num_1cells(); ++f) {
        CellId img = b_.id2(st.f.c1[f]);
        st.f.c2[a_.id2(f)] = img;
        if (injective_) st.used2[img] = 1;
      }
    }
    if (p == static_cast<int>(vars_.size())) return visit(st.f);
    CellId v = vars_[p];
    std::span<const CellId> domain;
    if (p < n1_) {
      domain = b_.hom1(st.f.obj[a_.cell1(v).src], st.f.obj[a_.cell1(v).tgt]);
    } else {
      domain = b_.hom2(st.f.c1[a_.cell2(v).src], st.f.c1[a_.cell2(v).tgt]);
    }
    auto& img = p < n1_ ? st.f.c1[v] : st.f.c2[v];
    auto* used = p < n1_ ? &st.used1 : &st.used2;
    for (CellId cand : domain) {
      if (injective_ && (*used)[cand]) continue;
      img = cand;
      if (!holds(st, p)) continue;
      if (injective_) (*used)[cand] = 1;
      bool go = step(st, p + 1, visit);
      if (injective_) (*used)[cand] = 0;
      if (!go) return false;
    }
    img = kNone;
    if (p == n1_ && injective_) {
      for (CellId f = 0; f < a_.num_1cells(); ++f) st.used2[b_.id2(st.f.c1[f])] = 0;
    }
    return true;
  }

  const Fin2Category& a_;
  const Fin2Category& b_;
  bool injective_;
  std::vector<CellId> vars_;
  int n1_ = 0;
  std::vector<int> pos1_, pos2_;
  std::vector<std::vector<Check>> checks_;
  std::size_t num_object_maps_ = 1;
};

void check_pair(const Fin2Category& a, const Fin2Category& b, const Limits& limits) {
  check_operand_size(a, limits);
  check_operand_size(b, limits);
}

}  // namespace

void check_operand_size(const Fin2Category& c, const Limits& limits) {
  if (static_cast<std::size_t>(c.num_objects()) > limits.max_objects ||
      static_cast<std::size_t>(c.num_1cells()) > limits.max_one_cells ||
      static_cast<std::size_t>(c.num_2cells()) > limits.max_two_cells) {
    throw Error(ErrorKind::SizeLimit, c.name() + " exceeds the enumeration bounds (" +
                                          std::to_string(c.num_objects()) + "/" +
                                          std::to_string(c.num_1cells()) + "/" +
                                          std::to_string(c.num_2cells()) + ")");
  }
}

std::vector<TwoFunctor> enumerate_2functors(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b,
                                            const Limits& limits, bool parallel) {
  check_pair(*a, *b, limits);
  if (b->num_objects() == 0 && a->num_objects() > 0) return {};
  Search search(*a, *b, false);
  std::atomic<std::size_t> total{0};
  auto out = detail::ordered_collect<TwoFunctor>(
      static_cast<std::ptrdiff_t>(search.num_object_maps()),
      [&](std::ptrdiff_t i) {
        std::vector<TwoFunctor> part;
        search.run(static_cast<std::size_t>(i), [&](const TwoFunctor& f) {
          if (total.fetch_add(1) >= limits.max_results) {
            throw Error(ErrorKind::SizeLimit, "more than " + std::to_string(limits.max_results) + " 2-functors");
          }
          part.push_back(f);
          part.back().dom = a;
          part.back().cod = b;
          return true;
        });
        return part;
      },
      parallel);
  return out;
}

std::size_t count_2functors(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits,
                            bool parallel) {
  check_pair(*a, *b, limits);
  if (b->num_objects() == 0 && a->num_objects() > 0) return 0;
  Search search(*a, *b, false);
  auto n = static_cast<std::ptrdiff_t>(search.num_object_maps());
  std::size_t total = 0;
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      search.run(static_cast<std::size_t>(i), [&](const TwoFunctor&) {
        ++total;
        return true;
      });
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      search.run(static_cast<std::size_t>(i), [&](const TwoFunctor&) {
        ++total;
        return true;
      });
    }
  }
  return total;
}

void for_each_2functor(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b,
                       const std::function<bool(const TwoFunctor&)>& visit, const Limits& limits) {
  check_pair(*a, *b, limits);
  if (b->num_objects() == 0 && a->num_objects() > 0) return;
  Search search(*a, *b, false);
  for (std::size_t i = 0; i < search.num_object_maps(); ++i) {
    bool go = search.run(i, [&](const TwoFunctor& f) {
      TwoFunctor g = f;
      g.dom = a;
      g.cod = b;
      return visit(g);
    });
    if (!go) return;
  }
}

std::optional<TwoFunctor> find_isomorphism(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b,
                                           const Limits& limits) {
  if (a->num_objects() != b->num_objects() || a->num_1cells() != b->num_1cells() ||
      a->num_2cells() != b->num_2cells() ||
      a->underlying().comp_table().size() != b->underlying().comp_table().size() ||
      a->vcomp_table().size() != b->vcomp_table().size() || a->hcomp_table().size() != b->hcomp_table().size()) {
    return std::nullopt;
  }
  if (a->total_cells() > limits.max_cells) {
    throw Error(ErrorKind::SizeLimit, "isomorphism search on more than " + std::to_string(limits.max_cells) +
                                          " cells");
  }
  Search search(*a, *b, true);
  std::optional<TwoFunctor> found;
  for (std::size_t i = 0; i < search.num_object_maps() && !found; ++i) {
    search.run(i, [&](const TwoFunctor& f) {
      found = f;
      found->dom = a;
      found->cod = b;
      return false;
    });
  }
  return found;
}

bool is_isomorphism(const TwoFunctor& f) {
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  if (a.num_objects() != b.num_objects() || a.num_1cells() != b.num_1cells() || a.num_2cells() != b.num_2cells() ||
      a.underlying().comp_table().size() != b.underlying().comp_table().size() ||
      a.vcomp_table().size() != b.vcomp_table().size() || a.hcomp_table().size() != b.hcomp_table().size()) {
    return false;
  }
  auto bijective = [](const std::vector<int>& m, int n) {
    std::vector<char> seen(n, 0);
    for (int v : m) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  return bijective(f.obj, b.num_objects()) && bijective(f.c1, b.num_1cells()) && bijective(f.c2, b.num_2cells()) &&
         f.is_valid();
}

TwoFunctor inverse(const TwoFunctor& f) {
  TwoFunctor g{f.cod, f.dom, {}, {}, {}};
  g.obj.assign(f.obj.size(), kNone);
  g.c1.assign(f.c1.size(), kNone);
  g.c2.assign(f.c2.size(), kNone);
  for (std::size_t i = 0; i < f.obj.size(); ++i) g.obj[f.obj[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < f.c1.size(); ++i) g.c1[f.c1[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < f.c2.size(); ++i) g.c2[f.c2[i]] = static_cast<int>(i);
  return g;
}

}  // namespace grayfac
