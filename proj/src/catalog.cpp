#include "grayfac/catalog.hpp"

#include <map>
#include <set>

namespace grayfac {

namespace {

using Path = std::vector<int>;  // edge indices in traversal order

std::string path_name(const ThinSpec& spec, const Path& p) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += spec.edges[*it].name;
  }
  return out;
}

}  // namespace

Fin2CategoryPtr thin_from_graph(const ThinSpec& spec) {
  const int n = static_cast<int>(spec.objects.size());
  std::map<std::string, int> edge_id;
  for (int e = 0; e < static_cast<int>(spec.edges.size()); ++e) edge_id[spec.edges[e].name] = e;

  // all paths, grouped by endpoints; the graph must be acyclic
  std::vector<Path> paths;
  std::vector<std::pair<int, int>> ends;
  for (int x = 0; x < n; ++x) {
    std::vector<std::pair<Path, int>> stack{{{}, x}};
    while (!stack.empty()) {
      auto [p, y] = stack.back();
      stack.pop_back();
      if (p.size() > spec.edges.size()) throw Error(ErrorKind::MalformedSpec, "graph has a cycle");
      if (!p.empty()) {
        paths.push_back(p);
        ends.push_back({x, y});
      }
      for (int e = static_cast<int>(spec.edges.size()) - 1; e >= 0; --e) {
        if (spec.edges[e].src == y) {
          Path q = p;
          q.push_back(e);
          stack.push_back({q, spec.edges[e].tgt});
        }
      }
    }
  }
  // 1-cell ids: identities first, then paths
  std::map<Path, CellId> cell_of;
  Fin2Category::Builder b(spec.name);
  for (int x = 0; x < n; ++x) b.add_object(spec.objects[x]);
  std::vector<Path> cells;
  std::vector<std::pair<int, int>> cell_ends;
  for (int x = 0; x < n; ++x) {
    b.add_identity1(x, "1_" + spec.objects[x]);
    cells.push_back({});
    cell_ends.push_back({x, x});
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CellId f = b.add_1cell(path_name(spec, paths[i]), ends[i].first, ends[i].second);
    cell_of[paths[i]] = f;
    cells.push_back(paths[i]);
    cell_ends.push_back(ends[i]);
  }
  auto cell = [&](const Path& p, int at) -> CellId { return p.empty() ? at : cell_of.at(p); };
  auto concat = [](const Path& first, const Path& second) {
    Path p = first;
    p.insert(p.end(), second.begin(), second.end());
    return p;
  };
  const int m = static_cast<int>(cells.size());
  for (CellId g = 0; g < m; ++g) {
    for (CellId f = 0; f < m; ++f) {
      if (cell_ends[f].second == cell_ends[g].first) {
        b.set_comp1(g, f, cell(concat(cells[f], cells[g]), cell_ends[f].first));
      }
    }
  }
  // generating relations closed under whiskering
  std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
  for (CellId f = 0; f < m; ++f) le[f][f] = 1;
  auto to_path = [&](const std::vector<std::string>& names) {
    Path p;
    for (const auto& s : names) {
      auto it = edge_id.find(s);
      if (it == edge_id.end()) throw Error(ErrorKind::MalformedSpec, "unknown edge " + s);
      p.push_back(it->second);
    }
    return p;
  };
  for (const auto& rel : spec.relations) {
    Path l = to_path(rel.lhs);
    Path r = to_path(rel.rhs);
    CellId lc = cell_of.at(l);
    CellId rc = cell_of.at(r);
    if (cell_ends[lc] != cell_ends[rc]) throw Error(ErrorKind::MalformedSpec, "relation between non-parallel paths");
    for (CellId pre = 0; pre < m; ++pre) {
      if (cell_ends[pre].second != cell_ends[lc].first) continue;
      for (CellId post = 0; post < m; ++post) {
        if (cell_ends[post].first != cell_ends[lc].second) continue;
        CellId x = cell_of.at(concat(concat(cells[pre], l), cells[post]));
        CellId y = cell_of.at(concat(concat(cells[pre], r), cells[post]));
        le[x][y] = 1;
        if (rel.invertible) le[y][x] = 1;
      }
    }
  }
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (!le[i][k]) continue;
      for (int j = 0; j < m; ++j) {
        if (le[k][j]) le[i][j] = 1;
      }
    }
  }
  std::map<std::pair<CellId, CellId>, CellId> two;
  for (CellId f = 0; f < n; ++f) two[{f, f}] = b.id2_of(f);
  for (CellId f = n; f < m; ++f) two[{f, f}] = b.add_identity2(f, "1_" + b.cell1(f).name);
  for (CellId f = 0; f < m; ++f) {
    for (CellId g = 0; g < m; ++g) {
      if (f != g && le[f][g]) two[{f, g}] = b.add_2cell(b.cell1(f).name + "=>" + b.cell1(g).name, f, g);
    }
  }
  for (const auto& [fg, s] : two) {
    for (const auto& [gh, t] : two) {
      if (fg.second == gh.first) b.set_vcomp(t, s, two.at({fg.first, gh.second}));
    }
  }
  auto comp = [&](CellId g, CellId f) {
    return cell(concat(cells[f], cells[g]), cell_ends[f].first);
  };
  for (const auto& [s01, s] : two) {
    for (const auto& [t01, t] : two) {
      if (cell_ends[s01.first].second != cell_ends[t01.first].first) continue;
      b.set_hcomp(t, s, two.at({comp(t01.first, s01.first), comp(t01.second, s01.second)}));
    }
  }
  return b.build();
}

CellId path_cell(const Fin2Category& c, const std::vector<std::string>& edges) {
  std::string name;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    if (!name.empty()) name += ".";
    name += *it;
  }
  auto f = c.find1(name);
  if (!f) throw Error(ErrorKind::MalformedSpec, "no path " + name + " in " + c.name());
  return *f;
}

Fin2CategoryPtr walking_invertible_2cell() {
  Fin2Category::Builder b("walking_iso");
  ObjId x = b.add_object("0");
  ObjId y = b.add_object("1");
  b.add_identity1(x);
  b.add_identity1(y);
  CellId f = b.add_1cell("f", x, y);
  CellId g = b.add_1cell("g", x, y);
  CellId idf = b.add_identity2(f, "1_f");
  CellId idg = b.add_identity2(g, "1_g");
  CellId a = b.add_2cell("alpha", f, g);
  CellId ai = b.add_2cell("alpha^-1", g, f);
  b.fill_unit_laws();
  b.set_vcomp(ai, a, idf);
  b.set_vcomp(a, ai, idg);
  return b.build();
}

Fin2CategoryPtr walking_isomorphism() {
  Fin2Category::Builder b("walking_iso_1cell");
  ObjId x = b.add_object("0");
  ObjId y = b.add_object("1");
  CellId ix = b.add_identity1(x);
  CellId iy = b.add_identity1(y);
  CellId u = b.add_1cell("u", x, y);
  CellId v = b.add_1cell("u'", y, x);
  CellId su = b.add_identity2(u, "1_u");
  CellId sv = b.add_identity2(v, "1_u'");
  b.fill_unit_laws();
  b.set_comp1(v, u, ix);
  b.set_comp1(u, v, iy);
  b.set_hcomp(sv, su, b.id2_of(ix));
  b.set_hcomp(su, sv, b.id2_of(iy));
  return b.build();
}

Fin2CategoryPtr loop() {
  Fin2Category::Builder b("loop");
  ObjId x = b.add_object("*");
  CellId i = b.add_identity1(x);
  CellId u = b.add_1cell("u", x, x);
  CellId su = b.add_identity2(u, "1_u");
  b.fill_unit_laws();
  b.set_comp1(u, u, i);
  b.set_hcomp(su, su, b.id2_of(i));
  return b.build();
}

Fin2CategoryPtr pseudo_commutative_square() {
  ThinSpec s;
  s.name = "pc_square";
  s.objects = {"a", "b", "c", "d"};
  s.edges = {{"f", 0, 1}, {"r", 0, 2}, {"s", 1, 3}, {"g", 2, 3}};
  s.relations = {{{"r", "g"}, {"f", "s"}, true}};
  return thin_from_graph(s);
}

Fin2CategoryPtr square_with_two_cells() {
  ThinSpec s;
  s.name = "gray_s2_s1";
  s.objects = {"a", "b", "c", "d"};
  s.edges = {{"f", 0, 1}, {"f'", 0, 1}, {"r", 0, 2}, {"s", 1, 3}, {"g", 2, 3}, {"g'", 2, 3}};
  s.relations = {
      {{"f"}, {"f'"}, false},
      {{"g"}, {"g'"}, false},
      {{"r", "g"}, {"f", "s"}, true},
      {{"r", "g'"}, {"f'", "s"}, true},
  };
  return thin_from_graph(s);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"S0", "terminal 2-category", [] { return standard_cell(0); }},
      {"S1", "free 1-cell", [] { return standard_cell(1); }},
      {"S2", "free 2-cell", [] { return standard_cell(2); }},
      {"walking_iso", "walking invertible 2-cell", &walking_invertible_2cell},
      {"walking_iso_1cell", "walking isomorphism, locally discrete", &walking_isomorphism},
      {"loop", "one object, one endo-1-cell squaring to the identity", &loop},
      {"pc_square", "pseudo-commutative square", &pseudo_commutative_square},
      {"gray_s2_s1", "square with two 2-cells and two invertible 2-cells", &square_with_two_cells},
  };
  return entries;
}

Fin2CategoryPtr catalog_get(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.make();
  }
  throw Error(ErrorKind::MalformedSpec, "unknown catalog entry " + name);
}

std::vector<Fin2CategoryPtr> locally_contractible_catalog() {
  std::vector<Fin2CategoryPtr> out;
  for (const auto& e : catalog()) {
    auto c = e.make();
    if (is_locally_contractible(*c)) out.push_back(c);
  }
  return out;
}

}  // namespace grayfac
