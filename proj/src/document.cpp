#include "grayfac/document.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "grayfac/catalog.hpp"

namespace grayfac {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

// Reads [[x, y, z], ...] into triples.
std::vector<std::array<int, 3>> triples(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<std::array<int, 3>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) malformed(std::string(what) + " entries are triples");
    out.push_back({as_int(t[0], what), as_int(t[1], what), as_int(t[2], what)});
  }
  return out;
}

void check_permutation(const std::vector<int>& ids, const char* what) {
  std::vector<bool> seen(ids.size(), false);
  for (int i : ids) {
    if (i < 0 || i >= static_cast<int>(ids.size()) || seen[i]) malformed(std::string(what) + " ids are not 0..n-1");
    seen[i] = true;
  }
}

}  // namespace

Json to_json(const Fin2Category& c) {
  Json doc;
  doc["format"] = "grayfac.2category";
  doc["version"] = kDocumentVersion;
  doc["name"] = c.name();
  Json objects = Json::array();
  for (ObjId x = 0; x < c.num_objects(); ++x) objects.push_back(c.object_name(x));
  doc["objects"] = objects;
  Json ids1 = Json::array();
  for (ObjId x = 0; x < c.num_objects(); ++x) ids1.push_back(c.id1(x));
  doc["identity_1cells"] = ids1;

  auto is_unit2 = [&](CellId s) { return c.is_identity2(s); };
  auto is_unit_h = [&](CellId s) { return c.is_identity2(s) && c.is_identity1(c.cell2(s).src); };

  Json homs = Json::array();
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      auto h = c.hom1(x, y);
      if (h.empty()) continue;
      Json block;
      block["src"] = x;
      block["tgt"] = y;
      Json ones = Json::array();
      Json twos = Json::array();
      Json vcomp = Json::array();
      for (CellId f : h) {
        ones.push_back(Json{{"id", f}, {"name", c.cell1(f).name}});
      }
      std::vector<CellId> cells;
      for (CellId f : h) {
        for (CellId s : c.vout(f)) cells.push_back(s);
      }
      std::sort(cells.begin(), cells.end());
      for (CellId s : cells) {
        Json e{{"id", s}, {"name", c.cell2(s).name}, {"src", c.cell2(s).src}, {"tgt", c.cell2(s).tgt}};
        if (c.is_identity2(s)) e["identity"] = true;
        twos.push_back(e);
      }
      for (const auto& [b, a, ba] : c.vcomp_table().sorted_entries()) {
        if (c.src0(a) != x || c.tgt0(a) != y || is_unit2(a) || is_unit2(b)) continue;
        vcomp.push_back(Json::array({b, a, ba}));
      }
      block["cells1"] = ones;
      block["cells2"] = twos;
      block["vcomp"] = vcomp;
      homs.push_back(block);
    }
  }
  doc["homs"] = homs;
  Json comp = Json::array();
  for (const auto& [g, f, gf] : c.underlying().comp_table().sorted_entries()) {
    if (c.is_identity1(g) || c.is_identity1(f)) continue;
    comp.push_back(Json::array({g, f, gf}));
  }
  doc["comp1"] = comp;
  Json hcomp = Json::array();
  for (const auto& [t, s, ts] : c.hcomp_table().sorted_entries()) {
    if (is_unit_h(t) || is_unit_h(s)) continue;
    hcomp.push_back(Json::array({t, s, ts}));
  }
  doc["hcomp"] = hcomp;
  return doc;
}

Fin2CategoryPtr from_json(const Json& doc) {
  if (!doc.is_object()) malformed("a 2-category document is a JSON object");
  if (doc.contains("version") && as_int(doc.at("version"), "version") != kDocumentVersion) {
    malformed("unsupported document version");
  }
  std::string name = doc.contains("name") ? as_string(doc.at("name"), "name") : std::string{};
  Fin2Category::Builder b(name);
  const Json& objects = field(doc, "objects");
  if (!objects.is_array()) malformed("objects must be an array");
  for (const auto& o : objects) b.add_object(as_string(o, "object name"));
  const int n0 = b.num_objects();

  struct One {
    std::string name;
    ObjId src, tgt;
  };
  struct Two {
    std::string name;
    CellId src, tgt;
    bool identity;
  };
  std::map<int, One> ones;
  std::map<int, Two> twos;
  std::vector<std::array<int, 3>> vcomp;
  const Json& homs = field(doc, "homs");
  if (!homs.is_array()) malformed("homs must be an array");
  for (const auto& block : homs) {
    ObjId x = as_int(field(block, "src"), "hom src");
    ObjId y = as_int(field(block, "tgt"), "hom tgt");
    if (x < 0 || x >= n0 || y < 0 || y >= n0) malformed("hom block names an unknown object");
    for (const auto& e : field(block, "cells1")) {
      int id = as_int(field(e, "id"), "1-cell id");
      if (!ones.emplace(id, One{as_string(field(e, "name"), "1-cell name"), x, y}).second) {
        malformed("1-cell id " + std::to_string(id) + " repeated");
      }
    }
    for (const auto& e : field(block, "cells2")) {
      int id = as_int(field(e, "id"), "2-cell id");
      bool ident = e.contains("identity") && e.at("identity").get<bool>();
      Two t{as_string(field(e, "name"), "2-cell name"), as_int(field(e, "src"), "2-cell src"),
            as_int(field(e, "tgt"), "2-cell tgt"), ident};
      if (!twos.emplace(id, t).second) malformed("2-cell id " + std::to_string(id) + " repeated");
    }
    if (block.contains("vcomp")) {
      auto v = triples(block.at("vcomp"), "vcomp");
      vcomp.insert(vcomp.end(), v.begin(), v.end());
    }
  }
  std::vector<int> ids;
  for (const auto& [id, one] : ones) ids.push_back(id);
  check_permutation(ids, "1-cell");
  ids.clear();
  for (const auto& [id, two] : twos) ids.push_back(id);
  check_permutation(ids, "2-cell");

  for (const auto& [id, one] : ones) b.add_1cell(one.name, one.src, one.tgt);
  const Json& idents = field(doc, "identity_1cells");
  if (!idents.is_array() || static_cast<int>(idents.size()) != n0) malformed("one identity 1-cell per object");
  for (ObjId x = 0; x < n0; ++x) {
    CellId f = as_int(idents[x], "identity 1-cell");
    if (f < 0 || f >= b.num_1cells() || b.cell1(f).src != x || b.cell1(f).tgt != x) {
      malformed("identity 1-cell of " + std::to_string(x) + " is not an endo-1-cell");
    }
    b.set_identity1(x, f);
  }
  for (const auto& [id, two] : twos) {
    if (two.src < 0 || two.src >= b.num_1cells() || two.tgt < 0 || two.tgt >= b.num_1cells()) {
      malformed("2-cell " + two.name + " has an unknown boundary");
    }
    if (two.identity) {
      if (two.src != two.tgt) malformed("identity 2-cell " + two.name + " is not an endo-2-cell");
      b.add_identity2(two.src, two.name);
    } else {
      b.add_2cell(two.name, two.src, two.tgt);
    }
  }
  for (CellId f = 0; f < b.num_1cells(); ++f) {
    if (b.id2_of(f) == kNone) malformed("1-cell " + b.cell1(f).name + " has no identity 2-cell");
  }
  auto in_range = [](const std::array<int, 3>& t, int n) {
    return t[0] >= 0 && t[0] < n && t[1] >= 0 && t[1] < n && t[2] >= 0 && t[2] < n;
  };
  for (const auto& t : vcomp) {
    if (!in_range(t, b.num_2cells())) malformed("vcomp entry out of range");
    b.set_vcomp(t[0], t[1], t[2]);
  }
  for (const auto& t : triples(field(doc, "comp1"), "comp1")) {
    if (!in_range(t, b.num_1cells())) malformed("comp1 entry out of range");
    b.set_comp1(t[0], t[1], t[2]);
  }
  for (const auto& t : triples(field(doc, "hcomp"), "hcomp")) {
    if (!in_range(t, b.num_2cells())) malformed("hcomp entry out of range");
    b.set_hcomp(t[0], t[1], t[2]);
  }
  b.fill_unit_laws();
  return b.build();
}

std::string save_document(const Fin2Category& c) { return to_json(c).dump(2) + "\n"; }

Fin2CategoryPtr load_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    malformed(std::string("invalid JSON: ") + err.what());
  }
  return from_json(doc);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) malformed("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fin2CategoryPtr resolve_2category(const std::string& ref) {
  if (const char* dir = std::getenv("GRAYFAC_CATALOG_DIR")) {
    std::filesystem::path p = std::filesystem::path(dir) / (ref + ".json");
    if (std::filesystem::exists(p)) return load_document(read_file(p));
  }
  for (const auto& e : catalog()) {
    if (e.name == ref) return e.make();
  }
  if (std::filesystem::exists(ref)) return load_document(read_file(ref));
  malformed("no catalog entry or file named '" + ref + "'");
}

Fin2CategoryPtr resolve_2category(const Json& ref) {
  if (ref.is_string()) return resolve_2category(ref.get<std::string>());
  return from_json(ref);
}

namespace {

int lookup(const Json& j, int n, const std::function<std::optional<int>(const std::string&)>& by_name,
           const char* what) {
  if (j.is_string()) {
    auto id = by_name(j.get<std::string>());
    if (!id) malformed(std::string("unknown ") + what + " '" + j.get<std::string>() + "'");
    return *id;
  }
  int id = as_int(j, what);
  if (id < 0 || id >= n) malformed(std::string(what) + " id out of range");
  return id;
}

}  // namespace

TwoFunctor functor_from_json(const Json& doc) {
  TwoFunctor f;
  f.dom = resolve_2category(field(doc, "dom"));
  f.cod = resolve_2category(field(doc, "cod"));
  const Fin2Category& a = *f.dom;
  const Fin2Category& b = *f.cod;
  auto object_by_name = [&](const std::string& n) -> std::optional<int> {
    for (ObjId x = 0; x < b.num_objects(); ++x) {
      if (b.object_name(x) == n) return x;
    }
    return std::nullopt;
  };
  auto read = [&](const char* key, int expected, int n, const std::function<std::optional<int>(const std::string&)>& by,
                  std::vector<int>& out) {
    const Json& arr = field(doc, key);
    if (!arr.is_array() || static_cast<int>(arr.size()) != expected) {
      malformed(std::string(key) + " must list one image per cell of the domain");
    }
    for (const auto& j : arr) out.push_back(lookup(j, n, by, key));
  };
  read("obj", a.num_objects(), b.num_objects(), object_by_name, f.obj);
  read("c1", a.num_1cells(), b.num_1cells(), [&](const std::string& n) { return b.find1(n); }, f.c1);
  read("c2", a.num_2cells(), b.num_2cells(), [&](const std::string& n) { return b.find2(n); }, f.c2);
  f.validate();
  return f;
}

Json to_json(const TwoFunctor& f) {
  Json j;
  j["dom"] = f.dom->name();
  j["cod"] = f.cod->name();
  j["obj"] = f.obj;
  j["c1"] = f.c1;
  j["c2"] = f.c2;
  return j;
}

std::string to_dot(const Fin2Category& c) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(c.name().empty() ? "C" : c.name()) << " {\n";
  for (ObjId x = 0; x < c.num_objects(); ++x) out << "  n" << x << " [label=" << quote(c.object_name(x)) << "];\n";
  for (CellId f = 0; f < c.num_1cells(); ++f) {
    if (c.is_identity1(f)) continue;
    std::size_t twos = 0;
    for (CellId s : c.vout(f)) twos += c.is_identity2(s) ? 0 : 1;
    std::string label = c.cell1(f).name;
    if (twos) label += " [" + std::to_string(twos) + "]";
    out << "  n" << c.cell1(f).src << " -> n" << c.cell1(f).tgt << " [label=" << quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace grayfac
