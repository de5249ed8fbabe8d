// Command-line front end: every command prints a JSON report on stdout and
// exits 0 on success, 1 on a mathematical failure, 2 when a resource bound is
// hit and 3 on malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "grayfac/catalog.hpp"
#include "grayfac/document.hpp"
#include "grayfac/homs.hpp"
#include "grayfac/models.hpp"
#include "grayfac/ofs.hpp"
#include "grayfac/tensor.hpp"

using namespace grayfac;

namespace {

Json counts(const Fin2Category& c) {
  return Json{{"objects", c.num_objects()}, {"one_cells", c.num_1cells()}, {"two_cells", c.num_2cells()}};
}

Json limits_json(const Limits& l) {
  return Json{{"max_word_len", l.max_word_len}, {"max_cells", l.max_cells}};
}

Json functor_json(const Functor& f) { return Json{{"obj", f.obj}, {"arr", f.arr}}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// Tuples of the given arity: explicit when the list contains ';', otherwise
// every tuple over the comma-separated names.
std::vector<std::vector<std::string>> probe_tuples(const std::string& list, int arity) {
  std::vector<std::vector<std::string>> out;
  if (list.find(';') != std::string::npos) {
    for (const auto& t : split(list, ';')) {
      auto names = split(t, ',');
      if (static_cast<int>(names.size()) == arity) out.push_back(names);
    }
    return out;
  }
  auto names = split(list, ',');
  if (names.empty()) throw Error(ErrorKind::MalformedSpec, "empty probe list");
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    std::vector<std::string> t;
    for (auto i : idx) t.push_back(names[i]);
    out.push_back(t);
    int k = arity - 1;
    while (k >= 0 && ++idx[k] == names.size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

Json report_json(const CoherenceReport& r) {
  return Json{{"axiom", r.axiom}, {"probes", r.probes}, {"checked", r.checked}, {"failures", r.failures},
              {"ok", r.ok()}};
}

template <class Amb, class Load>
Json run_coherence(Amb& amb, const std::string& axiom, const std::string& list, Load load, bool& ok) {
  Engine<Amb> eng(amb);
  Json out = Json::array();
  std::map<std::string, typename Amb::Object> cache;
  auto get = [&](const std::string& n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, load(n)).first;
    return it->second;
  };
  for (const auto& sides : axiom_sides(axiom)) {
    std::vector<std::vector<typename Amb::Object>> tuples;
    for (const auto& names : probe_tuples(list, sides.arity)) {
      std::vector<typename Amb::Object> t;
      for (const auto& n : names) t.push_back(get(n));
      tuples.push_back(t);
    }
    auto rep = eng.check({sides}, tuples, sides.axiom);
    ok = ok && rep.ok();
    out.push_back(report_json(rep));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray tensor products of finite 2-categories via the (boba, lff) factorisation"};
  app.require_subcommand(1);
  Limits limits;
  std::string output;
  app.add_option("--max-word-len", limits.max_word_len, "longest reduced word explored in a funny tensor");
  app.add_option("--max-cells", limits.max_cells, "largest number of cells generated by one construction");
  app.add_option("-o,--output", output, "write the report to a file instead of stdout");

  std::string a, b, file, kind = "ps", axiom, probes = "S0,S1,S2", ambient = "main", sub, name;
  bool full = false, emit_pq = false;

  auto* validate = app.add_subcommand("validate", "load and check a 2-category document or catalog entry");
  validate->add_option("file", file)->required();
  auto* prod = app.add_subcommand("product", "cartesian product");
  auto* funny = app.add_subcommand("funny", "funny tensor");
  auto* gray = app.add_subcommand("gray", "Gray tensor");
  auto* hom = app.add_subcommand("hom", "strict, funny or pseudo hom 2-category");
  for (auto* s : {prod, funny, gray, hom}) {
    s->add_option("a", a)->required();
    s->add_option("b", b)->required();
  }
  funny->add_flag("--full", full, "include the 2-cells of the full funny tensor");
  gray->add_flag("--emit-pq", emit_pq, "include the maps P and Q");
  hom->add_option("--kind", kind, "strict|funny|ps");
  auto* factor = app.add_subcommand("factor", "(boba, lff) factorisation of a 2-functor document");
  factor->add_option("file", file)->required();
  auto* lift = app.add_subcommand("lift", "diagonal filler of a lifting square document");
  lift->add_option("file", file)->required();
  auto* coherence = app.add_subcommand("coherence", "check a coherence axiom of the derived Gray structure");
  coherence->add_option("--axiom", axiom, "pentagon|triangle|symmetry|hexagon")->required();
  coherence->add_option("--probes", probes, "comma-separated names, or ';'-separated explicit tuples");
  coherence->add_option("--ambient", ambient, "main (2-categories) or toy (categories)");
  auto* cat = app.add_subcommand("catalog", "list the catalog or show one entry");
  cat->add_option("action", sub, "list|show")->required();
  cat->add_option("name", name);
  auto* exp = app.add_subcommand("export", "export a 2-category");
  exp->add_option("--dot", file, "2-category to draw")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  Json rep;
  int code = 0;
  std::string text;
  try {
    if (*validate) {
      auto c = resolve_2category(file);
      c->validate();
      rep = {{"command", "validate"}, {"input", file}, {"name", c->name()}, {"counts", counts(*c)},
             {"locally_discrete", is_locally_discrete(*c)}, {"locally_contractible", is_locally_contractible(*c)},
             {"valid", true}};
    } else if (*prod) {
      auto p = product(resolve_2category(a), resolve_2category(b), limits);
      rep = {{"command", "product"}, {"inputs", {a, b}}, {"counts", counts(*p)}, {"document", to_json(*p)}};
    } else if (*funny) {
      auto ca = resolve_2category(a);
      auto cb = resolve_2category(b);
      Fin2CategoryPtr c = full ? funny_full(ca, cb, limits).cat : funny_skeleton(funny_underlying(ca, cb, limits));
      rep = {{"command", "funny"}, {"inputs", {a, b}}, {"full", full}, {"limits", limits_json(limits)},
             {"counts", counts(*c)}, {"document", to_json(*c)}};
    } else if (*gray) {
      GrayTensor t = gray_tensor(resolve_2category(a), resolve_2category(b), limits, emit_pq);
      rep = {{"command", "gray"},       {"inputs", {a, b}},        {"limits", limits_json(limits)},
             {"counts", counts(*t.cat)}, {"p_boba", t.p.is_full() ? Json(is_boba(*t.p.full)) : Json(nullptr)},
             {"q_lff", is_lff(t.q)},    {"document", to_json(*t.cat)}};
      if (emit_pq) {
        rep["p"] = t.p.is_full() ? to_json(*t.p.full) : functor_json(t.p.functor);
        rep["q"] = to_json(t.q);
      }
    } else if (*hom) {
      HomCategory h = build_hom(resolve_2category(a), resolve_2category(b), parse_hom_kind(kind), limits);
      rep = {{"command", "hom"}, {"inputs", {a, b}}, {"kind", to_string(h.kind)}, {"counts", counts(*h.cat)},
             {"document", to_json(*h.cat)}};
    } else if (*factor) {
      TwoFunctor f = functor_from_json(Json::parse(read_file(file)));
      Factorization fac = factor_2functor(f);
      rep = {{"command", "factor"},
             {"input", file},
             {"middle", counts(*fac.middle)},
             {"e_boba", is_boba(fac.e)},
             {"m_lff", is_lff(fac.m)},
             {"composite_matches", compose(fac.m, fac.e) == f},
             {"e", to_json(fac.e)},
             {"m", to_json(fac.m)},
             {"document", to_json(*fac.middle)}};
    } else if (*lift) {
      Json sq = Json::parse(read_file(file));
      for (const char* k : {"e", "m", "top", "bottom"}) {
        if (!sq.contains(k)) throw Error(ErrorKind::MalformedSpec, std::string("square lacks '") + k + "'");
      }
      TwoFunctor e = functor_from_json(sq["e"]);
      TwoFunctor m = functor_from_json(sq["m"]);
      TwoFunctor top = functor_from_json(sq["top"]);
      TwoFunctor bottom = functor_from_json(sq["bottom"]);
      // legs share their corners by reference name, so rebind them to one handle each
      top.dom = e.dom;
      top.cod = m.dom;
      bottom.dom = e.cod;
      bottom.cod = m.cod;
      for (auto* f : {&e, &m, &top, &bottom}) f->validate();
      TwoFunctor d = solve_lifting(e, m, top, bottom);
      rep = {{"command", "lift"}, {"input", file}, {"filler", to_json(d)}};
    } else if (*coherence) {
      bool ok = true;
      Json checks;
      if (ambient == "main") {
        MainAmbient amb(limits);
        checks = run_coherence(amb, axiom, probes, [](const std::string& n) { return resolve_2category(n); }, ok);
      } else if (ambient == "toy") {
        ToyAmbient amb(limits);
        checks = run_coherence(
            amb, axiom, probes,
            [&amb](const std::string& n) {
              auto c = resolve_2category(n)->underlying_ptr();
              amb.name(c, n);
              return c;
            },
            ok);
      } else {
        throw Error(ErrorKind::MalformedSpec, "ambient must be main or toy");
      }
      rep = {{"command", "coherence"}, {"ambient", ambient}, {"probe_list", probes}, {"checks", checks}, {"ok", ok}};
      if (!ok) code = 1;
    } else if (*cat) {
      if (sub == "list") {
        Json entries = Json::array();
        for (const auto& e : catalog()) entries.push_back(Json{{"name", e.name}, {"description", e.description}});
        rep = {{"command", "catalog list"}, {"entries", entries}};
      } else if (sub == "show") {
        if (name.empty()) throw Error(ErrorKind::MalformedSpec, "catalog show needs a name");
        rep = to_json(*resolve_2category(name));
      } else {
        throw Error(ErrorKind::MalformedSpec, "catalog action must be list or show");
      }
    } else if (*exp) {
      text = to_dot(*resolve_2category(file));
    }
  } catch (const Error& err) {
    rep = {{"error", std::string(to_string(err.kind()))}, {"detail", err.detail()}};
    code = exit_code(err.kind());
    std::cerr << err.what() << "\n";
    text.clear();
  } catch (const Json::exception& err) {
    rep = {{"error", "MalformedSpec"}, {"detail", err.what()}};
    code = 3;
    std::cerr << err.what() << "\n";
    text.clear();
  }
  if (text.empty()) text = rep.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << text;
  }
  return code;
}
