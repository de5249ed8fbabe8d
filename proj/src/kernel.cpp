#include "grayfac/kernel.hpp"

#include <algorithm>
#include <sstream>

#include "parallel.hpp"

namespace grayfac {

namespace {

[[noreturn]] void violation(const std::string& axiom, const std::string& witness) {
  throw Error(ErrorKind::AxiomViolation, axiom + " (" + witness + ")");
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

const std::vector<CellId> kEmpty;

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::WordExplosion: return "WordExplosion";
    case ErrorKind::UnsupportedInput: return "UnsupportedInput";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation:
    case ErrorKind::NotOrthogonal:
    case ErrorKind::NonCommuting:
    case ErrorKind::HypothesisViolation:
      return 1;
    case ErrorKind::SizeLimit:
    case ErrorKind::WordExplosion:
    case ErrorKind::UnsupportedInput:
      return 2;
    case ErrorKind::MalformedSpec:
    case ErrorKind::ArityMismatch:
      return 3;
  }
  return 3;
}

std::vector<std::array<int, 3>> PairTable::sorted_entries() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(table_.size());
  for_each([&](int a, int b, int v) { out.push_back({a, b, v}); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- FinCategory

std::span<const CellId> FinCategory::hom(ObjId x, ObjId y) const {
  auto it = hom_.find({x, y});
  return it == hom_.end() ? std::span<const CellId>(kEmpty) : std::span<const CellId>(it->second);
}

std::optional<CellId> FinCategory::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void FinCategory::index() {
  hom_.clear();
  out_.assign(objects_.size(), {});
  by_name_.clear();
  for (CellId f = 0; f < num_arrows(); ++f) {
    const Arrow& a = arrows_[f];
    if (a.src < 0 || a.src >= num_objects() || a.tgt < 0 || a.tgt >= num_objects()) {
      throw Error(ErrorKind::MalformedSpec, cat("arrow ", a.name, " has an endpoint out of range"));
    }
    hom_[{a.src, a.tgt}].push_back(f);
    out_[a.src].push_back(f);
    if (!by_name_.emplace(a.name, f).second) {
      throw Error(ErrorKind::MalformedSpec, cat("duplicate 1-cell name ", a.name));
    }
  }
}

bool FinCategory::operator==(const FinCategory& other) const {
  if (num_objects() != other.num_objects() || identity_ != other.identity_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].src != other.arrows_[i].src || arrows_[i].tgt != other.arrows_[i].tgt) return false;
  }
  return comp_ == other.comp_;
}

void FinCategory::validate(bool parallel) const {
  if (static_cast<int>(identity_.size()) != num_objects()) {
    throw Error(ErrorKind::MalformedSpec, "missing identity arrows");
  }
  for (ObjId x = 0; x < num_objects(); ++x) {
    CellId i = identity_[x];
    if (i < 0 || i >= num_arrows() || arrows_[i].src != x || arrows_[i].tgt != x) {
      violation("identity", cat("object ", objects_[x]));
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(arrows_.size());
  auto check = [&](const char* axiom, auto body) {
    if (auto w = detail::first_failure(n, body, parallel)) violation(axiom, *w);
  };
  std::size_t composable = 0;
  for (CellId f = 0; f < num_arrows(); ++f) composable += out_[tgt(f)].size();
  if (composable != comp_.size()) {
    violation("composition defined only on composable pairs",
              cat(comp_.size(), " entries for ", composable, " composable pairs"));
  }
  check("composition", [&](std::ptrdiff_t f) -> std::optional<std::string> {
    for (CellId g : out_[tgt(f)]) {
      CellId gf = compose(g, f);
      if (gf < 0 || gf >= num_arrows() || src(gf) != src(f) || tgt(gf) != tgt(g)) {
        return cat(arrows_[g].name, " o ", arrows_[f].name);
      }
    }
    return std::nullopt;
  });
  check("unit law", [&](std::ptrdiff_t f) -> std::optional<std::string> {
    if (compose(static_cast<CellId>(f), identity_[src(f)]) != f ||
        compose(identity_[tgt(f)], static_cast<CellId>(f)) != f) {
      return arrows_[f].name;
    }
    return std::nullopt;
  });
  check("associativity", [&](std::ptrdiff_t f) -> std::optional<std::string> {
    for (CellId g : out_[tgt(f)]) {
      CellId gf = compose(g, f);
      for (CellId h : out_[tgt(g)]) {
        if (compose(h, gf) != compose(compose(h, g), f)) {
          return cat(arrows_[h].name, ", ", arrows_[g].name, ", ", arrows_[f].name);
        }
      }
    }
    return std::nullopt;
  });
}

ObjId FinCategory::Builder::add_object(std::string name) {
  cat_.objects_.push_back(std::move(name));
  cat_.identity_.push_back(kNone);
  return cat_.num_objects() - 1;
}

CellId FinCategory::Builder::add_arrow(std::string name, ObjId src, ObjId tgt) {
  cat_.arrows_.push_back({std::move(name), src, tgt});
  return cat_.num_arrows() - 1;
}

CellId FinCategory::Builder::add_identity(ObjId x, std::string name) {
  if (name.empty()) name = "1_" + cat_.objects_.at(x);
  CellId id = add_arrow(std::move(name), x, x);
  cat_.identity_.at(x) = id;
  return id;
}

void FinCategory::Builder::fill_unit_laws() {
  for (CellId f = 0; f < cat_.num_arrows(); ++f) {
    const Arrow& a = cat_.arrows_[f];
    if (a.src >= 0 && a.src < cat_.num_objects() && cat_.identity_[a.src] != kNone) {
      cat_.comp_.set(f, cat_.identity_[a.src], f);
    }
    if (a.tgt >= 0 && a.tgt < cat_.num_objects() && cat_.identity_[a.tgt] != kNone) {
      cat_.comp_.set(cat_.identity_[a.tgt], f, f);
    }
  }
}

std::shared_ptr<const FinCategory> FinCategory::Builder::build(bool validate) {
  for (ObjId x = 0; x < cat_.num_objects(); ++x) {
    if (cat_.identity_[x] == kNone) {
      throw Error(ErrorKind::MalformedSpec, "object " + cat_.objects_[x] + " has no identity");
    }
  }
  cat_.index();
  auto out = std::make_shared<FinCategory>(std::move(cat_));
  cat_ = FinCategory{};
  if (validate) out->validate();
  return out;
}

// --------------------------------------------------------------- Fin2Category

std::span<const CellId> Fin2Category::hom2(CellId f, CellId g) const {
  auto it = hom2_.find({f, g});
  return it == hom2_.end() ? std::span<const CellId>(kEmpty) : std::span<const CellId>(it->second);
}

std::optional<CellId> Fin2Category::inverse2(CellId s) const {
  const TwoCell& c = cells2_[s];
  for (CellId t : hom2(c.tgt, c.src)) {
    if (vcomp(t, s) == id2_[c.src] && vcomp(s, t) == id2_[c.tgt]) return t;
  }
  return std::nullopt;
}

std::optional<CellId> Fin2Category::find2(const std::string& name) const {
  auto it = by_name2_.find(name);
  if (it == by_name2_.end()) return std::nullopt;
  return it->second;
}

void Fin2Category::index() {
  hom2_.clear();
  vout_.assign(num_1cells(), {});
  from0_.assign(num_objects(), {});
  by_name2_.clear();
  for (CellId s = 0; s < num_2cells(); ++s) {
    const TwoCell& c = cells2_[s];
    if (c.src < 0 || c.src >= num_1cells() || c.tgt < 0 || c.tgt >= num_1cells()) {
      throw Error(ErrorKind::MalformedSpec, "2-cell " + c.name + " has a boundary out of range");
    }
    hom2_[{c.src, c.tgt}].push_back(s);
    vout_[c.src].push_back(s);
    from0_[cell1(c.src).src].push_back(s);
    if (!by_name2_.emplace(c.name, s).second) {
      throw Error(ErrorKind::MalformedSpec, "duplicate 2-cell name " + c.name);
    }
  }
}

bool Fin2Category::same_tables(const Fin2Category& other) const {
  if (!(underlying() == other.underlying())) return false;
  if (id2_ != other.id2_ || cells2_.size() != other.cells2_.size()) return false;
  for (std::size_t i = 0; i < cells2_.size(); ++i) {
    if (cells2_[i].src != other.cells2_[i].src || cells2_[i].tgt != other.cells2_[i].tgt) return false;
  }
  return vcomp_ == other.vcomp_ && hcomp_ == other.hcomp_;
}

void Fin2Category::validate(bool parallel) const {
  underlying_->validate(parallel);
  if (static_cast<int>(id2_.size()) != num_1cells()) {
    throw Error(ErrorKind::MalformedSpec, "missing identity 2-cells");
  }
  for (CellId f = 0; f < num_1cells(); ++f) {
    CellId i = id2_[f];
    if (i < 0 || i >= num_2cells() || cells2_[i].src != f || cells2_[i].tgt != f) {
      violation("identity 2-cell", cat("1-cell ", cell1(f).name));
    }
  }
  const auto n2 = static_cast<std::ptrdiff_t>(cells2_.size());
  auto check = [&](const char* axiom, auto body) {
    if (auto w = detail::first_failure(n2, body, parallel)) violation(axiom, *w);
  };
  auto nm = [&](CellId s) -> const std::string& { return cells2_[s].name; };

  check("2-cell boundary", [&](std::ptrdiff_t s) -> std::optional<std::string> {
    const Arrow& a = cell1(cells2_[s].src);
    const Arrow& b = cell1(cells2_[s].tgt);
    if (a.src != b.src || a.tgt != b.tgt) return nm(s);
    return std::nullopt;
  });

  std::size_t vpairs = 0;
  std::size_t hpairs = 0;
  for (CellId s = 0; s < num_2cells(); ++s) {
    vpairs += vout_[cells2_[s].tgt].size();
    hpairs += from0_[tgt0(s)].size();
  }
  if (vpairs != vcomp_.size()) {
    violation("vertical composition defined only on composable pairs",
              cat(vcomp_.size(), " entries for ", vpairs, " pairs"));
  }
  if (hpairs != hcomp_.size()) {
    violation("horizontal composition defined only on composable pairs",
              cat(hcomp_.size(), " entries for ", hpairs, " pairs"));
  }

  check("vertical composition", [&](std::ptrdiff_t a) -> std::optional<std::string> {
    for (CellId b : vout_[cells2_[a].tgt]) {
      CellId ba = vcomp(b, a);
      if (ba < 0 || ba >= num_2cells() || cells2_[ba].src != cells2_[a].src ||
          cells2_[ba].tgt != cells2_[b].tgt) {
        return cat(nm(b), " . ", nm(a));
      }
    }
    return std::nullopt;
  });
  check("vertical unit law", [&](std::ptrdiff_t a) -> std::optional<std::string> {
    CellId s = static_cast<CellId>(a);
    if (vcomp(s, id2_[cells2_[s].src]) != s || vcomp(id2_[cells2_[s].tgt], s) != s) return nm(s);
    return std::nullopt;
  });
  check("vertical associativity", [&](std::ptrdiff_t a) -> std::optional<std::string> {
    for (CellId b : vout_[cells2_[a].tgt]) {
      CellId ba = vcomp(b, a);
      for (CellId c : vout_[cells2_[b].tgt]) {
        if (vcomp(c, ba) != vcomp(vcomp(c, b), a)) return cat(nm(c), ", ", nm(b), ", ", nm(a));
      }
    }
    return std::nullopt;
  });
  check("horizontal composition", [&](std::ptrdiff_t s) -> std::optional<std::string> {
    const TwoCell& cs = cells2_[s];
    for (CellId t : from0_[tgt0(s)]) {
      const TwoCell& ct = cells2_[t];
      CellId ts = hcomp(t, s);
      if (ts < 0 || ts >= num_2cells() || cells2_[ts].src != comp1(ct.src, cs.src) ||
          cells2_[ts].tgt != comp1(ct.tgt, cs.tgt)) {
        return cat(nm(t), " * ", nm(s));
      }
    }
    return std::nullopt;
  });
  {
    const auto n1 = static_cast<std::ptrdiff_t>(num_1cells());
    auto w = detail::first_failure(
        n1,
        [&](std::ptrdiff_t f) -> std::optional<std::string> {
          for (CellId g : underlying_->out(cell1(f).tgt)) {
            if (hcomp(id2_[g], id2_[f]) != id2_[comp1(g, static_cast<CellId>(f))]) {
              return cat(cell1(g).name, ", ", cell1(f).name);
            }
          }
          return std::nullopt;
        },
        parallel);
    if (w) violation("horizontal composition of identities", *w);
  }
  check("horizontal unit law", [&](std::ptrdiff_t a) -> std::optional<std::string> {
    CellId s = static_cast<CellId>(a);
    if (hcomp(id2_[id1(tgt0(s))], s) != s || hcomp(s, id2_[id1(src0(s))]) != s) return nm(s);
    return std::nullopt;
  });
  check("horizontal associativity", [&](std::ptrdiff_t a) -> std::optional<std::string> {
    CellId s = static_cast<CellId>(a);
    for (CellId t : from0_[tgt0(s)]) {
      CellId ts = hcomp(t, s);
      for (CellId u : from0_[tgt0(t)]) {
        if (hcomp(u, ts) != hcomp(hcomp(u, t), s)) return cat(nm(u), ", ", nm(t), ", ", nm(s));
      }
    }
    return std::nullopt;
  });
  check("interchange", [&](std::ptrdiff_t a) -> std::optional<std::string> {
    CellId s = static_cast<CellId>(a);
    for (CellId s2 : vout_[cells2_[s].tgt]) {
      CellId vs = vcomp(s2, s);
      for (CellId t : from0_[tgt0(s)]) {
        CellId ts = hcomp(t, s);
        for (CellId t2 : vout_[cells2_[t].tgt]) {
          if (hcomp(vcomp(t2, t), vs) != vcomp(hcomp(t2, s2), ts)) {
            return cat("(", nm(t2), " . ", nm(t), ") * (", nm(s2), " . ", nm(s), ")");
          }
        }
      }
    }
    return std::nullopt;
  });
}

void validate_serial(const Fin2Category& c) { c.validate(false); }

CellId Fin2Category::Builder::add_identity1(ObjId x, std::string name) {
  CellId f = under_.add_identity(x, std::move(name));
  add_identity2(f);
  return f;
}

CellId Fin2Category::Builder::add_1cell(std::string name, ObjId src, ObjId tgt) {
  return under_.add_arrow(std::move(name), src, tgt);
}

CellId Fin2Category::Builder::add_identity2(CellId f, std::string name) {
  if (name.empty()) name = "1_{" + std::to_string(f) + "}";
  cells2_.push_back({std::move(name), f, f});
  CellId s = num_2cells() - 1;
  if (static_cast<int>(id2_.size()) <= f) id2_.resize(f + 1, kNone);
  id2_[f] = s;
  return s;
}

CellId Fin2Category::Builder::add_2cell(std::string name, CellId src, CellId tgt) {
  cells2_.push_back({std::move(name), src, tgt});
  return num_2cells() - 1;
}

void Fin2Category::Builder::fill_unit_laws() {
  under_.fill_unit_laws();
  for (CellId s = 0; s < num_2cells(); ++s) {
    const TwoCell& c = cells2_[s];
    CellId is = id2_of(c.src);
    CellId it = id2_of(c.tgt);
    if (is != kNone) vcomp_.set(s, is, s);
    if (it != kNone) vcomp_.set(it, s, s);
    const Arrow& a = cell1(c.src);
    CellId ix = under_.identity_of(a.src);
    CellId iy = under_.identity_of(a.tgt);
    if (ix != kNone && id2_of(ix) != kNone) hcomp_.set(s, id2_of(ix), s);
    if (iy != kNone && id2_of(iy) != kNone) hcomp_.set(id2_of(iy), s, s);
  }
}

Fin2CategoryPtr Fin2Category::Builder::build(bool validate) {
  auto under = under_.build(false);
  auto c = std::make_shared<Fin2Category>();
  c->name_ = name_;
  c->underlying_ = under;
  c->cells2_ = std::move(cells2_);
  c->id2_ = std::move(id2_);
  c->id2_.resize(under->num_arrows(), kNone);
  c->vcomp_ = std::move(vcomp_);
  c->hcomp_ = std::move(hcomp_);
  c->index();
  if (validate) c->validate();
  cells2_.clear();
  id2_.clear();
  vcomp_ = PairTable{};
  hcomp_ = PairTable{};
  return c;
}

// ------------------------------------------------------------------ builders

Fin2CategoryPtr locally_discrete(const FinCategoryPtr& k, std::string name) {
  Fin2Category::Builder b(std::move(name));
  for (ObjId x = 0; x < k->num_objects(); ++x) b.add_object(k->object_name(x));
  for (CellId f = 0; f < k->num_arrows(); ++f) {
    b.add_1cell(k->arrow(f).name, k->src(f), k->tgt(f));
    b.add_identity2(f, "1_" + k->arrow(f).name);
  }
  for (ObjId x = 0; x < k->num_objects(); ++x) b.set_identity1(x, k->identity(x));
  k->comp_table().for_each([&](int g, int f, int gf) {
    b.set_comp1(g, f, gf);
    b.set_hcomp(g, f, gf);  // identity 2-cells share the 1-cell numbering
  });
  for (CellId f = 0; f < k->num_arrows(); ++f) b.set_vcomp(f, f, f);
  return b.build();
}

Fin2CategoryPtr standard_cell(int i) {
  Fin2Category::Builder b("S" + std::to_string(i));
  if (i == 0) {
    ObjId x = b.add_object("*");
    b.add_identity1(x);
    b.fill_unit_laws();
    return b.build();
  }
  ObjId x = b.add_object("0");
  ObjId y = b.add_object("1");
  b.add_identity1(x);
  b.add_identity1(y);
  if (i == 1) {
    CellId u = b.add_1cell("u", x, y);
    b.add_identity2(u, "1_u");
  } else if (i == 2) {
    CellId f = b.add_1cell("f", x, y);
    CellId g = b.add_1cell("f'", x, y);
    b.add_identity2(f, "1_f");
    b.add_identity2(g, "1_f'");
    b.add_2cell("alpha", f, g);
  } else {
    throw Error(ErrorKind::MalformedSpec, "standard_cell index must be 0, 1 or 2");
  }
  b.fill_unit_laws();
  return b.build();
}

Fin2CategoryPtr discrete(const Fin2Category& c) {
  Fin2Category::Builder b("ob(" + c.name() + ")");
  for (ObjId x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
  for (ObjId x = 0; x < c.num_objects(); ++x) b.add_identity1(x, c.cell1(c.id1(x)).name);
  b.fill_unit_laws();
  return b.build();
}

bool is_locally_contractible(const Fin2Category& c) {
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      for (CellId f : c.hom1(x, y)) {
        for (CellId g : c.hom1(x, y)) {
          if (c.hom2(f, g).size() != 1) return false;
        }
      }
    }
  }
  return true;
}

bool is_locally_discrete(const Fin2Category& c) {
  for (CellId s = 0; s < c.num_2cells(); ++s) {
    if (!c.is_identity2(s)) return false;
  }
  return true;
}

bool same_category(const Fin2Category& a, const Fin2Category& b) {
  return &a == &b || a.same_tables(b);
}

// ------------------------------------------------------------------- functors

void Functor::validate() const {
  const FinCategory& a = *dom;
  const FinCategory& b = *cod;
  if (static_cast<int>(obj.size()) != a.num_objects() || static_cast<int>(arr.size()) != a.num_arrows()) {
    violation("functor shape", "map sizes do not match the domain");
  }
  for (ObjId x : obj) {
    if (x < 0 || x >= b.num_objects()) violation("functor", "object image out of range");
  }
  for (CellId f = 0; f < a.num_arrows(); ++f) {
    CellId g = arr[f];
    if (g < 0 || g >= b.num_arrows() || b.src(g) != obj[a.src(f)] || b.tgt(g) != obj[a.tgt(f)]) {
      violation("functor preserves boundaries", a.arrow(f).name);
    }
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (arr[a.identity(x)] != b.identity(obj[x])) violation("functor preserves identities", a.object_name(x));
  }
  std::optional<std::string> bad;
  a.comp_table().for_each([&](int g, int f, int gf) {
    if (!bad && arr[gf] != b.compose(arr[g], arr[f])) bad = a.arrow(g).name + " o " + a.arrow(f).name;
  });
  if (bad) violation("functor preserves composition", *bad);
}

Functor identity_functor(const FinCategoryPtr& c) {
  Functor f{c, c, {}, {}};
  for (ObjId x = 0; x < c->num_objects(); ++x) f.obj.push_back(x);
  for (CellId a = 0; a < c->num_arrows(); ++a) f.arr.push_back(a);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h{f.dom, g.cod, {}, {}};
  for (ObjId x : f.obj) h.obj.push_back(g.obj[x]);
  for (CellId a : f.arr) h.arr.push_back(g.arr[a]);
  return h;
}

void TwoFunctor::validate() const {
  const Fin2Category& a = *dom;
  const Fin2Category& b = *cod;
  if (static_cast<int>(obj.size()) != a.num_objects() || static_cast<int>(c1.size()) != a.num_1cells() ||
      static_cast<int>(c2.size()) != a.num_2cells()) {
    violation("2-functor shape", "map sizes do not match the domain");
  }
  Functor u{a.underlying_ptr(), b.underlying_ptr(), obj, c1};
  u.validate();
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    CellId t = c2[s];
    if (t < 0 || t >= b.num_2cells() || b.cell2(t).src != c1[a.cell2(s).src] ||
        b.cell2(t).tgt != c1[a.cell2(s).tgt]) {
      violation("2-functor preserves 2-cell boundaries", a.cell2(s).name);
    }
  }
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    if (c2[a.id2(f)] != b.id2(c1[f])) violation("2-functor preserves identity 2-cells", a.cell1(f).name);
  }
  std::optional<std::string> bad;
  a.vcomp_table().for_each([&](int t, int s, int ts) {
    if (!bad && c2[ts] != b.vcomp(c2[t], c2[s])) bad = a.cell2(t).name + " . " + a.cell2(s).name;
  });
  if (bad) violation("2-functor preserves vertical composition", *bad);
  a.hcomp_table().for_each([&](int t, int s, int ts) {
    if (!bad && c2[ts] != b.hcomp(c2[t], c2[s])) bad = a.cell2(t).name + " * " + a.cell2(s).name;
  });
  if (bad) violation("2-functor preserves horizontal composition", *bad);
}

bool TwoFunctor::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

Functor TwoFunctor::underlying() const { return Functor{dom->underlying_ptr(), cod->underlying_ptr(), obj, c1}; }

TwoFunctor identity_2functor(const Fin2CategoryPtr& c) {
  TwoFunctor f{c, c, {}, {}, {}};
  for (ObjId x = 0; x < c->num_objects(); ++x) f.obj.push_back(x);
  for (CellId a = 0; a < c->num_1cells(); ++a) f.c1.push_back(a);
  for (CellId a = 0; a < c->num_2cells(); ++a) f.c2.push_back(a);
  return f;
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  TwoFunctor h{f.dom, g.cod, {}, {}, {}};
  for (ObjId x : f.obj) h.obj.push_back(g.obj[x]);
  for (CellId a : f.c1) h.c1.push_back(g.c1[a]);
  for (CellId a : f.c2) h.c2.push_back(g.c2[a]);
  return h;
}

TwoFunctor object_inclusion(const Fin2CategoryPtr& c) {
  auto d = discrete(*c);
  TwoFunctor f{d, c, {}, {}, {}};
  for (ObjId x = 0; x < c->num_objects(); ++x) {
    f.obj.push_back(x);
    f.c1.push_back(c->id1(x));
    f.c2.push_back(c->id2(c->id1(x)));
  }
  return f;
}

// ------------------------------------------------------------ pseudofunctors

void PseudoFunctor::validate() const {
  const Fin2Category& a = *dom;
  const Fin2Category& b = *cod;
  if (static_cast<int>(obj.size()) != a.num_objects() || static_cast<int>(c1.size()) != a.num_1cells() ||
      static_cast<int>(c2.size()) != a.num_2cells() || static_cast<int>(unit.size()) != a.num_objects()) {
    violation("pseudofunctor shape", "map sizes do not match the domain");
  }
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    CellId g = c1[f];
    if (g < 0 || g >= b.num_1cells() || b.cell1(g).src != obj[a.cell1(f).src] ||
        b.cell1(g).tgt != obj[a.cell1(f).tgt]) {
      violation("pseudofunctor preserves 1-cell boundaries", a.cell1(f).name);
    }
  }
  for (CellId s = 0; s < a.num_2cells(); ++s) {
    CellId t = c2[s];
    if (t < 0 || t >= b.num_2cells() || b.cell2(t).src != c1[a.cell2(s).src] ||
        b.cell2(t).tgt != c1[a.cell2(s).tgt]) {
      violation("pseudofunctor preserves 2-cell boundaries", a.cell2(s).name);
    }
  }
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    if (c2[a.id2(f)] != b.id2(c1[f])) violation("pseudofunctor preserves identity 2-cells", a.cell1(f).name);
  }
  std::optional<std::string> bad;
  a.vcomp_table().for_each([&](int t, int s, int ts) {
    if (!bad && c2[ts] != b.vcomp(c2[t], c2[s])) bad = a.cell2(t).name + " . " + a.cell2(s).name;
  });
  if (bad) violation("pseudofunctor preserves vertical composition", *bad);
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    CellId u = unit[x];
    if (u < 0 || u >= b.num_2cells() || b.cell2(u).src != c1[a.id1(x)] || b.cell2(u).tgt != b.id1(obj[x]) ||
        !b.is_invertible2(u)) {
      violation("unit comparison", a.object_name(x));
    }
  }
  a.underlying().comp_table().for_each([&](int g, int f, int gf) {
    if (bad) return;
    CellId c = comp.get(g, f);
    if (c < 0 || c >= b.num_2cells() || b.cell2(c).src != c1[gf] || b.cell2(c).tgt != b.comp1(c1[g], c1[f]) ||
        !b.is_invertible2(c)) {
      bad = a.cell1(g).name + " o " + a.cell1(f).name;
    }
  });
  if (bad) violation("composition comparison", *bad);
  if (comp.size() != a.underlying().comp_table().size()) violation("composition comparison", "extra entries");
  // naturality in both 2-cell arguments
  a.hcomp_table().for_each([&](int t, int s, int ts) {
    if (bad) return;
    const TwoCell& cs = a.cell2(s);
    const TwoCell& ct = a.cell2(t);
    CellId lhs = b.vcomp(comp.get(ct.tgt, cs.tgt), c2[ts]);
    CellId rhs = b.vcomp(b.hcomp(c2[t], c2[s]), comp.get(ct.src, cs.src));
    if (lhs != rhs) bad = ct.name + " * " + cs.name;
  });
  if (bad) violation("comparison naturality", *bad);
  for (CellId f = 0; f < a.num_1cells() && !bad; ++f) {
    ObjId y = a.cell1(f).tgt;
    for (CellId g : a.underlying().out(y)) {
      CellId gf = a.comp1(g, f);
      for (CellId h : a.underlying().out(a.cell1(g).tgt)) {
        CellId hg = a.comp1(h, g);
        CellId lhs = b.vcomp(b.hcomp(comp.get(h, g), b.id2(c1[f])), comp.get(hg, f));
        CellId rhs = b.vcomp(b.hcomp(b.id2(c1[h]), comp.get(g, f)), comp.get(h, gf));
        if (lhs != rhs) {
          bad = a.cell1(h).name + ", " + a.cell1(g).name + ", " + a.cell1(f).name;
          break;
        }
      }
      if (bad) break;
    }
  }
  if (bad) violation("comparison associativity", *bad);
  for (CellId f = 0; f < a.num_1cells(); ++f) {
    ObjId x = a.cell1(f).src;
    ObjId y = a.cell1(f).tgt;
    CellId idf = b.id2(c1[f]);
    CellId left = b.vcomp(b.hcomp(unit[y], idf), comp.get(a.id1(y), f));
    CellId right = b.vcomp(b.hcomp(idf, unit[x]), comp.get(f, a.id1(x)));
    if (left != idf || right != idf) violation("comparison unit coherence", a.cell1(f).name);
  }
}

bool PseudoFunctor::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool PseudoFunctor::is_normal() const {
  for (ObjId x = 0; x < dom->num_objects(); ++x) {
    if (c1[dom->id1(x)] != cod->id1(obj[x]) || !cod->is_identity2(unit[x])) return false;
  }
  return true;
}

PseudoFunctor as_pseudo(const TwoFunctor& f) {
  PseudoFunctor p{f.dom, f.cod, f.obj, f.c1, f.c2, {}, {}};
  for (ObjId x = 0; x < f.dom->num_objects(); ++x) p.unit.push_back(f.cod->id2(f.c1[f.dom->id1(x)]));
  f.dom->underlying().comp_table().for_each(
      [&](int g, int h, int gh) { p.comp.set(g, h, f.cod->id2(f.c1[gh])); });
  return p;
}

PseudoFunctor compose(const PseudoFunctor& g, const PseudoFunctor& f) {
  const Fin2Category& c = *g.cod;
  PseudoFunctor h{f.dom, g.cod, {}, {}, {}, {}, {}};
  for (ObjId x : f.obj) h.obj.push_back(g.obj[x]);
  for (CellId a : f.c1) h.c1.push_back(g.c1[a]);
  for (CellId a : f.c2) h.c2.push_back(g.c2[a]);
  for (ObjId x = 0; x < f.dom->num_objects(); ++x) {
    h.unit.push_back(c.vcomp(g.unit[f.obj[x]], g.c2[f.unit[x]]));
  }
  f.dom->underlying().comp_table().for_each([&](int b, int a, int) {
    h.comp.set(b, a, c.vcomp(g.comp.get(f.c1[b], f.c1[a]), g.c2[f.comp.get(b, a)]));
  });
  return h;
}

}  // namespace grayfac
