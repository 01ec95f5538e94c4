#include "lawvere/io.hpp"

#include <json.hpp>

#include "lawvere/error.hpp"

namespace lawvere::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("malformed-json", "input is not valid JSON");
  return j;
}

void require_type(const json& j, const char* type) {
  if (!j.is_object() || !j.contains("type") || j["type"] != type) {
    throw Error("bad-document", std::string("expected a ") + type + " document");
  }
}

ExtNN value_from(const json& j) {
  if (!j.is_string()) throw Error("bad-document", "distances must be strings");
  auto v = ExtNN::parse(j.get<std::string>());
  if (!v) {
    throw Error("bad-document", "bad value: " + j.get<std::string>(),
                {{"value", j.get<std::string>()}});
  }
  return *v;
}

std::vector<std::string> names_from(const json& j) {
  if (!j.is_array()) throw Error("bad-document", "objects must be an array");
  std::vector<std::string> out;
  for (const auto& o : j) {
    if (!o.is_string()) throw Error("bad-document", "object names must be strings");
    out.push_back(o.get<std::string>());
  }
  return out;
}

std::size_t index_of(const Space& s, const std::string& name) {
  auto i = s.index_of(name);
  if (!i) throw Error("unknown-object", "unknown object: " + name, {{"name", name}});
  return *i;
}

Space space_from(const json& j) {
  require_type(j, "rplus-space");
  std::vector<std::string> objects = names_from(j.value("objects", json::array()));
  if (!j.contains("dist") || !j["dist"].is_array()) {
    throw Error("bad-document", "missing dist matrix");
  }
  std::vector<std::vector<ExtNN>> dist;
  for (const auto& row : j["dist"]) {
    if (!row.is_array()) throw Error("bad-document", "dist rows must be arrays");
    std::vector<ExtNN> r;
    for (const auto& v : row) r.push_back(value_from(v));
    dist.push_back(std::move(r));
  }
  return Space::validate(std::move(objects), std::move(dist));
}

json space_to(const Space& s) {
  json j;
  j["type"] = "rplus-space";
  j["objects"] = s.objects();
  json dist = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.size(); ++k) row.push_back(s.dist(i, k).str());
    dist.push_back(std::move(row));
  }
  j["dist"] = std::move(dist);
  return j;
}

SpaceMap map_from(const json& j) {
  require_type(j, "rplus-map");
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("assign")) {
    throw Error("bad-document", "map document needs dom, cod, assign");
  }
  Space dom = space_from(j["dom"]);
  Space cod = space_from(j["cod"]);
  if (!j["assign"].is_object()) {
    throw Error("bad-document", "assign must be an object");
  }
  std::vector<std::size_t> assign(dom.size());
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [key, val] : j["assign"].items()) {
    std::size_t x = index_of(dom, key);
    if (!val.is_string()) throw Error("bad-document", "assign values must be strings");
    assign[x] = index_of(cod, val.get<std::string>());
    seen[x] = true;
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!seen[x]) {
      throw Error("bad-document", "assign missing object: " + dom.object(x));
    }
  }
  return SpaceMap::make(std::move(dom), std::move(cod), std::move(assign));
}

json map_to(const SpaceMap& m) {
  json j;
  j["type"] = "rplus-map";
  j["dom"] = space_to(m.dom());
  j["cod"] = space_to(m.cod());
  json assign = json::object();
  for (std::size_t i = 0; i < m.dom().size(); ++i) {
    assign[m.dom().object(i)] = m.cod().object(m(i));
  }
  j["assign"] = std::move(assign);
  return j;
}

FinCat fincat_from(const json& j) {
  require_type(j, "fincat");
  std::vector<std::string> objects = names_from(j.value("objects", json::array()));
  if (!j.contains("morphisms") || !j["morphisms"].is_array()) {
    throw Error("bad-document", "missing morphisms");
  }
  auto object_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i] == name) return i;
    }
    throw Error("unknown-object", "unknown object: " + name, {{"name", name}});
  };
  std::vector<FinCat::Mor> mors;
  for (const auto& m : j["morphisms"]) {
    if (!m.is_object() || !m.contains("name") || !m.contains("src") ||
        !m.contains("dst")) {
      throw Error("bad-document", "morphisms need name, src, dst");
    }
    mors.push_back({m["name"].get<std::string>(),
                    object_index(m["src"].get<std::string>()),
                    object_index(m["dst"].get<std::string>())});
  }
  auto morphism_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < mors.size(); ++i) {
      if (mors[i].name == name) return i;
    }
    throw Error("bad-document", "unknown morphism: " + name, {{"name", name}});
  };
  if (!j.contains("identity") || !j["identity"].is_object()) {
    throw Error("bad-document", "missing identity table");
  }
  std::vector<std::size_t> identity(objects.size(), mors.size());
  for (const auto& [obj, mor] : j["identity"].items()) {
    identity[object_index(obj)] = morphism_index(mor.get<std::string>());
  }
  for (std::size_t x = 0; x < objects.size(); ++x) {
    if (identity[x] == mors.size()) {
      throw Error("bad-document", "identity missing for object: " + objects[x]);
    }
  }
  std::vector<std::array<std::size_t, 3>> table;
  for (const auto& row : j.value("compose", json::array())) {
    if (!row.is_array() || row.size() != 3) {
      throw Error("bad-document", "compose entries must be [g, f, gf] triples");
    }
    table.push_back({morphism_index(row[0].get<std::string>()),
                     morphism_index(row[1].get<std::string>()),
                     morphism_index(row[2].get<std::string>())});
  }
  return FinCat::validate(std::move(objects), std::move(mors),
                          std::move(identity), table);
}

json fincat_to(const FinCat& c) {
  json j;
  j["type"] = "fincat";
  j["objects"] = c.objects();
  json mors = json::array();
  for (const auto& m : c.morphisms()) {
    mors.push_back({{"name", m.name},
                    {"src", c.object(m.src)},
                    {"dst", c.object(m.dst)}});
  }
  j["morphisms"] = std::move(mors);
  json identity = json::object();
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    identity[c.object(x)] = c.mor(c.identity_of(x)).name;
  }
  j["identity"] = std::move(identity);
  json table = json::array();
  for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      table.push_back(json::array({c.mor(g).name, c.mor(f).name,
                                   c.mor(c.compose(g, f)).name}));
    }
  }
  j["compose"] = std::move(table);
  return j;
}

CatFunctor functor_from(const json& j) {
  require_type(j, "fincat-functor");
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("on_objects") ||
      !j.contains("on_morphisms")) {
    throw Error("bad-document",
                "functor document needs dom, cod, on_objects, on_morphisms");
  }
  FinCat dom = fincat_from(j["dom"]);
  FinCat cod = fincat_from(j["cod"]);
  std::vector<std::size_t> on_obj(dom.num_objects(), cod.num_objects());
  for (const auto& [key, val] : j["on_objects"].items()) {
    auto x = dom.object_index(key);
    auto y = cod.object_index(val.get<std::string>());
    if (!x || !y) throw Error("bad-document", "unknown object in on_objects");
    on_obj[*x] = *y;
  }
  std::vector<std::size_t> on_mor(dom.num_morphisms(), cod.num_morphisms());
  for (const auto& [key, val] : j["on_morphisms"].items()) {
    auto x = dom.morphism_index(key);
    auto y = cod.morphism_index(val.get<std::string>());
    if (!x || !y) throw Error("bad-document", "unknown morphism in on_morphisms");
    on_mor[*x] = *y;
  }
  for (std::size_t x = 0; x < dom.num_objects(); ++x) {
    if (on_obj[x] == cod.num_objects()) {
      throw Error("bad-document", "on_objects missing: " + dom.object(x));
    }
  }
  for (std::size_t m = 0; m < dom.num_morphisms(); ++m) {
    if (on_mor[m] == cod.num_morphisms()) {
      throw Error("bad-document", "on_morphisms missing: " + dom.mor(m).name);
    }
  }
  return CatFunctor::make(std::move(dom), std::move(cod), std::move(on_obj),
                          std::move(on_mor));
}

json functor_to(const CatFunctor& f) {
  json j;
  j["type"] = "fincat-functor";
  j["dom"] = fincat_to(f.dom());
  j["cod"] = fincat_to(f.cod());
  json on_obj = json::object();
  for (std::size_t x = 0; x < f.dom().num_objects(); ++x) {
    on_obj[f.dom().object(x)] = f.cod().object(f.on_object(x));
  }
  j["on_objects"] = std::move(on_obj);
  json on_mor = json::object();
  for (std::size_t m = 0; m < f.dom().num_morphisms(); ++m) {
    on_mor[f.dom().mor(m).name] = f.cod().mor(f.on_morphism(m)).name;
  }
  j["on_morphisms"] = std::move(on_mor);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string doc_type(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) return "";
  return j["type"].get<std::string>();
}

Space parse_space(const std::string& text) { return space_from(parse_json(text)); }

WeightedGraph parse_graph(const std::string& text) {
  json j = parse_json(text);
  require_type(j, "rplus-graph");
  WeightedGraph g;
  g.objects = names_from(j.value("objects", json::array()));
  auto object_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < g.objects.size(); ++i) {
      if (g.objects[i] == name) return i;
    }
    throw Error("unknown-object", "unknown object: " + name, {{"name", name}});
  };
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_object() || !e.contains("src") || !e.contains("dst") ||
        !e.contains("w")) {
      throw Error("bad-document", "edges need src, dst, w");
    }
    g.edges.push_back({object_index(e["src"].get<std::string>()),
                       object_index(e["dst"].get<std::string>()),
                       value_from(e["w"])});
  }
  return g;
}

SpaceMap parse_map(const std::string& text) { return map_from(parse_json(text)); }

Presheaf parse_presheaf(const std::string& text) {
  json j = parse_json(text);
  require_type(j, "rplus-presheaf");
  if (!j.contains("base") || !j.contains("values")) {
    throw Error("bad-document", "presheaf document needs base and values");
  }
  Space base = space_from(j["base"]);
  std::vector<ExtNN> values(base.size());
  std::vector<bool> seen(base.size(), false);
  for (const auto& [key, val] : j["values"].items()) {
    std::size_t x = index_of(base, key);
    values[x] = value_from(val);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < base.size(); ++x) {
    if (!seen[x]) {
      throw Error("bad-document", "values missing object: " + base.object(x));
    }
  }
  return Presheaf::make(std::move(base), std::move(values));
}

EPSeq parse_epseq(const std::string& text) {
  json j = parse_json(text);
  require_type(j, "rplus-epseq");
  if (!j.contains("space")) throw Error("bad-document", "epseq needs a space");
  Space space = space_from(j["space"]);
  auto indices = [&](const json& arr) {
    std::vector<std::size_t> out;
    for (const auto& name : names_from(arr)) out.push_back(index_of(space, name));
    return out;
  };
  std::vector<std::size_t> prefix = indices(j.value("prefix", json::array()));
  std::vector<std::size_t> cycle = indices(j.value("cycle", json::array()));
  return EPSeq::make(std::move(space), std::move(prefix), std::move(cycle));
}

LiftSquare parse_square(const std::string& text) {
  json j = parse_json(text);
  require_type(j, "rplus-square");
  for (const char* side : {"top", "bottom", "left", "right"}) {
    if (!j.contains(side)) {
      throw Error("bad-document", std::string("square needs ") + side);
    }
  }
  return LiftSquare::make(map_from(j["top"]), map_from(j["left"]),
                          map_from(j["right"]), map_from(j["bottom"]));
}

FinCat parse_fincat(const std::string& text) { return fincat_from(parse_json(text)); }

CatFunctor parse_functor(const std::string& text) {
  return functor_from(parse_json(text));
}

CatLiftSquare parse_cat_square(const std::string& text) {
  json j = parse_json(text);
  require_type(j, "fincat-square");
  for (const char* side : {"top", "bottom", "left", "right"}) {
    if (!j.contains(side)) {
      throw Error("bad-document", std::string("square needs ") + side);
    }
  }
  return CatLiftSquare::make(functor_from(j["top"]), functor_from(j["left"]),
                             functor_from(j["right"]), functor_from(j["bottom"]));
}

std::string emit_space(const Space& s) { return dump(space_to(s)); }

std::string emit_graph(const WeightedGraph& g) {
  json j;
  j["type"] = "rplus-graph";
  j["objects"] = g.objects;
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"src", g.objects[e.src]},
                     {"dst", g.objects[e.dst]},
                     {"w", e.weight.str()}});
  }
  j["edges"] = std::move(edges);
  return dump(j);
}

std::string emit_map(const SpaceMap& m) { return dump(map_to(m)); }

std::string emit_presheaf(const Presheaf& p) {
  json j;
  j["type"] = "rplus-presheaf";
  j["base"] = space_to(p.base());
  json values = json::object();
  for (std::size_t i = 0; i < p.base().size(); ++i) {
    values[p.base().object(i)] = p.value(i).str();
  }
  j["values"] = std::move(values);
  return dump(j);
}

std::string emit_epseq(const EPSeq& s) {
  json j;
  j["type"] = "rplus-epseq";
  j["space"] = space_to(s.space());
  json prefix = json::array();
  for (std::size_t i : s.prefix()) prefix.push_back(s.space().object(i));
  j["prefix"] = std::move(prefix);
  json cycle = json::array();
  for (std::size_t i : s.cycle()) cycle.push_back(s.space().object(i));
  j["cycle"] = std::move(cycle);
  return dump(j);
}

std::string emit_square(const LiftSquare& sq) {
  json j;
  j["type"] = "rplus-square";
  j["top"] = map_to(sq.top());
  j["bottom"] = map_to(sq.bottom());
  j["left"] = map_to(sq.left());
  j["right"] = map_to(sq.right());
  return dump(j);
}

std::string emit_fincat(const FinCat& c) { return dump(fincat_to(c)); }

std::string emit_functor(const CatFunctor& f) { return dump(functor_to(f)); }

std::string emit_cat_square(const CatLiftSquare& sq) {
  json j;
  j["type"] = "fincat-square";
  j["top"] = functor_to(sq.top());
  j["bottom"] = functor_to(sq.bottom());
  j["left"] = functor_to(sq.left());
  j["right"] = functor_to(sq.right());
  return dump(j);
}

std::string emit_value(const ExtNN& v) {
  json j;
  j["type"] = "rplus-value";
  j["value"] = v.str();
  return dump(j);
}

std::string emit_classification(ModelId m, const Classification& c) {
  json j;
  j["type"] = "classification";
  j["model"] = model_name(m);
  j["weq"] = c.weq;
  j["cof"] = c.cof;
  j["fib"] = c.fib;
  j["trivial_cof"] = c.trivial_cof;
  j["trivial_fib"] = c.trivial_fib;
  return dump(j);
}

std::string emit_karoubi_classification(bool weq, bool cof, bool fib) {
  json j;
  j["type"] = "classification";
  j["model"] = "karoubian";
  j["weq"] = weq;
  j["cof"] = cof;
  j["fib"] = fib;
  j["trivial_cof"] = cof && weq;
  j["trivial_fib"] = fib && weq;
  return dump(j);
}

std::string emit_dual_verdict(const Presheaf& f, const DualVerdict& v) {
  json j;
  j["type"] = "dual-verdict";
  j["has_dual"] = v.has_dual;
  json witness = json::object();
  for (std::size_t i = 0; i < f.base().size(); ++i) {
    witness[f.base().object(i)] = v.witness[i].str();
  }
  j["witness"] = std::move(witness);
  return dump(j);
}

std::string emit_factorization(const Factorization& f) {
  json j;
  j["type"] = "factorization";
  j["iota"] = map_to(f.iota);
  j["pi"] = map_to(f.pi);
  return dump(j);
}

std::string emit_karoubi_factorization(const KaroubiFactorization& f) {
  json j;
  j["type"] = "factorization";
  j["iota"] = functor_to(f.iota);
  j["pi"] = functor_to(f.pi);
  return dump(j);
}

std::string emit_lift_verdict(const LiftResult& r) {
  json j;
  j["type"] = "lift-verdict";
  switch (r.status) {
    case LiftStatus::found: j["status"] = "found"; break;
    case LiftStatus::none: j["status"] = "none"; break;
    case LiftStatus::exhausted: j["status"] = "exhausted"; break;
  }
  if (r.lift) j["lift"] = map_to(*r.lift);
  return dump(j);
}

std::string emit_cat_lift_verdict(const CatLiftResult& r) {
  json j;
  j["type"] = "lift-verdict";
  switch (r.status) {
    case CatLiftStatus::found: j["status"] = "found"; break;
    case CatLiftStatus::none: j["status"] = "none"; break;
    case CatLiftStatus::exhausted: j["status"] = "exhausted"; break;
  }
  if (r.lift) j["lift"] = functor_to(*r.lift);
  return dump(j);
}

std::string emit_idempotents(const FinCat& c) {
  json j;
  j["type"] = "idempotents";
  json names = json::array();
  for (std::size_t e : c.idempotents()) names.push_back(c.mor(e).name);
  j["idempotents"] = std::move(names);
  return dump(j);
}

std::string emit_report(const AxiomReport& r) {
  json j;
  j["type"] = "axiom-report";
  j["model"] = model_name(r.model);
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["max_objects"] = r.max_objects;
  json results = json::array();
  for (const auto& res : r.results) {
    results.push_back(
        {{"axiom", res.axiom}, {"pass", res.pass}, {"checked", res.checked}});
  }
  j["results"] = std::move(results);
  json ces = json::array();
  for (const auto& ce : r.counterexamples) {
    json maps = json::object();
    for (const auto& [label, m] : ce.maps) maps[label] = map_to(m);
    ces.push_back({{"axiom", ce.axiom}, {"note", ce.note}, {"maps", maps}});
  }
  j["counterexamples"] = std::move(ces);
  return dump(j);
}

std::string emit_karoubi_report(const KaroubiAxiomReport& r) {
  json j;
  j["type"] = "axiom-report";
  j["model"] = "karoubian";
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["max_objects"] = r.max_objects;
  json results = json::array();
  for (const auto& res : r.results) {
    results.push_back(
        {{"axiom", res.axiom}, {"pass", res.pass}, {"checked", res.checked}});
  }
  j["results"] = std::move(results);
  json ces = json::array();
  for (const auto& ce : r.counterexamples) {
    json functors = json::object();
    for (const auto& [label, f] : ce.functors) functors[label] = functor_to(f);
    ces.push_back({{"axiom", ce.axiom}, {"note", ce.note}, {"functors", functors}});
  }
  j["counterexamples"] = std::move(ces);
  return dump(j);
}

std::string emit_diagnostic(const Error& e) {
  json j;
  j["type"] = "diagnostic";
  j["code"] = e.code();
  j["message"] = e.what();
  json witness = json::object();
  for (const auto& [k, v] : e.witness()) witness[k] = v;
  j["witness"] = std::move(witness);
  return dump(j);
}

}  // namespace lawvere::io
