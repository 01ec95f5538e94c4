#include "lawvere/karoubi.hpp"

#include <unordered_set>

#include "lawvere/error.hpp"

namespace lawvere {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

FinCat FinCat::validate(std::vector<std::string> objects,
                        std::vector<Mor> morphisms,
                        std::vector<std::size_t> identity,
                        const std::vector<std::array<std::size_t, 3>>& table) {
  {
    std::unordered_set<std::string> seen;
    for (const auto& o : objects) {
      if (!seen.insert(o).second) {
        throw Error("duplicate-name", "duplicate object name: " + o);
      }
    }
    seen.clear();
    for (const auto& m : morphisms) {
      if (!seen.insert(m.name).second) {
        throw Error("duplicate-name", "duplicate morphism name: " + m.name);
      }
      if (m.src >= objects.size() || m.dst >= objects.size()) {
        throw Error("bad-morphism", "endpoint out of range for " + m.name);
      }
    }
  }
  if (identity.size() != objects.size()) {
    throw Error("bad-identity", "one identity per object required");
  }
  for (std::size_t x = 0; x < objects.size(); ++x) {
    std::size_t i = identity[x];
    if (i >= morphisms.size() || morphisms[i].src != x || morphisms[i].dst != x) {
      throw Error("bad-identity", "identity of " + objects[x] + " ill-typed",
                  {{"object", objects[x]}});
    }
  }
  const std::size_t m = morphisms.size();
  std::vector<std::size_t> comp(m * m, kNone);
  for (const auto& row : table) {
    auto [g, f, gf] = row;
    if (g >= m || f >= m || gf >= m) {
      throw Error("bad-compose", "composition entry out of range");
    }
    if (morphisms[f].dst != morphisms[g].src) {
      throw Error("bad-compose",
                  "entry for non-composable pair (" + morphisms[g].name + ", " +
                      morphisms[f].name + ")");
    }
    comp[g * m + f] = gf;
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (morphisms[f].dst != morphisms[g].src) continue;
      std::size_t gf = comp[g * m + f];
      if (gf == kNone) {
        throw Error("composition-gap",
                    "no composite for (" + morphisms[g].name + ", " +
                        morphisms[f].name + ")",
                    {{"g", morphisms[g].name}, {"f", morphisms[f].name}});
      }
      if (morphisms[gf].src != morphisms[f].src ||
          morphisms[gf].dst != morphisms[g].dst) {
        throw Error("ill-typed-composite",
                    morphisms[g].name + " . " + morphisms[f].name + " = " +
                        morphisms[gf].name + " has wrong endpoints");
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    std::size_t lhs = comp[identity[morphisms[f].dst] * m + f];
    std::size_t rhs = comp[f * m + identity[morphisms[f].src]];
    if (lhs != f || rhs != f) {
      throw Error("unit-violation", "unit law fails at " + morphisms[f].name,
                  {{"f", morphisms[f].name}});
    }
  }
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms[g].dst != morphisms[h].src) continue;
      for (std::size_t f = 0; f < m; ++f) {
        if (morphisms[f].dst != morphisms[g].src) continue;
        if (comp[h * m + comp[g * m + f]] != comp[comp[h * m + g] * m + f]) {
          throw Error("assoc-violation",
                      "associativity fails on (" + morphisms[h].name + ", " +
                          morphisms[g].name + ", " + morphisms[f].name + ")",
                      {{"h", morphisms[h].name},
                       {"g", morphisms[g].name},
                       {"f", morphisms[f].name}});
        }
      }
    }
  }
  return FinCat(std::move(objects), std::move(morphisms), std::move(identity),
                std::move(comp));
}

std::optional<std::size_t> FinCat::object_index(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinCat::morphism_index(std::string_view name) const {
  for (std::size_t i = 0; i < mors_.size(); ++i) {
    if (mors_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> FinCat::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < mors_.size(); ++f) {
    if (mors_[f].src == mors_[f].dst && compose(f, f) == f) out.push_back(f);
  }
  return out;
}

bool FinCat::isomorphic_objects(std::size_t x, std::size_t y) const {
  if (x == y) return true;
  for (std::size_t f = 0; f < mors_.size(); ++f) {
    if (mors_[f].src != x || mors_[f].dst != y) continue;
    for (std::size_t g = 0; g < mors_.size(); ++g) {
      if (mors_[g].src != y || mors_[g].dst != x) continue;
      if (compose(g, f) == id_[x] && compose(f, g) == id_[y]) return true;
    }
  }
  return false;
}

const FinCat& idem_cat() {
  static const FinCat c = FinCat::validate(
      {"0"}, {{"id0", 0, 0}, {"e", 0, 0}}, {0},
      {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  return c;
}

const FinCat& split_cat() {
  // morphisms: id0, id1, p : 0 -> 1, q : 1 -> 0, qp : 0 -> 0
  static const FinCat c = FinCat::validate(
      {"0", "1"},
      {{"id0", 0, 0}, {"id1", 1, 1}, {"p", 0, 1}, {"q", 1, 0}, {"qp", 0, 0}},
      {0, 1},
      {
          {0, 0, 0}, {0, 3, 3}, {0, 4, 4},              // id0 . -
          {1, 1, 1}, {1, 2, 2},                         // id1 . -
          {2, 0, 2}, {2, 3, 1}, {2, 4, 2},              // p . q = id1
          {3, 1, 3}, {3, 2, 4},                         // q . p = qp
          {4, 0, 4}, {4, 3, 3}, {4, 4, 4},              // qp . -
      });
  return c;
}

CatFunctor CatFunctor::make(FinCat dom, FinCat cod,
                            std::vector<std::size_t> on_objects,
                            std::vector<std::size_t> on_morphisms) {
  if (on_objects.size() != dom.num_objects() ||
      on_morphisms.size() != dom.num_morphisms()) {
    throw Error("not-functor", "assignment must be total");
  }
  for (std::size_t x : on_objects) {
    if (x >= cod.num_objects()) throw Error("not-functor", "object out of range");
  }
  for (std::size_t f = 0; f < dom.num_morphisms(); ++f) {
    std::size_t ff = on_morphisms[f];
    if (ff >= cod.num_morphisms()) {
      throw Error("not-functor", "morphism out of range");
    }
    if (cod.mor(ff).src != on_objects[dom.mor(f).src] ||
        cod.mor(ff).dst != on_objects[dom.mor(f).dst]) {
      throw Error("not-functor",
                  "image of " + dom.mor(f).name + " has wrong endpoints",
                  {{"morphism", dom.mor(f).name}});
    }
  }
  for (std::size_t x = 0; x < dom.num_objects(); ++x) {
    if (on_morphisms[dom.identity_of(x)] != cod.identity_of(on_objects[x])) {
      throw Error("not-functor", "identity of " + dom.object(x) + " not preserved",
                  {{"object", dom.object(x)}});
    }
  }
  for (std::size_t g = 0; g < dom.num_morphisms(); ++g) {
    for (std::size_t f = 0; f < dom.num_morphisms(); ++f) {
      if (!dom.composable(g, f)) continue;
      if (on_morphisms[dom.compose(g, f)] !=
          cod.compose(on_morphisms[g], on_morphisms[f])) {
        throw Error("not-functor",
                    "composition not preserved on (" + dom.mor(g).name + ", " +
                        dom.mor(f).name + ")",
                    {{"g", dom.mor(g).name}, {"f", dom.mor(f).name}});
      }
    }
  }
  return CatFunctor(std::move(dom), std::move(cod), std::move(on_objects),
                    std::move(on_morphisms));
}

CatFunctor CatFunctor::identity(const FinCat& c) {
  std::vector<std::size_t> obj(c.num_objects());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = i;
  std::vector<std::size_t> mor(c.num_morphisms());
  for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = i;
  return CatFunctor(c, c, std::move(obj), std::move(mor));
}

CatFunctor CatFunctor::constant(const FinCat& dom, const FinCat& cod,
                                std::size_t target) {
  std::vector<std::size_t> obj(dom.num_objects(), target);
  std::vector<std::size_t> mor(dom.num_morphisms(), cod.identity_of(target));
  return CatFunctor::make(dom, cod, std::move(obj), std::move(mor));
}

CatFunctor compose(const CatFunctor& g, const CatFunctor& f) {
  if (!(f.cod() == g.dom())) {
    throw Error("domain-mismatch", "compose requires f.cod == g.dom");
  }
  std::vector<std::size_t> obj(f.dom().num_objects());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = g.on_object(f.on_object(i));
  std::vector<std::size_t> mor(f.dom().num_morphisms());
  for (std::size_t i = 0; i < mor.size(); ++i) {
    mor[i] = g.on_morphism(f.on_morphism(i));
  }
  return CatFunctor::make(f.dom(), g.cod(), std::move(obj), std::move(mor));
}

CatFunctor sigma_functor() {
  // 0 -> 0, id0 -> id0, e -> qp
  return CatFunctor::make(idem_cat(), split_cat(), {0}, {0, 4});
}

CatFunctor idempotent_as_functor(const FinCat& c, std::size_t e) {
  if (e >= c.num_morphisms() || c.mor(e).src != c.mor(e).dst ||
      c.compose(e, e) != e) {
    throw Error("not-idempotent", "morphism is not an idempotent");
  }
  std::size_t x = c.mor(e).src;
  return CatFunctor::make(idem_cat(), c, {x}, {c.identity_of(x), e});
}

std::optional<Splitting> split_idempotent(const FinCat& c, std::size_t e) {
  if (e >= c.num_morphisms() || c.mor(e).src != c.mor(e).dst ||
      c.compose(e, e) != e) {
    throw Error("not-idempotent", "morphism is not an idempotent");
  }
  const std::size_t x = c.mor(e).src;
  for (std::size_t r = 0; r < c.num_objects(); ++r) {
    for (std::size_t p = 0; p < c.num_morphisms(); ++p) {
      if (c.mor(p).src != x || c.mor(p).dst != r) continue;
      for (std::size_t q = 0; q < c.num_morphisms(); ++q) {
        if (c.mor(q).src != r || c.mor(q).dst != x) continue;
        if (c.compose(q, p) == e && c.compose(p, q) == c.identity_of(r)) {
          return Splitting{r, p, q};
        }
      }
    }
  }
  return std::nullopt;
}

Envelope envelope(const FinCat& c) {
  const std::vector<std::size_t> idems = c.idempotents();
  std::vector<std::string> objects;
  objects.reserve(idems.size());
  for (std::size_t e : idems) {
    objects.push_back("(" + c.object(c.mor(e).src) + "|" + c.mor(e).name + ")");
  }

  struct EnvMor {
    std::size_t src, dst;  // envelope object indices
    std::size_t under;     // base morphism
  };
  std::vector<EnvMor> emors;
  std::vector<FinCat::Mor> mors;
  // morphism lookup: (src, dst, under) -> envelope morphism index
  auto find = [&](std::size_t s, std::size_t d, std::size_t u) -> std::size_t {
    for (std::size_t i = 0; i < emors.size(); ++i) {
      if (emors[i].src == s && emors[i].dst == d && emors[i].under == u) return i;
    }
    return kNone;
  };
  for (std::size_t s = 0; s < idems.size(); ++s) {
    for (std::size_t d = 0; d < idems.size(); ++d) {
      const std::size_t es = idems[s];
      const std::size_t ed = idems[d];
      for (std::size_t u = 0; u < c.num_morphisms(); ++u) {
        if (c.mor(u).src != c.mor(es).src || c.mor(u).dst != c.mor(ed).src) {
          continue;
        }
        if (c.compose(ed, c.compose(u, es)) != u) continue;
        emors.push_back({s, d, u});
        mors.push_back({c.mor(u).name + "[" + std::to_string(s) + ">" +
                            std::to_string(d) + "]",
                        s, d});
      }
    }
  }
  std::vector<std::size_t> identity(idems.size());
  for (std::size_t k = 0; k < idems.size(); ++k) {
    identity[k] = find(k, k, idems[k]);
  }
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t g = 0; g < emors.size(); ++g) {
    for (std::size_t f = 0; f < emors.size(); ++f) {
      if (emors[f].dst != emors[g].src) continue;
      std::size_t u = c.compose(emors[g].under, emors[f].under);
      table.push_back({g, f, find(emors[f].src, emors[g].dst, u)});
    }
  }
  FinCat env = FinCat::validate(std::move(objects), std::move(mors),
                                std::move(identity), table);

  std::vector<std::size_t> incl_obj(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t k = 0; k < idems.size(); ++k) {
      if (idems[k] == c.identity_of(x)) incl_obj[x] = k;
    }
  }
  std::vector<std::size_t> incl_mor(c.num_morphisms());
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    incl_mor[f] = find(incl_obj[c.mor(f).src], incl_obj[c.mor(f).dst], f);
  }
  CatFunctor incl = CatFunctor::make(c, env, std::move(incl_obj), std::move(incl_mor));
  return Envelope{std::move(env), std::move(incl), idems};
}

CatFunctor envelope_functor(const CatFunctor& f) {
  Envelope ed = envelope(f.dom());
  Envelope ec = envelope(f.cod());
  std::vector<std::size_t> obj(ed.cat.num_objects());
  for (std::size_t k = 0; k < obj.size(); ++k) {
    const std::size_t image = f.on_morphism(ed.object_idempotent[k]);
    obj[k] = kNone;
    for (std::size_t l = 0; l < ec.object_idempotent.size(); ++l) {
      if (ec.object_idempotent[l] == image) obj[k] = l;
    }
  }
  std::vector<std::size_t> mor(ed.cat.num_morphisms(), kNone);
  // Recover each envelope morphism's base datum by rebuilding the
  // enumeration in the same deterministic order as envelope().
  struct EnvMor {
    std::size_t src, dst, under;
  };
  auto list_emors = [](const FinCat& base, const std::vector<std::size_t>& idems) {
    std::vector<EnvMor> out;
    for (std::size_t s = 0; s < idems.size(); ++s) {
      for (std::size_t d = 0; d < idems.size(); ++d) {
        for (std::size_t u = 0; u < base.num_morphisms(); ++u) {
          if (base.mor(u).src != base.mor(idems[s]).src ||
              base.mor(u).dst != base.mor(idems[d]).src) {
            continue;
          }
          if (base.compose(idems[d], base.compose(u, idems[s])) != u) continue;
          out.push_back({s, d, u});
        }
      }
    }
    return out;
  };
  std::vector<EnvMor> dm = list_emors(f.dom(), ed.object_idempotent);
  std::vector<EnvMor> cm = list_emors(f.cod(), ec.object_idempotent);
  for (std::size_t m = 0; m < dm.size(); ++m) {
    const std::size_t target_under = f.on_morphism(dm[m].under);
    const std::size_t s = obj[dm[m].src];
    const std::size_t d = obj[dm[m].dst];
    for (std::size_t l = 0; l < cm.size(); ++l) {
      if (cm[l].src == s && cm[l].dst == d && cm[l].under == target_under) {
        mor[m] = l;
      }
    }
  }
  return CatFunctor::make(ed.cat, ec.cat, std::move(obj), std::move(mor));
}

FunctorFlags functor_flags(const CatFunctor& f) {
  const FinCat& dom = f.dom();
  const FinCat& cod = f.cod();
  FunctorFlags out;

  out.injective_on_objects = true;
  for (std::size_t i = 0; i < dom.num_objects() && out.injective_on_objects; ++i) {
    for (std::size_t j = i + 1; j < dom.num_objects(); ++j) {
      if (f.on_object(i) == f.on_object(j)) {
        out.injective_on_objects = false;
        break;
      }
    }
  }

  out.fully_faithful = true;
  for (std::size_t x = 0; x < dom.num_objects() && out.fully_faithful; ++x) {
    for (std::size_t y = 0; y < dom.num_objects() && out.fully_faithful; ++y) {
      // injective on Hom(x,y)
      for (std::size_t a = 0; a < dom.num_morphisms(); ++a) {
        if (dom.mor(a).src != x || dom.mor(a).dst != y) continue;
        for (std::size_t b = 0; b < dom.num_morphisms(); ++b) {
          if (dom.mor(b).src != x || dom.mor(b).dst != y || a == b) continue;
          if (f.on_morphism(a) == f.on_morphism(b)) out.fully_faithful = false;
        }
      }
      // surjective onto Hom(Fx, Fy)
      for (std::size_t g = 0; g < cod.num_morphisms(); ++g) {
        if (cod.mor(g).src != f.on_object(x) || cod.mor(g).dst != f.on_object(y)) {
          continue;
        }
        bool hit = false;
        for (std::size_t a = 0; a < dom.num_morphisms() && !hit; ++a) {
          hit = dom.mor(a).src == x && dom.mor(a).dst == y &&
                f.on_morphism(a) == g;
        }
        if (!hit) out.fully_faithful = false;
      }
    }
  }

  out.surjective_up_to_retracts = true;
  for (std::size_t d = 0; d < cod.num_objects(); ++d) {
    bool retract = false;
    for (std::size_t c = 0; c < dom.num_objects() && !retract; ++c) {
      const std::size_t fc = f.on_object(c);
      for (std::size_t i = 0; i < cod.num_morphisms() && !retract; ++i) {
        if (cod.mor(i).src != d || cod.mor(i).dst != fc) continue;
        for (std::size_t r = 0; r < cod.num_morphisms() && !retract; ++r) {
          if (cod.mor(r).src != fc || cod.mor(r).dst != d) continue;
          retract = cod.compose(r, i) == cod.identity_of(d);
        }
      }
    }
    if (!retract) {
      out.surjective_up_to_retracts = false;
      break;
    }
  }
  return out;
}

bool is_pastoral(const CatFunctor& f) {
  FunctorFlags fl = functor_flags(f);
  return fl.fully_faithful && fl.surjective_up_to_retracts;
}

bool is_equivalence(const CatFunctor& f) {
  if (!functor_flags(f).fully_faithful) return false;
  for (std::size_t d = 0; d < f.cod().num_objects(); ++d) {
    bool found = false;
    for (std::size_t c = 0; c < f.dom().num_objects() && !found; ++c) {
      found = f.cod().isomorphic_objects(f.on_object(c), d);
    }
    if (!found) return false;
  }
  return true;
}

bool is_idfibration(const CatFunctor& f) {
  const FinCat& dom = f.dom();
  const FinCat& cod = f.cod();
  for (std::size_t e : dom.idempotents()) {
    const std::size_t x = dom.mor(e).src;
    const std::size_t fe = f.on_morphism(e);
    const std::size_t fx = f.on_object(x);
    // every splitting of f(e) downstairs must lift to one of e upstairs
    for (std::size_t d = 0; d < cod.num_objects(); ++d) {
      for (std::size_t p = 0; p < cod.num_morphisms(); ++p) {
        if (cod.mor(p).src != fx || cod.mor(p).dst != d) continue;
        for (std::size_t q = 0; q < cod.num_morphisms(); ++q) {
          if (cod.mor(q).src != d || cod.mor(q).dst != fx) continue;
          if (cod.compose(q, p) != fe || cod.compose(p, q) != cod.identity_of(d)) {
            continue;
          }
          bool lifted = false;
          for (std::size_t r = 0; r < dom.num_objects() && !lifted; ++r) {
            if (f.on_object(r) != d) continue;
            for (std::size_t p2 = 0; p2 < dom.num_morphisms() && !lifted; ++p2) {
              if (dom.mor(p2).src != x || dom.mor(p2).dst != r ||
                  f.on_morphism(p2) != p) {
                continue;
              }
              for (std::size_t q2 = 0; q2 < dom.num_morphisms() && !lifted; ++q2) {
                if (dom.mor(q2).src != r || dom.mor(q2).dst != x ||
                    f.on_morphism(q2) != q) {
                  continue;
                }
                lifted = dom.compose(q2, p2) == e &&
                         dom.compose(p2, q2) == dom.identity_of(r);
              }
            }
          }
          if (!lifted) return false;
        }
      }
    }
  }
  return true;
}

KaroubiFactorization factorize_karoubian(const CatFunctor& f) {
  const FinCat& C = f.dom();
  const FinCat& D = f.cod();

  // Objects: (idempotent h on x in C, splitting (d, p, q) of F h in D).
  struct MidObj {
    std::size_t h;  // idempotent in C
    std::size_t d;  // object of D
    std::size_t p;  // F x -> d
    std::size_t q;  // d -> F x, q.p = F h, p.q = id_d
  };
  std::vector<MidObj> objs;
  for (std::size_t h : C.idempotents()) {
    const std::size_t fx = f.on_object(C.mor(h).src);
    const std::size_t fh = f.on_morphism(h);
    for (std::size_t d = 0; d < D.num_objects(); ++d) {
      for (std::size_t p = 0; p < D.num_morphisms(); ++p) {
        if (D.mor(p).src != fx || D.mor(p).dst != d) continue;
        for (std::size_t q = 0; q < D.num_morphisms(); ++q) {
          if (D.mor(q).src != d || D.mor(q).dst != fx) continue;
          if (D.compose(q, p) == fh && D.compose(p, q) == D.identity_of(d)) {
            objs.push_back({h, d, p, q});
          }
        }
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(objs.size());
  for (const auto& o : objs) {
    names.push_back("(" + C.mor(o.h).name + "|" + D.object(o.d) + "|" +
                    D.mor(o.p).name + "|" + D.mor(o.q).name + ")");
  }

  // Morphisms (s -> t): base morphisms u with h_t . u . h_s = u.
  struct MidMor {
    std::size_t src, dst, under;
  };
  std::vector<MidMor> mmors;
  std::vector<FinCat::Mor> mors;
  auto find = [&](std::size_t s, std::size_t t, std::size_t u) -> std::size_t {
    for (std::size_t i = 0; i < mmors.size(); ++i) {
      if (mmors[i].src == s && mmors[i].dst == t && mmors[i].under == u) return i;
    }
    return kNone;
  };
  for (std::size_t s = 0; s < objs.size(); ++s) {
    for (std::size_t t = 0; t < objs.size(); ++t) {
      const std::size_t xs = C.mor(objs[s].h).src;
      const std::size_t xt = C.mor(objs[t].h).src;
      for (std::size_t u = 0; u < C.num_morphisms(); ++u) {
        if (C.mor(u).src != xs || C.mor(u).dst != xt) continue;
        if (C.compose(objs[t].h, C.compose(u, objs[s].h)) != u) continue;
        mmors.push_back({s, t, u});
        mors.push_back({C.mor(u).name + "[" + std::to_string(s) + ">" +
                            std::to_string(t) + "]",
                        s, t});
      }
    }
  }
  std::vector<std::size_t> identity(objs.size());
  for (std::size_t k = 0; k < objs.size(); ++k) {
    identity[k] = find(k, k, objs[k].h);
  }
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t g = 0; g < mmors.size(); ++g) {
    for (std::size_t h2 = 0; h2 < mmors.size(); ++h2) {
      if (mmors[h2].dst != mmors[g].src) continue;
      std::size_t u = C.compose(mmors[g].under, mmors[h2].under);
      table.push_back({g, h2, find(mmors[h2].src, mmors[g].dst, u)});
    }
  }
  FinCat mid = FinCat::validate(std::move(names), std::move(mors),
                                std::move(identity), table);

  // iota: c -> (id_c, trivial splitting of F id_c).
  std::vector<std::size_t> iota_obj(C.num_objects(), kNone);
  for (std::size_t c = 0; c < C.num_objects(); ++c) {
    for (std::size_t k = 0; k < objs.size(); ++k) {
      if (objs[k].h == C.identity_of(c) && objs[k].d == f.on_object(c) &&
          objs[k].p == D.identity_of(f.on_object(c)) &&
          objs[k].q == D.identity_of(f.on_object(c))) {
        iota_obj[c] = k;
      }
    }
  }
  std::vector<std::size_t> iota_mor(C.num_morphisms());
  for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
    iota_mor[g] = find(iota_obj[C.mor(g).src], iota_obj[C.mor(g).dst], g);
  }
  CatFunctor iota = CatFunctor::make(C, mid, std::move(iota_obj), std::move(iota_mor));

  // pi: (h, d, p, q) -> d; u -> p_t . F u . q_s.
  std::vector<std::size_t> pi_obj(objs.size());
  for (std::size_t k = 0; k < objs.size(); ++k) pi_obj[k] = objs[k].d;
  std::vector<std::size_t> pi_mor(mmors.size());
  for (std::size_t m = 0; m < mmors.size(); ++m) {
    const MidObj& s = objs[mmors[m].src];
    const MidObj& t = objs[mmors[m].dst];
    pi_mor[m] = D.compose(t.p, D.compose(f.on_morphism(mmors[m].under), s.q));
  }
  CatFunctor pi = CatFunctor::make(mid, D, std::move(pi_obj), std::move(pi_mor));
  return KaroubiFactorization{std::move(iota), std::move(mid), std::move(pi)};
}

FinCat disjoint_union(const FinCat& a, const FinCat& b) {
  std::vector<std::string> objects;
  for (const auto& o : a.objects()) objects.push_back("l:" + o);
  for (const auto& o : b.objects()) objects.push_back("r:" + o);
  std::vector<FinCat::Mor> mors;
  for (const auto& m : a.morphisms()) mors.push_back({"l:" + m.name, m.src, m.dst});
  for (const auto& m : b.morphisms()) {
    mors.push_back({"r:" + m.name, a.num_objects() + m.src, a.num_objects() + m.dst});
  }
  std::vector<std::size_t> ids;
  for (std::size_t x = 0; x < a.num_objects(); ++x) ids.push_back(a.identity_of(x));
  for (std::size_t x = 0; x < b.num_objects(); ++x) {
    ids.push_back(a.num_morphisms() + b.identity_of(x));
  }
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t g = 0; g < a.num_morphisms(); ++g) {
    for (std::size_t f = 0; f < a.num_morphisms(); ++f) {
      if (a.composable(g, f)) table.push_back({g, f, a.compose(g, f)});
    }
  }
  const std::size_t off = a.num_morphisms();
  for (std::size_t g = 0; g < b.num_morphisms(); ++g) {
    for (std::size_t f = 0; f < b.num_morphisms(); ++f) {
      if (b.composable(g, f)) table.push_back({off + g, off + f, off + b.compose(g, f)});
    }
  }
  return FinCat::validate(std::move(objects), std::move(mors), std::move(ids),
                          table);
}

KaroubiFactorization factorize_karoubian_m4(const CatFunctor& f) {
  const FinCat& C = f.dom();
  const FinCat& D = f.cod();
  const std::size_t n = C.num_objects() + D.num_objects();
  auto image = [&](std::size_t i) {
    return i < C.num_objects() ? f.on_object(i) : i - C.num_objects();
  };
  std::vector<std::string> objects;
  for (const auto& o : C.objects()) objects.push_back("dom:" + o);
  for (const auto& o : D.objects()) objects.push_back("cod:" + o);

  // one morphism x -> y per D-morphism image(x) -> image(y)
  struct MidMor {
    std::size_t src, dst, under;
  };
  std::vector<MidMor> mmors;
  std::vector<FinCat::Mor> mors;
  auto find = [&](std::size_t s, std::size_t t, std::size_t u) -> std::size_t {
    for (std::size_t i = 0; i < mmors.size(); ++i) {
      if (mmors[i].src == s && mmors[i].dst == t && mmors[i].under == u) return i;
    }
    return kNone;
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t u = 0; u < D.num_morphisms(); ++u) {
        if (D.mor(u).src != image(s) || D.mor(u).dst != image(t)) continue;
        mmors.push_back({s, t, u});
        mors.push_back({D.mor(u).name + "[" + std::to_string(s) + ">" +
                            std::to_string(t) + "]",
                        s, t});
      }
    }
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t x = 0; x < n; ++x) {
    ids[x] = find(x, x, D.identity_of(image(x)));
  }
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t g = 0; g < mmors.size(); ++g) {
    for (std::size_t h2 = 0; h2 < mmors.size(); ++h2) {
      if (mmors[h2].dst != mmors[g].src) continue;
      table.push_back({g, h2,
                       find(mmors[h2].src, mmors[g].dst,
                            D.compose(mmors[g].under, mmors[h2].under))});
    }
  }
  FinCat mid = FinCat::validate(std::move(objects), std::move(mors),
                                std::move(ids), table);

  std::vector<std::size_t> iota_obj(C.num_objects());
  for (std::size_t x = 0; x < C.num_objects(); ++x) iota_obj[x] = x;
  std::vector<std::size_t> iota_mor(C.num_morphisms());
  for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
    iota_mor[g] = find(C.mor(g).src, C.mor(g).dst, f.on_morphism(g));
  }
  CatFunctor iota =
      CatFunctor::make(C, mid, std::move(iota_obj), std::move(iota_mor));

  std::vector<std::size_t> pi_obj(n);
  for (std::size_t x = 0; x < n; ++x) pi_obj[x] = image(x);
  std::vector<std::size_t> pi_mor(mmors.size());
  for (std::size_t m = 0; m < mmors.size(); ++m) pi_mor[m] = mmors[m].under;
  CatFunctor pi = CatFunctor::make(mid, D, std::move(pi_obj), std::move(pi_mor));
  return KaroubiFactorization{std::move(iota), std::move(mid), std::move(pi)};
}

CatLiftSquare CatLiftSquare::make(CatFunctor top, CatFunctor left,
                                  CatFunctor right, CatFunctor bottom) {
  if (!(top.dom() == left.dom()) || !(top.cod() == right.dom()) ||
      !(left.cod() == bottom.dom()) || !(right.cod() == bottom.cod())) {
    throw Error("square-mismatch", "square sides do not share endpoints");
  }
  if (!(compose(right, top) == compose(bottom, left))) {
    throw Error("not-commuting", "right . top != bottom . left");
  }
  return CatLiftSquare(std::move(top), std::move(left), std::move(right),
                       std::move(bottom));
}

namespace {

struct CatLiftSearch {
  const CatLiftSquare& sq;
  const FinCat& B;
  const FinCat& C;
  long budget;
  long probes = 0;
  bool exhausted = false;

  std::vector<std::size_t> obj;  // B object -> C object
  std::vector<std::size_t> mor;  // B morphism -> C morphism

  std::vector<std::optional<std::size_t>> forced_obj;
  std::vector<std::optional<std::size_t>> forced_mor;

  bool prepare() {
    forced_obj.assign(B.num_objects(), std::nullopt);
    forced_mor.assign(B.num_morphisms(), std::nullopt);
    const CatFunctor& left = sq.left();
    const CatFunctor& top = sq.top();
    for (std::size_t a = 0; a < left.dom().num_objects(); ++a) {
      std::size_t b = left.on_object(a);
      std::size_t want = top.on_object(a);
      if (forced_obj[b] && *forced_obj[b] != want) return false;
      forced_obj[b] = want;
    }
    for (std::size_t m = 0; m < left.dom().num_morphisms(); ++m) {
      std::size_t b = left.on_morphism(m);
      std::size_t want = top.on_morphism(m);
      if (forced_mor[b] && *forced_mor[b] != want) return false;
      forced_mor[b] = want;
    }
    return true;
  }

  bool objects_step(std::size_t i) {
    if (i == B.num_objects()) {
      mor.assign(B.num_morphisms(), kNone);
      return morphisms_step(0);
    }
    for (std::size_t c = 0; c < C.num_objects(); ++c) {
      if (forced_obj[i] && *forced_obj[i] != c) continue;
      if (sq.right().on_object(c) != sq.bottom().on_object(i)) continue;
      if (++probes > budget) {
        exhausted = true;
        return false;
      }
      obj[i] = c;
      if (objects_step(i + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  }

  bool morphisms_step(std::size_t m) {
    if (m == B.num_morphisms()) return true;
    const auto& bm = B.mor(m);
    for (std::size_t g = 0; g < C.num_morphisms(); ++g) {
      if (forced_mor[m] && *forced_mor[m] != g) continue;
      if (C.mor(g).src != obj[bm.src] || C.mor(g).dst != obj[bm.dst]) continue;
      if (sq.right().on_morphism(g) != sq.bottom().on_morphism(m)) continue;
      if (B.is_identity(m) && g != C.identity_of(obj[bm.src])) continue;
      if (++probes > budget) {
        exhausted = true;
        return false;
      }
      mor[m] = g;
      if (closed_so_far(m) && morphisms_step(m + 1)) return true;
      if (exhausted) return false;
      mor[m] = kNone;
    }
    return false;
  }

  // Composition preservation over pairs whose factors and composite are
  // all assigned; new constraints involve `latest` as a factor or as
  // the composite, the rest were checked at earlier steps.
  bool closed_so_far(std::size_t latest) {
    for (std::size_t g = 0; g <= latest; ++g) {
      for (std::size_t f = 0; f <= latest; ++f) {
        if (!B.composable(g, f)) continue;
        std::size_t c = B.compose(g, f);
        if (c > latest) continue;
        if (g != latest && f != latest && c != latest) continue;
        if (mor[c] != C.compose(mor[g], mor[f])) return false;
      }
    }
    return true;
  }
};

}  // namespace

CatLiftResult solve_cat_lift(const CatLiftSquare& square, long max_probes) {
  CatLiftSearch search{square, square.left().cod(), square.top().cod(),
                       max_probes};
  if (!search.prepare()) return {CatLiftStatus::none, std::nullopt, 0};
  search.obj.assign(search.B.num_objects(), 0);
  if (search.objects_step(0)) {
    return {CatLiftStatus::found,
            CatFunctor::make(search.B, search.C, search.obj, search.mor),
            search.probes};
  }
  return {search.exhausted ? CatLiftStatus::exhausted : CatLiftStatus::none,
          std::nullopt, search.probes};
}

bool KaroubiAxiomReport::all_pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace lawvere

#include "lawvere/gen.hpp"

namespace lawvere {

namespace {

struct KaroubiClasses {
  bool weq, cof, fib;
};

KaroubiClasses karoubi_classify(const CatFunctor& f) {
  return {is_pastoral(f), functor_flags(f).injective_on_objects,
          is_idfibration(f)};
}

struct KaroubiChecker {
  KaroubiAxiomReport& report;

  void fail(std::size_t axiom, const std::string& note,
            std::vector<std::pair<std::string, CatFunctor>> functors) {
    report.results[axiom].pass = false;
    report.counterexamples.push_back(KaroubiCounterexample{
        report.results[axiom].axiom, note, std::move(functors)});
  }

  void run(Rng& rng, int max_objects) {
    const auto n = static_cast<std::size_t>(max_objects);

    // M1: equivalences (in particular isomorphisms) are weak
    // equivalences; 2-out-of-3.
    {
      FinCat a = random_fincat(rng, n);
      ++report.results[0].checked;
      if (!is_pastoral(CatFunctor::identity(a))) {
        fail(0, "identity not pastoral", {{"id", CatFunctor::identity(a)}});
      }
      FinCat b = random_fincat(rng, n);
      FinCat c = random_fincat(rng, n);
      CatFunctor f = random_functor_between(rng, a, b);
      CatFunctor g = random_functor_between(rng, b, c);
      CatFunctor h = compose(g, f);
      const bool wf = is_pastoral(f), wg = is_pastoral(g), wh = is_pastoral(h);
      ++report.results[0].checked;
      if ((wf && wg && !wh) || (wg && wh && !wf) || (wf && wh && !wg)) {
        fail(0, "2-out-of-3 violated", {{"f", f}, {"g", g}, {"g.f", h}});
      }
    }

    // M2: retract closure of all three classes. g is a retract of
    // r . g . q for any section/retraction fattenings.
    {
      FinCat x = random_fincat(rng, n);
      FinCat y = random_fincat(rng, n);
      CatFunctor g = random_functor_between(rng, x, y);
      FinCat bigx = disjoint_union(x, random_fincat(rng, 2));
      FinCat bigy = disjoint_union(y, random_fincat(rng, 2));
      // sections keep names on the left block, retractions collapse the
      // right block onto object 0
      auto section = [](const FinCat& small, const FinCat& big) {
        std::vector<std::size_t> obj(small.num_objects());
        for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = i;
        std::vector<std::size_t> mor(small.num_morphisms());
        for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = i;
        return CatFunctor::make(small, big, std::move(obj), std::move(mor));
      };
      auto retraction = [](const FinCat& big, const FinCat& small) {
        std::vector<std::size_t> obj(big.num_objects(), 0);
        std::vector<std::size_t> mor(big.num_morphisms(),
                                     small.identity_of(0));
        for (std::size_t i = 0; i < small.num_objects(); ++i) obj[i] = i;
        for (std::size_t i = 0; i < small.num_morphisms(); ++i) mor[i] = i;
        return CatFunctor::make(big, small, std::move(obj), std::move(mor));
      };
      CatFunctor big =
          compose(section(y, bigy), compose(g, retraction(bigx, x)));
      KaroubiClasses cb = karoubi_classify(big);
      KaroubiClasses cg = karoubi_classify(g);
      ++report.results[1].checked;
      if ((cb.weq && !cg.weq) || (cb.cof && !cg.cof) || (cb.fib && !cg.fib)) {
        fail(1, "class not closed under retract", {{"f", big}, {"retract", g}});
      }
    }

    // M3: lifts for (trivial cofibration, idfibration) and
    // (cofibration, trivial fibration) squares.
    {
      FinCat a = random_fincat(rng, n);
      FinCat b = random_fincat(rng, n);
      CatFunctor f = random_functor_between(rng, a, b);
      KaroubiFactorization m5 = factorize_karoubian(f);
      CatLiftSquare sq5 = CatLiftSquare::make(m5.iota, m5.iota, m5.pi, m5.pi);
      ++report.results[2].checked;
      if (solve_cat_lift(sq5).status != CatLiftStatus::found) {
        fail(2, "no lift through the m5 factorization square",
             {{"iota", m5.iota}, {"pi", m5.pi}});
      }
      KaroubiFactorization m4 = factorize_karoubian_m4(f);
      CatLiftSquare sq4 = CatLiftSquare::make(m4.iota, m4.iota, m4.pi, m4.pi);
      ++report.results[2].checked;
      if (solve_cat_lift(sq4).status != CatLiftStatus::found) {
        fail(2, "no lift through the m4 factorization square",
             {{"iota", m4.iota}, {"pi", m4.pi}});
      }
      // envelope inclusion against a fully split collapse
      Envelope env_a = envelope(a);
      Envelope env_b = envelope(b);
      FinCat pt = FinCat::validate({"*"}, {{"id", 0, 0}}, {0}, {{0, 0, 0}});
      CatFunctor top = random_functor_between(rng, a, env_b.cat);
      CatLiftSquare sq = CatLiftSquare::make(
          top, env_a.inclusion, CatFunctor::constant(env_b.cat, pt, 0),
          CatFunctor::constant(env_a.cat, pt, 0));
      ++report.results[2].checked;
      if (solve_cat_lift(sq).status != CatLiftStatus::found) {
        fail(2, "no lift through the envelope inclusion",
             {{"top", top}, {"left", env_a.inclusion}});
      }
    }

    // M4 and M5: factorizations land in the required classes.
    {
      FinCat a = random_fincat(rng, n);
      FinCat b = random_fincat(rng, n);
      CatFunctor f = random_functor_between(rng, a, b);
      KaroubiFactorization m4 = factorize_karoubian_m4(f);
      KaroubiClasses ci4 = karoubi_classify(m4.iota);
      KaroubiClasses cp4 = karoubi_classify(m4.pi);
      ++report.results[3].checked;
      if (!(compose(m4.pi, m4.iota) == f) || !ci4.cof ||
          !(cp4.fib && cp4.weq)) {
        fail(3, "m4 factorization not (cofibration, trivial fibration)",
             {{"f", f}, {"iota", m4.iota}, {"pi", m4.pi}});
      }
      KaroubiFactorization m5 = factorize_karoubian(f);
      KaroubiClasses ci5 = karoubi_classify(m5.iota);
      KaroubiClasses cp5 = karoubi_classify(m5.pi);
      ++report.results[4].checked;
      if (!(compose(m5.pi, m5.iota) == f) || !(ci5.cof && ci5.weq) ||
          !cp5.fib) {
        fail(4, "m5 factorization not (trivial cofibration, fibration)",
             {{"f", f}, {"iota", m5.iota}, {"pi", m5.pi}});
      }
    }
  }
};

}  // namespace

KaroubiAxiomReport check_karoubian_axioms(std::uint64_t seed, int cases,
                                          int max_objects) {
  if (cases < 1) throw Error("bad-count", "cases must be >= 1");
  if (max_objects < 1) throw Error("bad-count", "max_objects must be >= 1");
  KaroubiAxiomReport report;
  report.seed = seed;
  report.cases = cases;
  report.max_objects = max_objects;
  report.results = {KaroubiAxiomCheck{"M1"}, KaroubiAxiomCheck{"M2"},
                    KaroubiAxiomCheck{"M3"}, KaroubiAxiomCheck{"M4"},
                    KaroubiAxiomCheck{"M5"}};
  KaroubiChecker checker{report};
  for (int i = 0; i < cases; ++i) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    checker.run(rng, max_objects);
  }
  return report;
}

}  // namespace lawvere
