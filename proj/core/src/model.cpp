#include "lawvere/model.hpp"

#include <algorithm>

#include "lawvere/error.hpp"
#include "lawvere/gen.hpp"

namespace lawvere {

const char* model_name(ModelId m) {
  switch (m) {
    case ModelId::metric: return "metric";
    case ModelId::cauchy: return "cauchy";
    case ModelId::cauchy_metric: return "cauchy_metric";
  }
  return "?";
}

std::optional<ModelId> parse_model(std::string_view name) {
  if (name == "metric") return ModelId::metric;
  if (name == "cauchy") return ModelId::cauchy;
  if (name == "cauchy_metric" || name == "cauchy-metric") {
    return ModelId::cauchy_metric;
  }
  return std::nullopt;
}

bool delta_condition(const SpaceMap& f) {
  const Space& dom = f.dom();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      if (dom.isomorphic(i, j) && f(i) == f(j)) return false;
    }
  }
  return true;
}

bool gamma_condition(const SpaceMap& f) {
  const Space& dom = f.dom();
  const Space& cod = f.cod();
  for (std::size_t c = 0; c < dom.size(); ++c) {
    for (std::size_t d = 0; d < cod.size(); ++d) {
      if (!cod.isomorphic(f(c), d)) continue;
      bool found = false;
      for (std::size_t c2 = 0; c2 < dom.size() && !found; ++c2) {
        found = dom.isomorphic(c, c2) && f(c2) == d;
      }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

void require_symmetric_pair(const SpaceMap& f, ModelId m) {
  if (!is_symmetric(f.dom()) || !is_symmetric(f.cod())) {
    throw Error("not-symmetric",
                std::string(model_name(m)) + " model requires symmetric spaces");
  }
}

}  // namespace

Classification classify(const SpaceMap& f, ModelId m) {
  Classification c;
  MapFlags fl = flags(f);
  switch (m) {
    case ModelId::metric:
      c.weq = fl.fully_faithful && fl.essentially_surjective;
      c.cof = true;
      c.fib = delta_condition(f) && gamma_condition(f);
      break;
    case ModelId::cauchy:
      require_symmetric_pair(f, m);
      c.weq = fl.fully_faithful && fl.dense;
      c.cof = fl.injective_on_objects;
      // The Seq-inclusion lifting condition; coincides with the Gamma
      // condition on finite symmetric spaces (rlp_iota_seq_search is the
      // oracle for this collapse).
      c.fib = gamma_condition(f);
      break;
    case ModelId::cauchy_metric:
      require_symmetric_pair(f, m);
      c.weq = fl.fully_faithful && fl.dense;
      c.cof = true;
      c.fib = delta_condition(f) && gamma_condition(f);
      break;
  }
  c.trivial_fib = c.fib && c.weq;
  c.trivial_cof = c.cof && c.weq;
  return c;
}

Space interval_space() {
  std::vector<ExtNN> zero_row(2);
  return Space::validate({"a1", "a2"}, {zero_row, zero_row});
}

Space point_space() { return Space::validate({"pt"}, {{ExtNN()}}); }

SpaceMap delta_map() {
  return SpaceMap::make(interval_space(), point_space(), {0, 0});
}

SpaceMap gamma_map() {
  return SpaceMap::make(point_space(), interval_space(), {0});
}

LiftSquare LiftSquare::make(SpaceMap top, SpaceMap left, SpaceMap right,
                            SpaceMap bottom) {
  if (!(top.dom() == left.dom()) || !(top.cod() == right.dom()) ||
      !(left.cod() == bottom.dom()) || !(right.cod() == bottom.cod())) {
    throw Error("square-mismatch", "square sides do not share endpoints");
  }
  for (std::size_t a = 0; a < top.dom().size(); ++a) {
    if (right(top(a)) != bottom(left(a))) {
      throw Error("not-commuting",
                  "right . top != bottom . left at " + top.dom().object(a),
                  {{"object", top.dom().object(a)}});
    }
  }
  return LiftSquare(std::move(top), std::move(left), std::move(right),
                    std::move(bottom));
}

namespace {

// Backtracking search for a short map src -> dst restricted to
// per-object candidate sets. Probe accounting is shared with the caller.
struct AssignmentSearch {
  const Space& src;
  const Space& dst;
  const std::vector<std::vector<std::size_t>>& candidates;
  long budget;
  long probes = 0;
  bool exhausted = false;
  std::vector<std::size_t> out;

  bool run() {
    out.assign(src.size(), 0);
    return step(0);
  }

  bool step(std::size_t i) {
    if (i == src.size()) return true;
    for (std::size_t c : candidates[i]) {
      if (++probes > budget) {
        exhausted = true;
        return false;
      }
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = !(src.dist(i, j) < dst.dist(c, out[j])) &&
             !(src.dist(j, i) < dst.dist(out[j], c));
      }
      if (!ok) continue;
      out[i] = c;
      if (step(i + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

LiftResult solve_lift(const LiftSquare& square, long max_probes) {
  const Space& B = square.left().cod();
  const Space& C = square.top().cod();

  // Forced values on the image of the left leg; a conflict means the
  // two triangle equations cannot both hold.
  std::vector<std::optional<std::size_t>> forced(B.size());
  for (std::size_t a = 0; a < square.left().dom().size(); ++a) {
    std::size_t b = square.left()(a);
    std::size_t want = square.top()(a);
    if (forced[b] && *forced[b] != want) return {LiftStatus::none, std::nullopt, 0};
    forced[b] = want;
  }

  std::vector<std::vector<std::size_t>> candidates(B.size());
  for (std::size_t b = 0; b < B.size(); ++b) {
    if (forced[b]) {
      if (square.right()(*forced[b]) != square.bottom()(b)) {
        return {LiftStatus::none, std::nullopt, 0};
      }
      candidates[b] = {*forced[b]};
    } else {
      for (std::size_t c = 0; c < C.size(); ++c) {
        if (square.right()(c) == square.bottom()(b)) candidates[b].push_back(c);
      }
      if (candidates[b].empty()) return {LiftStatus::none, std::nullopt, 0};
    }
  }

  AssignmentSearch search{B, C, candidates, max_probes};
  if (search.run()) {
    return {LiftStatus::found, SpaceMap::make(B, C, std::move(search.out)),
            search.probes};
  }
  return {search.exhausted ? LiftStatus::exhausted : LiftStatus::none,
          std::nullopt, search.probes};
}

RlpVerdict rlp_delta_search(const SpaceMap& f) {
  const Space& dom = f.dom();
  for (std::size_t x1 = 0; x1 < dom.size(); ++x1) {
    for (std::size_t x2 = 0; x2 < dom.size(); ++x2) {
      if (x1 == x2) continue;
      if (!dom.isomorphic(x1, x2)) continue;  // top would not be short
      if (f(x1) != f(x2)) continue;           // square would not commute
      LiftSquare sq = LiftSquare::make(
          SpaceMap::make(interval_space(), dom, {x1, x2}), delta_map(), f,
          SpaceMap::make(point_space(), f.cod(), {f(x1)}));
      if (solve_lift(sq).status != LiftStatus::found) {
        return {false, std::move(sq)};
      }
    }
  }
  return {true, std::nullopt};
}

RlpVerdict rlp_gamma_search(const SpaceMap& f) {
  const Space& dom = f.dom();
  const Space& cod = f.cod();
  for (std::size_t c = 0; c < dom.size(); ++c) {
    for (std::size_t d = 0; d < cod.size(); ++d) {
      if (!cod.isomorphic(f(c), d)) continue;  // bottom would not be short
      LiftSquare sq = LiftSquare::make(
          SpaceMap::make(point_space(), dom, {c}), gamma_map(), f,
          SpaceMap::make(interval_space(), cod, {f(c), d}));
      if (solve_lift(sq).status != LiftStatus::found) {
        return {false, std::move(sq)};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

// seq_space(depth) plus a limit point at the exact partial-sum
// distances. A short map out of the infinite sequence space is
// eventually inside one zero-cluster, so pinning the tail to the last
// truncated object materializes the genuine lifting problems; the naive
// 2^(1-k) truncation would also admit squares no infinite square
// restricts to.
SpaceMap seq_tail_inclusion(std::size_t depth) {
  Space seq = seq_space(depth);
  std::vector<std::string> objects = seq.objects();
  objects.push_back(kSeqBarLimitName);
  std::vector<std::vector<ExtNN>> d(depth + 1, std::vector<ExtNN>(depth + 1));
  for (std::size_t i = 0; i < depth; ++i) {
    for (std::size_t j = 0; j < depth; ++j) d[i][j] = seq.dist(i, j);
  }
  for (std::size_t k = 0; k < depth; ++k) {
    d[k][depth] = seq_dist(k, depth - 1);
    d[depth][k] = seq_dist(k, depth - 1);
  }
  Space bar = Space::validate(std::move(objects), std::move(d));
  std::vector<std::size_t> incl(depth);
  for (std::size_t i = 0; i < depth; ++i) incl[i] = i;
  return SpaceMap::make(std::move(seq), std::move(bar), std::move(incl));
}

}  // namespace

RlpVerdict rlp_iota_seq_search(const SpaceMap& f, std::size_t depth) {
  if (depth < 1) throw Error("bad-count", "depth must be >= 1");
  const Space& dom = f.dom();
  const Space& cod = f.cod();
  if (dom.size() == 0) return {true, std::nullopt};
  SpaceMap incl = seq_tail_inclusion(depth);
  const Space& seq = incl.dom();

  // Enumerate every short map seq_space(depth) -> dom.
  std::vector<std::size_t> nu(depth, 0);
  auto enumerate = [&](auto&& self, std::size_t i) -> std::optional<LiftSquare> {
    if (i == depth) {
      std::size_t last = nu[depth - 1];
      for (std::size_t t = 0; t < cod.size(); ++t) {
        if (!cod.isomorphic(f(last), t)) continue;
        std::vector<std::size_t> bottom_assign(depth + 1);
        for (std::size_t k = 0; k < depth; ++k) bottom_assign[k] = f(nu[k]);
        bottom_assign[depth] = t;
        LiftSquare sq = LiftSquare::make(
            SpaceMap::make(seq, dom, nu), incl, f,
            SpaceMap::make(incl.cod(), cod, std::move(bottom_assign)));
        if (solve_lift(sq).status != LiftStatus::found) return sq;
      }
      return std::nullopt;
    }
    for (std::size_t c = 0; c < dom.size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = !(seq.dist(i, j) < dom.dist(c, nu[j])) &&
             !(seq.dist(j, i) < dom.dist(nu[j], c));
      }
      if (!ok) continue;
      nu[i] = c;
      if (auto w = self(self, i + 1)) return w;
    }
    return std::nullopt;
  };
  if (auto witness = enumerate(enumerate, 0)) return {false, std::move(*witness)};
  return {true, std::nullopt};
}

namespace {

Factorization factor_m4_identity_target(const SpaceMap& f) {
  return Factorization{f, f.cod(), SpaceMap::identity(f.cod())};
}

// Middle space on dom + cod with distances pulled back along f; the
// inclusion of dom is injective, the projection is fully faithful and
// strictly surjective.
Factorization factor_m4_coproduct(const SpaceMap& f) {
  const Space& C = f.dom();
  const Space& D = f.cod();
  std::vector<std::string> objects;
  for (const auto& name : C.objects()) objects.push_back("dom:" + name);
  for (const auto& name : D.objects()) objects.push_back("cod:" + name);
  const std::size_t n = C.size() + D.size();
  auto image = [&](std::size_t i) { return i < C.size() ? f(i) : i - C.size(); };
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = D.dist(image(i), image(j));
  }
  // Distinct dom objects with equal images collapse to distance 0, so
  // diagonal zeros and triangles are inherited from D.
  Space mid = Space::validate(std::move(objects), std::move(d));
  std::vector<std::size_t> iota_assign(C.size());
  for (std::size_t i = 0; i < C.size(); ++i) iota_assign[i] = i;
  std::vector<std::size_t> pi_assign(n);
  for (std::size_t i = 0; i < n; ++i) pi_assign[i] = image(i);
  return Factorization{SpaceMap::make(C, mid, std::move(iota_assign)), mid,
                       SpaceMap::make(mid, D, std::move(pi_assign))};
}

// Middle space on pairs (c, d) with d isomorphic to f(c) and distances
// inherited from the first component. In quotient mode pairs are
// identified when the first components are isomorphic and the second
// components are equal; this keeps the projection well-defined while
// collapsing the isomorphic duplicates that would break Delta lifting.
Factorization factor_m5(const SpaceMap& f, bool quotient) {
  const Space& C = f.dom();
  const Space& D = f.cod();
  IsoPartition part = iso_partition(C);

  struct Pair {
    std::size_t c, d;
  };
  std::vector<Pair> reps;
  std::vector<std::vector<std::size_t>> class_of_pair;  // indexed like reps
  // iota target per dom object, filled when (c, f(c)) is placed.
  std::vector<std::size_t> iota_assign(C.size(), SIZE_MAX);

  auto find_class = [&](std::size_t c, std::size_t d) -> std::optional<std::size_t> {
    if (!quotient) return std::nullopt;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (reps[k].d == d && part.block_of[reps[k].c] == part.block_of[c]) {
        return k;
      }
    }
    return std::nullopt;
  };

  for (std::size_t c = 0; c < C.size(); ++c) {
    for (std::size_t d = 0; d < D.size(); ++d) {
      if (!D.isomorphic(f(c), d)) continue;
      std::size_t cls;
      if (auto existing = find_class(c, d)) {
        cls = *existing;
      } else {
        cls = reps.size();
        reps.push_back({c, d});
      }
      if (d == f(c) && iota_assign[c] == SIZE_MAX) iota_assign[c] = cls;
    }
  }

  std::vector<std::string> objects;
  objects.reserve(reps.size());
  for (const auto& p : reps) {
    objects.push_back("(" + C.object(p.c) + ";" + D.object(p.d) + ")");
  }
  std::vector<std::vector<ExtNN>> dist(reps.size(),
                                       std::vector<ExtNN>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      dist[i][j] = C.dist(reps[i].c, reps[j].c);
    }
  }
  Space mid = Space::validate(std::move(objects), std::move(dist));
  std::vector<std::size_t> pi_assign(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) pi_assign[i] = reps[i].d;
  return Factorization{SpaceMap::make(C, mid, std::move(iota_assign)), mid,
                       SpaceMap::make(mid, D, std::move(pi_assign))};
}

}  // namespace

Factorization factorize(const SpaceMap& f, ModelId m, FactorAxiom axiom) {
  switch (m) {
    case ModelId::metric:
      return axiom == FactorAxiom::m4 ? factor_m4_identity_target(f)
                                      : factor_m5(f, /*quotient=*/true);
    case ModelId::cauchy:
      require_symmetric_pair(f, m);
      return axiom == FactorAxiom::m4 ? factor_m4_coproduct(f)
                                      : factor_m5(f, /*quotient=*/false);
    case ModelId::cauchy_metric:
      require_symmetric_pair(f, m);
      return axiom == FactorAxiom::m4 ? factor_m4_identity_target(f)
                                      : factor_m5(f, /*quotient=*/true);
  }
  throw Error("bad-model", "unknown model");
}

bool AxiomReport::all_pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

namespace {

struct Fattening {
  Space big;
  SpaceMap section;     // X -> big
  SpaceMap retraction;  // big -> X, retraction . section = id
};

// Adds zero-distance twins of random objects (keeps every class of map
// intact) or, occasionally, a far component collapsed to a point.
Fattening fatten(Rng& rng, const Space& x) {
  if (rng.below(4) == 0) {
    Space extra = random_space(rng, 2, is_symmetric(x));
    Space big = coproduct(x, extra);
    std::vector<std::size_t> sec(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sec[i] = i;
    std::vector<std::size_t> ret(big.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) ret[i] = i;
    return Fattening{big, SpaceMap::make(x, big, std::move(sec)),
                     SpaceMap::make(big, x, std::move(ret))};
  }
  const std::size_t twins = rng.below(3);
  std::vector<std::size_t> twin_of;
  for (std::size_t t = 0; t < twins; ++t) twin_of.push_back(rng.below(x.size()));
  const std::size_t n = x.size() + twin_of.size();
  auto base = [&](std::size_t i) {
    return i < x.size() ? i : twin_of[i - x.size()];
  };
  std::vector<std::string> objects = x.objects();
  for (std::size_t t = 0; t < twin_of.size(); ++t) {
    objects.push_back("tw" + std::to_string(t) + ":" + x.object(twin_of[t]));
  }
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = x.dist(base(i), base(j));
  }
  Space big = Space::validate(std::move(objects), std::move(d));
  std::vector<std::size_t> sec(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sec[i] = i;
  std::vector<std::size_t> ret(n);
  for (std::size_t i = 0; i < n; ++i) ret[i] = base(i);
  return Fattening{big, SpaceMap::make(x, big, std::move(sec)),
                   SpaceMap::make(big, x, std::move(ret))};
}

// Searches for a top arrow completing left and right into a commuting
// square with the given bottom: top(a) must be a right-preimage of
// bottom(left(a)) and the whole assignment short.
std::optional<SpaceMap> complete_square_top(const SpaceMap& left,
                                            const SpaceMap& right,
                                            const SpaceMap& bottom) {
  const Space& A = left.dom();
  const Space& C = right.dom();
  std::vector<std::vector<std::size_t>> candidates(A.size());
  for (std::size_t a = 0; a < A.size(); ++a) {
    for (std::size_t c = 0; c < C.size(); ++c) {
      if (right(c) == bottom(left(a))) candidates[a].push_back(c);
    }
    if (candidates[a].empty()) return std::nullopt;
  }
  AssignmentSearch search{A, C, candidates, 1'000'000};
  if (!search.run()) return std::nullopt;
  return SpaceMap::make(A, C, std::move(search.out));
}

struct CaseChecker {
  ModelId model;
  AxiomReport& report;
  AxiomCheck& m1;
  AxiomCheck& m2;
  AxiomCheck& m3;
  AxiomCheck& m4;
  AxiomCheck& m5;

  void fail(AxiomCheck& axiom, const std::string& note,
            std::vector<std::pair<std::string, SpaceMap>> maps) {
    axiom.pass = false;
    report.counterexamples.push_back(
        Counterexample{axiom.axiom, note, std::move(maps)});
  }

  void run(Rng& rng, int max_objects) {
    const bool sym = model != ModelId::metric;

    // M1: isomorphisms are weak equivalences.
    {
      Space x = random_space(rng, max_objects, sym);
      std::vector<std::size_t> perm(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) perm[i] = i;
      for (std::size_t i = x.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
      }
      std::vector<std::string> names(x.size());
      std::vector<std::vector<ExtNN>> d(x.size(), std::vector<ExtNN>(x.size()));
      for (std::size_t i = 0; i < x.size(); ++i) {
        names[i] = x.object(perm[i]);
        for (std::size_t j = 0; j < x.size(); ++j) {
          d[i][j] = x.dist(perm[i], perm[j]);
        }
      }
      Space y = Space::validate(std::move(names), std::move(d));
      std::vector<std::size_t> inverse(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) inverse[perm[i]] = i;
      SpaceMap iso = SpaceMap::make(x, y, std::move(inverse));
      ++m1.checked;
      if (!classify(iso, model).weq) {
        fail(m1, "isomorphism not classified as a weak equivalence",
             {{"iso", iso}});
      }
    }

    // M1: 2-out-of-3.
    {
      SpaceMap f = random_map(rng, max_objects, sym);
      SpaceMap g =
          random_map_between(rng, f.cod(), random_space(rng, max_objects, sym));
      SpaceMap h = compose(g, f);
      const bool wf = classify(f, model).weq;
      const bool wg = classify(g, model).weq;
      const bool wh = classify(h, model).weq;
      ++m1.checked;
      if ((wf && wg && !wh) || (wg && wh && !wf) || (wf && wh && !wg)) {
        fail(m1, "2-out-of-3 violated", {{"f", f}, {"g", g}, {"g.f", h}});
      }
    }

    // M2: every class closed under retracts.
    {
      SpaceMap g = random_map(rng, max_objects, sym);
      Fattening fc = fatten(rng, g.dom());
      Fattening fd = fatten(rng, g.cod());
      SpaceMap big = compose(fd.section, compose(g, fc.retraction));
      Classification cb = classify(big, model);
      Classification cg = classify(g, model);
      ++m2.checked;
      if ((cb.weq && !cg.weq) || (cb.cof && !cg.cof) || (cb.fib && !cg.fib)) {
        fail(m2, "class not closed under retract", {{"f", big}, {"retract", g}});
      }
    }

    // M3: lifts exist for (trivial cof, fib) and (cof, trivial fib).
    {
      SpaceMap f = random_map(rng, max_objects, sym);
      for (FactorAxiom axiom : {FactorAxiom::m4, FactorAxiom::m5}) {
        Factorization fac = factorize(f, model, axiom);
        LiftSquare sq = LiftSquare::make(fac.iota, fac.iota, fac.pi, fac.pi);
        ++m3.checked;
        if (solve_lift(sq).status != LiftStatus::found) {
          fail(m3, "no lift for factorization square",
               {{"iota", fac.iota}, {"pi", fac.pi}});
        }
      }
      // Cross-map squares: legs taken from the factorizations of two
      // independent maps are lifting pairs by construction; a bottom
      // arrow is sampled (constant fallback) and a commuting top is
      // searched for.
      SpaceMap g = random_map(rng, max_objects, sym);
      for (FactorAxiom axiom : {FactorAxiom::m4, FactorAxiom::m5}) {
        SpaceMap left = factorize(f, model, axiom).iota;
        SpaceMap right = factorize(g, model, axiom).pi;
        for (int attempt = 0; attempt < 4; ++attempt) {
          std::optional<SpaceMap> bottom;
          try {
            std::vector<std::size_t> assign(left.cod().size());
            for (auto& a : assign) a = rng.below(right.cod().size());
            if (attempt == 3) {
              assign.assign(left.cod().size(), rng.below(right.cod().size()));
            }
            bottom = SpaceMap::make(left.cod(), right.cod(), assign);
          } catch (const Error&) {
            continue;
          }
          auto top = complete_square_top(left, right, *bottom);
          if (!top) continue;
          LiftSquare sq = LiftSquare::make(*top, left, right, *bottom);
          ++m3.checked;
          if (solve_lift(sq).status != LiftStatus::found) {
            fail(m3, "no lift for cross-factorization square",
                 {{"top", *top},
                  {"left", left},
                  {"right", right},
                  {"bottom", *bottom}});
          }
          break;
        }
      }
      // Opportunistic fully random lifting pairs.
      SpaceMap left = random_map(rng, max_objects, sym);
      SpaceMap right = random_map(rng, max_objects, sym);
      Classification cl = classify(left, model);
      Classification cr = classify(right, model);
      if ((cl.trivial_cof && cr.fib) || (cl.cof && cr.trivial_fib)) {
        for (int attempt = 0; attempt < 3; ++attempt) {
          std::optional<SpaceMap> bottom;
          try {
            std::vector<std::size_t> assign(left.cod().size());
            for (auto& a : assign) a = rng.below(right.cod().size());
            bottom = SpaceMap::make(left.cod(), right.cod(), assign);
          } catch (const Error&) {
            continue;
          }
          auto top = complete_square_top(left, right, *bottom);
          if (!top) continue;
          LiftSquare sq = LiftSquare::make(*top, left, right, *bottom);
          ++m3.checked;
          if (solve_lift(sq).status != LiftStatus::found) {
            fail(m3, "no lift for sampled square",
                 {{"top", *top},
                  {"left", left},
                  {"right", right},
                  {"bottom", *bottom}});
          }
          break;
        }
      }
    }

    // M4 and M5: factorizations land in the required classes.
    {
      SpaceMap f = random_map(rng, max_objects, sym);
      {
        Factorization fac = factorize(f, model, FactorAxiom::m4);
        Classification ci = classify(fac.iota, model);
        Classification cp = classify(fac.pi, model);
        ++m4.checked;
        if (!(compose(fac.pi, fac.iota) == f) || !ci.cof || !cp.trivial_fib) {
          fail(m4, "m4 factorization not (cofibration, trivial fibration)",
               {{"f", f}, {"iota", fac.iota}, {"pi", fac.pi}});
        }
      }
      {
        Factorization fac = factorize(f, model, FactorAxiom::m5);
        Classification ci = classify(fac.iota, model);
        Classification cp = classify(fac.pi, model);
        ++m5.checked;
        if (!(compose(fac.pi, fac.iota) == f) || !ci.trivial_cof || !cp.fib) {
          fail(m5, "m5 factorization not (trivial cofibration, fibration)",
               {{"f", f}, {"iota", fac.iota}, {"pi", fac.pi}});
        }
      }
    }
  }
};

}  // namespace

AxiomReport check_axioms(ModelId m, std::uint64_t seed, int cases,
                         int max_objects) {
  if (cases < 1) throw Error("bad-count", "cases must be >= 1");
  if (max_objects < 1) throw Error("bad-count", "max_objects must be >= 1");
  AxiomReport report;
  report.model = m;
  report.seed = seed;
  report.cases = cases;
  report.max_objects = max_objects;
  report.results = {AxiomCheck{"M1"}, AxiomCheck{"M2"}, AxiomCheck{"M3"},
                    AxiomCheck{"M4"}, AxiomCheck{"M5"}};
  CaseChecker checker{m,
                      report,
                      report.results[0],
                      report.results[1],
                      report.results[2],
                      report.results[3],
                      report.results[4]};
  for (int i = 0; i < cases; ++i) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    checker.run(rng, max_objects);
  }
  return report;
}

}  // namespace lawvere
