#include "lawvere/gen.hpp"

namespace lawvere {

namespace {

std::string object_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "o" + std::to_string(i);
}

ExtNN pool_weight(Rng& rng) {
  switch (rng.below(8)) {
    case 0: return ExtNN();  // zero edges create isomorphic pairs
    case 1: return ExtNN::fraction(1, 4);
    case 2: return ExtNN::fraction(1, 3);
    case 3: return ExtNN::fraction(1, 2);
    case 4: return ExtNN::fraction(1, 1);
    case 5: return ExtNN::fraction(3, 2);
    case 6: return ExtNN::fraction(2, 1);
    default: return ExtNN::fraction(3, 1);
  }
}

}  // namespace

Space random_space(Rng& rng, int max_objects, bool symmetric) {
  const std::size_t n = 1 + rng.below(static_cast<std::uint64_t>(max_objects));
  WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.objects.push_back(object_name(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j || !rng.coin()) continue;
      ExtNN w = pool_weight(rng);
      g.edges.push_back({i, j, w});
      if (symmetric) g.edges.push_back({j, i, w});
    }
  }
  return closure(g);
}

SpaceMap random_map_between(Rng& rng, const Space& dom, const Space& cod) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<std::size_t> assign(dom.size());
    for (auto& a : assign) a = rng.below(cod.size());
    bool short_map = true;
    for (std::size_t x = 0; x < dom.size() && short_map; ++x) {
      for (std::size_t y = 0; y < dom.size(); ++y) {
        if (dom.dist(x, y) < cod.dist(assign[x], assign[y])) {
          short_map = false;
          break;
        }
      }
    }
    if (short_map) return SpaceMap::make(dom, cod, std::move(assign));
  }
  // Relax the codomain so the last sampled assignment becomes short:
  // close the codomain graph together with the image constraints.
  std::vector<std::size_t> assign(dom.size());
  for (auto& a : assign) a = rng.below(cod.size());
  WeightedGraph g;
  g.objects = cod.objects();
  for (std::size_t i = 0; i < cod.size(); ++i) {
    for (std::size_t j = 0; j < cod.size(); ++j) {
      if (i != j && !cod.dist(i, j).is_infinite()) {
        g.edges.push_back({i, j, cod.dist(i, j)});
      }
    }
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    for (std::size_t y = 0; y < dom.size(); ++y) {
      if (x != y && assign[x] != assign[y] && !dom.dist(x, y).is_infinite()) {
        g.edges.push_back({assign[x], assign[y], dom.dist(x, y)});
      }
    }
  }
  return SpaceMap::make(dom, closure(g), std::move(assign));
}

SpaceMap random_map(Rng& rng, int max_objects, bool symmetric) {
  Space dom = random_space(rng, max_objects, symmetric);
  Space cod = random_space(rng, max_objects, symmetric);
  return random_map_between(rng, dom, cod);
}

namespace {

FinCat walking_arrow() {
  return FinCat::validate({"x", "y"}, {{"idx", 0, 0}, {"idy", 1, 1}, {"f", 0, 1}},
                          {0, 1}, {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}});
}

FinCat walking_iso() {
  return FinCat::validate(
      {"x", "y"}, {{"idx", 0, 0}, {"idy", 1, 1}, {"f", 0, 1}, {"g", 1, 0}},
      {0, 1},
      {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}, {0, 3, 3}, {3, 1, 3},
       {3, 2, 0}, {2, 3, 1}});
}

FinCat z2_monoid() {
  return FinCat::validate({"x"}, {{"id", 0, 0}, {"g", 0, 0}}, {0},
                          {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

FinCat discrete_cat(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<FinCat::Mor> mors;
  std::vector<std::size_t> ids;
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("x" + std::to_string(i));
    mors.push_back({"id" + std::to_string(i), i, i});
    ids.push_back(i);
    table.push_back({i, i, i});
  }
  return FinCat::validate(std::move(objects), std::move(mors), std::move(ids),
                          table);
}

// Thin category from a random reflexive-transitive relation.
FinCat random_thin_cat(Rng& rng, std::size_t max_objects) {
  const std::size_t n = 1 + rng.below(max_objects);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng.below(3) == 0) rel[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
      }
    }
  }
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  std::vector<FinCat::Mor> mors;
  std::vector<std::vector<std::size_t>> arrow(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j]) {
        arrow[i][j] = mors.size();
        mors.push_back({"m" + std::to_string(i) + std::to_string(j), i, j});
      }
    }
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = arrow[i][i];
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t g = 0; g < mors.size(); ++g) {
    for (std::size_t f = 0; f < mors.size(); ++f) {
      if (mors[f].dst != mors[g].src) continue;
      table.push_back({g, f, arrow[mors[f].src][mors[g].dst]});
    }
  }
  return FinCat::validate(std::move(objects), std::move(mors), std::move(ids),
                          table);
}

}  // namespace

FinCat random_fincat(Rng& rng, std::size_t max_objects) {
  switch (rng.below(9)) {
    case 0: return idem_cat();
    case 1: return split_cat();
    case 2: return walking_arrow();
    case 3: return walking_iso();
    case 4: return z2_monoid();
    case 5: return discrete_cat(1 + rng.below(max_objects));
    case 6: return disjoint_union(discrete_cat(1), random_thin_cat(rng, 2));
    case 7: return envelope(rng.coin() ? idem_cat() : walking_arrow()).cat;
    default: return random_thin_cat(rng, max_objects);
  }
}

CatFunctor random_functor_between(Rng& rng, const FinCat& a, const FinCat& b) {
  std::vector<std::size_t> obj(a.num_objects());
  for (int attempt = 0; attempt < 8; ++attempt) {
    for (auto& o : obj) o = rng.below(b.num_objects());
    std::vector<std::size_t> mor(a.num_morphisms(), b.num_morphisms());
    auto assign = [&](auto&& self, std::size_t m) -> bool {
      if (m == a.num_morphisms()) return true;
      for (std::size_t g = 0; g < b.num_morphisms(); ++g) {
        if (b.mor(g).src != obj[a.mor(m).src] ||
            b.mor(g).dst != obj[a.mor(m).dst]) {
          continue;
        }
        if (a.is_identity(m) && g != b.identity_of(obj[a.mor(m).src])) continue;
        mor[m] = g;
        bool ok = true;
        for (std::size_t x = 0; x <= m && ok; ++x) {
          for (std::size_t y = 0; y <= m && ok; ++y) {
            if (!a.composable(x, y)) continue;
            std::size_t c = a.compose(x, y);
            if (c > m) continue;
            ok = mor[c] == b.compose(mor[x], mor[y]);
          }
        }
        if (ok && self(self, m + 1)) return true;
      }
      mor[m] = b.num_morphisms();
      return false;
    };
    if (assign(assign, 0)) return CatFunctor::make(a, b, obj, mor);
  }
  return CatFunctor::constant(a, b, rng.below(b.num_objects()));
}

}  // namespace lawvere
