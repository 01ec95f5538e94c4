#pragma once

// Shared test utilities: terse constructors, independent oracles, and
// instance generators. Oracles here must stay independent of the
// implementation paths they check.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lawvere/cauchy.hpp"
#include "lawvere/gen.hpp"
#include "lawvere/karoubi.hpp"
#include "lawvere/maps.hpp"
#include "lawvere/presheaf.hpp"

namespace testutil {

using namespace lawvere;

inline ExtNN val(const std::string& s) {
  auto v = ExtNN::parse(s);
  if (!v) throw std::runtime_error("bad test value: " + s);
  return *v;
}

inline Space space(std::vector<std::string> objects,
                   std::vector<std::vector<std::string>> dist) {
  std::vector<std::vector<ExtNN>> d;
  for (auto& row : dist) {
    std::vector<ExtNN> r;
    for (auto& s : row) r.push_back(val(s));
    d.push_back(std::move(r));
  }
  return Space::validate(std::move(objects), std::move(d));
}

// Minimum over all directed simple paths of the weight sum, by
// depth-first enumeration. The independent oracle for min-plus closure.
inline std::vector<std::vector<ExtNN>> oracle_all_pairs(const WeightedGraph& g) {
  const std::size_t n = g.objects.size();
  std::vector<std::vector<ExtNN>> w(n, std::vector<ExtNN>(n, ExtNN::infinity()));
  for (const auto& e : g.edges) {
    if (e.src != e.dst) w[e.src][e.dst] = min(w[e.src][e.dst], e.weight);
  }
  std::vector<std::vector<ExtNN>> best(n, std::vector<ExtNN>(n, ExtNN::infinity()));
  for (std::size_t s = 0; s < n; ++s) {
    best[s][s] = ExtNN();
    std::vector<bool> used(n, false);
    used[s] = true;
    std::function<void(std::size_t, ExtNN)> dfs = [&](std::size_t at, ExtNN cost) {
      for (std::size_t next = 0; next < n; ++next) {
        if (used[next] || w[at][next].is_infinite()) continue;
        ExtNN c = cost + w[at][next];
        if (c < best[s][next]) best[s][next] = c;
        used[next] = true;
        dfs(next, std::move(c));
        used[next] = false;
      }
    };
    dfs(s, ExtNN());
  }
  return best;
}

inline WeightedGraph random_graph(Rng& rng, int max_objects, bool symmetric) {
  const std::size_t n = 1 + rng.below(static_cast<std::uint64_t>(max_objects));
  WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.objects.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  const char* pool[] = {"0", "1/4", "1/3", "1/2", "1", "3/2", "2", "3"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j || !rng.coin()) continue;
      ExtNN w = val(pool[rng.below(8)]);
      g.edges.push_back({i, j, w});
      if (symmetric) g.edges.push_back({j, i, w});
    }
  }
  return g;
}

// Presheaf by inf-convolution of random seed values against the
// distance matrix; always satisfies the functor condition.
inline Presheaf random_presheaf(Rng& rng, const Space& s) {
  const char* pool[] = {"0", "1/4", "1/2", "3/4", "1", "3/2", "2", "inf"};
  std::vector<ExtNN> seed(s.size());
  for (auto& v : seed) v = val(pool[rng.below(8)]);
  std::vector<ExtNN> values(s.size(), ExtNN::infinity());
  for (std::size_t z = 0; z < s.size(); ++z) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      values[z] = min(values[z], s.dist(z, y) + seed[y]);
    }
  }
  return Presheaf::make(s, std::move(values));
}

inline EPSeq random_epseq(Rng& rng, const Space& s) {
  std::vector<std::size_t> prefix(rng.below(3));
  for (auto& p : prefix) p = rng.below(s.size());
  std::vector<std::size_t> cycle(1 + rng.below(2));
  for (auto& c : cycle) c = rng.below(s.size());
  return EPSeq::make(s, std::move(prefix), std::move(cycle));
}

// Random Cauchy sequence: cycle drawn inside one isomorphism class.
inline EPSeq random_cauchy_epseq(Rng& rng, const Space& s) {
  IsoPartition part = iso_partition(s);
  const auto& block = part.blocks[rng.below(part.blocks.size())];
  std::vector<std::size_t> prefix(rng.below(3));
  for (auto& p : prefix) p = rng.below(s.size());
  std::vector<std::size_t> cycle(1 + rng.below(2));
  for (auto& c : cycle) c = block[rng.below(block.size())];
  return EPSeq::make(s, std::move(prefix), std::move(cycle));
}

inline EPSeq map_epseq(const SpaceMap& f, const EPSeq& s) {
  std::vector<std::size_t> prefix, cycle;
  for (std::size_t i : s.prefix()) prefix.push_back(f(i));
  for (std::size_t i : s.cycle()) cycle.push_back(f(i));
  return EPSeq::make(f.cod(), std::move(prefix), std::move(cycle));
}

// Eventual value of an eventually-periodic value sequence, read off a
// window of one period past both transients; nullopt when the window is
// not constant.
inline std::optional<ExtNN> eventual_value(
    const std::function<ExtNN(std::size_t)>& seq, std::size_t transient,
    std::size_t period) {
  ExtNN first = seq(transient);
  for (std::size_t k = 1; k < period; ++k) {
    if (!(seq(transient + k) == first)) return std::nullopt;
  }
  return first;
}

// ---- finite category instances --------------------------------------

inline FinCat walking_arrow() {
  return FinCat::validate({"x", "y"}, {{"idx", 0, 0}, {"idy", 1, 1}, {"f", 0, 1}},
                          {0, 1}, {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}});
}

inline FinCat walking_iso() {
  return FinCat::validate(
      {"x", "y"},
      {{"idx", 0, 0}, {"idy", 1, 1}, {"f", 0, 1}, {"g", 1, 0}}, {0, 1},
      {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}, {0, 3, 3}, {3, 1, 3},
       {3, 2, 0}, {2, 3, 1}});
}

inline FinCat z2_monoid() {
  return FinCat::validate({"x"}, {{"id", 0, 0}, {"g", 0, 0}}, {0},
                          {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

inline FinCat discrete_cat(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<FinCat::Mor> mors;
  std::vector<std::size_t> ids;
  std::vector<std::array<std::size_t, 3>> table;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back(std::string(1, static_cast<char>('x' + i)));
    mors.push_back({"id" + std::to_string(i), i, i});
    ids.push_back(i);
    table.push_back({i, i, i});
  }
  return FinCat::validate(std::move(objects), std::move(mors), std::move(ids),
                          table);
}

// Thin category from a random reflexive-transitive relation.
inline FinCat random_thin_cat(Rng& rng, std::size_t max_objects) {
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

using lawvere::random_fincat;
using lawvere::random_functor_between;

}  // namespace testutil
