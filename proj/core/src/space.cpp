#include "lawvere/space.hpp"

#include <unordered_set>

#include "lawvere/error.hpp"

namespace lawvere {

std::optional<std::size_t> Space::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == name) return i;
  }
  return std::nullopt;
}

Space Space::validate(std::vector<std::string> objects,
                      std::vector<std::vector<ExtNN>> dist) {
  const std::size_t n = objects.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : objects) {
      if (!seen.insert(name).second) {
        throw Error("duplicate-name", "duplicate object name: " + name,
                    {{"name", name}});
      }
    }
  }
  if (dist.size() != n) {
    throw Error("bad-shape", "distance matrix must have one row per object");
  }
  for (const auto& row : dist) {
    if (row.size() != n) {
      throw Error("bad-shape", "distance matrix must be square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!dist[i][i].is_zero()) {
      throw Error("nonzero-diagonal",
                  "d(" + objects[i] + ", " + objects[i] + ") must be 0",
                  {{"object", objects[i]}, {"value", dist[i][i].str()}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dist[i][j] + dist[j][k] < dist[i][k]) {
          throw Error("triangle-violation",
                      "d(" + objects[i] + "," + objects[k] + ") > d(" +
                          objects[i] + "," + objects[j] + ") + d(" +
                          objects[j] + "," + objects[k] + ")",
                      {{"x", objects[i]},
                       {"y", objects[j]},
                       {"z", objects[k]},
                       {"lhs", dist[i][k].str()},
                       {"rhs", (dist[i][j] + dist[j][k]).str()}});
        }
      }
    }
  }
  std::vector<ExtNN> flat;
  flat.reserve(n * n);
  for (auto& row : dist) {
    for (auto& v : row) flat.push_back(std::move(v));
  }
  return Space(std::move(objects), std::move(flat));
}

Space closure(const WeightedGraph& g) {
  const std::size_t n = g.objects.size();
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n, ExtNN::infinity()));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = ExtNN();
  for (const auto& e : g.edges) {
    if (e.src >= n || e.dst >= n) {
      throw Error("bad-edge", "edge endpoint out of range");
    }
    if (e.src != e.dst) d[e.src][e.dst] = min(d[e.src][e.dst], e.weight);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ExtNN via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = std::move(via);
      }
    }
  }
  return Space::validate(g.objects, std::move(d));
}

Space opposite(const Space& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = s.dist(j, i);
  }
  return Space::validate(s.objects(), std::move(d));
}

bool is_symmetric(const Space& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!(s.dist(i, j) == s.dist(j, i))) return false;
    }
  }
  return true;
}

bool is_gaunt(const Space& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s.isomorphic(i, j)) return false;
    }
  }
  return true;
}

IsoPartition iso_partition(const Space& s) {
  // Mutual distance zero is transitive by the triangle inequality, so a
  // linear scan against block representatives suffices.
  IsoPartition p;
  p.block_of.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < p.blocks.size() && !placed; ++b) {
      if (s.isomorphic(i, p.blocks[b].front())) {
        p.blocks[b].push_back(i);
        p.block_of[i] = b;
        placed = true;
      }
    }
    if (!placed) {
      p.block_of[i] = p.blocks.size();
      p.blocks.push_back({i});
    }
  }
  return p;
}

std::string product_object_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}
std::string coproduct_left_name(const std::string& a) { return "l:" + a; }
std::string coproduct_right_name(const std::string& b) { return "r:" + b; }

Space product(const Space& a, const Space& b) {
  std::vector<std::string> objects;
  objects.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      objects.push_back(product_object_name(a.object(i), b.object(j)));
    }
  }
  const std::size_t n = objects.size();
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t l = 0; l < b.size(); ++l) {
          d[i * b.size() + j][k * b.size() + l] =
              max(a.dist(i, k), b.dist(j, l));
        }
      }
    }
  }
  return Space::validate(std::move(objects), std::move(d));
}

Space coproduct(const Space& a, const Space& b) {
  std::vector<std::string> objects;
  for (const auto& name : a.objects()) objects.push_back(coproduct_left_name(name));
  for (const auto& name : b.objects()) objects.push_back(coproduct_right_name(name));
  const std::size_t n = objects.size();
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n, ExtNN::infinity()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = a.dist(i, j);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      d[a.size() + i][a.size() + j] = b.dist(i, j);
    }
  }
  return Space::validate(std::move(objects), std::move(d));
}

ExtNN seq_dist(std::size_t n, std::size_t m) {
  if (n == m) return ExtNN();
  const std::size_t lo = n < m ? n : m;
  const std::size_t hi = n < m ? m : n;
  mpq_class sum(0);
  for (std::size_t i = lo; i < hi; ++i) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), i);
    sum += mpq_class(1) / mpq_class(den);
  }
  return ExtNN(sum);
}

Space seq_space(std::size_t n) {
  if (n < 1) throw Error("bad-count", "seq_space requires n >= 1");
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<std::vector<ExtNN>> d(n, std::vector<ExtNN>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = seq_dist(i, j);
  }
  return Space::validate(std::move(objects), std::move(d));
}

}  // namespace lawvere
