#include "lawvere/maps.hpp"

#include "lawvere/error.hpp"

namespace lawvere {

const char* const kSeqBarLimitName = "limit";

SpaceMap SpaceMap::make(Space dom, Space cod, std::vector<std::size_t> assign) {
  if (assign.size() != dom.size()) {
    throw Error("bad-assignment", "assignment must cover every domain object");
  }
  for (std::size_t i : assign) {
    if (i >= cod.size()) {
      throw Error("bad-assignment", "assignment target out of range");
    }
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    for (std::size_t y = 0; y < dom.size(); ++y) {
      if (dom.dist(x, y) < cod.dist(assign[x], assign[y])) {
        throw Error("not-short",
                    "d(" + dom.object(x) + "," + dom.object(y) +
                        ") < d(f(" + dom.object(x) + "),f(" + dom.object(y) +
                        "))",
                    {{"x", dom.object(x)},
                     {"y", dom.object(y)},
                     {"dom", dom.dist(x, y).str()},
                     {"cod", cod.dist(assign[x], assign[y]).str()}});
      }
    }
  }
  return SpaceMap(std::move(dom), std::move(cod), std::move(assign));
}

SpaceMap SpaceMap::identity(const Space& s) {
  std::vector<std::size_t> assign(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) assign[i] = i;
  return SpaceMap(s, s, std::move(assign));
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.cod() == g.dom())) {
    throw Error("domain-mismatch", "compose requires f.cod == g.dom");
  }
  std::vector<std::size_t> assign(f.dom().size());
  for (std::size_t i = 0; i < assign.size(); ++i) assign[i] = g(f(i));
  return SpaceMap::make(f.dom(), g.cod(), std::move(assign));
}

MapFlags flags(const SpaceMap& f) {
  const Space& dom = f.dom();
  const Space& cod = f.cod();
  MapFlags out;

  out.injective_on_objects = true;
  for (std::size_t i = 0; i < dom.size() && out.injective_on_objects; ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      if (f(i) == f(j)) {
        out.injective_on_objects = false;
        break;
      }
    }
  }

  std::vector<bool> hit(cod.size(), false);
  for (std::size_t i = 0; i < dom.size(); ++i) hit[f(i)] = true;
  out.surjective_on_objects = true;
  for (bool h : hit) out.surjective_on_objects = out.surjective_on_objects && h;

  out.fully_faithful = true;
  for (std::size_t x = 0; x < dom.size() && out.fully_faithful; ++x) {
    for (std::size_t y = 0; y < dom.size(); ++y) {
      if (!(dom.dist(x, y) == cod.dist(f(x), f(y)))) {
        out.fully_faithful = false;
        break;
      }
    }
  }

  out.essentially_surjective = true;
  for (std::size_t d = 0; d < cod.size(); ++d) {
    bool found = false;
    for (std::size_t c = 0; c < dom.size() && !found; ++c) {
      found = cod.isomorphic(f(c), d);
    }
    if (!found) {
      out.essentially_surjective = false;
      break;
    }
  }

  // Density via eventually-constant sequences: d is a limit of the
  // constant sequence at an image point y iff y and d are isomorphic.
  out.dense = true;
  for (std::size_t d = 0; d < cod.size(); ++d) {
    bool found = false;
    for (std::size_t y = 0; y < cod.size() && !found; ++y) {
      if (hit[y]) found = cod.isomorphic(y, d);
    }
    if (!found) {
      out.dense = false;
      break;
    }
  }

  if (out.dense != out.essentially_surjective) {
    throw Error("internal-flags-mismatch",
                "density and essential surjectivity disagree on a finite space");
  }
  return out;
}

GauntQuotient gaunt_quotient(const Space& s) {
  IsoPartition part = iso_partition(s);
  std::vector<std::string> objects;
  objects.reserve(part.blocks.size());
  for (const auto& block : part.blocks) objects.push_back(s.object(block.front()));
  const std::size_t m = part.blocks.size();
  std::vector<std::vector<ExtNN>> d(m, std::vector<ExtNN>(m));
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t c = 0; c < m; ++c) {
      d[b][c] = s.dist(part.representative(b), part.representative(c));
      // Representative independence, guaranteed by the triangle
      // inequality; checked because quotient distances feed everything
      // downstream.
      for (std::size_t x : part.blocks[b]) {
        for (std::size_t y : part.blocks[c]) {
          if (!(s.dist(x, y) == d[b][c])) {
            throw Error("internal-quotient-ill-defined",
                        "quotient distance depends on representatives");
          }
        }
      }
    }
  }
  Space q = Space::validate(std::move(objects), std::move(d));
  SpaceMap map = SpaceMap::make(s, q, part.block_of);
  return GauntQuotient{std::move(q), std::move(map)};
}

SpaceMap apply_m(const SpaceMap& f) {
  GauntQuotient qd = gaunt_quotient(f.dom());
  GauntQuotient qc = gaunt_quotient(f.cod());
  IsoPartition pd = iso_partition(f.dom());
  IsoPartition pc = iso_partition(f.cod());
  std::vector<std::size_t> assign(qd.space.size());
  for (std::size_t b = 0; b < pd.blocks.size(); ++b) {
    assign[b] = pc.block_of[f(pd.representative(b))];
  }
  return SpaceMap::make(qd.space, qc.space, std::move(assign));
}

SeqBar seqbar_space(std::size_t n) {
  Space seq = seq_space(n);
  std::vector<std::string> objects = seq.objects();
  objects.push_back(kSeqBarLimitName);
  std::vector<std::vector<ExtNN>> d(n + 1, std::vector<ExtNN>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = seq.dist(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    // Tail sum from k: 2^(1-k).
    mpz_class den(1);
    if (k >= 1) mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k - 1);
    ExtNN tail = k == 0 ? ExtNN(mpq_class(2)) : ExtNN(mpq_class(1) / mpq_class(den));
    d[k][n] = tail;
    d[n][k] = std::move(tail);
  }
  d[n][n] = ExtNN();
  Space bar = Space::validate(std::move(objects), std::move(d));
  std::vector<std::size_t> incl(n);
  for (std::size_t i = 0; i < n; ++i) incl[i] = i;
  SpaceMap inclusion = SpaceMap::make(std::move(seq), bar, std::move(incl));
  return SeqBar{std::move(bar), std::move(inclusion)};
}

}  // namespace lawvere
