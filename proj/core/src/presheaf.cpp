#include "lawvere/presheaf.hpp"

#include "lawvere/error.hpp"

namespace lawvere {

Presheaf Presheaf::make(Space base, std::vector<ExtNN> values) {
  if (values.size() != base.size()) {
    throw Error("bad-values", "presheaf must assign a value to every object");
  }
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = 0; b < base.size(); ++b) {
      if (base.dist(a, b) < hom(values[b], values[a])) {
        throw Error("not-presheaf",
                    "value jump from " + base.object(b) + " to " +
                        base.object(a) + " exceeds distance",
                    {{"a", base.object(a)},
                     {"b", base.object(b)},
                     {"dist", base.dist(a, b).str()},
                     {"value_a", values[a].str()},
                     {"value_b", values[b].str()}});
      }
    }
  }
  return Presheaf(std::move(base), std::move(values));
}

Presheaf yoneda(const Space& s, std::size_t x) {
  if (x >= s.size()) throw Error("unknown-object", "yoneda object out of range");
  std::vector<ExtNN> values(s.size());
  for (std::size_t z = 0; z < s.size(); ++z) values[z] = s.dist(z, x);
  return Presheaf::make(s, std::move(values));
}

ExtNN presheaf_dist(const Presheaf& f, const Presheaf& g) {
  if (!(f.base() == g.base())) {
    throw Error("base-mismatch", "presheaf distance requires a common base");
  }
  ExtNN sup;  // finite sup over objects is a max; 0 on the empty base
  for (std::size_t z = 0; z < f.base().size(); ++z) {
    sup = max(sup, hom(f.value(z), g.value(z)));
  }
  return sup;
}

std::vector<ExtNN> candidate_dual(const Presheaf& f) {
  const Space& base = f.base();
  std::vector<ExtNN> g(base.size());
  for (std::size_t z = 0; z < base.size(); ++z) {
    ExtNN best;
    for (std::size_t y = 0; y < base.size(); ++y) {
      best = max(best, hom(f.value(y), base.dist(y, z)));
    }
    g[z] = std::move(best);
  }
  return g;
}

DualVerdict has_dual(const Presheaf& f) {
  std::vector<ExtNN> g = candidate_dual(f);
  if (f.base().size() == 0) {
    // inf over the empty space is infinite, never 0
    return DualVerdict{false, std::move(g)};
  }
  ExtNN inf = ExtNN::infinity();
  for (std::size_t z = 0; z < g.size(); ++z) {
    inf = min(inf, f.value(z) + g[z]);
  }
  return DualVerdict{inf.is_zero(), std::move(g)};
}

}  // namespace lawvere
