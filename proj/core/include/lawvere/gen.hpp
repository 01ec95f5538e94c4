#pragma once

#include <cstdint>

#include "lawvere/karoubi.hpp"
#include "lawvere/maps.hpp"

namespace lawvere {

/// Deterministic splitmix64 stream; identical across platforms, unlike
/// the standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

/// Min-plus closure of a random weighted digraph on 1..max_objects
/// points. The weight pool includes zero (to produce isomorphic pairs)
/// and omitted edges (infinite distance). Symmetric mode mirrors every
/// edge before closing.
Space random_space(Rng& rng, int max_objects, bool symmetric);

/// Random short map between the given spaces: rejection-samples object
/// assignments, and on failure relaxes the codomain by closing it
/// against the image constraints (the map into the relaxed codomain is
/// short by construction).
SpaceMap random_map_between(Rng& rng, const Space& dom, const Space& cod);

SpaceMap random_map(Rng& rng, int max_objects, bool symmetric);

/// Small valid category drawn from a library of shapes (walking
/// idempotent, walking split idempotent, arrows, isomorphisms, cyclic
/// monoids, discrete and thin categories) plus their unions and
/// envelopes.
FinCat random_fincat(Rng& rng, std::size_t max_objects = 3);

/// Backtracking functor search with randomized object images; falls
/// back to a constant functor, which always exists.
CatFunctor random_functor_between(Rng& rng, const FinCat& a, const FinCat& b);

}  // namespace lawvere
