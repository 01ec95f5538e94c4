#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lawvere/space.hpp"

namespace lawvere {

/// A presheaf on a Space: a value assignment z -> values(z) in [0, inf]
/// satisfying the contravariant functor condition
///
///   dist(a, b) >= hom(values(b), values(a))   for all a, b,
///
/// i.e. values(a) <= dist(a, b) + values(b). On symmetric bases this is
/// the usual short-map condition; stated this way round it also holds
/// for every representable presheaf on an asymmetric base.
class Presheaf {
 public:
  /// Certifies values; throws Error("not-presheaf") with a witness pair.
  static Presheaf make(Space base, std::vector<ExtNN> values);

  const Space& base() const { return base_; }
  const ExtNN& value(std::size_t i) const { return values_[i]; }
  const std::vector<ExtNN>& values() const { return values_; }

  friend bool operator==(const Presheaf&, const Presheaf&) = default;

 private:
  Presheaf(Space base, std::vector<ExtNN> values)
      : base_(std::move(base)), values_(std::move(values)) {}

  Space base_;
  std::vector<ExtNN> values_;
};

/// The representable presheaf z -> dist(z, x).
Presheaf yoneda(const Space& s, std::size_t x);

/// Directed presheaf distance: max over z of hom(f(z), g(z)).
/// Throws Error("base-mismatch") when the bases differ.
ExtNN presheaf_dist(const Presheaf& f, const Presheaf& g);

/// The least assignment satisfying the lower-bound dual condition
/// f(y) + g(z) >= dist(y, z): g(z) = max over y of hom(f(y), dist(y,z)).
/// Returned raw (it need not meet the zero-infimum condition, and is
/// only presheaf-shaped).
std::vector<ExtNN> candidate_dual(const Presheaf& f);

/// Whether f has a dual, decided on the minimal candidate: true iff
/// min over z of f(z) + g(z) equals 0. Minimality of the candidate
/// makes the verdict definitive for all assignments.
struct DualVerdict {
  bool has_dual;
  std::vector<ExtNN> witness;  // the candidate dual values
};
DualVerdict has_dual(const Presheaf& f);

}  // namespace lawvere
