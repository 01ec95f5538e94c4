#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lawvere/space.hpp"

namespace lawvere {

/// A short map between Spaces: an object assignment certified to be
/// distance-nonincreasing. Stores its own domain and codomain so map
/// documents are self-contained.
class SpaceMap {
 public:
  /// Certifies the assignment; throws Error("not-short") with a witness
  /// pair when dom.dist(x,y) < cod.dist(f(x), f(y)).
  static SpaceMap make(Space dom, Space cod, std::vector<std::size_t> assign);

  static SpaceMap identity(const Space& s);

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }
  std::size_t operator()(std::size_t i) const { return assign_[i]; }
  const std::vector<std::size_t>& assign() const { return assign_; }

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  SpaceMap(Space dom, Space cod, std::vector<std::size_t> assign)
      : dom_(std::move(dom)), cod_(std::move(cod)), assign_(std::move(assign)) {}

  Space dom_;
  Space cod_;
  std::vector<std::size_t> assign_;
};

struct MapFlags {
  bool injective_on_objects = false;
  bool surjective_on_objects = false;
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool dense = false;
};

/// g after f; throws Error("domain-mismatch") when f.cod != g.dom.
/// Shortness of the composite is inherited, not re-derived.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

/// Exact predicate vocabulary the model structures are defined from.
/// On finite spaces density coincides with essential surjectivity
/// (every Cauchy sequence has an eventually-constant representative up
/// to isomorphism); both are computed and cross-checked here.
MapFlags flags(const SpaceMap& f);

/// The gaunt quotient M(C): one object per isomorphism class, with
/// representative-based distances, plus the quotient map.
struct GauntQuotient {
  Space space;
  SpaceMap map;
};
GauntQuotient gaunt_quotient(const Space& s);

/// The induced map M(f) between gaunt quotients: [x] -> [f(x)].
SpaceMap apply_m(const SpaceMap& f);

/// seq_space(n) extended by one point l with dist(k, l) = 2^(1-k) (the
/// geometric tail), together with the inclusion of seq_space(n).
struct SeqBar {
  Space space;
  SpaceMap inclusion;
};
SeqBar seqbar_space(std::size_t n);

/// Name of the added limit point in seqbar_space.
extern const char* const kSeqBarLimitName;

}  // namespace lawvere
