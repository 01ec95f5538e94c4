#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lawvere/maps.hpp"
#include "lawvere/presheaf.hpp"

namespace lawvere {

/// An eventually-periodic sequence in a symmetric Space: a finite prefix
/// followed by a nonempty cycle repeated forever. Every Cauchy
/// equivalence class in a finite space contains such a representative,
/// which makes the limit lemmas decidable with exact arithmetic; the
/// epsilon-N definitions collapse to exact criteria because distances
/// take finitely many values.
class EPSeq {
 public:
  /// Throws Error("not-symmetric") or Error("bad-sequence") on malformed
  /// data (empty cycle, out-of-range indices).
  static EPSeq make(Space space, std::vector<std::size_t> prefix,
                    std::vector<std::size_t> cycle);

  const Space& space() const { return space_; }
  const std::vector<std::size_t>& prefix() const { return prefix_; }
  const std::vector<std::size_t>& cycle() const { return cycle_; }

  std::size_t value(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return cycle_[(n - prefix_.size()) % cycle_.size()];
  }

 private:
  EPSeq(Space space, std::vector<std::size_t> prefix,
        std::vector<std::size_t> cycle)
      : space_(std::move(space)),
        prefix_(std::move(prefix)),
        cycle_(std::move(cycle)) {}

  Space space_;
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> cycle_;
};

/// True iff all cycle objects are pairwise at distance 0; equivalent to
/// the epsilon-N Cauchy definition on a finite space.
bool is_cauchy(const EPSeq& s);

/// True iff the aligned tails are pointwise at distance 0 (over the lcm
/// of the cycle lengths). Throws Error("not-cauchy") or
/// Error("space-mismatch").
bool are_equivalent(const EPSeq& a, const EPSeq& b);

/// All limit objects: the isomorphism class of any cycle object.
/// Sorted by object index. Throws Error("not-cauchy").
std::vector<std::size_t> limits(const EPSeq& s);

/// The presheaf z -> lim dist(z, x_n) = dist(z, c) for any cycle object
/// c. Equals yoneda of any limit object when one exists.
Presheaf ell(const EPSeq& s);

/// The eventual value of the distance sequence n -> dist(x_n, y_n) for
/// two Cauchy sequences on a common space (always eventually constant).
ExtNN eventual_distance(const EPSeq& a, const EPSeq& b);

/// A short map from seq_space(n) picking out a subsequence k -> x_{N_k}
/// with strictly increasing indices (the tail, which sits in one
/// zero-cluster). Throws Error("not-cauchy").
SpaceMap subsequence_map(const EPSeq& s, std::size_t n);

/// Extends f : seq_space(n) -> X over the seqbar inclusion by sending
/// the limit point to `target`. Succeeds iff the extension is short,
/// i.e. dist(f(k), target) <= 2^(1-k) for every k; otherwise throws
/// Error("not-a-limit") with the least witness k. Beyond truncation
/// depth 2 + log2(1/mu) (mu the least positive distance of X) this
/// criterion coincides with `target` being a limit of the constant
/// extension of f's image sequence.
SpaceMap extend_to_seqbar(const SpaceMap& f, std::size_t target);

}  // namespace lawvere
