#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawvere/maps.hpp"

namespace lawvere {

/// The three model structures on (symmetric) Lawvere metric spaces:
///   metric        - weq = fully faithful + essentially surjective,
///                   cof = all, fib = {Delta, Gamma} lifting;
///   cauchy        - weq = fully faithful + dense,
///                   cof = injective on objects, fib = Seq-inclusion lifting;
///   cauchy_metric - weq = fully faithful + dense,
///                   cof = all, fib = {Delta, Gamma, Seq-inclusion} lifting.
enum class ModelId { metric, cauchy, cauchy_metric };

const char* model_name(ModelId m);
std::optional<ModelId> parse_model(std::string_view name);

struct Classification {
  bool weq = false;
  bool cof = false;
  bool fib = false;
  bool trivial_fib = false;  // fib && weq
  bool trivial_cof = false;  // cof && weq
};

/// Finite characterization of the Delta lifting condition: no two
/// distinct isomorphic domain objects share an image.
bool delta_condition(const SpaceMap& f);

/// Finite characterization of the Gamma lifting condition: for every c
/// and every d isomorphic to f(c) there is c' isomorphic to c with
/// f(c') = d. On finite symmetric spaces this also decides lifting
/// against the Seq-bar inclusion (Cauchy tails sit in zero-clusters, so
/// only constant-type squares bind).
bool gamma_condition(const SpaceMap& f);

/// Classifies f in the given model. Throws Error("not-symmetric") for
/// the Cauchy-flavored models on asymmetric domain or codomain.
Classification classify(const SpaceMap& f, ModelId m);

/// The walking isomorphism pair (two objects at mutual distance 0), the
/// one-point space, and the generating maps Delta and Gamma.
Space interval_space();
Space point_space();
SpaceMap delta_map();
SpaceMap gamma_map();

/// A commuting square
///       top
///    A -----> C
///    |        |
///    | left   | right
///    v        v
///    B -----> D
///      bottom
/// A lift is a short map B -> C commuting with both triangles.
class LiftSquare {
 public:
  /// Throws Error("square-mismatch") on incompatible endpoints and
  /// Error("not-commuting") when right . top != bottom . left.
  static LiftSquare make(SpaceMap top, SpaceMap left, SpaceMap right,
                         SpaceMap bottom);

  const SpaceMap& top() const { return top_; }
  const SpaceMap& left() const { return left_; }
  const SpaceMap& right() const { return right_; }
  const SpaceMap& bottom() const { return bottom_; }

 private:
  LiftSquare(SpaceMap top, SpaceMap left, SpaceMap right, SpaceMap bottom)
      : top_(std::move(top)),
        left_(std::move(left)),
        right_(std::move(right)),
        bottom_(std::move(bottom)) {}

  SpaceMap top_, left_, right_, bottom_;
};

enum class LiftStatus { found, none, exhausted };

struct LiftResult {
  LiftStatus status;
  std::optional<SpaceMap> lift;
  long probes = 0;
};

inline constexpr long kDefaultLiftProbeBudget = 10'000'000;

/// Exhaustive search for a diagonal, pruned by the shortness constraint
/// and the two triangle equations. `none` is definitive for the given
/// finite square; `exhausted` means the probe budget ran out first.
LiftResult solve_lift(const LiftSquare& square,
                      long max_probes = kDefaultLiftProbeBudget);

/// Brute-force right-lifting-property checks against the generating
/// maps, enumerating every square and solving it. These are the
/// consistency oracles for delta_condition / gamma_condition and for
/// the Seq-based fibration criterion. A failure reports the offending
/// square.
struct RlpVerdict {
  bool holds;
  std::optional<LiftSquare> witness;
};
RlpVerdict rlp_delta_search(const SpaceMap& f);
RlpVerdict rlp_gamma_search(const SpaceMap& f);

/// Materializes Seq-inclusion squares at the given truncation depth.
/// Tails beyond the truncation are pinned to the cluster of the last
/// object (every short map out of the infinite sequence space is
/// eventually inside one), so the limit point is placed at the exact
/// partial-sum distance and the search range is complete at any depth.
RlpVerdict rlp_iota_seq_search(const SpaceMap& f, std::size_t depth);

enum class FactorAxiom { m4, m5 };

struct Factorization {
  SpaceMap iota;  // into the middle space
  Space mid;
  SpaceMap pi;  // out of the middle space
};

/// Exact factorizations: m4 = cofibration then trivial fibration,
/// m5 = trivial cofibration then fibration, per model. pi . iota == f.
Factorization factorize(const SpaceMap& f, ModelId m, FactorAxiom axiom);

struct AxiomCheck {
  std::string axiom;  // "M1".."M5"
  bool pass = true;
  long checked = 0;
};

struct Counterexample {
  std::string axiom;
  std::string note;
  std::vector<std::pair<std::string, SpaceMap>> maps;  // labeled, replayable
};

struct AxiomReport {
  ModelId model;
  std::uint64_t seed = 0;
  int cases = 0;
  int max_objects = 0;
  std::vector<AxiomCheck> results;
  std::vector<Counterexample> counterexamples;

  bool all_pass() const;
};

/// Randomized verification of (M1)-(M5) on generated instances.
/// Deterministic for a given seed: per-case generators are seeded from
/// (seed, case index), so the report is identical however cases are
/// scheduled. Throws Error("bad-count") when cases < 1.
AxiomReport check_axioms(ModelId m, std::uint64_t seed, int cases,
                         int max_objects);

}  // namespace lawvere
