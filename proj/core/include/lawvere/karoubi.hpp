#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lawvere {

/// A finite 1-category presented by a composition table. Identities are
/// listed among the morphisms. Validation certifies totality of
/// composition on composable pairs, the unit laws, and associativity,
/// naming a witness on failure.
class FinCat {
 public:
  struct Mor {
    std::string name;
    std::size_t src;
    std::size_t dst;

    friend bool operator==(const Mor&, const Mor&) = default;
  };

  /// Throws Error with code "duplicate-name", "bad-identity",
  /// "composition-gap", "ill-typed-composite", "unit-violation", or
  /// "assoc-violation".
  static FinCat validate(std::vector<std::string> objects,
                         std::vector<Mor> morphisms,
                         std::vector<std::size_t> identity,
                         const std::vector<std::array<std::size_t, 3>>& table);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return mors_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  const Mor& mor(std::size_t i) const { return mors_[i]; }
  const std::vector<Mor>& morphisms() const { return mors_; }
  std::size_t identity_of(std::size_t obj) const { return id_[obj]; }
  bool is_identity(std::size_t m) const { return id_[mors_[m].src] == m && mors_[m].src == mors_[m].dst; }

  bool composable(std::size_t g, std::size_t f) const {
    return mors_[f].dst == mors_[g].src;
  }
  /// g . f for composable pairs.
  std::size_t compose(std::size_t g, std::size_t f) const {
    return comp_[g * mors_.size() + f];
  }

  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> morphism_index(std::string_view name) const;

  /// All f with src = dst and f . f = f (identities included).
  std::vector<std::size_t> idempotents() const;

  /// Invertible-pair check between two objects.
  bool isomorphic_objects(std::size_t x, std::size_t y) const;

  friend bool operator==(const FinCat&, const FinCat&) = default;

 private:
  FinCat(std::vector<std::string> objects, std::vector<Mor> mors,
         std::vector<std::size_t> id, std::vector<std::size_t> comp)
      : objects_(std::move(objects)),
        mors_(std::move(mors)),
        id_(std::move(id)),
        comp_(std::move(comp)) {}

  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<std::size_t> id_;
  std::vector<std::size_t> comp_;  // SIZE_MAX where not composable
};

/// The walking idempotent: one object, one non-identity e with e.e = e.
const FinCat& idem_cat();
/// The walking split idempotent: p : 0 -> 1, q : 1 -> 0, p.q = id_1.
const FinCat& split_cat();

/// A structure-preserving assignment, exhaustively certified.
class CatFunctor {
 public:
  /// Throws Error("not-functor") naming the broken law and witness.
  static CatFunctor make(FinCat dom, FinCat cod,
                         std::vector<std::size_t> on_objects,
                         std::vector<std::size_t> on_morphisms);

  static CatFunctor identity(const FinCat& c);
  /// Everything to one object and its identity.
  static CatFunctor constant(const FinCat& dom, const FinCat& cod,
                             std::size_t target);

  const FinCat& dom() const { return dom_; }
  const FinCat& cod() const { return cod_; }
  std::size_t on_object(std::size_t i) const { return obj_[i]; }
  std::size_t on_morphism(std::size_t i) const { return mor_[i]; }
  const std::vector<std::size_t>& object_map() const { return obj_; }
  const std::vector<std::size_t>& morphism_map() const { return mor_; }

  friend bool operator==(const CatFunctor&, const CatFunctor&) = default;

 private:
  CatFunctor(FinCat dom, FinCat cod, std::vector<std::size_t> obj,
             std::vector<std::size_t> mor)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        obj_(std::move(obj)),
        mor_(std::move(mor)) {}

  FinCat dom_;
  FinCat cod_;
  std::vector<std::size_t> obj_;
  std::vector<std::size_t> mor_;
};

CatFunctor compose(const CatFunctor& g, const CatFunctor& f);

/// The inclusion Idem -> Split sending e to q.p.
CatFunctor sigma_functor();

/// A functor Idem -> c, i.e. an idempotent of c.
CatFunctor idempotent_as_functor(const FinCat& c, std::size_t e);

struct Splitting {
  std::size_t through;  // object r
  std::size_t p;        // src(e) -> r
  std::size_t q;        // r -> src(e), q.p = e, p.q = id_r
};

/// Exhaustive search; absence is definitive.
/// Throws Error("not-idempotent").
std::optional<Splitting> split_idempotent(const FinCat& c, std::size_t e);

/// The Karoubi envelope: objects are (object, idempotent) pairs,
/// morphisms (x,e) -> (x',e') are the f with e'.f.e = f, and the
/// identity of (x,e) is e. Every idempotent of the output splits.
struct Envelope {
  FinCat cat;
  CatFunctor inclusion;  // x -> (x, id_x); fully faithful, surjective
                         // up to retracts
  /// Defining base idempotent of each envelope object, in object order.
  std::vector<std::size_t> object_idempotent;
};
Envelope envelope(const FinCat& c);

/// The induced functor between envelopes: (x,e) -> (F x, F e).
CatFunctor envelope_functor(const CatFunctor& f);

struct FunctorFlags {
  bool fully_faithful = false;
  bool surjective_up_to_retracts = false;
  bool injective_on_objects = false;
};
FunctorFlags functor_flags(const CatFunctor& f);

/// Fully faithful and surjective up to retracts: the weak equivalences
/// of the Karoubian model structure.
bool is_pastoral(const CatFunctor& f);

/// Fully faithful and essentially surjective.
bool is_equivalence(const CatFunctor& f);

/// Right lifting property against the Idem -> Split inclusion, decided
/// by exhaustive search over splittings: for every idempotent e of the
/// domain and every splitting of f(e) in the codomain there must be a
/// splitting of e lying over it.
bool is_idfibration(const CatFunctor& f);

/// Disjoint union of categories; objects and morphisms keep their
/// names behind "l:" / "r:" prefixes.
FinCat disjoint_union(const FinCat& a, const FinCat& b);

struct KaroubiFactorization {
  CatFunctor iota;
  FinCat mid;
  CatFunctor pi;
};

/// The (trivial cofibration, idfibration) factorization: mid objects
/// are (idempotent in dom, splitting of its image in cod) pairs, homs
/// are the two-sided idempotent translates of dom homs.
KaroubiFactorization factorize_karoubian(const CatFunctor& f);

/// The (cofibration, trivial fibration) factorization: mid objects are
/// dom + cod with hom-sets pulled back along the images; the inclusion
/// is injective on objects and the projection is fully faithful and
/// strictly surjective (hence pastoral and an idfibration).
KaroubiFactorization factorize_karoubian_m4(const CatFunctor& f);

struct KaroubiAxiomCheck {
  std::string axiom;  // "M1".."M5"
  bool pass = true;
  long checked = 0;
};

struct KaroubiCounterexample {
  std::string axiom;
  std::string note;
  std::vector<std::pair<std::string, CatFunctor>> functors;
};

struct KaroubiAxiomReport {
  std::uint64_t seed = 0;
  int cases = 0;
  int max_objects = 0;
  std::vector<KaroubiAxiomCheck> results;
  std::vector<KaroubiCounterexample> counterexamples;

  bool all_pass() const;
};

/// Randomized verification of the five model-structure axioms for the
/// Karoubian structure (weq = pastoral, cof = injective on objects,
/// fib = idfibration). Deterministic per seed; per-case generators are
/// seeded from (seed, case index).
KaroubiAxiomReport check_karoubian_axioms(std::uint64_t seed, int cases,
                                          int max_objects);

class CatLiftSquare {
 public:
  static CatLiftSquare make(CatFunctor top, CatFunctor left, CatFunctor right,
                            CatFunctor bottom);

  const CatFunctor& top() const { return top_; }
  const CatFunctor& left() const { return left_; }
  const CatFunctor& right() const { return right_; }
  const CatFunctor& bottom() const { return bottom_; }

 private:
  CatLiftSquare(CatFunctor top, CatFunctor left, CatFunctor right,
                CatFunctor bottom)
      : top_(std::move(top)),
        left_(std::move(left)),
        right_(std::move(right)),
        bottom_(std::move(bottom)) {}

  CatFunctor top_, left_, right_, bottom_;
};

enum class CatLiftStatus { found, none, exhausted };

struct CatLiftResult {
  CatLiftStatus status;
  std::optional<CatFunctor> lift;
  long probes = 0;
};

/// Exhaustive functor search pruned by the two triangle constraints and
/// functoriality.
CatLiftResult solve_cat_lift(const CatLiftSquare& square,
                             long max_probes = 10'000'000);

}  // namespace lawvere
