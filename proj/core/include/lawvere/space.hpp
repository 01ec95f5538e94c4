#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lawvere/extnum.hpp"

namespace lawvere {

/// A finite Lawvere metric space: named objects and an exact distance
/// matrix with zero diagonal satisfying the triangle inequality.
/// Distances may be infinite and need not be symmetric.
///
/// Instances are immutable once constructed and safe to share across
/// threads.
class Space {
 public:
  /// Certifies raw data as a Space. Throws Error with code
  /// "duplicate-name", "nonzero-diagonal" (witness x), or
  /// "triangle-violation" (witness x, y, z).
  static Space validate(std::vector<std::string> objects,
                        std::vector<std::vector<ExtNN>> dist);

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const ExtNN& dist(std::size_t i, std::size_t j) const {
    return d_[i * objects_.size() + j];
  }

  /// d(i,j) = 0 = d(j,i); "isomorphic objects" of the hom-object view.
  bool isomorphic(std::size_t i, std::size_t j) const {
    return dist(i, j).is_zero() && dist(j, i).is_zero();
  }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Space(std::vector<std::string> objects, std::vector<ExtNN> flat)
      : objects_(std::move(objects)), d_(std::move(flat)) {}

  std::vector<std::string> objects_;
  std::vector<ExtNN> d_;  // row-major, size() * size()
};

/// Pre-closure raw data: a weighted digraph. Absent edges mean infinity.
struct WeightedGraph {
  struct Edge {
    std::size_t src;
    std::size_t dst;
    ExtNN weight;
  };
  std::vector<std::string> objects;
  std::vector<Edge> edges;
};

/// Partition of a Space's objects into isomorphism classes. Blocks are
/// ordered by first occurrence; the representative of a block is its
/// first object in input order.
struct IsoPartition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;  // object index -> block index

  std::size_t representative(std::size_t block) const {
    return blocks[block].front();
  }
};

/// Free Lawvere metric space on a weighted digraph: min-plus transitive
/// closure (all-pairs shortest path by Floyd-Warshall relaxation over
/// exact values). dist(x,x) = 0; unreachable pairs stay infinite.
Space closure(const WeightedGraph& g);

/// Transposed distance matrix.
Space opposite(const Space& s);

bool is_symmetric(const Space& s);

/// Identity of indiscernibles: no two distinct objects at mutual
/// distance zero.
bool is_gaunt(const Space& s);

IsoPartition iso_partition(const Space& s);

/// Product metric: object pairs with the max of component distances.
Space product(const Space& a, const Space& b);

/// Disjoint union with infinite cross-distances.
Space coproduct(const Space& a, const Space& b);

/// The depth-n truncation of the dyadic sequence space: objects 0..n-1,
/// dist(n, m) = sum of 2^-i for i in [min(n,m), max(n,m)).
Space seq_space(std::size_t n);

/// The distance formula above as a standalone value.
ExtNN seq_dist(std::size_t n, std::size_t m);

/// Names used by product/coproduct/seq constructions (deterministic).
std::string product_object_name(const std::string& a, const std::string& b);
std::string coproduct_left_name(const std::string& a);
std::string coproduct_right_name(const std::string& b);

}  // namespace lawvere
