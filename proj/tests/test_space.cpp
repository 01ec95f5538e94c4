#include <doctest.h>

#include "lawvere/error.hpp"
#include "lawvere/gen.hpp"
#include "lawvere/maps.hpp"
#include "lawvere/space.hpp"

#include "helpers.hpp"

using namespace lawvere;
using testutil::space;
using testutil::val;

TEST_CASE("validate accepts one point and asymmetric matrices") {
  CHECK(space({"a"}, {{"0"}}).size() == 1);
  Space s = space({"a", "b"}, {{"0", "1"}, {"2", "0"}});
  CHECK(s.dist(0, 1) == val("1"));
  CHECK(s.dist(1, 0) == val("2"));
}

TEST_CASE("validate rejects bad data with witnesses") {
  CHECK_THROWS_WITH_AS(space({"a", "a"}, {{"0", "1"}, {"1", "0"}}),
                       doctest::Contains("duplicate"), Error);
  try {
    space({"a", "b"}, {{"0", "1"}, {"1", "1"}});
    FAIL("expected nonzero-diagonal");
  } catch (const Error& e) {
    CHECK(e.code() == "nonzero-diagonal");
    CHECK(e.witness().at("object") == "b");
  }
  try {
    space({"a", "b", "c"},
          {{"0", "5", "7"}, {"inf", "0", "1"}, {"inf", "inf", "0"}});
    FAIL("expected triangle-violation");
  } catch (const Error& e) {
    CHECK(e.code() == "triangle-violation");
    CHECK(e.witness().at("x") == "a");
    CHECK(e.witness().at("y") == "b");
    CHECK(e.witness().at("z") == "c");
  }
}

TEST_CASE("closure of a three-point graph") {
  WeightedGraph g;
  g.objects = {"a", "b", "c"};
  g.edges = {{0, 1, val("1")}, {1, 2, val("1")}, {0, 2, val("5")}};
  Space s = closure(g);
  CHECK(s.dist(0, 2) == val("2"));
  CHECK(s.dist(2, 0) == ExtNN::infinity());
}

TEST_CASE("closure leaves unreachable pairs infinite") {
  WeightedGraph g;
  g.objects = {"a", "b"};
  Space s = closure(g);
  CHECK(s.dist(0, 1) == ExtNN::infinity());
  CHECK(s.dist(1, 0) == ExtNN::infinity());
}

namespace {

WeightedGraph graph_of(const Space& s) {
  WeightedGraph g;
  g.objects = s.objects();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j && !s.dist(i, j).is_infinite()) {
        g.edges.push_back({i, j, s.dist(i, j)});
      }
    }
  }
  return g;
}

}  // namespace

TEST_CASE("closure is idempotent") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Space s = closure(testutil::random_graph(rng, 5, false));
    Space again = closure(graph_of(s));
    CHECK(s == again);
  }
}

TEST_CASE("closure agrees with simple-path enumeration") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    WeightedGraph g = testutil::random_graph(rng, 5, false);
    Space s = closure(g);
    auto oracle = testutil::oracle_all_pairs(g);
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        CHECK(s.dist(x, y) == oracle[x][y]);
      }
    }
  }
}

TEST_CASE("closure output is pointwise below the input weights") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    WeightedGraph g = testutil::random_graph(rng, 5, false);
    Space s = closure(g);
    for (const auto& e : g.edges) {
      if (e.src != e.dst) CHECK(s.dist(e.src, e.dst) <= e.weight);
    }
  }
}

TEST_CASE("opposite transposes and is an involution") {
  Space s = space({"a", "b"}, {{"0", "1"}, {"2", "0"}});
  Space o = opposite(s);
  CHECK(o.dist(0, 1) == val("2"));
  CHECK(o.dist(1, 0) == val("1"));
  CHECK(opposite(o) == s);

  Space sym = space({"a", "b"}, {{"0", "1"}, {"1", "0"}});
  CHECK(opposite(sym) == sym);
}

TEST_CASE("symmetry and gauntness predicates") {
  CHECK(is_symmetric(space({"a", "b"}, {{"0", "1"}, {"1", "0"}})));
  CHECK(is_gaunt(space({"a", "b"}, {{"0", "1"}, {"1", "0"}})));
  Space indisc = space({"a", "b"}, {{"0", "0"}, {"0", "0"}});
  CHECK(is_symmetric(indisc));
  CHECK_FALSE(is_gaunt(indisc));
  Space asym = space({"a", "b"}, {{"0", "1"}, {"2", "0"}});
  CHECK_FALSE(is_symmetric(asym));
  CHECK(is_gaunt(asym));
}

TEST_CASE("iso partition blocks") {
  Space gaunt = space({"a", "b"}, {{"0", "1"}, {"1", "0"}});
  CHECK(iso_partition(gaunt).blocks.size() == 2);

  Space pair_apart = space({"a", "b", "c"},
                           {{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "0"}});
  IsoPartition p = iso_partition(pair_apart);
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.blocks[0] == std::vector<std::size_t>{0, 1});
  CHECK(p.blocks[1] == std::vector<std::size_t>{2});
}

TEST_CASE("iso partition matches relation transitive closure") {
  // chain a~b, b~c at zero collapses to one block
  Space chain = space({"a", "b", "c"},
                      {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
  CHECK(iso_partition(chain).blocks.size() == 1);

  Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    Space s = random_space(rng, 6, rng.coin());
    const std::size_t n = s.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) rel[x][y] = s.isomorphic(x, y);
    }
    for (std::size_t k = 0; k < n; ++k) {  // independent transitive closure
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (rel[x][k] && rel[k][y]) rel[x][y] = true;
        }
      }
    }
    IsoPartition p = iso_partition(s);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        CHECK((p.block_of[x] == p.block_of[y]) == rel[x][y]);
      }
    }
  }
}

TEST_CASE("product with a point is isometric to the original") {
  Space s = space({"a", "b"}, {{"0", "3/2"}, {"1", "0"}});
  Space pt = space({"p"}, {{"0"}});
  Space prod = product(s, pt);
  REQUIRE(prod.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(prod.dist(i, j) == s.dist(i, j));
    }
  }
}

TEST_CASE("coproduct of two points sits at mutual infinity") {
  Space pt = space({"p"}, {{"0"}});
  Space co = coproduct(pt, pt);
  REQUIRE(co.size() == 2);
  CHECK(co.dist(0, 1) == ExtNN::infinity());
  CHECK(co.dist(1, 0) == ExtNN::infinity());
}

namespace {

// All short maps from t into s, by exhaustive enumeration.
std::vector<std::vector<std::size_t>> all_short_maps(const Space& t,
                                                     const Space& s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> assign(t.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == t.size()) {
      out.push_back(assign);
      return;
    }
    for (std::size_t c = 0; c < s.size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = !(t.dist(i, j) < s.dist(c, assign[j])) &&
             !(t.dist(j, i) < s.dist(assign[j], c));
      }
      if (!ok) continue;
      assign[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("product universal property by cone enumeration") {
  Space a = space({"a1", "a2"}, {{"0", "1"}, {"1", "0"}});
  Space b = space({"b1", "b2"}, {{"0", "1/2"}, {"3/2", "0"}});
  Space prod = product(a, b);
  // projections
  std::vector<std::size_t> pa(prod.size()), pb(prod.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      pa[i * b.size() + j] = i;
      pb[i * b.size() + j] = j;
    }
  }
  SpaceMap proj_a = SpaceMap::make(prod, a, pa);
  SpaceMap proj_b = SpaceMap::make(prod, b, pb);

  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    Space t = random_space(rng, 3, false);
    for (const auto& f : all_short_maps(t, a)) {
      for (const auto& g : all_short_maps(t, b)) {
        // count mediating maps: must be exactly one
        int mediating = 0;
        for (const auto& m : all_short_maps(t, prod)) {
          bool matches = true;
          for (std::size_t x = 0; x < t.size(); ++x) {
            matches = matches && pa[m[x]] == f[x] && pb[m[x]] == g[x];
          }
          if (matches) ++mediating;
        }
        CHECK(mediating == 1);
      }
    }
  }
}

TEST_CASE("coproduct universal property by cocone enumeration") {
  Space a = space({"a1"}, {{"0"}});
  Space b = space({"b1", "b2"}, {{"0", "1"}, {"1", "0"}});
  Space co = coproduct(a, b);
  Rng rng(29);
  for (int i = 0; i < 10; ++i) {
    Space t = random_space(rng, 3, false);
    auto from_a = all_short_maps(a, t);
    auto from_b = all_short_maps(b, t);
    auto from_co = all_short_maps(co, t);
    // maps out of the coproduct correspond exactly to pairs
    CHECK(from_co.size() == from_a.size() * from_b.size());
  }
}

TEST_CASE("seq distances match the dyadic formula") {
  CHECK(seq_dist(2, 5) == val("7/16"));
  CHECK(seq_dist(0, 3) == val("7/4"));
  CHECK(seq_dist(4, 4) == val("0"));
  CHECK(seq_dist(5, 2) == seq_dist(2, 5));
}

TEST_CASE("seq telescoping: monotone chains add exactly") {
  for (std::size_t a = 0; a <= 12; ++a) {
    for (std::size_t b = a; b <= 12; ++b) {
      for (std::size_t c = b; c <= 12; ++c) {
        CHECK(seq_dist(a, b) + seq_dist(b, c) == seq_dist(a, c));
      }
    }
  }
}

TEST_CASE("seq spaces are valid and symmetric for all depths up to 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    Space s = seq_space(n);  // validation runs inside
    CHECK(is_symmetric(s));
    CHECK(is_gaunt(s));
  }
}

TEST_CASE("seqbar appends the geometric tail point") {
  SeqBar bar = seqbar_space(5);
  CHECK(bar.space.size() == 6);
  CHECK(bar.space.dist(3, 5) == val("1/4"));
  CHECK(bar.space.dist(0, 5) == val("2"));
  // the tail value is the limit of the partial sums: remainder halves
  for (std::size_t m = 4; m <= 12; ++m) {
    ExtNN remainder = hom(seq_dist(3, m), bar.space.dist(3, 5));
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), m - 1);
    CHECK(remainder == ExtNN(mpq_class(1) / mpq_class(den)));
  }
  // triangle inequality holds exactly for all depths (validated inside)
  for (std::size_t n = 1; n <= 12; ++n) CHECK(seqbar_space(n).space.size() == n + 1);
}
