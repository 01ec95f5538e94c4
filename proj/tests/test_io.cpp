#include <doctest.h>

#include "lawvere/error.hpp"
#include "lawvere/gen.hpp"
#include "lawvere/io.hpp"

#include "helpers.hpp"

using namespace lawvere;
using testutil::space;
using testutil::val;

TEST_CASE("space documents round-trip") {
  Rng rng(241);
  for (int i = 0; i < 25; ++i) {
    Space s = random_space(rng, 6, rng.coin());
    std::string doc = io::emit_space(s);
    CHECK(io::parse_space(doc) == s);
    CHECK(io::emit_space(io::parse_space(doc)) == doc);
    CHECK(io::doc_type(doc) == "rplus-space");
  }
}

TEST_CASE("graph documents round-trip") {
  Rng rng(251);
  for (int i = 0; i < 25; ++i) {
    WeightedGraph g = testutil::random_graph(rng, 5, false);
    WeightedGraph back = io::parse_graph(io::emit_graph(g));
    CHECK(back.objects == g.objects);
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      CHECK(back.edges[k].src == g.edges[k].src);
      CHECK(back.edges[k].dst == g.edges[k].dst);
      CHECK(back.edges[k].weight == g.edges[k].weight);
    }
  }
}

TEST_CASE("map, presheaf, epseq documents round-trip") {
  Rng rng(257);
  for (int i = 0; i < 25; ++i) {
    SpaceMap f = random_map(rng, 5, true);
    CHECK(io::parse_map(io::emit_map(f)) == f);

    Presheaf p = testutil::random_presheaf(rng, f.dom());
    CHECK(io::parse_presheaf(io::emit_presheaf(p)) == p);

    EPSeq s = testutil::random_epseq(rng, f.dom());
    EPSeq back = io::parse_epseq(io::emit_epseq(s));
    CHECK(back.space() == s.space());
    CHECK(back.prefix() == s.prefix());
    CHECK(back.cycle() == s.cycle());
  }
}

TEST_CASE("square documents round-trip") {
  Rng rng(263);
  SpaceMap f = random_map(rng, 4, false);
  LiftSquare sq = LiftSquare::make(f, SpaceMap::identity(f.dom()),
                                   SpaceMap::identity(f.cod()), f);
  LiftSquare back = io::parse_square(io::emit_square(sq));
  CHECK(back.top() == sq.top());
  CHECK(back.left() == sq.left());
  CHECK(back.right() == sq.right());
  CHECK(back.bottom() == sq.bottom());
}

TEST_CASE("fincat and functor documents round-trip") {
  Rng rng(269);
  for (int i = 0; i < 20; ++i) {
    FinCat c = testutil::random_fincat(rng);
    CHECK(io::parse_fincat(io::emit_fincat(c)) == c);
    FinCat d = testutil::random_fincat(rng);
    CatFunctor f = testutil::random_functor_between(rng, c, d);
    CHECK(io::parse_functor(io::emit_functor(f)) == f);
  }
  CatFunctor sigma = sigma_functor();
  CatLiftSquare sq = CatLiftSquare::make(
      sigma, CatFunctor::identity(idem_cat()),
      CatFunctor::identity(split_cat()), sigma);
  CatLiftSquare back = io::parse_cat_square(io::emit_cat_square(sq));
  CHECK(back.top() == sq.top());
  CHECK(back.bottom() == sq.bottom());
}

TEST_CASE("values keep their canonical encoding through documents") {
  Space s = space({"a", "b"}, {{"0", "2/4"}, {"6/4", "0"}});
  std::string doc = io::emit_space(s);
  CHECK(doc.find("\"1/2\"") != std::string::npos);
  CHECK(doc.find("\"3/2\"") != std::string::npos);
}

TEST_CASE("malformed inputs raise tagged diagnostics") {
  try {
    io::parse_space("{nope");
    FAIL("expected malformed-json");
  } catch (const Error& e) {
    CHECK(e.code() == "malformed-json");
  }
  try {
    io::parse_space(R"({"type":"rplus-graph","objects":[],"edges":[]})");
    FAIL("expected bad-document");
  } catch (const Error& e) {
    CHECK(e.code() == "bad-document");
  }
  try {
    io::parse_space(
        R"({"type":"rplus-space","objects":["a"],"dist":[["-1"]]})");
    FAIL("expected bad value");
  } catch (const Error& e) {
    CHECK(e.code() == "bad-document");
  }
  // semantic failures surface the module diagnostics unchanged
  try {
    io::parse_space(
        R"({"type":"rplus-space","objects":["a"],"dist":[["1"]]})");
    FAIL("expected nonzero-diagonal");
  } catch (const Error& e) {
    CHECK(e.code() == "nonzero-diagonal");
  }
}

TEST_CASE("reports serialize deterministically") {
  AxiomReport r = check_axioms(ModelId::cauchy, 3, 5, 4);
  CHECK(io::emit_report(r) == io::emit_report(check_axioms(ModelId::cauchy, 3, 5, 4)));
  CHECK(io::emit_report(r).find("\"axiom-report\"") != std::string::npos);
}

TEST_CASE("counterexamples embed replayable map documents") {
  Rng rng(271);
  SpaceMap f = random_map(rng, 3, true);
  AxiomReport r;
  r.model = ModelId::metric;
  r.seed = 1;
  r.cases = 1;
  r.max_objects = 3;
  r.results = {AxiomCheck{"M1", false, 1}};
  r.counterexamples.push_back(Counterexample{"M1", "synthetic", {{"f", f}}});
  std::string doc = io::emit_report(r);
  CHECK(doc.find("\"synthetic\"") != std::string::npos);
  CHECK(doc.find("\"rplus-map\"") != std::string::npos);
  CHECK(doc.find("\"pass\": false") != std::string::npos);
}
