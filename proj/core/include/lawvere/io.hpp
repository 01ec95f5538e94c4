#pragma once

#include <string>

#include "lawvere/cauchy.hpp"
#include "lawvere/error.hpp"
#include "lawvere/karoubi.hpp"
#include "lawvere/model.hpp"
#include "lawvere/presheaf.hpp"

namespace lawvere::io {

// JSON document formats. Every value document round-trips: parse of an
// emitted document yields an equal value, and emission is
// byte-deterministic (fixed key order, 2-space indentation).
//
//   rplus-space     {"type","objects","dist"}
//   rplus-graph     {"type","objects","edges":[{"src","dst","w"}]}
//   rplus-map       {"type","dom","cod","assign"}
//   rplus-presheaf  {"type","base","values"}
//   rplus-epseq     {"type","space","prefix","cycle"}
//   rplus-square    {"type","top","bottom","left","right"}
//   fincat          {"type","objects","morphisms","identity","compose"}
//   fincat-functor  {"type","dom","cod","on_objects","on_morphisms"}
//   fincat-square   {"type","top","bottom","left","right"}
//
// Distances encode as "p/q", "p", or "inf". Parsers throw Error
// ("malformed-json" or "bad-document"); semantic validation is
// delegated to the module factories, so their diagnostics pass through.

std::string doc_type(const std::string& text);

Space parse_space(const std::string& text);
WeightedGraph parse_graph(const std::string& text);
SpaceMap parse_map(const std::string& text);
Presheaf parse_presheaf(const std::string& text);
EPSeq parse_epseq(const std::string& text);
LiftSquare parse_square(const std::string& text);
FinCat parse_fincat(const std::string& text);
CatFunctor parse_functor(const std::string& text);
CatLiftSquare parse_cat_square(const std::string& text);

std::string emit_space(const Space& s);
std::string emit_graph(const WeightedGraph& g);
std::string emit_map(const SpaceMap& m);
std::string emit_presheaf(const Presheaf& p);
std::string emit_epseq(const EPSeq& s);
std::string emit_square(const LiftSquare& sq);
std::string emit_fincat(const FinCat& c);
std::string emit_functor(const CatFunctor& f);
std::string emit_cat_square(const CatLiftSquare& sq);

// Output-only documents.
std::string emit_value(const ExtNN& v);
std::string emit_classification(ModelId m, const Classification& c);
std::string emit_karoubi_classification(bool weq, bool cof, bool fib);
std::string emit_dual_verdict(const Presheaf& f, const DualVerdict& v);
std::string emit_factorization(const Factorization& f);
std::string emit_karoubi_factorization(const KaroubiFactorization& f);
std::string emit_lift_verdict(const LiftResult& r);
std::string emit_cat_lift_verdict(const CatLiftResult& r);
std::string emit_idempotents(const FinCat& c);
std::string emit_report(const AxiomReport& r);
std::string emit_karoubi_report(const KaroubiAxiomReport& r);
std::string emit_diagnostic(const Error& e);

}  // namespace lawvere::io
