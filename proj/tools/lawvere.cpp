// Command-line surface over the core library: every verb reads JSON
// documents, writes one deterministic JSON document to stdout, and
// reports diagnostics on stderr.
//
// Exit codes: 0 = success / property holds; 1 = property fails or no
// lift (a witness document is still emitted); 2 = malformed input or an
// undecided search budget.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lawvere/error.hpp"
#include "lawvere/io.hpp"

namespace {

using namespace lawvere;

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kBadInput = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read file: " + path, {{"path", path}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelId model_from(const std::string& name) {
  auto m = parse_model(name);
  if (!m) throw Error("bad-option", "unknown model: " + name, {{"model", name}});
  return *m;
}

int run_validate(const std::string& path) {
  std::string text = slurp(path);
  try {
    Space s = io::parse_space(text);
    std::cout << io::emit_space(s);
    return kOk;
  } catch (const Error& e) {
    // axiom violations answer the question; anything else is bad input
    if (e.code() == "nonzero-diagonal" || e.code() == "triangle-violation" ||
        e.code() == "duplicate-name") {
      std::cout << io::emit_diagnostic(e);
      return kPropertyFails;
    }
    throw;
  }
}

int run_close(const std::string& path) {
  std::cout << io::emit_space(closure(io::parse_graph(slurp(path))));
  return kOk;
}

int run_quotient(const std::string& path) {
  GauntQuotient q = gaunt_quotient(io::parse_space(slurp(path)));
  std::cout << io::emit_map(q.map);
  return kOk;
}

int run_opposite(const std::string& path) {
  std::cout << io::emit_space(opposite(io::parse_space(slurp(path))));
  return kOk;
}

int run_presheaf_dist(const std::string& f_path, const std::string& g_path) {
  Presheaf f = io::parse_presheaf(slurp(f_path));
  Presheaf g = io::parse_presheaf(slurp(g_path));
  std::cout << io::emit_value(presheaf_dist(f, g));
  return kOk;
}

int run_has_dual(const std::string& path) {
  Presheaf f = io::parse_presheaf(slurp(path));
  DualVerdict v = has_dual(f);
  std::cout << io::emit_dual_verdict(f, v);
  return v.has_dual ? kOk : kPropertyFails;
}

int run_classify(const std::string& model, const std::string& path) {
  ModelId m = model_from(model);
  SpaceMap f = io::parse_map(slurp(path));
  std::cout << io::emit_classification(m, classify(f, m));
  return kOk;
}

int run_factorize(const std::string& model, const std::string& axiom,
                  const std::string& path) {
  ModelId m = model_from(model);
  FactorAxiom ax;
  if (axiom == "m4") {
    ax = FactorAxiom::m4;
  } else if (axiom == "m5") {
    ax = FactorAxiom::m5;
  } else {
    throw Error("bad-option", "axiom must be m4 or m5", {{"axiom", axiom}});
  }
  SpaceMap f = io::parse_map(slurp(path));
  std::cout << io::emit_factorization(factorize(f, m, ax));
  return kOk;
}

int run_lift(const std::string& path, const std::string& generator,
             std::size_t seqbar_depth) {
  std::string text = slurp(path);
  if (!generator.empty()) {
    SpaceMap f = io::parse_map(text);
    RlpVerdict v = [&] {
      if (generator == "delta") return rlp_delta_search(f);
      if (generator == "gamma") return rlp_gamma_search(f);
      if (generator == "iota-seq") return rlp_iota_seq_search(f, seqbar_depth);
      throw Error("bad-option", "generator must be delta, gamma, or iota-seq",
                  {{"generator", generator}});
    }();
    if (v.holds) {
      LiftResult ok{LiftStatus::found, std::nullopt, 0};
      std::cout << io::emit_lift_verdict(ok);
      return kOk;
    }
    std::cout << io::emit_square(*v.witness);
    return kPropertyFails;
  }
  LiftSquare sq = io::parse_square(text);
  LiftResult r = solve_lift(sq);
  std::cout << io::emit_lift_verdict(r);
  switch (r.status) {
    case LiftStatus::found: return kOk;
    case LiftStatus::none: return kPropertyFails;
    case LiftStatus::exhausted: return kBadInput;
  }
  return kBadInput;
}

int run_axioms(const std::string& model, std::uint64_t seed, int cases,
               int max_objects) {
  if (model == "karoubian") {
    KaroubiAxiomReport report = check_karoubian_axioms(seed, cases, max_objects);
    std::cout << io::emit_karoubi_report(report);
    return report.all_pass() ? kOk : kPropertyFails;
  }
  AxiomReport report = check_axioms(model_from(model), seed, cases, max_objects);
  std::cout << io::emit_report(report);
  return report.all_pass() ? kOk : kPropertyFails;
}

int run_karoubi_envelope(const std::string& path) {
  Envelope env = envelope(io::parse_fincat(slurp(path)));
  std::cout << io::emit_functor(env.inclusion);
  return kOk;
}

int run_karoubi_idempotents(const std::string& path) {
  std::cout << io::emit_idempotents(io::parse_fincat(slurp(path)));
  return kOk;
}

int run_karoubi_classify(const std::string& path) {
  CatFunctor f = io::parse_functor(slurp(path));
  std::cout << io::emit_karoubi_classification(
      is_pastoral(f), functor_flags(f).injective_on_objects, is_idfibration(f));
  return kOk;
}

int run_karoubi_factorize(const std::string& path, const std::string& axiom) {
  CatFunctor f = io::parse_functor(slurp(path));
  if (axiom == "m4") {
    std::cout << io::emit_karoubi_factorization(factorize_karoubian_m4(f));
  } else {
    std::cout << io::emit_karoubi_factorization(factorize_karoubian(f));
  }
  return kOk;
}

int run_karoubi_lift(const std::string& path) {
  CatLiftSquare sq = io::parse_cat_square(slurp(path));
  CatLiftResult r = solve_cat_lift(sq);
  std::cout << io::emit_cat_lift_verdict(r);
  switch (r.status) {
    case CatLiftStatus::found: return kOk;
    case CatLiftStatus::none: return kPropertyFails;
    case CatLiftStatus::exhausted: return kBadInput;
  }
  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for Lawvere metric spaces, their model "
               "structures, and the Karoubi envelope"};
  app.require_subcommand(1);

  std::string path, second_path, model, axiom = "m5", generator;
  std::uint64_t seed = 1;
  int cases = 50;
  int max_objects = 6;
  std::size_t seqbar_depth = 4;

  auto* validate = app.add_subcommand("validate", "certify a space document");
  validate->add_option("space", path)->required();

  auto* close = app.add_subcommand("close", "min-plus closure of a graph");
  close->add_option("graph", path)->required();

  auto* quotient = app.add_subcommand("quotient", "gaunt quotient map");
  quotient->add_option("space", path)->required();

  auto* opposite = app.add_subcommand("opposite", "transpose distances");
  opposite->add_option("space", path)->required();

  auto* pdist = app.add_subcommand("presheaf-dist", "directed presheaf distance");
  pdist->add_option("f", path)->required();
  pdist->add_option("g", second_path)->required();

  auto* dual = app.add_subcommand("has-dual", "Cauchy-completion membership");
  dual->add_option("presheaf", path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify a short map");
  classify_cmd->add_option("--model", model)->required();
  classify_cmd->add_option("map", path)->required();

  auto* factorize_cmd = app.add_subcommand("factorize", "m4/m5 factorization");
  factorize_cmd->add_option("--model", model)->required();
  factorize_cmd->add_option("--axiom", axiom)->check(CLI::IsMember({"m4", "m5"}));
  factorize_cmd->add_option("map", path)->required();

  auto* lift = app.add_subcommand("lift", "solve a lifting problem");
  lift->add_option("--generator", generator)
      ->check(CLI::IsMember({"delta", "gamma", "iota-seq"}));
  lift->add_option("--seqbar-depth", seqbar_depth)->check(CLI::Range(1, 16));
  lift->add_option("input", path)->required();

  auto* axioms = app.add_subcommand("axioms", "randomized model axiom checker");
  axioms->add_option("--model", model)->required();
  axioms->add_option("--seed", seed);
  axioms->add_option("--cases", cases);
  axioms->add_option("--max-objects", max_objects);

  auto* karoubi = app.add_subcommand("karoubi", "finite 1-category toolkit");
  karoubi->require_subcommand(1);
  auto* kenv = karoubi->add_subcommand("envelope", "Karoubi envelope inclusion");
  kenv->add_option("category", path)->required();
  auto* kidem = karoubi->add_subcommand("idempotents", "list idempotents");
  kidem->add_option("category", path)->required();
  auto* kclassify = karoubi->add_subcommand("classify", "Karoubian classes");
  kclassify->add_option("functor", path)->required();
  auto* kfact = karoubi->add_subcommand("factorize", "Karoubian factorization");
  kfact->add_option("--axiom", axiom)->check(CLI::IsMember({"m4", "m5"}));
  kfact->add_option("functor", path)->required();
  auto* klift = karoubi->add_subcommand("lift", "solve a functor square");
  klift->add_option("square", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage or message to the right stream
    return e.get_name() == "CallForHelp" ? kOk : kBadInput;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(path);
    if (app.got_subcommand(close)) return run_close(path);
    if (app.got_subcommand(quotient)) return run_quotient(path);
    if (app.got_subcommand(opposite)) return run_opposite(path);
    if (app.got_subcommand(pdist)) return run_presheaf_dist(path, second_path);
    if (app.got_subcommand(dual)) return run_has_dual(path);
    if (app.got_subcommand(classify_cmd)) return run_classify(model, path);
    if (app.got_subcommand(factorize_cmd)) {
      return run_factorize(model, axiom, path);
    }
    if (app.got_subcommand(lift)) return run_lift(path, generator, seqbar_depth);
    if (app.got_subcommand(axioms)) {
      return run_axioms(model, seed, cases, max_objects);
    }
    if (app.got_subcommand(karoubi)) {
      if (karoubi->got_subcommand(kenv)) return run_karoubi_envelope(path);
      if (karoubi->got_subcommand(kidem)) return run_karoubi_idempotents(path);
      if (karoubi->got_subcommand(kclassify)) return run_karoubi_classify(path);
      if (karoubi->got_subcommand(kfact)) {
        return run_karoubi_factorize(path, axiom);
      }
      if (karoubi->got_subcommand(klift)) return run_karoubi_lift(path);
    }
  } catch (const lawvere::Error& e) {
    std::cerr << lawvere::io::emit_diagnostic(e);
    return kBadInput;
  }
  return kBadInput;
}
