// Command-line front end. Every subcommand builds a Report and prints it.

#include "fuzzyfo/errors.hpp"
#include "fuzzyfo/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fuzzyfo;

namespace {

struct RunConfig {
  std::string vocab_path;
  std::string formula_path;
  std::string expr;
  std::string structure_path;
  std::string output_path;
  std::string format = "text";
  std::string set;
  std::vector<std::string> chains;
  std::size_t max_domain = 2;
  std::size_t max_depth = 2;
  std::size_t max_k = kPhiChainCap;
  std::size_t n = 10;
  std::size_t enum_size = 5;
  unsigned jobs = 1;
  bool verify = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// '#' never occurs in the formula grammar, so it starts a comment.
std::string strip_comments(const std::string& text) {
  std::string out;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (!comment) out += ch;
  }
  return out;
}

struct Input {
  Formula formula = Formula::top();
  Vocabulary vocab;
};

Input load_formula(const RunConfig& cfg) {
  if (cfg.formula_path.empty() == cfg.expr.empty())
    throw Error("give exactly one of --formula and --expr");
  const std::string text =
      cfg.expr.empty() ? strip_comments(read_file(cfg.formula_path)) : cfg.expr;
  Input in;
  if (!cfg.vocab_path.empty()) {
    in.vocab = parse_vocabulary(read_file(cfg.vocab_path));
    in.formula = parse_formula(text, in.vocab);
  } else {
    in.formula = parse_formula(text);
    in.vocab = infer_vocabulary(in.formula);
  }
  return in;
}

std::size_t parse_size(const std::string& spec, const std::string& digits) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(digits, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (digits.empty() || pos != digits.size()) throw Error("bad chain size in '" + spec + "'");
  return v;
}

std::vector<FiniteChain> parse_chain_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("bad chain spec '" + spec + "' (expected luk:k, godel:k, file:path or enum:n)");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "luk") return {make_lukasiewicz_chain(parse_size(spec, arg))};
  if (kind == "godel") return {make_godel_chain(parse_size(spec, arg))};
  if (kind == "file") return {parse_chain(read_file(arg), "file:" + arg)};
  if (kind == "enum") {
    // Every chain of size 2..n.
    const std::size_t n = parse_size(spec, arg);
    if (n < 2) throw InvalidSize("enum:n needs n >= 2");
    std::vector<FiniteChain> out;
    for (std::size_t s = 2; s <= n; ++s)
      for (auto& c : enumerate_mtl_chains(s)) out.push_back(std::move(c));
    return out;
  }
  throw Error("unknown chain family '" + kind + "' in '" + spec + "'");
}

ChainClass load_chains(const RunConfig& cfg) {
  if (cfg.chains.empty()) throw Error("at least one --chain is required");
  std::vector<FiniteChain> all;
  for (const auto& spec : cfg.chains)
    for (auto& c : parse_chain_spec(spec)) all.push_back(std::move(c));
  return ChainClass(std::move(all));
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.max_domain = cfg.max_domain;
  o.jobs = cfg.jobs;
  return o;
}

std::string flag(bool b) { return b ? "true" : "false"; }

Report cmd_parse(const RunConfig& cfg) {
  const Input in = load_formula(cfg);
  const Classification c = classify(in.formula);
  Report r;
  r.section("formula");
  r.field("printed", to_string(in.formula));
  std::string free;
  for (const auto& v : free_variables(in.formula)) free += (free.empty() ? "" : ", ") + v;
  r.field("free variables", free.empty() ? "none" : free);
  r.field("atoms", std::to_string(atoms_of(in.formula).size()));
  r.section("classification");
  r.field("sentence", flag(c.is_sentence));
  r.field("literal", flag(c.is_literal));
  r.field("lattice literal combination", flag(c.is_lattice_literal_combination));
  r.field("purely universal", flag(c.is_purely_universal));
  r.field("relational", flag(c.is_relational));
  r.field("quantifier free", flag(c.is_quantifier_free));
  r.field("star fragment", flag(c.in_star_fragment));
  r.section("vocabulary");
  r.block("declarations", format_vocabulary(in.vocab));
  return r;
}

Report cmd_eval(const RunConfig& cfg) {
  const Input in = load_formula(cfg);
  if (cfg.structure_path.empty()) throw Error("eval needs --structure");
  if (cfg.chains.size() != 1) throw Error("eval needs exactly one --chain");
  const StructureText st = parse_structure_text(read_file(cfg.structure_path), in.vocab);
  Report r;
  r.section("evaluation");
  r.field("formula", to_string(in.formula));
  if (cfg.chains.front() == "std") {
    const StdStructure m = realize_standard(st);
    r.field("chain", "std");
    r.field("value", eval(StandardChain{}, m, in.formula).str());
    return r;
  }
  const auto chains = parse_chain_spec(cfg.chains.front());
  if (chains.size() != 1) throw Error("eval needs a single chain, not a family");
  const FiniteChain& chain = chains.front();
  const Structure m = realize(st, chain);
  validate_structure(m, in.vocab, chain);
  r.field("chain", chain.label());
  r.field("value", format_value(eval(chain, m, in.formula), chain.size()));
  return r;
}

Report cmd_decide(const RunConfig& cfg) {
  const Input in = load_formula(cfg);
  const ChainClass k = load_chains(cfg);
  const SearchOptions opts = search_options(cfg);
  Verdict v;
  if (cfg.set == "taut0") {
    v = taut0_bounded(k, in.formula, opts);
  } else if (cfg.set == "satpos") {
    v = sat_pos_bounded(k, in.formula, opts);
  } else if (cfg.set == "tautlt1") {
    v = taut_lt1_bounded(k, in.formula, opts);
  } else if (cfg.set == "sat1") {
    v = sat1_bounded(k, in.formula, opts);
  } else {
    throw Error("unknown set '" + cfg.set + "' (expected taut0, tautlt1, satpos or sat1)");
  }
  Report r;
  r.section("input");
  r.field("formula", to_string(in.formula));
  r.field("set", cfg.set);
  add_verdict(r, "verdict", v, &k);
  return r;
}

Report cmd_star(const RunConfig& cfg) {
  const Input in = load_formula(cfg);
  Report r;
  r.section("star translation");
  r.field("input", to_string(in.formula));
  r.field("output", to_string(star_translate(in.formula)));
  return r;
}

Report cmd_herbrand(const RunConfig& cfg) {
  const Input in = load_formula(cfg);
  const auto universe = herbrand_universe(in.vocab, cfg.max_depth);
  Report r;
  r.section("herbrand universe");
  r.field("depth", std::to_string(cfg.max_depth));
  r.field("size", std::to_string(universe.size()));
  std::string terms;
  for (const auto& t : universe) terms += to_string(t) + "\n";
  r.block("terms", terms);
  add_verdict(r, "instantiation search", dual_herbrand_search(in.formula, cfg.max_depth));
  return r;
}

Report cmd_bsr(const RunConfig& cfg) {
  const Input in = load_formula(cfg);
  const ExistsForallPrefix p = exists_forall_prefix(in.formula);
  Report r;
  r.section("prefix form");
  r.field("existentials", std::to_string(p.existentials.size()));
  r.field("universals", std::to_string(p.universals.size()));
  r.field("matrix", to_string(p.matrix));
  r.field("domain bound", std::to_string(bsr_domain_bound(in.formula)));
  add_verdict(r, "satisfiability", bsr_decide(in.formula));
  return r;
}

Report cmd_reduce(const RunConfig& cfg, bool verify) {
  const Input in = load_formula(cfg);
  const ReductionTrace trace = hardness_reduce(in.formula, in.vocab);
  Report r;
  add_trace(r, trace);
  if (verify) {
    const ChainClass k = load_chains(cfg);
    ReductionBounds b;
    b.max_depth = cfg.max_depth;
    b.max_domain = cfg.max_domain;
    b.jobs = cfg.jobs;
    add_reduction_report(r, verify_reduction_instance(trace, k, b), k);
  }
  return r;
}

Report cmd_enum_chains(const RunConfig& cfg) {
  const auto chains = enumerate_mtl_chains(cfg.enum_size);
  Report r;
  r.section("enumeration");
  r.field("size", std::to_string(cfg.enum_size));
  r.field("count", std::to_string(chains.size()));
  for (const auto& c : chains) add_chain(r, c);
  return r;
}

Report cmd_check_lemma1(const RunConfig& cfg) {
  std::size_t count = 0;
  std::vector<std::string> failures;
  auto check = [&](const FiniteChain& c) {
    ++count;
    if (auto bad = check_square_meet_law(c)) failures.push_back(c.label() + " at #" + std::to_string(*bad));
  };
  Report r;
  r.section("square meet law");
  for (std::size_t s = 2; s <= cfg.enum_size; ++s) {
    const std::size_t before = count;
    for_each_mtl_chain(s, check);
    r.field("size " + std::to_string(s), std::to_string(count - before) + " chains");
  }
  for (std::size_t k = 2; k <= 12; ++k) {
    check(make_lukasiewicz_chain(k));
    check(make_godel_chain(k));
  }
  r.field("families", "luk:2..12, godel:2..12");
  r.field("chains checked", std::to_string(count));
  if (failures.empty()) {
    r.field("result", "all chains pass");
  } else {
    r.field("result", std::to_string(failures.size()) + " chains fail");
    std::string text;
    for (const auto& f : failures) text += f + "\n";
    r.block("failures", text);
  }
  return r;
}

Report cmd_phi_report(const RunConfig& cfg) {
  Report r;
  r.section("sentence");
  r.field("formula", to_string(phi_sentence()));
  add_phi_refutation(r, phi_fin_refutation(cfg.max_k));
  add_witness_table(r, cfg.n);
  return r;
}

Report cmd_phi_witness(const RunConfig& cfg) {
  Report r;
  add_phi_witness(r, cfg.n, phi_truncated_witness(cfg.n));
  return r;
}

void add_formula_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--vocab", cfg.vocab_path, "Vocabulary file");
  sub->add_option("--formula", cfg.formula_path, "Formula file");
  sub->add_option("--expr", cfg.expr, "Inline formula");
}

void add_chain_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--chain", cfg.chains, "Chain spec: luk:k, godel:k, file:path, enum:n (sizes 2..n)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzyfo: first-order fuzzy logic workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Report format: text or records");
  app.add_option("--output", cfg.output_path, "Write the report to this file");
  app.add_option("--jobs", cfg.jobs, "Worker threads for structure searches")->check(CLI::PositiveNumber);

  auto* parse = app.add_subcommand("parse", "Parse, print and classify a formula");
  add_formula_options(parse, cfg);

  auto* ev = app.add_subcommand("eval", "Evaluate a sentence in a structure");
  add_formula_options(ev, cfg);
  ev->add_option("--chain", cfg.chains, "Chain spec, or std for the standard chain");
  ev->add_option("--structure", cfg.structure_path, "Structure file");

  auto* decide = app.add_subcommand("decide", "Bounded membership search");
  add_formula_options(decide, cfg);
  add_chain_option(decide, cfg);
  decide->add_option("--set", cfg.set, "taut0, tautlt1, satpos or sat1")->required();
  decide->add_option("--max-domain", cfg.max_domain, "Largest domain size searched");

  auto* star = app.add_subcommand("star", "Star translation");
  add_formula_options(star, cfg);

  auto* herbrand = app.add_subcommand("herbrand", "Herbrand universe and instantiation search");
  add_formula_options(herbrand, cfg);
  herbrand->add_option("--max-depth", cfg.max_depth, "Largest term depth");

  auto* bsr = app.add_subcommand("bsr", "Exact satisfiability of relational exists-forall sentences");
  add_formula_options(bsr, cfg);

  auto* reduce = app.add_subcommand("reduce", "Reduction trace");
  add_formula_options(reduce, cfg);
  add_chain_option(reduce, cfg);
  reduce->add_flag("--verify", cfg.verify, "Verify the trace over the given chains");
  reduce->add_option("--max-domain", cfg.max_domain, "Largest domain size searched");
  reduce->add_option("--max-depth", cfg.max_depth, "Herbrand depth for the certificate");

  auto* verify = app.add_subcommand("verify-reduction", "Reduction trace plus verification");
  add_formula_options(verify, cfg);
  add_chain_option(verify, cfg);
  verify->add_option("--max-domain", cfg.max_domain, "Largest domain size searched");
  verify->add_option("--max-depth", cfg.max_depth, "Herbrand depth for the certificate");

  auto* enum_chains = app.add_subcommand("enum-chains", "List every MTL-chain of one size");
  enum_chains->add_option("--enum,--n", cfg.enum_size, "Chain size")->required();

  auto* lemma = app.add_subcommand("check-lemma1", "Check x^2 /\\ (~x)^2 = 0 on enumerated chains");
  lemma->add_option("--enum", cfg.enum_size, "Enumerate chains of sizes 2..n");

  auto* phi_report = app.add_subcommand("phi-report", "Finite refutation table and witness family");
  phi_report->add_option("--max-k", cfg.max_k, "Largest Lukasiewicz chain size");
  phi_report->add_option("--n", cfg.n, "Largest truncation in the witness table");

  auto* phi_witness = app.add_subcommand("phi-witness", "One truncated standard-chain witness");
  phi_witness->add_option("--n", cfg.n, "Domain size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const ReportFormat format = parse_report_format(cfg.format);
    Report report;
    if (parse->parsed()) report = cmd_parse(cfg);
    else if (ev->parsed()) report = cmd_eval(cfg);
    else if (decide->parsed()) report = cmd_decide(cfg);
    else if (star->parsed()) report = cmd_star(cfg);
    else if (herbrand->parsed()) report = cmd_herbrand(cfg);
    else if (bsr->parsed()) report = cmd_bsr(cfg);
    else if (reduce->parsed()) report = cmd_reduce(cfg, cfg.verify);
    else if (verify->parsed()) report = cmd_reduce(cfg, true);
    else if (enum_chains->parsed()) report = cmd_enum_chains(cfg);
    else if (lemma->parsed()) report = cmd_check_lemma1(cfg);
    else if (phi_report->parsed()) report = cmd_phi_report(cfg);
    else report = cmd_phi_witness(cfg);

    const std::string text = report.render(format);
    if (cfg.output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      out << text;
      if (!out) throw Error("cannot write file '" + cfg.output_path + "'");
    }
    return 0;
  } catch (const ConsistencyFailure& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
