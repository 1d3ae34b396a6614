// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance --cli <path to fuzzyfo> [criterion numbers...]

#include "oracles.hpp"

#include "fuzzyfo/errors.hpp"
#include "fuzzyfo/phi.hpp"
#include "fuzzyfo/reduction.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace fuzzyfo;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ += (messages_.empty() ? "" : " | ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failures: " + messages_};
  }

 private:
  std::size_t failures_ = 0;
  std::string messages_;
};

std::vector<FiniteChain> chains_up_to(std::size_t n) {
  std::vector<FiniteChain> out;
  for (std::size_t s = 2; s <= n; ++s)
    for (auto& c : enumerate_mtl_chains(s)) out.push_back(std::move(c));
  return out;
}

// 1. Square meet law.
Outcome square_meet_law() {
  Checker check;
  std::size_t count = 0;
  auto visit = [&](const FiniteChain& c) {
    ++count;
    const auto bad = check_square_meet_law(c);
    check.expect(!bad, c.label() + " fails at #" + std::to_string(bad.value_or(0)));
    // Direct scan, independent of the library check.
    for (Rank a = 0; a < c.size(); ++a)
      check.expect(FiniteChain::meet(c.square(a), c.square(c.neg(a))) == c.bottom(),
                   c.label() + " scan fails at #" + std::to_string(a));
  };
  const std::size_t expected[] = {0, 0, 1, 2, 6, 22, 94};
  for (std::size_t s = 2; s <= 6; ++s) {
    const std::size_t before = count;
    for_each_mtl_chain(s, visit);
    check.expect(count - before == expected[s], "chain count for size " + std::to_string(s));
  }
  for (std::size_t k = 2; k <= 12; ++k) {
    visit(make_lukasiewicz_chain(k));
    visit(make_godel_chain(k));
  }
  return check.outcome(std::to_string(count) + " chains (sizes 2..6 enumerated, luk/godel 2..12)");
}

// 2. Propositional lemma over every lattice-literal AST of depth <= 4 on
// three closed atoms. An atom has depth 1, a negated atom depth 2, a binary
// node one more than its deeper child.
Outcome propositional_lemma() {
  const std::vector<Formula> atoms = {parse_formula("P(c)"), parse_formula("Q(c)"),
                                      parse_formula("R(c)")};
  auto next_level = [&](const std::vector<Formula>& prev) {
    std::vector<Formula> out = atoms;
    for (const auto& a : atoms) out.push_back(Formula::neg(a));
    for (int op = 0; op < 2; ++op)
      for (const auto& x : prev)
        for (const auto& y : prev) out.push_back(op == 0 ? Formula::meet(x, y) : Formula::join(x, y));
    return out;
  };
  const std::vector<Formula> level2 = next_level(atoms);
  const std::vector<Formula> level3 = next_level(level2);
  const std::size_t m = level3.size();
  const std::size_t corpus_size = 2 * atoms.size() + 2 * m * m;

  std::vector<Formula> stars;
  for (const auto& f : level3) stars.push_back(star_translate(f));

  // zero3[i]: star of level3[i] is 0 under every chain and valuation.
  // meet_zero[i*m+j], join_zero[i*m+j]: the same for level3[i] op level3[j],
  // read through the clauses (x /\ y)* = x* /\ y*, (x \/ y)* = x* \/ y*.
  std::vector<char> zero3(m, 1), meet_zero(m * m, 1), join_zero(m * m, 1);
  const std::vector<FiniteChain> chains = chains_up_to(4);
  std::size_t valuations = 0;
  std::vector<Rank> values(m);
  std::vector<char> is_zero(m);
  for (const auto& c : chains) {
    const std::size_t k = c.size();
    for (std::size_t code = 0; code < k * k * k; ++code) {
      ++valuations;
      PropositionalValuation<Rank> e;
      e[atoms[0].atom_key()] = static_cast<Rank>(code % k);
      e[atoms[1].atom_key()] = static_cast<Rank>(code / k % k);
      e[atoms[2].atom_key()] = static_cast<Rank>(code / (k * k));
      for (std::size_t i = 0; i < m; ++i) {
        values[i] = eval_propositional(c, e, stars[i]);
        is_zero[i] = values[i] == c.bottom();
        zero3[i] &= is_zero[i];
      }
      for (std::size_t i = 0; i < m; ++i) {
        char* mz = &meet_zero[i * m];
        char* jz = &join_zero[i * m];
        if (is_zero[i]) {
          for (std::size_t j = 0; j < m; ++j) jz[j] &= is_zero[j];
        } else {
          for (std::size_t j = 0; j < m; ++j) {
            mz[j] &= is_zero[j];
            jz[j] = 0;
          }
        }
      }
    }
  }

  Checker check;
  std::size_t contradictions = 0, sampled = 0;
  // Literals at depth 1 and 2 never are contradictions, and their stars are
  // refuted by the all-top (resp. all-bottom) valuation.
  for (std::size_t i = 0; i < 2 * atoms.size(); ++i) {
    check.expect(!is_classical_contradiction_prop(level3[i]), "literal classified as contradiction");
    check.expect(!zero3[i], "star of a literal is identically 0");
  }
  std::size_t index = 0;
  for (int op = 0; op < 2; ++op) {
    const auto& zero = op == 0 ? meet_zero : join_zero;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j, ++index) {
        const Formula f =
            op == 0 ? Formula::meet(level3[i], level3[j]) : Formula::join(level3[i], level3[j]);
        const bool classical = is_classical_contradiction_prop(f);
        contradictions += classical;
        check.expect(classical == static_cast<bool>(zero[i * m + j]), "biconditional fails on " + to_string(f));
        if (index % 97 != 0) continue;
        // Literal check on a sample: translate then evaluate directly.
        ++sampled;
        const Formula s = star_translate(f);
        bool all_zero = true;
        for (const auto& c : chains) {
          const std::size_t k = c.size();
          for (std::size_t code = 0; code < k * k * k && all_zero; ++code) {
            PropositionalValuation<Rank> e;
            e[atoms[0].atom_key()] = static_cast<Rank>(code % k);
            e[atoms[1].atom_key()] = static_cast<Rank>(code / k % k);
            e[atoms[2].atom_key()] = static_cast<Rank>(code / (k * k));
            all_zero = eval_propositional(c, e, s) == c.bottom();
          }
        }
        check.expect(all_zero == classical, "direct evaluation disagrees on " + to_string(f));
      }
    }
  }
  return check.outcome(std::to_string(corpus_size) + " formulas (" + std::to_string(contradictions) +
                       " contradictions), " + std::to_string(chains.size()) + " chains, " +
                       std::to_string(valuations) + " chain valuations, " + std::to_string(sampled) +
                       " re-evaluated directly");
}

// 3. Dual Herbrand search on a fixed contradiction corpus.
Outcome dual_herbrand() {
  const char* corpus[] = {
      "forall x. (P(x) /\\ ~P(f(x)))",
      "forall x. (P(x) /\\ ~P(x))",
      "forall x. forall y. (P(x) /\\ ~P(y))",
      "forall x. (P(x) /\\ ~P(f(f(x))) /\\ (~P(x) \\/ P(f(x))))",
      "forall x. (P(c) /\\ ~P(x))",
      "forall x. (Q(x,f(x)) /\\ ~Q(c,f(c)))",
      "forall x. ((P(x) \\/ Q(x)) /\\ ~P(x) /\\ ~Q(x))",
      "forall x. forall y. ((R(x,y) \\/ R(y,x)) /\\ ~R(x,x))",
      "forall x. ((~P(x) \\/ P(g(x))) /\\ P(c) /\\ ~P(g(g(c))))",
      "forall x. forall y. (S(x,f(y)) /\\ ~S(f(x),y))",
  };
  Checker check;
  std::string depths;
  for (const char* text : corpus) {
    const Formula f = parse_formula(text);
    const Verdict v = dual_herbrand_search(f, 2);
    const bool found = v.kind == Verdict::Kind::Decided && v.decision && v.herbrand;
    check.expect(found, std::string("no witness for ") + text);
    if (!found) continue;
    const HerbrandWitness& w = *v.herbrand;
    check.expect(w.depth <= 2, std::string("witness deeper than 2 for ") + text);
    check.expect(is_classical_contradiction_prop(w.conjunction),
                 std::string("witness is not a contradiction for ") + text);
    // The conjunction must be the meet of the listed matrix instances.
    const UniversalForm form = *split_universal(f);
    std::optional<Formula> rebuilt;
    for (const auto& tuple : w.instances) {
      check.expect(tuple.size() == form.variables.size(), "tuple arity");
      Formula inst = form.matrix;
      for (std::size_t i = 0; i < tuple.size() && i < form.variables.size(); ++i)
        inst = substitute(inst, form.variables[i], tuple[i]);
      rebuilt = rebuilt ? Formula::meet(*rebuilt, inst) : inst;
    }
    check.expect(rebuilt && *rebuilt == w.conjunction, std::string("conjunction mismatch for ") + text);
    depths += (depths.empty() ? "" : ",") + std::to_string(w.depth);
  }
  return check.outcome("10 contradictions, witness depths " + depths);
}

// 4. Three-way coherence on reduction outputs.
Outcome reduction_coherence() {
  struct Case {
    const char* text;
    bool contradiction;
  };
  const Case corpus[] = {
      {"exists x. (P(x) /\\ ~P(x))", true},
      {"forall x. (P(x) /\\ ~P(f(x)))", true},
      {"forall x. exists y. (R(x,y) /\\ ~R(x,y))", true},
      {"forall x. forall y. (P(x) /\\ ~P(y))", true},
      {"P(c) /\\ forall x. (P(x) -> P(f(x))) /\\ ~P(f(f(c)))", true},
      {"exists x. forall y. (R(x,y) /\\ ~R(y,x))", true},
      {"~forall x. (P(x) \\/ ~P(x))", true},
      {"forall x. (P(x) \\/ Q(x)) /\\ exists y. (~P(y) /\\ ~Q(y))", true},
      {"forall x. exists y. (P(x) -> ~P(y)) /\\ forall z. P(z)", true},
      {"forall x. P(x) /\\ ~P(c)", true},
      {"forall x. P(x)", false},
      {"forall x. (P(x) \\/ ~P(x))", false},
      {"forall x. exists y. R(x,y)", false},
      {"forall x. (P(x) \\/ ~P(f(x)))", false},
      {"exists x. P(x) /\\ exists y. ~P(y)", false},
      {"forall x. exists y. (P(x) <-> ~P(y))", false},
      {"forall x. (P(x) -> P(f(x))) /\\ P(c)", false},
      {"exists x. forall y. R(x,y)", false},
  };
  const ChainClass k(chains_up_to(4));
  ReductionBounds bounds;
  bounds.max_depth = 2;
  bounds.max_domain = 2;
  Checker check;
  std::size_t contradictions = 0;
  for (const Case& c : corpus) {
    const std::string where = std::string(" on ") + c.text;
    try {
      const ReductionTrace t = hardness_reduce(parse_formula(c.text));
      const ReductionReport r = verify_reduction_instance(t, k, bounds);
      SearchOptions opts;
      opts.max_domain = bounds.max_domain;
      if (c.contradiction) {
        ++contradictions;
        check.expect(r.status == ReductionReport::Status::Contradiction, "not certified" + where);
        check.expect(r.taut0 && r.taut0->kind == Verdict::Kind::Decided && r.taut0->decision,
                     "bounded taut0 not confirmed" + where);
        check.expect(r.lemma && r.lemma->kind == Verdict::Kind::Decided && r.lemma->decision,
                     "propositional lemma check missing" + where);
        check.expect(taut_lt1_bounded(k, t.star_output, opts).kind == Verdict::Kind::Exhausted,
                     "star output reaches 1" + where);
      } else {
        check.expect(r.status == ReductionReport::Status::NonContradiction, "not certified" + where);
        check.expect(r.lifted.size() == k.chains().size(), "lifted model missing" + where);
        for (const Witness& w : r.lifted)
          check.expect(w.value == k.chains()[w.chain_index].top(), "lifted value below 1" + where);
        check.expect(r.sat_pos.size() == k.chains().size(), "positive witness missing" + where);
        if (!r.lifted.empty()) {
          opts.max_domain = std::max(opts.max_domain, r.lifted.front().structure->domain_size);
          check.expect(taut_lt1_bounded(k, t.star_output, opts).kind == Verdict::Kind::Refuted,
                       "no value-1 structure" + where);
        }
      }
    } catch (const std::exception& e) {
      check.expect(false, std::string(e.what()) + where);
    }
  }
  return check.outcome(std::to_string(std::size(corpus)) + " inputs (" + std::to_string(contradictions) +
                       " contradictions) over " + std::to_string(k.chains().size()) + " chains of size <= 4");
}

// Random relational sentences for criterion 5.
class SentenceGenerator {
 public:
  explicit SentenceGenerator(std::uint64_t seed) : rng_(seed) {}

  // exists x.. forall u.. over up to two predicates of arity <= 2.
  std::string exists_forall() {
    pick_signature();
    const std::size_t e = below(3), u = below(3);
    vars_.clear();
    std::string prefix;
    for (std::size_t i = 0; i < e; ++i) {
      vars_.push_back(kExists[i]);
      prefix += std::string("exists ") + kExists[i] + ". ";
    }
    for (std::size_t i = 0; i < u; ++i) {
      vars_.push_back(kForall[i]);
      prefix += std::string("forall ") + kForall[i] + ". ";
    }
    constants_ = below(3);
    return prefix + "(" + matrix(2 + below(4)) + ")";
  }

  // A universal in front of an existential that the matrix depends on.
  std::string forall_exists() {
    pick_signature();
    vars_ = {"u", "x"};
    constants_ = below(2);
    std::string body = matrix(2 + below(3));
    body = "(" + body + ") /\\ " + literal_with("u", "x");
    switch (below(3)) {
      case 0:
        return "forall u. exists x. (" + body + ")";
      case 1:
        return "~exists u. forall x. ~(" + body + ")";
      default:
        return "forall u. (P(u) \\/ exists x. (" + body + "))";
    }
  }

 private:
  static constexpr const char* kExists[] = {"x", "y"};
  static constexpr const char* kForall[] = {"u", "v"};
  static constexpr const char* kConstants[] = {"a", "b"};

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  void pick_signature() {
    static const std::vector<std::vector<std::pair<const char*, std::size_t>>> sigs = {
        {{"P", 1}}, {{"P", 1}, {"Q", 1}}, {{"P", 1}, {"R", 2}}, {{"R", 2}}, {{"R", 2}, {"S", 2}}};
    sig_ = sigs[below(sigs.size())];
  }

  std::string term() {
    const std::size_t n = vars_.size() + constants_;
    if (n == 0) return "a";
    const std::size_t i = below(n);
    return i < vars_.size() ? vars_[i] : kConstants[i - vars_.size()];
  }

  std::string literal() {
    const auto& [p, arity] = sig_[below(sig_.size())];
    std::string atom = std::string(p) + "(" + term();
    if (arity == 2) atom += "," + term();
    atom += ")";
    return below(2) ? atom : "~" + atom;
  }

  std::string literal_with(const std::string& s, const std::string& t) {
    for (const auto& [p, arity] : sig_)
      if (arity == 2) return std::string(p) + "(" + s + "," + t + ")";
    return std::string(sig_.front().first) + "(" + t + ")";
  }

  std::string matrix(std::size_t leaves) {
    if (leaves <= 1) return literal();
    const std::size_t left = 1 + below(leaves - 1);
    const std::string a = matrix(left);
    const std::string b = matrix(leaves - left);
    switch (below(5)) {
      case 0:
      case 1:
        return "(" + a + " /\\ " + b + ")";
      case 2:
      case 3:
        return "(" + a + " \\/ " + b + ")";
      default:
        return "(" + a + " -> " + b + ")";
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::pair<const char*, std::size_t>> sig_;
  std::vector<std::string> vars_;
  std::size_t constants_ = 0;
};

Vocabulary relational_vocabulary(const Formula& f) {
  Vocabulary v = infer_vocabulary(f);
  v.set_relational(true);
  return v;
}

// 5. Bernays-Schoenfinkel decision against brute force; Skolem obstruction.
Outcome bernays_schoenfinkel() {
  SentenceGenerator gen(0x5eed'0001);
  Checker check;
  std::size_t satisfiable = 0;
  for (int i = 0; i < 200; ++i) {
    const std::string text = gen.exists_forall();
    try {
      const Formula f = parse_formula(text);
      const std::size_t bound = bsr_domain_bound(f);
      const Verdict v = bsr_decide(f);
      const std::size_t least = oracle::brute_force_model_size(f, bound + 2);
      satisfiable += v.decision;
      check.expect(v.kind == Verdict::Kind::Decided && v.decision == (least != 0),
                   "disagreement on " + text);
      // Existentials at the front only need Skolem constants.
      const PurelyUniversal pu = to_purely_universal(f, relational_vocabulary(f));
      check.expect(bsr_decide(pu.formula).decision == v.decision, "purely universal form differs on " + text);
    } catch (const std::exception& e) {
      check.expect(false, text + ": " + e.what());
    }
  }
  std::size_t violations = 0;
  for (int i = 0; i < 100; ++i) {
    const std::string text = gen.forall_exists();
    const Formula f = parse_formula(text);
    bool raised = false;
    try {
      to_purely_universal(f, relational_vocabulary(f));
    } catch (const VocabularyViolation&) {
      raised = true;
    }
    violations += raised;
    check.expect(raised, "no vocabulary violation on " + text);
  }
  return check.outcome("200 sentences (" + std::to_string(satisfiable) + " satisfiable) agree with brute force; " +
                       std::to_string(violations) + "/100 Skolem-function inputs rejected");
}

// 6. Finite refutation of 1-satisfiability for the separating sentence.
Outcome phi_refutation() {
  Checker check;
  const PhiRefutation r = phi_fin_refutation(12);
  check.expect(r.rows.size() == 11 && r.holds(), "refutation does not hold");
  if (r.rows.size() >= 2) {
    check.expect(r.rows[0].max_value == 0, "k=2 maximum is not 0");
    check.expect(rank_to_std(r.rows[1].max_value, 3) == StdRational(1, 2), "k=3 maximum is not 1/2");
  }
  // Generic evaluator on a structure realizing each value set.
  const Formula phi = phi_sentence();
  const Formula neg_phi = Formula::neg(phi);
  std::size_t sets = 0;
  for (std::size_t k = 2; k <= 12; ++k) {
    const FiniteChain c = make_lukasiewicz_chain(k);
    Rank best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      ++sets;
      Structure m;
      std::set<Rank> values;
      std::vector<Rank> table;
      for (Rank v = 0; v < k; ++v)
        if (mask >> v & 1) {
          values.insert(v);
          table.push_back(v);
        }
      m.domain_size = table.size();
      m.predicates["P"] = {1, table};
      const Rank direct = eval(c, m, phi);
      best = std::max(best, direct);
      check.expect(direct < c.top(), "value 1 on Luk " + std::to_string(k));
      check.expect(eval(c, m, neg_phi) > c.bottom(), "negation 0 on Luk " + std::to_string(k));
      check.expect(direct == eval_phi_on_valueset(ValueSet(c, values)), "value-set mismatch");
    }
    if (k - 2 < r.rows.size()) check.expect(best == r.rows[k - 2].max_value, "maximum mismatch");
  }
  return check.outcome(std::to_string(sets) + " value sets over L2..L12; max 0 at k=2, 1/2 at k=3");
}

// 7. Value-set abstraction.
Outcome valueset_consistency() {
  Checker check;
  std::uint64_t structures = 0;
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t d = 1; d <= 3; ++d) {
      const ValueSetConsistency c = consistency_check_valuesets(k, d);
      structures += c.structures;
      check.expect(c.pass(), "mismatch at k=" + std::to_string(k) + ", domain " + std::to_string(d));
    }
  return check.outcome(std::to_string(structures) + " structures, k 2..4, domain 1..3");
}

// 8. Standard-chain witness family.
Outcome witness_family_values() {
  Checker check;
  check.expect(phi_truncated_witness(1).value == StdRational(1, 2), "N=1 is not 1/2");
  check.expect(phi_truncated_witness(2).value == StdRational(3, 4), "N=2 is not 3/4");
  StdRational previous = StdRational::zero();
  for (unsigned n = 1; n <= 20; ++n) {
    const StdRational v = phi_truncated_witness(n).value;
    const auto [num, den] = oracle::phi_truncation_value(n);
    check.expect(v == StdRational(static_cast<long long>(num), static_cast<long long>(den)),
                 "oracle mismatch at N=" + std::to_string(n));
    check.expect(previous < v, "not increasing at N=" + std::to_string(n));
    check.expect(v.value() > BigRational(1) - BigRational(1, std::int64_t{1} << (n - 1)),
                 "lower bound fails at N=" + std::to_string(n));
    previous = v;
  }
  return check.outcome("N = 1..20 exact, last value " + previous.str());
}

// 9. Determinism of the command-line tool.
std::string quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

struct CliRun {
  std::string output;
  int status = -1;
  bool operator==(const CliRun&) const = default;
};

CliRun run_cli(const std::string& cli, const std::vector<std::string>& args) {
  std::string cmd = quote(cli);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism(const std::string& cli) {
  Checker check;
  if (cli.empty()) return {false, "no --cli path given"};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("fuzzyfo-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string phi =
      write("phi.fof", "exists x. (P(x) <-> ~P(x)) & forall x. exists y. (P(x) <-> (P(y) & P(y)))\n");
  const std::string contra = write("contradiction.fof", "exists x. (P(x) /\\ ~P(x))\n");
  const std::string depth1 = write("depth1.fof", "forall x. (P(x) /\\ ~P(f(x)))\n");
  const std::string nonc = write("non.fof", "forall x. exists y. (P(x) <-> ~P(y))\n");
  const std::string bsr = write("bsr.fof", "exists x. forall y. (R(x,y) \\/ ~R(y,x)) /\\ ~R(c,c)\n");
  const std::string vocab = write("p.voc", "pred P/1\nconst c\n");
  const std::string structure = write("s.txt", "domain 2\nconst c = 1\npred P : 1/2 1\n");
  const std::string chain = write("g3.chain", "chain 3\n0 0 0\n0 1 1\n0 1 2\n");
  const std::string wide =
      "forall x. exists y. (R(x,y) /\\ ~R(y,x)) /\\ exists z. (P(z) /\\ R(z,z) \\/ ~P(z))";

  using Args = std::vector<std::string>;
  const std::vector<Args> commands = {
      {"parse", "--formula", phi},
      {"--format", "records", "parse", "--vocab", vocab, "--expr", "forall x. (P(x) -> P(c))"},
      {"eval", "--expr", "P(c) & ~P(c)", "--vocab", vocab, "--chain", "luk:3", "--structure", structure},
      {"eval", "--expr", "forall x. P(x)", "--chain", "std", "--structure", structure},
      {"decide", "--set", "satpos", "--chain", "luk:3", "--max-domain", "2", "--formula", phi},
      {"decide", "--set", "taut0", "--chain", "enum:4", "--max-domain", "2", "--formula", contra},
      {"decide", "--set", "tautlt1", "--chain", "luk:2", "--chain", "file:" + chain, "--formula", phi},
      {"decide", "--set", "sat1", "--chain", "luk:4", "--max-domain", "3", "--formula", phi},
      {"star", "--expr", "forall x. (P(x) \\/ ~Q(x))"},
      {"herbrand", "--formula", depth1, "--max-depth", "2"},
      {"bsr", "--formula", bsr},
      {"reduce", "--formula", depth1},
      {"reduce", "--formula", contra, "--verify", "--chain", "enum:4"},
      {"--format", "records", "verify-reduction", "--formula", nonc, "--chain", "luk:2", "--chain", "luk:3"},
      {"enum-chains", "--enum", "4"},
      {"check-lemma1", "--enum", "5"},
      {"phi-report", "--max-k", "12", "--n", "12"},
      {"phi-witness", "--n", "8"},
      {"star", "--expr", "~(P(c) /\\ Q(c))"},
      {"decide", "--set", "nope", "--expr", "P(c)", "--chain", "luk:2"},
  };
  std::size_t runs = 0;
  for (const Args& a : commands) {
    const CliRun first = run_cli(cli, a), second = run_cli(cli, a);
    runs += 2;
    check.expect(first.status >= 0 && first == second, "differs: " + a[0] + " " + a[1]);
  }
  // Parallel modes must reproduce the serial report byte for byte.
  const std::vector<Args> parallel = {
      // First witness after about 15 chunks of structures.
      {"decide", "--set", "sat1", "--chain", "luk:3", "--max-domain", "3", "--expr",
       "forall x. exists y. (R(x,y) /\\ ~R(y,x)) /\\ forall x. ~R(x,x)"},
      // No witness: the whole space is scanned.
      {"decide", "--set", "satpos", "--chain", "luk:2", "--max-domain", "4", "--expr",
       "forall x. forall y. (R(x,y) <-> ~R(y,x))"},
      {"decide", "--set", "sat1", "--chain", "luk:2", "--chain", "luk:3", "--max-domain", "3", "--expr", wide},
      {"verify-reduction", "--formula", nonc, "--chain", "enum:3", "--max-domain", "3"},
  };
  for (const Args& a : parallel) {
    Args serial = a;
    serial.insert(serial.begin(), {"--jobs", "1"});
    const CliRun base = run_cli(cli, serial);
    ++runs;
    check.expect(base.status == 0, "serial run failed: " + base.output.substr(0, 200));
    for (const char* jobs : {"1", "2", "4", "7"}) {
      Args p = a;
      p.insert(p.begin(), {"--jobs", jobs});
      check.expect(run_cli(cli, p) == base, std::string("jobs=") + jobs + " differs on " + a[0]);
      ++runs;
    }
  }
  // Reports written with --output.
  const auto out1 = dir / "out1.txt", out2 = dir / "out2.txt";
  run_cli(cli, {"--output", out1.string(), "phi-report"});
  run_cli(cli, {"--output", out2.string(), "phi-report"});
  runs += 2;
  check.expect(!slurp(out1).empty() && slurp(out1) == slurp(out2), "--output files differ");
  std::filesystem::remove_all(dir);
  return check.outcome(std::to_string(runs) + " invocations over " + std::to_string(commands.size()) +
                       " commands and 4 job counts byte-identical");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no stated limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else {
      only.insert(std::stoi(a));
    }
  }
  const std::vector<Criterion> criteria = {
      {1, "square meet law on every chain", 60, square_meet_law},
      {2, "propositional lemma biconditional", 300, propositional_lemma},
      {3, "dual Herbrand witnesses", 60, dual_herbrand},
      {4, "three-way coherence of reductions", 300, reduction_coherence},
      {5, "Bernays-Schoenfinkel decision", 300, bernays_schoenfinkel},
      {6, "finite refutation of 1-satisfiability", 60, phi_refutation},
      {7, "value-set abstraction", 60, valueset_consistency},
      {8, "standard-chain witness family", 60, witness_family_values},
      {9, "CLI determinism", 0, [&] { return cli_determinism(cli); }},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    all &= o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << ": "
         << o.detail << " [" << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << "]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
