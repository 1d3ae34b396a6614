#include "fuzzyfo/decision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace fuzzyfo {

ChainClass::ChainClass(std::vector<FiniteChain> chains) : chains_(std::move(chains)) {
  if (chains_.empty()) throw InvalidSize("a chain class needs at least one chain");
}

std::string ChainClass::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    if (i) out += ", ";
    out += chains_[i].label();
  }
  return out + "}";
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::MemberWitness:
      return "member_witness";
    case Verdict::Kind::Refuted:
      return "refuted";
    case Verdict::Kind::Exhausted:
      return "exhausted";
    case Verdict::Kind::Decided:
      return "decided";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Compiled quantifier-free formulas.

struct Circuit {
  struct Node {
    FormulaKind kind;
    int a = -1;
    int b = -1;
    int atom = -1;
  };

  std::vector<Node> nodes;  // children precede parents; root is last
  std::vector<Formula> atoms;
  std::map<std::string, int> index;

  explicit Circuit(const Formula& f) { build(f); }

  int build(const Formula& f) {
    Node n{f.kind()};
    switch (f.kind()) {
      case FormulaKind::Atom: {
        auto [it, fresh] = index.emplace(f.atom_key(), static_cast<int>(atoms.size()));
        if (fresh) atoms.push_back(f);
        n.atom = it->second;
        break;
      }
      case FormulaKind::Bottom:
      case FormulaKind::Top:
        break;
      case FormulaKind::Neg:
        n.a = build(f.operand());
        break;
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        throw FragmentError("expected a quantifier-free formula, got " + to_string(f));
      default:
        n.a = build(f.lhs());
        n.b = build(f.rhs());
        break;
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  // Values over a finite chain.
  Rank eval(const FiniteChain& c, const std::vector<Rank>& val, std::vector<Rank>& scratch) const {
    scratch.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      Rank& r = scratch[i];
      switch (n.kind) {
        case FormulaKind::Atom: r = val[n.atom]; break;
        case FormulaKind::Bottom: r = c.bottom(); break;
        case FormulaKind::Top: r = c.top(); break;
        case FormulaKind::Neg: r = c.neg(scratch[n.a]); break;
        case FormulaKind::StrongConj: r = c.mult(scratch[n.a], scratch[n.b]); break;
        case FormulaKind::Impl: r = c.impl(scratch[n.a], scratch[n.b]); break;
        case FormulaKind::Meet: r = FiniteChain::meet(scratch[n.a], scratch[n.b]); break;
        case FormulaKind::Join: r = FiniteChain::join(scratch[n.a], scratch[n.b]); break;
        case FormulaKind::Biimpl: r = c.biimpl(scratch[n.a], scratch[n.b]); break;
        default: throw std::logic_error("quantifier in a circuit");
      }
    }
    return scratch.back();
  }

  // Classical three-valued (Kleene) reading: 0 false, 1 true, 2 unknown.
  static constexpr std::uint8_t kU = 2;

  static std::uint8_t k_not(std::uint8_t a) { return a == kU ? kU : 1 - a; }
  static std::uint8_t k_and(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return (a == 1 && b == 1) ? 1 : kU;
  }
  static std::uint8_t k_or(std::uint8_t a, std::uint8_t b) {
    if (a == 1 || b == 1) return 1;
    return (a == 0 && b == 0) ? 0 : kU;
  }

  std::uint8_t eval3(const std::vector<std::uint8_t>& val, std::vector<std::uint8_t>& scratch) const {
    scratch.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      std::uint8_t& r = scratch[i];
      switch (n.kind) {
        case FormulaKind::Atom: r = val[n.atom]; break;
        case FormulaKind::Bottom: r = 0; break;
        case FormulaKind::Top: r = 1; break;
        case FormulaKind::Neg: r = k_not(scratch[n.a]); break;
        case FormulaKind::StrongConj:
        case FormulaKind::Meet: r = k_and(scratch[n.a], scratch[n.b]); break;
        case FormulaKind::Join: r = k_or(scratch[n.a], scratch[n.b]); break;
        case FormulaKind::Impl: r = k_or(k_not(scratch[n.a]), scratch[n.b]); break;
        case FormulaKind::Biimpl: {
          const std::uint8_t x = scratch[n.a], y = scratch[n.b];
          r = (x == kU || y == kU) ? kU : static_cast<std::uint8_t>(x == y);
          break;
        }
        default: throw std::logic_error("quantifier in a circuit");
      }
    }
    return scratch.back();
  }
};

bool dpll(const Circuit& c, std::vector<std::uint8_t>& val, std::size_t next,
          std::vector<std::uint8_t>& scratch) {
  const std::uint8_t r = c.eval3(val, scratch);
  if (r != Circuit::kU) return r == 1;
  for (std::uint8_t v : {std::uint8_t{1}, std::uint8_t{0}}) {
    val[next] = v;
    if (dpll(c, val, next + 1, scratch)) return true;
  }
  val[next] = Circuit::kU;
  return false;
}

bool satisfiable(const Circuit& c, PropositionalValuation<Rank>* model) {
  std::vector<std::uint8_t> val(c.atoms.size(), Circuit::kU), scratch;
  if (!dpll(c, val, 0, scratch)) return false;
  if (model) {
    model->clear();
    for (std::size_t i = 0; i < c.atoms.size(); ++i)
      (*model)[c.atoms[i].atom_key()] = val[i] == 0 ? 0 : 1;
  }
  return true;
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::meet(out, parts[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Bounded structure searches.

enum class Goal { Positive, Top };

bool hits(Goal goal, const FiniteChain& c, Rank v) {
  return goal == Goal::Positive ? v != c.bottom() : v == c.top();
}

// Least index in [0, space.count()) whose structure satisfies the goal.
std::optional<std::pair<std::uint64_t, Rank>> find_first(const StructureSpace& space,
                                                         const FiniteChain& chain,
                                                         const Formula& f, Goal goal,
                                                         unsigned jobs) {
  const std::uint64_t n = space.count();
  constexpr std::uint64_t kChunk = 1024;
  if (jobs <= 1 || n <= kChunk) {
    std::optional<std::pair<std::uint64_t, Rank>> found;
    std::uint64_t index = 0;
    space.for_each([&](const Structure& m) {
      const Rank v = eval(chain, m, f);
      if (hits(goal, chain, v)) {
        found.emplace(index, v);
        return false;
      }
      ++index;
      return true;
    });
    return found;
  }

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  Rank best_value = 0;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t begin = next_chunk.fetch_add(1) * kChunk;
        if (begin >= n || begin >= best.load()) return;
        const std::uint64_t end = std::min(n, begin + kChunk);
        std::uint64_t index = begin;
        space.for_range(begin, end, [&](const Structure& m) {
          if (index >= best.load()) return false;
          const Rank v = eval(chain, m, f);
          if (hits(goal, chain, v)) {
            std::lock_guard<std::mutex> lock(mu);
            if (index < best.load()) {
              best.store(index);
              best_value = v;
            }
            return false;
          }
          ++index;
          return true;
        });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return std::make_pair(best.load(), best_value);
}

std::string domain_bounds(const ChainClass& k, std::size_t max_domain) {
  return "chains " + k.describe() + "; domain sizes 1.." + std::to_string(max_domain);
}

Verdict bounded_search(const std::string& procedure, Goal goal, bool membership,
                       const ChainClass& k, const Formula& f, const SearchOptions& opts) {
  if (!is_sentence(f)) throw FragmentError(procedure + " expects a sentence: " + to_string(f));
  if (opts.max_domain == 0) throw InvalidSize("max domain must be at least 1");

  Verdict v;
  v.procedure = procedure;
  const Verdict::Kind hit_kind = membership ? Verdict::Kind::MemberWitness : Verdict::Kind::Refuted;
  const Vocabulary vocab = infer_vocabulary(f);

  if (vocab.predicates().empty()) {
    // No atoms: the value depends only on the chain.
    v.bounds = "chains " + k.describe() + "; structure-independent";
    for (std::size_t i = 0; i < k.chains().size(); ++i) {
      const FiniteChain& c = k.chains()[i];
      Structure m;
      m.domain_size = 1;
      for (const auto& name : vocab.constants()) m.constants[name] = 0;
      for (const auto& [name, arity] : vocab.functions())
        m.functions[name] = {arity, std::vector<std::size_t>(1, 0)};
      const Rank value = eval(c, m, f);
      ++v.examined;
      if (hits(goal, c, value)) {
        v.kind = hit_kind;
        v.witness = Witness{i, c.label(), m, {}, value};
        return v;
      }
    }
    v.kind = Verdict::Kind::Decided;
    v.decision = !membership;
    v.reason = "sentence without atoms; its value does not depend on the structure";
    return v;
  }

  long double total = 0;
  for (const auto& c : k.chains())
    for (std::size_t d = 1; d <= opts.max_domain; ++d)
      total += StructureSpace(vocab, c.size(), d).size();
  require_within_budget(procedure + " structure search", total, opts.budget);

  v.bounds = domain_bounds(k, opts.max_domain);
  for (std::size_t i = 0; i < k.chains().size(); ++i) {
    const FiniteChain& c = k.chains()[i];
    for (std::size_t d = 1; d <= opts.max_domain; ++d) {
      const StructureSpace space(vocab, c.size(), d);
      const auto found = find_first(space, c, f, goal, opts.jobs);
      if (!found) {
        v.examined += space.count();
        continue;
      }
      v.examined += found->first + 1;
      Structure m = space.at(found->first);
      if (eval(c, m, f) != found->second)
        throw ConsistencyFailure(procedure + ": witness does not re-evaluate to its value");
      v.kind = hit_kind;
      v.witness = Witness{i, c.label(), std::move(m), {}, found->second};
      return v;
    }
  }
  v.kind = Verdict::Kind::Exhausted;
  v.reason = goal == Goal::Positive ? "no structure gives a value above 0"
                                    : "no structure gives the value 1";
  return v;
}

}  // namespace

Verdict taut0_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts) {
  return bounded_search("taut0", Goal::Positive, false, k, sentence, opts);
}

Verdict sat_pos_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts) {
  return bounded_search("satpos", Goal::Positive, true, k, sentence, opts);
}

Verdict taut_lt1_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts) {
  return bounded_search("tautlt1", Goal::Top, false, k, sentence, opts);
}

Verdict sat1_bounded(const ChainClass& k, const Formula& sentence, const SearchOptions& opts) {
  return bounded_search("sat1", Goal::Top, true, k, sentence, opts);
}

Verdict taut0_propositional(const ChainClass& k, const Formula& qf, std::uint64_t budget) {
  const Circuit circuit(qf);
  const std::size_t n = circuit.atoms.size();
  long double total = 0;
  for (const auto& c : k.chains()) total += std::pow(static_cast<long double>(c.size()), n);
  require_within_budget("propositional valuation search", total, budget);

  Verdict v;
  v.procedure = "taut0-propositional";
  v.bounds = "chains " + k.describe() + "; all valuations of " + std::to_string(n) + " atoms";
  std::vector<Rank> val(n), scratch;
  std::vector<std::size_t> digit(n);
  for (std::size_t i = 0; i < k.chains().size(); ++i) {
    const FiniteChain& c = k.chains()[i];
    const Rank top = c.top();
    std::fill(digit.begin(), digit.end(), 0);
    std::fill(val.begin(), val.end(), top);
    for (;;) {
      ++v.examined;
      const Rank value = circuit.eval(c, val, scratch);
      if (value != c.bottom()) {
        Witness w{i, c.label(), std::nullopt, {}, value};
        for (std::size_t a = 0; a < n; ++a) w.valuation[circuit.atoms[a].atom_key()] = val[a];
        v.kind = Verdict::Kind::Refuted;
        v.witness = std::move(w);
        return v;
      }
      bool carry = true;
      for (std::size_t a = n; carry && a-- > 0;) {
        if (++digit[a] < c.size()) {
          val[a] = top - static_cast<Rank>(digit[a]);
          carry = false;
        } else {
          digit[a] = 0;
          val[a] = top;
        }
      }
      if (carry) break;
    }
  }
  v.kind = Verdict::Kind::Decided;
  v.decision = true;
  v.reason = "every valuation over every listed chain gives 0";
  return v;
}

bool is_classical_contradiction_prop(const Formula& qf, std::size_t atom_cap) {
  if (!free_variables(qf).empty())
    throw FragmentError("expected a closed formula, got " + to_string(qf));
  const Circuit circuit(qf);
  const std::size_t n = circuit.atoms.size();
  if (n > atom_cap || n >= 63)
    throw BudgetExceeded("truth table over " + std::to_string(n) + " atoms",
                         std::pow(2.0L, static_cast<long double>(n)),
                         std::uint64_t{1} << std::min<std::size_t>(atom_cap, 62));
  std::vector<std::uint8_t> val(n), scratch;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) val[i] = (mask >> (n - 1 - i)) & 1;
    if (circuit.eval3(val, scratch) == 1) return false;
  }
  return true;
}

bool propositionally_satisfiable(const Formula& qf, PropositionalValuation<Rank>* model) {
  return satisfiable(Circuit(qf), model);
}

// ---------------------------------------------------------------------------
// Bernays–Schönfinkel fragment.

namespace {

struct PrefixSplitter {
  ExistsForallPrefix out;

  Formula strip(const Formula& f, bool under_forall) {
    switch (f.kind()) {
      case FormulaKind::Exists:
        if (under_forall)
          throw FragmentError("existential under a universal; not of the form exists* forall*");
        out.existentials.push_back(f.variable());
        return strip(f.body(), false);
      case FormulaKind::Forall:
        out.universals.push_back(f.variable());
        return strip(f.body(), true);
      case FormulaKind::Meet: {
        Formula a = strip(f.lhs(), under_forall);
        return Formula::meet(std::move(a), strip(f.rhs(), under_forall));
      }
      case FormulaKind::Join: {
        Formula a = strip(f.lhs(), under_forall);
        return Formula::join(std::move(a), strip(f.rhs(), under_forall));
      }
      default:
        return f;
    }
  }
};

// Rebuilds a relational quantifier-free formula with every variable and
// constant replaced by a domain element, written as the constant "@i".
Formula ground(const Formula& f, const std::map<std::string, std::size_t>& element) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      for (const auto& t : f.args()) {
        if (t.kind == Term::Kind::Application)
          throw FragmentError("function symbol " + t.name + " in a relational sentence");
        args.push_back(Term::constant("@" + std::to_string(element.at(t.name))));
      }
      return Formula::atom(f.predicate(), std::move(args));
    }
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return f;
    case FormulaKind::Neg:
      return Formula::neg(ground(f.operand(), element));
    case FormulaKind::Meet:
      return Formula::meet(ground(f.lhs(), element), ground(f.rhs(), element));
    case FormulaKind::Join:
      return Formula::join(ground(f.lhs(), element), ground(f.rhs(), element));
    default:
      throw FragmentError("unexpected connective in a matrix: " + to_string(f));
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

ExistsForallPrefix exists_forall_prefix(const Formula& sentence) {
  const Classification cls = classify(sentence);
  if (!cls.is_sentence) throw FragmentError("expected a sentence: " + to_string(sentence));
  if (!cls.is_relational)
    throw FragmentError("expected a relational sentence (no function symbols): " +
                        to_string(sentence));
  PrefixSplitter splitter;
  splitter.out.matrix = splitter.strip(classical_nnf(sentence), false);
  return splitter.out;
}

std::size_t bsr_domain_bound(const Formula& sentence) {
  const ExistsForallPrefix p = exists_forall_prefix(sentence);
  return std::max<std::size_t>(1, p.existentials.size() + infer_vocabulary(sentence).constants().size());
}

Verdict bsr_decide(const Formula& sentence) {
  const ExistsForallPrefix p = exists_forall_prefix(sentence);
  const Vocabulary vocab = infer_vocabulary(sentence);
  const std::vector<std::string> constants(vocab.constants().begin(), vocab.constants().end());
  const std::size_t n = std::max<std::size_t>(1, p.existentials.size() + constants.size());

  // Named elements: constants, then existential witnesses.
  std::vector<std::string> named = constants;
  named.insert(named.end(), p.existentials.begin(), p.existentials.end());
  const std::size_t choices = ipow(n, named.size());
  const std::size_t tuples = ipow(n, p.universals.size());
  require_within_budget("Bernays-Schoenfinkel grounding",
                        static_cast<long double>(choices) * static_cast<long double>(tuples),
                        search_budget());

  Verdict v;
  v.procedure = "bsr";
  v.bounds = "domain size " + std::to_string(n) + " = max(1, " +
             std::to_string(p.existentials.size()) + " existentials + " +
             std::to_string(constants.size()) + " constants)";

  for (std::size_t choice = 0; choice < choices; ++choice) {
    std::map<std::string, std::size_t> element;
    std::size_t rest = choice;
    for (std::size_t i = named.size(); i-- > 0;) {
      element[named[i]] = rest % n;
      rest /= n;
    }
    std::vector<Formula> instances;
    for (std::size_t tuple = 0; tuple < tuples; ++tuple) {
      std::size_t r = tuple;
      for (std::size_t i = p.universals.size(); i-- > 0;) {
        element[p.universals[i]] = r % n;
        r /= n;
      }
      instances.push_back(ground(p.matrix, element));
    }
    ++v.examined;
    PropositionalValuation<Rank> model;
    if (!propositionally_satisfiable(conjoin(instances), &model)) continue;

    const FiniteChain b2 = make_lukasiewicz_chain(2).with_label("B2");
    Structure m;
    m.domain_size = n;
    for (const auto& c : constants) m.constants[c] = element.at(c);
    for (const auto& [pred, arity] : vocab.predicates())
      m.predicates[pred] = {arity, std::vector<Rank>(ipow(n, arity), b2.top())};
    for (const auto& atom : atoms_of(conjoin(instances))) {
      std::size_t index = 0;
      for (const auto& t : atom.args()) index = index * n + std::stoul(t.name.substr(1));
      m.predicates.at(atom.predicate()).values.at(index) = model.at(atom.atom_key());
    }
    const Rank value = eval(b2, m, sentence);
    if (value != b2.top())
      throw ConsistencyFailure("bsr: model of the grounding does not satisfy " + to_string(sentence));
    v.kind = Verdict::Kind::Decided;
    v.decision = true;
    v.reason = "satisfiable; model found at the domain bound";
    v.witness = Witness{0, b2.label(), std::move(m), {}, value};
    return v;
  }
  v.kind = Verdict::Kind::Decided;
  v.decision = false;
  v.reason = "unsatisfiable; no model at the domain bound";
  return v;
}

// ---------------------------------------------------------------------------
// Dual Herbrand search.

Verdict dual_herbrand_search(const Formula& purely_universal, std::size_t max_depth,
                             std::size_t instance_cap) {
  if (!is_sentence(purely_universal))
    throw FragmentError("expected a sentence: " + to_string(purely_universal));
  const auto form = split_universal(purely_universal);
  if (!form) throw FragmentError("expected a purely universal sentence: " + to_string(purely_universal));

  const Vocabulary vocab = infer_vocabulary(purely_universal);
  const std::size_t arity = form->variables.size();

  Verdict v;
  v.procedure = "dual-herbrand";
  std::size_t searched = 0;
  bool capped = false;
  std::size_t previous_universe = 0;

  for (std::size_t d = 0; d <= max_depth; ++d) {
    const std::vector<Term> universe = herbrand_universe(vocab, d);
    if (d > 0 && universe.size() == previous_universe) {
      searched = d;
      continue;  // no new closed terms: same instances as depth d - 1
    }
    previous_universe = universe.size();
    const long double count = std::pow(static_cast<long double>(universe.size()), arity);
    if (count > static_cast<long double>(instance_cap)) {
      capped = true;
      break;
    }
    const std::size_t total = static_cast<std::size_t>(count);
    std::vector<std::vector<Term>> tuples;
    std::vector<Formula> instances;
    for (std::size_t t = 0; t < total; ++t) {
      std::vector<Term> tuple(arity);
      std::size_t r = t;
      for (std::size_t i = arity; i-- > 0;) {
        tuple[i] = universe[r % universe.size()];
        r /= universe.size();
      }
      Formula inst = form->matrix;
      for (std::size_t i = 0; i < arity; ++i) inst = substitute(inst, form->variables[i], tuple[i]);
      tuples.push_back(std::move(tuple));
      instances.push_back(std::move(inst));
    }
    v.examined += total;
    searched = d;
    if (propositionally_satisfiable(conjoin(instances))) continue;

    // Irredundant subset, dropping instances front to back.
    for (std::size_t i = 0; i < instances.size() && instances.size() > 1;) {
      std::vector<Formula> trial = instances;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (!propositionally_satisfiable(conjoin(trial))) {
        instances = std::move(trial);
        tuples.erase(tuples.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    const Formula conj = conjoin(instances);
    if (atoms_of(conj).size() <= kTruthTableAtomCap && !is_classical_contradiction_prop(conj))
      throw ConsistencyFailure("dual-herbrand: witness conjunction is not a contradiction");

    std::size_t depth = 0;
    for (const auto& tuple : tuples)
      for (const auto& t : tuple) depth = std::max(depth, t.depth());
    v.kind = Verdict::Kind::Decided;
    v.decision = true;
    v.bounds = "Herbrand depth 0.." + std::to_string(d);
    v.reason = "contradictory conjunction of " + std::to_string(instances.size()) +
               " matrix instances at depth " + std::to_string(depth);
    v.herbrand = HerbrandWitness{depth, std::move(tuples), conj};
    return v;
  }
  v.kind = Verdict::Kind::Exhausted;
  v.bounds = "Herbrand depth 0.." + std::to_string(searched);
  v.reason = capped ? "no contradictory instance set up to the depth where the instance cap (" +
                          std::to_string(instance_cap) + ") was reached"
                    : "no contradictory instance set within the depth";
  return v;
}

Verdict purely_universal_contradiction(const Formula& purely_universal, std::size_t max_depth) {
  const Classification cls = classify(purely_universal);
  if (!cls.is_purely_universal || !cls.is_sentence)
    throw FragmentError("expected a purely universal sentence: " + to_string(purely_universal));

  if (!cls.is_relational) {
    Verdict v = dual_herbrand_search(purely_universal, max_depth);
    v.procedure = "purely-universal-contradiction";
    if (v.kind == Verdict::Kind::Decided) v.reason = "semi-decided: " + v.reason;
    return v;
  }

  Verdict bsr = bsr_decide(purely_universal);
  Verdict v;
  v.procedure = "purely-universal-contradiction";
  v.kind = Verdict::Kind::Decided;
  v.decision = !bsr.decision;
  v.bounds = bsr.bounds;
  v.examined = bsr.examined;
  v.witness = bsr.witness;
  v.reason = bsr.decision ? "decided: satisfiable, so not a contradiction"
                          : "decided: unsatisfiable, so a contradiction";
  if (v.decision) {
    // Relational contradictions have a witness over the depth-0 universe.
    const Verdict h = dual_herbrand_search(purely_universal, 0);
    if (h.kind == Verdict::Kind::Decided) {
      v.herbrand = h.herbrand;
    } else if (h.reason.find("cap") == std::string::npos) {
      throw ConsistencyFailure("unsatisfiable relational sentence without a depth-0 Herbrand witness");
    }
  }
  return v;
}

}  // namespace fuzzyfo
