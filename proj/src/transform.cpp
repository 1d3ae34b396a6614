#include "fuzzyfo/errors.hpp"
#include "fuzzyfo/syntax.hpp"

#include <algorithm>

namespace fuzzyfo {

namespace {

bool is_literal_node(const Formula& f) {
  return f.is_atom() || (f.kind() == FormulaKind::Neg && f.operand().is_atom());
}

bool lattice_literals(const Formula& f) {
  if (is_literal_node(f)) return true;
  if (f.kind() == FormulaKind::Meet || f.kind() == FormulaKind::Join)
    return lattice_literals(f.lhs()) && lattice_literals(f.rhs());
  return false;
}

bool star_fragment(const Formula& f) {
  if (is_literal_node(f)) return true;
  switch (f.kind()) {
    case FormulaKind::Meet:
    case FormulaKind::Join:
      return star_fragment(f.lhs()) && star_fragment(f.rhs());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return star_fragment(f.body());
    default:
      return false;
  }
}

bool quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Neg:
      return quantifier_free(f.operand());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return false;
    default:
      return quantifier_free(f.lhs()) && quantifier_free(f.rhs());
  }
}

bool term_relational(const Term& t) { return t.kind != Term::Kind::Application; }

bool relational(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return std::all_of(f.args().begin(), f.args().end(), term_relational);
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Neg:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return relational(f.operand());
    default:
      return relational(f.lhs()) && relational(f.rhs());
  }
}

}  // namespace

Classification classify(const Formula& f) {
  Classification c;
  c.is_literal = is_literal_node(f);
  c.is_lattice_literal_combination = lattice_literals(f);
  c.is_quantifier_free = quantifier_free(f);
  const Formula* g = &f;
  while (g->kind() == FormulaKind::Forall) g = &g->body();
  c.is_purely_universal = quantifier_free(*g);
  c.is_relational = relational(f);
  c.is_sentence = is_sentence(f);
  c.in_star_fragment = star_fragment(f);
  return c;
}

Formula star_translate(const Formula& f) {
  if (is_literal_node(f)) return Formula::square(f);
  switch (f.kind()) {
    case FormulaKind::Meet: {
      Formula a = star_translate(f.lhs());
      return Formula::meet(std::move(a), star_translate(f.rhs()));
    }
    case FormulaKind::Join: {
      Formula a = star_translate(f.lhs());
      return Formula::join(std::move(a), star_translate(f.rhs()));
    }
    case FormulaKind::Forall:
      return Formula::forall(f.variable(), star_translate(f.body()));
    case FormulaKind::Exists:
      return Formula::exists(f.variable(), star_translate(f.body()));
    case FormulaKind::Neg:
      throw FragmentError("star translation: negation of a non-atom in " + to_string(f));
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      throw FragmentError("star translation: truth constant " + to_string(f) +
                          " is not a literal");
    default:
      throw FragmentError("star translation: connective outside /\\, \\/ in " + to_string(f));
  }
}

namespace {

// Smart constructors absorbing classical truth constants.
Formula mk_meet(Formula a, Formula b) {
  if (a.kind() == FormulaKind::Bottom || b.kind() == FormulaKind::Bottom) return Formula::bottom();
  if (a.kind() == FormulaKind::Top) return b;
  if (b.kind() == FormulaKind::Top) return a;
  return Formula::meet(std::move(a), std::move(b));
}

Formula mk_join(Formula a, Formula b) {
  if (a.kind() == FormulaKind::Top || b.kind() == FormulaKind::Top) return Formula::top();
  if (a.kind() == FormulaKind::Bottom) return b;
  if (b.kind() == FormulaKind::Bottom) return a;
  return Formula::join(std::move(a), std::move(b));
}

// Domains are nonempty, so a quantifier over a constant is that constant.
Formula mk_quant(bool universal, const std::string& var, Formula body) {
  if (body.is_truth_constant()) return body;
  return universal ? Formula::forall(var, std::move(body)) : Formula::exists(var, std::move(body));
}

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return positive ? f : Formula::neg(f);
    case FormulaKind::Bottom:
      return positive ? Formula::bottom() : Formula::top();
    case FormulaKind::Top:
      return positive ? Formula::top() : Formula::bottom();
    case FormulaKind::Neg:
      return nnf(f.operand(), !positive);
    case FormulaKind::StrongConj:
    case FormulaKind::Meet:
      return positive ? mk_meet(nnf(f.lhs(), true), nnf(f.rhs(), true))
                      : mk_join(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case FormulaKind::Join:
      return positive ? mk_join(nnf(f.lhs(), true), nnf(f.rhs(), true))
                      : mk_meet(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case FormulaKind::Impl:
      return positive ? mk_join(nnf(f.lhs(), false), nnf(f.rhs(), true))
                      : mk_meet(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case FormulaKind::Biimpl: {
      // a <-> b  ==  (~a \/ b) /\ (a \/ ~b);  its negation  (a /\ ~b) \/ (~a /\ b)
      const Formula& a = f.lhs();
      const Formula& b = f.rhs();
      if (positive)
        return mk_meet(mk_join(nnf(a, false), nnf(b, true)), mk_join(nnf(a, true), nnf(b, false)));
      return mk_join(mk_meet(nnf(a, true), nnf(b, false)), mk_meet(nnf(a, false), nnf(b, true)));
    }
    case FormulaKind::Forall:
      return mk_quant(positive, f.variable(), nnf(f.body(), positive));
    case FormulaKind::Exists:
      return mk_quant(!positive, f.variable(), nnf(f.body(), positive));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

Formula classical_nnf(const Formula& f) { return rename_apart(nnf(f, true)); }

bool is_nnf(const Formula& f) {
  if (f.is_truth_constant()) return true;
  return star_fragment(f);
}

namespace {

struct Skolemizer {
  Vocabulary vocab;
  std::set<std::string> used;
  std::vector<std::pair<std::string, std::size_t>> fresh;
  std::size_t counter = 0;

  std::string next_name() {
    for (;;) {
      std::string name = "sk_" + std::to_string(++counter);
      if (!used.count(name) && !vocab.has_symbol(name)) {
        used.insert(name);
        return name;
      }
    }
  }

  Formula run(const Formula& f, std::vector<std::string>& universals) {
    switch (f.kind()) {
      case FormulaKind::Atom:
      case FormulaKind::Bottom:
      case FormulaKind::Top:
      case FormulaKind::Neg:
        return f;
      case FormulaKind::Meet: {
        Formula a = run(f.lhs(), universals);
        return Formula::meet(std::move(a), run(f.rhs(), universals));
      }
      case FormulaKind::Join: {
        Formula a = run(f.lhs(), universals);
        return Formula::join(std::move(a), run(f.rhs(), universals));
      }
      case FormulaKind::Forall: {
        universals.push_back(f.variable());
        Formula body = run(f.body(), universals);
        universals.pop_back();
        return Formula::forall(f.variable(), std::move(body));
      }
      case FormulaKind::Exists: {
        if (!universals.empty() && vocab.relational())
          throw VocabularyViolation(
              "eliminating exists " + f.variable() + " needs a Skolem function of arity " +
              std::to_string(universals.size()) +
              ", but the vocabulary is relational (no function symbols)");
        const std::string name = next_name();
        Term witness;
        if (universals.empty()) {
          vocab.declare_constant(name);
          witness = Term::constant(name);
        } else {
          vocab.declare_function(name, universals.size());
          std::vector<Term> args;
          for (const auto& u : universals) args.push_back(Term::variable(u));
          witness = Term::apply(name, std::move(args));
        }
        fresh.emplace_back(name, universals.size());
        return run(substitute(f.body(), f.variable(), witness), universals);
      }
      default:
        throw FragmentError("skolemize expects NNF, found " + to_string(f));
    }
  }
};

// Pulls universals (renamed apart) out of /\ and \/ into a prefix.
Formula pull_universals(const Formula& f, std::vector<std::string>& prefix) {
  switch (f.kind()) {
    case FormulaKind::Forall:
      prefix.push_back(f.variable());
      return pull_universals(f.body(), prefix);
    case FormulaKind::Meet: {
      Formula a = pull_universals(f.lhs(), prefix);
      return Formula::meet(std::move(a), pull_universals(f.rhs(), prefix));
    }
    case FormulaKind::Join: {
      Formula a = pull_universals(f.lhs(), prefix);
      return Formula::join(std::move(a), pull_universals(f.rhs(), prefix));
    }
    default:
      return f;
  }
}

void collect_symbol_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name);
  for (const auto& a : t.args) collect_symbol_names(a, out);
}

}  // namespace

SkolemResult skolemize(const Formula& f, const Vocabulary& vocab) {
  if (!is_nnf(f)) throw FragmentError("skolemize expects NNF input: " + to_string(f));
  if (!is_sentence(f)) throw FragmentError("skolemize expects a sentence: " + to_string(f));
  const Formula g = rename_apart(f);

  Skolemizer sk;
  sk.vocab = vocab;
  Vocabulary occurring = infer_vocabulary(g);
  for (const auto& [p, n] : occurring.predicates()) sk.vocab.declare_predicate(p, n);
  for (const auto& [fn, n] : occurring.functions()) sk.vocab.declare_function(fn, n);
  for (const auto& c : occurring.constants()) sk.vocab.declare_constant(c);
  for (const auto& a : atoms_of(g))
    for (const auto& t : a.args()) collect_symbol_names(t, sk.used);
  for (const auto& v : free_variables(g)) sk.used.insert(v);

  std::vector<std::string> universals;
  Formula body = sk.run(g, universals);
  std::vector<std::string> prefix;
  Formula matrix = pull_universals(body, prefix);
  return {close_universally(prefix, std::move(matrix)), std::move(sk.vocab), std::move(sk.fresh)};
}

std::optional<UniversalForm> split_universal(const Formula& f) {
  UniversalForm u{{}, f};
  while (u.matrix.kind() == FormulaKind::Forall) {
    u.variables.push_back(u.matrix.variable());
    Formula next = u.matrix.body();
    u.matrix = std::move(next);
  }
  if (!classify(u.matrix).is_quantifier_free) return std::nullopt;
  return u;
}

Formula close_universally(const std::vector<std::string>& vars, Formula matrix) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) matrix = Formula::forall(*it, matrix);
  return matrix;
}

std::vector<Term> herbrand_universe(const Vocabulary& vocab, std::size_t depth,
                                    std::size_t max_terms) {
  std::vector<std::vector<Term>> by_depth(1);
  for (const auto& c : vocab.constants()) by_depth[0].push_back(Term::constant(c));
  if (by_depth[0].empty()) by_depth[0].push_back(Term::constant(kDefaultHerbrandConstant));

  auto by_print = [](const Term& a, const Term& b) { return to_string(a) < to_string(b); };
  std::sort(by_depth[0].begin(), by_depth[0].end(), by_print);
  std::size_t total = by_depth[0].size();

  std::vector<Term> below(by_depth[0]);  // every term of depth < d
  for (std::size_t d = 1; d <= depth && !vocab.functions().empty(); ++d) {
    std::vector<Term> layer;
    for (const auto& [name, arity] : vocab.functions()) {
      // Argument tuples over `below` with at least one argument of depth d-1.
      std::vector<std::size_t> idx(arity, 0);
      for (;;) {
        bool fresh = false;
        std::vector<Term> args;
        args.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) {
          args.push_back(below[idx[i]]);
          if (below[idx[i]].depth() == d - 1) fresh = true;
        }
        if (fresh) {
          layer.push_back(Term::apply(name, std::move(args)));
          if (total + layer.size() > max_terms)
            throw BudgetExceeded("herbrand universe at depth " + std::to_string(d),
                                 static_cast<long double>(total + layer.size()), max_terms);
        }
        std::size_t i = arity;
        while (i > 0 && ++idx[i - 1] == below.size()) idx[--i] = 0;
        if (i == 0) break;
      }
    }
    std::sort(layer.begin(), layer.end(), by_print);
    total += layer.size();
    below.insert(below.end(), layer.begin(), layer.end());
    by_depth.push_back(std::move(layer));
  }
  std::vector<Term> out;
  out.reserve(total);
  for (auto& layer : by_depth)
    for (auto& t : layer) out.push_back(std::move(t));
  return out;
}

}  // namespace fuzzyfo
