#pragma once

#include "fuzzyfo/chain.hpp"
#include "fuzzyfo/errors.hpp"
#include "fuzzyfo/syntax.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace fuzzyfo {

using TruthValue = std::variant<Rank, StdRational>;

// "#k" for ranks, "p/q" for standard-chain values.
std::string to_string(const TruthValue& v);

/// Finite-domain structure with dense interpretation tables. Tables are
/// row-major with the first argument most significant. V is the value type
/// of the evaluating algebra (Rank or StdRational).
template <class V>
struct BasicStructure {
  struct FunctionTable {
    std::size_t arity = 0;
    std::vector<std::size_t> table;
    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
  };
  struct PredicateTable {
    std::size_t arity = 0;
    std::vector<V> values;
    friend bool operator==(const PredicateTable&, const PredicateTable&) = default;
  };

  std::size_t domain_size = 1;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, FunctionTable> functions;
  std::map<std::string, PredicateTable> predicates;

  friend bool operator==(const BasicStructure&, const BasicStructure&) = default;
};

using Structure = BasicStructure<Rank>;
using StdStructure = BasicStructure<StdRational>;

using Assignment = std::map<std::string, std::size_t>;

namespace detail {

using Environment = std::vector<std::pair<const std::string*, std::size_t>>;

template <class V>
std::size_t term_value(const BasicStructure<V>& m, const Environment& env, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (*it->first == t.name) return it->second;
      throw EvaluationError("unbound free variable " + t.name);
    case Term::Kind::Constant: {
      auto it = m.constants.find(t.name);
      if (it == m.constants.end()) throw EvaluationError("uninterpreted constant " + t.name);
      return it->second;
    }
    case Term::Kind::Application: {
      auto it = m.functions.find(t.name);
      if (it == m.functions.end()) throw EvaluationError("uninterpreted function " + t.name);
      if (it->second.arity != t.args.size())
        throw EvaluationError("function " + t.name + " interpreted with arity " +
                              std::to_string(it->second.arity));
      std::size_t index = 0;
      for (const auto& a : t.args) index = index * m.domain_size + term_value(m, env, a);
      return it->second.table.at(index);
    }
  }
  throw std::logic_error("unreachable term kind");
}

template <class Algebra, class V>
class Evaluator {
 public:
  Evaluator(const Algebra& algebra, const BasicStructure<V>& m) : alg_(algebra), m_(m) {}

  void bind(const std::string& var, std::size_t value) { env_.emplace_back(&var, value); }

  V eval(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Atom:
        return atom(f);
      case FormulaKind::Bottom:
        return alg_.bottom();
      case FormulaKind::Top:
        return alg_.top();
      case FormulaKind::Neg:
        return alg_.impl(eval(f.operand()), alg_.bottom());
      case FormulaKind::StrongConj: {
        V a = eval(f.lhs());
        return alg_.mult(a, eval(f.rhs()));
      }
      case FormulaKind::Impl: {
        V a = eval(f.lhs());
        return alg_.impl(a, eval(f.rhs()));
      }
      case FormulaKind::Meet: {
        V a = eval(f.lhs());
        return alg_.meet(a, eval(f.rhs()));
      }
      case FormulaKind::Join: {
        V a = eval(f.lhs());
        return alg_.join(a, eval(f.rhs()));
      }
      case FormulaKind::Biimpl: {
        V a = eval(f.lhs());
        V b = eval(f.rhs());
        return alg_.meet(alg_.impl(a, b), alg_.impl(b, a));
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        const bool universal = f.kind() == FormulaKind::Forall;
        env_.emplace_back(&f.variable(), 0);
        V acc = eval(f.body());
        for (std::size_t d = 1; d < m_.domain_size; ++d) {
          if (acc == (universal ? alg_.bottom() : alg_.top())) break;
          env_.back().second = d;
          V v = eval(f.body());
          acc = universal ? alg_.meet(acc, v) : alg_.join(acc, v);
        }
        env_.pop_back();
        return acc;
      }
    }
    throw std::logic_error("unreachable formula kind");
  }

 private:
  V atom(const Formula& f) {
    auto it = m_.predicates.find(f.predicate());
    if (it == m_.predicates.end())
      throw EvaluationError("uninterpreted predicate " + f.predicate());
    if (it->second.arity != f.args().size())
      throw EvaluationError("predicate " + f.predicate() + " interpreted with arity " +
                            std::to_string(it->second.arity));
    std::size_t index = 0;
    for (const auto& a : f.args()) index = index * m_.domain_size + term_value(m_, env_, a);
    return it->second.values.at(index);
  }

  const Algebra& alg_;
  const BasicStructure<V>& m_;
  Environment env_;
};

}  // namespace detail

/// Tarski evaluation over a finite domain: & -> /\ \/ by the algebra's
/// t-norm, residuum, min and max; forall/exists as min/max over the domain.
/// Derived connectives are expanded (~a as a -> 0, a <-> b as the meet of
/// both residua). Throws EvaluationError for an uninterpreted symbol or an
/// unbound free variable.
template <class Algebra>
typename Algebra::value_type eval(const Algebra& algebra,
                                  const BasicStructure<typename Algebra::value_type>& m,
                                  const Formula& f, const Assignment& assignment = {}) {
  detail::Evaluator<Algebra, typename Algebra::value_type> ev(algebra, m);
  for (const auto& [var, value] : assignment) {
    if (value >= m.domain_size)
      throw EvaluationError("assignment of " + var + " outside the domain");
    ev.bind(var, value);
  }
  return ev.eval(f);
}

// Domain element denoted by a term.
template <class V>
std::size_t eval_term(const BasicStructure<V>& m, const Term& t, const Assignment& assignment = {}) {
  detail::Environment env;
  for (const auto& [var, value] : assignment) env.emplace_back(&var, value);
  return detail::term_value(m, env, t);
}

template <class V>
using PropositionalValuation = std::map<std::string, V>;  // atom_key -> value

namespace detail {

template <class Algebra, class V>
V eval_prop(const Algebra& alg, const PropositionalValuation<V>& valuation, const Formula& g) {
  switch (g.kind()) {
    case FormulaKind::Atom: {
      auto it = valuation.find(g.atom_key());
      if (it == valuation.end()) throw EvaluationError("no value for atom " + g.atom_key());
      return it->second;
    }
    case FormulaKind::Bottom:
      return alg.bottom();
    case FormulaKind::Top:
      return alg.top();
    case FormulaKind::Neg:
      return alg.impl(eval_prop(alg, valuation, g.operand()), alg.bottom());
    case FormulaKind::StrongConj: {
      V a = eval_prop(alg, valuation, g.lhs());
      return alg.mult(a, eval_prop(alg, valuation, g.rhs()));
    }
    case FormulaKind::Impl: {
      V a = eval_prop(alg, valuation, g.lhs());
      return alg.impl(a, eval_prop(alg, valuation, g.rhs()));
    }
    case FormulaKind::Meet: {
      V a = eval_prop(alg, valuation, g.lhs());
      return alg.meet(a, eval_prop(alg, valuation, g.rhs()));
    }
    case FormulaKind::Join: {
      V a = eval_prop(alg, valuation, g.lhs());
      return alg.join(a, eval_prop(alg, valuation, g.rhs()));
    }
    case FormulaKind::Biimpl: {
      V a = eval_prop(alg, valuation, g.lhs());
      V b = eval_prop(alg, valuation, g.rhs());
      return alg.meet(alg.impl(a, b), alg.impl(b, a));
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      throw EvaluationError("propositional evaluation of a quantified formula");
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace detail

/// Connective-only evaluation of a quantifier-free formula under a valuation
/// of its atoms (keyed by Formula::atom_key). Throws EvaluationError for a
/// missing atom or a quantifier.
template <class Algebra>
typename Algebra::value_type eval_propositional(
    const Algebra& algebra, const PropositionalValuation<typename Algebra::value_type>& valuation,
    const Formula& f) {
  return detail::eval_prop(algebra, valuation, f);
}

/// The space of all structures for a vocabulary over a finite chain at one
/// domain size. Order: lexicographic over the digit vector (constants, then
/// function tables, then predicate tables, each in name order, tables
/// row-major), last digit fastest. Constant and function digits count up from
/// element 0; predicate digits count down from the top value.
class StructureSpace {
 public:
  StructureSpace(const Vocabulary& vocab, std::size_t value_count, std::size_t domain_size);

  // Number of structures; +inf-safe as long double for budget checks.
  long double size() const { return size_; }
  std::size_t domain_size() const { return domain_size_; }

  // Visits structures in order; stops when `visit` returns false. Returns the
  // number of structures visited.
  std::uint64_t for_each(const std::function<bool(const Structure&)>& visit) const;
  // Same, restricted to indices in [begin, end).
  std::uint64_t for_range(std::uint64_t begin, std::uint64_t end,
                          const std::function<bool(const Structure&)>& visit) const;

  // Exact size; BudgetExceeded when it does not fit 64 bits.
  std::uint64_t count() const;

  Structure at(std::uint64_t index) const;

 private:
  struct Digit {
    enum class Kind { Constant, Function, Predicate } kind;
    std::string symbol;
    std::size_t offset;
    std::size_t radix;
  };
  Structure first() const;
  void assign(Structure& s, const Digit& d, std::size_t value) const;

  std::size_t value_count_;
  std::size_t domain_size_;
  Vocabulary vocab_;
  std::vector<Digit> digits_;
  long double size_ = 1;
};

// All structures (materialized); refuses with BudgetExceeded when the space
// exceeds `budget`.
std::vector<Structure> enumerate_structures(const Vocabulary& vocab, const FiniteChain& chain,
                                            std::size_t domain_size, std::uint64_t budget);

// Checks every vocabulary symbol is interpreted with total tables and values
// inside the chain's carrier.
void validate_structure(const Structure& m, const Vocabulary& vocab, const FiniteChain& chain);

// Reads a finite-chain structure point-wise into a bigger chain: rank 0 to
// bottom, the source top to the target top. Only for two-valued sources.
Structure lift_boolean(const Structure& m, const FiniteChain& target);

// Predicate values lifted along r -> r/(k-1).
StdStructure to_standard(const Structure& m, std::size_t chain_size);

/// Structure text format:
///   domain <n>
///   const c = <i>
///   fun f : <row-major table>
///   pred P : <row-major values>     (values "#k" ranks or "p/q" rationals)
/// Arity comes from `vocab` when declared there, else from the table length.
struct StructureText {
  std::size_t domain_size = 1;
  std::map<std::string, std::size_t> constants;
  std::map<std::string, Structure::FunctionTable> functions;
  std::map<std::string, std::pair<std::size_t, std::vector<TruthValue>>> predicates;
};

StructureText parse_structure_text(const std::string& text, const Vocabulary& vocab);
// Rationals p/q on a k-element chain denote rank p/q * (k-1) when integral.
Structure realize(const StructureText& s, const FiniteChain& chain);
StdStructure realize_standard(const StructureText& s);

std::string format_structure(const Structure& m);
std::string format_structure(const StdStructure& m);

}  // namespace fuzzyfo
