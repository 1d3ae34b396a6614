#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzyfo {

/// First-order vocabulary. Predicates start uppercase; functions and
/// constants lowercase. A relational vocabulary admits no function symbols
/// of arity >= 1 (constants are still allowed).
class Vocabulary {
 public:
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }
  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  const std::set<std::string>& constants() const { return constants_; }
  bool relational() const { return relational_; }

  // Each declare_* throws ArityError on a conflicting redeclaration and
  // VocabularyViolation on a name clash or a function under `relational`.
  void declare_predicate(const std::string& name, std::size_t arity);
  void declare_function(const std::string& name, std::size_t arity);
  void declare_constant(const std::string& name);
  void set_relational(bool flag);

  bool has_predicate(const std::string& name) const { return predicates_.count(name) != 0; }
  bool has_function(const std::string& name) const { return functions_.count(name) != 0; }
  bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }
  bool has_symbol(const std::string& name) const;

  // Adds every symbol of `other`; the relational flag is kept from *this.
  void merge(const Vocabulary& other);

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::map<std::string, std::size_t> predicates_;
  std::map<std::string, std::size_t> functions_;
  std::set<std::string> constants_;
  bool relational_ = false;
};

// Lines "pred P/2", "fun f/1", "const c", "relational"; '#' comments.
Vocabulary parse_vocabulary(const std::string& text);
std::string format_vocabulary(const Vocabulary& vocab);

struct Term {
  enum class Kind { Variable, Constant, Application };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;

  static Term variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
  static Term constant(std::string name) { return {Kind::Constant, std::move(name), {}}; }
  static Term apply(std::string function, std::vector<Term> args) {
    return {Kind::Application, std::move(function), std::move(args)};
  }

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_closed() const;
  // Function-nesting depth: 0 for constants and variables.
  std::size_t depth() const;

  friend bool operator==(const Term&, const Term&) = default;
};

std::string to_string(const Term& t);

enum class FormulaKind {
  Atom,
  Bottom,
  Top,
  Neg,         // ¬a, read as a -> 0
  StrongConj,  // a & b
  Impl,        // a -> b
  Meet,        // a /\ b
  Join,        // a \/ b
  Biimpl,      // a <-> b, read as (a -> b) /\ (b -> a)
  Forall,
  Exists,
};

/// Immutable first-order formula. Copies share structure; equality is
/// structural (bound-variable names included, see alpha_equivalent).
class Formula {
 public:
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula bottom();
  static Formula top();
  static Formula neg(Formula a);
  static Formula strong_conj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula meet(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula biimpl(Formula a, Formula b);
  static Formula square(const Formula& a) { return strong_conj(a, a); }
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  FormulaKind kind() const;
  bool is_atom() const { return kind() == FormulaKind::Atom; }
  bool is_binary() const;
  bool is_quantifier() const;
  bool is_truth_constant() const;

  // Atom accessors.
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  // Printed form of a closed or open atom, e.g. "P(f(c),x)"; stable key for
  // propositional valuations.
  const std::string& atom_key() const;

  // Quantifier variable.
  const std::string& variable() const;
  // Operand of Neg, body of a quantifier.
  const Formula& operand() const;
  const Formula& body() const { return operand(); }
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool same_node(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// Parses against a declared vocabulary. Unbound lowercase names that are not
// declared constants become free variables. Bound variables are renamed apart.
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

// Parses with an open vocabulary: symbols are declared on first use and
// unbound lowercase names are constants.
Formula parse_formula(std::string_view text);

// Every symbol occurring in `f` (relational flag false).
Vocabulary infer_vocabulary(const Formula& f);
// Throws ArityError / VocabularyViolation when `f` does not fit `vocab`.
void check_against(const Formula& f, const Vocabulary& vocab);

std::set<std::string> free_variables(const Formula& f);
bool is_sentence(const Formula& f);

// Renames bound variables so every binder is distinct and no binder shares a
// name with a free variable: the first binder of `x` keeps its name, later
// ones become x_1, x_2, ... (skipping any name already in use).
Formula rename_apart(const Formula& f);

bool alpha_equivalent(const Formula& a, const Formula& b);

// Replaces free occurrences of `var` by `term`. Throws FragmentError if a
// variable of `term` would be captured.
Formula substitute(const Formula& f, const std::string& var, const Term& term);

// Distinct atoms in first-occurrence order (left to right).
std::vector<Formula> atoms_of(const Formula& f);

struct Classification {
  bool is_literal = false;
  bool is_lattice_literal_combination = false;
  bool is_purely_universal = false;
  bool is_relational = false;
  bool is_sentence = false;
  bool is_quantifier_free = false;
  // Literals combined with /\, \/, forall, exists: the domain of star_translate.
  bool in_star_fragment = false;
};

Classification classify(const Formula& f);

// Squares every literal and commutes with /\, \/, forall, exists. Throws
// FragmentError naming the first offending subformula otherwise (truth
// constants included).
Formula star_translate(const Formula& f);

// Classical negation normal form: literals, /\, \/, forall, exists only.
// & is read as /\, -> and <-> are eliminated, truth constants are absorbed;
// the result is a bare truth constant only when the input is classically
// constant by absorption. Bound variables of the result are renamed apart.
Formula classical_nnf(const Formula& f);

bool is_nnf(const Formula& f);

struct SkolemResult {
  Formula formula;
  Vocabulary vocabulary;  // input vocabulary extended by the fresh symbols
  std::vector<std::pair<std::string, std::size_t>> fresh;  // name, arity; in creation order
};

// Replaces every existential of an NNF sentence by a fresh Skolem term over
// the universals in scope (names sk_1, sk_2, ... left to right) and moves the
// remaining universals to a prefix. Throws VocabularyViolation when the
// vocabulary is relational and a Skolem function of arity >= 1 is needed.
SkolemResult skolemize(const Formula& f, const Vocabulary& vocab);

struct UniversalForm {
  std::vector<std::string> variables;
  Formula matrix;
};

// Splits a purely universal formula into prefix and quantifier-free matrix.
std::optional<UniversalForm> split_universal(const Formula& f);
Formula close_universally(const std::vector<std::string>& vars, Formula matrix);

inline constexpr const char* kDefaultHerbrandConstant = "c0";

// Closed terms of nesting depth <= depth ordered by depth, then by printed
// form. Adds the constant c0 when the vocabulary has none.
std::vector<Term> herbrand_universe(const Vocabulary& vocab, std::size_t depth,
                                    std::size_t max_terms = 1'000'000);

}  // namespace fuzzyfo
