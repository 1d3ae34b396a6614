#include "fuzzyfo/errors.hpp"
#include "fuzzyfo/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace fuzzyfo {

// ---------------------------------------------------------------------------
// Vocabulary

bool Vocabulary::has_symbol(const std::string& name) const {
  return has_predicate(name) || has_function(name) || has_constant(name);
}

void Vocabulary::declare_predicate(const std::string& name, std::size_t arity) {
  if (auto it = predicates_.find(name); it != predicates_.end()) {
    if (it->second != arity)
      throw ArityError("predicate " + name + " declared with arity " + std::to_string(it->second) +
                       " and " + std::to_string(arity));
    return;
  }
  if (has_symbol(name)) throw VocabularyViolation("symbol " + name + " declared twice");
  predicates_.emplace(name, arity);
}

void Vocabulary::declare_function(const std::string& name, std::size_t arity) {
  if (arity == 0) {
    declare_constant(name);
    return;
  }
  if (auto it = functions_.find(name); it != functions_.end()) {
    if (it->second != arity)
      throw ArityError("function " + name + " declared with arity " + std::to_string(it->second) +
                       " and " + std::to_string(arity));
    return;
  }
  if (relational_)
    throw VocabularyViolation("function symbol " + name + "/" + std::to_string(arity) +
                              " is not allowed in a relational vocabulary");
  if (has_symbol(name)) throw VocabularyViolation("symbol " + name + " declared twice");
  functions_.emplace(name, arity);
}

void Vocabulary::declare_constant(const std::string& name) {
  if (has_constant(name)) return;
  if (has_symbol(name)) throw VocabularyViolation("symbol " + name + " declared twice");
  constants_.insert(name);
}

void Vocabulary::set_relational(bool flag) {
  if (flag && !functions_.empty())
    throw VocabularyViolation("vocabulary with function symbols cannot be relational");
  relational_ = flag;
}

void Vocabulary::merge(const Vocabulary& other) {
  for (const auto& [p, n] : other.predicates_) declare_predicate(p, n);
  for (const auto& [f, n] : other.functions_) declare_function(f, n);
  for (const auto& c : other.constants_) declare_constant(c);
}

Vocabulary parse_vocabulary(const std::string& text) {
  Vocabulary v;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool relational = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw, sym, extra;
    if (!(ls >> kw)) continue;
    if (kw == "relational") {
      relational = true;
      continue;
    }
    if (!(ls >> sym) || (ls >> extra))
      throw ParseError("vocabulary line " + std::to_string(line_no) + " is malformed", line_no);
    auto split = [&](const std::string& s) -> std::pair<std::string, std::size_t> {
      const auto slash = s.find('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw ParseError("expected name/arity on vocabulary line " + std::to_string(line_no),
                         line_no);
      try {
        return {s.substr(0, slash), std::stoul(s.substr(slash + 1))};
      } catch (const std::exception&) {
        throw ParseError("bad arity on vocabulary line " + std::to_string(line_no), line_no);
      }
    };
    if (kw == "pred") {
      auto [name, arity] = split(sym);
      if (!std::isupper(static_cast<unsigned char>(name[0])))
        throw ParseError("predicate names start uppercase: " + name, line_no);
      v.declare_predicate(name, arity);
    } else if (kw == "fun") {
      auto [name, arity] = split(sym);
      if (!std::islower(static_cast<unsigned char>(name[0])))
        throw ParseError("function names start lowercase: " + name, line_no);
      if (arity == 0) throw ArityError("function " + name + " needs arity >= 1; use const");
      v.declare_function(name, arity);
    } else if (kw == "const") {
      if (!std::islower(static_cast<unsigned char>(sym[0])))
        throw ParseError("constant names start lowercase: " + sym, line_no);
      v.declare_constant(sym);
    } else {
      throw ParseError("unknown vocabulary keyword '" + kw + "'", line_no);
    }
  }
  v.set_relational(relational);
  return v;
}

std::string format_vocabulary(const Vocabulary& vocab) {
  std::ostringstream os;
  for (const auto& [p, n] : vocab.predicates()) os << "pred " << p << "/" << n << "\n";
  for (const auto& [f, n] : vocab.functions()) os << "fun " << f << "/" << n << "\n";
  for (const auto& c : vocab.constants()) os << "const " << c << "\n";
  if (vocab.relational()) os << "relational\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Terms

bool Term::is_closed() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_closed(); });
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return kind == Kind::Application ? d + 1 : 0;
}

namespace {

void print_term(std::string& out, const Term& t) {
  out += t.name;
  if (t.kind != Term::Kind::Application) return;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ',';
    print_term(out, t.args[i]);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string s;
  print_term(s, t);
  return s;
}

// ---------------------------------------------------------------------------
// Formula nodes

struct Formula::Node {
  FormulaKind kind;
  std::string name;  // predicate or bound variable
  std::vector<Term> args;
  std::string key;  // atoms only
  Formula a{nullptr}, b{nullptr};
};

namespace {

std::shared_ptr<Formula::Node> make_node(FormulaKind k) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  return n;
}

}  // namespace

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = make_node(FormulaKind::Atom);
  n->key = predicate;
  if (!args.empty()) {
    n->key += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) n->key += ',';
      print_term(n->key, args[i]);
    }
    n->key += ')';
  }
  n->name = std::move(predicate);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  static const Formula f(make_node(FormulaKind::Bottom));
  return f;
}

Formula Formula::top() {
  static const Formula f(make_node(FormulaKind::Top));
  return f;
}

Formula Formula::neg(Formula a) {
  auto n = make_node(FormulaKind::Neg);
  n->a = std::move(a);
  return Formula(std::move(n));
}

#define FUZZYFO_BINARY(fn, K)                 \
  Formula Formula::fn(Formula a, Formula b) { \
    auto n = make_node(FormulaKind::K);       \
    n->a = std::move(a);                      \
    n->b = std::move(b);                      \
    return Formula(std::move(n));             \
  }
FUZZYFO_BINARY(strong_conj, StrongConj)
FUZZYFO_BINARY(impl, Impl)
FUZZYFO_BINARY(meet, Meet)
FUZZYFO_BINARY(join, Join)
FUZZYFO_BINARY(biimpl, Biimpl)
#undef FUZZYFO_BINARY

Formula Formula::forall(std::string var, Formula body) {
  auto n = make_node(FormulaKind::Forall);
  n->name = std::move(var);
  n->a = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  auto n = make_node(FormulaKind::Exists);
  n->name = std::move(var);
  n->a = std::move(body);
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  switch (kind()) {
    case FormulaKind::StrongConj:
    case FormulaKind::Impl:
    case FormulaKind::Meet:
    case FormulaKind::Join:
    case FormulaKind::Biimpl:
      return true;
    default:
      return false;
  }
}

bool Formula::is_quantifier() const {
  return kind() == FormulaKind::Forall || kind() == FormulaKind::Exists;
}

bool Formula::is_truth_constant() const {
  return kind() == FormulaKind::Bottom || kind() == FormulaKind::Top;
}

const std::string& Formula::predicate() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const std::string& Formula::atom_key() const { return node_->key; }
const std::string& Formula::variable() const { return node_->name; }

const Formula& Formula::operand() const { return node_->a; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FormulaKind::Atom:
      return a.key == b.key && a.name == b.name && a.args == b.args;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Neg:
      return x.operand() == y.operand();
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return a.name == b.name && x.body() == y.body();
    default:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* op_text(FormulaKind k) {
  switch (k) {
    case FormulaKind::StrongConj: return " & ";
    case FormulaKind::Impl: return " -> ";
    case FormulaKind::Meet: return " /\\ ";
    case FormulaKind::Join: return " \\/ ";
    case FormulaKind::Biimpl: return " <-> ";
    default: return "?";
  }
}

void print_formula(std::string& out, const Formula& f, bool parenthesize_binary) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.atom_key();
      return;
    case FormulaKind::Bottom:
      out += '0';
      return;
    case FormulaKind::Top:
      out += '1';
      return;
    case FormulaKind::Neg:
      out += '~';
      print_formula(out, f.operand(), true);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.kind() == FormulaKind::Forall ? "forall " : "exists ";
      out += f.variable();
      out += ". ";
      print_formula(out, f.body(), true);
      return;
    default:
      if (parenthesize_binary) out += '(';
      print_formula(out, f.lhs(), true);
      out += op_text(f.kind());
      print_formula(out, f.rhs(), true);
      if (parenthesize_binary) out += ')';
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string s;
  print_formula(s, f, false);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

// ---------------------------------------------------------------------------
// Traversals

namespace {

void term_vars(const Term& t, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Variable) {
    if (!bound.count(t.name)) out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) term_vars(a, bound, out);
}

void free_vars_rec(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      for (const auto& t : f.args()) term_vars(t, bound, out);
      return;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::Neg:
      free_vars_rec(f.operand(), bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const bool inserted = bound.insert(f.variable()).second;
      free_vars_rec(f.body(), bound, out);
      if (inserted) bound.erase(f.variable());
      return;
    }
    default:
      free_vars_rec(f.lhs(), bound, out);
      free_vars_rec(f.rhs(), bound, out);
  }
}

void collect_term_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name);
  for (const auto& a : t.args) collect_term_names(a, out);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out.insert(f.predicate());
      for (const auto& t : f.args()) collect_term_names(t, out);
      return;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::Neg:
      collect_names(f.operand(), out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.insert(f.variable());
      collect_names(f.body(), out);
      return;
    default:
      collect_names(f.lhs(), out);
      collect_names(f.rhs(), out);
  }
}

Formula rebuild_binary(FormulaKind k, Formula a, Formula b) {
  switch (k) {
    case FormulaKind::StrongConj: return Formula::strong_conj(std::move(a), std::move(b));
    case FormulaKind::Impl: return Formula::impl(std::move(a), std::move(b));
    case FormulaKind::Meet: return Formula::meet(std::move(a), std::move(b));
    case FormulaKind::Join: return Formula::join(std::move(a), std::move(b));
    case FormulaKind::Biimpl: return Formula::biimpl(std::move(a), std::move(b));
    default: throw std::logic_error("rebuild_binary on non-binary kind");
  }
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& env) {
  if (t.kind == Term::Kind::Variable) {
    auto it = env.find(t.name);
    return it == env.end() ? t : Term::variable(it->second);
  }
  if (t.kind == Term::Kind::Constant) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(rename_term(a, env));
  return Term::apply(t.name, std::move(args));
}

struct Renamer {
  std::set<std::string> taken;     // binder names already used, plus free variables
  std::set<std::string> all_names;  // every identifier in the formula

  std::string fresh(const std::string& base) {
    if (!taken.count(base)) {
      taken.insert(base);
      return base;
    }
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (!taken.count(candidate) && !all_names.count(candidate)) {
        taken.insert(candidate);
        all_names.insert(candidate);
        return candidate;
      }
    }
  }

  Formula run(const Formula& f, std::map<std::string, std::string>& env) {
    switch (f.kind()) {
      case FormulaKind::Atom: {
        std::vector<Term> args;
        args.reserve(f.args().size());
        for (const auto& t : f.args()) args.push_back(rename_term(t, env));
        return Formula::atom(f.predicate(), std::move(args));
      }
      case FormulaKind::Bottom:
      case FormulaKind::Top:
        return f;
      case FormulaKind::Neg:
        return Formula::neg(run(f.operand(), env));
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        const std::string name = fresh(f.variable());
        auto saved = env.find(f.variable()) == env.end()
                         ? std::optional<std::string>{}
                         : std::optional<std::string>{env[f.variable()]};
        env[f.variable()] = name;
        Formula body = run(f.body(), env);
        if (saved) env[f.variable()] = *saved;
        else env.erase(f.variable());
        return f.kind() == FormulaKind::Forall ? Formula::forall(name, std::move(body))
                                              : Formula::exists(name, std::move(body));
      }
      default: {
        Formula a = run(f.lhs(), env);
        return rebuild_binary(f.kind(), std::move(a), run(f.rhs(), env));
      }
    }
  }
};

Term substitute_term(const Term& t, const std::string& var, const Term& replacement) {
  if (t.kind == Term::Kind::Variable) return t.name == var ? replacement : t;
  if (t.kind == Term::Kind::Constant) return t;
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(substitute_term(a, var, replacement));
  return Term::apply(t.name, std::move(args));
}

bool term_mentions(const Term& t, const std::string& var) {
  if (t.kind == Term::Kind::Variable) return t.name == var;
  return std::any_of(t.args.begin(), t.args.end(),
                     [&](const Term& a) { return term_mentions(a, var); });
}

bool mentions_free(const Formula& f, const std::string& var) {
  return free_variables(f).count(var) != 0;
}

Formula substitute_rec(const Formula& f, const std::string& var, const Term& term,
                       const std::set<std::string>& term_vars_set) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      const bool hit = std::any_of(f.args().begin(), f.args().end(),
                                   [&](const Term& t) { return term_mentions(t, var); });
      if (!hit) return f;
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& t : f.args()) args.push_back(substitute_term(t, var, term));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return f;
    case FormulaKind::Neg:
      return Formula::neg(substitute_rec(f.operand(), var, term, term_vars_set));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (f.variable() == var) return f;
      if (term_vars_set.count(f.variable()) && mentions_free(f.body(), var))
        throw FragmentError("substituting " + to_string(term) + " for " + var +
                            " would capture " + f.variable());
      Formula body = substitute_rec(f.body(), var, term, term_vars_set);
      return f.kind() == FormulaKind::Forall ? Formula::forall(f.variable(), std::move(body))
                                            : Formula::exists(f.variable(), std::move(body));
    }
    default:
      return rebuild_binary(f.kind(), substitute_rec(f.lhs(), var, term, term_vars_set),
                            substitute_rec(f.rhs(), var, term, term_vars_set));
  }
}

bool alpha_rec(const Formula& a, const Formula& b, std::map<std::string, std::string>& ab,
               std::map<std::string, std::string>& ba);

bool alpha_term(const Term& x, const Term& y, const std::map<std::string, std::string>& ab,
                const std::map<std::string, std::string>& ba) {
  if (x.kind != y.kind || x.args.size() != y.args.size()) return false;
  if (x.kind == Term::Kind::Variable) {
    auto ix = ab.find(x.name);
    auto iy = ba.find(y.name);
    if (ix == ab.end() && iy == ba.end()) return x.name == y.name;
    return ix != ab.end() && iy != ba.end() && ix->second == y.name && iy->second == x.name;
  }
  if (x.name != y.name) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!alpha_term(x.args[i], y.args[i], ab, ba)) return false;
  return true;
}

bool alpha_rec(const Formula& a, const Formula& b, std::map<std::string, std::string>& ab,
               std::map<std::string, std::string>& ba) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Atom:
      if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_term(a.args()[i], b.args()[i], ab, ba)) return false;
      return true;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Neg:
      return alpha_rec(a.operand(), b.operand(), ab, ba);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      auto sa = ab;
      auto sb = ba;
      ab[a.variable()] = b.variable();
      ba[b.variable()] = a.variable();
      const bool ok = alpha_rec(a.body(), b.body(), ab, ba);
      ab = std::move(sa);
      ba = std::move(sb);
      return ok;
    }
    default:
      return alpha_rec(a.lhs(), b.lhs(), ab, ba) && alpha_rec(a.rhs(), b.rhs(), ab, ba);
  }
}

void collect_atoms(const Formula& f, std::vector<Formula>& out, std::set<std::string>& seen) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (seen.insert(f.atom_key()).second) out.push_back(f);
      return;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::Neg:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      collect_atoms(f.operand(), out, seen);
      return;
    default:
      collect_atoms(f.lhs(), out, seen);
      collect_atoms(f.rhs(), out, seen);
  }
}

void infer_term(const Term& t, Vocabulary& v) {
  if (t.kind == Term::Kind::Constant) v.declare_constant(t.name);
  if (t.kind != Term::Kind::Application) return;
  v.declare_function(t.name, t.args.size());
  for (const auto& a : t.args) infer_term(a, v);
}

void infer_rec(const Formula& f, Vocabulary& v) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      v.declare_predicate(f.predicate(), f.args().size());
      for (const auto& t : f.args()) infer_term(t, v);
      return;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::Neg:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      infer_rec(f.operand(), v);
      return;
    default:
      infer_rec(f.lhs(), v);
      infer_rec(f.rhs(), v);
  }
}

void check_term(const Term& t, const Vocabulary& v) {
  if (t.kind == Term::Kind::Constant && !v.has_constant(t.name))
    throw VocabularyViolation("undeclared constant " + t.name);
  if (t.kind != Term::Kind::Application) return;
  auto it = v.functions().find(t.name);
  if (it == v.functions().end()) {
    if (v.relational())
      throw VocabularyViolation("function symbol " + t.name +
                                " used with a relational vocabulary");
    throw VocabularyViolation("undeclared function " + t.name);
  }
  if (it->second != t.args.size())
    throw ArityError("function " + t.name + " has arity " + std::to_string(it->second) +
                     ", applied to " + std::to_string(t.args.size()) + " arguments");
  for (const auto& a : t.args) check_term(a, v);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

Formula rename_apart(const Formula& f) {
  Renamer r;
  r.taken = free_variables(f);
  collect_names(f, r.all_names);
  std::map<std::string, std::string> env;
  return r.run(f, env);
}

bool alpha_equivalent(const Formula& a, const Formula& b) {
  std::map<std::string, std::string> ab, ba;
  return alpha_rec(a, b, ab, ba);
}

Formula substitute(const Formula& f, const std::string& var, const Term& term) {
  std::set<std::string> tv;
  term_vars(term, {}, tv);
  return substitute_rec(f, var, term, tv);
}

std::vector<Formula> atoms_of(const Formula& f) {
  std::vector<Formula> out;
  std::set<std::string> seen;
  collect_atoms(f, out, seen);
  return out;
}

Vocabulary infer_vocabulary(const Formula& f) {
  Vocabulary v;
  infer_rec(f, v);
  return v;
}

void check_against(const Formula& f, const Vocabulary& vocab) {
  std::function<void(const Formula&)> rec = [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::Atom: {
        auto it = vocab.predicates().find(g.predicate());
        if (it == vocab.predicates().end())
          throw VocabularyViolation("undeclared predicate " + g.predicate());
        if (it->second != g.args().size())
          throw ArityError("predicate " + g.predicate() + " has arity " +
                           std::to_string(it->second) + ", applied to " +
                           std::to_string(g.args().size()) + " arguments");
        for (const auto& t : g.args()) check_term(t, vocab);
        return;
      }
      case FormulaKind::Bottom:
      case FormulaKind::Top:
        return;
      case FormulaKind::Neg:
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        rec(g.operand());
        return;
      default:
        rec(g.lhs());
        rec(g.rhs());
    }
  };
  rec(f);
}

}  // namespace fuzzyfo
