#include "fuzzyfo/semantics.hpp"

#include "fuzzyfo/budget.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace fuzzyfo {

std::uint64_t search_budget() {
  if (const char* env = std::getenv("FUZZYFO_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSearchBudget;
}

void require_within_budget(const std::string& what, long double space, std::uint64_t budget) {
  if (space > static_cast<long double>(budget)) throw BudgetExceeded(what, space, budget);
}

std::string to_string(const TruthValue& v) {
  if (const Rank* r = std::get_if<Rank>(&v)) return "#" + std::to_string(*r);
  return std::get<StdRational>(v).str();
}

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

StructureSpace::StructureSpace(const Vocabulary& vocab, std::size_t value_count,
                               std::size_t domain_size)
    : value_count_(value_count), domain_size_(domain_size), vocab_(vocab) {
  if (domain_size == 0) throw InvalidSize("structures need a nonempty domain");
  for (const auto& c : vocab.constants()) {
    digits_.push_back({Digit::Kind::Constant, c, 0, domain_size});
    size_ *= domain_size;
  }
  for (const auto& [f, arity] : vocab.functions()) {
    const long double entries = std::pow(static_cast<long double>(domain_size), arity);
    size_ *= std::pow(static_cast<long double>(domain_size), entries);
    if (entries > 1e6) continue;  // reported through size(); never enumerated
    for (std::size_t i = 0; i < static_cast<std::size_t>(entries); ++i)
      digits_.push_back({Digit::Kind::Function, f, i, domain_size});
  }
  for (const auto& [p, arity] : vocab.predicates()) {
    const long double entries = std::pow(static_cast<long double>(domain_size), arity);
    size_ *= std::pow(static_cast<long double>(value_count), entries);
    if (entries > 1e6) continue;
    for (std::size_t i = 0; i < static_cast<std::size_t>(entries); ++i)
      digits_.push_back({Digit::Kind::Predicate, p, i, value_count});
  }
}

Structure StructureSpace::first() const {
  if (size_ > 1e18L) throw BudgetExceeded("structure space", size_, 1'000'000'000'000'000'000ULL);
  Structure s;
  s.domain_size = domain_size_;
  for (const auto& c : vocab_.constants()) s.constants[c] = 0;
  for (const auto& [f, arity] : vocab_.functions())
    s.functions[f] = {arity, std::vector<std::size_t>(ipow(domain_size_, arity), 0)};
  for (const auto& [p, arity] : vocab_.predicates())
    s.predicates[p] = {arity, std::vector<Rank>(ipow(domain_size_, arity),
                                                static_cast<Rank>(value_count_ - 1))};
  return s;
}

void StructureSpace::assign(Structure& s, const Digit& d, std::size_t value) const {
  switch (d.kind) {
    case Digit::Kind::Constant:
      s.constants[d.symbol] = value;
      return;
    case Digit::Kind::Function:
      s.functions[d.symbol].table[d.offset] = value;
      return;
    case Digit::Kind::Predicate:
      s.predicates[d.symbol].values[d.offset] = static_cast<Rank>(value_count_ - 1 - value);
      return;
  }
}

std::uint64_t StructureSpace::count() const {
  if (size_ > 1e18L) throw BudgetExceeded("structure space", size_, 1'000'000'000'000'000'000ULL);
  std::uint64_t n = 1;
  for (const auto& d : digits_) n *= d.radix;
  return n;
}

std::uint64_t StructureSpace::for_each(const std::function<bool(const Structure&)>& visit) const {
  return for_range(0, count(), visit);
}

std::uint64_t StructureSpace::for_range(std::uint64_t begin, std::uint64_t end,
                                        const std::function<bool(const Structure&)>& visit) const {
  if (begin >= end) return 0;
  Structure s = first();
  std::vector<std::size_t> value(digits_.size(), 0);
  std::uint64_t rest = begin;
  for (std::size_t i = digits_.size(); i-- > 0;) {
    value[i] = rest % digits_[i].radix;
    rest /= digits_[i].radix;
    assign(s, digits_[i], value[i]);
  }
  std::uint64_t visited = 0;
  for (std::uint64_t index = begin;;) {
    ++visited;
    if (!visit(s) || ++index == end) return visited;
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++value[i] < digits_[i].radix) {
        assign(s, digits_[i], value[i]);
        break;
      }
      value[i] = 0;
      assign(s, digits_[i], 0);
    }
  }
}

Structure StructureSpace::at(std::uint64_t index) const {
  Structure s = first();
  for (std::size_t i = digits_.size(); i-- > 0;) {
    assign(s, digits_[i], index % digits_[i].radix);
    index /= digits_[i].radix;
  }
  return s;
}

std::vector<Structure> enumerate_structures(const Vocabulary& vocab, const FiniteChain& chain,
                                            std::size_t domain_size, std::uint64_t budget) {
  StructureSpace space(vocab, chain.size(), domain_size);
  require_within_budget("structure enumeration", space.size(), budget);
  std::vector<Structure> out;
  space.for_each([&](const Structure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

void validate_structure(const Structure& m, const Vocabulary& vocab, const FiniteChain& chain) {
  const std::size_t n = m.domain_size;
  if (n == 0) throw EvaluationError("empty domain");
  for (const auto& c : vocab.constants()) {
    auto it = m.constants.find(c);
    if (it == m.constants.end()) throw EvaluationError("uninterpreted constant " + c);
    if (it->second >= n) throw EvaluationError("constant " + c + " outside the domain");
  }
  for (const auto& [f, arity] : vocab.functions()) {
    auto it = m.functions.find(f);
    if (it == m.functions.end()) throw EvaluationError("uninterpreted function " + f);
    if (it->second.arity != arity || it->second.table.size() != ipow(n, arity))
      throw EvaluationError("function table for " + f + " has the wrong shape");
    for (auto v : it->second.table)
      if (v >= n) throw EvaluationError("function " + f + " maps outside the domain");
  }
  for (const auto& [p, arity] : vocab.predicates()) {
    auto it = m.predicates.find(p);
    if (it == m.predicates.end()) throw EvaluationError("uninterpreted predicate " + p);
    if (it->second.arity != arity || it->second.values.size() != ipow(n, arity))
      throw EvaluationError("predicate table for " + p + " has the wrong shape");
    for (auto v : it->second.values)
      if (!chain.contains(v)) throw EvaluationError("predicate " + p + " value outside the chain");
  }
}

Structure lift_boolean(const Structure& m, const FiniteChain& target) {
  Structure out = m;
  for (auto& [name, table] : out.predicates)
    for (auto& v : table.values) {
      if (v > 1) throw EvaluationError("lift_boolean: predicate " + name + " is not two-valued");
      v = v ? target.top() : target.bottom();
    }
  return out;
}

StdStructure to_standard(const Structure& m, std::size_t chain_size) {
  StdStructure out;
  out.domain_size = m.domain_size;
  out.constants = m.constants;
  for (const auto& [f, t] : m.functions) out.functions[f] = {t.arity, t.table};
  for (const auto& [p, t] : m.predicates) {
    std::vector<StdRational> values;
    values.reserve(t.values.size());
    for (Rank r : t.values) values.push_back(rank_to_std(r, chain_size));
    out.predicates[p] = {t.arity, std::move(values)};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure text format

namespace {

std::size_t arity_from_length(const std::string& sym, std::size_t len, std::size_t n,
                              std::size_t line_no) {
  if (n == 1) {
    if (len != 1) throw ParseError("table for " + sym + " must have 1 entry", line_no);
    return 0;
  }
  std::size_t arity = 0, size = 1;
  while (size < len) {
    size *= n;
    ++arity;
  }
  if (size != len)
    throw ParseError("table for " + sym + " has " + std::to_string(len) +
                         " entries, not a power of the domain size",
                     line_no);
  return arity;
}

// A '#' that does not start a rank token ("#3") begins a comment.
std::string strip_comment(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '#') continue;
    const bool token_start = i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1]));
    const bool rank = token_start && i + 1 < line.size() &&
                      std::isdigit(static_cast<unsigned char>(line[i + 1]));
    if (!rank) return line.substr(0, i);
  }
  return line;
}

}  // namespace

StructureText parse_structure_text(const std::string& text, const Vocabulary& vocab) {
  StructureText s;
  bool have_domain = false;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "domain") {
      long n = 0;
      if (!(ls >> n) || n < 1) throw ParseError("domain size must be a positive integer", line_no);
      s.domain_size = static_cast<std::size_t>(n);
      have_domain = true;
      continue;
    }
    if (!have_domain) throw ParseError("structure file must start with 'domain <n>'", line_no);
    std::string sym, sep;
    if (!(ls >> sym >> sep)) throw ParseError("malformed structure line", line_no);
    std::vector<std::string> values;
    for (std::string v; ls >> v;) values.push_back(v);
    auto parse_index = [&](const std::string& v) {
      try {
        std::size_t used = 0;
        const long i = std::stol(v, &used);
        if (used != v.size() || i < 0 || static_cast<std::size_t>(i) >= s.domain_size)
          throw std::invalid_argument("");
        return static_cast<std::size_t>(i);
      } catch (const std::logic_error&) {
        throw ParseError("'" + v + "' is not a domain element", line_no);
      }
    };
    if (kw == "const") {
      if (sep != "=" || values.size() != 1) throw ParseError("expected 'const c = <i>'", line_no);
      s.constants[sym] = parse_index(values[0]);
    } else if (kw == "fun") {
      if (sep != ":") throw ParseError("expected 'fun f : <table>'", line_no);
      std::size_t arity = vocab.has_function(sym)
                              ? vocab.functions().at(sym)
                              : arity_from_length(sym, values.size(), s.domain_size, line_no);
      if (values.size() != ipow(s.domain_size, arity))
        throw ParseError("function table for " + sym + " needs " +
                             std::to_string(ipow(s.domain_size, arity)) + " entries",
                         line_no);
      Structure::FunctionTable t{arity, {}};
      for (const auto& v : values) t.table.push_back(parse_index(v));
      s.functions[sym] = std::move(t);
    } else if (kw == "pred") {
      if (sep != ":") throw ParseError("expected 'pred P : <values>'", line_no);
      std::size_t arity = vocab.has_predicate(sym)
                              ? vocab.predicates().at(sym)
                              : arity_from_length(sym, values.size(), s.domain_size, line_no);
      if (values.size() != ipow(s.domain_size, arity))
        throw ParseError("predicate table for " + sym + " needs " +
                             std::to_string(ipow(s.domain_size, arity)) + " entries",
                         line_no);
      std::vector<TruthValue> vs;
      for (const auto& v : values) {
        if (!v.empty() && v[0] == '#') {
          try {
            std::size_t used = 0;
            const long r = std::stol(v.substr(1), &used);
            if (used + 1 != v.size() || r < 0) throw std::invalid_argument("");
            vs.emplace_back(static_cast<Rank>(r));
          } catch (const std::logic_error&) {
            throw ParseError("malformed rank '" + v + "'", line_no);
          }
        } else {
          vs.emplace_back(parse_std_rational(v));
        }
      }
      s.predicates[sym] = {arity, std::move(vs)};
    } else {
      throw ParseError("unknown structure keyword '" + kw + "'", line_no);
    }
  }
  if (!have_domain) throw ParseError("structure file must start with 'domain <n>'", 1);
  return s;
}

Structure realize(const StructureText& s, const FiniteChain& chain) {
  Structure m;
  m.domain_size = s.domain_size;
  m.constants = s.constants;
  m.functions = s.functions;
  const BigRational scale(static_cast<long long>(chain.size() - 1));
  for (const auto& [p, entry] : s.predicates) {
    Structure::PredicateTable t{entry.first, {}};
    for (const auto& v : entry.second) {
      if (const Rank* r = std::get_if<Rank>(&v)) {
        if (!chain.contains(*r))
          throw EvaluationError("rank #" + std::to_string(*r) + " outside " + chain.label());
        t.values.push_back(*r);
      } else {
        const BigRational scaled = std::get<StdRational>(v).value() * scale;
        if (boost::multiprecision::denominator(scaled) != 1)
          throw EvaluationError("value " + std::get<StdRational>(v).str() + " is not on the grid of " +
                                chain.label());
        t.values.push_back(static_cast<Rank>(boost::multiprecision::numerator(scaled)));
      }
    }
    m.predicates[p] = std::move(t);
  }
  return m;
}

StdStructure realize_standard(const StructureText& s) {
  StdStructure m;
  m.domain_size = s.domain_size;
  m.constants = s.constants;
  for (const auto& [f, t] : s.functions) m.functions[f] = {t.arity, t.table};
  for (const auto& [p, entry] : s.predicates) {
    StdStructure::PredicateTable t{entry.first, {}};
    for (const auto& v : entry.second) {
      if (std::holds_alternative<Rank>(v))
        throw EvaluationError("rank values are not meaningful on the standard chain (predicate " +
                              p + ")");
      t.values.push_back(std::get<StdRational>(v));
    }
    m.predicates[p] = std::move(t);
  }
  return m;
}

namespace {

template <class V, class Fmt>
std::string format_any(const BasicStructure<V>& m, Fmt fmt) {
  std::ostringstream os;
  os << "domain " << m.domain_size << "\n";
  for (const auto& [c, i] : m.constants) os << "const " << c << " = " << i << "\n";
  for (const auto& [f, t] : m.functions) {
    os << "fun " << f << " :";
    for (auto v : t.table) os << " " << v;
    os << "\n";
  }
  for (const auto& [p, t] : m.predicates) {
    os << "pred " << p << " :";
    for (const auto& v : t.values) os << " " << fmt(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string format_structure(const Structure& m) {
  return format_any(m, [](Rank r) { return "#" + std::to_string(r); });
}

std::string format_structure(const StdStructure& m) {
  return format_any(m, [](const StdRational& v) { return v.str(); });
}

}  // namespace fuzzyfo
