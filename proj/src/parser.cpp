#include "fuzzyfo/errors.hpp"
#include "fuzzyfo/syntax.hpp"

#include <cctype>

namespace fuzzyfo {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Amp,
  Meet,
  Join,
  Arrow,
  DoubleArrow,
  Tilde,
  Zero,
  One,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 0-based offset
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(s.substr(start, len)), start});
      i += len;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case '&': emit(Tok::Amp, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      case '0': emit(Tok::Zero, 1); continue;
      case '1': emit(Tok::One, 1); continue;
      default: break;
    }
    if (s.substr(i, 2) == "/\\") { emit(Tok::Meet, 2); continue; }
    if (s.substr(i, 2) == "\\/") { emit(Tok::Join, 2); continue; }
    if (s.substr(i, 2) == "->") { emit(Tok::Arrow, 2); continue; }
    if (s.substr(i, 3) == "<->") { emit(Tok::DoubleArrow, 3); continue; }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_upper(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])); }

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary* vocab) : toks_(lex(text)), vocab_(vocab) {}

  Formula run() {
    Formula f = biimpl();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) throw ParseError("unbalanced parenthesis: unexpected ')'", peek().pos);
      throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  void expect_close() {
    if (!accept(Tok::RParen))
      throw ParseError(peek().kind == Tok::End ? "unbalanced parenthesis: expected ')'"
                                               : "expected ')' but found '" + peek().text + "'",
                       peek().pos);
  }

  Formula biimpl() {
    Formula f = implication();
    while (accept(Tok::DoubleArrow)) f = Formula::biimpl(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept(Tok::Arrow)) return Formula::impl(f, implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Join)) f = Formula::join(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = strong();
    while (accept(Tok::Meet)) f = Formula::meet(f, strong());
    return f;
  }

  Formula strong() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = Formula::strong_conj(f, unary());
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    if (accept(Tok::Tilde)) return Formula::neg(unary());
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      const bool universal = t.text == "forall";
      take();
      const Token& v = peek();
      if (v.kind != Tok::Ident || is_upper(v.text) || v.text == "forall" || v.text == "exists")
        throw ParseError("expected a lowercase variable after quantifier", v.pos);
      take();
      if (!accept(Tok::Dot)) throw ParseError("expected '.' after quantified variable", peek().pos);
      bound_.push_back(v.text);
      Formula body = unary();
      bound_.pop_back();
      return universal ? Formula::forall(v.text, std::move(body))
                       : Formula::exists(v.text, std::move(body));
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        take();
        Formula f = biimpl();
        expect_close();
        return f;
      }
      case Tok::Zero:
        take();
        return Formula::bottom();
      case Tok::One:
        take();
        return Formula::top();
      case Tok::Ident:
        if (!is_upper(t.text))
          throw ParseError("expected a formula; '" + t.text +
                               "' is lowercase (predicates start uppercase)",
                           t.pos);
        return atom();
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  Formula atom() {
    const Token name = take();
    std::vector<Term> args;
    if (accept(Tok::LParen)) args = arguments();
    if (vocab_) {
      auto it = vocab_->predicates().find(name.text);
      if (it == vocab_->predicates().end())
        throw VocabularyViolation("undeclared predicate " + name.text + " at position " +
                                  std::to_string(name.pos));
      if (it->second != args.size())
        throw ArityError("predicate " + name.text + "/" + std::to_string(it->second) +
                         " applied to " + std::to_string(args.size()) +
                         " arguments at position " + std::to_string(name.pos));
    } else {
      try {
        seen_.declare_predicate(name.text, args.size());
      } catch (const Error& e) {
        throw ArityError(std::string(e.what()) + " at position " + std::to_string(name.pos));
      }
    }
    return Formula::atom(name.text, std::move(args));
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    args.push_back(term());
    while (accept(Tok::Comma)) args.push_back(term());
    expect_close();
    return args;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || is_upper(t.text) || t.text == "forall" || t.text == "exists")
      throw ParseError(t.kind == Tok::End ? "unexpected end of input, expected a term"
                                          : "expected a term but found '" + t.text + "'",
                       t.pos);
    const Token name = take();
    if (accept(Tok::LParen)) {
      std::vector<Term> args = arguments();
      if (vocab_) {
        auto it = vocab_->functions().find(name.text);
        if (it == vocab_->functions().end()) {
          if (vocab_->relational())
            throw VocabularyViolation("function symbol " + name.text +
                                      " used with a relational vocabulary at position " +
                                      std::to_string(name.pos));
          throw VocabularyViolation("undeclared function " + name.text + " at position " +
                                    std::to_string(name.pos));
        }
        if (it->second != args.size())
          throw ArityError("function " + name.text + "/" + std::to_string(it->second) +
                           " applied to " + std::to_string(args.size()) +
                           " arguments at position " + std::to_string(name.pos));
      } else {
        try {
          seen_.declare_function(name.text, args.size());
        } catch (const Error& e) {
          throw ArityError(std::string(e.what()) + " at position " + std::to_string(name.pos));
        }
      }
      return Term::apply(name.text, std::move(args));
    }
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == name.text) return Term::variable(name.text);
    if (vocab_) {
      if (vocab_->has_constant(name.text)) return Term::constant(name.text);
      if (vocab_->has_function(name.text))
        throw ArityError("function " + name.text + " used without arguments at position " +
                         std::to_string(name.pos));
      return Term::variable(name.text);
    }
    try {
      seen_.declare_constant(name.text);
    } catch (const Error& e) {
      throw ArityError(std::string(e.what()) + " at position " + std::to_string(name.pos));
    }
    return Term::constant(name.text);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  const Vocabulary* vocab_;
  Vocabulary seen_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  return rename_apart(Parser(text, &vocab).run());
}

Formula parse_formula(std::string_view text) { return rename_apart(Parser(text, nullptr).run()); }

}  // namespace fuzzyfo
