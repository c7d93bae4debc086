#include "ins/dsl/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace ins::dsl {

namespace {

enum class Tok { kIdent, kNumber, kTilde, kAmp, kPipe, kBackslash, kPlus, kLParen, kRParen, kComma, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  SourcePos pos;
};

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    case Tok::kTilde: return "'~'";
    case Tok::kAmp: return "'&'";
    case Tok::kPipe: return "'|'";
    case Tok::kBackslash: return "'\\'";
    case Tok::kPlus: return "'+'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::kIdent, text.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    if (digit(c)) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        if (j >= text.size() || !digit(text[j]))
          throw SourceError(ErrorKind::kLexError, start, "expected digits after '.' in number");
        while (j < text.size() && digit(text[j])) ++j;
      }
      if (j < text.size() && (ident_char(text[j]) || text[j] == '.'))
        throw SourceError(ErrorKind::kLexError, start, "malformed number");
      out.push_back({Tok::kNumber, text.substr(i, j - i), start});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '~': kind = Tok::kTilde; break;
      case '&': kind = Tok::kAmp; break;
      case '|': kind = Tok::kPipe; break;
      case '\\': kind = Tok::kBackslash; break;
      case '+': kind = Tok::kPlus; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      default: {
        const unsigned char u = static_cast<unsigned char>(c);
        std::string shown = std::isprint(u) ? std::string("'") + c + "'" : "byte 0x" + [u] {
          const char* hex = "0123456789abcdef";
          return std::string{hex[u >> 4], hex[u & 15]};
        }();
        throw SourceError(ErrorKind::kLexError, start, "unexpected character " + shown);
      }
    }
    out.push_back({kind, text.substr(i, 1), start});
    advance(1);
  }
  out.push_back({Tok::kEnd, {}, pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr top() {
    Expr e;
    if (peek().kind == Tok::kIdent && peek(1).kind == Tok::kLParen && is_predicate_name(peek().text))
      e = call();
    else
      e = expr();
    if (peek().kind != Tok::kEnd) unexpected("an operator or end of input");
    return e;
  }

 private:
  static bool is_predicate_name(std::string_view name) {
    return name == "subset" || name == "eq" || name == "empty";
  }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(at_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }

  const Token& take() {
    const Token& t = tokens_[at_];
    if (t.kind != Tok::kEnd) ++at_;
    return t;
  }

  [[noreturn]] void unexpected(std::string_view wanted) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd ? "end of input"
                                            : std::string(describe(t.kind)) + " '" +
                                                  std::string(t.text) + "'";
    if (t.kind != Tok::kIdent && t.kind != Tok::kNumber && t.kind != Tok::kEnd)
      found = std::string(describe(t.kind));
    throw SourceError(ErrorKind::kParseError, t.pos,
                      "expected " + std::string(wanted) + ", found " + found);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) unexpected(describe(kind));
    return take();
  }

  template <class Next>
  Expr left_assoc(Tok op, ExprKind kind, Next next) {
    Expr lhs = (this->*next)();
    while (peek().kind == op) {
      const SourcePos pos = take().pos;
      Expr rhs = (this->*next)();
      lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), pos);
    }
    return lhs;
  }

  Expr expr() {
    Nest guard(*this);
    return left_assoc(Tok::kPlus, ExprKind::kAdd, &Parser::difference);
  }
  Expr difference() { return left_assoc(Tok::kBackslash, ExprKind::kDifference, &Parser::union_); }
  Expr union_() { return left_assoc(Tok::kPipe, ExprKind::kUnion, &Parser::intersection); }
  Expr intersection() { return left_assoc(Tok::kAmp, ExprKind::kIntersect, &Parser::unary); }

  Expr unary() {
    Nest guard(*this);
    if (peek().kind == Tok::kTilde) {
      const SourcePos pos = take().pos;
      return Expr::unary(ExprKind::kComplement, unary(), pos);
    }
    return atom();
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Tok::kLParen) {
      take();
      Expr inner = expr();
      expect(Tok::kRParen);
      return inner;
    }
    if (t.kind == Tok::kIdent) {
      if (peek(1).kind == Tok::kLParen) {
        if (is_predicate_name(t.text))
          throw SourceError(ErrorKind::kParseError, t.pos,
                            "predicate '" + std::string(t.text) +
                                "' can only appear at the top level");
        return call();
      }
      take();
      return Expr::ident(std::string(t.text), t.pos);
    }
    unexpected("a set expression");
  }

  double number() {
    const Token& t = expect(Tok::kNumber);
    double v = 0.0;
    std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (!(v > 0.0))
      throw SourceError(ErrorKind::kNonPositiveScalar, t.pos, "scalar must be positive");
    return v;
  }

  Expr call() {
    const Token name = take();
    expect(Tok::kLParen);
    const std::string_view n = name.text;
    Expr e;
    if (n == "tf" || n == "ff" || n == "empty") {
      const ExprKind kind = n == "tf" ? ExprKind::kTruthFav
                            : n == "ff" ? ExprKind::kFalseFav
                                        : ExprKind::kEmpty;
      e = Expr::unary(kind, expr(), name.pos);
    } else if (n == "cart" || n == "prod" || n == "subset" || n == "eq") {
      const ExprKind kind = n == "cart"   ? ExprKind::kCart
                            : n == "prod" ? ExprKind::kProd
                            : n == "subset" ? ExprKind::kSubset
                                            : ExprKind::kEqual;
      Expr lhs = expr();
      expect(Tok::kComma);
      Expr rhs = expr();
      e = Expr::binary(kind, std::move(lhs), std::move(rhs), name.pos);
    } else if (n == "scale") {
      const double k = number();
      expect(Tok::kComma);
      e = Expr::scale(k, expr(), name.pos);
    } else if (n == "div") {
      Expr operand = expr();
      expect(Tok::kComma);
      e = Expr::div(std::move(operand), number(), name.pos);
    } else {
      throw SourceError(ErrorKind::kParseError, name.pos,
                        "unknown function '" + std::string(n) + "'");
    }
    expect(Tok::kRParen);
    return e;
  }

  // Bounds recursion so hostile input cannot exhaust the stack.
  struct Nest {
    explicit Nest(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth)
        throw SourceError(ErrorKind::kParseError, parser.peek().pos, "expression nested too deeply");
    }
    ~Nest() { --parser.depth_; }
    Parser& parser;
  };

  static constexpr std::size_t kMaxDepth = 512;

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(lex(text)).top(); }

}  // namespace ins::dsl
