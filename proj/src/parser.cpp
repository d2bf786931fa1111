#include "logdmod/parser.hpp"

#include <cctype>
#include <set>

namespace logdmod {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({k, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars, bool allow_partials)
      : toks_(tokenize(src)), vars_(vars), n_(static_cast<int>(vars.size())), allow_partials_(allow_partials) {
    if (vars.empty()) throw std::invalid_argument("parser: empty variable list");
  }

  WeylOp parse() {
    WeylOp v = expr();
    if (peek().kind != Tok::End) {
      if (starts_atom(peek())) error("juxtaposition is not allowed; use '*'");
      error("unexpected '" + peek().text + "'");
    }
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

  static bool starts_atom(const Token& t) {
    return t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::LParen;
  }

  WeylOp expr() {
    WeylOp v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      WeylOp r = term();
      v = minus ? v - r : v + r;
    }
    return v;
  }

  WeylOp term() {
    WeylOp v = unary();
    while (true) {
      if (peek().kind == Tok::Star) {
        take();
        v = v * unary();
      } else if (peek().kind == Tok::Slash) {
        take();
        const Token& at = peek();
        WeylOp d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at.line, at.column);
        if (d.terms().size() != 1 || !d.terms().front().mono.is_one())
          throw ParseError("division is only allowed by nonzero constants", at.line, at.column);
        v *= 1 / d.terms().front().coef;
      } else if (starts_atom(peek())) {
        error("juxtaposition is not allowed; use '*'");
      } else {
        return v;
      }
    }
  }

  WeylOp unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  WeylOp power() {
    WeylOp base = atom();
    if (peek().kind != Tok::Caret) return base;
    take();
    const Token& e = peek();
    if (e.kind != Tok::Number) error("exponent must be a non-negative integer literal");
    take();
    if (e.text.size() > 4) throw ParseError("exponent too large", e.line, e.column);
    int k = std::stoi(e.text);
    WeylOp r = WeylOp::constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
  }

  WeylOp atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        Rational c(t.text, 10);
        return WeylOp::constant(n_, c);
      }
      case Tok::Ident: {
        take();
        for (int i = 0; i < n_; ++i)
          if (t.text == vars_[static_cast<std::size_t>(i)]) return WeylOp::x(n_, i);
        for (int i = 0; i < n_; ++i) {
          if (t.text == "d" + vars_[static_cast<std::size_t>(i)]) {
            if (!allow_partials_)
              throw ParseError("partial '" + t.text + "' not allowed in a polynomial", t.line, t.column);
            return WeylOp::d(n_, i);
          }
        }
        throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
      }
      case Tok::LParen: {
        take();
        WeylOp v = expr();
        if (peek().kind != Tok::RParen) error("expected ')'");
        take();
        return v;
      }
      case Tok::End:
        error("unexpected end of input");
      default:
        error("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
  int n_;
  bool allow_partials_;
};

}  // namespace

WeylOp parse_operator(std::string_view src, const std::vector<std::string>& vars) {
  return Parser(src, vars, true).parse();
}

Poly parse_polynomial(std::string_view src, const std::vector<std::string>& vars) {
  WeylOp op = Parser(src, vars, false).parse();
  return Poly(static_cast<int>(vars.size()), op.terms());
}

std::vector<std::string> parse_variable_list(std::string_view src) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t end = src.find(',', start);
    if (end == std::string_view::npos) end = src.size();
    std::string name(src.substr(start, end - start));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw std::invalid_argument("invalid variable name '" + name + "'");
    for (char c : name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate variable '" + name + "'");
    out.push_back(name);
    start = end + 1;
  }
  for (const std::string& v : out)
    if (seen.count("d" + v)) throw std::invalid_argument("variable 'd" + v + "' clashes with a partial symbol");
  if (out.empty() || out.size() * 2 > kMaxSlots) throw std::invalid_argument("unsupported number of variables");
  return out;
}

}  // namespace logdmod
