#include "jc/parse.hpp"

#include <cctype>
#include <optional>

namespace jc::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { ident, integer, plus, minus, star, slash, caret, lparen, rparen, equals, semicolon, comma, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end:
      return "end of input";
    case Tok::newline:
      return "end of line";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src, bool newline_tokens) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t c) { out.push_back(Token{k, std::move(text), line, c}); };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      if (newline_tokens) push(Tok::newline, "\\n", col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const std::size_t start_col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::integer, std::string(src.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      push(Tok::ident, std::string(src.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '=': kind = Tok::equals; break;
      case ';': kind = Tok::semicolon; break;
      case ',': kind = Tok::comma; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
    }
    push(kind, std::string(1, ch), start_col);
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::end, "", line, col});
  return out;
}

// Parses the digits following a one-letter prefix ("x12" -> 12).
std::optional<std::size_t> indexed_name(const std::string& ident, char prefix) {
  if (ident.size() < 2 || ident[0] != prefix) return std::nullopt;
  std::size_t value = 0;
  for (std::size_t k = 1; k < ident.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(ident[k]))) return std::nullopt;
    if (value > 1'000'000) return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(ident[k] - '0');
  }
  return value;
}

constexpr unsigned max_exponent = 1000;

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t nvars) : toks_(std::move(tokens)), nvars_(nvars) {}

  void set_nvars(std::size_t n) { nvars_ = n; }
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return take();
  }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(t.line, t.column, message);
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (at(Tok::plus) || at(Tok::minus)) {
      const bool minus = take().kind == Tok::minus;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    while (at(Tok::star) || at(Tok::slash)) {
      const Token op = take();
      const Token rhs_tok = peek();
      Polynomial rhs = unary();
      if (op.kind == Tok::star) {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant()) fail(rhs_tok, "division by a non-constant expression");
      if (rhs.is_zero()) fail(rhs_tok, "division by zero");
      acc = (Coefficient(1) / rhs.constant_term()) * acc;
    }
    return acc;
  }

  Polynomial unary() {
    if (at(Tok::minus)) {
      take();
      return -unary();
    }
    if (at(Tok::plus)) {
      take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!at(Tok::caret)) return base;
    take();
    const Token e = expect(Tok::integer, "an integer exponent");
    if (e.text.size() > 4 || std::stoul(e.text) > max_exponent) {
      fail(e, "exponent exceeds " + std::to_string(max_exponent));
    }
    if (at(Tok::caret)) fail(peek(), "chained exponents need parentheses");
    return base.pow(static_cast<unsigned>(std::stoul(e.text)));
  }

  Polynomial atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::integer:
        return Polynomial::constant(nvars_, Coefficient::parse_rational(t.text));
      case Tok::lparen: {
        Polynomial inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident: {
        if (t.text == "i") return Polynomial::constant(nvars_, Coefficient::imaginary_unit());
        if (auto idx = indexed_name(t.text, 'x')) {
          if (nvars_ == 0) fail(t, "variable " + t.text + " is not allowed in a constant");
          if (*idx < 1 || *idx > nvars_) {
            fail(t, "variable " + t.text + " out of range for n=" + std::to_string(nvars_));
          }
          return Polynomial::variable(nvars_, *idx - 1);
        }
        fail(t, "unknown identifier '" + t.text + "'");
      }
      default:
        fail(t, "expected a number, variable, 'i' or '(', found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
};

}  // namespace

MapDocument parse_map(std::string_view text) {
  Parser p(lex(text, false), 0);
  const Token n_tok = p.expect(Tok::ident, "header 'n=<dimension>;'");
  if (n_tok.text != "n") Parser::fail(n_tok, "expected header 'n=<dimension>;', found " + describe(n_tok));
  p.expect(Tok::equals, "'='");
  const Token dim = p.expect(Tok::integer, "a dimension");
  if (dim.text.size() > 4 || std::stoul(dim.text) == 0) Parser::fail(dim, "dimension must be between 1 and 9999");
  const std::size_t n = std::stoul(dim.text);
  p.expect(Tok::semicolon, "';' after the header");
  p.set_nvars(n);

  std::vector<std::optional<Polynomial>> comps(n);
  std::vector<std::string> sources(n);
  while (!p.at(Tok::end)) {
    const Token name = p.expect(Tok::ident, "a component 'P<k> = ...'");
    auto k = indexed_name(name.text, 'P');
    if (!k) Parser::fail(name, "expected a component name P1..P" + std::to_string(n) + ", found " + describe(name));
    if (*k < 1 || *k > n) Parser::fail(name, "component " + name.text + " out of range for n=" + std::to_string(n));
    if (comps[*k - 1]) Parser::fail(name, "component " + name.text + " defined twice");
    p.expect(Tok::equals, "'='");
    comps[*k - 1] = p.expr();
    if (p.at(Tok::end)) break;
    p.expect(Tok::semicolon, "';' or end of input");
  }

  std::vector<Polynomial> polys;
  polys.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!comps[k]) {
      const Token& end = p.peek();
      Parser::fail(end, "component P" + std::to_string(k + 1) + " is missing");
    }
    sources[k] = comps[k]->to_string();
    polys.push_back(std::move(*comps[k]));
  }
  MapDocument doc;
  doc.n = n;
  doc.map = PolyMap(std::move(polys));
  doc.domain = doc.map.domain();
  doc.sources = std::move(sources);
  return doc;
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  Parser p(lex(text, false), nvars);
  Polynomial out = p.expr();
  if (!p.at(Tok::end)) Parser::fail(p.peek(), "unexpected " + describe(p.peek()) + " after expression");
  return out;
}

CoeffMatrix parse_matrix(std::string_view text) {
  Parser p(lex(text, true), 0);
  std::vector<std::vector<Coefficient>> rows;
  std::optional<Token> first_row_tok;
  while (!p.at(Tok::end)) {
    if (p.at(Tok::newline) || p.at(Tok::semicolon)) {
      p.take();
      continue;
    }
    const Token row_start = p.peek();
    std::vector<Coefficient> row;
    for (;;) {
      const Token entry_tok = p.peek();
      Polynomial entry = p.expr();
      if (!entry.is_constant()) Parser::fail(entry_tok, "bad matrix entry");
      row.push_back(entry.constant_term());
      if (p.at(Tok::comma)) {
        p.take();
        continue;
      }
      break;
    }
    if (!p.at(Tok::newline) && !p.at(Tok::semicolon) && !p.at(Tok::end)) {
      Parser::fail(p.peek(), "bad matrix entry: unexpected " + describe(p.peek()));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      Parser::fail(row_start, "ragged row: expected " + std::to_string(rows.front().size()) + " entries, found " +
                                  std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) Parser::fail(p.peek(), "empty matrix");
  return CoeffMatrix::from_rows(rows);
}

std::string print_map(const PolyMap& f) {
  std::string out = "n=" + std::to_string(f.arity()) + ";\n";
  for (std::size_t k = 0; k < f.arity(); ++k) {
    out += "P" + std::to_string(k + 1) + " = " + f[k].to_string() + ";\n";
  }
  return out;
}

std::string print_matrix(const CoeffMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += ", ";
      out += m(r, c).to_string();
    }
    out += "\n";
  }
  return out;
}

}  // namespace jc::io
