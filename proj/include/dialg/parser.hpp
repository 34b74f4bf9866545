#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dialg/macros.hpp"

namespace dialg {

// Text format
// -----------
//   signature: algebra|dialgebra
//   # comment
//   label: expr [= expr]
//
// Products are written `*` (one operation), `-|` (left) and `|-` (right). A product of
// two factors may be left unparenthesized; anything deeper must be parenthesized.

namespace detail {

enum class Tok { Ident, Int, Slash, Star, LeftOp, RightOp, Plus, Minus, LParen, RParen, Comma, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = col0 + i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '|') {
      out.push_back({Tok::LeftOp, "-|", col});
      i += 2;
      continue;
    }
    if (c == '|' && i + 1 < s.size() && s[i + 1] == '-') {
      out.push_back({Tok::RightOp, "|-", col});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '/': k = Tok::Slash; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Equals; break;
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", col0 + s.size()});
  return out;
}

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  // identity := expr ("=" expr)?
  Expr identity() {
    Expr lhs = expr();
    if (peek().kind == Tok::Equals) {
      next();
      Expr rhs = expr();
      lhs = Expr::sum({Rational(1), Rational(-1)}, {std::move(lhs), std::move(rhs)});
    }
    expect(Tok::End, "end of identity");
    return lhs;
  }

  std::vector<Variable> variable_order() const { return order_; }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, peek().column, what); }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    next();
  }

  static bool is_op(Tok k) { return k == Tok::Star || k == Tok::LeftOp || k == Tok::RightOp; }

  // expr := ["+"|"-"] term (("+"|"-") term)*
  Expr expr() {
    std::vector<Rational> coefs;
    std::vector<Expr> terms;
    Rational sign = 1;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      if (next().kind == Tok::Minus) sign = -1;
    }
    while (true) {
      auto [c, t] = term();
      coefs.push_back(sign * c);
      terms.push_back(std::move(t));
      if (peek().kind == Tok::Plus) {
        sign = 1;
      } else if (peek().kind == Tok::Minus) {
        sign = -1;
      } else {
        break;
      }
      next();
    }
    if (terms.size() == 1 && coefs[0] == 1) return std::move(terms[0]);
    return Expr::sum(std::move(coefs), std::move(terms));
  }

  // term := (rational "*")? factor
  std::pair<Rational, Expr> term() {
    if (peek().kind != Tok::Int) return {Rational(1), factor()};
    std::string text = next().text;
    if (peek().kind == Tok::Slash) {
      next();
      if (peek().kind != Tok::Int) fail("expected denominator");
      text += "/" + next().text;
    }
    Rational q;
    try {
      q = parse_rational(text);
    } catch (const Error& e) {
      fail(e.what());
    }
    if (peek().kind == Tok::Star) {
      next();
      return {q, factor()};
    }
    if (q == 0) return {Rational(1), Expr::zero()};
    fail("a nonzero constant must multiply a factor");
  }

  // factor := primary (op primary)?
  Expr factor() {
    Expr a = primary();
    if (!is_op(peek().kind)) return a;
    const Tok k = next().kind;
    Expr b = primary();
    if (is_op(peek().kind)) fail("ambiguous unparenthesized product; add parentheses");
    const OpTag op = k == Tok::Star ? OpTag::plain() : k == Tok::LeftOp ? OpTag::left() : OpTag::right();
    return Expr::apply(op, std::move(a), std::move(b));
  }

  // primary := variable | "(" expr ")" | macro "(" expr {"," expr} ")"
  Expr primary() {
    if (peek().kind == Tok::LParen) {
      next();
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (peek().kind != Tok::Ident) fail("expected a variable, macro or '('");
    const Token id = next();
    if (peek().kind == Tok::LParen) {
      if (find_macro(id.text) == nullptr) {
        throw ParseError(line_, id.column, "unknown macro '" + id.text + "'");
      }
      next();
      std::vector<Expr> args;
      args.push_back(expr());
      while (peek().kind == Tok::Comma) {
        next();
        args.push_back(expr());
      }
      expect(Tok::RParen, "')'");
      const MacroDef* m = find_macro(id.text);
      if (m->arity != args.size()) {
        throw ParseError(line_, id.column,
                         "macro '" + id.text + "' takes " + std::to_string(m->arity) + " arguments");
      }
      return Expr::call(id.text, std::move(args));
    }
    Variable v(id.text);
    if (std::find(order_.begin(), order_.end(), v) == order_.end()) order_.push_back(v);
    return Expr::of_var(std::move(v));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::vector<Variable> order_;
};

}  // namespace detail

struct ParsedIdentity {
  Expr expr;                        // macros unexpanded, lhs - rhs
  Polynomial poly;                  // expanded, bar-normalised
  std::vector<Variable> arguments;  // variables in order of first appearance
};

inline ParsedIdentity parse_identity(std::string_view text, std::size_t line = 1, std::size_t col0 = 1) {
  detail::ExprParser p(detail::tokenize(text, line, col0), line);
  ParsedIdentity out;
  out.expr = p.identity();
  out.arguments = p.variable_order();
  try {
    out.poly = expand_macros(out.expr);
  } catch (const SignatureError& e) {
    throw ParseError(line, col0, e.what());
  }
  return out;
}

/// Parses and expands a single identity; the usual way to write polynomials in code.
inline Polynomial parse_polynomial(std::string_view text) { return parse_identity(text).poly; }

struct IdentityEntry {
  std::string label;
  ParsedIdentity parsed;
  std::size_t line = 0;

  Identity identity() const { return {label, parsed.poly, std::nullopt}; }
};

struct IdentityFile {
  Signature signature = Signature::Empty;  // Empty when no header was given
  std::vector<IdentityEntry> entries;

  const IdentityEntry* find(std::string_view label) const {
    for (const auto& e : entries) {
      if (e.label == label) return &e;
    }
    return nullptr;
  }
};

inline IdentityFile parse_file(std::string_view text) {
  IdentityFile file;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool seen_content = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t line_start = start;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, first + 1, "expected 'label: identity'");
    std::string label(line.substr(first, colon - first));
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
    if (label.empty()) throw ParseError(line_no, first + 1, "empty label");
    const std::string_view body = line.substr(colon + 1);
    if (label == "signature") {
      if (seen_content) throw ParseError(line_no, first + 1, "signature header must come first");
      std::string s(body);
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      if (s == "algebra") {
        file.signature = Signature::Plain;
      } else if (s == "dialgebra") {
        file.signature = Signature::Dialgebra;
      } else {
        throw ParseError(line_no, colon + 2, "signature must be 'algebra' or 'dialgebra'");
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (file.find(label) != nullptr) throw ParseError(line_no, first + 1, "duplicate label '" + label + "'");
    IdentityEntry entry{label, parse_identity(body, line_no, colon + 2), line_no};
    (void)line_start;
    const Signature s = entry.parsed.expr.kind == Expr::Kind::Zero ? Signature::Empty
                                                                    : expand_raw(entry.parsed.expr).signature();
    if (file.signature != Signature::Empty && s != Signature::Empty && s != file.signature) {
      throw ParseError(line_no, colon + 2,
                       std::string("identity uses ") + to_string(s) + " operations in a " +
                           to_string(file.signature) + " file");
    }
    file.entries.push_back(std::move(entry));
    if (end == text.size()) break;
  }
  return file;
}

inline IdentityFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("no such file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_file(ss.str());
}

inline std::string print(const Term& t) {
  if (t.is_leaf()) return t.variable().name;
  auto wrap = [](const Term& k) { return k.is_leaf() ? print(k) : "(" + print(k) + ")"; };
  switch (t.tag().kind) {
    case OpKind::Plain:
      if (t.tag().arity == 2) return wrap(t.child(0)) + "*" + wrap(t.child(1));
      break;
    case OpKind::Left: return wrap(t.child(0)) + " -| " + wrap(t.child(1));
    case OpKind::Right: return wrap(t.child(0)) + " |- " + wrap(t.child(1));
    case OpKind::Slot: break;
  }
  std::string s = "{";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) s += ", ";
    s += print(t.child(i));
  }
  s += "}";
  if (t.tag().kind == OpKind::Slot) s += "_" + std::to_string(t.tag().slot);
  return s;
}

/// Juxtaposition notation for one-operation monomials, e.g. ((ab)c)d.
inline std::string print_compact(const Term& t) {
  if (t.is_leaf()) return t.variable().name;
  if (t.tag().kind != OpKind::Plain || t.tag().arity != 2) return print(t);
  auto wrap = [](const Term& k) { return k.is_leaf() ? print_compact(k) : "(" + print_compact(k) + ")"; };
  return wrap(t.child(0)) + wrap(t.child(1));
}

inline std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const bool bare = p.size() == 1 && mag == 1;
    if (mag != 1) out += mag.get_str() + " * ";
    out += (t.is_leaf() || bare) ? print(t) : "(" + print(t) + ")";
  }
  return out;
}

inline std::string print_file(const IdentityFile& f) {
  std::string out;
  if (f.signature != Signature::Empty) out += std::string("signature: ") + to_string(f.signature) + "\n";
  for (const auto& e : f.entries) out += e.label + ": " + print(e.parsed.poly) + "\n";
  return out;
}

inline nlohmann::json to_json(const std::string& label, const Polynomial& p) {
  nlohmann::json monos = nlohmann::json::array();
  for (const auto& [t, c] : p.terms()) monos.push_back({{"coef", c.get_str()}, {"tree", print(t)}});
  const Signature s = p.signature();
  return {{"label", label}, {"signature", to_string(s)}, {"monomials", std::move(monos)}};
}

}  // namespace dialg
