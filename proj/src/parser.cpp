#include "algres/parser.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>

namespace algres {

namespace {

std::string describe_expected(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) out += (out.empty() ? "" : ", ") + e;
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& found, std::set<std::string> expected)
    : InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": unexpected " + found + "; expected " + describe_expected(expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, LBracket, RBracket, End };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

std::string token_name(const Token& t) {
  switch (t.kind) {
    case Tok::Number: return "number '" + t.text + "'";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

/// Labels such as "a11+" glue a trailing sign (or "^+") to the identifier
/// when the plain identifier is not itself a label.
std::vector<Token> lex(const std::string& s, const std::set<std::string>& signed_labels) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Number;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = s.substr(i, j - i);
      if (!signed_labels.count(t.text)) {
        for (const char* suffix : {"^+", "^-", "+", "-"}) {
          std::string sfx(suffix);
          if (s.compare(j, sfx.size(), sfx) == 0 && signed_labels.count(t.text + sfx.back())) {
            t.text += sfx.back();
            j += sfx.size();
            break;
          }
        }
      }
      advance(j - i);
    } else {
      static const std::map<char, Tok> symbols = {
          {'+', Tok::Plus},   {'-', Tok::Minus},  {'*', Tok::Star},     {'/', Tok::Slash},
          {'^', Tok::Caret},  {'(', Tok::LParen}, {')', Tok::RParen},   {',', Tok::Comma},
          {'[', Tok::LBracket}, {']', Tok::RBracket}};
      auto it = symbols.find(ch);
      if (it == symbols.end())
        throw ParseError(line, col, std::string("character '") + ch + "'", {"expression"});
      t.kind = it->second;
      t.text = std::string(1, ch);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Node {
  enum class Kind { Number, Var, Diff, T, Ident, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Rational number;
  int index = 0;
  std::string name;
  int line = 0, column = 0;
  std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

const std::set<std::string> kAtomStart = {"number", "variable", "identifier", "'('"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  NodePtr expr() {
    NodePtr lhs;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token sign = next();
      NodePtr t = term();
      lhs = sign.kind == Tok::Minus ? unary(Node::Kind::Neg, std::move(t), sign) : std::move(t);
    } else {
      lhs = term();
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = next();
      lhs = binary(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, std::move(lhs), term(), op);
    }
    return lhs;
  }

  std::vector<NodePtr> list() {
    std::size_t save = pos_;
    if (peek().kind == Tok::LParen) {
      try {
        next();
        std::vector<NodePtr> items = comma_items();
        expect(Tok::RParen, {"','", "')'"});
        if (peek().kind == Tok::End && items.size() > 1) return items;
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    std::vector<NodePtr> items = comma_items();
    finish({"','", "operator"});
    return items;
  }

  std::vector<NodePtr> comma_items() {
    std::vector<NodePtr> items;
    items.push_back(expr());
    while (peek().kind == Tok::Comma) {
      next();
      items.push_back(expr());
    }
    return items;
  }

  void finish(std::set<std::string> expected) {
    if (peek().kind != Tok::End) fail(std::move(expected));
  }

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  Token expect(Tok kind, std::set<std::string> expected) {
    if (peek().kind != kind) fail(std::move(expected));
    return next();
  }
  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw ParseError(peek().line, peek().column, token_name(peek()), std::move(expected));
  }

 private:
  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::Star || k == Tok::Caret) {
        Token op = next();
        lhs = binary(Node::Kind::Mul, std::move(lhs), factor(), op);
      } else if (k == Tok::Slash) {
        Token op = next();
        lhs = binary(Node::Kind::Div, std::move(lhs), factor(), op);
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    NodePtr base = atom();
    while (peek().kind == Tok::Caret && peek(1).kind == Tok::Number) {
      Token op = next();
      Token n = next();
      auto e = std::make_unique<Node>();
      e->kind = Node::Kind::Number;
      e->number = Rational(n.text);
      base = binary(Node::Kind::Pow, std::move(base), std::move(e), op);
    }
    return base;
  }

  NodePtr atom() {
    const Token& t = peek();
    auto n = std::make_unique<Node>();
    n->line = t.line;
    n->column = t.column;
    if (t.kind == Tok::Number) {
      n->kind = Node::Kind::Number;
      n->number = Rational(next().text);
      return n;
    }
    if (t.kind == Tok::LParen) {
      next();
      NodePtr inner = expr();
      expect(Tok::RParen, {"')'", "operator"});
      return inner;
    }
    if (t.kind == Tok::Ident) {
      std::string name = next().text;
      auto indexed = [&](const std::string& prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
        std::string digits = name.substr(prefix.size());
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits[0] == '0') return std::nullopt;
        return std::stoi(digits);
      };
      if (auto i = indexed("x")) {
        n->kind = Node::Kind::Var;
        n->index = *i;
      } else if (auto j = indexed("dx")) {
        n->kind = Node::Kind::Diff;
        n->index = *j;
      } else if (name == "t") {
        n->kind = Node::Kind::T;
      } else {
        n->kind = Node::Kind::Ident;
        n->name = name;
      }
      return n;
    }
    fail(kAtomStart);
  }

  static NodePtr unary(Node::Kind k, NodePtr a, const Token& at) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->line = at.line;
    n->column = at.column;
    n->lhs = std::move(a);
    return n;
  }
  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, const Token& at) {
    auto n = unary(k, std::move(a), at);
    n->rhs = std::move(b);
    return n;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void semantic_error(const Node& n, const std::string& what) {
  throw InputError("line " + std::to_string(n.line) + ", column " + std::to_string(n.column) + ": " + what);
}

/// Evaluation into forms. In curve mode there is a single variable t.
struct FormEval {
  std::size_t nvars;
  const ParamValues& params;
  bool curve_mode = false;

  DifferentialForm constant(const Rational& c) const {
    return DifferentialForm::function(Polynomial::constant(nvars, c));
  }

  std::optional<Rational> as_constant(const DifferentialForm& w) const {
    if (w.degree() != 0) return std::nullopt;
    Polynomial g = w.coefficient({});
    if (g.is_zero()) return Rational(0);
    if (g.size() == 1 && g.terms().begin()->first.total_degree() == 0) return g.terms().begin()->second;
    return std::nullopt;
  }

  DifferentialForm operator()(const Node& n) const {
    switch (n.kind) {
      case Node::Kind::Number: return constant(n.number);
      case Node::Kind::Var:
        if (curve_mode) semantic_error(n, "coordinate x" + std::to_string(n.index) + " not allowed in a curve; use t");
        if (n.index < 1 || static_cast<std::size_t>(n.index) > nvars)
          semantic_error(n, "unknown variable x" + std::to_string(n.index) + " (ambient dimension " +
                                std::to_string(nvars) + ")");
        return DifferentialForm::function(Polynomial::variable(nvars, n.index - 1));
      case Node::Kind::Diff:
        if (curve_mode) semantic_error(n, "differentials not allowed in a curve");
        if (n.index < 1 || static_cast<std::size_t>(n.index) > nvars)
          semantic_error(n, "unknown differential dx" + std::to_string(n.index) + " (ambient dimension " +
                                std::to_string(nvars) + ")");
        return DifferentialForm::basic(nvars, {n.index - 1});
      case Node::Kind::T:
        if (!curve_mode) semantic_error(n, "variable t only allowed in curve components");
        return DifferentialForm::function(Polynomial::variable(nvars, 0));
      case Node::Kind::Ident: {
        auto it = params.find(n.name);
        if (it == params.end()) semantic_error(n, "unknown identifier '" + n.name + "'");
        return constant(it->second);
      }
      case Node::Kind::Neg: return -(*this)(*n.lhs);
      case Node::Kind::Add:
      case Node::Kind::Sub: {
        DifferentialForm a = (*this)(*n.lhs), b = (*this)(*n.rhs);
        if (a.degree() != b.degree()) semantic_error(n, "cannot add forms of different degree");
        return n.kind == Node::Kind::Add ? a + b : a - b;
      }
      case Node::Kind::Mul: return wedge((*this)(*n.lhs), (*this)(*n.rhs));
      case Node::Kind::Div: {
        auto c = as_constant((*this)(*n.rhs));
        if (!c || *c == 0) semantic_error(n, "division only by a nonzero constant");
        return (*this)(*n.lhs) * (Rational(1) / *c);
      }
      case Node::Kind::Pow: {
        DifferentialForm base = (*this)(*n.lhs);
        if (base.degree() != 0) semantic_error(n, "power of a differential form");
        mpz_class e = n.rhs->number.get_num();
        if (e > 1000) semantic_error(n, "exponent too large");
        return DifferentialForm::function(base.coefficient({}).pow(static_cast<unsigned>(e.get_ui())));
      }
    }
    semantic_error(n, "unsupported expression");
  }
};

/// Evaluation into restriction coordinates: scalars and linear combinations of labels.
struct RestrictionEval {
  const RestrictionBasis& basis;
  const ParamValues& params;

  struct Value {
    bool scalar;
    Rational s;
    QVector v;
  };

  Value operator()(const Node& n) const {
    switch (n.kind) {
      case Node::Kind::Number: return {true, n.number, {}};
      case Node::Kind::Ident: {
        if (auto i = basis.index_of(n.name)) {
          QVector v(basis.size());
          v[*i] = 1;
          return {false, 0, v};
        }
        auto it = params.find(n.name);
        if (it == params.end()) semantic_error(n, "unknown basis label or parameter '" + n.name + "'");
        return {true, it->second, {}};
      }
      case Node::Kind::Neg: {
        Value a = (*this)(*n.lhs);
        a.s = -a.s;
        for (auto& x : a.v) x = -x;
        return a;
      }
      case Node::Kind::Add:
      case Node::Kind::Sub: {
        Value a = (*this)(*n.lhs), b = (*this)(*n.rhs);
        if (a.scalar != b.scalar) semantic_error(n, "cannot add a scalar to a restriction");
        Rational sign = n.kind == Node::Kind::Add ? 1 : -1;
        a.s += sign * b.s;
        for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += sign * b.v[i];
        return a;
      }
      case Node::Kind::Mul: {
        Value a = (*this)(*n.lhs), b = (*this)(*n.rhs);
        if (!a.scalar && !b.scalar) semantic_error(n, "product of two restrictions");
        if (!a.scalar) std::swap(a, b);
        if (b.scalar) return {true, a.s * b.s, {}};
        for (auto& x : b.v) x *= a.s;
        return b;
      }
      case Node::Kind::Div: {
        Value a = (*this)(*n.lhs), b = (*this)(*n.rhs);
        if (!b.scalar || b.s == 0) semantic_error(n, "division only by a nonzero constant");
        a.s /= b.s;
        for (auto& x : a.v) x /= b.s;
        return a;
      }
      case Node::Kind::Pow: {
        Value a = (*this)(*n.lhs);
        if (!a.scalar) semantic_error(n, "power of a restriction");
        Rational r = 1;
        for (mpz_class k = 0; k < n.rhs->number.get_num(); ++k) r *= a.s;
        return {true, r, {}};
      }
      default: semantic_error(n, "forms and coordinates are not allowed in a restriction expression");
    }
  }
};

std::set<std::string> signed_labels(const RestrictionBasis& b) {
  std::set<std::string> out;
  for (const auto& e : b.elements()) out.insert(e.label);
  return out;
}

}  // namespace

DifferentialForm parse_form(const std::string& text, std::size_t nvars, const ParamValues& params) {
  Parser p(lex(text, {}));
  NodePtr root = p.expr();
  p.finish({"operator", "end of input"});
  return FormEval{nvars, params}(*root);
}

Polynomial parse_polynomial(const std::string& text, std::size_t nvars, const ParamValues& params) {
  DifferentialForm w = parse_form(text, nvars, params);
  if (w.degree() != 0) throw InputError("expected a function, got a " + std::to_string(w.degree()) + "-form");
  return w.coefficient({});
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, std::size_t nvars,
                                              const ParamValues& params) {
  Parser p(lex(text, {}));
  std::vector<Polynomial> out;
  FormEval ev{nvars, params};
  for (const auto& n : p.list()) {
    DifferentialForm w = ev(*n);
    if (w.degree() != 0) semantic_error(*n, "expected a function in a component list");
    out.push_back(w.coefficient({}));
  }
  return out;
}

PolyMap parse_map(const std::string& text, std::size_t nvars, const ParamValues& params) {
  return PolyMap(nvars, parse_polynomial_list(text, nvars, params));
}

std::vector<UPoly> parse_curve(const std::string& text, const ParamValues& params) {
  Parser p(lex(text, {}));
  FormEval ev{1, params, true};
  std::vector<UPoly> out;
  for (const auto& n : p.list()) {
    DifferentialForm w = ev(*n);
    if (w.degree() != 0) semantic_error(*n, "expected a function of t");
    std::vector<Rational> coeffs;
    Polynomial g = w.coefficient({});
    for (const auto& [m, c] : g.terms()) {
      auto k = static_cast<std::size_t>(m[0]);
      if (coeffs.size() <= k) coeffs.resize(k + 1);
      coeffs[k] = c;
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

AlgRestriction parse_restriction(const std::string& text, const RestrictionBasis& b, const ParamValues& params) {
  Parser p(lex(text, signed_labels(b)));
  if (p.peek().kind == Tok::LBracket) {
    p.next();
    QVector coords;
    if (p.peek().kind != Tok::RBracket) {
      for (;;) {
        NodePtr n = p.expr();
        auto v = RestrictionEval{b, params}(*n);
        if (!v.scalar) semantic_error(*n, "coordinate lists take numbers");
        coords.push_back(v.s);
        if (p.peek().kind != Tok::Comma) break;
        p.next();
      }
    }
    p.expect(Tok::RBracket, {"','", "']'"});
    p.finish({"end of input"});
    if (coords.size() != b.size())
      throw InputError("expected " + std::to_string(b.size()) + " coordinates, got " + std::to_string(coords.size()));
    return b.from_coords(coords);
  }
  NodePtr root = p.expr();
  p.finish({"operator", "end of input"});
  auto v = RestrictionEval{b, params}(*root);
  if (v.scalar) {
    if (v.s == 0) return b.zero();
    throw InputError("a restriction expression must be a combination of basis labels");
  }
  return b.from_coords(v.v);
}

Rational parse_scalar(const std::string& text, const ParamValues& params) {
  DifferentialForm w = parse_form(text, 0, params);
  Polynomial g = w.coefficient({});
  if (w.degree() != 0) throw InputError("expected a number");
  return g.is_zero() ? Rational(0) : g.terms().begin()->second;
}

}  // namespace algres
