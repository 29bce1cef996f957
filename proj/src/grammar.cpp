/*
   Copyright 2026 The gwalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gwalg/grammar.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <string>

#include "gwalg/errors.hpp"

namespace gwalg {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin, end;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(b, i - b)), b, i});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(b, i - b)), b, i});
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
      case ',': k = Tok::Comma; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", b, b + 1);
    }
    ++i;
    out.push_back({k, std::string(1, c), b, i});
  }
  out.push_back({Tok::End, "", s.size(), s.size()});
  return out;
}

struct Node {
  enum class Kind { Number, Ident, Call, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  std::string text;  // number digits or identifier
  std::vector<std::unique_ptr<Node>> args;
  std::size_t begin = 0, end = 0;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, std::size_t b, std::size_t e) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->begin = b;
  n->end = e;
  return n;
}

NodePtr binary(Node::Kind k, NodePtr l, NodePtr r) {
  auto n = make(k, l->begin, r->end);
  n->args.push_back(std::move(l));
  n->args.push_back(std::move(r));
  return n;
}

// expr := term (('+' | '-') term)*
// term := unary (('*' | '/') unary)*
// unary := '-' unary | '+' unary | power
// power := atom ('^' unary)?
// atom := number | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    if (t.kind == Tok::End) throw ParseError("unexpected end of input", t.begin, t.end);
    throw ParseError(msg, t.begin, t.end);
  }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  NodePtr expr() {
    NodePtr l = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Node::Kind k = next().kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub;
      l = binary(k, std::move(l), term());
    }
    return l;
  }

  NodePtr term() {
    NodePtr l = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Node::Kind k = next().kind == Tok::Star ? Node::Kind::Mul : Node::Kind::Div;
      l = binary(k, std::move(l), unary());
    }
    return l;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      const Token& t = next();
      NodePtr inner = unary();
      if (t.kind == Tok::Plus) return inner;
      auto n = make(Node::Kind::Neg, t.begin, inner->end);
      n->args.push_back(std::move(inner));
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (peek().kind == Tok::Caret) {
      ++pos_;
      return binary(Node::Kind::Pow, std::move(base), unary());
    }
    return base;
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        auto n = make(Node::Kind::Number, t.begin, t.end);
        n->text = t.text;
        return n;
      }
      case Tok::Ident: {
        ++pos_;
        if (peek().kind != Tok::LParen) {
          auto n = make(Node::Kind::Ident, t.begin, t.end);
          n->text = t.text;
          return n;
        }
        ++pos_;
        auto n = make(Node::Kind::Call, t.begin, t.end);
        n->text = t.text;
        n->args.push_back(expr());
        while (peek().kind == Tok::Comma) {
          ++pos_;
          n->args.push_back(expr());
        }
        n->end = peek().end;
        expect(Tok::RParen, "')'");
        return n;
      }
      case Tok::LParen: {
        ++pos_;
        NodePtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(const Node& n, const std::string& msg) { throw ParseError(msg, n.begin, n.end); }

void want_args(const Node& n, std::size_t count) {
  if (n.args.size() != count)
    fail_at(n, n.text + " takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"));
}

Scalar eval_scalar(const Node& n);

long eval_int(const Node& n) {
  Scalar s = eval_scalar(n);
  if (!s.is_rational() || s.rational().get_den() != 1 || !s.rational().get_num().fits_slong_p())
    fail_at(n, "expected an integer");
  return s.rational().get_num().get_si();
}

Scalar scalar_atom(const Node& n) {
  if (n.kind == Node::Kind::Ident) {
    if (n.text == "i") return zeta(4);
    fail_at(n, "unknown symbol '" + n.text + "'");
  }
  if (n.text == "sqrt") {
    want_args(n, 1);
    return sqrt(eval_scalar(*n.args[0]));
  }
  if (n.text == "zeta") {
    want_args(n, 1);
    long m = eval_int(*n.args[0]);
    if (m < 1 || m > 1000) fail_at(*n.args[0], "root of unity order out of range");
    return zeta(static_cast<int>(m));
  }
  fail_at(n, "unknown function '" + n.text + "'");
}

// Evaluates the arithmetic skeleton over any ring V; atoms come from leaf().
template <class V, class Leaf, class Lift>
V eval_ring(const Node& n, const Leaf& leaf, const Lift& lift) {
  auto rec = [&](const Node& c) { return eval_ring<V>(c, leaf, lift); };
  switch (n.kind) {
    case Node::Kind::Number:
      return lift(Scalar(mpq_class(mpz_class(n.text))));
    case Node::Kind::Ident:
    case Node::Kind::Call:
      return leaf(n);
    case Node::Kind::Neg:
      return -rec(*n.args[0]);
    case Node::Kind::Add: {
      V l = rec(*n.args[0]);
      return l + rec(*n.args[1]);
    }
    case Node::Kind::Sub: {
      V l = rec(*n.args[0]);
      return l - rec(*n.args[1]);
    }
    case Node::Kind::Mul: {
      V l = rec(*n.args[0]);
      return l * rec(*n.args[1]);
    }
    case Node::Kind::Div: {
      V l = rec(*n.args[0]);
      Scalar d = eval_scalar(*n.args[1]);
      if (d.is_zero()) fail_at(*n.args[1], "division by zero");
      return l * lift(d.inv());
    }
    case Node::Kind::Pow: {
      V base = rec(*n.args[0]);
      long e = eval_int(*n.args[1]);
      if (e < 0) fail_at(*n.args[1], "negative exponent");
      if (e > 10000) fail_at(*n.args[1], "exponent too large");
      V r = lift(Scalar(1));
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
  }
  fail_at(n, "bad expression");
}

Scalar eval_scalar(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Number:
      return Scalar(mpq_class(mpz_class(n.text)));
    case Node::Kind::Ident:
    case Node::Kind::Call:
      return scalar_atom(n);
    case Node::Kind::Neg:
      return -eval_scalar(*n.args[0]);
    case Node::Kind::Add: {
      Scalar l = eval_scalar(*n.args[0]);
      return l + eval_scalar(*n.args[1]);
    }
    case Node::Kind::Sub: {
      Scalar l = eval_scalar(*n.args[0]);
      return l - eval_scalar(*n.args[1]);
    }
    case Node::Kind::Mul: {
      Scalar l = eval_scalar(*n.args[0]);
      return l * eval_scalar(*n.args[1]);
    }
    case Node::Kind::Div: {
      Scalar l = eval_scalar(*n.args[0]);
      Scalar d = eval_scalar(*n.args[1]);
      if (d.is_zero()) fail_at(*n.args[1], "division by zero");
      return l / d;
    }
    case Node::Kind::Pow: {
      Scalar b = eval_scalar(*n.args[0]);
      long e = eval_int(*n.args[1]);
      if (e < 0 && b.is_zero()) fail_at(n, "division by zero");
      if (e > 100000 || e < -100000) fail_at(*n.args[1], "exponent too large");
      return b.pow(e);
    }
  }
  fail_at(n, "bad expression");
}

std::optional<Generator> generator_call(const Node& n) {
  if (n.kind == Node::Kind::Ident && n.text == "omega") return Generator::omega();
  if (n.kind != Node::Kind::Call) return std::nullopt;
  if (n.text == "theta") {
    want_args(n, 1);
    return Generator::theta(eval_scalar(*n.args[0]));
  }
  if (n.text == "psi" || n.text == "phi") {
    want_args(n, 2);
    long m = eval_int(*n.args[0]);
    if (m < 0) fail_at(*n.args[0], "m must be >= 0");
    Scalar l = eval_scalar(*n.args[1]);
    return n.text == "psi" ? Generator::psi(m, l) : Generator::phi(m, l);
  }
  return std::nullopt;
}

void collect_word(const Node& n, std::vector<Generator>& out) {
  if (n.kind == Node::Kind::Mul) {
    collect_word(*n.args[0], out);
    collect_word(*n.args[1], out);
    return;
  }
  if (n.kind == Node::Kind::Ident && n.text == "id") return;
  if (n.kind == Node::Kind::Pow) {
    long e = eval_int(*n.args[1]);
    if (e < 0) fail_at(*n.args[1], "negative exponent");
    if (e > 10000) fail_at(*n.args[1], "exponent too large");
    std::vector<Generator> one;
    collect_word(*n.args[0], one);
    for (long k = 0; k < e; ++k) out.insert(out.end(), one.begin(), one.end());
    return;
  }
  if (auto g = generator_call(n)) {
    out.push_back(*g);
    return;
  }
  fail_at(n, "expected theta(b), psi(m, l), phi(m, l), omega or id");
}

}  // namespace

Scalar parse_scalar(std::string_view text) { return eval_scalar(*Parser(text).parse_all()); }

ZPoly parse_poly(std::string_view text) {
  NodePtr root = Parser(text).parse_all();
  std::string var;
  auto leaf = [&](const Node& n) -> ZPoly {
    if (n.kind == Node::Kind::Ident && (n.text == "z" || n.text == "Z" || n.text == "C")) {
      if (!var.empty() && var != n.text) fail_at(n, "mixed variables " + var + " and " + n.text);
      var = n.text;
      return ZPoly::var();
    }
    return ZPoly(scalar_atom(n));
  };
  return eval_ring<ZPoly>(*root, leaf, [](const Scalar& s) { return ZPoly(s); });
}

GwaElement parse_element(const Presentation& p, std::string_view text) {
  NodePtr root = Parser(text).parse_all();
  auto leaf = [&](const Node& n) -> GwaElement {
    if (n.kind == Node::Kind::Ident) {
      if (n.text == "x") return GwaElement::x(p);
      if (n.text == "y") return GwaElement::y(p);
      if (n.text == "z") return GwaElement::z(p);
    }
    return GwaElement::scalar(p, scalar_atom(n));
  };
  return eval_ring<GwaElement>(*root, leaf, [&](const Scalar& s) { return GwaElement::scalar(p, s); });
}

GrElement parse_gr_element(const GrRing& r, std::string_view text) {
  NodePtr root = Parser(text).parse_all();
  auto leaf = [&](const Node& n) -> GrElement {
    if (n.kind == Node::Kind::Ident) {
      if (n.text == "x") return GrElement::x(r);
      if (n.text == "y") return GrElement::y(r);
      if (n.text == "z") return GrElement::z(r);
    }
    return GrElement::scalar(r, scalar_atom(n));
  };
  return eval_ring<GrElement>(*root, leaf, [&](const Scalar& s) { return GrElement::scalar(r, s); });
}

std::vector<Generator> parse_word(std::string_view text) {
  NodePtr root = Parser(text).parse_all();
  std::vector<Generator> out;
  collect_word(*root, out);
  return out;
}

Automorphism parse_automorphism(const Presentation& p, std::string_view text) { return make_word(p, parse_word(text)); }

}  // namespace gwalg
