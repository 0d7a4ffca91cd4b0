#include "psmod/syntax.hpp"

#include "psmod/arith.hpp"
#include "psmod/error.hpp"

#include <cctype>

namespace psmod {

namespace {

enum class Tok { Int, Ident, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    size_t j = i;
    Tok kind;
    if (std::isdigit(ch)) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::Int;
    } else if (std::isalpha(ch) || ch == '_') {
      while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      kind = Tok::Ident;
    } else if (std::string_view("+-*/^()[],;").find(static_cast<char>(ch)) != std::string_view::npos) {
      j = i + 1;
      kind = Tok::Punct;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", line, col);
    }
    out.push_back({kind, std::string(s.substr(i, j - i)), line, col});
    advance(j - i);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  size_t mark() const { return pos_; }
  void reset(size_t m) { pos_ = m; }

  bool at(std::string_view punct) const {
    return peek().kind == Tok::Punct && peek().text == punct;
  }
  bool at_ident(std::string_view name) const {
    return peek().kind == Tok::Ident && peek().text == name;
  }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.col);
  }

  std::string describe() const {
    return at_end() ? "end of input" : "'" + peek().text + "'";
  }
  void expect(std::string_view punct) {
    if (!at(punct)) fail("expected '" + std::string(punct) + "', found " + describe());
    next();
  }
  void expect_ident(std::string_view name) {
    if (!at_ident(name)) fail("expected '" + std::string(name) + "', found " + describe());
    next();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected " + describe());
  }
  const Token& expect_int() {
    if (peek().kind != Tok::Int) fail("expected an integer, found " + describe());
    return next();
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;
  ExprParser(Cursor& c, const Ops& ops) : c_(c), ops_(ops) {}

  Value expr() {
    Value v = unary();
    for (;;) {
      if (c_.at("+")) {
        c_.next();
        v = ops_.add(v, term());
      } else if (c_.at("-")) {
        c_.next();
        v = ops_.sub(v, term());
      } else {
        return v;
      }
    }
  }

 private:
  // the first term may carry a sign; later ones get theirs from expr()
  Value term() { return products(power()); }

  Value unary() {
    if (c_.at("-")) {
      c_.next();
      return ops_.neg(unary());
    }
    if (c_.at("+")) {
      c_.next();
      return unary();
    }
    return products(power());
  }

  Value products(Value v) {
    for (;;) {
      if (c_.at("*")) {
        c_.next();
        v = ops_.mul(v, signed_power());
      } else if (c_.at("/")) {
        const Token op = c_.next();
        v = ops_.div(v, signed_power(), op);
      } else if (starts_atom()) {
        v = ops_.mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value signed_power() {
    if (c_.at("-")) {
      c_.next();
      return ops_.neg(signed_power());
    }
    return power();
  }

  bool starts_atom() const {
    const Token& t = c_.peek();
    return t.kind == Tok::Int || t.kind == Tok::Ident || (t.kind == Tok::Punct && t.text == "(");
  }

  Value power() {
    Value base = atom();
    if (c_.at("^")) {
      c_.next();
      const Token& e = c_.expect_int();
      if (e.text.size() > 6) Cursor::fail_at(e, "exponent too large");
      base = ops_.pow(base, static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Value atom() {
    const Token& t = c_.peek();
    if (t.kind == Tok::Int) {
      c_.next();
      return ops_.integer(Integer(t.text));
    }
    if (t.kind == Tok::Ident) {
      const Token tok = c_.next();
      return ops_.symbol(tok);
    }
    if (c_.at("(")) {
      c_.next();
      Value v = expr();
      c_.expect(")");
      return v;
    }
    c_.fail("expected an element, found " + c_.describe());
  }

  Cursor& c_;
  const Ops& ops_;
};

struct DomainOps {
  using Value = Element;
  const Domain& d;

  Value integer(const Integer& n) const { return d.from_integer(n); }
  Value symbol(const Token& t) const {
    if (t.text == "w") {
      if (d.kind() == DomainKind::PolyOverRationals || d.order().is_integers())
        Cursor::fail_at(t, "'w' is not defined in " + d.to_string());
      return d.embed(d.order().omega());
    }
    if (t.text == "x") {
      if (d.kind() != DomainKind::PolyOverRationals)
        Cursor::fail_at(t, "'x' is only defined in Q[x]");
      return RatPoly::x();
    }
    Cursor::fail_at(t, "unknown symbol '" + t.text + "'");
  }
  Value add(const Value& a, const Value& b) const { return d.add(a, b); }
  Value sub(const Value& a, const Value& b) const { return d.sub(a, b); }
  Value neg(const Value& a) const { return d.neg(a); }
  Value mul(const Value& a, const Value& b) const { return d.mul(a, b); }
  Value pow(const Value& a, unsigned k) const { return d.pow(a, k); }
  Value div(const Value& a, const Value& b, const Token& at) const {
    if (d.is_zero(b)) Cursor::fail_at(at, "division by zero");
    auto q = exact_div(d, b, a);
    if (!q) Cursor::fail_at(at, d.format(b) + " does not divide " + d.format(a) + " in " + d.to_string());
    return *q;
  }
};

struct OPolyOps {
  using Value = OPoly;
  const Order& o;

  static void trim(OPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
  }
  Value integer(const Integer& n) const {
    OPoly f{OrderElement(n)};
    trim(f);
    return f;
  }
  Value symbol(const Token& t) const {
    if (t.text == "w") {
      if (o.is_integers()) Cursor::fail_at(t, "'w' is not defined over Z");
      return {o.omega()};
    }
    if (t.text == "X") return {OrderElement(0), OrderElement(1)};
    Cursor::fail_at(t, "unknown symbol '" + t.text + "' (the polynomial variable is X)");
  }
  Value add(const Value& a, const Value& b) const {
    OPoly out(std::max(a.size(), b.size()), OrderElement(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = o.add(out[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) out[i] = o.add(out[i], b[i]);
    trim(out);
    return out;
  }
  Value neg(const Value& a) const {
    OPoly out;
    for (const auto& c : a) out.push_back(o.neg(c));
    return out;
  }
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value mul(const Value& a, const Value& b) const { return poly_mul(o, a, b); }
  Value pow(const Value& a, unsigned k) const {
    Value r{OrderElement(1)};
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  Value div(const Value&, const Value&, const Token& at) const {
    Cursor::fail_at(at, "division is not available in polynomials over an order");
  }
};

Element parse_expr(Cursor& c, const Domain& d) {
  DomainOps ops{d};
  return ExprParser<DomainOps>(c, ops).expr();
}

Domain domain_rule(Cursor& c) {
  const Token head = c.peek();
  if (c.at_ident("Z")) {
    c.next();
    if (!c.at("[")) return Domain::integers();
    c.next();
    c.expect_ident("w");
    c.expect(",");
    c.expect("-");
    const Token m = c.expect_int();
    c.expect("]");
    const Integer mv(m.text);
    if (mv < 2) Cursor::fail_at(m, "m = " + m.text + " is not supported; Z[w,-m] needs m >= 2");
    if (!is_squarefree(mv)) Cursor::fail_at(m, m.text + " is not squarefree");
    if (!mv.fits_slong_p()) Cursor::fail_at(m, "m is too large");
    return Domain::imag_quad(mv.get_si());
  }
  if (c.at_ident("Q")) {
    c.next();
    c.expect("[");
    c.expect_ident("x");
    c.expect("]");
    return Domain::poly_rationals();
  }
  if (c.at_ident("loc")) {
    c.next();
    c.expect("(");
    const Domain base = domain_rule(c);
    c.expect(";");
    const Token list_at = c.peek();
    c.expect("[");
    std::vector<OrderElement> gens;
    if (!c.at("]")) {
      for (;;) {
        const Token at = c.peek();
        const Element g = parse_expr(c, base);
        if (!g.is_order_element()) Cursor::fail_at(at, "S-generators must lie in the base order");
        gens.push_back(g.order_element());
        if (!c.at(",")) break;
        c.next();
      }
    }
    c.expect("]");
    c.expect(")");
    try {
      return Domain::localized(base, gens);
    } catch (const Error& e) {
      Cursor::fail_at(list_at, e.what());
    }
  }
  Cursor::fail_at(head, "expected a domain (Z, Z[w,-m], Q[x] or loc(...)), found " + c.describe());
}

Vector tuple_rule(Cursor& c, const Domain& d) {
  c.expect("(");
  Vector v{parse_expr(c, d)};
  while (c.at(",")) {
    c.next();
    v.push_back(parse_expr(c, d));
  }
  c.expect(")");
  return v;
}

std::vector<Element> list_rule(Cursor& c, const Domain& d) {
  c.expect("[");
  std::vector<Element> out;
  if (!c.at("]")) {
    out.push_back(parse_expr(c, d));
    while (c.at(",")) {
      c.next();
      out.push_back(parse_expr(c, d));
    }
  }
  c.expect("]");
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

bool is_plain_integer(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Domain parse_domain(std::string_view text) {
  Cursor c(text);
  Domain d = domain_rule(c);
  c.expect_end();
  return d;
}

Element parse_element(const Domain& d, std::string_view text) {
  Cursor c(text);
  Element e = parse_expr(c, d);
  c.expect_end();
  return e;
}

Vector parse_vector(const Domain& d, std::string_view text) {
  Cursor c(text);
  if (c.at("(")) {
    try {
      Vector v = tuple_rule(c, d);
      c.expect_end();
      return v;
    } catch (const ParseError&) {
      c.reset(0);
    }
  }
  Vector v{parse_expr(c, d)};
  c.expect_end();
  return v;
}

std::vector<Element> parse_element_list(const Domain& d, std::string_view text) {
  Cursor c(text);
  auto out = list_rule(c, d);
  c.expect_end();
  return out;
}

OIdeal parse_ideal(const Domain& d, std::string_view text) {
  if (!d.is_order()) throw Error(ErrorKind::Unsupported, "ideals are parsed over Z and Z[w] only");
  std::vector<OrderElement> gens;
  for (const auto& e : parse_element_list(d, text)) gens.push_back(e.order_element());
  return OIdeal::from_generators(d.order(), gens);
}

Module parse_module(std::string_view text, const std::optional<Domain>& scalars) {
  Cursor c(text);
  std::optional<Domain> d = scalars;
  if (c.at_ident("module")) {
    c.next();
    c.expect_ident("over");
    d = domain_rule(c);
  }
  if (!d) c.fail("module literal needs 'module over <domain>' or a separate domain");
  Domain base = *d;
  std::vector<OrderElement> s;
  if (d->is_localized()) {
    base = d->base();
    s = d->s_generators();
  }
  c.expect_ident("rank");
  const Token rank_tok = c.expect_int();
  const unsigned long rank = std::stoul(rank_tok.text);
  if (rank == 0 || rank > 64) Cursor::fail_at(rank_tok, "rank must be between 1 and 64");
  c.expect_ident("gens");
  c.expect("[");
  std::vector<Vector> gens;
  if (!c.at("]")) {
    for (;;) {
      const Token at = c.peek();
      Vector g = (rank == 1 && !c.at("(")) ? Vector{parse_expr(c, base)} : tuple_rule(c, base);
      if (g.size() != rank)
        Cursor::fail_at(at, "generator has " + std::to_string(g.size()) + " entries, rank is " +
                                std::to_string(rank));
      gens.push_back(std::move(g));
      if (!c.at(",")) break;
      c.next();
    }
  }
  c.expect("]");
  if (c.at_ident("loc")) {
    const Token at = c.next();
    c.expect_ident("by");
    if (!s.empty()) Cursor::fail_at(at, "the domain is already localized");
    for (const auto& g : list_rule(c, base)) {
      if (!g.is_order_element()) Cursor::fail_at(at, "S-generators must lie in the base order");
      s.push_back(g.order_element());
    }
  }
  c.expect_end();
  try {
    FgModule m = FgModule::from_generators(base, rank, std::move(gens));
    if (s.empty()) return m;
    return LocModuleView(std::move(m), std::move(s));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), rank_tok.line, rank_tok.col);
  }
}

OPoly parse_opoly(const Domain& d, std::string_view text) {
  if (!d.is_order())
    throw Error(ErrorKind::Unsupported, "polynomial coefficients must lie in Z or Z[w]");
  Cursor c(text);
  OPolyOps ops{d.order()};
  OPoly f = ExprParser<OPolyOps>(c, ops).expr();
  c.expect_end();
  return f;
}

std::string format_module(const Module& m) {
  if (const auto* f = std::get_if<FgModule>(&m)) {
    std::vector<std::string> gens;
    for (const auto& g : f->generators()) gens.push_back(format_vector(f->domain(), g));
    return "module over " + f->domain().to_string() + " rank " +
           std::to_string(f->ambient_rank()) + " gens [" + join(gens) + "]";
  }
  const auto& v = std::get<LocModuleView>(m);
  std::vector<std::string> s;
  for (const auto& g : v.s_generators()) s.push_back(v.base().domain().format(g));
  return format_module(Module(v.base())) + " loc by [" + join(s) + "]";
}

std::string format_ideal(const OIdeal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(ideal.order().to_string(g));
  return "[" + join(gens) + "]";
}

std::string format_opoly(const Order& o, const OPoly& f) {
  std::string out;
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    std::string c = o.to_string(f[k]);
    std::string term;
    if (k == 0) {
      term = is_plain_integer(c) ? c : "(" + c + ")";
    } else {
      const std::string mono = k == 1 ? "X" : "X^" + std::to_string(k);
      if (c == "1") term = mono;
      else if (c == "-1") term = "-" + mono;
      else term = (is_plain_integer(c) ? c : "(" + c + ")") + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace psmod
