#include "fedlogic/syntax.hpp"

#include <cctype>
#include <string>

#include "fedlogic/substitution.hpp"
#include "fedlogic/sugar.hpp"

namespace fedlogic {

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : Error("parse error at offset " + std::to_string(offset) + ": " + msg), offset_(offset) {}

namespace {

std::string violations_text(const std::vector<Violation>& v) {
  std::string s = "ill-formed object:";
  for (const auto& x : v) s += " " + x.message + " at " + position_string(x.position) + ";";
  return s;
}

}  // namespace

FormationError::FormationError(std::vector<Violation> v)
    : Error(violations_text(v)), violations_(std::move(v)) {}

std::string variable_name(unsigned i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  if (i < 50) {
    unsigned j = i - 26;
    for (char c = 'A'; c <= 'Z'; ++c) {
      if (c == 'O' || c == 'V') continue;
      if (j-- == 0) return std::string(1, c);
    }
  }
  return "v" + std::to_string(i);
}

std::optional<unsigned> variable_index(std::string_view s) {
  if (s.size() == 1) {
    char c = s[0];
    if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a');
    if (c >= 'A' && c <= 'Z' && c != 'O' && c != 'V') {
      unsigned j = 26;
      for (char d = 'A'; d < c; ++d)
        if (d != 'O' && d != 'V') ++j;
      return j;
    }
    return std::nullopt;
  }
  if (s.size() >= 3 && s[0] == 'v') {
    unsigned n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      if (n > 100000) return std::nullopt;
      n = n * 10 + static_cast<unsigned>(s[i] - '0');
    }
    if (s[1] == '0' || n < 50) return std::nullopt;
    return n;
  }
  return std::nullopt;
}

namespace {

enum class Tok {
  end, lparen, rparen, lbrace, rbrace, bar, dot, amp, cont, sub, eq, inter, orr,
  stop_c, stop_v, stop_i, brace_s, brace_sa, ident, hash, bot,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;     // identifiers
  std::uint64_t num = 0;  // level suffix or numeral
  bool has_num = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t{Tok::end, i_, {}, 0, false};
      if (i_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[i_];
      if (c == '(') { t.kind = Tok::lparen; ++i_; }
      else if (c == ')') { t.kind = Tok::rparen; ++i_; }
      else if (c == '{') { t.kind = Tok::lbrace; ++i_; }
      else if (c == '}') { t.kind = Tok::rbrace; ++i_; }
      else if (c == '.') { t.kind = Tok::dot; ++i_; }
      else if (c == '=') { t.kind = Tok::eq; ++i_; }
      else if (c == '|') { t.kind = Tok::bar; ++i_; level(t); }
      else if (c == '&') { t.kind = Tok::amp; ++i_; level(t); }
      else if (starts(":>")) { t.kind = Tok::cont; i_ += 2; }
      else if (starts("<:")) { t.kind = Tok::sub; i_ += 2; level(t); }
      else if (starts("/\\")) { t.kind = Tok::inter; i_ += 2; }
      else if (starts("\\/")) { t.kind = Tok::orr; i_ += 2; }
      else if (starts("_|_")) { t.kind = Tok::bot; i_ += 3; }
      else if (starts("'sa")) { t.kind = Tok::brace_sa; i_ += 3; }
      else if (starts("'s")) { t.kind = Tok::brace_s; i_ += 2; }
      else if (starts("'c")) { t.kind = Tok::stop_c; i_ += 2; }
      else if (starts("'v")) { t.kind = Tok::stop_v; i_ += 2; }
      else if (starts("'i")) { t.kind = Tok::stop_i; i_ += 2; }
      else if (c == '#') {
        t.kind = Tok::hash;
        ++i_;
        if (!level(t)) throw ParseError("expected digits after '#'", t.pos);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = Tok::ident;
        std::size_t b = i_;
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
        t.text = std::string(s_.substr(b, i_ - b));
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      else if (starts("--")) {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else break;
    }
  }
  bool starts(std::string_view p) const { return s_.substr(i_, p.size()) == p; }
  bool level(Token& t) {
    std::size_t b = i_;
    std::uint64_t n = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (n > (UINT64_MAX - 9) / 10) throw ParseError("number too large", b);
      n = n * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      ++i_;
    }
    if (i_ == b) return false;
    t.num = n;
    t.has_num = true;
    return true;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// Splits keyword prefixes such as in2, Sing1, V3.
std::optional<unsigned> suffix_level(const std::string& s, std::string_view kw) {
  if (s.size() <= kw.size() || s.compare(0, kw.size(), kw) != 0) return std::nullopt;
  unsigned n = 0;
  for (std::size_t i = kw.size(); i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    n = n * 10 + static_cast<unsigned>(s[i] - '0');
    if (n > 1000000) return std::nullopt;
  }
  if (s[kw.size()] == '0' || n == 0) return std::nullopt;
  return n;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Mode mode) : t_(std::move(toks)), mode_(mode) {}

  Object top() {
    Object o = expr();
    if (peek().kind != Tok::end) fail("unexpected trailing input");
    return o;
  }

 private:
  const Token& peek() const { return t_[p_]; }
  const Token& next() { return t_[p_++]; }
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(m, peek().pos); }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++p_;
  }
  void no_chain(Tok k, const char* op) const {
    if (peek().kind == k) fail(std::string("chained '") + op + "' needs parentheses");
  }

  std::optional<unsigned> rel_in() const {
    if (peek().kind != Tok::ident) return std::nullopt;
    if (peek().text == "in") return 0u;
    return suffix_level(peek().text, "in");
  }

  Object expr() {
    Object l = rel();
    if (peek().kind == Tok::cont) {
      ++p_;
      Object r = rel();
      no_chain(Tok::cont, ":>");
      return Object::cont(l, r);
    }
    return l;
  }

  Object rel() {
    Object l = meet();
    const Token& t = peek();
    if (t.kind == Tok::eq) {
      ++p_;
      Object r = meet();
      check_rel_chain();
      return sugar::eq(l, r);
    }
    if (t.kind == Tok::sub) {
      unsigned n = t.has_num ? static_cast<unsigned>(t.num) : 0;
      ++p_;
      Object r = meet();
      check_rel_chain();
      return sugar::sub(l, r, n);
    }
    if (auto n = rel_in()) {
      ++p_;
      Object r = meet();
      check_rel_chain();
      return sugar::in(l, r, *n, mode_);
    }
    return l;
  }

  void check_rel_chain() const {
    if (peek().kind == Tok::eq || peek().kind == Tok::sub || rel_in())
      fail("chained relation needs parentheses");
  }

  Object meet() {
    Object l = fed();
    if (peek().kind == Tok::inter || peek().kind == Tok::orr) {
      bool is_or = next().kind == Tok::orr;
      Object r = fed();
      if (peek().kind == Tok::inter || peek().kind == Tok::orr)
        fail("chained '/\\' or '\\/' needs parentheses");
      return is_or ? sugar::or_(l, r, mode_) : sugar::inter(l, r, mode_);
    }
    return l;
  }

  Object fed() {
    Object l = unary();
    if (peek().kind == Tok::amp) {
      unsigned n = peek().has_num ? static_cast<unsigned>(peek().num) : 0;
      ++p_;
      Object r = unary();
      no_chain(Tok::amp, "&");
      return Object::fed(n, l, r);
    }
    return l;
  }

  Object unary() {
    if (peek().kind == Tok::ident) {
      if (peek().text == "not") {
        ++p_;
        return sugar::not_(unary());
      }
      if (peek().text == "triv") {
        ++p_;
        return sugar::triv(unary());
      }
    }
    return postfix();
  }

  Object postfix() {
    Object o = primary();
    for (;;) {
      switch (peek().kind) {
        case Tok::stop_c: ++p_; o = Object::cstop(o); break;
        case Tok::stop_v: ++p_; o = Object::vstop(o); break;
        case Tok::stop_i: ++p_; o = Object::istop(o); break;
        case Tok::brace_s: ++p_; o = Object::brace(o); break;
        case Tok::brace_sa: ++p_; o = Object::antibrace(o); break;
        default: return o;
      }
    }
  }

  Variable binder() {
    std::size_t at = peek().pos;
    Object v = postfix();
    if (!v.is_variable()) throw ParseError("class index must be a variable", at);
    return Variable(v);
  }

  Object primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        ++p_;
        Object o = expr();
        expect(Tok::rparen, "')'");
        return o;
      }
      case Tok::bot: ++p_; return Object::absurd();
      case Tok::hash: ++p_; return Object::numeral(t.num);
      case Tok::lbrace: {
        ++p_;
        Variable x = binder();
        if (peek().kind != Tok::bar) fail("expected '|'");
        unsigned n = peek().has_num ? static_cast<unsigned>(peek().num) : 0;
        ++p_;
        Object body = expr();
        expect(Tok::rbrace, "'}'");
        return bind_index(body, x, n);
      }
      case Tok::ident: return word();
      default: fail("expected an object");
    }
  }

  Object word() {
    Token t = next();
    const std::string& s = t.text;
    if (s == "O") return Object::empty();
    if (s == "V") return sugar::universe(0);
    if (auto n = suffix_level(s, "V")) return sugar::universe(*n);
    if (s == "Sing" || suffix_level(s, "Sing")) {
      unsigned n = s == "Sing" ? 0 : *suffix_level(s, "Sing");
      expect(Tok::lparen, "'(' after Sing");
      Object a = expr();
      expect(Tok::rparen, "')'");
      return sugar::sing(a, n, mode_);
    }
    if (s == "All" || s == "Ex") {
      Variable x = binder();
      expect(Tok::dot, "'.'");
      Object body = unary();
      return s == "All" ? sugar::all(x, body) : sugar::ex(x, body);
    }
    if (auto i = variable_index(s)) return Variable::canonical(*i).object();
    throw ParseError("unknown identifier '" + s + "'", t.pos);
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  Mode mode_;
};

// ---- rendering ----

enum Prec { kCont = 1, kRel = 2, kMeet = 3, kFed = 4, kPrim = 5 };

struct Out {
  std::string s;
  int prec;
};

// Class body with the index written as the plain variable, when that reads
// back to the same object.
Object open_body(const Object& cls) {
  Variable x = cls.index();
  if (appears(x, cls.body())) return cls.body();
  return instantiate_index(cls, x.object());
}

std::string level_suffix(unsigned n) { return n == 0 ? "" : std::to_string(n); }

class Renderer {
 public:
  Renderer(Style st, Mode mode) : st_(st), mode_(mode) {}

  std::string top(const Object& o) { return go(o).s; }

 private:
  std::string wrap(const Out& o, int above) const {
    return o.prec <= above ? "(" + o.s + ")" : o.s;
  }
  Out bin(const Object& l, const std::string& op, const Object& r, int prec) {
    std::string s = wrap(go(l), prec) + " " + op + " " + wrap(go(r), prec);
    if (st_ == Style::core) return {"(" + s + ")", kPrim};
    return {s, prec};
  }
  Out post(const Object& body, const char* suf) {
    return {wrap(go(body), kFed) + suf, kPrim};
  }
  Out fn(const char* name, const Object& a) { return {std::string(name) + "(" + go(a).s + ")", kPrim}; }
  std::string var(const Object& v) { return go(v).s; }

  Out go(const Object& o) {
    if (st_ == Style::sugar) {
      if (auto r = sugared(o)) return *r;
    }
    switch (o.kind()) {
      case Kind::empty: return {"O", kPrim};
      case Kind::numeral: return {"#" + std::to_string(o.numeral_value()), kPrim};
      case Kind::cstop:
        if (st_ == Style::sugar && o.is_absurd()) return {"_|_", kPrim};
        return post(o.child(0), "'c");
      case Kind::vstop:
        if (auto i = o.canonical_index()) return {variable_name(*i), kPrim};
        return post(o.child(0), "'v");
      case Kind::istop: return post(o.child(0), "'i");
      case Kind::brace: return post(o.child(0), "'s");
      case Kind::antibrace: return post(o.child(0), "'sa");
      case Kind::fed: return bin(o.left(), "&" + level_suffix(o.level()), o.right(), kFed);
      case Kind::cont: return bin(o.left(), ":>", o.right(), kCont);
      case Kind::inter: return bin(o.left(), "/\\", o.right(), kMeet);
      case Kind::cls:
        return {"{" + var(o.index().object()) + " |" + level_suffix(o.level()) + " " +
                    go(st_ == Style::sugar ? open_body(o) : o.body()).s + "}",
                kPrim};
    }
    return {"?", kPrim};
  }

  std::optional<Out> sugared(const Object& o) {
    using namespace sugar;
    switch (o.kind()) {
      case Kind::cls: {
        if (o.body().is(Kind::empty) && o.index().canonical_index() == 0u)
          return Out{"V" + level_suffix(o.level()), kPrim};
        if (mode_ == Mode::classical && o.level() == 0) return classical_meet(o);
        return std::nullopt;
      }
      case Kind::cont: return sugared_cont(o);
      case Kind::fed: return sugared_fed(o);
      default: return std::nullopt;
    }
  }

  std::optional<Out> classical_meet(const Object& o) {
    const Object& b = o.body();
    if (!b.is(Kind::fed) || b.level() != 0) return std::nullopt;
    const Object& l = b.left();
    const Object& r = b.right();
    if (!l.is(Kind::fed) || !r.is(Kind::fed) || !l.right().is(Kind::cont) || !r.right().is(Kind::cont))
      return std::nullopt;
    Object a = l.right().left(), c = r.right().left();
    if (!is_closed_wrt(o, a) || !is_closed_wrt(o, c)) return std::nullopt;
    if (sugar::inter(a, c, Mode::classical) != o) return std::nullopt;
    return bin(a, "/\\", c, kMeet);
  }

  static bool is_closed_wrt(const Object& cls, const Object& part) {
    return !occurs(cls.index(), part);
  }

  std::optional<Out> sugared_cont(const Object& o) {
    using namespace sugar;
    const Object& l = o.left();
    const Object& r = o.right();
    // Singn(a)
    if (l.is(Kind::fed) && l.level() == 0 && l.left().is(Kind::cont) &&
        l.left().right().is(Kind::fed) && l.left().right().level() > 0) {
      const Object& a = l.left().left();
      unsigned n = l.left().right().level();
      if (sing(a, n, mode_) == o) return Out{"Sing" + level_suffix(n) + "(" + go(a).s + ")", kPrim};
    }
    if (r.is_absurd()) {
      // Ex x.(phi)
      if (l.is(Kind::fed) && l.level() == 0 && l.left().is(Kind::cont) &&
          l.left().left().is(Kind::empty) && l.left().right().is(Kind::cls) &&
          l.left().right().level() == 0 && eq(Object::empty(), l.left().right()) == l) {
        const Object& c = l.left().right();
        return Out{"Ex " + var(c.index().object()) + ".(" + go(open_body(c)).s + ")", kPrim};
      }
      if (mode_ == Mode::classical && l.is(Kind::fed) && l.level() == 0 &&
          l.left().is(Kind::cont) && l.left().right().is_absurd() && l.right().is(Kind::cont) &&
          l.right().right().is_absurd())
        return bin(l.left().left(), "\\/", l.right().left(), kMeet);
      return fn("not", l);
    }
    if (l.is(Kind::empty)) {
      if (mode_ == Mode::extended && r.is(Kind::inter) && r.left().is(Kind::cont) &&
          r.left().left().is(Kind::empty) && r.right().is(Kind::cont) &&
          r.right().left().is(Kind::empty))
        return bin(r.left().right(), "\\/", r.right().right(), kMeet);
      return fn("triv", r);
    }
    return std::nullopt;
  }

  std::optional<Out> sugared_fed(const Object& o) {
    using namespace sugar;
    if (o.level() != 0) return std::nullopt;
    const Object& l = o.left();
    const Object& r = o.right();
    // Sing(a): first conjunct is not(triv(a) = a)
    if (l.is(Kind::cont) && l.right().is_absurd() && l.left().is(Kind::fed) &&
        l.left().left().is(Kind::cont) && l.left().left().left().is(Kind::cont) &&
        l.left().left().left().left().is(Kind::empty)) {
      const Object& a = l.left().left().left().right();
      if (sing(a, 0, mode_) == o) return Out{"Sing(" + go(a).s + ")", kPrim};
    }
    // a in b
    if (r.is(Kind::cont)) {
      const Object& a = r.right();
      if (l.is(Kind::fed) && sing(a, 0, mode_) == l) return bin(a, "in", r.left(), kRel);
    }
    // a inn b
    if (r.is(Kind::fed) && r.level() == 0 && r.left().is(Kind::cont) &&
        r.left().right().is(Kind::fed) && r.left().right().level() > 0) {
      unsigned n = r.left().right().level();
      const Object& a = r.left().right().left();
      const Object& b = r.left().left();
      if (in(a, b, n, mode_) == o) return bin(a, "in" + level_suffix(n), b, kRel);
    }
    if (l.is(Kind::cont) && r.is(Kind::cont) && l.left() == r.right() && l.right() == r.left()) {
      const Object& a = l.left();
      const Object& b = l.right();
      if (a == universe(0) && b.is(Kind::cls) && b.level() == 0)
        return Out{"All " + var(b.index().object()) + ".(" + go(open_body(b)).s + ")", kPrim};
      if (b.is(Kind::fed) && b.level() > 0 && b.right() == a)
        return bin(b.left(), "<:" + level_suffix(b.level()), a, kRel);
      return bin(a, "=", b, kRel);
    }
    return std::nullopt;
  }

  Style st_;
  Mode mode_;
};

}  // namespace

Object parse(std::string_view text, Mode mode) {
  Parser p(Lexer(text).run(), mode);
  Object o = p.top();
  auto v = validate_formation(o, mode);
  if (!v.empty()) throw FormationError(std::move(v));
  return o;
}

std::string render(const Object& o, Style style, Mode mode) { return Renderer(style, mode).top(o); }

}  // namespace fedlogic
