#include "fedlogic/script.hpp"

#include <cctype>
#include <sstream>

#include "fedlogic/syntax.hpp"

namespace fedlogic {

bool is_derived(Rule r) {
  return r == Rule::comb || r == Rule::trans || r == Rule::inst || r == Rule::lemma ||
         r == Rule::class_d;
}

Justification Justification::of_axiom(AxiomId id) {
  Justification j;
  j.rule = Rule::axiom;
  j.axiom = std::move(id);
  return j;
}

Justification Justification::exchange(unsigned i, unsigned k) {
  Justification j;
  j.rule = Rule::exch;
  j.refs = {i, k};
  return j;
}

Justification Justification::substitution(unsigned i, Variable x, Object t) {
  Justification j;
  j.rule = Rule::sub;
  j.refs = {i};
  j.subs.push_back({std::move(x), std::move(t)});
  return j;
}

Justification Justification::instantiation(unsigned i, std::vector<SubstitutionSpec> s) {
  Justification j;
  j.rule = Rule::inst;
  j.refs = {i};
  j.subs = std::move(s);
  return j;
}

Justification Justification::class_rule(unsigned i, Variable x, unsigned level) {
  Justification j;
  j.rule = Rule::cls;
  j.refs = {i};
  j.x = std::move(x);
  j.level = level;
  return j;
}

Justification Justification::class_derived(unsigned i, Variable x, unsigned level) {
  Justification j = class_rule(i, std::move(x), level);
  j.rule = Rule::class_d;
  return j;
}

Justification Justification::combination(unsigned i, unsigned k) {
  Justification j;
  j.rule = Rule::comb;
  j.refs = {i, k};
  return j;
}

Justification Justification::transitivity(unsigned i, unsigned k) {
  Justification j;
  j.rule = Rule::trans;
  j.refs = {i, k};
  return j;
}

Justification Justification::lemma_ref(std::string name) {
  Justification j;
  j.rule = Rule::lemma;
  j.lemma = std::move(name);
  return j;
}

Justification Justification::assumption() {
  Justification j;
  j.rule = Rule::assume;
  return j;
}

Justification Justification::discharge_of(unsigned i) {
  Justification j;
  j.rule = Rule::discharge;
  j.refs = {i};
  return j;
}

bool ProofScript::has_assumptions() const {
  for (const auto& s : steps)
    if (s.just.rule == Rule::assume || s.just.rule == Rule::discharge) return true;
  return false;
}

const Object& ProofScript::theorem() const {
  if (steps.empty() || !steps.back().formula) throw Error("script has no final formula");
  return *steps.back().formula;
}

ScriptError::ScriptError(const std::string& msg, std::size_t line)
    : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string render_obj(const Object& o, Mode mode) { return render(o, Style::sugar, mode); }

class JustParser {
 public:
  JustParser(std::string text, Mode mode, std::size_t line)
      : text_(std::move(text)), mode_(mode), line_(line) {}

  Justification run() {
    std::string head = take_word();
    if (head.empty()) fail("missing justification");
    if (head == "assume") return done(Justification::assumption());
    if (head == "discharge") return done(Justification::discharge_of(num()));
    if (head == "exch" || head == "comb" || head == "trans") {
      unsigned i = num(), j = num();
      if (head == "exch") return done(Justification::exchange(i, j));
      if (head == "comb") return done(Justification::combination(i, j));
      return done(Justification::transitivity(i, j));
    }
    if (head == "sub" || head == "inst") {
      unsigned i = num();
      auto specs = substitutions();
      if (head == "sub") {
        if (specs.size() != 1) fail("sub takes exactly one substitution");
        return Justification::substitution(i, specs[0].target, specs[0].substituend);
      }
      return Justification::instantiation(i, std::move(specs));
    }
    if (head == "class" || head == "class-d") {
      unsigned i = num();
      Variable x = variable(take_word());
      unsigned n = 0;
      std::string lv = take_word();
      if (!lv.empty()) {
        if (lv[0] != '@') fail("expected @n");
        n = to_num(lv.substr(1));
      }
      if (head == "class") return done(Justification::class_rule(i, x, n));
      return done(Justification::class_derived(i, x, n));
    }
    if (head == "lemma") {
      std::string name = take_word();
      if (name.empty()) fail("lemma needs a name");
      return done(Justification::lemma_ref(name));
    }
    return done(axiom(head));
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw ScriptError(m + " in justification '" + text_ + "'", line_);
  }

  Justification done(Justification j) {
    if (!trim(std::string_view(text_).substr(pos_)).empty()) fail("trailing text");
    return j;
  }

  std::string take_word() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t b = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(b, pos_ - b);
  }

  unsigned to_num(const std::string& w) const {
    if (w.empty() || w.size() > 9) fail("expected a number");
    for (char c : w)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number, got '" + w + "'");
    return static_cast<unsigned>(std::stoul(w));
  }

  unsigned num() { return to_num(take_word()); }

  Variable variable(const std::string& w) const {
    if (w.empty()) fail("expected a variable");
    Object o;
    try {
      o = parse(w, mode_);
    } catch (const Error& e) {
      fail(std::string("bad variable: ") + e.what());
    }
    if (!o.is_variable()) fail("'" + w + "' is not a variable");
    return Variable(o);
  }

  Object object(const std::string& s) const {
    try {
      return parse(s, mode_);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::vector<SubstitutionSpec> substitutions() {
    std::string rest = text_.substr(pos_);
    pos_ = text_.size();
    std::vector<SubstitutionSpec> out;
    std::size_t b = 0;
    for (;;) {
      std::size_t e = rest.find(',', b);
      std::string part = rest.substr(b, e == std::string::npos ? std::string::npos : e - b);
      std::size_t as = part.find(":=");
      if (as == std::string::npos) fail("expected 'x := object'");
      out.push_back({variable(trim(part.substr(0, as))), object(part.substr(as + 2))});
      if (e == std::string::npos) break;
      b = e + 1;
    }
    return out;
  }

  // "@n" or "@n:m" suffix of an axiom name
  void split_level(std::string& name, std::optional<unsigned>& n, std::optional<unsigned>& m) const {
    auto at = name.find('@');
    if (at == std::string::npos) return;
    std::string lv = name.substr(at + 1);
    name = name.substr(0, at);
    auto colon = lv.find(':');
    if (colon != std::string::npos) {
      m = to_num(lv.substr(colon + 1));
      lv = lv.substr(0, colon);
    }
    n = to_num(lv);
  }

  Justification axiom(std::string name) {
    std::optional<unsigned> n, m;
    split_level(name, n, m);
    if (name == "comp") name = n ? "B11" : "A13";
    else if (name == "ext-a") name = n ? "B12a" : "A14a";
    else if (name == "ext-b") name = n ? "B12b" : "A14b";
    auto tag = tag_from_name(name);
    if (!tag) fail("unknown axiom '" + name + "'");
    AxiomId id = AxiomId::fixed(*tag);
    if (is_b_group(*tag)) id.level = n.value_or(1);
    else if (n) fail("level given for a non-B axiom");
    if (m) {
      if (*tag != AxiomTag::B9) fail("only B9 takes an inner level");
      id.m = m;
    }
    if (is_schema(*tag)) {
      id.x = variable(take_word());
      std::string rest = trim(std::string_view(text_).substr(pos_));
      pos_ = text_.size();
      if (rest.empty()) fail("comprehension needs a condition");
      id.alpha = object(rest);
    } else if (*tag == AxiomTag::A14a || *tag == AxiomTag::A14b || *tag == AxiomTag::B12a ||
               *tag == AxiomTag::B12b) {
      std::string w = take_word();
      if (!w.empty()) {
        id.x = variable(w);
        id.a = variable(take_word());
      }
    }
    return Justification::of_axiom(id);
  }

  std::string text_;
  Mode mode_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string axiom_label(const AxiomId& id, Mode mode) {
  std::string lv = id.level ? "@" + std::to_string(id.level) : "";
  switch (id.tag) {
    case AxiomTag::A13:
    case AxiomTag::B11: {
      std::string s = "comp" + lv + " " + render(id.x.value_or(Variable::canonical(23)).object());
      if (id.alpha) s += " " + render(*id.alpha, Style::sugar, mode);
      return s;
    }
    case AxiomTag::A14a:
    case AxiomTag::A14b:
    case AxiomTag::B12a:
    case AxiomTag::B12b: {
      bool va = id.tag == AxiomTag::A14a || id.tag == AxiomTag::B12a;
      std::string s = std::string(va ? "ext-a" : "ext-b") + lv;
      if (id.x || id.a)
        s += " " + render(id.x.value_or(Variable::canonical(23)).object()) + " " +
             render(id.a.value_or(Variable::canonical(0)).object());
      return s;
    }
    default: break;
  }
  std::string s = tag_name(id.tag);
  if (is_b_group(id.tag)) {
    s += lv;
    if (id.m) s += ":" + std::to_string(*id.m);
  }
  return s;
}

std::string render_justification(const Justification& j, Mode mode) {
  auto subs = [&] {
    std::string s;
    for (std::size_t i = 0; i < j.subs.size(); ++i) {
      if (i) s += ",";
      s += " " + render(j.subs[i].target.object()) + " := " + render(j.subs[i].substituend, Style::sugar, mode);
    }
    return s;
  };
  auto r = [&](std::size_t i) { return std::to_string(j.refs.at(i)); };
  std::string lv = j.level ? " @" + std::to_string(j.level) : "";
  switch (j.rule) {
    case Rule::axiom: return axiom_label(*j.axiom, mode);
    case Rule::exch: return "exch " + r(0) + " " + r(1);
    case Rule::comb: return "comb " + r(0) + " " + r(1);
    case Rule::trans: return "trans " + r(0) + " " + r(1);
    case Rule::sub: return "sub " + r(0) + subs();
    case Rule::inst: return "inst " + r(0) + subs();
    case Rule::cls: return "class " + r(0) + " " + render(j.x->object()) + lv;
    case Rule::class_d: return "class-d " + r(0) + " " + render(j.x->object()) + lv;
    case Rule::lemma: return "lemma " + j.lemma;
    case Rule::assume: return "assume";
    case Rule::discharge: return "discharge " + r(0);
  }
  return "?";
}

ProofScript parse_script(std::string_view text, Mode mode, bool allow_holes) {
  ProofScript s;
  std::size_t lineno = 0;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t e = text.find('\n', b);
    if (e == std::string_view::npos) e = text.size();
    std::string line(text.substr(b, e - b));
    b = e + 1;
    ++lineno;
    auto c = line.find("--");
    if (c != std::string::npos) line.resize(c);
    line = trim(line);
    if (line.empty()) {
      if (e == text.size()) break;
      continue;
    }
    std::size_t i = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == 0 || i > 9 || i >= line.size() || line[i] != '.')
      throw ScriptError("expected 'n. <object> ; <justification>'", lineno);
    Step st;
    st.label = static_cast<unsigned>(std::stoul(line.substr(0, i)));
    auto semi = line.find(';', i);
    if (semi == std::string::npos) throw ScriptError("missing ';' before justification", lineno);
    std::string ftext = trim(std::string_view(line).substr(i + 1, semi - i - 1));
    if (ftext == "?") {
      if (!allow_holes) throw ScriptError("'?' formula outside fill mode", lineno);
    } else {
      try {
        st.formula = parse(ftext, mode);
      } catch (const Error& ex) {
        throw ScriptError(ex.what(), lineno);
      }
    }
    st.just = JustParser(trim(std::string_view(line).substr(semi + 1)), mode, lineno).run();
    if (!s.steps.empty() && st.label <= s.steps.back().label)
      throw ScriptError("labels must be strictly increasing", lineno);
    s.steps.push_back(std::move(st));
    if (e == text.size()) break;
  }
  return s;
}

std::string render_script(const ProofScript& s, Mode mode) {
  std::string out;
  for (const auto& st : s.steps) {
    out += std::to_string(st.label) + ". " + (st.formula ? render_obj(*st.formula, mode) : "?") +
           " ; " + render_justification(st.just, mode) + "\n";
  }
  return out;
}

}  // namespace fedlogic
