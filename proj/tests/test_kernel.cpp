#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fedlogic/corpus.hpp"
#include "fedlogic/kernel.hpp"
#include "fedlogic/proof_string.hpp"
#include "fedlogic/sugar.hpp"
#include "fedlogic/syntax.hpp"

using namespace fedlogic;

namespace {

Variable var(const char* name) { return Variable::canonical(*variable_index(name)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus_file(const std::string& rel) { return slurp(default_corpus_dir() + "/" + rel); }

// Label of the step a check rejects, 0 if it passes.
unsigned rejected_at(const ProofScript& s, const LemmaRegistry& reg = standard_lemmas()) {
  try {
    if (s.has_assumptions()) check_assumption_discipline(s, reg);
    else check_script(s, reg);
  } catch (const CheckError& e) {
    return e.label();
  }
  return 0;
}

bool only_primitive(const ProofScript& s) {
  for (const auto& st : s.steps)
    if (is_derived(st.just.rule) || st.just.rule == Rule::assume ||
        st.just.rule == Rule::discharge)
      return false;
  return true;
}

const Corpus& corpus() {
  static Corpus c = Corpus::load(default_corpus_dir());
  return c;
}

}  // namespace

TEST_CASE("lemma 2.1 checks and proves triv(a) :> (b :> a)") {
  ProofScript s = parse_script(lemma21_text());
  CHECK(s.steps.size() == 23);
  CHECK(check_script(s) == parse("triv(a) :> (b :> a)"));
  CHECK(check_script(s) == parse("(O :> a) :> (b :> a)"));
  CHECK(corpus_file("scripts/lemma-2.1.proof") == lemma21_text());
  const Lemma* l = standard_lemmas().find("lemma-2.1");
  REQUIRE(l);
  CHECK(l->theorem == parse("triv(a) :> (b :> a)"));
}

TEST_CASE("lemma 2.1: every single-step mutation is rejected at that step") {
  const ProofScript base = parse_script(lemma21_text());
  std::vector<Object (*)(const Object&)> mutations = {
      [](const Object& f) { return Object::cont(Object::empty(), f); },
      [](const Object& f) { return Object::fed(0, f, Object::empty()); },
      [](const Object& f) { return Object::cont(f, f); },
      [](const Object& f) { return f.is(Kind::cont) ? Object::cont(f.right(), f.left()) : Object::absurd(); },
      [](const Object& f) {
        Object g = substitute(f, var("a"), var("e").object());
        return g == f ? Object::cont(f, Object::absurd()) : g;
      },
  };
  for (std::size_t i = 0; i < base.steps.size(); ++i)
    for (std::size_t m = 0; m < mutations.size(); ++m) {
      ProofScript s = base;
      Object f = *s.steps[i].formula;
      Object g = mutations[m](f);
      if (g == f) continue;
      s.steps[i].formula = g;
      CAPTURE(i + 1);
      CAPTURE(m);
      CHECK(rejected_at(s) == i + 1);
    }
}

TEST_CASE("check_script: small scripts") {
  CHECK(check_script(parse_script("1. a :> a ; A7")) == parse("a :> a"));
  CHECK(check_script(parse_script("1. a :> O ; A8\n2. O :> O ; sub 1 a := O\n")) ==
        parse("O :> O"));
  // Combination from A10 and A11 with primitive steps only
  ProofScript comb = parse_script(corpus_file("scripts/combination.proof"));
  CHECK(only_primitive(comb));
  CHECK(check_script(comb) == parse("(a :> a) & (b :> O)"));
}

TEST_CASE("check_script: rejections") {
  CHECK_THROWS_AS(check_script(parse_script("")), Error);
  CHECK_THROWS_AS(check_script(parse_script("-- nothing\n")), Error);
  CHECK_THROWS_AS(check_script(ProofScript{}), Error);
  // exchange whose second premise is not F_i :> B
  CHECK(rejected_at(parse_script("1. a :> a ; A7\n2. a :> O ; A8\n3. O ; exch 1 2")) == 3);
  // forward reference
  CHECK(rejected_at(parse_script("1. a :> a ; exch 1 2")) == 1);
  // substitution target must be a variable
  CHECK_THROWS(parse_script("1. a :> a ; A7\n2. O :> O ; sub 1 O := O"));
  // class rule on a premise that is not gamma :> (alpha :> beta)
  CHECK_THROWS_AS(check_script(parse_script("1. a :> a ; A7\n2. {a | a} :> {a | a} ; class 1 a")), CheckError);
  // the rejection names expected and found formulas
  try {
    check_script(parse_script("1. a :> O ; A7"));
    FAIL("accepted");
  } catch (const CheckError& e) {
    CHECK(e.label() == 1);
    REQUIRE(e.expected());
    CHECK(*e.expected() == parse("a :> a"));
    REQUIRE(e.found());
    CHECK(*e.found() == parse("a :> O"));
  }
}

TEST_CASE("class rule orientation") {
  // from gamma :> (alpha :> beta) infer gamma :> ({x|beta} :> {x|alpha})
  ProofBuilder b(standard_lemmas());
  unsigned k = b.k_instance(Object::empty(), var("a").object());
  Object f = b.formula(k);
  CHECK(f == parse("triv(O) :> (a :> O)"));
  unsigned c = b.cls(k, var("a"));
  CHECK(b.formula(c) == parse("triv(O) :> ({a | O} :> {a | a})"));
  CHECK(b.formula(c) == parse("triv(O) :> (V :> {a | a})"));
  CHECK(check_script(b.script()) == parse("triv(O) :> (V :> {a | a})"));
  // x appearing in gamma
  unsigned ka = b.k_instance(var("a").object(), var("a").object());
  CHECK_THROWS_AS(b.cls(ka, var("a")), Error);
}

TEST_CASE("proof strings") {
  ProofString a8 = axiom_leaf(AxiomId::fixed(AxiomTag::A8));
  CHECK(reduce_proof_string(a8) == parse("a :> O"));
  ProofString a7 = subst(axiom_leaf(AxiomId::fixed(AxiomTag::A7)), var("a"), Object::empty());
  CHECK(reduce_proof_string(a7) == parse("O :> O"));
  // cut: from a :> O and (a :> O) :> triv(a :> O)
  ProofString a11 = subst(axiom_leaf(AxiomId::fixed(AxiomTag::A11)), var("b"), Object::empty());
  CHECK(reduce_proof_string(cut(a8, a11)) == parse("triv(a :> O)"));
  CHECK_THROWS_AS(reduce_proof_string(cut(a7, a11)), Error);
  // class rule on triv(O) :> (a :> O), the lemma 2.1 instance
  ProofString k = from_script(parse_script(lemma21_text()));
  ProofString ko = subst(subst(k, var("a"), Object::empty()), var("b"), var("a").object());
  CHECK(reduce_proof_string(ko) == parse("triv(O) :> (a :> O)"));
  CHECK(reduce_proof_string(class_rule(ko, var("a"))) == parse("triv(O) :> (V :> {a | a})"));
  // x appears in gamma
  ProofString ka = subst(k, var("b"), var("a").object());
  CHECK(reduce_proof_string(ka) == parse("triv(a) :> (a :> a)"));
  CHECK_THROWS_AS(reduce_proof_string(class_rule(ka, var("a"))), Error);
}

TEST_CASE("proof strings and scripts agree") {
  for (const auto& e : corpus().entries()) {
    if (e.kind != EntryKind::script) continue;
    CAPTURE(e.name);
    ProofScript s = parse_script(e.text);
    Object t = check_script(s, corpus().registry());
    ProofString p = from_script(s, corpus().registry());
    CHECK(reduce_proof_string(p) == t);
    ProofScript back = to_script(p);
    CHECK(only_primitive(back));
    CHECK(check_script(back, LemmaRegistry{}) == t);
  }
}

TEST_CASE("inline_derived keeps the theorem and uses primitive rules only") {
  for (const auto& e : corpus().entries()) {
    if (e.kind == EntryKind::fixture) continue;
    CAPTURE(e.name);
    ProofScript s = parse_script(e.kind == EntryKind::script ? e.text : e.formal_text);
    Object t = check_script(s, corpus().registry());
    ProofScript prim = inline_derived(s, corpus().registry());
    CHECK(only_primitive(prim));
    CHECK(check_script(prim, LemmaRegistry{}) == t);
  }
}

TEST_CASE("transitivity is generated without citing lemmas") {
  ProofScript g = generate_transitivity();
  CHECK(only_primitive(g));
  CHECK(check_script(g, LemmaRegistry{}) == parse("(a :> b) :> ((b :> c) :> (a :> c))"));
  CHECK(corpus_file("scripts/transitivity.proof") ==
        "-- (a :> b) :> ((b :> c) :> (a :> c)), generated\n" + render_script(g));
}

TEST_CASE("scripts render and parse back") {
  for (const auto& e : corpus().entries()) {
    if (e.kind == EntryKind::fixture) continue;
    ProofScript s = parse_script(e.text);
    ProofScript back = parse_script(render_script(s));
    REQUIRE(back.steps.size() == s.steps.size());
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      CHECK(back.steps[i].formula == s.steps[i].formula);
      CHECK(render_justification(back.steps[i].just) == render_justification(s.steps[i].just));
    }
  }
}

TEST_CASE("holes are filled in fill mode only") {
  const char* text = "1. ? ; A8\n2. ? ; sub 1 a := O\n";
  CHECK_THROWS_AS(parse_script(text), ScriptError);
  ProofScript s = parse_script(text, Mode::extended, true);
  CHECK(check_script(s) == parse("O :> O"));
  REQUIRE(s.steps[0].formula);
  CHECK(*s.steps[0].formula == parse("a :> O"));
}

TEST_CASE("assumption discipline") {
  SUBCASE("immediate discharge") {
    auto t = check_assumption_discipline(parse_script("1. a :> b ; assume\n2. (a :> b) :> (a :> b) ; discharge 1"));
    CHECK(t.theorem == parse("(a :> b) :> (a :> b)"));
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].open == std::vector<unsigned>{1});
    CHECK(t.steps[1].open.empty());
    REQUIRE(t.steps[0].named.size() == 2);
    CHECK(t.steps[0].named[0] == var("a"));
  }
  SUBCASE("out of order discharge") {
    CHECK(rejected_at(parse_script("1. a :> b ; assume\n2. c :> d ; assume\n"
                                   "3. (a :> b) :> (c :> d) ; discharge 1\n")) == 3);
  }
  SUBCASE("discharge formula mismatch") {
    CHECK(rejected_at(parse_script("1. a :> b ; assume\n2. (a :> b) :> (b :> a) ; discharge 1")) == 2);
  }
  SUBCASE("class rule on a named variable") {
    ProofScript s = parse_script(
        "1. c :> (a :> b) ; assume\n"
        "2. c :> ({a | b} :> {a | a}) ; class 1 a\n"
        "3. (c :> (a :> b)) :> (c :> ({a | b} :> {a | a})) ; discharge 1\n");
    CHECK(rejected_at(s) == 2);
  }
  SUBCASE("class rule on an unnamed variable passes") {
    ProofScript s = parse_script(corpus_file("scripts/class-monotone.proof"));
    CHECK(rejected_at(s) == 0);
  }
  SUBCASE("substitution on a named variable is flagged") {
    auto t = check_assumption_discipline(parse_script(
        "1. a :> b ; assume\n"
        "2. O :> b ; sub 1 a := O\n"
        "3. (O :> b) :> (O :> b) ; discharge 1\n"));
    bool flagged = false;
    for (const auto& st : t.steps) flagged = flagged || !st.notes.empty();
    CHECK(flagged);
  }
  SUBCASE("scripts may not end under an assumption") {
    CHECK_THROWS(check_assumption_discipline(parse_script("1. a :> b ; assume")));
  }
  SUBCASE("case split keeps the member named until discharge") {
    const CorpusEntry& e = corpus().get_entry("class-or-law");
    ProofScript s = parse_script(e.text);
    auto t = check_assumption_discipline(s, corpus().registry());
    bool saw_named = false;
    for (const auto& st : t.steps) {
      if (st.open.empty()) CHECK(st.named.empty());
      else saw_named = saw_named || !st.named.empty();
    }
    CHECK(saw_named);
  }
}

TEST_CASE("elaboration") {
  auto roundtrip = [](const ProofScript& s, const LemmaRegistry& reg) {
    Object t = check_assumption_discipline(s, reg).theorem;
    ProofScript f = elaborate(s, reg);
    CHECK_FALSE(f.has_assumptions());
    CHECK(check_script(f, reg) == t);
    CHECK(f.theorem() == t);
  };
  SUBCASE("immediate discharge") {
    roundtrip(parse_script("1. a :> b ; assume\n2. (a :> b) :> (a :> b) ; discharge 1"),
              standard_lemmas());
  }
  SUBCASE("cite a theorem, combine, discharge") {
    roundtrip(parse_script("1. c :> d ; assume\n"
                           "2. a :> a ; A7\n"
                           "3. (a :> a) & (c :> d) ; comb 2 1\n"
                           "4. (c :> d) :> ((a :> a) & (c :> d)) ; discharge 1\n"),
              standard_lemmas());
  }
  SUBCASE("sequential inner assumptions under an outer one") {
    roundtrip(parse_script("1. a :> b ; assume\n"
                           "2. c :> d ; assume\n"
                           "3. ? ; A7\n"
                           "4. ? ; discharge 2\n"
                           "5. e :> f ; assume\n"
                           "6. ? ; comb 1 5\n"
                           "7. ? ; discharge 5\n"
                           "8. ? ; comb 4 7\n"
                           "9. ? ; discharge 1\n",
                           Mode::extended, true),
              standard_lemmas());
  }
  SUBCASE("class rule under an assumption") {
    roundtrip(parse_script(corpus_file("scripts/class-monotone.proof")), corpus().registry());
  }
  SUBCASE("conjunctive assumption") {
    roundtrip(parse_script("1. a = b ; assume\n"
                           "2. (a = b) :> (a = b) ; discharge 1\n"),
              standard_lemmas());
  }
  SUBCASE("non-formula assumption is rejected") {
    CHECK_THROWS(elaborate(parse_script("1. a ; assume\n2. a :> a ; discharge 1")));
  }
  SUBCASE("every corpus assumption script") {
    for (const auto& e : corpus().entries()) {
      if (e.kind != EntryKind::assumption_script) continue;
      CAPTURE(e.name);
      LemmaRegistry reg = standard_lemmas();
      for (const auto& o : corpus().entries()) {
        if (o.name == e.name) break;
        if (const Lemma* l = corpus().registry().find(o.name)) reg.add(*l);
      }
      roundtrip(parse_script(e.text), reg);
    }
  }
}

TEST_CASE("checked theorems are well formed formulas") {
  for (const auto& [name, t] : corpus_theorems(corpus())) {
    CAPTURE(name);
    CHECK(validate_formation(t).empty());
    CHECK(is_conjunctive_formula(t));
  }
}

TEST_CASE("builder derived rules check") {
  ProofBuilder b(standard_lemmas(), Mode::extended, true);
  unsigned a7 = b.axiom(AxiomTag::A7);
  unsigned a8 = b.axiom(AxiomTag::A8);
  unsigned c = b.comb(a7, a8);
  CHECK(b.formula(c) == parse("(a :> a) & (a :> O)"));
  unsigned t = b.trans(b.axiom(AxiomTag::A4a), a8);
  CHECK(b.formula(t) == parse("a & b :> O"));
  unsigned l = b.lift(a7, parse("c :> d"));
  CHECK(b.formula(l) == parse("(c :> d) :> (a :> a)"));
  ProofScript s = b.take();
  CHECK(only_primitive(s));
  CHECK(check_script(s, LemmaRegistry{}) == parse("(c :> d) :> (a :> a)"));
}
