#include <doctest.h>

#include "fedlogic/lattice.hpp"
#include "fedlogic/postulates.hpp"
#include "fedlogic/substitution.hpp"
#include "fedlogic/sugar.hpp"
#include "fedlogic/syntax.hpp"

using namespace fedlogic;

namespace {

Variable var(const char* name) { return Variable::canonical(*variable_index(name)); }

std::vector<AxiomTag> fixed_a() {
  using T = AxiomTag;
  return {T::A1, T::A2, T::A3, T::A4a, T::A4b, T::A5a, T::A5b, T::A6,
          T::A7, T::A8, T::A9, T::A10, T::A11, T::A12};
}

std::vector<AxiomTag> all_tags() {
  std::vector<AxiomTag> out;
  for (int t = 0; t <= static_cast<int>(AxiomTag::C3); ++t) out.push_back(static_cast<AxiomTag>(t));
  return out;
}

}  // namespace

TEST_CASE("axiom objects: examples") {
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::A8)) == parse("a :> O"));
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::A9)) == parse("_|_ :> a"));
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::A1)) == parse("(c :> a) & (c :> (a :> b)) :> (c :> b)"));
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::A7)) == parse("a :> a"));
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::A11)) == parse("(a :> b) :> triv(a :> b)"));
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::B5, 2)) ==
        sugar::eq(Object::fed(2, sugar::var(0), sugar::var(0)), sugar::var(0)));
  CHECK(axiom_object(AxiomId::fixed(AxiomTag::B5, 2)) == parse("a &2 a = a"));
}

TEST_CASE("axiom objects: errors") {
  CHECK_THROWS_AS(axiom_object(AxiomId::fixed(AxiomTag::A13)), Error);
  CHECK_THROWS_AS(axiom_object(AxiomId::fixed(AxiomTag::B1, 0)), Error);
  CHECK_THROWS_AS(axiom_object(AxiomId::fixed(AxiomTag::A5a), Mode::classical), Error);
  CHECK_THROWS_AS(axiom_object(AxiomId::fixed(AxiomTag::A6), Mode::classical), Error);
  CHECK_NOTHROW(axiom_object(AxiomId::fixed(AxiomTag::A7), Mode::classical));
}

TEST_CASE("tag names round-trip") {
  for (auto t : all_tags()) {
    auto back = tag_from_name(tag_name(t));
    REQUIRE(back);
    CHECK(*back == t);
  }
  CHECK_FALSE(tag_from_name("A15"));
}

TEST_CASE("every emitted axiom is well formed") {
  for (auto t : all_tags()) {
    if (is_schema(t)) continue;
    for (unsigned n : {1u, 2u, 3u}) {
      AxiomId id = AxiomId::fixed(t, is_b_group(t) ? n : 0);
      CAPTURE(tag_name(t));
      CAPTURE(n);
      Object o = axiom_object(id);
      CHECK(validate_formation(o).empty());
    }
  }
  for (unsigned n : {0u, 1u, 2u}) {
    CHECK(validate_formation(comprehension_instance(n, var("x"), parse("x :> c"))).empty());
    CHECK(validate_formation(extensionality_instance(n, ExtVariant::a, var("x"), var("a"))).empty());
    CHECK(validate_formation(extensionality_instance(n, ExtVariant::b, var("x"), var("a"))).empty());
  }
}

TEST_CASE("type-1 B axioms equal the level-1 table forms") {
  // B9 is stated differently in the two places and is left out
  struct Row {
    AxiomTag tag;
    const char* text;
  };
  Row rows[] = {
      {AxiomTag::B1, "(a &1 b) &1 c = a &1 (b &1 c)"},
      {AxiomTag::B2, "a &1 O = a"},
      {AxiomTag::B3, "a &1 _|_ = _|_"},
      {AxiomTag::B4, "a &1 b = b &1 a"},
      {AxiomTag::B5, "a &1 a = a"},
      {AxiomTag::B6, "(a = b) :> (a &1 c = b &1 c)"},
      {AxiomTag::B7, "Sing(a) :> Sing1(a)"},
      {AxiomTag::B8, "Sing1(a) :> (a <: V)"},
      {AxiomTag::B10, "a in1 (b &1 c) :> (a in1 b) \\/ (a in1 c)"},
      {AxiomTag::B12a, "{x |1 x in1 a} <:1 a"},
      {AxiomTag::B12b, "(a <:1 V1) :> (a <:1 {x |1 x in1 a})"},
  };
  for (const auto& r : rows) {
    CAPTURE(tag_name(r.tag));
    CHECK(axiom_object(AxiomId::fixed(r.tag, 1)) == parse(r.text));
  }
}

TEST_CASE("comprehension instances") {
  Variable x = var("x"), a = var("a");
  Object ax = a.object();
  SUBCASE("empty condition") {
    Object o = comprehension_instance(0, x, Object::empty());
    CHECK(o == sugar::eq(sugar::in(ax, bind_index(Object::empty(), x)),
                         Object::fed(0, sugar::sing(ax), Object::empty())));
    CHECK(o == parse("(a in {x | O}) = (Sing(a) & O)"));
  }
  SUBCASE("negated condition") {
    Object phi = parse("x :> _|_");
    Object o = comprehension_instance(0, x, phi);
    Object rhs = Object::fed(0, sugar::sing(ax), parse("not a"));
    CHECK(o.right().left() == rhs);
    CHECK(o.left().left() == sugar::in(ax, bind_index(phi, x)));
  }
  SUBCASE("fresh subject") {
    Object o = comprehension_instance(0, x, parse("x :> a"));
    CHECK(o == parse("(b in {x | x :> a}) = (Sing(b) & (b :> a))"));
  }
  SUBCASE("type 1") {
    Object o = comprehension_instance(1, x, Object::empty());
    CHECK(o == parse("(a in1 {x |1 O}) = (Sing1(a) & O)"));
  }
}

TEST_CASE("extensionality instances") {
  Variable x = var("x"), a = var("a");
  CHECK(extensionality_instance(0, ExtVariant::a, x, a) ==
        Object::cont(a.object(), bind_index(sugar::in(x.object(), a.object()), x)));
  CHECK(extensionality_instance(0, ExtVariant::a, x, a) == parse("a :> {x | x in a}"));
  CHECK(extensionality_instance(0, ExtVariant::b, x, a) ==
        parse("(V :> a) :> ({x | x in a} :> a)"));
  CHECK(extensionality_instance(1, ExtVariant::a, x, a) == parse("{x |1 x in1 a} <:1 a"));
  CHECK(extensionality_instance(0, ExtVariant::a, var("y"), var("c")) == parse("c :> {y | y in c}"));
}

TEST_CASE("literal Sing with a free witness") {
  Object b = var("b").object();
  Object at_empty = sing_expansion(0, Object::empty(), var("b"));
  CHECK(at_empty.left() == sugar::neq(sugar::triv(Object::empty()), Object::empty()));
  CHECK(sing_expansion(0, var("a").object(), var("b")) ==
        parse("not(triv(a) = a) & ((a :> b) :> (triv(b) \\/ (a = b)))"));
  CHECK(sing_expansion(1, var("a").object(), var("b")) ==
        parse("(b <:1 a) :> (triv(b) \\/ (b = a))"));
  CHECK_THROWS_AS(sing_expansion(0, b, var("b")), Error);
  // no O is single
  CHECK(evaluate(at_empty.left(), 0) == DomainValue::bot());
}

TEST_CASE("fixed A axioms are O-valid in M_0..M_3") {
  for (auto t : fixed_a()) {
    Object o = axiom_object(AxiomId::fixed(t));
    for (unsigned k = 0; k <= 3; ++k) {
      CAPTURE(tag_name(t));
      CAPTURE(k);
      auto c = classify(o, k);
      REQUIRE(c.valid);
      CHECK(c.valid->is_empty());
    }
  }
  CHECK(classify(axiom_object(AxiomId::fixed(AxiomTag::A1)), 0).valid == DomainValue::mult(0));
}

TEST_CASE("comprehension and extensionality are O-valid over a condition family") {
  std::vector<Object> conds = {Object::empty(), Object::absurd(), parse("x :> O"),
                               parse("O :> x"), parse("x :> _|_"), parse("x :> c"),
                               parse("c :> x"), parse("#1 :> x"), parse("x :> #2")};
  for (const auto& phi : conds)
    for (unsigned k = 0; k <= 2; ++k) {
      if (!statable(phi, k)) continue;
      Object o = comprehension_instance(0, var("x"), phi);
      CAPTURE(render(o, Style::sugar));
      CAPTURE(k);
      auto c = classify(o, k);
      REQUIRE(c.valid);
      CHECK(c.valid->is_empty());
    }
  for (auto v : {ExtVariant::a, ExtVariant::b})
    for (unsigned k = 0; k <= 3; ++k) {
      auto c = classify(extensionality_instance(0, v, var("x"), var("a")), k);
      REQUIRE(c.valid);
      CHECK(c.valid->is_empty());
    }
}

TEST_CASE("the free-witness reading of Sing breaks comprehension") {
  // a in {x | x :> #1} against Sing(a) & (a :> #1), witness left free
  Object phi = parse("x :> #1");
  Object a = var("a").object();
  Object lhs = sugar::in(a, bind_index(phi, var("x")));
  Object rhs = Object::fed(0, sing_expansion(0, a, var("b")), parse("a :> #1"));
  auto cm = countermodel(sugar::eq(lhs, rhs), 3);
  REQUIRE(cm);
  CHECK(cm->value == DomainValue::bot());
}
