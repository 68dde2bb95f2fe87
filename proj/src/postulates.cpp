#include "fedlogic/postulates.hpp"

#include <array>

#include "fedlogic/substitution.hpp"
#include "fedlogic/sugar.hpp"

namespace fedlogic {

namespace {

using namespace sugar;

constexpr std::array<const char*, 33> kNames = {
    "A1", "A2", "A3", "A4a", "A4b", "A5a", "A5b", "A6", "A7", "A8", "A9", "A10", "A11", "A12",
    "A13", "A14a", "A14b",
    "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10", "B11", "B12a", "B12b",
    "C1", "C2", "C3",
};

Object C(const Object& l, const Object& r) { return Object::cont(l, r); }
Object F(const Object& l, const Object& r) { return Object::fed(0, l, r); }

}  // namespace

bool is_schema(AxiomTag t) { return t == AxiomTag::A13 || t == AxiomTag::B11; }

bool is_b_group(AxiomTag t) { return t >= AxiomTag::B1 && t <= AxiomTag::B12b; }

bool is_extended_only(AxiomTag t) {
  return t == AxiomTag::A5a || t == AxiomTag::A5b || t == AxiomTag::A6;
}

const char* tag_name(AxiomTag t) { return kNames[static_cast<std::size_t>(t)]; }

std::optional<AxiomTag> tag_from_name(const std::string& s) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (s == kNames[i]) return static_cast<AxiomTag>(i);
  return std::nullopt;
}

Object comprehension_instance(unsigned level, const Variable& x, const Object& alpha, Mode mode) {
  Variable s = fresh_variable({alpha, x.object()});
  Object cls = bind_index(alpha, x, level);
  return eq(in(s, cls, level, mode), F(sing(s, level, mode), substitute(alpha, x, s)));
}

Object extensionality_instance(unsigned level, ExtVariant v, const Variable& x, const Variable& a,
                               Mode mode) {
  if (x == a) throw Error("extensionality: index and set variable must differ");
  Object cls = bind_index(in(x, a, level, mode), x, level);
  if (v == ExtVariant::a) return sub(cls, a, level);
  return C(sub(a, universe(level), level), sub(a, cls, level));
}

Object sing_expansion(unsigned level, const Object& subject, const Variable& witness, Mode mode) {
  if (level == 0) return sing_free(subject, witness, mode);
  return sing_n_free(level, subject, witness, mode);
}

Object axiom_object(const AxiomId& id, Mode mode) {
  if (mode == Mode::classical && is_extended_only(id.tag))
    throw Error(std::string(tag_name(id.tag)) + " is not available in classical mode");
  if (is_b_group(id.tag) && id.level == 0)
    throw Error(std::string(tag_name(id.tag)) + " needs a level n >= 1");
  const Object a = var(0), b = var(1), c = var(2), d = var(3);
  const unsigned n = id.level;
  const Object bot = Object::absurd(), O = Object::empty();
  auto fn = [n](const Object& l, const Object& r) { return Object::fed(n, l, r); };
  Variable xv = id.x.value_or(Variable::canonical(23));
  Variable av = id.a.value_or(Variable::canonical(0));
  switch (id.tag) {
    case AxiomTag::A1: return C(F(C(c, a), C(c, C(a, b))), C(c, b));
    case AxiomTag::A2: return C(F(C(d, C(a, b)), C(d, C(b, c))), C(d, C(a, c)));
    case AxiomTag::A3: return C(F(C(c, a), C(c, b)), C(c, F(a, b)));
    case AxiomTag::A4a: return C(F(a, b), a);
    case AxiomTag::A4b: return C(F(a, b), b);
    case AxiomTag::A5a: return C(a, Object::inter(a, b));
    case AxiomTag::A5b: return C(b, Object::inter(a, b));
    case AxiomTag::A6: return C(F(C(a, c), C(b, c)), C(Object::inter(a, b), c));
    case AxiomTag::A7: return C(a, a);
    case AxiomTag::A8: return C(a, O);
    case AxiomTag::A9: return C(bot, a);
    case AxiomTag::A10: return C(triv(a), C(triv(b), F(a, b)));
    case AxiomTag::A11: return C(C(a, b), triv(C(a, b)));
    case AxiomTag::A12: return C(not_(not_(C(a, b))), C(a, b));
    case AxiomTag::A13:
    case AxiomTag::B11:
      if (!id.alpha) throw Error(std::string(tag_name(id.tag)) + " needs a condition");
      return comprehension_instance(id.tag == AxiomTag::A13 ? 0 : n, xv, *id.alpha, mode);
    case AxiomTag::A14a: return extensionality_instance(0, ExtVariant::a, xv, av, mode);
    case AxiomTag::A14b: return extensionality_instance(0, ExtVariant::b, xv, av, mode);
    case AxiomTag::B12a: return extensionality_instance(n, ExtVariant::a, xv, av, mode);
    case AxiomTag::B12b: return extensionality_instance(n, ExtVariant::b, xv, av, mode);
    case AxiomTag::B1: return eq(fn(fn(a, b), c), fn(a, fn(b, c)));
    case AxiomTag::B2: return eq(fn(a, O), a);
    case AxiomTag::B3: return eq(fn(a, bot), bot);
    case AxiomTag::B4: return eq(fn(a, b), fn(b, a));
    case AxiomTag::B5: return eq(fn(a, a), a);
    case AxiomTag::B6: return C(eq(a, b), eq(fn(a, c), fn(b, c)));
    case AxiomTag::B7: return C(sing(a, n - 1, mode), sing(a, n, mode));
    case AxiomTag::B8: return C(sing(a, n, mode), sub(a, universe(n - 1), n - 1));
    case AxiomTag::B9: {
      unsigned m = id.m.value_or(n - 1);
      if (m >= n) throw Error("B9 needs m < n");
      Object fm = Object::fed(m, a, b);
      return C(not_(sing(a, n, mode)),
               C(F(neq(b, O), neq(b, a)),
                 F(F(eq(fm, bot), not_(sub(a, b, m))), not_(sub(b, a, m)))));
    }
    case AxiomTag::B10:
      return C(in(a, fn(b, c), n, mode), or_(in(a, b, n, mode), in(a, c, n, mode), mode));
    case AxiomTag::C1: return sing(Object::brace(a), 0, mode);
    case AxiomTag::C2: return eq(Object::antibrace(Object::brace(a)), a);
    case AxiomTag::C3:
      return C(eq(a, b), F(eq(Object::brace(a), Object::brace(b)),
                           eq(Object::antibrace(a), Object::antibrace(b))));
  }
  throw Error("unknown axiom");
}

}  // namespace fedlogic
