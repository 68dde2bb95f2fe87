#include "fedlogic/sugar.hpp"

#include "fedlogic/substitution.hpp"

namespace fedlogic::sugar {

namespace {
constexpr unsigned kWitnessStart = 22;  // w
}

Object var(unsigned i) { return Variable::canonical(i).object(); }

Object not_(const Object& a) { return Object::cont(a, Object::absurd()); }
Object triv(const Object& a) { return Object::cont(Object::empty(), a); }

Object eq(const Object& a, const Object& b) {
  return Object::fed(0, Object::cont(a, b), Object::cont(b, a));
}

Object neq(const Object& a, const Object& b) { return not_(eq(a, b)); }

Object or_(const Object& a, const Object& b, Mode mode) {
  if (mode == Mode::classical) return not_(Object::fed(0, not_(a), not_(b)));
  return triv(Object::inter(triv(a), triv(b)));
}

Object inter(const Object& a, const Object& b, Mode mode) {
  if (mode == Mode::extended) return Object::inter(a, b);
  Variable x = fresh_variable({a, b}, 23);
  return bind_index(Object::fed(0, in(x, a, 0, mode), in(x, b, 0, mode)), x);
}

Object sub(const Object& a, const Object& b, unsigned level) {
  if (level == 0) return Object::cont(b, a);
  return eq(b, Object::fed(level, a, b));
}

Variable default_witness(const Object& subject) { return fresh_variable({subject}, kWitnessStart); }

Object sing_free(const Object& a, const Variable& w, Mode mode) {
  if (appears(w, a)) throw Error("Sing witness appears in its subject");
  return Object::fed(0, neq(triv(a), a),
                     Object::cont(Object::cont(a, w), or_(triv(w), eq(a, w), mode)));
}

Object sing_n_free(unsigned level, const Object& a, const Variable& w, Mode mode) {
  if (appears(w, a)) throw Error("Sing witness appears in its subject");
  return Object::cont(sub(w, a, level), or_(triv(w), eq(w, a), mode));
}

Object sing(const Object& a, unsigned level, Mode mode) {
  Variable w = default_witness(a);
  if (level > 0) return sing_n_free(level, a, w, mode);
  Object body = Object::cont(Object::cont(a, w), or_(triv(w), eq(a, w), mode));
  return Object::fed(0, neq(triv(a), a), all(w, body));
}

Object in(const Object& a, const Object& b, unsigned level, Mode mode) {
  return Object::fed(0, sing(a, level, mode), sub(a, b, level));
}

Object universe(unsigned level) { return Object::cls(level, Variable::canonical(0), Object::empty()); }

Object all(const Variable& x, const Object& phi) { return eq(universe(0), bind_index(phi, x)); }

Object ex(const Variable& x, const Object& phi) {
  return not_(eq(Object::empty(), bind_index(phi, x)));
}

}  // namespace fedlogic::sugar
