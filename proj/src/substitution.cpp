#include "fedlogic/substitution.hpp"

#include <set>

namespace fedlogic {

namespace {

Object with_children(const Object& o, const Object& a, const Object& b) {
  switch (o.kind()) {
    case Kind::fed: return Object::fed(o.level(), a, b);
    case Kind::cont: return Object::cont(a, b);
    case Kind::inter: return Object::inter(a, b);
    case Kind::cls: return Object::cls(o.level(), o.index(), a);
    case Kind::brace: return Object::brace(a);
    case Kind::antibrace: return Object::antibrace(a);
    case Kind::cstop: return Object::cstop(a);
    case Kind::istop: return Object::istop(a);
    case Kind::vstop: return Object::vstop(a);
    default: return o;
  }
}

// f maps an unguarded node to its replacement or returns nullptr-like false.
template <class F>
Object map_unguarded(const Object& o, F& f) {
  if (auto r = f(o)) return *r;
  switch (o.kind()) {
    case Kind::empty:
    case Kind::numeral:
    case Kind::cstop:
    case Kind::vstop:
    case Kind::istop: return o;
    default: break;
  }
  if (o.arity() == 2) {
    Object l = map_unguarded(o.left(), f);
    Object r = map_unguarded(o.right(), f);
    if (l.same_node(o.left()) && r.same_node(o.right())) return o;
    return with_children(o, l, r);
  }
  Object b = map_unguarded(o.child(0), f);
  if (b.same_node(o.child(0))) return o;
  return with_children(o, b, Object());
}

void collect_appearing(const Object& o, std::set<Variable>& out) {
  switch (o.kind()) {
    case Kind::vstop: out.insert(Variable(o)); return;
    case Kind::empty:
    case Kind::numeral:
    case Kind::cstop:
    case Kind::istop: return;
    default: break;
  }
  for (std::size_t i = 0; i < o.arity(); ++i) collect_appearing(o.child(i), out);
}

Object inst_rec(const Object& o, const Variable& x, const Object& v) {
  if (o.is(Kind::istop) && o.child(0) == x.object()) return v;
  if (o.arity() == 0) return o;
  if (o.is(Kind::cls) && o.index() == x) return o;
  if (o.arity() == 2) {
    Object l = inst_rec(o.left(), x, v);
    Object r = inst_rec(o.right(), x, v);
    if (l.same_node(o.left()) && r.same_node(o.right())) return o;
    return with_children(o, l, r);
  }
  Object b = inst_rec(o.child(0), x, v);
  if (b.same_node(o.child(0))) return o;
  return with_children(o, b, Object());
}

}  // namespace

Object substitute(const Object& alpha, const SubstitutionSpec& spec) {
  return substitute(alpha, spec.target, spec.substituend);
}

Object substitute(const Object& alpha, const Variable& x, const Object& beta) {
  if (beta == x.object()) return alpha;
  auto f = [&](const Object& o) -> std::optional<Object> {
    if (o.is_variable() && o == x.object()) return beta;
    return std::nullopt;
  };
  return map_unguarded(alpha, f);
}

Object substitute_all(const Object& alpha, const std::vector<SubstitutionSpec>& specs) {
  auto f = [&](const Object& o) -> std::optional<Object> {
    if (!o.is_variable()) return std::nullopt;
    for (const auto& s : specs)
      if (o == s.target.object()) return s.substituend;
    return std::nullopt;
  };
  return map_unguarded(alpha, f);
}

InstanceKind instance_kind(const Object& alpha, const Position& pos) {
  const Object* cur = &alpha;
  bool guarded = false;
  for (auto i : pos) {
    if (cur->is(Kind::cstop) || cur->is(Kind::istop) || cur->is(Kind::vstop)) guarded = true;
    cur = &cur->child(i);
  }
  return guarded ? InstanceKind::occurs_guarded : InstanceKind::appears;
}

bool appears(const Variable& x, const Object& alpha) {
  switch (alpha.kind()) {
    case Kind::vstop: return alpha == x.object();
    case Kind::empty:
    case Kind::numeral:
    case Kind::cstop:
    case Kind::istop: return false;
    default: break;
  }
  for (std::size_t i = 0; i < alpha.arity(); ++i)
    if (appears(x, alpha.child(i))) return true;
  return false;
}

std::vector<Variable> appearing_variables(const Object& alpha) {
  std::set<Variable> s;
  collect_appearing(alpha, s);
  return {s.begin(), s.end()};
}

bool is_closed(const Object& alpha) { return appearing_variables(alpha).empty(); }

Object bind_index(const Object& condition, const Variable& x, unsigned level) {
  Object marker = Object::istop(x.object());
  return Object::cls(level, x, substitute(condition, x, marker));
}

Object instantiate_index(const Object& cls, const Object& value) {
  if (!cls.is(Kind::cls)) throw Error("instantiate_index: not a class");
  return inst_rec(cls.body(), cls.index(), value);
}

}  // namespace fedlogic
