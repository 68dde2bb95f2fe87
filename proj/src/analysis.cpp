#include <algorithm>
#include <set>

#include "fedlogic/substitution.hpp"
#include "fedlogic/syntax.hpp"

namespace fedlogic {

namespace {

struct Validator {
  Mode mode;
  std::vector<Violation> out;
  std::vector<Variable> binders;
  Position pos;

  void add(std::string m) { out.push_back({pos, std::move(m)}); }

  void walk(const Object& o) {
    switch (o.kind()) {
      case Kind::istop: {
        const Object& b = o.child(0);
        if (!b.is_variable()) {
          add("index stop on non-variable");
        } else if (std::find(binders.begin(), binders.end(), Variable(b)) == binders.end()) {
          add("index stop outside any class binding it");
        }
        return;
      }
      case Kind::antibrace:
        if (!o.child(0).is(Kind::brace) && !o.child(0).is_variable())
          add("antibrace of non-brace");
        break;
      case Kind::inter:
        if (mode == Mode::classical) add("intersection is not primitive in classical mode");
        break;
      case Kind::cls:
        if (appears(o.index(), o.body())) add("class index appears unbound in its body");
        binders.push_back(o.index());
        descend(o, 0);
        binders.pop_back();
        return;
      default: break;
    }
    for (std::size_t i = 0; i < o.arity(); ++i) descend(o, i);
  }

  void descend(const Object& o, std::size_t i) {
    pos.push_back(static_cast<std::uint8_t>(i));
    walk(o.child(i));
    pos.pop_back();
  }
};

unsigned weight_rec(const Object& o) {
  switch (o.kind()) {
    case Kind::empty:
    case Kind::numeral:
    case Kind::istop:
    case Kind::vstop: return 0;
    case Kind::cont: return std::max(weight_rec(o.left()), weight_rec(o.right())) + 1;
    case Kind::fed:
    case Kind::inter: return std::max(weight_rec(o.left()), weight_rec(o.right()));
    default: return weight_rec(o.child(0));
  }
}

struct Query {
  StructureReport r;
  std::set<Variable> free, guarded;
  std::vector<Variable> idx;
  Position pos;

  // in_var: below a variable node, where nothing counts as a variable
  void walk(const Object& o, unsigned degree, bool g, bool in_var = false) {
    r.subobjects.push_back({pos, o, degree, g});
    if (o.is_variable() && !in_var) (g ? guarded : free).insert(Variable(o));
    if (o.is(Kind::cls)) {
      if (std::find(idx.begin(), idx.end(), o.index()) == idx.end()) idx.push_back(o.index());
      ++degree;
    }
    bool stop = o.is(Kind::cstop) || o.is(Kind::istop) || o.is(Kind::vstop);
    for (std::size_t i = 0; i < o.arity(); ++i) {
      pos.push_back(static_cast<std::uint8_t>(i));
      walk(o.child(i), degree, g || stop, in_var || o.is_variable());
      pos.pop_back();
    }
  }
};

}  // namespace

std::vector<Violation> validate_formation(const Object& o, Mode mode) {
  Validator v{mode, {}, {}, {}};
  v.walk(o);
  return v.out;
}

unsigned weight(const Object& o) {
  if (!is_closed(o)) throw Error("weight: object is not closed");
  return weight_rec(o);
}

StructureReport structural_query(const Object& o) {
  Query q;
  q.walk(o, 0, false);
  q.r.free_variables.assign(q.free.begin(), q.free.end());
  q.r.guarded_variables.assign(q.guarded.begin(), q.guarded.end());
  q.r.indices = q.idx;
  q.r.closed = q.free.empty();
  return q.r;
}

}  // namespace fedlogic
