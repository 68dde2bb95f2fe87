#include "fedlogic/object.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace fedlogic {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const std::shared_ptr<const Node>& empty_node() {
  static const std::shared_ptr<const Node> n = [] {
    auto p = std::make_shared<Node>();
    p->kind = Kind::empty;
    p->hash = mix(0, static_cast<std::size_t>(Kind::empty));
    return p;
  }();
  return n;
}

int stored_children(Kind k) {
  switch (k) {
    case Kind::empty:
    case Kind::numeral: return 0;
    case Kind::fed:
    case Kind::cont:
    case Kind::inter:
    case Kind::cls: return 2;
    default: return 1;
  }
}

bool deep_equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size || a.level != b.level ||
      a.num != b.num)
    return false;
  for (int i = 0; i < stored_children(a.kind); ++i)
    if (!(a.c[i] == b.c[i])) return false;
  return true;
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::empty: return "Empty";
    case Kind::numeral: return "Numeral";
    case Kind::cstop: return "CStop";
    case Kind::vstop: return "VStop";
    case Kind::istop: return "IStop";
    case Kind::fed: return "Fed";
    case Kind::cont: return "Cont";
    case Kind::inter: return "Inter";
    case Kind::cls: return "Class";
    case Kind::brace: return "Brace";
    case Kind::antibrace: return "Antibrace";
  }
  return "?";
}

Object::Object() : node_(empty_node()) {}

Object Object::make(Kind k, unsigned level, std::uint64_t num, Object c0, Object c1) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->level = level;
  n->num = num;
  int sc = stored_children(k);
  if (sc > 0) n->c[0] = std::move(c0);
  if (sc > 1) n->c[1] = std::move(c1);
  std::size_t h = mix(static_cast<std::size_t>(k) * 31 + 7, level);
  h = mix(h, static_cast<std::size_t>(num));
  std::size_t sz = 1;
  int mc = -1;
  {
    for (int i = 0; i < stored_children(k); ++i) {
      h = mix(h, n->c[i].hash());
      sz += n->c[i].size();
      mc = std::max(mc, n->c[i].max_canonical());
    }
  }
  if (k == Kind::vstop) {
    const Node& b = *n->c[0].node_;
    if (b.kind == Kind::empty) n->canon = 0;
    else if (b.canon >= 0) n->canon = b.canon + 1;
    mc = std::max(mc, n->canon);
  }
  n->hash = h;
  n->size = sz;
  n->max_canon = mc;
  return Object(std::move(n));
}

Object Object::empty() { return Object(); }
Object Object::absurd() { return cstop(Object()); }
Object Object::numeral(std::uint64_t m) {
  if (m == 0) return Object();
  return make(Kind::numeral, 0, m, Object(), Object());
}
Object Object::cstop(const Object& b) { return make(Kind::cstop, 0, 0, b, Object()); }
Object Object::vstop(const Object& b) { return make(Kind::vstop, 0, 0, b, Object()); }
Object Object::istop(const Object& b) { return make(Kind::istop, 0, 0, b, Object()); }
Object Object::fed(unsigned level, const Object& l, const Object& r) {
  return make(Kind::fed, level, 0, l, r);
}
Object Object::cont(const Object& l, const Object& r) { return make(Kind::cont, 0, 0, l, r); }
Object Object::inter(const Object& l, const Object& r) { return make(Kind::inter, 0, 0, l, r); }
Object Object::cls(unsigned level, const Variable& index, const Object& body) {
  return make(Kind::cls, level, 0, body, index.object());
}
Object Object::brace(const Object& b) { return make(Kind::brace, 0, 0, b, Object()); }
Object Object::antibrace(const Object& b) { return make(Kind::antibrace, 0, 0, b, Object()); }

Kind Object::kind() const { return node_->kind; }

std::size_t Object::arity() const {
  switch (node_->kind) {
    case Kind::empty:
    case Kind::numeral: return 0;
    case Kind::fed:
    case Kind::cont:
    case Kind::inter: return 2;
    default: return 1;
  }
}

const Object& Object::child(std::size_t i) const {
  if (i >= arity()) throw std::out_of_range("child index out of range");
  return node_->c[i];
}

Variable Object::index() const {
  if (node_->kind != Kind::cls) throw Error("index() on non-class");
  return Variable(node_->c[1]);
}

unsigned Object::level() const { return node_->level; }
std::uint64_t Object::numeral_value() const { return node_->num; }

bool Object::is_absurd() const {
  return node_->kind == Kind::cstop && node_->c[0].kind() == Kind::empty;
}

std::optional<unsigned> Object::canonical_index() const {
  if (node_->canon < 0) return std::nullopt;
  return static_cast<unsigned>(node_->canon);
}

std::size_t Object::hash() const { return node_->hash; }
std::size_t Object::size() const { return node_->size; }
int Object::max_canonical() const { return node_->max_canon; }

bool operator==(const Object& a, const Object& b) {
  return a.node_ == b.node_ || deep_equal(*a.node_, *b.node_);
}

bool operator<(const Object& a, const Object& b) {
  if (a.same_node(b)) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.level() != b.level()) return a.level() < b.level();
  if (a.numeral_value() != b.numeral_value()) return a.numeral_value() < b.numeral_value();
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  for (int i = 0; i < stored_children(x.kind); ++i) {
    if (x.c[i] < y.c[i]) return true;
    if (y.c[i] < x.c[i]) return false;
  }
  return false;
}

Variable::Variable(Object o) : obj_(std::move(o)) {
  if (!obj_.is_variable()) throw Error("not a variable (VStop node)");
}

Variable Variable::canonical(unsigned i) {
  static std::mutex mu;
  static std::vector<Object> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) table.push_back(Object::vstop(Object()));
  while (table.size() <= i) table.push_back(Object::vstop(table.back()));
  return Variable(table[i]);
}

bool operator<(const Variable& a, const Variable& b) {
  auto ia = a.canonical_index(), ib = b.canonical_index();
  if (ia && ib) return *ia < *ib;
  if (ia || ib) return static_cast<bool>(ia);
  return a.object() < b.object();
}

std::string position_string(const Position& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

const Object& at(const Object& root, const Position& p) {
  const Object* cur = &root;
  for (auto i : p) cur = &cur->child(i);
  return *cur;
}

namespace {

Object rebuild(const Object& o, std::size_t i, const Object& c) {
  switch (o.kind()) {
    case Kind::cstop: return Object::cstop(c);
    case Kind::vstop: return Object::vstop(c);
    case Kind::istop: return Object::istop(c);
    case Kind::brace: return Object::brace(c);
    case Kind::antibrace: return Object::antibrace(c);
    case Kind::cls: return Object::cls(o.level(), o.index(), c);
    case Kind::fed:
      return i == 0 ? Object::fed(o.level(), c, o.right()) : Object::fed(o.level(), o.left(), c);
    case Kind::cont: return i == 0 ? Object::cont(c, o.right()) : Object::cont(o.left(), c);
    case Kind::inter: return i == 0 ? Object::inter(c, o.right()) : Object::inter(o.left(), c);
    default: throw std::out_of_range("leaf has no children");
  }
}

Object replace_rec(const Object& o, const Position& p, std::size_t d, const Object& repl) {
  if (d == p.size()) return repl;
  return rebuild(o, p[d], replace_rec(o.child(p[d]), p, d + 1, repl));
}

void collect_vars(const Object& o, std::set<Variable>& out) {
  if (o.is_variable()) {
    out.insert(Variable(o));
    return;
  }
  if (o.is(Kind::cls)) out.insert(o.index());
  for (std::size_t i = 0; i < o.arity(); ++i) collect_vars(o.child(i), out);
}

}  // namespace

Object replace_at(const Object& root, const Position& p, const Object& repl) {
  (void)at(root, p);
  return replace_rec(root, p, 0, repl);
}

bool is_formula(const Object& o) { return o.is(Kind::cont); }

bool is_conjunctive_formula(const Object& o) {
  if (o.is(Kind::cont)) return true;
  return o.is(Kind::fed) && o.level() == 0 && is_conjunctive_formula(o.left()) &&
         is_conjunctive_formula(o.right());
}

std::vector<Variable> occurring_variables(const Object& o) {
  std::set<Variable> s;
  collect_vars(o, s);
  return {s.begin(), s.end()};
}

bool occurs(const Variable& x, const Object& o) {
  if (o.is_variable()) return o == x.object();
  if (o.is(Kind::cls) && o.index() == x) return true;
  for (std::size_t i = 0; i < o.arity(); ++i)
    if (occurs(x, o.child(i))) return true;
  return false;
}

Variable fresh_variable(const std::vector<Object>& objs, unsigned start) {
  for (unsigned i = start;; ++i) {
    Variable v = Variable::canonical(i);
    bool used = false;
    for (const auto& o : objs)
      if (static_cast<int>(i) <= o.max_canonical() && occurs(v, o)) {
        used = true;
        break;
      }
    if (!used) return v;
  }
}

}  // namespace fedlogic
