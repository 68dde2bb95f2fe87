#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fedlogic {

enum class Kind : std::uint8_t {
  empty,
  numeral,
  cstop,
  vstop,
  istop,
  fed,
  cont,
  inter,
  cls,
  brace,
  antibrace,
};

// Extended keeps the primitive intersection and A5/A6; classical is the
// revision used for model theory (no Inter, ∨ and ∩ become abbreviations).
enum class Mode : std::uint8_t { extended, classical };

const char* kind_name(Kind k);

class Variable;
struct Node;

// Immutable, structurally compared syntax tree handle.
class Object {
 public:
  Object();  // Empty

  static Object empty();
  static Object absurd();
  static Object numeral(std::uint64_t m);
  static Object cstop(const Object& body);
  static Object vstop(const Object& body);
  static Object istop(const Object& body);
  static Object fed(unsigned level, const Object& l, const Object& r);
  static Object cont(const Object& l, const Object& r);
  static Object inter(const Object& l, const Object& r);
  static Object cls(unsigned level, const Variable& index, const Object& body);
  static Object brace(const Object& body);
  static Object antibrace(const Object& body);

  Kind kind() const;
  // Positional children: stops/brace/antibrace 1, binary nodes 2, class 1
  // (its body; the index is not a position).
  std::size_t arity() const;
  const Object& child(std::size_t i) const;
  const Object& left() const { return child(0); }
  const Object& right() const { return child(1); }
  const Object& body() const { return child(0); }
  Variable index() const;
  unsigned level() const;
  std::uint64_t numeral_value() const;

  bool is(Kind k) const { return kind() == k; }
  bool is_variable() const { return kind() == Kind::vstop; }
  bool is_absurd() const;
  // Index of a canonical variable v_i = VStop^(i+1)(Empty).
  std::optional<unsigned> canonical_index() const;

  std::size_t hash() const;
  std::size_t size() const;
  // Largest canonical variable index occurring anywhere (-1 if none).
  int max_canonical() const;

  bool same_node(const Object& o) const { return node_ == o.node_; }

  friend bool operator==(const Object& a, const Object& b);
  friend bool operator!=(const Object& a, const Object& b) { return !(a == b); }
  // Total structural order (used for deterministic sorting only).
  friend bool operator<(const Object& a, const Object& b);

 private:
  friend struct Node;
  explicit Object(std::nullptr_t) {}
  explicit Object(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Object make(Kind k, unsigned level, std::uint64_t num, Object c0, Object c1);
  std::shared_ptr<const Node> node_;
};

class Variable {
 public:
  explicit Variable(Object o);
  static Variable canonical(unsigned i);

  const Object& object() const { return obj_; }
  operator const Object&() const { return obj_; }
  std::optional<unsigned> canonical_index() const { return obj_.canonical_index(); }

  friend bool operator==(const Variable& a, const Variable& b) { return a.obj_ == b.obj_; }
  friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
  friend bool operator<(const Variable& a, const Variable& b);

 private:
  Object obj_;
};

struct Node {
  Kind kind;
  unsigned level = 0;
  std::uint64_t num = 0;
  Object c[2]{Object(nullptr), Object(nullptr)};
  std::size_t hash = 0;
  std::size_t size = 1;
  int canon = -1;      // canonical variable index of this node
  int max_canon = -1;  // over the whole subtree
};

struct ObjectHash {
  std::size_t operator()(const Object& o) const { return o.hash(); }
};

// Positions address subobjects by child indices from the root.
using Position = std::vector<std::uint8_t>;

std::string position_string(const Position& p);
const Object& at(const Object& root, const Position& p);  // throws std::out_of_range
Object replace_at(const Object& root, const Position& p, const Object& repl);

bool is_formula(const Object& o);
// Cont, or a level-0 federation of such (equalities, conjunctions).
bool is_conjunctive_formula(const Object& o);

// Variables used anywhere, including under stops and as class indices. A
// variable is atomic here: b = a'v does not count as an occurrence of a.
std::vector<Variable> occurring_variables(const Object& o);
bool occurs(const Variable& x, const Object& o);

// First canonical variable from `start` upward not occurring in any of objs.
Variable fresh_variable(const std::vector<Object>& objs, unsigned start = 0);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fedlogic
