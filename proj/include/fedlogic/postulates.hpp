#pragma once

#include <optional>
#include <string>

#include "fedlogic/object.hpp"

namespace fedlogic {

enum class AxiomTag {
  A1, A2, A3, A4a, A4b, A5a, A5b, A6, A7, A8, A9, A10, A11, A12,
  A13, A14a, A14b,
  B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12a, B12b,
  C1, C2, C3,
};

struct AxiomId {
  AxiomTag tag;
  unsigned level = 0;            // B group: n >= 1
  std::optional<unsigned> m;     // B9 inner level (default n - 1)
  std::optional<Variable> x;     // A13/B11 index, A14/B12 index (default x)
  std::optional<Variable> a;     // A14/B12 set variable (default a)
  std::optional<Object> alpha;   // A13/B11 condition

  static AxiomId fixed(AxiomTag t, unsigned level = 0) { return AxiomId{t, level, {}, {}, {}, {}}; }
};

bool is_schema(AxiomTag t);       // needs a condition (A13, B11)
bool is_b_group(AxiomTag t);
bool is_extended_only(AxiomTag t);  // A5a, A5b, A6
const char* tag_name(AxiomTag t);
std::optional<AxiomTag> tag_from_name(const std::string& s);

// Throws Error for a schema without its condition, a B axiom at level 0, or
// A5/A6 in classical mode.
Object axiom_object(const AxiomId& id, Mode mode = Mode::extended);

// a in {x | alpha} <=> Sing(a) & alpha[x := a] (level 0: A13, level n: B11).
Object comprehension_instance(unsigned level, const Variable& x, const Object& alpha,
                              Mode mode = Mode::extended);

enum class ExtVariant { a, b };
Object extensionality_instance(unsigned level, ExtVariant v, const Variable& x, const Variable& a,
                               Mode mode = Mode::extended);

// Literal definitional Sing with a free witness (the level-0 definition, the
// typed form at level n). The kernel's own Sing binds the witness, see sugar::sing.
Object sing_expansion(unsigned level, const Object& subject, const Variable& witness,
                      Mode mode = Mode::extended);

}  // namespace fedlogic
