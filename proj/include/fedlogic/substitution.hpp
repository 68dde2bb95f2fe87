#pragma once

#include <utility>
#include <vector>

#include "fedlogic/object.hpp"

namespace fedlogic {

struct SubstitutionSpec {
  Variable target;
  Object substituend;
};

// Replaces every appearance (unguarded instance) of the target. Nothing
// under a constant, index or variable stop is touched.
Object substitute(const Object& alpha, const SubstitutionSpec& spec);
Object substitute(const Object& alpha, const Variable& x, const Object& beta);
// All targets replaced in one pass.
Object substitute_all(const Object& alpha, const std::vector<SubstitutionSpec>& specs);

enum class InstanceKind { appears, occurs_guarded };
InstanceKind instance_kind(const Object& alpha, const Position& pos);  // throws std::out_of_range

bool appears(const Variable& x, const Object& alpha);
// Unguarded variables, canonical order first.
std::vector<Variable> appearing_variables(const Object& alpha);
bool is_closed(const Object& alpha);

// Class(level, x, condition[x := x'i]).
Object bind_index(const Object& condition, const Variable& x, unsigned level = 0);
// Body of cls with its own index stops replaced by value.
Object instantiate_index(const Object& cls, const Object& value);

}  // namespace fedlogic
