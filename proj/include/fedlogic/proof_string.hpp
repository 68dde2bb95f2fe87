#pragma once

#include <memory>
#include <optional>

#include "fedlogic/kernel.hpp"
#include "fedlogic/postulates.hpp"

namespace fedlogic {

struct ProofNode;
using ProofString = std::shared_ptr<const ProofNode>;

struct ProofNode {
  enum class Kind { axiom, subst, cut, class_rule };
  Kind kind;
  std::optional<AxiomId> axiom;
  ProofString left, right;          // subst/class_rule use left only
  std::optional<Variable> variable;  // subst target or class index
  std::optional<Object> substituend;
  unsigned level = 0;
};

ProofString axiom_leaf(AxiomId id);
ProofString subst(ProofString p, Variable x, Object beta);
// left proves a, right proves a :> b; the cut proves b.
ProofString cut(ProofString left, ProofString right);
ProofString class_rule(ProofString p, Variable x, unsigned level = 0);

Object reduce_proof_string(const ProofString& p, Mode mode = Mode::extended);

// Shared subtrees become one step each.
ProofScript to_script(const ProofString& p, Mode mode = Mode::extended);
// Derived rules and lemmas are inlined first.
ProofString from_script(const ProofScript& s, const LemmaRegistry& lemmas = standard_lemmas(),
                        Mode mode = Mode::extended);

}  // namespace fedlogic
