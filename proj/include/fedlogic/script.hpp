#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fedlogic/object.hpp"
#include "fedlogic/postulates.hpp"
#include "fedlogic/substitution.hpp"

namespace fedlogic {

enum class Rule {
  axiom,
  exch,       // exch i j: from F_i and F_j = F_i :> B infer B
  sub,        // sub i x := t
  cls,        // class i x [@n]
  assume,
  discharge,  // discharge i
  // derived
  comb,       // comb i j: F_i & F_j
  trans,      // trans i j: from X :> Y and Y :> Z infer X :> Z
  inst,       // inst i x := s, y := t (simultaneous)
  lemma,      // lemma NAME
  class_d,    // class-d i x [@n]: from A :> B infer {x|A} <: {x|B}
};

bool is_derived(Rule r);

struct Justification {
  Rule rule = Rule::axiom;
  std::optional<AxiomId> axiom;
  std::vector<unsigned> refs;
  std::vector<SubstitutionSpec> subs;
  std::optional<Variable> x;
  unsigned level = 0;
  std::string lemma;

  static Justification of_axiom(AxiomId id);
  static Justification exchange(unsigned i, unsigned j);
  static Justification substitution(unsigned i, Variable x, Object t);
  static Justification instantiation(unsigned i, std::vector<SubstitutionSpec> s);
  static Justification class_rule(unsigned i, Variable x, unsigned level = 0);
  static Justification class_derived(unsigned i, Variable x, unsigned level = 0);
  static Justification combination(unsigned i, unsigned j);
  static Justification transitivity(unsigned i, unsigned j);
  static Justification lemma_ref(std::string name);
  static Justification assumption();
  static Justification discharge_of(unsigned i);
};

struct Step {
  unsigned label = 0;
  std::optional<Object> formula;  // empty only for "?" placeholders
  Justification just;
};

struct ProofScript {
  std::vector<Step> steps;
  bool has_assumptions() const;
  const Object& theorem() const;  // formula of the last step
};

class ScriptError : public Error {
 public:
  ScriptError(const std::string& msg, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Format: one step per line, "n. <object> ; <justification>"; "--" starts a
// comment. With allow_holes, "?" may stand for a formula to be computed.
ProofScript parse_script(std::string_view text, Mode mode = Mode::extended,
                         bool allow_holes = false);
std::string render_justification(const Justification& j, Mode mode = Mode::extended);
std::string render_script(const ProofScript& s, Mode mode = Mode::extended);

std::string axiom_label(const AxiomId& id, Mode mode = Mode::extended);

}  // namespace fedlogic
