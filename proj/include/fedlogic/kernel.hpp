#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fedlogic/object.hpp"
#include "fedlogic/script.hpp"

namespace fedlogic {

struct Lemma {
  std::string name;
  Object theorem;
  ProofScript script;  // formal, may itself cite earlier lemmas
};

class LemmaRegistry {
 public:
  void add(Lemma l);
  const Lemma* find(const std::string& name) const;
  std::vector<std::string> names() const;
  bool empty() const { return lemmas_.empty(); }

 private:
  std::vector<Lemma> lemmas_;
};

// transitivity (generated) and lemma-2.1 (shipped text).
const LemmaRegistry& standard_lemmas();
const std::string& lemma21_text();

class CheckError : public Error {
 public:
  CheckError(unsigned label, const std::string& msg, std::optional<Object> expected = {},
             std::optional<Object> found = {});
  unsigned label() const { return label_; }
  const std::optional<Object>& expected() const { return expected_; }
  const std::optional<Object>& found() const { return found_; }

 private:
  unsigned label_;
  std::optional<Object> expected_, found_;
};

// Formula produced by a non-assumption justification from its premises
// (given in the order of j.refs). Throws Error on a side-condition failure.
Object derive(const Justification& j, const std::vector<Object>& premises,
              const LemmaRegistry& lemmas, Mode mode = Mode::extended);

// Recomputes every step; holes ("?") are filled in place when present.
// Rejects assumption steps and empty scripts. Returns the theorem.
Object check_script(ProofScript& s, const LemmaRegistry& lemmas = standard_lemmas(),
                    Mode mode = Mode::extended);
Object check_script(const ProofScript& s, const LemmaRegistry& lemmas = standard_lemmas(),
                    Mode mode = Mode::extended);

// Open assumption label -> the instance of that assumption the step rests on
// (the assumption itself unless substitutions hit its variables).
using Dependencies = std::map<unsigned, Object>;

struct DisciplineStep {
  unsigned label;
  Object formula;
  Dependencies deps;
  std::vector<unsigned> open;  // stack, outermost first
  std::vector<Variable> named;
  std::vector<std::string> notes;  // flagged, not rejected
};

struct DisciplineTrace {
  std::vector<DisciplineStep> steps;
  Object theorem;
};

// Full check of a script with assumptions: every formula is recomputed,
// discharges are LIFO and write Cont(assumption instance, previous step), the
// class rule avoids named variables. Holes are filled as in check_script.
DisciplineTrace check_assumption_discipline(ProofScript& s,
                                            const LemmaRegistry& lemmas = standard_lemmas(),
                                            Mode mode = Mode::extended);
DisciplineTrace check_assumption_discipline(const ProofScript& s,
                                            const LemmaRegistry& lemmas = standard_lemmas(),
                                            Mode mode = Mode::extended);

// Emits checked steps into a fresh script with labels 1, 2, ... In primitive
// mode derived rules are expanded into axioms, exchange, substitution and the
// class rule as they are emitted.
class ProofBuilder {
 public:
  explicit ProofBuilder(const LemmaRegistry& lemmas, Mode mode = Mode::extended,
                        bool primitive = false);

  const ProofScript& script() const { return script_; }
  ProofScript take() { return std::move(script_); }
  Object formula(unsigned label) const;
  unsigned last() const;

  unsigned axiom(const AxiomId& id);
  unsigned axiom(AxiomTag t, const std::vector<SubstitutionSpec>& inst = {});
  unsigned exch(unsigned i, unsigned j);
  unsigned sub(unsigned i, const Variable& x, const Object& t);
  unsigned inst(unsigned i, const std::vector<SubstitutionSpec>& specs);
  unsigned cls(unsigned i, const Variable& x, unsigned level = 0);
  unsigned class_d(unsigned i, const Variable& x, unsigned level = 0);
  unsigned comb(unsigned i, unsigned j);
  unsigned trans(unsigned i, unsigned j);
  unsigned lemma(const std::string& name);
  // Re-derives every step of a formal script here; returns the last label.
  unsigned replay(const ProofScript& s, const std::string& what = "script");
  // Raw step, used when copying assumption scripts.
  unsigned emit(Justification j, std::optional<Object> formula = {});

  // Trivialization O :> F_i for a conjunctive formula F_i.
  unsigned triv_of(unsigned i);
  // triv(p) :> p
  unsigned triv_elim(const Object& p);
  // triv(a) :> (b :> a), via lemma-2.1 when registered.
  unsigned k_instance(const Object& a, const Object& b);
  // h :> F_i
  unsigned lift(unsigned i, const Object& h);
  // (P & Q) :> R  ==>  P :> (Q :> R); P conjunctive.
  unsigned curry(unsigned i);
  // P :> (Q :> R)  ==>  (P & Q) :> R
  unsigned uncurry(unsigned i);

 private:
  unsigned push(Justification j, Object f);
  unsigned inst_chain(unsigned i, const std::vector<SubstitutionSpec>& specs);
  unsigned remember(const Object& f, unsigned label);
  unsigned self_triv(const Object& p);  // p :> triv(p), p conjunctive

  const LemmaRegistry& lemmas_;
  Mode mode_;
  bool primitive_;
  ProofScript script_;
  std::unordered_map<Object, unsigned, ObjectHash> memo_;  // axiom and lemma steps
};

// Same theorem, only primitive rules.
ProofScript inline_derived(const ProofScript& s, const LemmaRegistry& lemmas = standard_lemmas(),
                           Mode mode = Mode::extended);

// (a :> b) :> ((b :> c) :> (a :> c)), without citing any lemma.
ProofScript generate_transitivity();

// Converts a proof with assumptions (mindful of names) into one without.
// Derived rules are kept; the result checks with check_script.
ProofScript elaborate(const ProofScript& s, const LemmaRegistry& lemmas = standard_lemmas(),
                      Mode mode = Mode::extended);

}  // namespace fedlogic
