#include "fedlogic/kernel.hpp"

#include <algorithm>
#include <unordered_map>

#include "fedlogic/postulates.hpp"
#include "fedlogic/substitution.hpp"
#include "fedlogic/sugar.hpp"
#include "fedlogic/syntax.hpp"

namespace fedlogic {

void LemmaRegistry::add(Lemma l) {
  for (auto& x : lemmas_)
    if (x.name == l.name) {
      x = std::move(l);
      return;
    }
  lemmas_.push_back(std::move(l));
}

const Lemma* LemmaRegistry::find(const std::string& name) const {
  for (const auto& l : lemmas_)
    if (l.name == name) return &l;
  return nullptr;
}

std::vector<std::string> LemmaRegistry::names() const {
  std::vector<std::string> v;
  for (const auto& l : lemmas_) v.push_back(l.name);
  return v;
}

namespace {

std::string describe(const std::string& msg, const std::optional<Object>& e,
                     const std::optional<Object>& f) {
  std::string s = msg;
  if (e) s += "\n  expected: " + render(*e, Style::sugar);
  if (f) s += "\n  found:    " + render(*f, Style::sugar);
  return s;
}

Object class_conclusion(const Object& alpha, const Object& beta, const Variable& x,
                        unsigned level) {
  return sugar::sub(bind_index(alpha, x, level), bind_index(beta, x, level), level);
}

}  // namespace

CheckError::CheckError(unsigned label, const std::string& msg, std::optional<Object> expected,
                       std::optional<Object> found)
    : Error(describe("step " + std::to_string(label) + ": " + msg, expected, found)),
      label_(label),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Object derive(const Justification& j, const std::vector<Object>& p, const LemmaRegistry& lemmas,
              Mode mode) {
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw Error("wrong number of premises");
  };
  switch (j.rule) {
    case Rule::axiom:
      if (!j.axiom) throw Error("axiom justification without an axiom");
      return axiom_object(*j.axiom, mode);
    case Rule::exch:
      need(2);
      if (!p[1].is(Kind::cont) || p[1].left() != p[0])
        throw Error("exchange: second premise is not of the form (first premise) :> b");
      return p[1].right();
    case Rule::sub:
      need(1);
      if (j.subs.size() != 1) throw Error("sub takes exactly one substitution");
      return substitute(p[0], j.subs[0]);
    case Rule::inst: {
      need(1);
      for (std::size_t a = 0; a < j.subs.size(); ++a)
        for (std::size_t b = a + 1; b < j.subs.size(); ++b)
          if (j.subs[a].target == j.subs[b].target) throw Error("inst: repeated target");
      return substitute_all(p[0], j.subs);
    }
    case Rule::cls: {
      need(1);
      if (!j.x) throw Error("class rule without a variable");
      const Object& f = p[0];
      if (!f.is(Kind::cont) || !f.right().is(Kind::cont))
        throw Error("class rule: premise is not of the form g :> (a :> b)");
      if (appears(*j.x, f.left()))
        throw Error("class rule: " + render(j.x->object(), Style::sugar) +
                    " appears in the hypothesis part");
      return Object::cont(f.left(), class_conclusion(f.right().left(), f.right().right(), *j.x,
                                                     j.level));
    }
    case Rule::class_d: {
      need(1);
      if (!j.x) throw Error("class rule without a variable");
      if (!p[0].is(Kind::cont)) throw Error("class-d: premise is not a containment");
      return class_conclusion(p[0].left(), p[0].right(), *j.x, j.level);
    }
    case Rule::comb:
      need(2);
      if (!is_conjunctive_formula(p[0]) || !is_conjunctive_formula(p[1]))
        throw Error("combination needs formulas");
      return Object::fed(0, p[0], p[1]);
    case Rule::trans:
      need(2);
      if (!p[0].is(Kind::cont) || !p[1].is(Kind::cont) || p[0].right() != p[1].left())
        throw Error("transitivity: premises are not x :> y and y :> z");
      return Object::cont(p[0].left(), p[1].right());
    case Rule::lemma: {
      need(0);
      const Lemma* l = lemmas.find(j.lemma);
      if (!l) throw Error("unknown lemma '" + j.lemma + "'");
      return l->theorem;
    }
    case Rule::assume:
    case Rule::discharge: throw Error("assumption steps have no premises-only derivation");
  }
  throw Error("unknown rule");
}

namespace {

struct Entry {
  Object formula;
  Dependencies deps;
  bool in_scope = true;
};

struct Frame {
  unsigned label;
  std::size_t index;  // position of the assume step
  Object formula;
};

// Shared loop for both checkers.
DisciplineTrace run(ProofScript& s, const LemmaRegistry& lemmas, Mode mode,
                    bool allow_assumptions) {
  if (s.steps.empty()) throw Error("empty script: a proof must prove something");
  DisciplineTrace trace;
  std::unordered_map<unsigned, Entry> table;
  std::vector<Frame> stack;
  unsigned prev_label = 0;
  for (std::size_t idx = 0; idx < s.steps.size(); ++idx) {
    Step& st = s.steps[idx];
    if (idx > 0 && st.label <= prev_label)
      throw CheckError(st.label, "labels must be strictly increasing");
    prev_label = st.label;
    const Justification& j = st.just;
    std::vector<Object> prem;
    std::vector<const Entry*> prem_entries;
    if (j.rule != Rule::discharge) {
      for (unsigned r : j.refs) {
        auto it = table.find(r);
        if (it == table.end()) throw CheckError(st.label, "reference to unknown or later step " + std::to_string(r));
        if (!it->second.in_scope)
          throw CheckError(st.label, "step " + std::to_string(r) + " lies inside a discharged assumption");
        prem.push_back(it->second.formula);
        prem_entries.push_back(&it->second);
      }
    }
    DisciplineStep ds;
    ds.label = st.label;
    Object computed;
    if (j.rule == Rule::assume || j.rule == Rule::discharge) {
      if (!allow_assumptions)
        throw CheckError(st.label, "assumption steps are not allowed in a formal proof");
      if (j.rule == Rule::assume) {
        if (!st.formula) throw CheckError(st.label, "an assumption must state its formula");
        computed = *st.formula;
        ds.deps[st.label] = computed;
        stack.push_back({st.label, idx, computed});
      } else {
        if (j.refs.size() != 1) throw CheckError(st.label, "discharge names one assumption");
        unsigned h = j.refs[0];
        if (stack.empty()) throw CheckError(st.label, "no open assumption to discharge");
        if (stack.back().label != h)
          throw CheckError(st.label, "assumptions must be discharged last-in-first-out; innermost open is " +
                                         std::to_string(stack.back().label));
        if (idx == 0) throw CheckError(st.label, "nothing to discharge");
        const Entry& prev = table.at(s.steps[idx - 1].label);
        auto dit = prev.deps.find(h);
        Object inst = dit != prev.deps.end() ? dit->second : stack.back().formula;
        computed = Object::cont(inst, prev.formula);
        ds.deps = prev.deps;
        ds.deps.erase(h);
        for (std::size_t k = stack.back().index; k < idx; ++k) table.at(s.steps[k].label).in_scope = false;
        stack.pop_back();
      }
    } else {
      try {
        computed = derive(j, prem, lemmas, mode);
      } catch (const CheckError&) {
        throw;
      } catch (const Error& e) {
        throw CheckError(st.label, e.what());
      }
      for (const Entry* e : prem_entries) {
        for (const auto& [h, inst] : e->deps) {
          auto [it, fresh] = ds.deps.emplace(h, inst);
          if (!fresh && it->second != inst)
            throw CheckError(st.label, "premises rest on different instances of assumption " +
                                           std::to_string(h));
        }
      }
      if (j.rule == Rule::sub || j.rule == Rule::inst) {
        for (auto& [h, inst] : ds.deps) inst = substitute_all(inst, j.subs);
      }
    }
    // named variables: those appearing in open assumptions
    std::vector<Variable> named;
    for (const auto& f : stack)
      for (const auto& v : appearing_variables(f.formula))
        if (std::find(named.begin(), named.end(), v) == named.end()) named.push_back(v);
    std::sort(named.begin(), named.end());
    if (j.rule == Rule::cls || j.rule == Rule::class_d) {
      bool bad = std::find(named.begin(), named.end(), *j.x) != named.end();
      for (const auto& [h, inst] : ds.deps)
        if (appears(*j.x, inst)) bad = true;
      if (bad)
        throw CheckError(st.label, "class rule on named variable " + render(j.x->object(), Style::sugar));
    }
    if (j.rule == Rule::sub || j.rule == Rule::inst) {
      for (const auto& sp : j.subs)
        if (std::find(named.begin(), named.end(), sp.target) != named.end())
          ds.notes.push_back("substitution targets named variable " +
                             render(sp.target.object(), Style::sugar));
    }
    auto viol = validate_formation(computed, mode);
    if (!viol.empty())
      throw CheckError(st.label, "result is not a well-formed object: " + viol.front().message,
                       std::nullopt, computed);
    if (!st.formula) {
      st.formula = computed;
    } else if (*st.formula != computed) {
      throw CheckError(st.label, "formula does not match its justification", computed, *st.formula);
    }
    for (const auto& f : stack) ds.open.push_back(f.label);
    ds.named = std::move(named);
    ds.formula = computed;
    table[st.label] = Entry{computed, ds.deps, true};
    trace.steps.push_back(std::move(ds));
  }
  if (!stack.empty())
    throw CheckError(s.steps.back().label,
                     "assumption " + std::to_string(stack.back().label) + " is never discharged");
  trace.theorem = *s.steps.back().formula;
  return trace;
}

}  // namespace

Object check_script(ProofScript& s, const LemmaRegistry& lemmas, Mode mode) {
  return run(s, lemmas, mode, false).theorem;
}

Object check_script(const ProofScript& s, const LemmaRegistry& lemmas, Mode mode) {
  ProofScript copy = s;
  return check_script(copy, lemmas, mode);
}

DisciplineTrace check_assumption_discipline(ProofScript& s, const LemmaRegistry& lemmas,
                                            Mode mode) {
  return run(s, lemmas, mode, true);
}

DisciplineTrace check_assumption_discipline(const ProofScript& s, const LemmaRegistry& lemmas,
                                            Mode mode) {
  ProofScript copy = s;
  return run(copy, lemmas, mode, true);
}

}  // namespace fedlogic
