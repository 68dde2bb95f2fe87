#include <map>

#include "fedlogic/kernel.hpp"
#include "fedlogic/postulates.hpp"
#include "fedlogic/substitution.hpp"
#include "fedlogic/sugar.hpp"

namespace fedlogic {

namespace {

Variable V(unsigned i) { return Variable::canonical(i); }

// Removes the innermost assumption of s (the one closed by the first
// discharge). Other assumptions are copied through unchanged.
ProofScript eliminate_innermost(const ProofScript& s, const DisciplineTrace& trace,
                                const LemmaRegistry& lemmas, Mode mode) {
  std::size_t d = 0;
  while (s.steps[d].just.rule != Rule::discharge) ++d;
  const unsigned h = s.steps[d].just.refs[0];
  std::size_t a = 0;
  while (s.steps[a].label != h) ++a;

  ProofBuilder b(lemmas, mode);
  std::map<unsigned, unsigned> plain;   // old label -> new label, same formula
  std::map<unsigned, unsigned> lifted;  // old label -> new label of (H' :> formula)
  std::map<std::pair<unsigned, Object>, unsigned> lifts;
  std::map<unsigned, std::size_t> pos;
  for (std::size_t i = 0; i < s.steps.size(); ++i) pos[s.steps[i].label] = i;

  auto remap = [&](Justification j) {
    for (auto& r : j.refs) r = plain.at(r);
    return j;
  };
  auto copy = [&](std::size_t i) {
    const Step& st = s.steps[i];
    Justification j = st.just;
    if (j.rule == Rule::discharge) {
      // the discharge reads the step right before it
      unsigned prev = plain.at(s.steps[i - 1].label);
      if (prev != b.last()) b.emit(Justification::substitution(prev, V(0), sugar::var(0)));
      return b.emit(remap(j), st.formula);
    }
    if (j.rule == Rule::assume) return b.emit(j, st.formula);
    return b.emit(remap(j), st.formula);
  };
  auto dependent = [&](unsigned label) {
    return trace.steps[pos.at(label)].deps.count(h) > 0;
  };
  auto instance_of = [&](unsigned label) { return trace.steps[pos.at(label)].deps.at(h); };
  // H' :> F_r for any earlier step r
  auto under = [&](unsigned r, const Object& hyp) {
    if (dependent(r)) {
      if (instance_of(r) != hyp) throw Error("elaborate: mixed assumption instances");
      return lifted.at(r);
    }
    auto key = std::make_pair(r, hyp);
    if (auto it = lifts.find(key); it != lifts.end()) return it->second;
    unsigned l = b.lift(plain.at(r), hyp);
    lifts.emplace(key, l);
    return l;
  };
  // from H :> A and H :> (A :> B) infer H :> B
  auto h_exch = [&](unsigned ha, unsigned hab, const Object& hyp) {
    const Object A = b.formula(ha).right(), B = b.formula(hab).right().right();
    unsigned a1 = b.axiom(AxiomTag::A1, {{V(2), hyp}, {V(0), A}, {V(1), B}});
    return b.exch(b.comb(ha, hab), a1);
  };

  for (std::size_t i = 0; i < a; ++i) plain[s.steps[i].label] = copy(i);
  for (std::size_t i = a; i < d; ++i) {
    const Step& st = s.steps[i];
    const Justification& j = st.just;
    if (i == a) {
      lifted[st.label] = b.axiom(AxiomTag::A7, {{V(0), *st.formula}});
      continue;
    }
    if (!dependent(st.label)) {
      plain[st.label] = copy(i);
      continue;
    }
    const Object hyp = instance_of(st.label);
    unsigned out = 0;
    switch (j.rule) {
      case Rule::exch:
        out = h_exch(under(j.refs[0], hyp), under(j.refs[1], hyp), hyp);
        break;
      case Rule::comb: {
        unsigned l0 = under(j.refs[0], hyp), l1 = under(j.refs[1], hyp);
        const Object A = b.formula(l0).right(), B = b.formula(l1).right();
        unsigned a3 = b.axiom(AxiomTag::A3, {{V(2), hyp}, {V(0), A}, {V(1), B}});
        out = b.exch(b.comb(l0, l1), a3);
        break;
      }
      case Rule::trans: {
        unsigned l0 = under(j.refs[0], hyp), l1 = under(j.refs[1], hyp);
        const Object X = b.formula(l0).right().left(), Y = b.formula(l0).right().right(),
                     Z = b.formula(l1).right().right();
        unsigned a2 = b.axiom(AxiomTag::A2, {{V(3), hyp}, {V(0), X}, {V(1), Y}, {V(2), Z}});
        out = b.exch(b.comb(l0, l1), a2);
        break;
      }
      case Rule::sub:
        out = b.emit(Justification::substitution(lifted.at(j.refs[0]), j.subs[0].target,
                                                 j.subs[0].substituend));
        break;
      case Rule::inst:
        out = b.emit(Justification::instantiation(lifted.at(j.refs[0]), j.subs));
        break;
      case Rule::cls: {
        unsigned u = b.uncurry(lifted.at(j.refs[0]));
        out = b.curry(b.cls(u, *j.x, j.level));
        break;
      }
      case Rule::class_d: {
        unsigned l0 = lifted.at(j.refs[0]);
        const Object p = b.formula(l0).right();
        unsigned a11 = b.axiom(AxiomTag::A11, {{V(0), p.left()}, {V(1), p.right()}});
        unsigned t = h_exch(l0, b.lift(a11, hyp), hyp);
        unsigned c = b.curry(b.cls(b.uncurry(t), *j.x, j.level));
        const Object S = b.formula(c).right().right();
        unsigned te = b.lift(b.triv_elim(S), hyp);
        out = h_exch(c, te, hyp);
        break;
      }
      default: throw Error("elaborate: unexpected dependent step " + std::to_string(st.label));
    }
    if (b.formula(out) != Object::cont(hyp, *st.formula))
      throw Error("elaborate: internal mismatch at step " + std::to_string(st.label));
    lifted[st.label] = out;
  }
  {
    unsigned prev = s.steps[d - 1].label;
    unsigned target = dependent(prev) ? lifted.at(prev) : under(prev, *s.steps[a].formula);
    if (b.formula(target) != *s.steps[d].formula) throw Error("elaborate: discharge mismatch");
    plain[s.steps[d].label] = target;
  }
  for (std::size_t i = d + 1; i < s.steps.size(); ++i) plain[s.steps[i].label] = copy(i);
  return b.take();
}

}  // namespace

ProofScript elaborate(const ProofScript& input, const LemmaRegistry& lemmas, Mode mode) {
  ProofScript cur = input;
  for (;;) {
    DisciplineTrace trace = check_assumption_discipline(cur, lemmas, mode);
    bool any = false;
    for (auto& st : cur.steps) {
      if (st.just.rule != Rule::assume) continue;
      any = true;
      if (!is_conjunctive_formula(*st.formula))
        throw Error("elaborate: assumption at step " + std::to_string(st.label) +
                    " is not a formula");
    }
    if (!any) break;
    cur = eliminate_innermost(cur, trace, lemmas, mode);
  }
  check_script(cur, lemmas, mode);
  return cur;
}

}  // namespace fedlogic
