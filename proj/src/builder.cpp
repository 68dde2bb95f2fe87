#include <algorithm>

#include "fedlogic/kernel.hpp"
#include "fedlogic/postulates.hpp"
#include "fedlogic/substitution.hpp"
#include "fedlogic/sugar.hpp"

namespace fedlogic {

namespace {

using sugar::triv;

Variable V(unsigned i) { return Variable::canonical(i); }
Object C(const Object& l, const Object& r) { return Object::cont(l, r); }
Object F(const Object& l, const Object& r) { return Object::fed(0, l, r); }

const LemmaRegistry& no_lemmas() {
  static const LemmaRegistry r;
  return r;
}

}  // namespace

ProofBuilder::ProofBuilder(const LemmaRegistry& lemmas, Mode mode, bool primitive)
    : lemmas_(lemmas), mode_(mode), primitive_(primitive) {}

Object ProofBuilder::formula(unsigned label) const {
  if (label == 0 || label > script_.steps.size()) throw Error("builder: no step " + std::to_string(label));
  return *script_.steps[label - 1].formula;
}

unsigned ProofBuilder::last() const {
  if (script_.steps.empty()) throw Error("builder: empty");
  return static_cast<unsigned>(script_.steps.size());
}

unsigned ProofBuilder::push(Justification j, Object f) {
  unsigned label = static_cast<unsigned>(script_.steps.size()) + 1;
  script_.steps.push_back(Step{label, std::move(f), std::move(j)});
  return label;
}

unsigned ProofBuilder::remember(const Object& f, unsigned label) {
  memo_.emplace(f, label);
  return label;
}

unsigned ProofBuilder::emit(Justification j, std::optional<Object> f) {
  if (j.rule == Rule::assume || j.rule == Rule::discharge) {
    if (!f) throw Error("builder: assumption steps need their formula");
    // steps inside a closed segment must not be reused later
    if (j.rule == Rule::discharge) memo_.clear();
    return push(std::move(j), std::move(*f));
  }
  std::vector<Object> prem;
  for (unsigned r : j.refs) prem.push_back(formula(r));
  Object got = derive(j, prem, lemmas_, mode_);
  if (f && *f != got) throw Error("builder: step does not reproduce its formula");
  return push(std::move(j), std::move(got));
}

unsigned ProofBuilder::axiom(const AxiomId& id) {
  Object f = axiom_object(id, mode_);
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  return remember(f, push(Justification::of_axiom(id), f));
}

unsigned ProofBuilder::axiom(AxiomTag t, const std::vector<SubstitutionSpec>& specs) {
  Object base = axiom_object(AxiomId::fixed(t), mode_);
  Object target = substitute_all(base, specs);
  if (auto it = memo_.find(target); it != memo_.end()) return it->second;
  unsigned a = axiom(AxiomId::fixed(t));
  return remember(target, inst(a, specs));
}

unsigned ProofBuilder::exch(unsigned i, unsigned j) {
  return push(Justification::exchange(i, j), derive(Justification::exchange(i, j),
                                                    {formula(i), formula(j)}, lemmas_, mode_));
}

unsigned ProofBuilder::sub(unsigned i, const Variable& x, const Object& t) {
  if (t == x.object()) return i;
  Justification j = Justification::substitution(i, x, t);
  Object f = derive(j, {formula(i)}, lemmas_, mode_);
  return push(std::move(j), std::move(f));
}

unsigned ProofBuilder::inst(unsigned i, const std::vector<SubstitutionSpec>& specs) {
  std::vector<SubstitutionSpec> real;
  for (const auto& s : specs)
    if (s.substituend != s.target.object() && appears(s.target, formula(i))) real.push_back(s);
  if (real.empty()) return i;
  if (real.size() == 1) return sub(i, real[0].target, real[0].substituend);
  if (primitive_) return inst_chain(i, real);
  Justification j = Justification::instantiation(i, real);
  Object f = derive(j, {formula(i)}, lemmas_, mode_);
  return push(std::move(j), std::move(f));
}

unsigned ProofBuilder::inst_chain(unsigned i, const std::vector<SubstitutionSpec>& specs) {
  bool clash = false;
  for (const auto& s : specs)
    for (const auto& t : specs)
      if (appears(t.target, s.substituend)) clash = true;
  if (!clash) {
    for (const auto& s : specs) i = sub(i, s.target, s.substituend);
    return i;
  }
  std::vector<Object> avoid{formula(i)};
  for (const auto& s : specs) {
    avoid.push_back(s.substituend);
    avoid.push_back(s.target.object());
  }
  std::vector<Variable> fresh;
  for (const auto& s : specs) {
    Variable z = fresh_variable(avoid);
    avoid.push_back(z.object());
    fresh.push_back(z);
    i = sub(i, s.target, z.object());
  }
  for (std::size_t k = 0; k < specs.size(); ++k) i = sub(i, fresh[k], specs[k].substituend);
  return i;
}

unsigned ProofBuilder::cls(unsigned i, const Variable& x, unsigned level) {
  Justification j = Justification::class_rule(i, x, level);
  Object f = derive(j, {formula(i)}, lemmas_, mode_);
  return push(std::move(j), std::move(f));
}

unsigned ProofBuilder::class_d(unsigned i, const Variable& x, unsigned level) {
  Justification j = Justification::class_derived(i, x, level);
  Object f = derive(j, {formula(i)}, lemmas_, mode_);
  if (!primitive_) return push(std::move(j), std::move(f));
  const Object p = formula(i);
  unsigned a11 = axiom(AxiomTag::A11, {{V(0), p.left()}, {V(1), p.right()}});
  unsigned e = exch(i, a11);
  unsigned c = cls(e, x, level);
  unsigned t = triv_elim(f);
  return exch(c, t);
}

unsigned ProofBuilder::comb(unsigned i, unsigned j) {
  Justification just = Justification::combination(i, j);
  Object f = derive(just, {formula(i), formula(j)}, lemmas_, mode_);
  if (!primitive_) return push(std::move(just), std::move(f));
  unsigned ti = triv_of(i), tj = triv_of(j);
  unsigned a10 = axiom(AxiomTag::A10, {{V(0), formula(i)}, {V(1), formula(j)}});
  return exch(tj, exch(ti, a10));
}

unsigned ProofBuilder::trans(unsigned i, unsigned j) {
  Justification just = Justification::transitivity(i, j);
  Object f = derive(just, {formula(i), formula(j)}, lemmas_, mode_);
  if (!primitive_) return push(std::move(just), std::move(f));
  Object x = formula(i).left(), y = formula(i).right(), z = formula(j).right();
  unsigned c = comb(triv_of(i), triv_of(j));
  unsigned a2 = axiom(AxiomTag::A2, {{V(3), Object::empty()}, {V(0), x}, {V(1), y}, {V(2), z}});
  unsigned e = exch(c, a2);
  return exch(e, triv_elim(f));
}

unsigned ProofBuilder::lemma(const std::string& name) {
  const Lemma* l = lemmas_.find(name);
  if (!l) throw Error("unknown lemma '" + name + "'");
  if (auto it = memo_.find(l->theorem); it != memo_.end()) return it->second;
  if (primitive_) {
    unsigned out = replay(l->script, l->name);
    if (formula(out) != l->theorem) throw Error("lemma " + name + " does not prove its theorem");
    return remember(l->theorem, out);
  }
  return remember(l->theorem, push(Justification::lemma_ref(name), l->theorem));
}

unsigned ProofBuilder::replay(const ProofScript& s, const std::string& what) {
  std::vector<std::pair<unsigned, unsigned>> map;
  auto look = [&](unsigned r) {
    for (const auto& [a, b] : map)
      if (a == r) return b;
    throw Error(what + ": bad reference");
  };
  unsigned out = 0;
  for (const auto& st : s.steps) {
    const Justification& j = st.just;
    switch (j.rule) {
      case Rule::axiom: out = axiom(*j.axiom); break;
      case Rule::exch: out = exch(look(j.refs[0]), look(j.refs[1])); break;
      case Rule::sub: out = sub(look(j.refs[0]), j.subs[0].target, j.subs[0].substituend); break;
      case Rule::inst: out = inst(look(j.refs[0]), j.subs); break;
      case Rule::cls: out = cls(look(j.refs[0]), *j.x, j.level); break;
      case Rule::class_d: out = class_d(look(j.refs[0]), *j.x, j.level); break;
      case Rule::comb: out = comb(look(j.refs[0]), look(j.refs[1])); break;
      case Rule::trans: out = trans(look(j.refs[0]), look(j.refs[1])); break;
      case Rule::lemma: out = lemma(j.lemma); break;
      case Rule::assume:
      case Rule::discharge: throw Error(what + " uses assumptions");
    }
    map.emplace_back(st.label, out);
  }
  return out;
}

unsigned ProofBuilder::triv_of(unsigned i) {
  const Object f = formula(i);
  if (f.is(Kind::cont)) {
    unsigned a11 = axiom(AxiomTag::A11, {{V(0), f.left()}, {V(1), f.right()}});
    return exch(i, a11);
  }
  if (f.is(Kind::fed) && f.level() == 0 && is_conjunctive_formula(f)) {
    const Object p = f.left(), q = f.right();
    unsigned pi = exch(i, axiom(AxiomTag::A4a, {{V(0), p}, {V(1), q}}));
    unsigned qi = exch(i, axiom(AxiomTag::A4b, {{V(0), p}, {V(1), q}}));
    unsigned c = comb(triv_of(pi), triv_of(qi));
    unsigned a3 = axiom(AxiomTag::A3, {{V(2), Object::empty()}, {V(0), p}, {V(1), q}});
    return exch(c, a3);
  }
  throw Error("triv_of: step is not a formula");
}

unsigned ProofBuilder::self_triv(const Object& p) {
  if (p.is(Kind::cont)) return axiom(AxiomTag::A11, {{V(0), p.left()}, {V(1), p.right()}});
  const Object l = p.left(), r = p.right();
  unsigned tl = trans(axiom(AxiomTag::A4a, {{V(0), l}, {V(1), r}}), self_triv(l));
  unsigned tr = trans(axiom(AxiomTag::A4b, {{V(0), l}, {V(1), r}}), self_triv(r));
  unsigned a3 = axiom(AxiomTag::A3, {{V(2), p}, {V(0), triv(l)}, {V(1), triv(r)}});
  unsigned both = exch(comb(tl, tr), a3);
  unsigned a3o = axiom(AxiomTag::A3, {{V(2), Object::empty()}, {V(0), l}, {V(1), r}});
  return trans(both, a3o);
}

unsigned ProofBuilder::triv_elim(const Object& p) {
  const Object tp = triv(p);
  unsigned a1 = axiom(AxiomTag::A1, {{V(2), tp}, {V(0), Object::empty()}, {V(1), p}});
  unsigned a8 = axiom(AxiomTag::A8, {{V(0), tp}});
  unsigned a7 = axiom(AxiomTag::A7, {{V(0), tp}});
  return exch(comb(a8, a7), a1);
}

unsigned ProofBuilder::k_instance(const Object& a_in, const Object& b_in) {
  const Object a = a_in, b = b_in;
  if (lemmas_.find("lemma-2.1")) {
    unsigned l = lemma("lemma-2.1");
    return inst(l, {{V(0), a}, {V(1), b}});
  }
  const Object ta = triv(a), O = Object::empty();
  unsigned s1 = axiom(AxiomTag::A8, {{V(0), ta}});
  unsigned s2 = axiom(AxiomTag::A8, {{V(0), b}});
  unsigned s3 = axiom(AxiomTag::A11, {{V(0), b}, {V(1), O}});
  unsigned s5 = trans(s1, exch(s2, s3));
  unsigned s6 = axiom(AxiomTag::A7, {{V(0), ta}});
  unsigned s7 = comb(s5, s6);
  unsigned s8 = axiom(AxiomTag::A2, {{V(3), ta}, {V(0), b}, {V(1), O}, {V(2), a}});
  return exch(s7, s8);
}

unsigned ProofBuilder::lift(unsigned i, const Object& h_in) {
  const Object h = h_in;
  unsigned k = k_instance(formula(i), h);
  return exch(triv_of(i), k);
}

unsigned ProofBuilder::curry(unsigned i) {
  const Object f = formula(i);
  if (!f.is(Kind::cont) || !f.left().is(Kind::fed) || f.left().level() != 0)
    throw Error("curry: step is not of the form (P & Q) :> R");
  const Object P = f.left().left(), Q = f.left().right(), R = f.right();
  if (!is_conjunctive_formula(P)) throw Error("curry: P must be a formula");
  unsigned qp = trans(self_triv(P), k_instance(P, Q));
  unsigned qq = lift(axiom(AxiomTag::A7, {{V(0), Q}}), P);
  unsigned a3 = axiom(AxiomTag::A3, {{V(2), P}, {V(0), C(Q, P)}, {V(1), C(Q, Q)}});
  unsigned both = exch(comb(qp, qq), a3);
  unsigned a3q = lift(axiom(AxiomTag::A3, {{V(2), Q}, {V(0), P}, {V(1), Q}}), P);
  unsigned a1 = axiom(AxiomTag::A1, {{V(2), P}, {V(0), F(C(Q, P), C(Q, Q))}, {V(1), C(Q, F(P, Q))}});
  unsigned qpq = exch(comb(both, a3q), a1);
  unsigned lp = lift(i, P);
  unsigned a2 = axiom(AxiomTag::A2, {{V(3), P}, {V(0), Q}, {V(1), F(P, Q)}, {V(2), R}});
  return exch(comb(qpq, lp), a2);
}

unsigned ProofBuilder::uncurry(unsigned i) {
  const Object f = formula(i);
  if (!f.is(Kind::cont) || !f.right().is(Kind::cont))
    throw Error("uncurry: step is not of the form P :> (Q :> R)");
  const Object P = f.left(), Q = f.right().left(), R = f.right().right();
  unsigned a4a = axiom(AxiomTag::A4a, {{V(0), P}, {V(1), Q}});
  unsigned t = trans(a4a, i);
  unsigned a4b = axiom(AxiomTag::A4b, {{V(0), P}, {V(1), Q}});
  unsigned a1 = axiom(AxiomTag::A1, {{V(2), F(P, Q)}, {V(0), Q}, {V(1), R}});
  return exch(comb(a4b, t), a1);
}

ProofScript inline_derived(const ProofScript& s, const LemmaRegistry& lemmas, Mode mode) {
  ProofScript checked = s;
  check_script(checked, lemmas, mode);
  ProofBuilder b(lemmas, mode, true);
  unsigned out = b.replay(checked);
  // memo hits can end the replay on an earlier step
  if (out != b.last()) b.emit(Justification::substitution(out, Variable::canonical(0), sugar::var(0)));
  ProofScript r = b.take();
  if (r.theorem() != checked.theorem()) throw Error("inline_derived: theorem changed");
  return r;
}

ProofScript generate_transitivity() {
  ProofBuilder b(no_lemmas(), Mode::extended, true);
  const Object a = sugar::var(0), bb = sugar::var(1), c = sugar::var(2);
  const Object D = F(C(a, bb), C(bb, c));
  unsigned a2 = b.axiom(AxiomTag::A2, {{V(3), D}});
  unsigned a4a = b.axiom(AxiomTag::A4a, {{V(0), C(a, bb)}, {V(1), C(bb, c)}});
  unsigned a4b = b.axiom(AxiomTag::A4b, {{V(0), C(a, bb)}, {V(1), C(bb, c)}});
  unsigned t1 = b.exch(b.comb(a4a, a4b), a2);
  b.curry(t1);
  return b.take();
}

}  // namespace fedlogic
