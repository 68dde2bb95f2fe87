#include "fedlogic/proof_string.hpp"

#include <unordered_map>

namespace fedlogic {

namespace {

ProofString make(ProofNode n) { return std::make_shared<const ProofNode>(std::move(n)); }

void need(const ProofString& p) {
  if (!p) throw Error("proof string: missing subproof");
}

}  // namespace

ProofString axiom_leaf(AxiomId id) {
  ProofNode n{ProofNode::Kind::axiom, std::move(id), nullptr, nullptr, {}, {}, 0};
  return make(std::move(n));
}

ProofString subst(ProofString p, Variable x, Object beta) {
  need(p);
  return make({ProofNode::Kind::subst, {}, std::move(p), nullptr, std::move(x), std::move(beta), 0});
}

ProofString cut(ProofString left, ProofString right) {
  need(left);
  need(right);
  return make({ProofNode::Kind::cut, {}, std::move(left), std::move(right), {}, {}, 0});
}

ProofString class_rule(ProofString p, Variable x, unsigned level) {
  need(p);
  return make({ProofNode::Kind::class_rule, {}, std::move(p), nullptr, std::move(x), {}, level});
}

namespace {

// Walks the DAG once per node; emits one script step per node.
class Lowering {
 public:
  explicit Lowering(Mode mode) : mode_(mode) {}

  unsigned go(const ProofString& p) {
    if (auto it = done_.find(p.get()); it != done_.end()) return it->second;
    Justification j;
    switch (p->kind) {
      case ProofNode::Kind::axiom: j = Justification::of_axiom(*p->axiom); break;
      case ProofNode::Kind::subst:
        j = Justification::substitution(go(p->left), *p->variable, *p->substituend);
        break;
      case ProofNode::Kind::cut: {
        unsigned l = go(p->left);
        unsigned r = go(p->right);
        j = Justification::exchange(l, r);
        break;
      }
      case ProofNode::Kind::class_rule:
        j = Justification::class_rule(go(p->left), *p->variable, p->level);
        break;
    }
    std::vector<Object> prem;
    for (unsigned r : j.refs) prem.push_back(*script.steps[r - 1].formula);
    Object f;
    try {
      f = derive(j, prem, empty_, mode_);
    } catch (const Error& e) {
      throw Error(std::string("proof string does not reduce: ") + e.what());
    }
    unsigned label = static_cast<unsigned>(script.steps.size()) + 1;
    script.steps.push_back(Step{label, f, j});
    done_[p.get()] = label;
    return label;
  }

  ProofScript script;

 private:
  Mode mode_;
  LemmaRegistry empty_;
  std::unordered_map<const ProofNode*, unsigned> done_;
};

}  // namespace

Object reduce_proof_string(const ProofString& p, Mode mode) {
  need(p);
  Lowering l(mode);
  return *l.script.steps[l.go(p) - 1].formula;
}

ProofScript to_script(const ProofString& p, Mode mode) {
  need(p);
  Lowering l(mode);
  l.go(p);
  return std::move(l.script);
}

ProofString from_script(const ProofScript& s, const LemmaRegistry& lemmas, Mode mode) {
  ProofScript prim = inline_derived(s, lemmas, mode);
  std::unordered_map<unsigned, ProofString> at;
  ProofString last;
  for (const auto& st : prim.steps) {
    const Justification& j = st.just;
    switch (j.rule) {
      case Rule::axiom: last = axiom_leaf(*j.axiom); break;
      case Rule::exch: last = cut(at.at(j.refs[0]), at.at(j.refs[1])); break;
      case Rule::sub: last = subst(at.at(j.refs[0]), j.subs[0].target, j.subs[0].substituend); break;
      case Rule::cls: last = class_rule(at.at(j.refs[0]), *j.x, j.level); break;
      default: throw Error("from_script: unexpected rule after inlining");
    }
    at[st.label] = last;
  }
  return last;
}

}  // namespace fedlogic
