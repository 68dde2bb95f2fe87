#include "fedlogic/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "fedlogic/substitution.hpp"
#include "fedlogic/syntax.hpp"

namespace fedlogic {

std::string to_string(const DomainValue& v) {
  if (v.absurd) return "_|_";
  if (v.atoms == 0) return "O";
  return std::to_string(v.atoms);
}

std::optional<DomainValue> value_from_string(const std::string& s) {
  if (s == "O" || s == "0" || s == "#0") return DomainValue::mult(0);
  if (s == "_|_") return DomainValue::bot();
  std::string t = (!s.empty() && s[0] == '#') ? s.substr(1) : s;
  if (t.empty() || t.size() > 19) return std::nullopt;
  for (char c : t)
    if (c < '0' || c > '9') return std::nullopt;
  return DomainValue::mult(std::stoull(t));
}

Object literal(const DomainValue& v) {
  if (v.absurd) return Object::absurd();
  return Object::numeral(v.atoms);
}

KStructure::KStructure(unsigned kk) : k(kk) {
  if (k > kMaxK) throw Error("k too large (max " + std::to_string(kMaxK) + ")");
}

std::vector<DomainValue> KStructure::domain() const {
  std::vector<DomainValue> d;
  for (std::uint64_t m = 0; m <= full(); ++m) d.push_back(DomainValue::mult(m));
  d.push_back(DomainValue::bot());
  return d;
}

std::vector<DomainValue> KStructure::individuals() const {
  std::vector<DomainValue> d;
  for (unsigned i = 0; i < k; ++i) d.push_back(DomainValue::mult(std::uint64_t{1} << i));
  return d;
}

DomainValue table_lookup(unsigned k, TableOp op, const DomainValue& a, const DomainValue& b) {
  KStructure s(k);
  if (!s.contains(a) || !s.contains(b)) throw EvalError("value outside the domain of M_k");
  switch (op) {
    case TableOp::fed:
      if (a.absurd || b.absurd) return DomainValue::bot();
      return DomainValue::mult(a.atoms | b.atoms);
    case TableOp::cont:
      if (a.absurd) return DomainValue::mult(0);
      if (b.absurd) return DomainValue::bot();
      return (b.atoms & ~a.atoms) == 0 ? DomainValue::mult(0) : DomainValue::bot();
    case TableOp::inter:
      if (a.absurd) return b;
      if (b.absurd) return a;
      return DomainValue::mult(a.atoms & b.atoms);
  }
  throw EvalError("unknown table");
}

namespace {

void statable_walk(const Object& o, unsigned k, Mode mode, Position& pos, StatabilityReport& r) {
  if (r.status != Statability::statable) return;
  auto fail = [&](Statability s, std::string d) {
    r.status = s;
    r.where = pos;
    r.detail = std::move(d);
  };
  switch (o.kind()) {
    case Kind::numeral:
      if (k >= 64 || (o.numeral_value() >> k) != 0)
        fail(Statability::foreign_constant,
             "constant #" + std::to_string(o.numeral_value()) + " is not in M_" + std::to_string(k));
      return;
    case Kind::cstop:
      if (!o.is_absurd()) fail(Statability::foreign_constant, "constant " + render(o) + " is not in M_k");
      return;
    case Kind::vstop:
    case Kind::istop:
    case Kind::empty: return;
    case Kind::fed:
      if (o.level() > 0) return fail(Statability::outside_fragment, "type-n federation");
      break;
    case Kind::cls:
      if (o.level() > 0) return fail(Statability::outside_fragment, "type-n class");
      break;
    case Kind::brace:
    case Kind::antibrace: return fail(Statability::outside_fragment, "bracing");
    case Kind::inter:
      if (mode == Mode::classical)
        return fail(Statability::outside_fragment, "intersection in classical mode");
      break;
    default: break;
  }
  for (std::size_t i = 0; i < o.arity(); ++i) {
    pos.push_back(static_cast<std::uint8_t>(i));
    statable_walk(o.child(i), k, mode, pos, r);
    pos.pop_back();
  }
}

class Evaluator {
 public:
  explicit Evaluator(unsigned k) : s_(k) {}

  DomainValue eval(Object o) {
    for (;;) {
      std::vector<Found> found;
      unsigned best = 0;
      Position pos;
      std::vector<Object> free;
      scan(o, pos, 0, found, best, free);
      if (found.empty()) break;
      for (const auto& f : found) {
        if (f.degree != best) continue;
        o = replace_at(o, f.pos, literal(declassify(f.cls)));
      }
    }
    return direct(o);
  }

 private:
  struct Found {
    Position pos;
    Object cls;
    unsigned degree;
  };

  // Collects ground classes (no index of an enclosing binder inside) and
  // returns the index variables used but not bound below this node.
  void scan(const Object& o, Position& pos, unsigned degree, std::vector<Found>& found,
            unsigned& best, std::vector<Object>& free) {
    if (o.is(Kind::istop)) {
      free.push_back(o.child(0));
      return;
    }
    std::vector<Object> mine;
    unsigned inner = o.is(Kind::cls) ? degree + 1 : degree;
    for (std::size_t i = 0; i < o.arity(); ++i) {
      pos.push_back(static_cast<std::uint8_t>(i));
      scan(o.child(i), pos, inner, found, best, mine);
      pos.pop_back();
    }
    if (o.is(Kind::cls)) {
      const Object& x = o.index().object();
      mine.erase(std::remove(mine.begin(), mine.end(), x), mine.end());
      if (mine.empty()) {
        found.push_back({pos, o, degree});
        best = std::max(best, degree);
      }
    }
    free.insert(free.end(), mine.begin(), mine.end());
  }

  DomainValue declassify(const Object& cls) {
    DomainValue acc = DomainValue::mult(0);
    for (const auto& ind : s_.individuals()) {
      DomainValue v = eval(instantiate_index(cls, literal(ind)));
      acc = table_lookup(s_.k, TableOp::fed, acc, v.is_empty() ? ind : DomainValue::mult(0));
    }
    return acc;
  }

  static unsigned wt(const Object& o) {
    switch (o.kind()) {
      case Kind::cont: return std::max(wt(o.left()), wt(o.right())) + 1;
      case Kind::fed:
      case Kind::inter: return std::max(wt(o.left()), wt(o.right()));
      default: return 0;
    }
  }

  DomainValue fold0(const Object& o) const {
    switch (o.kind()) {
      case Kind::empty: return DomainValue::mult(0);
      case Kind::numeral: return DomainValue::mult(o.numeral_value());
      case Kind::cstop: return DomainValue::bot();
      case Kind::fed: return table_lookup(s_.k, TableOp::fed, fold0(o.left()), fold0(o.right()));
      case Kind::inter:
        return table_lookup(s_.k, TableOp::inter, fold0(o.left()), fold0(o.right()));
      default: throw EvalError(std::string("unexpected ") + kind_name(o.kind()) + " in evaluation");
    }
  }

  // Replaces every weight-1 subobject by its table value.
  Object round(const Object& o) const {
    if (o.is(Kind::cont) && wt(o.left()) == 0 && wt(o.right()) == 0)
      return literal(table_lookup(s_.k, TableOp::cont, fold0(o.left()), fold0(o.right())));
    if (o.is(Kind::cont)) return Object::cont(round(o.left()), round(o.right()));
    if (o.is(Kind::fed)) return Object::fed(0, round(o.left()), round(o.right()));
    if (o.is(Kind::inter)) return Object::inter(round(o.left()), round(o.right()));
    return o;
  }

  DomainValue direct(Object o) const {
    while (wt(o) > 0) o = round(o);
    return fold0(o);
  }

  KStructure s_;
};

void require_statable(const Object& o, unsigned k, Mode mode) {
  auto r = check_statable(o, k, mode);
  if (r.status != Statability::statable)
    throw EvalError("not statable in M_" + std::to_string(k) + ": " + r.detail + " at " +
                    position_string(r.where));
}

// Calls f(assignment) in lexicographic order; stops when f returns false.
template <class F>
void for_each_assignment(const std::vector<Variable>& vars, unsigned k, F f) {
  auto dom = KStructure(k).domain();
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.emplace_back(vars[i], dom[idx[i]]);
    if (!f(a)) return;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++idx[i] < dom.size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (vars.empty()) return;
  }
}

DomainValue eval_under(const Object& o, const Assignment& a, unsigned k) {
  std::vector<SubstitutionSpec> specs;
  for (const auto& [v, val] : a) specs.push_back({v, literal(val)});
  return Evaluator(k).eval(substitute_all(o, specs));
}

}  // namespace

StatabilityReport check_statable(const Object& o, unsigned k, Mode mode) {
  StatabilityReport r;
  Position pos;
  statable_walk(o, k, mode, pos, r);
  return r;
}

bool statable(const Object& o, unsigned k, Mode mode) {
  return check_statable(o, k, mode).status == Statability::statable;
}

DomainValue evaluate(const Object& o, unsigned k, Mode mode) {
  if (!is_closed(o)) throw EvalError("evaluate: object is not closed");
  KStructure s(k);
  require_statable(o, k, mode);
  return Evaluator(k).eval(o);
}

std::string to_string(const Assignment& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += render(a[i].first.object()) + " = " + to_string(a[i].second);
  }
  return s + "}";
}

Classification classify(const Object& o, unsigned k, Mode mode) {
  KStructure s(k);
  require_statable(o, k, mode);
  Classification c;
  for_each_assignment(appearing_variables(o), k, [&](const Assignment& a) {
    DomainValue v = eval_under(o, a, k);
    auto it = std::find_if(c.attainable.begin(), c.attainable.end(),
                           [&](const auto& p) { return p.first == v; });
    if (it == c.attainable.end()) c.attainable.emplace_back(v, a);
    return true;
  });
  std::sort(c.attainable.begin(), c.attainable.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  if (c.attainable.size() == 1) c.valid = c.attainable.front().first;
  return c;
}

std::optional<Countermodel> countermodel(const Object& o, unsigned k_max, Mode mode) {
  auto vars = appearing_variables(o);
  for (unsigned k = 0; k <= k_max; ++k) {
    if (!statable(o, k, mode)) continue;
    std::optional<Countermodel> found;
    for_each_assignment(vars, k, [&](const Assignment& a) {
      DomainValue v = eval_under(o, a, k);
      if (!v.is_empty()) {
        found = Countermodel{k, a, v};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

SweepReport soundness_sweep(const std::vector<std::pair<std::string, Object>>& theorems,
                            const std::vector<unsigned>& ks, Mode mode) {
  SweepReport r;
  for (const auto& [name, t] : theorems) {
    for (unsigned k : ks) {
      if (!statable(t, k, mode)) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      Classification c = classify(t, k, mode);
      for (const auto& [v, w] : c.attainable) {
        if (!v.is_empty()) {
          r.failures.push_back({name, t, k, w, v});
          break;
        }
      }
    }
  }
  return r;
}

std::string render_tables(unsigned k, Mode mode, bool triples) {
  KStructure s(k);
  auto dom = s.domain();
  std::vector<std::pair<std::string, TableOp>> ops = {{"&", TableOp::fed}, {":>", TableOp::cont}};
  if (mode == Mode::extended) ops.push_back({"/\\", TableOp::inter});
  std::ostringstream out;
  if (triples) {
    for (const auto& [name, op] : ops) {
      out << "# " << name << " k=" << k << "\n";
      for (const auto& a : dom)
        for (const auto& b : dom)
          out << "(" << to_string(a) << ", " << to_string(b) << ", "
              << to_string(table_lookup(k, op, a, b)) << ")\n";
    }
    return out.str();
  }
  std::size_t w = 3;
  for (const auto& v : dom) w = std::max(w, to_string(v).size());
  auto cell = [&](const std::string& t) {
    std::string c = t;
    c.resize(w + 1, ' ');
    return c;
  };
  for (std::size_t n = 0; n < ops.size(); ++n) {
    const auto& [name, op] = ops[n];
    if (n) out << "\n";
    out << "k = " << k << "  " << name << "\n";
    std::string line = cell(name) + "|";
    for (const auto& b : dom) line += " " + cell(to_string(b));
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n" << std::string(w + 1, '-') << "+" << std::string(dom.size() * (w + 2), '-') << "\n";
    for (const auto& a : dom) {
      std::string row = cell(to_string(a)) + "|";
      for (const auto& b : dom) row += " " + cell(to_string(table_lookup(k, op, a, b)));
      while (!row.empty() && row.back() == ' ') row.pop_back();
      out << row << "\n";
    }
  }
  return out.str();
}

}  // namespace fedlogic
