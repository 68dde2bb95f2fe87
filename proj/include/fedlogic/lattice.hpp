#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fedlogic/object.hpp"

namespace fedlogic {

// Absurd, or a multiplicity given as a set of atoms (bit i = individual 2^i).
struct DomainValue {
  bool absurd = false;
  std::uint64_t atoms = 0;

  static DomainValue bot() { return {true, 0}; }
  static DomainValue mult(std::uint64_t m) { return {false, m}; }
  bool is_empty() const { return !absurd && atoms == 0; }

  friend bool operator==(const DomainValue& a, const DomainValue& b) {
    return a.absurd == b.absurd && (a.absurd || a.atoms == b.atoms);
  }
  friend bool operator!=(const DomainValue& a, const DomainValue& b) { return !(a == b); }
  // Enumeration order: O < 1 < 2 < ... < _|_.
  friend bool operator<(const DomainValue& a, const DomainValue& b) {
    if (a.absurd != b.absurd) return b.absurd;
    return !a.absurd && a.atoms < b.atoms;
  }
};

std::string to_string(const DomainValue& v);  // "O", "_|_", "5"
std::optional<DomainValue> value_from_string(const std::string& s);
Object literal(const DomainValue& v);  // O, _|_ or #m

constexpr unsigned kMaxK = 16;

struct KStructure {
  unsigned k;
  explicit KStructure(unsigned k);
  std::uint64_t full() const { return k == 0 ? 0 : ((std::uint64_t{1} << k) - 1); }
  bool contains(const DomainValue& v) const { return v.absurd || (v.atoms & ~full()) == 0; }
  std::vector<DomainValue> domain() const;  // enumeration order
  std::vector<DomainValue> individuals() const;
};

enum class TableOp { fed, cont, inter };

class EvalError : public Error {
 public:
  using Error::Error;
};

DomainValue table_lookup(unsigned k, TableOp op, const DomainValue& a, const DomainValue& b);

enum class Statability { statable, foreign_constant, outside_fragment };

struct StatabilityReport {
  Statability status = Statability::statable;
  Position where;
  std::string detail;
};

StatabilityReport check_statable(const Object& o, unsigned k, Mode mode = Mode::extended);
bool statable(const Object& o, unsigned k, Mode mode = Mode::extended);

// Two-stage valuation: declassification, then direct evaluation by weight.
DomainValue evaluate(const Object& closed, unsigned k, Mode mode = Mode::extended);

using Assignment = std::vector<std::pair<Variable, DomainValue>>;
std::string to_string(const Assignment& a);

struct Classification {
  std::optional<DomainValue> valid;
  std::vector<std::pair<DomainValue, Assignment>> attainable;  // value order, least witness
};

Classification classify(const Object& o, unsigned k, Mode mode = Mode::extended);

struct Countermodel {
  unsigned k;
  Assignment assignment;
  DomainValue value;
};

std::optional<Countermodel> countermodel(const Object& o, unsigned k_max,
                                         Mode mode = Mode::extended);

struct SweepFailure {
  std::string name;
  Object theorem;
  unsigned k;
  Assignment witness;
  DomainValue value;
};

struct SweepReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // not statable at that k
  std::vector<SweepFailure> failures;
  bool ok() const { return failures.empty(); }
};

SweepReport soundness_sweep(const std::vector<std::pair<std::string, Object>>& theorems,
                            const std::vector<unsigned>& ks, Mode mode = Mode::extended);

std::string render_tables(unsigned k, Mode mode, bool triples);

}  // namespace fedlogic
