#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fedlogic/object.hpp"

namespace fedlogic {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Violation {
  Position position;
  std::string message;
};

// Text parsed fine but builds an object the formation rules do not generate.
class FormationError : public Error {
 public:
  explicit FormationError(std::vector<Violation> v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// a..z -> 0..25, A..Z without O and V -> 26..49, then v50, v51, ...
std::string variable_name(unsigned index);
std::optional<unsigned> variable_index(std::string_view name);

Object parse(std::string_view text, Mode mode = Mode::extended);

enum class Style { core, sugar };
std::string render(const Object& o, Style style = Style::core, Mode mode = Mode::extended);

std::vector<Violation> validate_formation(const Object& o, Mode mode = Mode::extended);

// Closed objects only; throws Error on open ones.
unsigned weight(const Object& o);

struct SubobjectInfo {
  Position position;
  Object object;
  unsigned class_degree;
  bool guarded;
};

struct StructureReport {
  std::vector<Variable> free_variables;      // appear somewhere
  std::vector<Variable> guarded_variables;   // have a guarded instance
  std::vector<Variable> indices;             // class indices, outermost first
  bool closed = true;
  std::vector<SubobjectInfo> subobjects;     // preorder
};

StructureReport structural_query(const Object& o);

}  // namespace fedlogic
