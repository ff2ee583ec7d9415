#pragma once

#include <stdexcept>
#include <string>

namespace weakhopf {

/// Two operands live over different ground fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimensions of composed, tensored or compared maps do not agree.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structure, groupoid, coaction, ... file could not be read.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction was asked for outside its hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace weakhopf
