#pragma once

#include <stdexcept>
#include <string>

namespace aupc {

// Distinct categories map to distinct CLI exit codes and HTTP statuses.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by vertical_v when the formula is undefined (u at -0.5/0.5/1.5 or c1 == c2).
class LimitCaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericalLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace aupc
