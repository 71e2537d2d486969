#pragma once

#include <stdexcept>
#include <string>

namespace hofer {

struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OriginNotInterior : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroDirection : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAVertex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotFull : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BoundaryOfInjectivity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StepTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries the worst offending pair of a family that fails the commutation test.
struct NotCommuting : std::runtime_error {
  int first = -1, second = -1;
  double bracket_norm = 0.0;
  NotCommuting(const std::string& msg, int i, int j, double norm)
      : std::runtime_error(msg), first(i), second(j), bracket_norm(norm) {}
};

struct EigensolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hofer
