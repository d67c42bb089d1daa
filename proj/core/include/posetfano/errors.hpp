#pragma once

#include <stdexcept>
#include <string>

namespace posetfano {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleDetected : Error {
  using Error::Error;
};
struct NotAnIdeal : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct NotFullDimensional : Error {
  using Error::Error;
};
struct SearchBudgetExceeded : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct NoCommonLinearExtension : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace posetfano
