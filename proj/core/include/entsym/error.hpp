#pragma once

#include <stdexcept>
#include <string>

namespace entsym {

/// Failure categories. The CLI maps these to process exit codes.
enum class ErrorKind {
  invalid_argument,
  budget_exceeded,
  infeasible,
  missing_data,
  unsupported_dimension,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorKind::budget_exceeded, what) {}
};

class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& what)
      : Error(ErrorKind::infeasible, what) {}
};

class MissingData : public Error {
 public:
  explicit MissingData(const std::string& what)
      : Error(ErrorKind::missing_data, what) {}
};

class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(const std::string& what)
      : Error(ErrorKind::unsupported_dimension, what) {}
};

}  // namespace entsym
