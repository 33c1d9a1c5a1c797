#pragma once

#include <stdexcept>
#include <string>

namespace infcomp {

enum class ErrorKind {
    validation,     // malformed input or violated precondition
    certification,  // convergence hypothesis fails for the family
    budget,         // requested accuracy not reachable within limits
    overflow,       // values left binary64 range
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string &what) : Error(ErrorKind::validation, what) {}
};

class CertificationError : public Error {
  public:
    explicit CertificationError(const std::string &what) : Error(ErrorKind::certification, what) {}
};

class BudgetError : public Error {
  public:
    explicit BudgetError(const std::string &what) : Error(ErrorKind::budget, what) {}
};

class OverflowError : public Error {
  public:
    explicit OverflowError(const std::string &what) : Error(ErrorKind::overflow, what) {}
};

} // namespace infcomp
