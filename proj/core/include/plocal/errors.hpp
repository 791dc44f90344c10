#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plocal {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class OrderBoundExceeded : public Error {
 public:
  explicit OrderBoundExceeded(std::size_t bound)
      : Error("group order exceeds bound " + std::to_string(bound)), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OutOfRangePoint : public Error {
 public:
  using Error::Error;
};

class NotPSubgroup : public Error {
 public:
  using Error::Error;
};

class NotCentric : public Error {
 public:
  using Error::Error;
};

class NotAFunctor : public Error {
 public:
  using Error::Error;
};

class UpwardClosureViolated : public Error {
 public:
  using Error::Error;
};

/// Raised when a chain or cochain basis in some degree would exceed the
/// configured size budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t degree, std::size_t count, std::size_t budget)
      : Error("basis of degree " + std::to_string(degree) + " has " + std::to_string(count) +
              " elements, budget is " + std::to_string(budget)),
        degree_(degree),
        count_(count) {}
  std::size_t degree() const noexcept { return degree_; }
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t degree_;
  std::size_t count_;
};

}  // namespace plocal
