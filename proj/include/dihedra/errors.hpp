#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dihedra {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised instead of wrapping when a 64-bit intermediate would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when a triple fails the lcm/valuation condition an operation needs.
class ConditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The generation-witness chain needs q1 >= 2 and r1 >= 2.
class DegenerateLabeling : public std::domain_error {
 public:
  DegenerateLabeling(std::int64_t q1, std::int64_t r1)
      : std::domain_error("degenerate labeling: q1=" + std::to_string(q1) +
                          ", r1=" + std::to_string(r1) +
                          " (the witness chain needs both >= 2)"),
        q1_(q1),
        r1_(r1) {}

  std::int64_t q1() const noexcept { return q1_; }
  std::int64_t r1() const noexcept { return r1_; }

 private:
  std::int64_t q1_;
  std::int64_t r1_;
};

}  // namespace dihedra
