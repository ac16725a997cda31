#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace koenig {

/// Malformed textual or JSON input. Carries the byte offset of the problem
/// when one is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A step budget or a documented size limit was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input violating its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiplier applied to every step budget; read once from KOENIG_BUDGET.
/// Values that do not parse as a positive number leave the scale at 1.
double budget_scale();

std::uint64_t scaled_budget(std::uint64_t base);

}  // namespace koenig
