#pragma once

#include <cstdint>
#include <stdexcept>

namespace gmdiv {

// Resource-limit violations. The CLI maps every BudgetError to exit code 4.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed the configured bit-size or degree limit.
class GuardExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

// factorize() exhausted its splitting budget before fully factoring its input.
class UnfactoredCofactor : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

// Default cap on the bit size of any evaluated integer.
inline constexpr std::uint64_t kDefaultMaxBits = 1'000'000;

// Default cap on polynomial degrees (cyclotomic construction and the
// root-of-unity surrogate build dense polynomials of this size).
inline constexpr std::uint64_t kDefaultMaxDegree = 10'000;

}  // namespace gmdiv
