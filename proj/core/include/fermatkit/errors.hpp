#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fermatkit/natural.hpp"

namespace fermatkit {

// Raised when an argument violates an operation's precondition (zero where a
// positive number is required, an even or square input to the b-scan, a
// malformed decimal string).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a b-scan tests its full candidate budget without reaching a
// qualifying b. The verdict for `cofactor` is unresolved, never a default.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(Natural cofactor, std::uint64_t budget);

    const Natural& cofactor() const noexcept { return cofactor_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    Natural cofactor_;
    std::uint64_t budget_;
};

}  // namespace fermatkit
