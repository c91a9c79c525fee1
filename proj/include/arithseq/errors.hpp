#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arithseq {

/// A request exceeds a configured sieve/enumeration capacity.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Correlation enumeration would exceed the caller's (M, D)-pair budget.
class BudgetError : public CapacityError {
public:
    BudgetError(std::uint64_t required, std::uint64_t caps)
        : CapacityError("correlation budget exceeded: needs " + std::to_string(required) +
                        " (M, D) pairs, cap is " + std::to_string(caps)),
          required_(required) {}

    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

}  // namespace arithseq
