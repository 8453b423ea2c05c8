#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isodual {

enum class Errc {
    invalid_argument,
    mismatched_ring,
    not_a_unit,
    non_unit_constant_term,
    not_monic,
    division_by_zero,
    not_coprime,
    not_divisible,
    empty_result,
    no_such_root,
    too_large,
    zero_code,
    budget_exceeded,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

// Thrown by minimum-weight searches that stop at their enumeration budget.
// upper_bound() is the smallest weight seen before stopping.
class BudgetExceeded : public Error {
   public:
    BudgetExceeded(const std::string& what, std::uint64_t upper_bound, std::uint64_t enumerated)
        : Error(Errc::budget_exceeded, what), upper_bound_(upper_bound), enumerated_(enumerated) {}
    std::uint64_t upper_bound() const noexcept { return upper_bound_; }
    std::uint64_t enumerated() const noexcept { return enumerated_; }

   private:
    std::uint64_t upper_bound_;
    std::uint64_t enumerated_;
};

}  // namespace isodual
