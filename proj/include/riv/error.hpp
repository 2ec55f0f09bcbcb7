#pragma once

#include <stdexcept>
#include <string>

namespace riv {

// Error taxonomy shared by the C++ core and the C API (stable codes).
enum class ErrorCode : int {
    ok = 0,
    length_mismatch = 1,
    non_binary_instrument = 2,
    degenerate_arm = 3,
    non_finite_value = 4,
    too_few_rows = 5,
    zero_first_stage = 6,
    zero_variance = 7,
    zero_outcome_variance = 8,
    enumeration_too_large = 9,
    grid_too_coarse = 10,
    rank_deficient = 11,
    invalid_gamma = 12,
    unidentified = 13,
    invalid_argument = 14,
    internal = 15,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace riv
