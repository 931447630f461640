// Exception types thrown across the library. Every precondition violation maps
// to one of these so callers (and the CLI) can tell usage errors apart from
// genuine verification failures.

#pragma once

#include <stdexcept>
#include <string>

namespace gf2mul {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduction / division by the zero polynomial.
struct zero_modulus : error {
    zero_modulus() : error("modulus polynomial is zero") {}
};

// Operand degree is at or above the width the operation was asked to run at.
struct operand_too_large : error {
    explicit operand_too_large(const std::string& what) : error(what) {}
};

// Field registry lookup with a name that is not registered.
struct unknown_curve : error {
    explicit unknown_curve(const std::string& name)
        : error("unknown field name: " + name) {}
};

// Hybrid multiplier threshold below the smallest meaningful leaf width.
struct invalid_threshold : error {
    explicit invalid_threshold(const std::string& what) : error(what) {}
};

// An operation that is only defined for power-of-two widths.
struct not_power_of_two : error {
    explicit not_power_of_two(const std::string& what) : error(what) {}
};

// Recursion level count outside the range the formulas are defined for.
struct invalid_level_count : error {
    explicit invalid_level_count(const std::string& what) : error(what) {}
};

// A reduction scheme asked to run on a polynomial shape it does not support.
struct unsupported_polynomial : error {
    explicit unsupported_polynomial(const std::string& what) : error(what) {}
};

// Word width other than the supported table granularities.
struct unsupported_word_width : error {
    explicit unsupported_word_width(const std::string& what) : error(what) {}
};

// Input to a reduction wider than the double-length products it is meant for.
struct input_too_wide : error {
    explicit input_too_wide(const std::string& what) : error(what) {}
};

// Simulation input width does not match the netlist's declared pins.
struct width_mismatch : error {
    explicit width_mismatch(const std::string& what) : error(what) {}
};

// Cost weights must be strictly positive.
struct non_positive_weight : error {
    non_positive_weight() : error("cost weights must be strictly positive") {}
};

}  // namespace gf2mul
