// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace regraph {

// Violated precondition at an API boundary.
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input file. `line` is 1-based, 0 when no line applies.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

// A randomized generator exhausted its retry budget.
struct GenerationFailure : std::runtime_error {
    explicit GenerationFailure(const std::string& msg) : std::runtime_error(msg) {}
};

// The request is outside what this implementation can compute.
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace regraph
