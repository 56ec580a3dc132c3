// Copyright (c) reachsim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reachsim {

/// Malformed or inconsistent user input (files, preorders, engine preconditions).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error while reading a text format; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A step function was invoked while its guard is false.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A loop invariant failed while invariant checking was enabled.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace reachsim
