#pragma once

#include <stdexcept>
#include <string>

namespace cyclarc {

/// Invalid user input: bad parameters, violated preconditions on public entry
/// points. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Internal mathematical failure: an exact computation reached a state that
/// should be impossible (overflow, lost precision, broken invariant).
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two independent computations of the same quantity disagree. This is the
/// most important failure the workbench can signal. Maps to CLI exit code 2.
class DisagreementError : public MathError {
public:
    explicit DisagreementError(const std::string& msg) : MathError(msg) {}
};

}  // namespace cyclarc
