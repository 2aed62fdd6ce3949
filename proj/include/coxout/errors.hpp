#pragma once

#include <stdexcept>
#include <string>

namespace coxout {

/// Bad user input: unknown vertices, malformed files, violated preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A verified mathematical fact failed to check out. This is a bug witness,
/// never a user error; the CLI maps it to a distinct exit code.
class LemmaViolation : public std::runtime_error {
public:
    explicit LemmaViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coxout
