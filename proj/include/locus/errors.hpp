#pragma once

#include <stdexcept>
#include <string>

namespace locus {

/// Caller passed inconsistent or malformed data (ring mismatch, bad syntax,
/// undefined name, ...).  CLI exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero and friends.  CLI exit code 2.
class ArithmeticError : public UsageError {
public:
    explicit ArithmeticError(const std::string& what) : UsageError(what) {}
};

/// A configurable resource bound (S-pair count, total degree, iteration cap)
/// was hit.  Never silent: the computation stops here.  CLI exit code 3.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A property that is supposed to hold unconditionally failed at runtime.
/// CLI exit code 1.
class VerificationFailure : public std::runtime_error {
public:
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace locus
