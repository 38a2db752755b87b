#ifndef CRITFORGE_ERRORS_HPP
#define CRITFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace critforge {

/// Base class of all library errors. `code()` is a stable machine-readable
/// identifier; the what() string is free-form diagnostic text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Operands live over different variable sets or incompatible shapes.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error("dimension-mismatch", msg) {}
};

/// A value required to be invertible (unit constant term, nonzero linear
/// part, non-degenerate form, ...) is not.
class SingularError : public Error {
public:
    SingularError(std::string code, const std::string& msg) : Error(std::move(code), msg) {}
};

/// An operand violates a precondition that makes the operation undefined,
/// e.g. substituting a series with nonzero constant term.
class DomainError : public Error {
public:
    DomainError(std::string code, const std::string& msg) : Error(std::move(code), msg) {}
};

/// A computation would exceed a configured resource budget. Raise the cap or
/// shrink the input; nothing has been partially computed.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error("resource-limit", msg) {}
};

/// An internal self-check failed. This is a defect in the library, not in
/// the input; callers should treat it as fatal.
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& msg) : Error("contract-violation", msg) {}
};

/// Text input could not be parsed. `offset` is the byte position of the
/// first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error("parse-error", msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace critforge

#endif
