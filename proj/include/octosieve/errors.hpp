#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octosieve {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char* kind() const noexcept = 0;
};

class InvalidAlgebraId : public Error {
public:
    explicit InvalidAlgebraId(long long value)
        : Error("algebra id " + std::to_string(value) + " is outside 0..15"), value_(value) {}
    [[nodiscard]] const char* kind() const noexcept override { return "invalid-algebra-id"; }
    [[nodiscard]] long long value() const noexcept { return value_; }

private:
    long long value_;
};

class NotAnEquivalentAlgebra : public Error {
public:
    explicit NotAnEquivalentAlgebra(const std::string& why) : Error(why) {}
    [[nodiscard]] const char* kind() const noexcept override { return "not-an-equivalent-algebra"; }
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("inverse of the zero octonion") {}
    [[nodiscard]] const char* kind() const noexcept override { return "division-by-zero"; }
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] const char* kind() const noexcept override { return "syntax-error"; }
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string name)
        : Error("unbound variable '" + name + "'"), name_(std::move(name)) {}
    [[nodiscard]] const char* kind() const noexcept override { return "unbound-variable"; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class PreconditionViolation : public Error {
public:
    explicit PreconditionViolation(const std::string& why) : Error(why) {}
    [[nodiscard]] const char* kind() const noexcept override { return "precondition-violation"; }
};

}  // namespace octosieve
