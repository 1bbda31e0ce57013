#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qrev {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

struct ShapeError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct SpecError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NotSingleBlock : Error { using Error::Error; };
struct FlavorError : Error { using Error::Error; };
struct VerificationError : Error { using Error::Error; };
struct PairingError : Error { using Error::Error; };
struct RankProfileError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// A requested reverser does not exist; `criterion()` names the failing
/// classification condition.
class NotConstructible : public Error {
public:
    NotConstructible(std::string criterion, const std::string& detail)
        : Error(detail), criterion_(std::move(criterion)) {}
    const std::string& criterion() const noexcept { return criterion_; }

private:
    std::string criterion_;
};

} // namespace qrev
