#pragma once

#include <stdexcept>
#include <string>

namespace noether {

enum class ErrorCode {
    Overflow,
    OutOfRange,
    PGTooSmall,
    DTooSmall,
    EmptyModuli,
    RangeInvalid,
};

/// Base class for all domain errors; carries a stable code for exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& w) : Error(ErrorCode::Overflow, w) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& w) : Error(ErrorCode::OutOfRange, w) {}
};

struct PGTooSmallError : Error {
    explicit PGTooSmallError(const std::string& w) : Error(ErrorCode::PGTooSmall, w) {}
};

struct DTooSmallError : Error {
    explicit DTooSmallError(const std::string& w) : Error(ErrorCode::DTooSmall, w) {}
};

struct EmptyModuliError : Error {
    explicit EmptyModuliError(const std::string& w) : Error(ErrorCode::EmptyModuli, w) {}
};

struct RangeInvalidError : Error {
    explicit RangeInvalidError(const std::string& w) : Error(ErrorCode::RangeInvalid, w) {}
};

} // namespace noether
