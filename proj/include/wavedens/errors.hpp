#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wavedens {

/// Base of all library errors. `kind()` is a stable machine-readable tag
/// (it ends up in the CLI's error JSON), `what()` is for humans.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Configuration-class errors (CLI exit code 2).
struct UnknownFilter : Error {
    explicit UnknownFilter(const std::string& m) : Error("UnknownFilter", m) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("ConfigError", m) {}
};

// Data-class errors (CLI exit code 3).
struct InvalidSampleSize : Error {
    explicit InvalidSampleSize(const std::string& m) : Error("InvalidSampleSize", m) {}
};
struct AllZeroSample : Error {
    explicit AllZeroSample(const std::string& m) : Error("AllZeroSample", m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error("IoError", m) {}
};
struct ParseError : Error {
    ParseError(std::size_t row, const std::string& m)
        : Error("ParseError", m), row(row) {}
    std::size_t row;  // 1-based
};
struct NegativeTime : Error {
    NegativeTime(std::size_t row, const std::string& m)
        : Error("NegativeTime", m), row(row) {}
    std::size_t row;
};
struct BadStatus : Error {
    BadStatus(std::size_t row, const std::string& m)
        : Error("BadStatus", m), row(row) {}
    std::size_t row;
};

// Numerical-class errors (CLI exit code 4).
struct DegenerateWeight : Error {
    explicit DegenerateWeight(const std::string& m) : Error("DegenerateWeight", m) {}
};
struct ZeroMass : Error {
    explicit ZeroMass(const std::string& m) : Error("ZeroMass", m) {}
};
struct NonConvergent : Error {
    explicit NonConvergent(const std::string& m) : Error("NonConvergent", m) {}
};
struct KindMismatch : Error {
    explicit KindMismatch(const std::string& m) : Error("KindMismatch", m) {}
};

}  // namespace wavedens
