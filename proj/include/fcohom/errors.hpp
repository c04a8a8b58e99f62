#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcohom {

// Base for all library errors. code() is a stable machine-readable tag,
// mirrored verbatim into the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Text could not be parsed; offset is the byte position of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error("parse_error", message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Values of different ambient variable counts were mixed.
class ArityMismatch : public Error {
public:
    explicit ArityMismatch(const std::string& message) : Error("nvars_mismatch", message) {}
};

// A mathematical precondition failed (CLI exit code 1 family).
class NotQuasiHomogeneous : public Error {
public:
    explicit NotQuasiHomogeneous(const std::string& message)
        : Error("not_quasi_homogeneous", message) {}
};

class NotIsolatedSingularity : public Error {
public:
    explicit NotIsolatedSingularity(const std::string& message)
        : Error("not_isolated_singularity", message) {}
};

class PreconditionError : public Error {
public:
    PreconditionError(const std::string& code, const std::string& message)
        : Error(code, message) {}
};

} // namespace fcohom
