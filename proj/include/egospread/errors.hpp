#pragma once

#include <stdexcept>
#include <string>

namespace egospread {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, config files, region/certificate files).
struct ParseError : Error {
    ParseError(const std::string& what, long line = -1)
        : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what), line_number(line) {}
    long line_number;
};

// Graph order outside the supported range of an operation.
struct UnsupportedSizeError : Error {
    using Error::Error;
};

// Structured file failed validation (version, shape, invariants).
struct FormatError : Error {
    using Error::Error;
};

// Invalid arguments or degenerate geometry (empty cloud, empty subdomain, ...).
struct DomainError : Error {
    using Error::Error;
};

// External SDP solver missing or failed.
struct SolverError : Error {
    using Error::Error;
};

// Solver output cannot be turned into a usable certificate.
struct CertificateError : Error {
    using Error::Error;
};

// A certificate failed the exact per-class inequality check.
struct VerificationError : Error {
    using Error::Error;
};

}  // namespace egospread
