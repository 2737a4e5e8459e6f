#pragma once

#include <stdexcept>
#include <string>

namespace coho {

struct CohoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Presentation file is malformed; line is 1-based, 0 if unknown. */
struct ParseError : CohoError {
    int line;
    ParseError(int line_, const std::string& msg)
        : CohoError("parse error at line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct UnsupportedKey : CohoError {
    using CohoError::CohoError;
};

/* A Steenrod/Bockstein table entry needed for an evaluation is missing. */
struct UndefinedAction : CohoError {
    std::string generator;
    std::string op;
    UndefinedAction(const std::string& gen, const std::string& op_)
        : CohoError("undefined " + op_ + " on generator " + gen), generator(gen), op(op_) {}
};

struct CapExceeded : CohoError {
    int degree, cap;
    CapExceeded(int degree_, int cap_)
        : CohoError("degree " + std::to_string(degree_) + " exceeds cap " + std::to_string(cap_)),
          degree(degree_), cap(cap_) {}
};

struct CapTooSmall : CohoError {
    using CohoError::CohoError;
};

struct SearchBudgetExceeded : CohoError {
    using CohoError::CohoError;
};

/* Spectral sequence table errors. */
struct TableValueDead : CohoError {
    using CohoError::CohoError;
};
struct NotACycle : CohoError {
    using CohoError::CohoError;
};

struct DimensionMismatch : CohoError {
    using CohoError::CohoError;
};

}  // namespace coho
