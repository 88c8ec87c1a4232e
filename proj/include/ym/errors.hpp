#pragma once

#include <stdexcept>
#include <string>

namespace ym {

/* All throwing paths in the library use one of these. Anything else escaping
 * a public entry point is a bug (the CLI maps it to the internal-error exit
 * code). */

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// matrix has the wrong shape for the operation
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// operand shapes disagree with each other
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

struct NotSpecialOrthogonal : Error {
    explicit NotSpecialOrthogonal(const std::string& what) : Error(what) {}
};

// input violates a branch precondition (ties, zeros, signs)
struct DegenerateCase : Error {
    explicit DegenerateCase(const std::string& what) : Error(what) {}
};

// closed form requested for a case it does not cover
struct WrongCase : Error {
    explicit WrongCase(const std::string& what) : Error(what) {}
};

// malformed input document; message names the offending field
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// a dual-evaluation or residual self-check failed inside the solver
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& what) : Error(what) {}
};

} // namespace ym
