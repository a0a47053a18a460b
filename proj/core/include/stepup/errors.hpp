#pragma once

#include <stdexcept>
#include <string>

namespace stepup {

/// Base class for every error this library throws. Each failure condition
/// gets its own type so callers can discriminate without string matching.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// delta() is undefined on equal inputs.
struct EqualVertices : Error { using Error::Error; };

// Two vertices (or a vertex and a base graph) disagree on n.
struct LengthMismatch : Error { using Error::Error; };

// A size guard was exceeded; raise the guard explicitly if you mean it.
struct TooLarge : Error { using Error::Error; };

// A triple contained the same vertex twice.
struct DuplicateVertex : Error { using Error::Error; };

// A vertex list was not strictly increasing.
struct NotAChain : Error { using Error::Error; };

// Numeric argument outside the function's domain.
struct DomainError : Error { using Error::Error; };

// Internal bookkeeping of a construction trace broke an exact identity.
// This signals an implementation bug, not bad input.
struct InconsistentTrace : Error { using Error::Error; };

// A pattern family that must be non-empty was empty.
struct EmptyFamily : Error { using Error::Error; };

// The parameter formulas left their valid range (l too small, p outside (0,1)).
struct DegenerateParams : Error { using Error::Error; };

// A pattern family does not cover a required order d.
struct CoverageGap : Error { using Error::Error; };

// Step-up arithmetic requires uniformity k >= 3.
struct BadUniformity : Error { using Error::Error; };

// Malformed text input (graph files, certificates, tower expressions).
struct ParseError : Error { using Error::Error; };

} // namespace stepup
