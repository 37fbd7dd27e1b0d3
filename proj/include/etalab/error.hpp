#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etalab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input from the user: malformed spec text, unknown suite name,
// out-of-range indices, invalid CLI configuration.  CLI exit code 2.
struct UsageError : Error {
    using Error::Error;
};

// Syntax error in the group-spec language, with the byte offset of the
// offending token.
struct SpecParseError : UsageError {
    SpecParseError(const std::string& what, std::size_t pos)
        : UsageError(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// A mathematically invalid request: quotient by a non-normal subgroup,
// nilpotence class of a non-nilpotent group, unmet check preconditions.
struct DomainError : Error {
    using Error::Error;
};

// A construction would exceed the configured resource limits
// (maximum realized group order).  CLI exit code 3.
struct ResourceError : Error {
    using Error::Error;
};

// A multiplication table violates the group laws (identity, inverses,
// associativity).  Raised on construction and on GTBL load.
struct LawError : Error {
    using Error::Error;
};

// Structural problems in a GTBL file, with the failing layer.
struct GtblError : Error {
    enum class Kind { Header, Shape, Range, Trailing };
    GtblError(Kind k, const std::string& what) : Error(what), kind(k) {}
    Kind kind;
};

// An input that was promised to satisfy an invariant does not
// (e.g. a subgroup list that is not closed under conjugation).
struct ConsistencyError : Error {
    using Error::Error;
};

// A configuration that yields nothing to do (e.g. an empty catalog).
struct ConfigError : UsageError {
    using UsageError::UsageError;
};

}  // namespace etalab
