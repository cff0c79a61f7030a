#pragma once

#include <stdexcept>

namespace llva {

// Bad scalar parameters (synthetic profile knobs, annealer settings, config
// overrides). Message names the offending field.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input document (JSON schema, CSV layout). Message carries the
// location/path of the offending element.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally well-formed data that violates an invariant. Message names the
// invariant and the offending indices.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configuration that does not fit the profile's ladders, or a trace that
// does not cover the requested run.
struct ConfigurationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace llva
