#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neatflow {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries the 1-based row at which parsing failed.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t row)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row(row) {}
    std::size_t row;
};

struct WrongArity : ParseError {
    using ParseError::ParseError;
};

struct DegenerateSplit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGenome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CyclicGenome : InvalidGenome {
    using InvalidGenome::InvalidGenome;
};

struct InputArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyPopulation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace neatflow
