#pragma once

#include <stdexcept>

namespace rdslab {

// Typed failures surfaced across module boundaries. The CLI maps each type
// to a machine-parsable error category (see cli.cpp).

struct InfeasibleMoments : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedMoment : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StratumTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDegree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rdslab
