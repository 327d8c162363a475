// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace specabs {

/// Invalid configuration: bad sizes, unknown names, mismatched dimensions.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter value outside the domain of a benchmark function.
class DomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Not enough usable samples to fit a convergence rate.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to produce a usable result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace specabs
