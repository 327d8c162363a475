// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace specabs {

/// Axis-aligned box in R^D together with its affine map onto [-1,1]^D.
class ParamDomain {
public:
    ParamDomain(std::vector<double> lower, std::vector<double> upper);

    [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
    [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
    [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }

    [[nodiscard]] std::vector<double> to_reference(std::span<const double> point) const;
    [[nodiscard]] std::vector<double> from_reference(std::span<const double> ref) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// A real function on the reference cube [-1,1]^D.
///
/// The callable must be deterministic and safe to invoke concurrently.
class ScalarField {
public:
    using Fn = std::function<double(std::span<const double>)>;

    ScalarField(std::size_t dimension, Fn fn);

    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    double operator()(std::span<const double> point) const;
    double operator()(double x) const;  // D = 1 shorthand
    double operator()(double x, double y) const;  // D = 2 shorthand

private:
    std::size_t dim_;
    Fn fn_;
};

/// Wraps a field in a thread-safe table keyed by the exact point coordinates,
/// so repeated evaluations at the same node are served from memory.
[[nodiscard]] ScalarField memoize(ScalarField field);

}  // namespace specabs
