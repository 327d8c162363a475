// SPDX-License-Identifier: Apache-2.0
#include "specabs/field.hpp"

#include "specabs/errors.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace specabs {

ParamDomain::ParamDomain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size()) {
        throw ConfigError("ParamDomain: lower and upper must be nonempty and of equal length");
    }
    for (std::size_t d = 0; d < lower_.size(); ++d) {
        if (!(lower_[d] < upper_[d])) {
            throw ConfigError("ParamDomain: lower bound must be below upper bound");
        }
    }
}

std::vector<double> ParamDomain::to_reference(std::span<const double> point) const {
    if (point.size() != dimension()) throw ConfigError("ParamDomain: dimension mismatch");
    std::vector<double> out(point.size());
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d] = (2.0 * point[d] - (lower_[d] + upper_[d])) / (upper_[d] - lower_[d]);
    }
    return out;
}

std::vector<double> ParamDomain::from_reference(std::span<const double> ref) const {
    if (ref.size() != dimension()) throw ConfigError("ParamDomain: dimension mismatch");
    std::vector<double> out(ref.size());
    for (std::size_t d = 0; d < out.size(); ++d) {
        const double half = 0.5 * (upper_[d] - lower_[d]);
        const double mid = 0.5 * (upper_[d] + lower_[d]);
        out[d] = mid + half * ref[d];
    }
    return out;
}

ScalarField::ScalarField(std::size_t dimension, Fn fn) : dim_(dimension), fn_(std::move(fn)) {
    if (dim_ == 0) throw ConfigError("ScalarField: dimension must be positive");
    if (!fn_) throw ConfigError("ScalarField: empty callable");
}

double ScalarField::operator()(std::span<const double> point) const {
    if (point.size() != dim_) throw ConfigError("ScalarField: point dimension mismatch");
    return fn_(point);
}

double ScalarField::operator()(double x) const {
    const double p[1] = {x};
    return (*this)(std::span<const double>(p, 1));
}

double ScalarField::operator()(double x, double y) const {
    const double p[2] = {x, y};
    return (*this)(std::span<const double>(p, 2));
}

namespace {

struct PointKey {
    std::vector<std::uint64_t> bits;
    friend bool operator==(const PointKey&, const PointKey&) = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : k.bits) {
            h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct MemoTable {
    std::mutex mutex;
    std::unordered_map<PointKey, double, PointKeyHash> values;
};

}  // namespace

ScalarField memoize(ScalarField field) {
    auto table = std::make_shared<MemoTable>();
    const std::size_t dim = field.dimension();
    return ScalarField(dim, [table, inner = std::move(field)](std::span<const double> p) {
        PointKey key;
        key.bits.reserve(p.size());
        // -0.0 and 0.0 are the same node.
        for (double v : p) key.bits.push_back(std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v));
        {
            std::lock_guard lock(table->mutex);
            if (auto it = table->values.find(key); it != table->values.end()) return it->second;
        }
        const double value = inner(p);
        std::lock_guard lock(table->mutex);
        table->values.emplace(std::move(key), value);
        return value;
    });
}

}  // namespace specabs
