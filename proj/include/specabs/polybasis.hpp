// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace specabs {

enum class Family { Legendre, Chebyshev };
enum class DegreeNorm { Total, Maximal };

[[nodiscard]] std::string_view family_name(Family f) noexcept;
[[nodiscard]] std::string_view norm_name(DegreeNorm n) noexcept;

struct MultiIndex {
    std::vector<int> entries;

    [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
    [[nodiscard]] int operator[](std::size_t d) const { return entries[d]; }
    [[nodiscard]] int total_degree() const noexcept;
    [[nodiscard]] int maximal_degree() const noexcept;
    [[nodiscard]] int degree(DegreeNorm norm) const noexcept;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// P_i(x), normalized so that P_i(1) = 1.
[[nodiscard]] double legendre_eval(int degree, double x);
/// T_i(x).
[[nodiscard]] double chebyshev_eval(int degree, double x);
/// Fills out[0..max_degree] with the family values at x via the three-term recurrence.
void eval_family_upto(Family family, int max_degree, double x, std::span<double> out);

/// ||P_i||^2 under rho = 1/2 on [-1,1], i.e. 1/(2i+1).
[[nodiscard]] double legendre_norm_sq(int degree);
/// Product of the univariate norms (rho = 2^-D).
[[nodiscard]] double legendre_norm_sq(const MultiIndex& idx);

// Pairing functions N x N -> N.
[[nodiscard]] std::uint64_t cantor_pair(std::uint64_t i1, std::uint64_t i2);
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t k);
[[nodiscard]] std::uint64_t rosenberg_pair(std::uint64_t i1, std::uint64_t i2);
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> rosenberg_unpair(std::uint64_t k);

/// Multi-indices of norm <= degree_bound in storage order.
///
/// D = 1: natural order. D = 2: Cantor order (Total) or Rosenberg-Strong order
/// (Maximal); both pairings enumerate the truncated set contiguously, so the
/// storage position of an index equals its pairing value. D > 2: by norm shell,
/// lexicographic within a shell.
[[nodiscard]] std::vector<MultiIndex> graded_indices(std::size_t dimension, DegreeNorm norm,
                                                     int degree_bound);

/// Number of multi-indices of norm <= degree_bound.
[[nodiscard]] std::size_t graded_size(std::size_t dimension, DegreeNorm norm, int degree_bound);

class GradedBasis {
public:
    GradedBasis(Family family, std::size_t dimension, DegreeNorm norm, int degree_bound);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    [[nodiscard]] DegreeNorm norm() const noexcept { return norm_; }
    [[nodiscard]] int degree_bound() const noexcept { return degree_bound_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }

    [[nodiscard]] const MultiIndex& index(std::size_t linear) const { return indices_.at(linear); }
    [[nodiscard]] const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
    /// Linear position of idx, or -1 if idx is outside the truncation set.
    [[nodiscard]] std::ptrdiff_t position(const MultiIndex& idx) const;

    [[nodiscard]] GradedBasis with_family(Family f) const;
    [[nodiscard]] bool same_layout(const GradedBasis& other) const noexcept;

private:
    Family family_;
    std::size_t dim_;
    DegreeNorm norm_;
    int degree_bound_;
    std::vector<MultiIndex> indices_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// prod_d p_{idx_d}(point_d) in the basis family.
[[nodiscard]] double basis_eval(const GradedBasis& basis, const MultiIndex& idx,
                                std::span<const double> point);

/// A graded basis with one coefficient per basis element.
struct CoefficientSet {
    GradedBasis basis;
    std::vector<double> coeffs;

    CoefficientSet(GradedBasis b, std::vector<double> c);

    [[nodiscard]] std::size_t size() const noexcept { return coeffs.size(); }
    /// sum_i coeffs[i] p_i(point); Clenshaw summation in D = 1.
    [[nodiscard]] double evaluate(std::span<const double> point) const;
    [[nodiscard]] double operator()(double x) const;
};

/// Legendre coefficients of the polynomial represented by a Chebyshev set,
/// by re-projection on a Gauss-Legendre tensor rule exact to degree 2 P_d.
[[nodiscard]] CoefficientSet cheb_to_leg(const CoefficientSet& cheb);

}  // namespace specabs
