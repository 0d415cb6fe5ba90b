#pragma once

// Nested mixed-norm arithmetic on dense tensors: l_{p_1,...,p_m} norms,
// block-grouped variants, and the Minkowski / Blei inequalities as
// computable (lhs, rhs) pairs.

#include <cmath>
#include <span>
#include <vector>

#include "bhlab/core.hpp"
#include "bhlab/tensor.hpp"

namespace bhlab {

struct BoundPair {
    double lhs = 0.0;
    double rhs = 0.0;
};

namespace detail {

// Nested power norm engine over |entries|, innermost level = last axis.
// Exponents only need to be > 0, so quasi-norm ranges are accepted here;
// public entry points enforce their own ranges. Consumes `work` in place.
inline double nested_power_norm(std::span<const std::size_t> shape, std::vector<double>& work,
                                std::span<const double> exps) {
    bool all_equal = true;
    for (double p : exps)
        if (p != exps[0]) {
            all_equal = false;
            break;
        }
    std::vector<double> scratch;
    // Equal exponents collapse to the flat norm of the entry list; computing
    // it in one pass keeps that identity exact.
    if (all_equal) return lp_norm(work, exps[0], scratch);
    std::size_t count = work.size();
    for (std::size_t k = shape.size(); k-- > 0;) {
        const std::size_t nk = shape[k];
        count /= nk;
        for (std::size_t i = 0; i < count; ++i)
            work[i] = lp_norm({work.data() + i * nk, nk}, exps[k], scratch);
    }
    return work[0];
}

template <class Scalar>
std::vector<double> abs_entries(const Tensor<Scalar>& t) {
    std::vector<double> a(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) a[i] = abs_value(t[i]);
    return a;
}

// Visit all k-subsets of {0,...,m-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        fn(std::span<const std::size_t>(s));
        std::size_t i = k;
        while (i-- > 0) {
            if (s[i] < m - (k - i)) {
                ++s[i];
                for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace detail

/// Nested norm (sum_{i_1} (... (sum_{i_m} |a_i|^{p_m})^{p_{m-1}/p_m} ...))^{1/p_1}.
template <class Scalar>
double mixed_norm(const Tensor<Scalar>& t, const ExponentVector& p) {
    if (p.size() != t.order())
        throw std::invalid_argument("exponent vector length must equal tensor order");
    std::vector<double> work = detail::abs_entries(t);
    return detail::nested_power_norm(t.shape(), work, p.values());
}

/// Nested norm with each block contributing one flat aggregation over its
/// whole multi-index, outer blocks first. Singleton blocks in natural order
/// reduce to mixed_norm.
template <class Scalar>
double block_mixed_norm(const Tensor<Scalar>& t, const OrderedPartition& part) {
    if (part.order() != t.order())
        throw std::invalid_argument("partition does not cover the tensor order");
    // Group axes block-by-block, then treat each block as one super-axis.
    std::vector<std::size_t> perm;
    std::vector<std::size_t> super_shape;
    perm.reserve(t.order());
    for (const auto& block : part.blocks()) {
        std::size_t extent = 1;
        for (std::size_t ax : block) {
            perm.push_back(ax);
            extent *= t.extent(ax);
        }
        super_shape.push_back(extent);
    }
    Tensor<Scalar> tp = permute_axes(t, perm);
    std::vector<double> work = detail::abs_entries(tp);
    return detail::nested_power_norm(super_shape, work, part.exponents());
}

/// Both sides of the two-index Minkowski inequality for 0 < p < q:
/// lhs = (sum_i (sum_j |a_ij|^p)^{q/p})^{1/q},
/// rhs = (sum_j (sum_i |a_ij|^q)^{p/q})^{1/p};  lhs <= rhs.
template <class Scalar>
BoundPair minkowski_gap(const Tensor<Scalar>& t, double p, double q) {
    if (t.order() != 2) throw std::invalid_argument("minkowski_gap needs an order-2 tensor");
    if (!(p > 0.0) || !(p < q) || !std::isfinite(q))
        throw std::invalid_argument("minkowski_gap requires 0 < p < q");
    const double exps_lhs[2] = {q, p};
    std::vector<double> work = detail::abs_entries(t);
    const double lhs = detail::nested_power_norm(t.shape(), work, exps_lhs);
    const std::size_t swap[2] = {1, 0};
    Tensor<Scalar> tt = permute_axes(t, swap);
    const double exps_rhs[2] = {p, q};
    work = detail::abs_entries(tt);
    const double rhs = detail::nested_power_norm(tt.shape(), work, exps_rhs);
    return {lhs, rhs};
}

/// Blei interpolation exponent rho = m*s*q / (k*q + (m-k)*s).
inline double blei_rho(int m, int k, double s, double q) {
    if (m < 1 || k < 1 || k > m) throw std::invalid_argument("blei_rho requires 1 <= k <= m");
    if (!(s >= 1.0) || !(s <= q) || !std::isfinite(q))
        throw std::invalid_argument("blei_rho requires 1 <= s <= q");
    return static_cast<double>(m) * s * q / (k * q + (m - k) * s);
}

/// Both sides of the Blei-type inequality: flat l_rho norm of the entries vs
/// the geometric mean over all k-subsets S of the (S, S-complement) block
/// norms with exponents (s, q).
template <class Scalar>
BoundPair blei_bound(const Tensor<Scalar>& t, int k, double s, double q) {
    const int m = static_cast<int>(t.order());
    const double rho = blei_rho(m, k, s, q); // validates ranges
    std::vector<double> work = detail::abs_entries(t);
    std::vector<double> scratch;
    const double lhs = detail::lp_norm(work, rho, scratch);
    if (k == m) {
        // Complement blocks are empty; the single factor is the flat l_s norm.
        return {lhs, detail::lp_norm(work, s, scratch)};
    }
    const double inv_count =
        1.0 / static_cast<double>(detail::binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    double rhs = 1.0;
    detail::for_each_subset(static_cast<std::size_t>(m), static_cast<std::size_t>(k),
                            [&](std::span<const std::size_t> subset) {
                                std::vector<std::size_t> inner;
                                std::size_t pos = 0;
                                for (std::size_t ax = 0; ax < static_cast<std::size_t>(m); ++ax) {
                                    if (pos < subset.size() && subset[pos] == ax)
                                        ++pos;
                                    else
                                        inner.push_back(ax);
                                }
                                OrderedPartition part(
                                    {std::vector<std::size_t>(subset.begin(), subset.end()), inner},
                                    {s, q});
                                rhs *= std::pow(block_mixed_norm(t, part), inv_count);
                            });
    return {lhs, rhs};
}

} // namespace bhlab
