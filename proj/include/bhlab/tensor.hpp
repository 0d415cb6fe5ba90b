#pragma once

// Dense row-major tensors over R or C plus the index bookkeeping types used
// by the mixed-norm machinery: exponent vectors and ordered axis partitions.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "bhlab/core.hpp"

namespace bhlab {

template <class Scalar>
struct field_of;

template <>
struct field_of<double> {
    static constexpr Field value = Field::Real;
};

template <>
struct field_of<std::complex<double>> {
    static constexpr Field value = Field::Complex;
};

/// Dense order-m tensor, row-major (last index fastest). Entries must be
/// finite, every extent >= 1, m >= 1.
template <class Scalar>
class Tensor {
public:
    using value_type = Scalar;

    Tensor(std::vector<std::size_t> shape, std::vector<Scalar> entries)
        : shape_(std::move(shape)), data_(std::move(entries)) {
        if (shape_.empty()) throw std::invalid_argument("tensor order must be >= 1");
        std::size_t total = 1;
        for (std::size_t n : shape_) {
            if (n == 0) throw std::invalid_argument("tensor extents must be >= 1");
            total *= n;
        }
        if (data_.size() != total)
            throw std::invalid_argument("entry count does not match shape");
        for (const Scalar& x : data_)
            if (!detail::is_finite_scalar(x))
                throw std::invalid_argument("tensor entries must be finite");
    }

    static Tensor zeros(std::vector<std::size_t> shape) {
        std::size_t total = 1;
        for (std::size_t n : shape) total *= n;
        return Tensor(std::move(shape), std::vector<Scalar>(total, Scalar{}));
    }

    std::size_t order() const noexcept { return shape_.size(); }
    std::span<const std::size_t> shape() const noexcept { return shape_; }
    std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
    std::size_t size() const noexcept { return data_.size(); }
    std::span<const Scalar> entries() const noexcept { return data_; }
    std::span<Scalar> entries() noexcept { return data_; }
    static constexpr Field field() noexcept { return field_of<Scalar>::value; }

    const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
    Scalar& operator[](std::size_t flat) { return data_[flat]; }

    std::size_t offset(std::span<const std::size_t> idx) const {
        std::size_t off = 0;
        for (std::size_t k = 0; k < shape_.size(); ++k) off = off * shape_[k] + idx[k];
        return off;
    }

    const Scalar& at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }
    Scalar& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }

private:
    std::vector<std::size_t> shape_;
    std::vector<Scalar> data_;
};

/// n x n identity matrix as an order-2 tensor.
template <class Scalar>
Tensor<Scalar> identity_matrix(std::size_t n) {
    std::vector<Scalar> e(n * n, Scalar{});
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar{1};
    return Tensor<Scalar>({n, n}, std::move(e));
}

template <class Scalar>
Tensor<Scalar> scaled(const Tensor<Scalar>& t, Scalar c) {
    std::vector<Scalar> e(t.entries().begin(), t.entries().end());
    for (Scalar& x : e) x *= c;
    return Tensor<Scalar>(std::vector<std::size_t>(t.shape().begin(), t.shape().end()),
                          std::move(e));
}

namespace detail {

// Advance a row-major multi-index; returns false after the last one.
inline bool next_index(std::span<const std::size_t> shape, std::span<std::size_t> idx) {
    for (std::size_t k = shape.size(); k-- > 0;) {
        if (++idx[k] < shape[k]) return true;
        idx[k] = 0;
    }
    return false;
}

} // namespace detail

/// Axis-permuted copy: out(i_0,...,i_{m-1}) = in(i_{perm^{-1}}), i.e. axis j
/// of the result is axis perm[j] of the input.
template <class Scalar>
Tensor<Scalar> permute_axes(const Tensor<Scalar>& t, std::span<const std::size_t> perm) {
    const std::size_t m = t.order();
    if (perm.size() != m) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen(m, false);
    for (std::size_t ax : perm) {
        if (ax >= m || seen[ax]) throw std::invalid_argument("invalid axis permutation");
        seen[ax] = true;
    }
    std::vector<std::size_t> new_shape(m);
    for (std::size_t j = 0; j < m; ++j) new_shape[j] = t.extent(perm[j]);
    std::vector<Scalar> out(t.size());
    std::vector<std::size_t> idx(m, 0), src(m, 0);
    std::size_t flat = 0;
    do {
        for (std::size_t j = 0; j < m; ++j) src[perm[j]] = idx[j];
        out[flat++] = t.at(src);
    } while (detail::next_index(new_shape, idx));
    return Tensor<Scalar>(std::move(new_shape), std::move(out));
}

/// Exponent vector (p_1,...,p_m), every component finite and >= 1.
class ExponentVector {
public:
    ExponentVector(std::initializer_list<double> p) : ExponentVector(std::vector<double>(p)) {}

    explicit ExponentVector(std::vector<double> p) : values_(std::move(p)) {
        if (values_.empty()) throw std::invalid_argument("exponent vector must be nonempty");
        for (double v : values_)
            if (!(v >= 1.0) || !std::isfinite(v))
                throw std::invalid_argument("exponents must be finite and >= 1");
    }

    static ExponentVector uniform(std::size_t m, double p) {
        return ExponentVector(std::vector<double>(m, p));
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

/// Ordered disjoint blocks covering axes {0,...,m-1}, one exponent per block
/// (outermost block first).
class OrderedPartition {
public:
    OrderedPartition(std::vector<std::vector<std::size_t>> blocks, std::vector<double> exponents)
        : blocks_(std::move(blocks)), exponents_(std::move(exponents)) {
        if (blocks_.empty()) throw std::invalid_argument("partition must have >= 1 block");
        if (blocks_.size() != exponents_.size())
            throw std::invalid_argument("one exponent required per block");
        for (double q : exponents_)
            if (!(q >= 1.0) || !std::isfinite(q))
                throw std::invalid_argument("block exponents must be finite and >= 1");
        std::size_t m = 0;
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("blocks must be non-empty");
            m += b.size();
        }
        std::vector<bool> seen(m, false);
        for (const auto& b : blocks_)
            for (std::size_t ax : b) {
                if (ax >= m || seen[ax])
                    throw std::invalid_argument("blocks must disjointly cover the axes");
                seen[ax] = true;
            }
        order_ = m;
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::span<const double> exponents() const noexcept { return exponents_; }

    /// Singleton blocks ({0},{1},...) in natural order.
    static OrderedPartition singletons(std::span<const double> exponents) {
        std::vector<std::vector<std::size_t>> blocks(exponents.size());
        for (std::size_t k = 0; k < exponents.size(); ++k) blocks[k] = {k};
        return OrderedPartition(std::move(blocks),
                                std::vector<double>(exponents.begin(), exponents.end()));
    }

private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<double> exponents_;
    std::size_t order_ = 0;
};

} // namespace bhlab
