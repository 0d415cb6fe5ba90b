#pragma once

// Test-only helpers and independent oracles. The oracles rebuild each
// quantity from its definition with plain nested loops, deliberately not
// sharing code with the library implementations they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "bhlab/forms_lab.hpp"
#include "bhlab/tensor.hpp"

namespace bhtest {

inline double rel_err(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got - want) / std::abs(want);
}

// Nested mixed norm straight from the definition: reduce the OUTERMOST axis
// by recursion (the library folds innermost-first).
template <class Scalar>
double mixed_norm_oracle(const bhlab::Tensor<Scalar>& t, std::span<const double> p) {
    struct Rec {
        const bhlab::Tensor<Scalar>& t;
        std::span<const double> p;
        std::vector<std::size_t> idx;

        double run(std::size_t axis) {
            if (axis == t.order()) return std::abs(t.at(idx));
            double sum = 0.0;
            for (std::size_t i = 0; i < t.extent(axis); ++i) {
                idx[axis] = i;
                sum += std::pow(run(axis + 1), p[axis]);
            }
            return std::pow(sum, 1.0 / p[axis]);
        }
    };
    Rec rec{t, p, std::vector<std::size_t>(t.order(), 0)};
    return rec.run(0);
}

// Block mixed norm from the definition: explicit sums over block
// multi-indices, outermost block first.
template <class Scalar>
double block_norm_oracle(const bhlab::Tensor<Scalar>& t,
                         const std::vector<std::vector<std::size_t>>& blocks,
                         std::span<const double> exps) {
    struct Rec {
        const bhlab::Tensor<Scalar>& t;
        const std::vector<std::vector<std::size_t>>& blocks;
        std::span<const double> exps;
        std::vector<std::size_t> idx;

        double sum_block(std::size_t b, std::size_t pos) {
            const auto& axes = blocks[b];
            if (pos == axes.size()) {
                const double inner = (b + 1 == blocks.size()) ? std::abs(t.at(idx))
                                                              : std::pow(sum_block(b + 1, 0),
                                                                         1.0 / exps[b + 1]);
                return std::pow(inner, exps[b]);
            }
            double sum = 0.0;
            for (std::size_t i = 0; i < t.extent(axes[pos]); ++i) {
                idx[axes[pos]] = i;
                sum += sum_block(b, pos + 1);
            }
            return sum;
        }
    };
    Rec rec{t, blocks, exps, std::vector<std::size_t>(t.order(), 0)};
    return std::pow(rec.sum_block(0, 0), 1.0 / exps[0]);
}

// Exact sup norm of a real form by enumerating every sign pattern of every
// slot (no analytic slot, no symmetry reduction).
inline double sup_norm_oracle(const bhlab::MultilinearForm<double>& u) {
    const auto& a = u.coefficients();
    const std::size_t m = a.order();
    std::size_t total_bits = 0;
    for (std::size_t k = 0; k < m; ++k) total_bits += a.extent(k);
    std::vector<std::vector<double>> args(m);
    double best = 0.0;
    for (std::uint64_t pat = 0; pat < (1ull << total_bits); ++pat) {
        std::uint64_t rest = pat;
        for (std::size_t k = 0; k < m; ++k) {
            args[k].resize(a.extent(k));
            for (std::size_t i = 0; i < a.extent(k); ++i) {
                args[k][i] = (rest & 1ull) ? -1.0 : 1.0;
                rest >>= 1;
            }
        }
        best = std::max(best,
                        std::abs(bhlab::evaluate(u, std::span<const std::vector<double>>(args))));
    }
    return best;
}

// Weak l1 norm by brute force over a fine net of extreme-ish dual
// directions: random sparse-signed l1 vectors plus the coordinate
// functionals themselves.
template <class Scalar>
double weak_l1_oracle(const bhlab::VectorFamily<Scalar>& fam, int directions,
                      std::uint64_t seed) {
    bhlab::Rng rng(seed);
    const std::size_t d = fam.dim();
    auto value_at = [&](const std::vector<std::complex<double>>& phi) {
        double total = 0.0;
        for (std::size_t i = 0; i < fam.count(); ++i) {
            std::complex<double> dot{};
            for (std::size_t j = 0; j < d; ++j)
                dot += phi[j] * std::complex<double>(fam.vec(i)[j]);
            total += std::abs(dot);
        }
        return total;
    };
    double best = 0.0;
    std::vector<std::complex<double>> phi(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::fill(phi.begin(), phi.end(), std::complex<double>{});
        phi[j] = 1.0;
        best = std::max(best, value_at(phi));
    }
    for (int it = 0; it < directions; ++it) {
        double l1 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            if constexpr (bhlab::field_of<Scalar>::value == bhlab::Field::Real)
                phi[j] = rng.gaussian();
            else
                phi[j] = std::complex<double>(rng.gaussian(), rng.gaussian());
            l1 += std::abs(phi[j]);
        }
        if (l1 == 0.0) continue;
        for (auto& v : phi) v /= l1;
        best = std::max(best, value_at(phi));
    }
    return best;
}

} // namespace bhtest
