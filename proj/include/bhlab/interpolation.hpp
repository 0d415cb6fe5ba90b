#pragma once

// Convex-hull decomposition of exponent vectors in reciprocal coordinates,
// and the resulting multiplicative mixed-norm bound.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "bhlab/mixed_norms.hpp"
#include "bhlab/tensor.hpp"

namespace bhlab {

/// Node exponent vector with cached reciprocals (each in (0, 1]).
struct ExponentNode {
    ExponentVector q;
    std::vector<double> reciprocal;

    explicit ExponentNode(ExponentVector exps) : q(std::move(exps)) {
        reciprocal.reserve(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) reciprocal.push_back(1.0 / q[i]);
    }
};

/// Convex weights: theta_k in [0,1], sum = 1 within 1e-12.
struct ConvexWeights {
    std::vector<double> theta;

    explicit ConvexWeights(std::vector<double> th) : theta(std::move(th)) {
        double sum = 0.0;
        for (double& w : theta) {
            if (w < 0.0) {
                if (w < -1e-12) throw std::invalid_argument("convex weights must be nonnegative");
                w = 0.0;
            }
            if (w > 1.0 + 1e-12) throw std::invalid_argument("convex weights must be <= 1");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("convex weights must sum to 1");
    }
};

namespace detail {

// Least squares min ||M x - c||_2 by Householder QR, rows >= cols.
// Returns nullopt on (numerical) rank deficiency.
inline std::optional<std::vector<double>> least_squares(std::vector<std::vector<double>> M,
                                                        std::vector<double> c) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    if (cols == 0 || rows < cols) return std::nullopt;
    for (std::size_t k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < rows; ++i) norm += M[i][k] * M[i][k];
        norm = std::sqrt(norm);
        if (norm < 1e-13) return std::nullopt;
        const double alpha = (M[k][k] >= 0.0) ? -norm : norm;
        std::vector<double> v(rows, 0.0);
        v[k] = M[k][k] - alpha;
        for (std::size_t i = k + 1; i < rows; ++i) v[i] = M[i][k];
        double vtv = 0.0;
        for (std::size_t i = k; i < rows; ++i) vtv += v[i] * v[i];
        if (vtv < 1e-300) continue;
        for (std::size_t j = k; j < cols; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < rows; ++i) dot += v[i] * M[i][j];
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = k; i < rows; ++i) M[i][j] -= f * v[i];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < rows; ++i) dot += v[i] * c[i];
        const double f = 2.0 * dot / vtv;
        for (std::size_t i = k; i < rows; ++i) c[i] -= f * v[i];
    }
    std::vector<double> x(cols, 0.0);
    for (std::size_t k = cols; k-- > 0;) {
        double s = c[k];
        for (std::size_t j = k + 1; j < cols; ++j) s -= M[k][j] * x[j];
        if (std::abs(M[k][k]) < 1e-13) return std::nullopt;
        x[k] = s / M[k][k];
    }
    return x;
}

// Euclidean projection onto the probability simplex.
inline void project_to_simplex(std::vector<double>& v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, tau = 0.0;
    std::size_t rho = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        css += u[i];
        const double t = (css - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) {
            rho = i + 1;
            tau = t;
        }
    }
    (void)rho;
    for (double& x : v) x = std::max(0.0, x - tau);
}

inline double hull_residual(std::span<const std::vector<double>> recips,
                            std::span<const double> target_recip,
                            std::span<const double> theta) {
    double worst = 0.0;
    for (std::size_t i = 0; i < target_recip.size(); ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < theta.size(); ++k) s += theta[k] * recips[k][i];
        worst = std::max(worst, std::abs(s - target_recip[i]));
    }
    return worst;
}

} // namespace detail

/// Weights theta >= 0 with sum 1 placing the target's reciprocal vector in
/// the convex hull of the node reciprocals, within `tol` in the sup norm.
/// Node subsets of size <= m+1 are tried in a fixed order (sizes ascending,
/// subsets lexicographic) and the first feasible solution is returned, so
/// results are deterministic; when several representations exist the choice
/// is that enumeration's, not a canonical one. For more than 12 nodes a
/// projected-subgradient search replaces the enumeration. Returns nullopt
/// when no admissible weights exist.
inline std::optional<ConvexWeights> find_convex_weights(const ExponentVector& target,
                                                        const std::vector<ExponentNode>& nodes,
                                                        double tol = 1e-10) {
    const std::size_t m = target.size();
    const std::size_t n_nodes = nodes.size();
    if (n_nodes == 0) throw std::invalid_argument("need at least one node");
    for (const auto& node : nodes)
        if (node.q.size() != m)
            throw std::invalid_argument("node/target exponent lengths differ");

    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = 1.0 / target[i];
    std::vector<std::vector<double>> recips(n_nodes);
    for (std::size_t k = 0; k < n_nodes; ++k) recips[k] = nodes[k].reciprocal;

    auto accept = [&](std::span<const double> theta_full) -> std::optional<ConvexWeights> {
        std::vector<double> th(theta_full.begin(), theta_full.end());
        double sum = 0.0;
        for (double& w : th) {
            if (w < 0.0) {
                if (w < -1e-9) return std::nullopt;
                w = 0.0;
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9 || sum <= 0.0) return std::nullopt;
        for (double& w : th) w /= sum;
        if (detail::hull_residual(recips, b, th) > tol) return std::nullopt;
        return ConvexWeights(std::move(th));
    };

    if (n_nodes <= 12) {
        std::vector<double> rhs(m + 1);
        for (std::size_t i = 0; i < m; ++i) rhs[i] = b[i];
        rhs[m] = 1.0;
        const std::size_t max_size = std::min(n_nodes, m + 1);
        for (std::size_t sz = 1; sz <= max_size; ++sz) {
            std::optional<ConvexWeights> found;
            detail::for_each_subset(n_nodes, sz, [&](std::span<const std::size_t> subset) {
                if (found) return;
                std::vector<std::vector<double>> M(m + 1, std::vector<double>(sz));
                for (std::size_t j = 0; j < sz; ++j) {
                    for (std::size_t i = 0; i < m; ++i) M[i][j] = recips[subset[j]][i];
                    M[m][j] = 1.0;
                }
                auto x = detail::least_squares(std::move(M), rhs);
                if (!x) return;
                std::vector<double> full(n_nodes, 0.0);
                for (std::size_t j = 0; j < sz; ++j) full[subset[j]] = (*x)[j];
                found = accept(full);
            });
            if (found) return found;
        }
        return std::nullopt;
    }

    // Many nodes: projected subgradient descent on ||A theta - b||_inf.
    std::vector<double> theta(n_nodes, 1.0 / static_cast<double>(n_nodes));
    std::vector<double> best = theta;
    double best_res = detail::hull_residual(recips, b, theta);
    for (int it = 1; it <= 50000 && best_res > 0.25 * tol; ++it) {
        double worst = 0.0;
        std::size_t worst_i = 0;
        double worst_sign = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < n_nodes; ++k) s += theta[k] * recips[k][i];
            const double r = s - b[i];
            if (std::abs(r) > worst) {
                worst = std::abs(r);
                worst_i = i;
                worst_sign = (r >= 0.0) ? 1.0 : -1.0;
            }
        }
        if (worst < best_res) {
            best_res = worst;
            best = theta;
        }
        const double step = 0.5 / std::sqrt(static_cast<double>(it));
        for (std::size_t k = 0; k < n_nodes; ++k)
            theta[k] -= step * worst_sign * recips[k][worst_i];
        detail::project_to_simplex(theta);
    }
    if (auto res = accept(best)) return res;
    return std::nullopt;
}

/// lhs = mixed norm at the target, rhs = product of node norms to powers
/// theta_k. Valid weights force lhs <= rhs. Throws if the weights do not
/// reproduce the target reciprocals within `tol`.
template <class Scalar>
BoundPair interpolation_bound(const Tensor<Scalar>& t, const ExponentVector& target,
                              const std::vector<ExponentNode>& nodes, const ConvexWeights& weights,
                              double tol = 1e-10) {
    if (weights.theta.size() != nodes.size())
        throw std::invalid_argument("one weight per node required");
    std::vector<std::vector<double>> recips(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k].q.size() != target.size())
            throw std::invalid_argument("node/target exponent lengths differ");
        recips[k] = nodes[k].reciprocal;
    }
    std::vector<double> b(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) b[i] = 1.0 / target[i];
    if (detail::hull_residual(recips, b, weights.theta) > tol)
        throw std::invalid_argument("weights do not reproduce the target reciprocals");
    const double lhs = mixed_norm(t, target);
    double rhs = 1.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (weights.theta[k] == 0.0) continue;
        rhs *= std::pow(mixed_norm(t, nodes[k].q), weights.theta[k]);
    }
    return {lhs, rhs};
}

} // namespace bhlab
