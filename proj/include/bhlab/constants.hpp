#pragma once

// Every named constant and exponent of the toolkit: optimal Khinchine
// constants (Haagerup real / Koenig complex), the crossover point p0, the
// omega/f interpolation weight functions and their closed forms, sigma
// products for block-summing bounds, Bohnenblust-Hille type exponents and
// constants (recursive and closed form), and asymptotic envelopes.

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bhlab/core.hpp"

namespace bhlab {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Gamma function, x > 0. Platform tgamma is well below the 1e-13 relative
/// accuracy target on this range.
inline double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_fn requires x > 0");
    return std::tgamma(x);
}

inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma requires x > 0");
    return std::lgamma(x);
}

/// Crossover point of the real Khinchine constant formulas: the unique
/// p0 in (1, 2) with Gamma((p0+1)/2) = sqrt(pi)/2. Gamma((p+1)/2) is
/// strictly decreasing for p < 1.923 (argument left of Gamma's minimum),
/// so bisection on [1, 1.92] is safe.
inline double p_zero() {
    static const double value = [] {
        const double target = std::sqrt(std::numbers::pi) / 2.0;
        double lo = 1.0, hi = 1.92;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::tgamma((mid + 1.0) / 2.0) > target)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return value;
}

namespace detail {

// log of the optimal Khinchine constant A_p, orientation
// (sum |x_k|^2)^{1/2} <= A_p (E|sum eps_k x_k|^p)^{1/p}.
inline double log_khinchine(double p, Field field) {
    if (!(p >= 1.0) || !(p <= 2.0))
        throw std::invalid_argument("khinchine constant defined for p in [1, 2]");
    if (p == 2.0) return 0.0;
    if (field == Field::Complex) return -std::lgamma((p + 2.0) / 2.0) / p;
    if (p <= p_zero()) return (1.0 / p - 0.5) * std::numbers::ln2;
    return -0.5 * std::numbers::ln2 -
           (std::lgamma((p + 1.0) / 2.0) - 0.5 * std::log(std::numbers::pi)) / p;
}

} // namespace detail

/// Optimal Khinchine constant A_p for Rademacher (real) or Steinhaus
/// (complex) averages, 1 <= p <= 2; A_2 = 1.
inline double khinchine(double p, Field field) { return std::exp(detail::log_khinchine(p, field)); }

namespace detail {

inline void check_omega_args(double x, double y, double q) {
    if (!(q >= 2.0)) throw std::invalid_argument("omega/f require q >= 2");
    if (!(x >= 1.0) || !(x < q) || !(y >= 1.0) || !(y < q))
        throw std::invalid_argument("omega/f require arguments in [1, q)");
}

} // namespace detail

/// omega(x, y) = (q^2 (x+y) - 2 q x y) / (q^2 - x y); symmetric, valued in
/// [max(x,y), q). Evaluated through the complements u = q-x, v = q-y
/// (q^2 - xy = uy + qv, q(x+y) - 2xy = uy + vx), which keeps full precision
/// as the arguments approach q.
inline double omega2(double x, double y, double q) {
    detail::check_omega_args(x, y, q);
    const double u = q - x, v = q - y;
    return q * (u * y + v * x) / (u * y + q * v);
}

/// f(x, y) = (q^2 x - q x y) / (q^2 (x+y) - 2 q x y) = xv / (uy + vx);
/// f(x,y) + f(y,x) = 1.
inline double f2(double x, double y, double q) {
    detail::check_omega_args(x, y, q);
    const double u = q - x, v = q - y;
    return x * v / (u * y + v * x);
}

enum class EvalMode { Recursive, Closed };

/// Combined summing exponent omega_n(r_1,...,r_n). Recursive mode folds
/// omega2 over the list; Closed mode evaluates qR/(1+R), R = sum r_k/(q-r_k).
/// Both agree to 1e-12 relative; a single entry returns itself.
inline double omega_n(std::span<const double> rs, double q, EvalMode mode = EvalMode::Closed) {
    if (rs.empty()) throw std::invalid_argument("omega_n needs at least one exponent");
    if (!(q >= 2.0)) throw std::invalid_argument("omega_n requires q >= 2");
    for (double r : rs)
        if (!(r >= 1.0) || !(r < q))
            throw std::invalid_argument("omega_n requires exponents in [1, q)");
    if (mode == EvalMode::Closed) {
        double R = 0.0;
        for (double r : rs) R += r / (q - r);
        return q * R / (1.0 + R);
    }
    // Fold omega2 over the list, carrying the complement q - omega along
    // multiplicatively (q - omega2(r, w) = q u c / D with u = q - r,
    // c = q - w); recomputing it by subtraction would cancel once omega
    // gets close to q.
    double omega = rs[0];
    double comp = q - rs[0];
    for (std::size_t k = 1; k < rs.size(); ++k) {
        const double u = q - rs[k];
        const double d = u * omega + q * comp;
        omega = q * (u * omega + comp * rs[k]) / d;
        comp = q * u * comp / d;
    }
    return omega;
}

/// Weight vector f_n = (f_n^1,...,f_n^n); components sum to 1.
/// Closed form: f_n^k = r_k / (R (q - r_k)).
inline std::vector<double> f_n(std::span<const double> rs, double q,
                               EvalMode mode = EvalMode::Closed) {
    if (rs.empty()) throw std::invalid_argument("f_n needs at least one exponent");
    if (!(q >= 2.0)) throw std::invalid_argument("f_n requires q >= 2");
    for (double r : rs)
        if (!(r >= 1.0) || !(r < q))
            throw std::invalid_argument("f_n requires exponents in [1, q)");
    const std::size_t n = rs.size();
    std::vector<double> out(n);
    if (mode == EvalMode::Closed) {
        double R = 0.0;
        for (double r : rs) R += r / (q - r);
        for (std::size_t k = 0; k < n; ++k) out[k] = rs[k] / (R * (q - rs[k]));
        return out;
    }
    // Same complement-carrying fold as recursive omega_n; each step scales
    // the existing weights by f(omega, r_k) and appends f(r_k, omega).
    out[0] = 1.0;
    double omega = rs[0];
    double comp = q - rs[0];
    for (std::size_t k = 1; k < n; ++k) {
        const double u = q - rs[k];
        const double d2 = comp * rs[k] + u * omega;
        const double grow = omega * u / d2;
        for (std::size_t j = 0; j < k; ++j) out[j] *= grow;
        out[k] = rs[k] * comp / d2;
        const double d = u * omega + q * comp;
        omega = q * (u * omega + comp * rs[k]) / d;
        comp = q * u * comp / d;
    }
    return out;
}

/// Data for the sigma_n product: cotype exponent q, per-block summing
/// exponents r_k and block sizes, the cotype constant C_q(Y), and a lookup
/// for Kahane constants K_{r,2} (consulted for the r_k and for the derived
/// omega exponents; a missing value throws MissingKahaneConstant).
struct SummingParams {
    double q = 2.0;
    std::vector<double> r_list;
    std::vector<std::size_t> block_sizes;
    double cotype_constant = 1.0;
    std::function<std::optional<double>(double)> kahane;

    /// Scalar-field instance: q = 2, C_2 = 1, K_{r,2} = khinchine(r, field).
    static SummingParams scalar(Field field, std::vector<double> r_list,
                                std::vector<std::size_t> block_sizes) {
        SummingParams p;
        p.r_list = std::move(r_list);
        p.block_sizes = std::move(block_sizes);
        p.kahane = [field](double r) -> std::optional<double> {
            if (!(r >= 1.0) || !(r <= 2.0)) return std::nullopt;
            return khinchine(r, field);
        };
        return p;
    }
};

/// sigma_n for the block-summing bound:
///   sigma_2 = (A_{q,r1}^{|C2|})^{f(r1,r2)} (A_{q,r2}^{|C1|})^{f(r2,r1)},
///   sigma_n = (A_{q,rn}^{|C1|+...+|C_{n-1}|})^{f(rn,w)} (A_{q,w}^{|Cn|})^{f(w,rn)}
///             * sigma_{n-1}^{f(w,rn)},  w = omega_{n-1}(r_1..r_{n-1}),
/// with A_{q,r} = cotype_constant * K_{r,2}.
inline double sigma_n(const SummingParams& params) {
    const std::size_t n = params.r_list.size();
    if (n < 2) throw std::invalid_argument("sigma_n requires n >= 2 blocks");
    if (params.block_sizes.size() != n)
        throw std::invalid_argument("one block size per exponent required");
    if (!(params.q >= 2.0)) throw std::invalid_argument("sigma_n requires q >= 2");
    if (!(params.cotype_constant >= 1.0))
        throw std::invalid_argument("cotype constant must be >= 1");
    for (double r : params.r_list)
        if (!(r >= 1.0) || !(r < params.q))
            throw std::invalid_argument("sigma_n requires r_k in [1, q)");
    if (!params.kahane) throw std::invalid_argument("sigma_n requires a Kahane lookup");
    auto a_const = [&](double r) {
        const auto k = params.kahane(r);
        if (!k) throw MissingKahaneConstant(r);
        return params.cotype_constant * *k;
    };
    const double q = params.q;
    const auto& r = params.r_list;
    const auto& c = params.block_sizes;
    double sigma = std::pow(a_const(r[0]), static_cast<double>(c[1]) * f2(r[0], r[1], q)) *
                   std::pow(a_const(r[1]), static_cast<double>(c[0]) * f2(r[1], r[0], q));
    double omega = omega2(r[0], r[1], q);
    std::size_t covered = c[0] + c[1];
    for (std::size_t j = 2; j < n; ++j) {
        const double fr = f2(r[j], omega, q);
        const double fw = f2(omega, r[j], q);
        sigma = std::pow(a_const(r[j]), static_cast<double>(covered) * fr) *
                std::pow(a_const(omega), static_cast<double>(c[j]) * fw) * std::pow(sigma, fw);
        omega = omega2(r[j], omega, q);
        covered += c[j];
    }
    return sigma;
}

/// Exponent r_N = q r N / (n q + (N - n) r) for upgrading n-wise summability
/// to N-wise summability, 1 <= n < N, 1 <= r <= q.
inline double r_n_exponent(int n, int N, double q, double r) {
    if (n < 1 || N <= n) throw std::invalid_argument("r_n_exponent requires 1 <= n < N");
    if (!(r >= 1.0) || !(r <= q)) throw std::invalid_argument("r_n_exponent requires 1 <= r <= q");
    return q * r * static_cast<double>(N) / (n * q + (N - n) * r);
}

struct ExponentComparison {
    double old_exponent = 0.0; // block-chaining route, N = kn + l
    double new_exponent = 0.0; // direct r_N formula
    bool strict = false;       // old > new beyond 1e-12 relative
};

/// Old exponent q(k+1)r/(q+kr) (l != 0) or qkr/(q+(k-1)r) (l = 0) with
/// N = kn + l, against the direct exponent; strict improvement iff n does
/// not divide N.
inline ExponentComparison exponent_comparison(int n, int N, double q, double r) {
    if (n <= 1 || N <= n) throw std::invalid_argument("exponent_comparison requires 1 < n < N");
    if (!(r >= 1.0) || !(r <= q))
        throw std::invalid_argument("exponent_comparison requires 1 <= r <= q");
    const int k = N / n;
    const int l = N % n;
    ExponentComparison out;
    out.new_exponent = r_n_exponent(n, N, q, r);
    out.old_exponent = (l != 0) ? q * (k + 1) * r / (q + k * r) : q * k * r / (q + (k - 1) * r);
    out.strict = out.old_exponent > out.new_exponent * (1.0 + 1e-12);
    return out;
}

/// Coefficient power-sum exponent 2tm / (2 + (m-1)t); equals t at m = 1,
/// increases to 2 as m grows.
inline double bh_exponent(int m, double t) {
    if (m < 1) throw std::invalid_argument("bh_exponent requires m >= 1");
    if (!(t >= 1.0) || !(t < 2.0)) throw std::invalid_argument("bh_exponent requires t in [1, 2)");
    return 2.0 * t * m / (2.0 + (m - 1) * t);
}

namespace detail {

inline void check_mt(int m, double t) {
    if (m < 1) throw std::invalid_argument("constant requires m >= 1");
    if (!(t >= 1.0) || !(t < 2.0)) throw std::invalid_argument("constant requires t in [1, 2)");
}

} // namespace detail

/// Halving recursion for C_{m,t}: C_1 = 1,
///   even m: (A_{2mt/((m-2)t+4)})^{m/2} C_{m/2},
///   odd  m: ((A_{2(m-1)t/((m-3)t+4)})^{(m+1)/2} C_{(m-1)/2})^{(m-1)/2m}
///           ((A_{2(m+1)t/((m-1)t+4)})^{(m-1)/2} C_{(m+1)/2})^{(m+1)/2m}.
inline double c_constant_recursive(int m, double t, Field field) {
    detail::check_mt(m, t);
    if (m == 1) return 1.0;
    const double md = static_cast<double>(m);
    if (m % 2 == 0) {
        const double sub = 2.0 * md * t / ((md - 2.0) * t + 4.0);
        return std::pow(khinchine(sub, field), md / 2.0) * c_constant_recursive(m / 2, t, field);
    }
    const double s_lo = 2.0 * (md - 1.0) * t / ((md - 3.0) * t + 4.0);
    const double s_hi = 2.0 * (md + 1.0) * t / ((md - 1.0) * t + 4.0);
    const double lo = std::pow(khinchine(s_lo, field), (md + 1.0) / 2.0) *
                      c_constant_recursive((m - 1) / 2, t, field);
    const double hi = std::pow(khinchine(s_hi, field), (md - 1.0) / 2.0) *
                      c_constant_recursive((m + 1) / 2, t, field);
    return std::pow(lo, (md - 1.0) / (2.0 * md)) * std::pow(hi, (md + 1.0) / (2.0 * md));
}

/// Closed form C_{m,t} = prod_{k=1}^{m-1} A_{2tk/(2+(k-1)t)}, evaluated in
/// log space. This is the value the reports use.
inline double c_constant_closed(int m, double t, Field field) {
    detail::check_mt(m, t);
    double log_c = 0.0;
    for (int k = 1; k < m; ++k)
        log_c += detail::log_khinchine(bh_exponent(k, t), field);
    return std::exp(log_c);
}

/// Largest integer m such that every factor of the closed form still uses
/// the 2-power branch of the real Khinchine constant:
/// floor((2 p0 + 2t(1 - p0)) / (t (2 - p0))).
inline int m0_threshold(double t) {
    if (!(t >= 1.0) || !(t < 2.0)) throw std::invalid_argument("m0_threshold requires t in [1, 2)");
    const double p0 = p_zero();
    return static_cast<int>(std::floor((2.0 * p0 + 2.0 * t * (1.0 - p0)) / (t * (2.0 - p0))));
}

/// The closed form evaluated through its explicit expressions rather than
/// the product of Khinchine constants: a Gamma product for the complex
/// field, and for the real field a piecewise formula (pure power of 2 up to
/// the m0 threshold, a two-product expression beyond). Kept verbatim as a
/// cross-check for c_constant_closed; for t > p0 (where m0 = 1) the real
/// expression exceeds the product form by exactly sqrt(2)^{m-1}.
inline double c_constant_explicit(int m, double t, Field field) {
    detail::check_mt(m, t);
    if (m == 1) return 1.0;
    if (field == Field::Complex) {
        double log_c = 0.0;
        for (int j = 2; j <= m; ++j) {
            const double d = 2.0 + t * (j - 2.0);
            log_c += -(d / (2.0 * t * (j - 1.0))) * std::lgamma(2.0 - (2.0 - t) / d);
        }
        return std::exp(log_c);
    }
    const double p0 = p_zero();
    const double threshold = (2.0 * p0 + 2.0 * t * (1.0 - p0)) / (t * (2.0 - p0));
    if (static_cast<double>(m) <= threshold) {
        double harmonic = 0.0;
        for (int j = 1; j <= m - 1; ++j) harmonic += 1.0 / static_cast<double>(j);
        return std::exp2((1.0 / t - 0.5) * harmonic);
    }
    const int m0 = m0_threshold(t);
    double log_c = 0.0;
    for (int j = 2; j <= m0; ++j) {
        const double num = t + 2.0 * m0 - 2.0 * t * m0 + m * t + j * t * m0 - j * m * t - 2.0;
        log_c += num / (2.0 * t * (m0 - 1.0) * (j - 1.0)) * std::numbers::ln2;
    }
    for (int j = m0 + 1; j <= m; ++j) {
        const double d = 2.0 + t * (j - 2.0);
        const double log_base =
            std::lgamma(1.5 - (2.0 - t) / d) - 0.5 * std::log(std::numbers::pi);
        log_c += (t * (j - 2.0) + 2.0) / (2.0 * t - 2.0 * j * t) * log_base;
    }
    return std::exp(log_c);
}

struct AsymptoticEnvelope {
    double exponent = 0.0;             // growth exponent of m^e
    double kappa = 0.0;                // max_m C_closed(m,t)/m^e over the scan
    double last_decade_increase = 0.0; // relative running-max growth over (m_max/10, m_max]
};

/// Scan C_closed(m,t)/m^e for m <= m_max against the predicted growth
/// exponent e ((gamma-1)(t-2)/(2t) complex, (gamma-2+ln2)(t-2)/(2t) real);
/// boundedness shows as a stabilizing running max.
inline AsymptoticEnvelope asymptotic_envelope(double t, Field field, int m_max) {
    if (!(t >= 1.0) || !(t < 2.0))
        throw std::invalid_argument("asymptotic_envelope requires t in [1, 2)");
    if (m_max < 10) throw std::invalid_argument("asymptotic_envelope requires m_max >= 10");
    AsymptoticEnvelope env;
    env.exponent = (field == Field::Complex)
                       ? (kEulerGamma - 1.0) * (t - 2.0) / (2.0 * t)
                       : (kEulerGamma - 2.0 + std::numbers::ln2) * (t - 2.0) / (2.0 * t);
    double log_c = 0.0;
    double run_max = 1.0; // m = 1 term
    double run_max_mid = 1.0;
    const int mid = m_max / 10;
    for (int m = 2; m <= m_max; ++m) {
        log_c += detail::log_khinchine(bh_exponent(m - 1, t), field);
        const double ratio = std::exp(log_c - env.exponent * std::log(static_cast<double>(m)));
        run_max = std::max(run_max, ratio);
        if (m == mid) run_max_mid = run_max;
    }
    env.kappa = run_max;
    env.last_decade_increase = (run_max - run_max_mid) / run_max_mid;
    return env;
}

} // namespace bhlab
