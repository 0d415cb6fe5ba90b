#pragma once

// Shared basics: scalar field tags, error types, compensated summation and
// the power-sum kernels every norm in the library is built on.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bhlab {

inline constexpr std::string_view kVersion = "bhlab 0.1.0";

enum class Field { Real, Complex };

inline std::string_view to_string(Field f) {
    return f == Field::Real ? "real" : "complex";
}

inline Field field_from_string(std::string_view s) {
    if (s == "real") return Field::Real;
    if (s == "complex") return Field::Complex;
    throw std::invalid_argument("unknown field tag: " + std::string(s));
}

/// Thrown when a ratio against a vanishing denominator is requested
/// (e.g. the Bohnenblust-Hille ratio of the zero form).
class ZeroFormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by sigma_n when the Kahane-constant lookup has no value for a
/// needed exponent (including the derived omega exponents).
class MissingKahaneConstant : public std::runtime_error {
public:
    explicit MissingKahaneConstant(double r)
        : std::runtime_error("no Kahane constant supplied for r = " + std::to_string(r)),
          exponent_(r) {}
    double exponent() const noexcept { return exponent_; }

private:
    double exponent_;
};

namespace detail {

// Pairwise (cascade) summation; error grows like log n instead of n.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Flat l_p aggregate of nonnegative values, p > 0 (quasi-norms allowed).
// Scaled by the max entry so large p cannot overflow; zero input gives 0.
inline double lp_norm(std::span<const double> v, double p, std::vector<double>& scratch) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, x);
    if (mx == 0.0) return 0.0;
    if (v.size() == 1) return v[0];
    scratch.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scratch[i] = std::pow(v[i] / mx, p);
    return mx * std::pow(pairwise_sum(scratch), 1.0 / p);
}

inline double lp_norm(std::span<const double> v, double p) {
    std::vector<double> scratch;
    return lp_norm(v, p, scratch);
}

template <class Scalar>
inline double abs_value(const Scalar& x) {
    return std::abs(x);
}

inline bool is_finite_scalar(double x) { return std::isfinite(x); }
inline bool is_finite_scalar(const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// 17 significant digits, trailing zeros kept ("1.6817928305074290").
inline std::string format17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.17g", x);
    std::string s = buf;
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace bhlab
