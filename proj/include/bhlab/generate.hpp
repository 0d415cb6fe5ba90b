#pragma once

// Seeded random inputs for fuzzing: coefficient tensors (Gaussian and sign
// ensembles) and weak-norm test families (Gaussian plus the structured
// candidates that tend to maximize summing expressions).

#include <complex>
#include <numbers>
#include <vector>

#include "bhlab/rng.hpp"
#include "bhlab/tensor.hpp"

namespace bhlab {

enum class Ensemble { Gaussian, Signs };

namespace detail {

inline double draw_scalar(Rng& rng, Ensemble e, double /*tag*/) {
    return e == Ensemble::Gaussian ? rng.gaussian() : rng.rademacher();
}

inline std::complex<double> draw_scalar(Rng& rng, Ensemble e, std::complex<double> /*tag*/) {
    return e == Ensemble::Gaussian ? rng.gaussian_complex() : rng.steinhaus();
}

} // namespace detail

template <class Scalar>
Tensor<Scalar> random_tensor(Rng& rng, std::vector<std::size_t> shape,
                             Ensemble ensemble = Ensemble::Gaussian) {
    std::size_t total = 1;
    for (std::size_t n : shape) total *= n;
    std::vector<Scalar> e(total);
    for (Scalar& x : e) x = detail::draw_scalar(rng, ensemble, Scalar{});
    return Tensor<Scalar>(std::move(shape), std::move(e));
}

} // namespace bhlab
