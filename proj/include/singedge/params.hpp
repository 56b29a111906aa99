#pragma once

#include <numbers>
#include <stdexcept>

#include "singedge/rational.hpp"

namespace singedge {

// Holonomy parameter of the singular connection. Strictly inside (0, 1/2);
// the endpoints collapse either the singularity or the spectral gap.
class HolonomyParam {
public:
    explicit HolonomyParam(Scalar alpha) : alpha_(alpha) {
        if (!(Scalar(0) < alpha_ && alpha_ * Scalar(2) < Scalar(1)))
            throw std::invalid_argument("alpha must lie in (0, 1/2)");
    }
    const Scalar& value() const { return alpha_; }

private:
    Scalar alpha_;
};

// |m/alpha + 2|, the per-mode frequency entering every model operator.
inline Scalar mode_frequency(const HolonomyParam& alpha, long long m) {
    return (Scalar(m) / alpha.value() + Scalar(2)).abs();
}

// min over all integers m of |m/alpha + 2| = min{2, (1 - 2 alpha)/alpha},
// attained at m = 0 or m = -1.
inline Scalar gamma_bound(const HolonomyParam& alpha) {
    Scalar at_zero = mode_frequency(alpha, 0);
    Scalar at_minus_one = mode_frequency(alpha, -1);
    return min(at_zero, at_minus_one);
}

// Cone sharpness parameter. The model cone angle is (alpha/kappa) * 2pi, so
// kappa > alpha keeps the angle strictly below 2pi.
class ConeParam {
public:
    ConeParam(Scalar kappa, const HolonomyParam& alpha)
        : kappa_(kappa), alpha_(alpha.value()) {
        if (!(Scalar(0) < kappa_))
            throw std::invalid_argument("kappa must be positive");
        if (!(alpha_ < kappa_))
            throw std::invalid_argument("kappa must exceed alpha");
    }

    const Scalar& value() const { return kappa_; }
    double cone_angle() const {
        return (alpha_ / kappa_).value() * 2.0 * std::numbers::pi;
    }

private:
    Scalar kappa_;
    Scalar alpha_;
};

}  // namespace singedge
