#pragma once

#include <vector>

#include "singedge/params.hpp"

namespace singedge {

// Bessel order attached to one boundary mode of the model operator.
struct ModeData {
    long long m = 0;
    Scalar lambda;  // |m/alpha + 2|
    Scalar nu;      // kappa * lambda
};

// Open interval of weights where the model operator is invertible. The
// endpoints are the borderline weights where a kernel or cokernel element
// first appears.
struct WeightWindow {
    Scalar delta_lo;  // -kappa*gamma + 1/2
    Scalar delta_hi;  //  kappa*gamma + 1/2

    bool contains(const Scalar& delta) const {
        return delta_lo < delta && delta < delta_hi;
    }
    bool is_endpoint(const Scalar& delta) const {
        return delta == delta_lo || delta == delta_hi;
    }
};

// Weight-wise triviality of kernel and cokernel for a single Bessel order.
// Both conditions are non-strict: the borderline weight itself still kills
// the would-be kernel element, which is why the window above stays open only
// jointly over all modes.
struct KernelConditions {
    bool kernel_trivial = false;    // delta >= -nu + 1/2
    bool cokernel_trivial = false;  // delta <=  nu + 1/2
    bool at_endpoint = false;
};

ModeData mode_order(const HolonomyParam& alpha, const ConeParam& kappa, long long m);

WeightWindow invertibility_window(const HolonomyParam& alpha, const ConeParam& kappa);

KernelConditions kernel_conditions(const Scalar& delta, const Scalar& nu);

// Modified Bessel functions. K is evaluated through its exponential integral
// representation, I through its power series; both target 1e-8 accuracy or
// better for r in [1e-3, 50] and moderate orders. Non-finite intermediate
// growth or a non-converging refinement raises std::runtime_error.
double besselk(double nu, double r);
double besseli(double nu, double r);

// First derivatives in r via the two-term order recurrences.
double besselk_prime(double nu, double r);
double besseli_prime(double nu, double r);

// Largest normalized defect of K_nu and I_nu in the modified Bessel equation
// r^2 u'' + r u' - (r^2 + nu^2) u = 0 over the sample points, with u'' and u'
// taken as second-order central differences of the evaluated functions. The
// defect is normalized by the magnitude of the equation's terms.
double bessel_residual(double nu, const std::vector<double>& r_samples);

}  // namespace singedge
