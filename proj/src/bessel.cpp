#include "singedge/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace singedge {

ModeData mode_order(const HolonomyParam& alpha, const ConeParam& kappa, long long m) {
    Scalar lambda = mode_frequency(alpha, m);
    return {m, lambda, kappa.value() * lambda};
}

WeightWindow invertibility_window(const HolonomyParam& alpha, const ConeParam& kappa) {
    Scalar edge = kappa.value() * gamma_bound(alpha);
    Scalar half = Scalar::ratio(1, 2);
    return {half - edge, half + edge};
}

KernelConditions kernel_conditions(const Scalar& delta, const Scalar& nu) {
    Scalar half = Scalar::ratio(1, 2);
    Scalar lo = half - nu;
    Scalar hi = half + nu;
    KernelConditions c;
    c.kernel_trivial = lo <= delta;
    c.cokernel_trivial = delta <= hi;
    c.at_endpoint = delta == lo || delta == hi;
    return c;
}

namespace {

// Integrand of K_nu(r) = int_0^inf exp(-r cosh t) cosh(nu t) dt, written with
// explicit exponents so cosh never overflows on its own.
double k_integrand(double nu, double r, double t) {
    double c = std::cosh(t);
    double e1 = nu * t - r * c;
    double e2 = -nu * t - r * c;
    return 0.5 * (std::exp(e1) + std::exp(e2));
}

}  // namespace

// The integrand extends to an even analytic function of t with
// doubly-exponential decay, so the trapezoid sum converges geometrically in
// the step; halve until two successive sums agree to near machine precision.
double besselk(double nu, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("bessel: r must be positive");
    if (!(nu >= 0.0)) nu = -nu;  // K is even in the order

    double t_max = 1.0;
    double peak = k_integrand(nu, r, 0.0);
    for (;;) {
        double v = k_integrand(nu, r, t_max);
        if (!std::isfinite(v)) throw std::runtime_error("bessel: evaluation overflow");
        peak = std::max(peak, v);
        if (v < peak * 1e-20 && v < 1e250) break;
        t_max += 1.0;
        if (t_max > 60.0) throw std::runtime_error("bessel: evaluation overflow");
    }

    double h = 0.5;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int pass = 0; pass < 14; ++pass) {
        // Kahan-compensated trapezoid sum over [0, t_max].
        double sum = 0.5 * k_integrand(nu, r, 0.0);
        double comp = 0.0;
        for (double t = h; t <= t_max; t += h) {
            double term = k_integrand(nu, r, t) - comp;
            double next = sum + term;
            comp = (next - sum) - term;
            sum = next;
        }
        double integral = sum * h;
        if (!std::isfinite(integral)) throw std::runtime_error("bessel: evaluation overflow");
        if (pass > 0 && std::abs(integral - prev) <= 1e-14 * std::abs(integral))
            return integral;
        prev = integral;
        h *= 0.5;
    }
    throw std::runtime_error("bessel: quadrature did not converge");
}

double besseli(double nu, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("bessel: r must be positive");
    if (!(nu >= 0.0)) throw std::invalid_argument("bessel: order must be nonnegative");

    double log_first = nu * std::log(r / 2.0) - std::lgamma(nu + 1.0);
    if (log_first > 700.0) throw std::runtime_error("bessel: evaluation overflow");
    double term = std::exp(log_first);
    double sum = term;
    double quarter_r2 = 0.25 * r * r;
    for (int j = 1; j < 500; ++j) {
        term *= quarter_r2 / (static_cast<double>(j) * (nu + static_cast<double>(j)));
        sum += term;
        if (!std::isfinite(sum)) throw std::runtime_error("bessel: evaluation overflow");
        if (term <= 1e-17 * sum) return sum;
    }
    throw std::runtime_error("bessel: series did not converge");
}

double besselk_prime(double nu, double r) {
    return -0.5 * (besselk(nu - 1.0, r) + besselk(nu + 1.0, r));
}

double besseli_prime(double nu, double r) {
    // Below order 1 the symmetric recurrence would need a negative order;
    // the one-sided identity I'_nu = I_{nu+1} + (nu/r) I_nu avoids it.
    if (nu < 1.0) return besseli(nu + 1.0, r) + (nu / r) * besseli(nu, r);
    return 0.5 * (besseli(nu - 1.0, r) + besseli(nu + 1.0, r));
}

double bessel_residual(double nu, const std::vector<double>& r_samples) {
    if (r_samples.empty()) throw std::invalid_argument("bessel: no sample points");
    double worst = 0.0;
    for (double r : r_samples) {
        if (r < 1e-3 || r > 50.0)
            throw std::invalid_argument("bessel: sample point outside [1e-3, 50]");
        // Step balances the h^2 truncation against evaluator noise amplified
        // by 1/h^2; r-proportional below 5 to track the r^-nu growth of K.
        double h = std::min(1e-3, 2e-4 * r);
        for (int which = 0; which < 2; ++which) {
            auto f = [&](double rr) { return which == 0 ? besselk(nu, rr) : besseli(nu, rr); };
            double um = f(r - h), u0 = f(r), up = f(r + h);
            double d1 = (up - um) / (2.0 * h);
            double d2 = (up - 2.0 * u0 + um) / (h * h);
            double defect = r * r * d2 + r * d1 - (r * r + nu * nu) * u0;
            double scale = std::abs(r * r * d2) + std::abs(r * d1) +
                           std::abs((r * r + nu * nu) * u0);
            if (scale == 0.0) scale = 1.0;
            worst = std::max(worst, std::abs(defect) / scale);
        }
    }
    return worst;
}

}  // namespace singedge
