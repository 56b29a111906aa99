#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "singedge/params.hpp"

namespace singedge {

// Fourier label on the boundary torus: a single angular mode for functions,
// a pair of them for the coupled 1-form block.
struct ModeIndex {
    long long m1 = 0;
    long long m2 = 0;
    bool is_pair = false;

    static ModeIndex scalar(long long m) { return {m, 0, false}; }
    static ModeIndex pair(long long m1, long long m2) { return {m1, m2, true}; }

    friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
    friend bool operator<(const ModeIndex& a, const ModeIndex& b) {
        if (a.is_pair != b.is_pair) return !a.is_pair;
        if (a.m1 != b.m1) return a.m1 < b.m1;
        return a.m2 < b.m2;
    }
};

// One indicial root zeta. `re` keeps the exact rational value whenever the
// computation producing it stayed rational.
struct IndicialRoot {
    Scalar re;
    double im = 0.0;
    ModeIndex mode;
    int form_degree = 0;
    int multiplicity = 1;
    double residual = 0.0;

    std::complex<double> zeta() const { return {re.value(), im}; }
};

struct CircleEigenvalue {
    long long m = 0;
    Scalar imag;  // eigenvalue is i * imag
};

// Quartic indicial polynomial zeta^4 + coeff_zeta2 * zeta^2 + coeff_const of
// one 1-form mode pair, with its reduced data.
struct QuarticData {
    Scalar x;
    Scalar y;
    Scalar rho;          // discriminant of the quadratic in zeta^2
    Scalar coeff_zeta2;  // equals -(2 + kappa^2 (x^2 + y^2))
    Scalar coeff_const;
};

struct OneFormRoots {
    QuarticData quartic;
    std::vector<IndicialRoot> roots;  // +/- paired, merged by value
};

// Result of a gap search over 1-form modes. `min_abs_re` is the minimum of
// |Re zeta| over every enumerated mode; when `certified` is set, the tail
// estimate guarantees no mode outside the search range puts a root with
// |Re zeta| < tau.
struct SpectrumWindow {
    double tau = 0.0;
    long long search_bound = 0;
    std::vector<IndicialRoot> roots_inside;
    double min_abs_re = 0.0;
    ModeIndex min_mode;
    bool certified = false;

    bool gap_holds() const { return roots_inside.empty(); }
};

struct SelectKappaResult {
    Scalar kappa_min;
    long long integer_ceiling = 0;
    int form_degree = 0;
};

// Bilipschitz distortion bound between cone metrics; always in [0, 1).
struct DistortionBound {
    Scalar value;
};

// Boundary circle family: eigenvalues i * kappa * (m/alpha + 2), one per mode
// in [m_lo, m_hi].
std::vector<CircleEigenvalue> circle_spectrum(const HolonomyParam& alpha,
                                              const ConeParam& kappa,
                                              long long m_lo, long long m_hi);

// Function (0-form) indicial roots with |zeta| < tau, +/- paired, with
// multiplicity counting the contributing modes. Exact when inputs are rational.
std::vector<IndicialRoot> scalar_boundary_spectrum(const HolonomyParam& alpha,
                                                   const ConeParam& kappa,
                                                   const Scalar& tau);

// All four roots of the coupled 1-form block at one mode pair. Every root is
// checked against the quartic; residual_tol is relative to 1 + |zeta|^4.
OneFormRoots oneform_indicial_roots(const HolonomyParam& alpha, const ConeParam& kappa,
                                    long long m1, long long m2,
                                    double residual_tol = 1e-10);

// Searches modes in [-search_bound, search_bound]^2 for roots with
// |Re zeta| < tau and certifies the remaining modes by the tail estimate.
// When search_bound is omitted a bound sufficient for certification is chosen.
SpectrumWindow oneform_spectrum_gap(const HolonomyParam& alpha, const ConeParam& kappa,
                                    double tau,
                                    std::optional<long long> search_bound = std::nullopt);

// Least kappa whose spectrum keeps (-tau, tau) free of Re zeta. Exact value
// tau/gamma for the function model; certified bisection for the 1-form model.
SelectKappaResult select_kappa(const HolonomyParam& alpha, const Scalar& tau,
                               int form_degree);

// (kappa - alpha)/(kappa + alpha): distortion between the model cone metric
// and the round one. Zero exactly when the two metrics coincide (kappa == alpha).
DistortionBound conformal_distortion(const HolonomyParam& alpha, const Scalar& kappa);

// (kappa - kappa_prime)/(kappa + kappa_prime) for kappa >= kappa_prime > 0.
DistortionBound cone_interp_distortion(const Scalar& kappa, const Scalar& kappa_prime);

}  // namespace singedge
