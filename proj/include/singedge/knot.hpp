#pragma once

#include <complex>
#include <string>
#include <vector>

#include "singedge/params.hpp"

namespace singedge {

// Torus knot T(p, q) on the standard torus; stored normalized with p < q.
struct TorusKnot {
    long long p = 2;
    long long q = 3;

    TorusKnot(long long p_in, long long q_in);
};

// Integer polynomial in ascending degree order, monic for the knots produced
// here; Delta(1) = 1 and the coefficient list is palindromic.
struct AlexanderPolynomial {
    std::vector<long long> coefficients;

    long long degree() const { return static_cast<long long>(coefficients.size()) - 1; }
    std::complex<double> eval(std::complex<double> t) const;
};

AlexanderPolynomial alexander_torus(const TorusKnot& knot);

// All alpha in (0, 1/2) with Delta(e^{4 pi i alpha}) = 0, sorted ascending.
// Unit-circle roots are located by companion-matrix eigenvalues, polished by
// Newton iteration on the circle, and snapped to j/(2pq) when that exact value
// reproduces a root to within 1e-9.
std::vector<Scalar> degenerate_alphas(const TorusKnot& knot);

// Exponents of the meridian word mu = u^s v^{-r} in
// pi_1 = <u, v | u^p = v^q>, with q s - p r = 1 and (s, r) the minimal
// nonnegative solution. With u of homology class q and v of class p, this is
// the unique convention under which mu generates first homology.
struct MeridianWord {
    long long s = 0;
    long long r = 0;
};

MeridianWord meridian_word(const TorusKnot& knot);

// Fixed meridional holonomy diag(e^{-2 pi i alpha}, e^{2 pi i alpha}).
struct MeridionalHolonomy {
    std::complex<double> m00;
    std::complex<double> m11;
    double trace = 2.0;
};

MeridionalHolonomy meridional_holonomy(const HolonomyParam& alpha);

enum class FlatKind { abelian, irreducible };

// One conjugacy class of flat SU(2) connections on the knot complement with
// meridian rotation angle 2 pi alpha. Irreducible classes on a torus-knot
// complement are labeled by (a, b) with 1 <= a <= p-1, 1 <= b <= q-1,
// a = b mod 2; psi is the angle between the rotation axes of the two
// generators. Angles are reported in the maximal torus of the meridian
// holonomy: meridian_angle = 2 pi alpha, longitude_angle in [0, 2 pi).
struct FlatConnectionClass {
    FlatKind kind = FlatKind::abelian;
    double meridian_angle = 0.0;
    double longitude_angle = 0.0;
    long long a = 0;
    long long b = 0;
    double psi = 0.0;
    bool isolated = true;
    double trace_residual = 0.0;
    double relation_residual = 0.0;
};

// The reducible class through first homology; longitude angle 0 (the Seifert
// longitude is null-homologous), isolated away from degenerate alpha.
FlatConnectionClass abelian_class(const HolonomyParam& alpha, const TorusKnot& knot);

struct FlatSet {
    std::vector<FlatConnectionClass> classes;
    std::vector<std::string> warnings;
};

// Enumerates the irreducible classes with tr rho(mu) = 2 cos(2 pi alpha),
// ordered by (a, b). Labels whose trace equation sits within 1e-9 of its
// solvability boundary produce a warning; every emitted class is verified to
// satisfy the group relation and the trace condition to 1e-8.
FlatSet irreducible_flat_set(const TorusKnot& knot, const HolonomyParam& alpha);

// Point on the quotient of the torus by (x, y) ~ (-x, -y), canonical
// representative with x in [0, pi] and y in [0, 2 pi), y folded to [0, pi]
// on the two edge circles x = 0 and x = pi.
struct PillowcasePoint {
    double x = 0.0;
    double y = 0.0;
};

PillowcasePoint pillowcase_coords(const FlatConnectionClass& cls);

// Canonicalizes an arbitrary angle pair; idempotent.
PillowcasePoint pillowcase_canonical(double x, double y);

}  // namespace singedge
