#include "singedge/knot.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace singedge {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Unit quaternion; SU(2) element with eigenvalue angle phi is
// cos(phi) + sin(phi) * axis, so trace = 2w.
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

Quat mul(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

Quat normalized(const Quat& a) {
    const double n = std::sqrt(a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
    return {a.w / n, a.x / n, a.y / n, a.z / n};
}

Quat qpow(Quat base, long long n) {
    Quat acc{1.0, 0.0, 0.0, 0.0};
    while (n > 0) {
        if (n & 1) acc = normalized(mul(acc, base));
        base = normalized(mul(base, base));
        n >>= 1;
    }
    return acc;
}

Quat rotation(double phi, double ax, double ay, double az) {
    const double s = std::sin(phi);
    return {std::cos(phi), s * ax, s * ay, s * az};
}

double quat_dist(const Quat& a, const Quat& b) {
    return std::sqrt((a.w - b.w) * (a.w - b.w) + (a.x - b.x) * (a.x - b.x) +
                     (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

// Exact division of dividend by t^p - 1; the remainder must vanish.
std::vector<long long> divide_by_tp_minus_1(std::vector<long long> rem, long long p) {
    const long long n = static_cast<long long>(rem.size()) - 1;
    std::vector<long long> quot(static_cast<std::size_t>(n - p + 1), 0);
    for (long long i = n; i >= p; --i) {
        const long long c = rem[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(i - p)] = c;
        rem[static_cast<std::size_t>(i)] -= c;
        rem[static_cast<std::size_t>(i - p)] += c;
    }
    for (long long i = 0; i < p; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0)
            throw std::runtime_error("alexander: cyclic factor does not divide");
    return quot;
}

double angle_in_2pi(double t) {
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    if (r == 0.0) r = 0.0;
    return r;
}

}  // namespace

TorusKnot::TorusKnot(long long p_in, long long q_in) : p(p_in), q(q_in) {
    if (p > q) std::swap(p, q);
    if (p < 2) throw std::invalid_argument("torus knot parameters must be at least 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
}

std::complex<double> AlexanderPolynomial::eval(std::complex<double> t) const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = coefficients.size(); i-- > 0;)
        acc = acc * t + static_cast<double>(coefficients[i]);
    return acc;
}

AlexanderPolynomial alexander_torus(const TorusKnot& knot) {
    const long long pq = knot.p * knot.q;
    // (t^{pq} - 1)(t - 1)
    std::vector<long long> numerator(static_cast<std::size_t>(pq + 2), 0);
    numerator[0] = 1;
    numerator[1] = -1;
    numerator[static_cast<std::size_t>(pq)] = -1;
    numerator[static_cast<std::size_t>(pq + 1)] = 1;
    AlexanderPolynomial delta;
    delta.coefficients =
        divide_by_tp_minus_1(divide_by_tp_minus_1(numerator, knot.p), knot.q);
    long long at_one = 0;
    for (long long c : delta.coefficients) at_one += c;
    if (at_one != 1) throw std::runtime_error("alexander: normalization check failed");
    return delta;
}

std::vector<Scalar> degenerate_alphas(const TorusKnot& knot) {
    const AlexanderPolynomial delta = alexander_torus(knot);
    const long long d = delta.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (long long i = 0; i + 1 < d; ++i) companion(i + 1, i) = 1.0;
    for (long long i = 0; i < d; ++i)
        companion(i, d - 1) = -static_cast<double>(delta.coefficients[static_cast<std::size_t>(i)]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);

    // Palindromic with even degree, so e^{-i d theta / 2} Delta(e^{i theta})
    // is the real function g below; Newton on g polishes circle roots.
    const auto g = [&](double theta) {
        double acc = 0.0;
        for (long long j = 0; j <= d; ++j)
            acc += static_cast<double>(delta.coefficients[static_cast<std::size_t>(j)]) *
                   std::cos((static_cast<double>(j) - static_cast<double>(d) / 2.0) * theta);
        return acc;
    };
    const auto gp = [&](double theta) {
        double acc = 0.0;
        for (long long j = 0; j <= d; ++j) {
            const double shift = static_cast<double>(j) - static_cast<double>(d) / 2.0;
            acc -= static_cast<double>(delta.coefficients[static_cast<std::size_t>(j)]) * shift *
                   std::sin(shift * theta);
        }
        return acc;
    };

    const long long two_pq = 2 * knot.p * knot.q;
    std::vector<Scalar> out;
    std::vector<double> seen;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const std::complex<double> t = solver.eigenvalues()[i];
        if (std::abs(std::abs(t) - 1.0) >= 1e-9) continue;
        double theta = angle_in_2pi(std::arg(t));
        for (int it = 0; it < 60; ++it) {
            const double deriv = gp(theta);
            if (std::abs(deriv) < 1e-10) break;
            const double step = g(theta) / deriv;
            theta -= step;
            if (std::abs(step) < 1e-15) break;
        }
        theta = angle_in_2pi(theta);
        if (theta <= 0.0 || theta >= two_pi) continue;
        double alpha = theta / (2.0 * two_pi);
        bool duplicate = false;
        for (double s : seen)
            if (std::abs(s - alpha) < 1e-8) duplicate = true;
        if (duplicate) continue;
        seen.push_back(alpha);

        Scalar value(alpha);
        const long long j = std::llround(alpha * static_cast<double>(two_pq));
        if (j >= 1 && j < two_pq) {
            const double exact_theta = two_pi * static_cast<double>(j) / static_cast<double>(two_pq);
            if (std::abs(alpha - static_cast<double>(j) / static_cast<double>(two_pq)) < 1e-9 &&
                std::abs(delta.eval(std::polar(1.0, 2.0 * exact_theta))) < 1e-9) {
                if (auto r = Rat::make(j, two_pq)) value = Scalar(*r);
            }
        }
        out.push_back(value);
    }
    std::sort(out.begin(), out.end(),
              [](const Scalar& a, const Scalar& b) { return a.value() < b.value(); });
    return out;
}

MeridianWord meridian_word(const TorusKnot& knot) {
    for (long long s = 1; s < knot.p; ++s) {
        const long long qs = knot.q * s;
        if (qs % knot.p == 1) return {s, (qs - 1) / knot.p};
    }
    throw std::runtime_error("knot: no meridian exponents found");
}

MeridionalHolonomy meridional_holonomy(const HolonomyParam& alpha) {
    const double phase = two_pi * alpha.value().value();
    MeridionalHolonomy h;
    h.m00 = std::polar(1.0, -phase);
    h.m11 = std::polar(1.0, phase);
    h.trace = 2.0 * std::cos(phase);
    return h;
}

FlatConnectionClass abelian_class(const HolonomyParam& alpha, const TorusKnot& knot) {
    const AlexanderPolynomial delta = alexander_torus(knot);
    const double a = alpha.value().value();
    FlatConnectionClass cls;
    cls.kind = FlatKind::abelian;
    cls.meridian_angle = two_pi * a;
    cls.longitude_angle = 0.0;
    cls.isolated = std::abs(delta.eval(std::polar(1.0, 2.0 * two_pi * a))) > 1e-9;
    return cls;
}

FlatSet irreducible_flat_set(const TorusKnot& knot, const HolonomyParam& alpha) {
    const MeridianWord w = meridian_word(knot);
    const double a_val = alpha.value().value();
    const double target = std::cos(two_pi * a_val);
    const double pi = std::numbers::pi;

    FlatSet set;
    for (long long a = 1; a < knot.p; ++a) {
        for (long long b = 1; b < knot.q; ++b) {
            if ((a - b) % 2 != 0) continue;
            const double angle_u = pi * static_cast<double>(w.s * a) / static_cast<double>(knot.p);
            const double angle_v = pi * static_cast<double>(w.r * b) / static_cast<double>(knot.q);
            const double c1 = std::cos(angle_u) * std::cos(angle_v);
            const double c2 = std::sin(angle_u) * std::sin(angle_v);
            // c2 never vanishes: gcd(s, p) = gcd(r, q) = 1 keeps both sines
            // away from multiples of pi.
            const double ratio = (target - c1) / c2;
            if (std::abs(std::abs(ratio) - 1.0) < 1e-9) {
                set.warnings.push_back(
                    "label (" + std::to_string(a) + "," + std::to_string(b) +
                    "): meridian trace equation at arc boundary, count unstable");
            }
            if (std::abs(ratio) >= 1.0) continue;
            const double psi = std::acos(ratio);

            const Quat u = rotation(pi * static_cast<double>(a) / static_cast<double>(knot.p),
                                    0.0, 0.0, 1.0);
            const Quat v = rotation(pi * static_cast<double>(b) / static_cast<double>(knot.q),
                                    std::sin(psi), 0.0, std::cos(psi));
            const Quat mu = mul(qpow(u, w.s), qpow(conj(v), w.r));

            FlatConnectionClass cls;
            cls.kind = FlatKind::irreducible;
            cls.a = a;
            cls.b = b;
            cls.psi = psi;
            cls.meridian_angle = two_pi * a_val;
            cls.trace_residual = std::abs(2.0 * mu.w - 2.0 * target);
            cls.relation_residual = quat_dist(qpow(u, knot.p), qpow(v, knot.q));

            // Meridian axis; its norm is sin(2 pi alpha) > 0 on (0, 1/2).
            const double vn = std::sqrt(mu.x * mu.x + mu.y * mu.y + mu.z * mu.z);
            const double nx = mu.x / vn, ny = mu.y / vn, nz = mu.z / vn;
            const Quat lambda = mul(qpow(u, knot.p), qpow(conj(mu), knot.p * knot.q));
            const double along = lambda.x * nx + lambda.y * ny + lambda.z * nz;
            // Subtract the axis component per coordinate; the Pythagorean
            // form sqrt(|v|^2 - along^2) cancels away half the precision.
            const double ox = lambda.x - along * nx;
            const double oy = lambda.y - along * ny;
            const double oz = lambda.z - along * nz;
            const double off = std::sqrt(ox * ox + oy * oy + oz * oz);
            cls.relation_residual = std::max(cls.relation_residual, off);
            cls.longitude_angle = angle_in_2pi(std::atan2(along, lambda.w));
            cls.isolated = std::abs(c2 * std::sin(psi)) > 1e-9;

            if (cls.trace_residual > 1e-8 || cls.relation_residual > 1e-8)
                throw std::runtime_error("flat: representation residual exceeds tolerance");
            set.classes.push_back(cls);
        }
    }
    return set;
}

PillowcasePoint pillowcase_canonical(double x, double y) {
    double xm = angle_in_2pi(x);
    double ym = angle_in_2pi(y);
    if (xm > std::numbers::pi) {
        xm = two_pi - xm;
        ym = ym == 0.0 ? 0.0 : two_pi - ym;
    }
    if (xm < 1e-12 || std::abs(xm - std::numbers::pi) < 1e-12) {
        if (ym > std::numbers::pi) ym = two_pi - ym;
    }
    return {xm, ym};
}

PillowcasePoint pillowcase_coords(const FlatConnectionClass& cls) {
    return pillowcase_canonical(cls.meridian_angle, cls.longitude_angle);
}

}  // namespace singedge
