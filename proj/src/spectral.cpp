#include "singedge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace singedge {

namespace {

long long floor_of(const Scalar& s) {
    if (s.exact()) return s.rat().floor();
    return static_cast<long long>(std::floor(s.value()));
}

long long ceil_of(const Scalar& s) {
    if (s.exact()) return s.rat().ceil();
    return static_cast<long long>(std::ceil(s.value()));
}

// Preference order for the representative mode of a merged root.
bool mode_preferred(long long a, long long b) {
    long long aa = std::llabs(a), ab = std::llabs(b);
    if (aa != ab) return aa < ab;
    return a > b;
}

struct RootKey {
    double re;
    double im;
    bool operator<(const RootKey& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
    bool operator==(const RootKey& o) const { return re == o.re && im == o.im; }
};

void sort_roots(std::vector<IndicialRoot>& roots) {
    std::sort(roots.begin(), roots.end(), [](const IndicialRoot& a, const IndicialRoot& b) {
        if (a.re < b.re) return true;
        if (b.re < a.re) return false;
        if (a.im != b.im) return a.im < b.im;
        return a.mode < b.mode;
    });
}

}  // namespace

std::vector<CircleEigenvalue> circle_spectrum(const HolonomyParam& alpha,
                                              const ConeParam& kappa,
                                              long long m_lo, long long m_hi) {
    if (m_lo > m_hi) throw std::invalid_argument("mode range is empty");
    if (m_hi - m_lo >= 1000000) throw std::invalid_argument("mode range too large");
    std::vector<CircleEigenvalue> out;
    out.reserve(static_cast<size_t>(m_hi - m_lo + 1));
    for (long long m = m_lo; m <= m_hi; ++m) {
        Scalar im = kappa.value() * (Scalar(m) / alpha.value() + Scalar(2));
        out.push_back({m, im});
    }
    return out;
}

std::vector<IndicialRoot> scalar_boundary_spectrum(const HolonomyParam& alpha,
                                                   const ConeParam& kappa,
                                                   const Scalar& tau) {
    if (!(Scalar(0) < tau)) throw std::invalid_argument("tau must be positive");

    // kappa |m/alpha + 2| < tau  <=>  |m + 2 alpha| < alpha tau / kappa.
    Scalar a = alpha.value();
    Scalar half_width = a * tau / kappa.value();
    Scalar center = -(a * Scalar(2));
    long long m_first = floor_of(center - half_width) - 1;
    long long m_last = ceil_of(center + half_width) + 1;

    // Merged by exact root value; multiplicity counts contributing modes.
    struct Entry {
        Scalar value;
        long long mode;
        int count;
    };
    std::vector<Entry> entries;
    for (long long m = m_first; m <= m_last; ++m) {
        Scalar v = kappa.value() * mode_frequency(alpha, m);
        if (!(v < tau)) continue;
        bool merged = false;
        for (auto& e : entries) {
            if (e.value == v) {
                ++e.count;
                if (mode_preferred(m, e.mode)) e.mode = m;
                merged = true;
                break;
            }
        }
        if (!merged) entries.push_back({v, m, 1});
    }

    std::vector<IndicialRoot> roots;
    for (const auto& e : entries) {
        for (const Scalar& re : {-e.value, e.value}) {
            IndicialRoot r;
            r.re = re;
            r.im = 0.0;
            r.mode = ModeIndex::scalar(e.mode);
            r.form_degree = 0;
            r.multiplicity = e.count;
            roots.push_back(r);
        }
    }
    sort_roots(roots);
    return roots;
}

OneFormRoots oneform_indicial_roots(const HolonomyParam& alpha, const ConeParam& kappa,
                                    long long m1, long long m2, double residual_tol) {
    Scalar x = Scalar(m1) / alpha.value() + Scalar(2);
    Scalar y = Scalar(m2) / alpha.value() + Scalar(2);
    Scalar k2 = kappa.value() * kappa.value();
    Scalar xx = x * x, yy = y * y;
    Scalar s = k2 * (xx + yy);
    Scalar a = Scalar(2) + s;
    Scalar b = Scalar(1) + s + k2 * k2 * xx * yy - Scalar(4) * k2 * x * y;
    Scalar diff = xx - yy;
    Scalar rho = k2 * (k2 * diff * diff + Scalar(16) * x * y);

    OneFormRoots result;
    result.quartic = {x, y, rho, -a, b};

    // Root values of zeta^2, in extended precision so the returned doubles
    // are correctly rounded; the residual budget is too small for a double
    // pipeline when the two branches differ by many orders of magnitude.
    // The small real branch is taken from the product of the pair (b / w_big)
    // to avoid cancellation in (a - sqrt(rho)) / 2.
    auto wide = [](const Scalar& v) -> long double {
        if (v.exact())
            return static_cast<long double>(v.rat().num()) /
                   static_cast<long double>(v.rat().den());
        return v.value();
    };
    long double av = wide(a), bv = wide(b), rhov = wide(rho);
    bool rho_nonneg = rho.exact() ? !(rho < Scalar(0)) : rhov >= 0.0L;

    std::vector<std::pair<double, double>> values;  // (re, im) of zeta
    if (rho_nonneg) {
        long double w_big = (av + std::sqrt(std::max(rhov, 0.0L))) / 2.0L;
        long double w_small = bv / w_big;
        for (long double w : {w_big, w_small}) {
            if (w >= 0.0L) {
                double z = static_cast<double>(std::sqrt(w));
                values.push_back({z, 0.0});
                values.push_back({-z, 0.0});
            } else {
                double z = static_cast<double>(std::sqrt(-w));
                values.push_back({0.0, z});
                values.push_back({0.0, -z});
            }
        }
    } else {
        std::complex<long double> w(av / 2.0L, std::sqrt(-rhov) / 2.0L);
        std::complex<long double> z = std::sqrt(w);
        double zr = static_cast<double>(z.real());
        double zi = static_cast<double>(z.imag());
        values.push_back({zr, zi});
        values.push_back({zr, -zi});
        values.push_back({-zr, zi});
        values.push_back({-zr, -zi});
    }

    std::map<RootKey, int> merged;
    for (auto [re, im] : values) {
        if (re == 0.0) re = 0.0;  // normalize -0
        if (im == 0.0) im = 0.0;
        ++merged[RootKey{re, im}];
    }

    for (const auto& [key, count] : merged) {
        // The defect is measured in extended precision as well; in doubles the
        // evaluation noise of B - A z^2 alone can exceed the budget.
        std::complex<long double> z(key.re, key.im);
        std::complex<long double> z2 = z * z;
        double residual = static_cast<double>(std::abs(z2 * z2 - av * z2 + bv));
        double scale = static_cast<double>(1.0L + std::pow(std::abs(z), 4));
        if (residual > residual_tol * scale)
            throw std::runtime_error("spectral: root residual exceeds tolerance");
        IndicialRoot r;
        r.re = Scalar(key.re);
        r.im = key.im;
        r.mode = ModeIndex::pair(m1, m2);
        r.form_degree = 1;
        r.multiplicity = count;
        r.residual = residual / scale;
        result.roots.push_back(r);
    }
    sort_roots(result.roots);
    return result;
}

namespace {

// Tail certificate for the 1-form gap. For every mode pair with one index
// beyond the search bound, all four roots satisfy |Re zeta| >= tau provided
// (with S = kappa^2 (x^2 + y^2), quartic zeta^4 - A zeta^2 + B):
//   complex branch and large real branch:  A/2 >= tau^2, from S >= kappa^2 Y0^2,
//   small real branch: B/A >= tau^2 for all |x| >= gamma, |y| >= Y0,
// where the last is checked through the constrained minimum of B - tau^2 A,
// a quadratic in x whose vertex is pushed inside |x| < gamma by the bound on
// 2Y/(kappa^2 Y^2 + 1 - tau^2). All inequalities carry a relative margin.
bool tail_certified(double gamma, double kappa, double tau, double y0) {
    constexpr double margin = 1e-9;
    const double k2 = kappa * kappa;
    const double t2 = tau * tau;
    const double k2y2 = k2 * y0 * y0;

    if (!(k2y2 >= (1.0 + margin)))
        return false;
    if (!(k2y2 >= (2.0 * t2 - 2.0) * (1.0 + margin)))
        return false;
    double denom = k2y2 + 1.0 - t2;
    if (!(denom > margin))
        return false;
    if (!(2.0 * y0 / denom <= gamma * (1.0 - margin)))
        return false;
    double c1 = k2 * gamma * gamma + 1.0 - t2;
    if (!(c1 > margin))
        return false;
    auto phi = [&](double yv) {
        return k2 * yv * yv * c1 - 4.0 * k2 * gamma * yv +
               (k2 * gamma * gamma * (1.0 - t2) + 1.0 - 2.0 * t2);
    };
    double y_vertex = 2.0 * gamma / c1;
    double y_min = std::max(y0, y_vertex);
    return phi(y_min) >= margin;
}

double tail_y0(const HolonomyParam& alpha, long long bound) {
    double a = alpha.value().value();
    return ((static_cast<double>(bound) + 1.0) / a - 2.0) * (1.0 - 1e-12);
}

std::optional<long long> auto_search_bound(const HolonomyParam& alpha, double gamma,
                                           double kappa, double tau) {
    for (long long b = 1; b <= 4096; b = (b < 16 ? b + 1 : b * 2)) {
        if (tail_certified(gamma, kappa, tau, tail_y0(alpha, b))) return b;
    }
    return std::nullopt;
}

}  // namespace

SpectrumWindow oneform_spectrum_gap(const HolonomyParam& alpha, const ConeParam& kappa,
                                    double tau, std::optional<long long> search_bound) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");

    double gamma = gamma_bound(alpha).value();
    double kv = kappa.value().value();

    SpectrumWindow win;
    win.tau = tau;
    if (search_bound) {
        if (*search_bound < 1) throw std::invalid_argument("search bound must be at least 1");
        win.search_bound = *search_bound;
        win.certified = tail_certified(gamma, kv, tau, tail_y0(alpha, *search_bound));
    } else {
        auto b = auto_search_bound(alpha, gamma, kv, tau);
        win.search_bound = b.value_or(32);
        win.certified = b.has_value();
    }

    // Ties on |Re zeta| are resolved toward the mode pair closest to zero.
    auto mode_before = [](const ModeIndex& a, const ModeIndex& b) {
        long long sa = std::llabs(a.m1) + std::llabs(a.m2);
        long long sb = std::llabs(b.m1) + std::llabs(b.m2);
        if (sa != sb) return sa < sb;
        return a < b;
    };
    bool first = true;
    for (long long m1 = -win.search_bound; m1 <= win.search_bound; ++m1) {
        for (long long m2 = -win.search_bound; m2 <= win.search_bound; ++m2) {
            OneFormRoots mode_roots = oneform_indicial_roots(alpha, kappa, m1, m2);
            for (const auto& r : mode_roots.roots) {
                double abs_re = std::abs(r.re.value());
                if (first || abs_re < win.min_abs_re ||
                    (abs_re == win.min_abs_re && mode_before(r.mode, win.min_mode))) {
                    win.min_abs_re = abs_re;
                    win.min_mode = r.mode;
                    first = false;
                }
                if (abs_re < tau) win.roots_inside.push_back(r);
            }
        }
    }
    sort_roots(win.roots_inside);
    return win;
}

SelectKappaResult select_kappa(const HolonomyParam& alpha, const Scalar& tau,
                               int form_degree) {
    if (!(Scalar(0) < tau)) throw std::invalid_argument("tau must be positive");
    if (form_degree != 0 && form_degree != 1)
        throw std::invalid_argument("form_degree must be 0 or 1");

    Scalar gamma = gamma_bound(alpha);

    if (form_degree == 0) {
        // The function spectrum sits at +/- kappa |m/alpha + 2|, so the open
        // window (-tau, tau) is clear exactly from kappa = tau/gamma on.
        Scalar kmin = tau / gamma;
        SelectKappaResult res{kmin, 0, 0};
        res.integer_ceiling = kmin.exact()
                                  ? kmin.rat().ceil()
                                  : static_cast<long long>(std::ceil(kmin.value()));
        return res;
    }

    double tv = tau.value();
    double av = alpha.value().value();
    auto certified_gap = [&](double k) {
        if (!(k > av)) return false;
        // No admissible tail bound means no certificate; skip the mode sweep.
        if (!auto_search_bound(alpha, gamma.value(), k, tv)) return false;
        ConeParam cp{Scalar(k), alpha};
        SpectrumWindow w = oneform_spectrum_gap(alpha, cp, tv);
        return w.certified && w.gap_holds();
    };

    double lo = av * (1.0 + 1e-9) + 1e-12;
    double hi = std::max({2.0 * tv / gamma.value(), 2.0 * lo, 1.0});
    int guard = 0;
    while (!certified_gap(hi)) {
        hi *= 2.0;
        if (++guard > 60) throw std::runtime_error("select: could not certify any kappa");
    }
    if (!certified_gap(lo)) {
        for (int i = 0; i < 200 && (hi - lo) > 1e-6 * hi; ++i) {
            double mid = 0.5 * (lo + hi);
            if (certified_gap(mid))
                hi = mid;
            else
                lo = mid;
        }
    } else {
        hi = lo;
    }

    SelectKappaResult res{Scalar(hi), static_cast<long long>(std::ceil(hi)), 1};
    return res;
}

DistortionBound conformal_distortion(const HolonomyParam& alpha, const Scalar& kappa) {
    // Equality kappa == alpha is admitted here: the comparison is against the
    // round metric itself and the bound degenerates to 0.
    const Scalar& a = alpha.value();
    if (kappa < a) throw std::invalid_argument("kappa must be at least alpha");
    return {(kappa - a) / (kappa + a)};
}

DistortionBound cone_interp_distortion(const Scalar& kappa, const Scalar& kappa_prime) {
    if (!(Scalar(0) < kappa_prime))
        throw std::invalid_argument("kappa_prime must be positive");
    if (kappa < kappa_prime)
        throw std::invalid_argument("kappa must be at least kappa_prime");
    return {(kappa - kappa_prime) / (kappa + kappa_prime)};
}

}  // namespace singedge
