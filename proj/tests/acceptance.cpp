// Acceptance gate: each numbered check prints one PASS/FAIL line and the
// process exits nonzero if any check fails. The oracles here are independent
// of the library paths they judge: polynomial roots come from Durand-Kerner,
// flat classes from an SU(2) grid scan, and the index formula from a
// differently structured expansion.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "singedge/bessel.hpp"
#include "singedge/index.hpp"
#include "singedge/knot.hpp"
#include "singedge/spectral.hpp"
#include "testutil.hpp"

using namespace singedge;

namespace {

int failures = 0;

void verdict(int number, const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
}

HolonomyParam alpha_of(long long p, long long q) {
    return HolonomyParam{Scalar::ratio(p, q)};
}

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    int raw = pclose(pipe);
    if (raw != -1 && WIFEXITED(raw)) res.status = WEXITSTATUS(raw);
    return res;
}

// 1. Function-spectrum floor: min |zeta| = kappa * min{2, (1-2a)/a} exactly,
//    and the open window below it is root-free. Tolerance: exact rational.
void criterion_1() {
    auto gen = testutil::rng(20260816);
    std::string detail;
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        auto [p, q] = testutil::rand_alpha(gen);
        HolonomyParam alpha = alpha_of(p, q);
        Scalar gamma = gamma_bound(alpha);
        Rat two_a_gap = *Rat::sub(Rat(1), Rat(2 * p, q));
        Rat expected_gamma = std::min(Rat(2), *Rat::div(two_a_gap, Rat(p, q)));
        if (!(gamma.rat() == expected_gamma)) {
            ok = false;
            detail = "gamma mismatch at alpha=" + Rat(p, q).str();
            break;
        }
        for (long long kv : {1LL, 2LL, 5LL}) {
            ConeParam kappa{Scalar(kv), alpha};
            Scalar floor_value = gamma * Scalar(kv);
            auto roots = scalar_boundary_spectrum(alpha, kappa, floor_value * Scalar(2));
            if (roots.empty()) {
                ok = false;
                detail = "empty spectrum at alpha=" + Rat(p, q).str();
                break;
            }
            Scalar least = roots.front().re.abs();
            for (const auto& r : roots) {
                least = min(least, r.re.abs());
                if (r.re.abs() < floor_value) {
                    ok = false;
                    detail = "root below the floor at alpha=" + Rat(p, q).str();
                }
            }
            if (!(least == floor_value)) {
                ok = false;
                detail = "floor not attained at alpha=" + Rat(p, q).str();
            }
            if (!ok) break;
        }
    }
    verdict(1, "function spectrum floor kappa*gamma, exact, 200 random holonomies",
            ok, detail);
}

// 2. Quartic roots against the independent polynomial-root oracle; worked
//    modes and 10^4 random modes. Tolerance: residual 1e-10 * (1 + |zeta|^4).
void criterion_2() {
    bool ok = true;
    std::string detail;

    auto check_against_oracle = [&](const HolonomyParam& a, const ConeParam& k,
                                    long long m1, long long m2) {
        OneFormRoots r = oneform_indicial_roots(a, k, m1, m2);
        double av = -r.quartic.coeff_zeta2.value();
        double bv = r.quartic.coeff_const.value();
        auto oracle = testutil::polynomial_roots({bv, 0.0, -av, 0.0, 1.0});
        std::vector<bool> used(oracle.size(), false);
        for (const auto& root : r.roots) {
            std::complex<double> z = root.zeta();
            std::complex<double> z2 = z * z;
            double residual = std::abs(z2 * z2 - av * z2 + bv);
            if (residual > 1e-10 * (1.0 + std::pow(std::abs(z), 4))) {
                ok = false;
                detail = "residual beyond 1e-10 scale";
                return;
            }
            for (int rep = 0; rep < root.multiplicity; ++rep) {
                bool matched = false;
                for (std::size_t i = 0; i < oracle.size(); ++i) {
                    if (!used[i] && std::abs(z - oracle[i]) < 1e-7) {
                        used[i] = true;
                        matched = true;
                        break;
                    }
                }
                if (!matched) {
                    ok = false;
                    detail = "oracle root unmatched";
                    return;
                }
            }
        }
    };

    {
        HolonomyParam a = alpha_of(1, 4);
        ConeParam k{Scalar(1), a};
        check_against_oracle(a, k, 0, 0);
        check_against_oracle(a, k, 0, -1);
    }
    {
        HolonomyParam a = alpha_of(1, 3);
        ConeParam k{Scalar(3), a};
        check_against_oracle(a, k, -1, -1);
    }

    auto gen = testutil::rng(424242);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        auto [p, q] = testutil::rand_alpha(gen);
        HolonomyParam a = alpha_of(p, q);
        ConeParam k{Scalar(testutil::rand_int(gen, 1, 5)), a};
        OneFormRoots r = oneform_indicial_roots(
            a, k, testutil::rand_int(gen, -30, 30), testutil::rand_int(gen, -30, 30));
        for (const auto& root : r.roots) {
            if (root.residual > 1e-10) {
                ok = false;
                detail = "stored residual beyond 1e-10";
                break;
            }
        }
    }
    verdict(2, "quartic roots vs polynomial-root oracle, residual <= 1e-10(1+|zeta|^4)",
            ok, detail);
}

// 3. Certified kappa selection on the grid, with a violation when kappa is
//    halved in at least one case.
void criterion_3() {
    bool ok = true;
    std::string detail;
    int violations = 0;
    for (auto [p, q] : {std::pair<long long, long long>{1, 8}, {1, 4}, {1, 3}, {2, 5}}) {
        for (long long tau : {1LL, 2LL, 5LL}) {
            HolonomyParam alpha = alpha_of(p, q);
            SelectKappaResult sel = select_kappa(alpha, Scalar(tau), 1);
            ConeParam chosen{sel.kappa_min, alpha};
            SpectrumWindow w = oneform_spectrum_gap(alpha, chosen,
                                                     static_cast<double>(tau));
            if (!w.certified || !w.gap_holds()) {
                ok = false;
                detail = "selected kappa not certified at alpha=" + Rat(p, q).str() +
                         " tau=" + std::to_string(tau);
            }
            Scalar half = sel.kappa_min / Scalar(2);
            if (alpha.value() < half) {
                ConeParam halved{half, alpha};
                SpectrumWindow hw = oneform_spectrum_gap(alpha, halved,
                                                          static_cast<double>(tau));
                if (!hw.gap_holds()) ++violations;
            }
        }
    }
    if (violations < 1) {
        ok = false;
        detail = "no violation found after halving";
    }
    verdict(3, "kappa selection certified on the grid; halving violates the gap",
            ok, detail);
}

// 4. Weight windows exact; K_{1/2}(1) to 1e-8; ODE residual <= 1e-6 for
//    nu in {1,2,3} on [0.5, 5]; small-r slope of K_nu within 2% of -nu.
void criterion_4() {
    bool ok = true;
    std::string detail;
    for (auto [p, q] : {std::pair<long long, long long>{1, 8}, {1, 4}, {1, 3}, {2, 5}}) {
        for (long long kv : {1LL, 2LL, 5LL}) {
            HolonomyParam alpha = alpha_of(p, q);
            ConeParam kappa{Scalar(kv), alpha};
            WeightWindow w = invertibility_window(alpha, kappa);
            Rat kg = *Rat::mul(Rat(kv), gamma_bound(alpha).rat());
            Rat lo = *Rat::sub(Rat(1, 2), kg);
            Rat hi = *Rat::add(Rat(1, 2), kg);
            if (!(w.delta_lo.rat() == lo) || !(w.delta_hi.rat() == hi)) {
                ok = false;
                detail = "window endpoints differ at alpha=" + Rat(p, q).str();
            }
        }
    }

    double closed_form = std::sqrt(M_PI / 2.0) * std::exp(-1.0);
    if (std::abs(besselk(0.5, 1.0) - closed_form) > 1e-8 * closed_form) {
        ok = false;
        detail = "half-order closed form beyond 1e-8";
    }

    std::vector<double> grid;
    for (double r = 0.5; r <= 5.0; r += 0.5) grid.push_back(r);
    for (double nu : {1.0, 2.0, 3.0}) {
        if (bessel_residual(nu, grid) > 1e-6) {
            ok = false;
            detail = "ODE residual beyond 1e-6 at nu=" + std::to_string(nu);
        }
    }

    for (double nu : {1.0, 2.0, 3.0}) {
        std::vector<double> xs, ys;
        for (int i = 0; i < 10; ++i) {
            double r = 1e-3 * std::pow(10.0, i / 9.0);
            xs.push_back(std::log(r));
            ys.push_back(std::log(besselk(nu, r)));
        }
        double slope = testutil::fit_slope(xs, ys);
        if (std::abs(slope + nu) > 0.02 * nu) {
            ok = false;
            detail = "small-r slope off by more than 2% at nu=" + std::to_string(nu);
        }
    }
    verdict(4, "weight windows exact; K_{1/2}(1) to 1e-8; residual <= 1e-6; slope -nu within 2%",
            ok, detail);
}

// 5. Index calculus versus an independent expansion, the degree crosscheck
//    grid, mod-4 gauge invariance, and composition associativity.
void criterion_5() {
    bool ok = true;
    std::string detail;
    auto gen = testutil::rng(55555);
    for (int trial = 0; trial < 100000 && ok; ++trial) {
        SurfacePairTopology t;
        t.k = testutil::rand_int(gen, -50, 50);
        t.l = testutil::rand_int(gen, -50, 50);
        t.b1 = testutil::rand_int(gen, 0, 20);
        t.b2_plus = testutil::rand_int(gen, 0, 20);
        t.genus = testutil::rand_int(gen, 0, 20);
        if (asd_dimension(t) != testutil::asd_independent(t.k, t.l, t.b1, t.b2_plus, t.genus)) {
            ok = false;
            detail = "dimension formula disagreement";
        }
    }
    for (long long a = -50; a <= 50 && ok; ++a)
        for (long long b = -50; b <= 50; ++b)
            if (!gauge_shift_crosscheck({a, b})) {
                ok = false;
                detail = "crosscheck failed";
                break;
            }
    for (int trial = 0; trial < 100000 && ok; ++trial) {
        long long ind = testutil::rand_int(gen, -1000, 1000);
        GaugeTransformDegrees d{testutil::rand_int(gen, -40, 40),
                                testutil::rand_int(gen, -40, 40)};
        if (grading_mod4(gauge_index_shift(ind, d)) != grading_mod4(ind)) {
            ok = false;
            detail = "mod-4 invariance failed";
        }
    }
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        long long x = testutil::rand_int(gen, -100, 100);
        long long y = testutil::rand_int(gen, -100, 100);
        long long z = testutil::rand_int(gen, -100, 100);
        LimitingConnection b{testutil::rand_int(gen, 0, 1) == 0
                                 ? ConnectionKind::abelian
                                 : ConnectionKind::irreducible};
        LimitingConnection c{testutil::rand_int(gen, 0, 1) == 0
                                 ? ConnectionKind::abelian
                                 : ConnectionKind::irreducible};
        if (mu_compose(mu_compose(x, y, b), z, c) !=
            mu_compose(x, mu_compose(y, z, c), b)) {
            ok = false;
            detail = "associativity failed";
        }
    }
    verdict(5, "index formula vs independent expansion; crosscheck grid; mod-4; associativity",
            ok, detail);
}

// 6. Exact rational action values.
void criterion_6() {
    bool ok = true;
    std::string detail;
    auto gen = testutil::rng(66);
    for (int trial = 0; trial < 2000 && ok; ++trial) {
        auto [p, q] = testutil::rand_alpha(gen);
        long long k = testutil::rand_int(gen, -20, 20);
        long long l = testutil::rand_int(gen, -20, 20);
        long long n = testutil::rand_int(gen, -20, 20);
        Scalar action = chern_weil_action(k, l, alpha_of(p, q), n);
        if (!action.exact()) {
            ok = false;
            detail = "action not exact";
            break;
        }
        Rat a(p, q);
        Rat expected = *Rat::add(Rat(k), *Rat::sub(*Rat::mul(Rat(2 * l), a),
                                                   *Rat::mul(*Rat::mul(a, a), Rat(n))));
        if (!(action.rat() == expected)) {
            ok = false;
            detail = "action value mismatch";
        }
    }
    if (ok && !(chern_weil_action(0, 1, alpha_of(1, 4), 0).rat() == Rat(1, 2))) {
        ok = false;
        detail = "spot value 1/2 failed";
    }
    if (ok && !(chern_weil_action(0, 0, alpha_of(1, 4), 4).rat() == Rat(-1, 4))) {
        ok = false;
        detail = "spot value -1/4 failed";
    }
    verdict(6, "holonomy action exact rational with spot values 1/2 and -1/4", ok, detail);
}

// 7. Degenerate holonomies to 1e-9; trefoil class counts against the SU(2)
//    grid oracle on a 100-point sweep, transitions exactly at {1/12, 5/12};
//    oracle solutions verified to 1e-8.
void criterion_7() {
    bool ok = true;
    std::string detail;

    auto tre = degenerate_alphas(TorusKnot{2, 3});
    if (tre.size() != 2 || std::abs(tre[0].value() - 1.0 / 12.0) > 1e-9 ||
        std::abs(tre[1].value() - 5.0 / 12.0) > 1e-9) {
        ok = false;
        detail = "trefoil degenerate set";
    }
    auto cinq = degenerate_alphas(TorusKnot{2, 5});
    if (cinq.size() != 4) {
        ok = false;
        detail = "cinquefoil degenerate set";
    }

    auto labels = testutil::oracle_labels(2, 3);
    if (labels.size() != 1 || labels[0] != std::pair<int, int>{1, 1}) {
        ok = false;
        detail = "oracle label scan";
    }

    TorusKnot trefoil{2, 3};
    for (int i = 1; i <= 100 && ok; ++i) {
        HolonomyParam alpha = alpha_of(i, 202);
        double av = alpha.value().value();
        FlatSet set = irreducible_flat_set(trefoil, alpha);
        auto oracle = testutil::oracle_flat_classes(2, 3, av, labels);
        std::size_t expected = (1.0 / 12.0 < av && av < 5.0 / 12.0) ? 1 : 0;
        if (set.classes.size() != expected || oracle.size() != expected) {
            ok = false;
            detail = "count mismatch at i=" + std::to_string(i);
            break;
        }
        for (const auto& sol : oracle) {
            if (sol.relation_err > 1e-8 || sol.trace_err > 1e-8) {
                ok = false;
                detail = "oracle solution residual beyond 1e-8";
            }
        }
        for (std::size_t ci = 0; ci < oracle.size(); ++ci) {
            if (std::abs(set.classes[ci].psi - oracle[ci].psi) > 1e-6) {
                ok = false;
                detail = "axis angle disagreement";
            }
        }
    }
    verdict(7, "degenerate holonomies to 1e-9; trefoil counts vs SU(2) grid oracle on 100 points",
            ok, detail);
}

// 8. CLI behavior through the installed binary: byte-identical output across
//    repeated runs, and the documented exit codes.
void criterion_8(const std::string& cli) {
    bool ok = true;
    std::string detail;
    if (cli.empty()) {
        verdict(8, "command line determinism and exit codes", false, "no binary path given");
        return;
    }
    std::string quoted = "'" + cli + "'";

    std::string flat_cmd = quoted + " flat --knot 2,5 --alpha 1/4 2>/dev/null";
    CommandResult first = run_command(flat_cmd);
    CommandResult second = run_command(flat_cmd);
    CommandResult third = run_command(flat_cmd);
    if (first.status != 0 || first.out.empty()) {
        ok = false;
        detail = "valid invocation did not exit 0";
    }
    if (first.out != second.out || second.out != third.out) {
        ok = false;
        detail = "output differs across identical runs";
    }

    CommandResult spectrum = run_command(
        quoted + " spectrum --alpha 1/4 --kappa 1 --tau 7 2>/dev/null");
    if (spectrum.status != 0) {
        ok = false;
        detail = "spectrum exit code " + std::to_string(spectrum.status);
    }

    CommandResult bad_alpha = run_command(
        quoted + " spectrum --alpha 3/5 --kappa 1 --tau 7 2>/dev/null");
    if (bad_alpha.status != 2) {
        ok = false;
        detail = "alpha=3/5 exit code " + std::to_string(bad_alpha.status);
    }

    CommandResult bad_knot = run_command(
        quoted + " flat --knot 4,6 --alpha 1/4 2>/dev/null");
    if (bad_knot.status != 2) {
        ok = false;
        detail = "knot 4,6 exit code " + std::to_string(bad_knot.status);
    }
    verdict(8, "command line determinism and exit codes 0/2", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(cli);
    if (failures != 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
