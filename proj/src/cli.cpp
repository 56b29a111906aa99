#include "singedge/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "singedge/bessel.hpp"
#include "singedge/index.hpp"
#include "singedge/knot.hpp"
#include "singedge/report.hpp"
#include "singedge/spectral.hpp"

namespace singedge {

namespace {

Scalar parse_scalar(const std::string& text, const std::string& name, Report& rep) {
    auto s = Scalar::parse(text);
    if (!s) throw std::invalid_argument(name + " is not a number");
    if (!s->exact()) rep.warnings.push_back(name + " parsed as inexact decimal");
    return *s;
}

long long parse_integer(const std::string& text, const std::string& name) {
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0')
        throw std::invalid_argument(name + " must be an integer");
    return v;
}

std::pair<long long, long long> parse_int_pair(const std::string& text, const std::string& name) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
        throw std::invalid_argument(name + " must be given as two integers a,b");
    return {parse_integer(text.substr(0, comma), name),
            parse_integer(text.substr(comma + 1), name)};
}

std::string pair_text(long long a, long long b) {
    return std::to_string(a) + "," + std::to_string(b);
}

std::string scalar_text(const Scalar& s) {
    return s.exact() ? s.rat().str() : format_double(s.value());
}

LimitingConnection parse_kind(const std::string& text) {
    if (text == "abelian") return {ConnectionKind::abelian};
    if (text == "irreducible") return {ConnectionKind::irreducible};
    throw std::invalid_argument("kind must be abelian or irreducible");
}

Json root_row(const IndicialRoot& root) {
    Json row;
    row["re"] = json_scalar(root.re);
    row["im"] = json_number(root.im);
    row["multiplicity"] = root.multiplicity;
    return row;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spectral, index, and flat-connection toolkit for singular connections"};
    app.name("singedge");
    app.require_subcommand(1);

    Report rep;
    int exit_code = 0;
    std::string format = "json";
    std::string out_path;

    // ---- spectrum ----
    struct {
        std::string alpha, kappa, tau, circle, mode;
    } sp;
    auto* sp_cmd = app.add_subcommand(
        "spectrum", "Function-model boundary spectrum inside a window");
    sp_cmd->add_option("--alpha", sp.alpha, "holonomy in (0,1/2), p/q or decimal")->required();
    sp_cmd->add_option("--kappa", sp.kappa, "cone sharpness, must exceed alpha")->required();
    sp_cmd->add_option("--tau", sp.tau, "window half-width, positive")->required();
    sp_cmd->add_option("--circle-range", sp.circle, "also list circle eigenvalues for modes lo,hi");
    sp_cmd->add_option("--mode", sp.mode, "also solve the 1-form quartic at mode pair m1,m2");
    sp_cmd->callback([&] {
        rep.command = "spectrum";
        HolonomyParam alpha(parse_scalar(sp.alpha, "alpha", rep));
        ConeParam kappa(parse_scalar(sp.kappa, "kappa", rep), alpha);
        const Scalar tau = parse_scalar(sp.tau, "tau", rep);
        rep.inputs["alpha"] = input_value(alpha.value());
        rep.inputs["kappa"] = input_value(kappa.value());
        rep.inputs["tau"] = input_value(tau);

        const auto roots = scalar_boundary_spectrum(alpha, kappa, tau);
        Json flat = Json::array();
        Json detail = Json::array();
        for (const auto& root : roots) {
            for (int i = 0; i < root.multiplicity; ++i) flat.push_back(json_scalar(root.re));
            Json row;
            row["zeta"] = json_scalar(root.re);
            row["m"] = root.mode.m1;
            row["multiplicity"] = root.multiplicity;
            detail.push_back(row);
        }
        rep.results["gamma"] = json_scalar(gamma_bound(alpha));
        rep.results["kappa_gamma"] = json_scalar(kappa.value() * gamma_bound(alpha));
        rep.results["roots"] = flat;
        rep.results["root_detail"] = detail;

        if (sp_cmd->count("--circle-range") > 0) {
            const auto [lo, hi] = parse_int_pair(sp.circle, "circle-range");
            rep.inputs["circle_range"] = pair_text(lo, hi);
            Json circle = Json::array();
            for (const auto& ev : circle_spectrum(alpha, kappa, lo, hi)) {
                Json row;
                row["m"] = ev.m;
                row["imag"] = json_scalar(ev.imag);
                circle.push_back(row);
            }
            rep.results["circle"] = circle;
        }
        if (sp_cmd->count("--mode") > 0) {
            const auto [m1, m2] = parse_int_pair(sp.mode, "mode");
            rep.inputs["mode"] = pair_text(m1, m2);
            const auto one = oneform_indicial_roots(alpha, kappa, m1, m2);
            Json oroots = Json::array();
            for (const auto& root : one.roots) oroots.push_back(root_row(root));
            Json block;
            block["x"] = json_scalar(one.quartic.x);
            block["y"] = json_scalar(one.quartic.y);
            block["rho"] = json_scalar(one.quartic.rho);
            block["coeff_zeta2"] = json_scalar(one.quartic.coeff_zeta2);
            block["coeff_const"] = json_scalar(one.quartic.coeff_const);
            block["roots"] = oroots;
            rep.results["oneform"] = block;
        }
    });

    // ---- gap ----
    struct {
        std::string alpha, kappa, tau;
        long long bound = 0;
    } gp;
    auto* gp_cmd = app.add_subcommand("gap", "1-form spectrum gap search with tail certification");
    gp_cmd->add_option("--alpha", gp.alpha, "holonomy in (0,1/2)")->required();
    gp_cmd->add_option("--kappa", gp.kappa, "cone sharpness, must exceed alpha")->required();
    gp_cmd->add_option("--tau", gp.tau, "window half-width, positive")->required();
    auto* gp_bound = gp_cmd->add_option("--search-bound", gp.bound, "mode search radius");
    gp_cmd->callback([&] {
        rep.command = "gap";
        HolonomyParam alpha(parse_scalar(gp.alpha, "alpha", rep));
        ConeParam kappa(parse_scalar(gp.kappa, "kappa", rep), alpha);
        const Scalar tau = parse_scalar(gp.tau, "tau", rep);
        rep.inputs["alpha"] = input_value(alpha.value());
        rep.inputs["kappa"] = input_value(kappa.value());
        rep.inputs["tau"] = input_value(tau);
        std::optional<long long> bound;
        if (gp_bound->count() > 0) {
            bound = gp.bound;
            rep.inputs["search_bound"] = gp.bound;
        }

        const SpectrumWindow window = oneform_spectrum_gap(alpha, kappa, tau.value(), bound);
        rep.results["holds"] = window.gap_holds();
        rep.results["certified"] = window.certified;
        rep.results["min_abs_re"] = json_number(window.min_abs_re);
        rep.results["min_mode"] = Json::array({window.min_mode.m1, window.min_mode.m2});
        rep.results["search_bound"] = window.search_bound;
        Json inside = Json::array();
        for (const auto& root : window.roots_inside) {
            Json row = root_row(root);
            row["m1"] = root.mode.m1;
            row["m2"] = root.mode.m2;
            inside.push_back(row);
        }
        rep.results["roots_inside"] = inside;
        if (!window.certified) {
            rep.status = "uncertified";
            rep.warnings.push_back(
                "tail modes beyond the search bound are not certified root-free");
            exit_code = 4;
        }
    });

    // ---- kappa-select ----
    struct {
        std::string alpha, tau;
        long long degree = 0;
    } ks;
    auto* ks_cmd = app.add_subcommand("kappa-select", "least kappa certifying a spectral gap");
    ks_cmd->add_option("--alpha", ks.alpha, "holonomy in (0,1/2)")->required();
    ks_cmd->add_option("--tau", ks.tau, "window half-width, positive")->required();
    ks_cmd->add_option("--degree", ks.degree, "form degree, 0 or 1")->required();
    ks_cmd->callback([&] {
        rep.command = "kappa-select";
        HolonomyParam alpha(parse_scalar(ks.alpha, "alpha", rep));
        const Scalar tau = parse_scalar(ks.tau, "tau", rep);
        rep.inputs["alpha"] = input_value(alpha.value());
        rep.inputs["tau"] = input_value(tau);
        rep.inputs["degree"] = ks.degree;
        const SelectKappaResult sel = select_kappa(alpha, tau, static_cast<int>(ks.degree));
        rep.results["kappa_min"] = json_scalar(sel.kappa_min);
        rep.results["kappa_min_exact"] = input_value(sel.kappa_min);
        rep.results["integer_ceiling"] = sel.integer_ceiling;
        rep.results["form_degree"] = sel.form_degree;
    });

    // ---- bessel ----
    struct {
        std::string alpha, kappa, delta, nu, r;
        long long m = 0;
    } bs;
    auto* bs_cmd = app.add_subcommand("bessel", "Bessel model: orders, weight windows, ODE checks");
    bs_cmd->add_option("--alpha", bs.alpha, "holonomy in (0,1/2)");
    bs_cmd->add_option("--kappa", bs.kappa, "cone sharpness, must exceed alpha");
    auto* bs_m = bs_cmd->add_option("--m", bs.m, "boundary mode for the Bessel order");
    auto* bs_delta = bs_cmd->add_option("--delta", bs.delta, "weight to test kernel conditions at");
    auto* bs_nu = bs_cmd->add_option("--nu", bs.nu, "Bessel order for --delta or --r");
    auto* bs_r = bs_cmd->add_option("--r", bs.r, "sample radii r1,r2,... in [1e-3, 50]");
    bs_cmd->callback([&] {
        rep.command = "bessel";
        bool any = false;
        std::optional<Scalar> nu_used;
        if (bs_cmd->count("--alpha") != bs_cmd->count("--kappa"))
            throw std::invalid_argument("alpha and kappa must be given together");
        if (bs_cmd->count("--alpha") > 0) {
            any = true;
            HolonomyParam alpha(parse_scalar(bs.alpha, "alpha", rep));
            ConeParam kappa(parse_scalar(bs.kappa, "kappa", rep), alpha);
            rep.inputs["alpha"] = input_value(alpha.value());
            rep.inputs["kappa"] = input_value(kappa.value());
            const WeightWindow window = invertibility_window(alpha, kappa);
            Json wj;
            wj["delta_lo"] = json_scalar(window.delta_lo);
            wj["delta_hi"] = json_scalar(window.delta_hi);
            rep.results["window"] = wj;
            nu_used = kappa.value() * gamma_bound(alpha);
            if (bs_m->count() > 0) {
                rep.inputs["m"] = bs.m;
                const ModeData md = mode_order(alpha, kappa, bs.m);
                Json oj;
                oj["m"] = md.m;
                oj["lambda"] = json_scalar(md.lambda);
                oj["nu"] = json_scalar(md.nu);
                rep.results["order"] = oj;
                nu_used = md.nu;
            }
        }
        if (bs_nu->count() > 0) {
            nu_used = parse_scalar(bs.nu, "nu", rep);
            rep.inputs["nu"] = input_value(*nu_used);
        }
        if (bs_delta->count() > 0) {
            any = true;
            if (!nu_used)
                throw std::invalid_argument("delta requires nu or alpha and kappa");
            const Scalar delta = parse_scalar(bs.delta, "delta", rep);
            rep.inputs["delta"] = input_value(delta);
            const KernelConditions kc = kernel_conditions(delta, *nu_used);
            Json cj;
            cj["kernel_trivial"] = kc.kernel_trivial;
            cj["cokernel_trivial"] = kc.cokernel_trivial;
            cj["at_endpoint"] = kc.at_endpoint;
            cj["nu"] = json_scalar(*nu_used);
            rep.results["conditions"] = cj;
        }
        if (bs_r->count() > 0) {
            any = true;
            if (!nu_used) throw std::invalid_argument("r requires nu or alpha and kappa");
            std::vector<double> samples;
            std::string echo;
            std::string rest = bs.r;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string piece = rest.substr(0, comma);
                const Scalar s = parse_scalar(piece, "r", rep);
                samples.push_back(s.value());
                if (!echo.empty()) echo += ",";
                echo += scalar_text(s);
                if (comma == std::string::npos) break;
                rest = rest.substr(comma + 1);
            }
            rep.inputs["r"] = echo;
            const double nu_val = nu_used->value();
            Json values = Json::array();
            for (double r : samples) {
                Json row;
                row["r"] = json_number(r);
                row["i"] = json_number(besseli(nu_val, r));
                row["i_prime"] = json_number(besseli_prime(nu_val, r));
                row["k"] = json_number(besselk(nu_val, r));
                row["k_prime"] = json_number(besselk_prime(nu_val, r));
                values.push_back(row);
            }
            rep.results["values"] = values;
            rep.results["residual"] = json_number(bessel_residual(nu_val, samples));
        }
        if (!any) throw std::invalid_argument("bessel: nothing to compute");
    });

    // ---- index ----
    struct {
        long long k = 0, l = 0, b1 = 0, b2plus = 0, genus = 0, self_int = 0;
        long long deg = 0, deg_k = 0;
        std::string glue;
    } ix;
    auto* ix_cmd = app.add_subcommand("index", "ASD moduli dimension with gluing and gauge shifts");
    ix_cmd->add_option("--k", ix.k, "instanton number")->required();
    ix_cmd->add_option("--l", ix.l, "monopole number")->required();
    ix_cmd->add_option("--b1", ix.b1, "first Betti number");
    ix_cmd->add_option("--b2plus", ix.b2plus, "positive-definite H^2 dimension");
    ix_cmd->add_option("--genus", ix.genus, "surface genus");
    ix_cmd->add_option("--self-int", ix.self_int, "surface self-intersection");
    auto* ix_glue = ix_cmd->add_option("--glue", ix.glue, "limiting connection: abelian or irreducible");
    auto* ix_deg = ix_cmd->add_option("--deg", ix.deg, "gauge transformation degree");
    auto* ix_deg_k = ix_cmd->add_option("--deg-k", ix.deg_k, "degree of the restriction to the knot");
    ix_cmd->callback([&] {
        rep.command = "index";
        SurfacePairTopology topo;
        topo.k = ix.k;
        topo.l = ix.l;
        topo.b1 = ix.b1;
        topo.b2_plus = ix.b2plus;
        topo.genus = ix.genus;
        topo.self_int = ix.self_int;
        rep.inputs["k"] = topo.k;
        rep.inputs["l"] = topo.l;
        rep.inputs["b1"] = topo.b1;
        rep.inputs["b2plus"] = topo.b2_plus;
        rep.inputs["genus"] = topo.genus;
        rep.inputs["self_int"] = topo.self_int;
        long long current = asd_dimension(topo);
        rep.results["dimension"] = current;
        if (ix_glue->count() > 0) {
            rep.inputs["glue"] = ix.glue;
            current = glue_index(current, parse_kind(ix.glue));
            rep.results["glued"] = current;
        }
        if (ix_deg->count() > 0 || ix_deg_k->count() > 0) {
            rep.inputs["deg"] = ix.deg;
            rep.inputs["deg_k"] = ix.deg_k;
            const GaugeTransformDegrees d{ix.deg, ix.deg_k};
            rep.results["shifted"] = gauge_index_shift(current, d);
            rep.results["crosscheck"] = gauge_shift_crosscheck(d);
        }
    });

    // ---- chern-weil ----
    struct {
        long long k = 0, l = 0, self_int = 0, deg = 0, deg_k = 0;
        std::string alpha, cs;
    } cw;
    auto* cw_cmd = app.add_subcommand("chern-weil", "holonomy-weighted action and CS gauge shift");
    cw_cmd->add_option("--k", cw.k, "instanton number")->required();
    cw_cmd->add_option("--l", cw.l, "monopole number")->required();
    cw_cmd->add_option("--alpha", cw.alpha, "holonomy in (0,1/2)")->required();
    cw_cmd->add_option("--self-int", cw.self_int, "surface self-intersection");
    auto* cw_cs = cw_cmd->add_option("--cs", cw.cs, "Chern-Simons value to shift");
    auto* cw_deg = cw_cmd->add_option("--deg", cw.deg, "gauge transformation degree");
    auto* cw_deg_k = cw_cmd->add_option("--deg-k", cw.deg_k, "degree of the restriction to the knot");
    cw_cmd->callback([&] {
        rep.command = "chern-weil";
        HolonomyParam alpha(parse_scalar(cw.alpha, "alpha", rep));
        rep.inputs["alpha"] = input_value(alpha.value());
        rep.inputs["k"] = cw.k;
        rep.inputs["l"] = cw.l;
        rep.inputs["self_int"] = cw.self_int;
        const Scalar action = chern_weil_action(cw.k, cw.l, alpha, cw.self_int);
        rep.results["action"] = json_scalar(action);
        rep.results["action_exact"] = input_value(action);
        if (cw_cs->count() > 0 || cw_deg->count() > 0 || cw_deg_k->count() > 0) {
            const Scalar cs = cw_cs->count() > 0 ? parse_scalar(cw.cs, "cs", rep) : Scalar(0);
            rep.inputs["cs"] = input_value(cs);
            rep.inputs["deg"] = cw.deg;
            rep.inputs["deg_k"] = cw.deg_k;
            const Scalar shifted = cs_gauge_shift(cs, alpha, {cw.deg, cw.deg_k});
            rep.results["cs_shifted"] = json_scalar(shifted);
            rep.results["cs_shifted_exact"] = input_value(shifted);
        }
    });

    // ---- grading ----
    struct {
        long long mu_tilde = 0, ind = 0, deg = 0, deg_k = 0;
        std::string kind_a, kind_b;
    } gr;
    auto* gr_cmd = app.add_subcommand("grading", "mod-4 grading calculus");
    auto* gr_mu = gr_cmd->add_option("--mu-tilde", gr.mu_tilde, "integer grading to reduce");
    auto* gr_ind = gr_cmd->add_option("--ind", gr.ind, "index of the adapted pair");
    auto* gr_ka = gr_cmd->add_option("--kind-a", gr.kind_a, "left limit: abelian or irreducible");
    auto* gr_kb = gr_cmd->add_option("--kind-b", gr.kind_b, "right limit: abelian or irreducible");
    auto* gr_deg = gr_cmd->add_option("--deg", gr.deg, "gauge transformation degree");
    auto* gr_deg_k = gr_cmd->add_option("--deg-k", gr.deg_k, "degree of the restriction to the knot");
    gr_cmd->callback([&] {
        rep.command = "grading";
        long long mu = 0;
        if (gr_mu->count() > 0 && gr_ind->count() > 0)
            throw std::invalid_argument("give either mu-tilde or ind, not both");
        if (gr_mu->count() > 0) {
            mu = gr.mu_tilde;
            rep.inputs["mu_tilde"] = mu;
        } else if (gr_ind->count() > 0) {
            if (gr_ka->count() == 0 || gr_kb->count() == 0)
                throw std::invalid_argument("ind requires kind-a and kind-b");
            rep.inputs["ind"] = gr.ind;
            rep.inputs["kind_a"] = gr.kind_a;
            rep.inputs["kind_b"] = gr.kind_b;
            mu = mu_tilde_pair(gr.ind, parse_kind(gr.kind_a), parse_kind(gr.kind_b));
        } else {
            throw std::invalid_argument("provide mu-tilde, or ind with kind-a and kind-b");
        }
        rep.results["mu_tilde"] = mu;
        rep.results["mu_mod4"] = grading_mod4(mu);
        if (gr_deg->count() > 0 || gr_deg_k->count() > 0) {
            rep.inputs["deg"] = gr.deg;
            rep.inputs["deg_k"] = gr.deg_k;
            const long long shifted = gauge_index_shift(mu, {gr.deg, gr.deg_k});
            rep.results["mu_tilde_shifted"] = shifted;
            rep.results["mu_mod4_shifted"] = grading_mod4(shifted);
        }
    });

    // ---- flat ----
    struct {
        std::string knot, alpha;
    } fl;
    auto* fl_cmd = app.add_subcommand("flat", "flat SU(2) classes with fixed meridian trace");
    fl_cmd->add_option("--knot", fl.knot, "torus knot p,q")->required();
    fl_cmd->add_option("--alpha", fl.alpha, "holonomy in (0,1/2)")->required();
    fl_cmd->callback([&] {
        rep.command = "flat";
        const auto [p, q] = parse_int_pair(fl.knot, "knot");
        const TorusKnot knot(p, q);
        HolonomyParam alpha(parse_scalar(fl.alpha, "alpha", rep));
        rep.inputs["knot"] = pair_text(knot.p, knot.q);
        rep.inputs["alpha"] = input_value(alpha.value());

        const MeridionalHolonomy hol = meridional_holonomy(alpha);
        const MeridianWord word = meridian_word(knot);
        const FlatConnectionClass ab = abelian_class(alpha, knot);
        FlatSet set = irreducible_flat_set(knot, alpha);
        for (const auto& warning : set.warnings) rep.warnings.push_back(warning);
        if (!ab.isolated)
            rep.warnings.push_back(
                "alpha is an Alexander degeneracy: the reducible class is not isolated");

        rep.results["meridian_trace"] = json_number(hol.trace);
        Json wj;
        wj["s"] = word.s;
        wj["r"] = word.r;
        rep.results["meridian_word"] = wj;
        const PillowcasePoint abp = pillowcase_coords(ab);
        Json aj;
        aj["meridian_angle"] = json_number(ab.meridian_angle);
        aj["longitude_angle"] = json_number(ab.longitude_angle);
        aj["isolated"] = ab.isolated;
        aj["pillowcase_x"] = json_number(abp.x);
        aj["pillowcase_y"] = json_number(abp.y);
        rep.results["abelian"] = aj;
        Json classes = Json::array();
        for (const auto& cls : set.classes) {
            const PillowcasePoint pt = pillowcase_coords(cls);
            Json row;
            row["a"] = cls.a;
            row["b"] = cls.b;
            row["psi"] = json_number(cls.psi);
            row["longitude_angle"] = json_number(cls.longitude_angle);
            row["isolated"] = cls.isolated;
            row["pillowcase_x"] = json_number(pt.x);
            row["pillowcase_y"] = json_number(pt.y);
            classes.push_back(row);
        }
        rep.results["classes"] = classes;
        rep.results["count"] = static_cast<long long>(set.classes.size());
    });

    // ---- alexander ----
    struct {
        std::string knot;
    } al;
    auto* al_cmd = app.add_subcommand("alexander", "Alexander polynomial and degenerate holonomies");
    al_cmd->add_option("--knot", al.knot, "torus knot p,q")->required();
    al_cmd->callback([&] {
        rep.command = "alexander";
        const auto [p, q] = parse_int_pair(al.knot, "knot");
        const TorusKnot knot(p, q);
        rep.inputs["knot"] = pair_text(knot.p, knot.q);
        const AlexanderPolynomial delta = alexander_torus(knot);
        rep.results["coefficients"] = delta.coefficients;
        rep.results["degree"] = delta.degree();
        Json degen = Json::array();
        for (const Scalar& a : degenerate_alphas(knot)) degen.push_back(input_value(a));
        rep.results["degenerate_alphas"] = degen;
    });

    // ---- distortion ----
    struct {
        std::string alpha, kappa, kappa_prime;
    } ds;
    auto* ds_cmd = app.add_subcommand("distortion", "metric distortion bounds between cone metrics");
    auto* ds_alpha = ds_cmd->add_option("--alpha", ds.alpha, "holonomy in (0,1/2)");
    ds_cmd->add_option("--kappa", ds.kappa, "cone sharpness")->required();
    auto* ds_kp = ds_cmd->add_option("--kappa-prime", ds.kappa_prime, "second cone sharpness <= kappa");
    ds_cmd->callback([&] {
        rep.command = "distortion";
        const Scalar kappa = parse_scalar(ds.kappa, "kappa", rep);
        rep.inputs["kappa"] = input_value(kappa);
        bool any = false;
        if (ds_alpha->count() > 0) {
            any = true;
            HolonomyParam alpha(parse_scalar(ds.alpha, "alpha", rep));
            rep.inputs["alpha"] = input_value(alpha.value());
            const DistortionBound bound = conformal_distortion(alpha, kappa);
            rep.results["conformal"] = json_scalar(bound.value);
            rep.results["conformal_exact"] = input_value(bound.value);
        }
        if (ds_kp->count() > 0) {
            any = true;
            const Scalar kp = parse_scalar(ds.kappa_prime, "kappa-prime", rep);
            rep.inputs["kappa_prime"] = input_value(kp);
            const DistortionBound bound = cone_interp_distortion(kappa, kp);
            rep.results["interpolation"] = json_scalar(bound.value);
            rep.results["interpolation_exact"] = input_value(bound.value);
        }
        if (!any) throw std::invalid_argument("provide alpha or kappa-prime");
    });

    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write the report to a file instead of stdout");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        rep.status = "error";
        rep.message = e.what();
        if (rep.command.empty()) rep.command = "parse";
        err << rep.json_text();
        err << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        rep.status = "error";
        rep.message = e.what();
        err << rep.json_text();
        return 2;
    } catch (const std::domain_error& e) {
        rep.status = "error";
        rep.message = e.what();
        err << rep.json_text();
        return 2;
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.message = e.what();
        err << rep.json_text();
        return 1;
    }

    const std::string text = format == "csv" ? rep.csv_text() : rep.json_text();
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        file << text;
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return 1;
        }
    } else {
        out << text;
    }
    return exit_code;
}

}  // namespace singedge
