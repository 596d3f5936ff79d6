// Command-line front end: beta, verify, degree, fiveterm, volume, selftest.
// Exit codes: 0 success, 1 input error, 2 mathematical precondition failure,
// 3 verification mismatch.

#include <CLI11.hpp>
#include <iostream>

#include "prebloch/cyclefile.hpp"
#include "prebloch/testing.hpp"

using namespace prebloch;

namespace {

struct Options {
    std::string path;
    std::string rho_path;
    std::string c0_text;
    std::string format = "text";
    std::string coeff_mode;
    unsigned precision = 0;
    unsigned seed = 20250613;
    int samples = 100;
    bool skip_degree = false;
    bool quick = false;
    int count = 1000;
};

CycleFile load_file(Options& opt) {
    CycleFile f = CycleFile::load(opt.path);
    if (opt.precision) {
        f.precision = opt.precision;
        set_precision_bits(opt.precision);
    }
    if (!opt.coeff_mode.empty()) f.mode = opt.coeff_mode == "Z" ? CoeffMode::Z : CoeffMode::Q;
    if (!opt.c0_text.empty()) f.c0_text = opt.c0_text;
    return f;
}

std::string chain_text(const Chain<CoinvariantGen>& c, const FieldSpec& field) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, coeff] : c) {
        if (!first) out += " + ";
        first = false;
        out += rational_str(coeff) + "*[" + g.tuple.points[3].str(field) + "]";
        if (g.torsion) out += "{torsion}";
    }
    return out;
}

int cmd_beta(Options& opt) {
    CycleFile f = load_file(opt);
    Chain<IdealTuple> cycle;
    if (!f.raw_terms.empty())
        cycle = f.raw_chain();
    else if (!f.shape_terms.empty())
        cycle = f.shapes_chain();
    else
        throw ParseError("beta needs a raw cycle or shape payload");

    if (!is_cycle(cycle, Quotient::Coinvariant, f.mode)) throw NotACycle();
    if (!opt.skip_degree) {
        DegreeReport report = check_ideal_fundamental_cycle(cycle, opt.samples, opt.seed, f.mode);
        if (!report.pass) {
            std::cout << report_text(report);
            throw DegreeCertificateFailed("sampled degrees are not all one");
        }
        std::cout << "degree_certificate: pass (l1_norm " << report.l1_norm << ", seed "
                  << report.seed << ")\n";
    }
    PreBlochElem beta = cr_class(cycle, f.mode);
    std::cout << "beta: " << chain_text(beta.chain, f.field) << "\n";
    std::cout << "volume: " << algvol(beta).str(13) << "\n";
    std::cout << "precision_bits: " << precision_bits() << "\n";
    return 0;
}

int cmd_verify(Options& opt) {
    CycleFile f = load_file(opt);
    if (f.decorated_terms.empty()) throw ParseError("verify needs a decorated payload");
    auto table = f.generators;
    if (!opt.rho_path.empty()) table = load_representation(opt.rho_path, f.field, f.exact_scalars);
    CuspData cusps = f.resolve_cusps(table);
    if (!opt.c0_text.empty()) cusps.c0 = ProjPoint::parse(opt.c0_text, f.field, f.exact_scalars);
    Chain<DecoratedSimplex> cycle = f.decorated_chain(table);
    VerifyReport report = verify_routes(cycle, cusps, f.mode);
    std::cout << report_text(report, f.field);
    if (!report.passed(Float(1e-8))) return 3;
    return 0;
}

int cmd_degree(Options& opt) {
    CycleFile f = load_file(opt);
    Chain<IdealTuple> cycle = !f.raw_terms.empty() ? f.raw_chain() : f.shapes_chain();
    DegreeReport report = check_ideal_fundamental_cycle(cycle, opt.samples, opt.seed, f.mode);
    std::cout << report_text(report);
    return report.pass ? 0 : 2;
}

int cmd_volume(Options& opt) {
    CycleFile f = load_file(opt);
    Chain<IdealTuple> chain = !f.shape_terms.empty() ? f.shapes_chain() : f.raw_chain();
    std::cout << "volume: " << algvol(chain).str(13) << "\n";
    std::cout << "precision_bits: " << precision_bits() << "\n";
    return 0;
}

int cmd_fiveterm(Options& opt) {
    set_precision_bits(opt.precision ? opt.precision : 212);
    testing::Rng rng(opt.seed);
    Float worst(0);
    int n = opt.quick ? 100 : opt.count;
    for (int k = 0; k < n; ++k) {
        auto pts = testing::random_distinct_points(rng, 3, 5);
        PreBlochElem b = five_term_boundary(pts[0], pts[1], pts[2], pts[3], pts[4]);
        Float v = abs(algvol(b));
        if (v > worst) worst = v;
    }
    std::cout << "five_term_samples: " << n << "\n";
    std::cout << "max_volume_residual: " << worst.str(4) << "\n";
    bool ok = worst < Float(1e-8);
    std::cout << "pass: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 2;
}

// Randomized invariant suites with a fixed default seed; the counts drop
// under --quick to keep the run under a few seconds.
int cmd_selftest(Options& opt) {
    set_precision_bits(opt.precision ? opt.precision : 212);
    testing::Rng rng(opt.seed);
    const std::int64_t rad = 3;
    int failures = 0;
    auto suite = [&](const std::string& name, int n, auto&& body) {
        int bad = 0;
        for (int k = 0; k < n; ++k)
            if (!body()) ++bad;
        std::cout << name << ": " << (n - bad) << "/" << n << (bad ? "  FAIL" : "") << "\n";
        failures += bad;
    };
    int scale = opt.quick ? 10 : 100;

    suite("field_axioms", 10 * scale, [&] {
        Scalar a = testing::random_scalar(rng, rad), b = testing::random_scalar(rng, rad),
               c = testing::random_scalar(rng, rad);
        return (a + b) * c == a * c + b * c && (a.is_zero() || a * a.inverse() == Scalar(Rational(1)));
    });
    suite("boundary_squared_tuples", 5 * scale, [&] {
        IdealTuple t = testing::random_tuple(rng, rad, static_cast<int>(rng.pick(3, 6)), false);
        return tuple_boundary(tuple_boundary(t)).is_zero();
    });
    suite("boundary_squared_bar_cone", 5 * scale, [&] {
        BarSimplex b = testing::random_bar_simplex(rng, rad, static_cast<int>(rng.pick(2, 4)));
        Cusp cusp = testing::random_parabolic_cusp(rng, rad);
        ConeSimplex cone = testing::random_cone_simplex(rng, cusp, 2);
        return bar_boundary(bar_boundary(b)).is_zero() &&
               dcone_boundary(dcone_boundary(Chain<DConeGen>(DConeGen(cone)))).is_zero();
    });
    suite("coinvariant_g_invariance", 3 * scale, [&] {
        IdealTuple t = testing::random_tuple(rng, rad, 4);
        Mat2 g = testing::random_unimodular(rng, rad);
        return coinvariant_reduce(Chain<IdealTuple>(t), CoeffMode::Q) ==
               coinvariant_reduce(Chain<IdealTuple>(mobius_apply(g, t)), CoeffMode::Q);
    });
    suite("evaluation_chain_map", 3 * scale, [&] {
        CuspData data;
        data.c0 = ProjPoint::finite(Scalar(Rational(0)));
        data.cusps = {testing::random_parabolic_cusp(rng, rad)};
        data.validate();
        BarSimplex b = testing::random_bar_simplex(rng, rad, 3);
        ConeSimplex cone = testing::random_cone_simplex(rng, data.cusps[0], 2);
        auto red = [](const Chain<IdealTuple>& c) { return coinvariant_reduce(c, CoeffMode::Q); };
        return red(tuple_boundary(ev_bar(b, data.c0))) ==
                   red(ev_chain(dcone_boundary(DConeGen(b)), data)) &&
               red(tuple_boundary(ev_cone(cone, data))) ==
                   red(ev_chain(dcone_boundary(DConeGen(cone)), data));
    });
    suite("push_square_commutes", 2 * scale, [&] {
        CuspData data;
        data.c0 = ProjPoint::finite(Scalar(Rational(0)));
        data.cusps = {testing::random_parabolic_cusp(rng, rad)};
        data.validate();
        DecoratedSimplex s =
            testing::random_decorated_simplex(rng, rad, data.cusps[0], 3, rng.coin());
        auto red = [](const Chain<IdealTuple>& c) { return coinvariant_reduce(c, CoeffMode::Q); };
        return red(Chain<IdealTuple>(ev_gen(to_bar(s), data))) ==
                   red(Chain<IdealTuple>(ideal_push(s, data))) &&
               red(tuple_boundary(ideal_push(s, data))) ==
                   red(ideal_push(decorated_boundary(s), data));
    });
    suite("five_term_volume", scale, [&] {
        auto pts = testing::random_distinct_points(rng, rad, 5);
        return abs(algvol(five_term_boundary(pts[0], pts[1], pts[2], pts[3], pts[4]))) < Float(1e-8);
    });
    suite("dilog_symmetries", 2 * scale, [&] {
        FloatC z(Float(static_cast<double>(rng.pick(-200, 200)) / 100),
                 Float(static_cast<double>(rng.pick(1, 200)) / 100));
        FloatC one(Float(1), Float(0));
        Float d = bloch_wigner(z);
        return abs(bloch_wigner(z.conj()) + d) < Float(1e-10) &&
               abs(bloch_wigner(one / z) + d) < Float(1e-10) &&
               abs(bloch_wigner(one - z) + d) < Float(1e-10);
    });
    suite("degree_homology_invariance", opt.quick ? 4 : 20, [&] {
        for (;;) {
            auto pts = testing::random_distinct_points(rng, rad, 4);
            IdealTuple base(pts);
            StraightTetra tet(base);
            if (simplex_orientation(tet) == 0) continue;
            Chain<IdealTuple> z(base);
            Chain<IdealTuple> zdw = z + tuple_boundary(testing::random_tuple(rng, rad, 5));
            auto ca = as_tetra_chain(z);
            auto cb = as_tetra_chain(zdw);
            int checked = 0;
            for (unsigned s = 0; checked < (opt.quick ? 10 : 50) && s < 400; ++s) {
                try {
                    H3Point y = sample_inside(tet, opt.seed + s);
                    if (point_degree(ca, y) != point_degree(cb, y)) return false;
                    ++checked;
                } catch (const OnBoundaryFace&) {
                }
            }
            return checked > 0;
        }
    });
    suite("orientation_vs_cross_ratio", 2 * scale, [&] {
        auto pts = testing::random_distinct_points(rng, rad, 4);
        ProjPoint cr = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        int cr_sign = cr.is_infinity() ? 0 : cr.value().im_sign();
        return simplex_orientation(StraightTetra(IdealTuple(pts))) == cr_sign;
    });

    std::cout << (failures == 0 ? "selftest: all suites passed" : "selftest: FAILURES") << "\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pre-Bloch invariants of ideal fundamental cycles"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_file) {
        if (needs_file) cmd->add_option("file", opt.path, "cycle file")->required();
        cmd->add_option("--precision", opt.precision, "working precision in bits");
        cmd->add_option("--seed", opt.seed, "seed for randomized parts");
        cmd->add_option("--coeff-mode", opt.coeff_mode, "Z or Q")
            ->check(CLI::IsMember({"Z", "Q"}));
        cmd->add_option("--format", opt.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    CLI::App* beta = app.add_subcommand("beta", "reduced invariant and volume of an ideal cycle");
    add_common(beta, true);
    beta->add_flag("--skip-degree", opt.skip_degree, "skip the degree certificate");
    beta->add_option("--samples", opt.samples, "degree certificate sample count");

    CLI::App* verify = app.add_subcommand("verify", "compare the bar route against the ideal route");
    add_common(verify, true);
    verify->add_option("--rho", opt.rho_path, "representation table file");
    verify->add_option("--c0", opt.c0_text, "base ideal point");

    CLI::App* degree = app.add_subcommand("degree", "ideal fundamental cycle certificate");
    add_common(degree, true);
    degree->add_option("--samples", opt.samples, "sample count");

    CLI::App* volume = app.add_subcommand("volume", "signed volume of a shape or raw payload");
    add_common(volume, true);

    CLI::App* fiveterm = app.add_subcommand("fiveterm", "randomized five-term relation residuals");
    add_common(fiveterm, false);
    fiveterm->add_option("--count", opt.count, "number of random 5-tuples");
    fiveterm->add_flag("--quick", opt.quick, "reduced iteration count");

    CLI::App* selftest = app.add_subcommand("selftest", "randomized invariant suites");
    add_common(selftest, false);
    selftest->add_flag("--quick", opt.quick, "reduced iteration counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (beta->parsed()) return cmd_beta(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (degree->parsed()) return cmd_degree(opt);
        if (volume->parsed()) return cmd_volume(opt);
        if (fiveterm->parsed()) return cmd_fiveterm(opt);
        if (selftest->parsed()) return cmd_selftest(opt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
