// Acceptance gate: runs every criterion at its stated tolerance and prints
// one [PASS]/[FAIL] line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "prebloch/cyclefile.hpp"
#include "prebloch/testing.hpp"

using namespace prebloch;
using testing::Rng;

namespace {

int g_failures = 0;

void criterion(const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++g_failures;
}

std::string fixture(const std::string& name) {
    return std::string(PREBLOCH_FIXTURE_DIR) + "/" + name;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::int64_t kRad = 3;

Chain<CoinvariantGen> reduce_q(const Chain<IdealTuple>& c) {
    return coinvariant_reduce(c, CoeffMode::Q);
}

void figure_eight_end_to_end() {
    auto start = std::chrono::steady_clock::now();
    std::string cmd = std::string(PREBLOCH_CLI_PATH) + " verify " + fixture("figure8.json") +
                      " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    double elapsed = seconds_since(start);

    CycleFile f = CycleFile::load(fixture("figure8.json"));
    CuspData cusps = f.resolve_cusps(f.generators);
    VerifyReport r = verify_routes(f.decorated_chain(f.generators), cusps, f.mode);
    Float expected("2.029883212819");
    bool ok = rc == 0 && elapsed < 5.0 && r.chains_equal &&
              abs(r.volume_left - expected) < Float(1e-6) &&
              abs(r.volume_right - expected) < Float(1e-6);
    criterion("figure-eight end-to-end: verify exits 0, routes equal, volume 2.029883212819 +-1e-6, <5s",
              ok);
}

void beta_well_definedness() {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    Chain<IdealTuple> z = f.raw_chain();
    PreBlochElem beta = cr_class(z, CoeffMode::Q);
    Float vol = algvol(beta);

    Rng rng(2024);
    bool ok = true;
    for (int k = 0; k < 5 && ok; ++k) {
        // a degree-4 boundary whose reduction vanishes: del(g.u - u)
        IdealTuple u = testing::random_tuple(rng, kRad, 5);
        Mat2 g = testing::random_unimodular(rng, kRad);
        Chain<IdealTuple> w;
        w.add(mobius_apply(g, u), Rational(1));
        w.add(u, Rational(-1));
        Chain<IdealTuple> z2 = z + tuple_boundary(w);
        PreBlochElem beta2 = cr_class(z2, CoeffMode::Q);
        ok = ok && beta2.chain == beta.chain;
        ok = ok && abs(algvol(beta2) - vol) < Float(1e-8);
        // fully generic boundary: class-level equality via the volume
        Chain<IdealTuple> z3 = z + tuple_boundary(testing::random_tuple(rng, kRad, 5));
        ok = ok && abs(algvol(cr_class(z3, CoeffMode::Q)) - vol) < Float(1e-8);
    }
    criterion("beta well-definedness: shipped cycle vs cycle+boundary give equal reduced beta and volume",
              ok);
}

void dilog_constants() {
    Float d_i = bloch_wigner(FloatC(Float(0), Float(1)));
    bool ok = abs(d_i - Float("0.915965594177")) < Float(1e-9);
    ok = ok && abs(d_i - catalan_constant()) < Float(1e-9);
    Rng rng(99);
    for (int k = 0; k < 100 && ok; ++k) {
        Float x(static_cast<double>(rng.pick(-5000, 5000)) / 977);
        ok = abs(bloch_wigner(FloatC(x, Float(0)))) < Float(1e-12);
    }
    criterion("dilogarithm constants: D(i) = Catalan +-1e-9 and D = 0 on 100 real samples to 1e-12", ok);
}

void five_term_suite() {
    Rng rng(55);
    bool ok = true;
    for (int k = 0; k < 1000 && ok; ++k) {
        auto pts = testing::random_distinct_points_in_field(rng, -3, 5);
        IdealTuple w(pts);
        Chain<IdealTuple> boundary = tuple_boundary(w);
        ok = ok && is_cycle(boundary, Quotient::Free);
        PreBlochElem b = five_term_boundary(pts[0], pts[1], pts[2], pts[3], pts[4]);
        ok = ok && abs(algvol(b)) < Float(1e-8);
    }
    criterion("five-term suite: 1000 random 5-tuples, |volume(boundary)| < 1e-8, boundary is a cycle",
              ok);
}

void chain_map_suites() {
    Rng rng(77);
    bool ok = true;
    for (int k = 0; k < 1000 && ok; ++k) {
        IdealTuple t = testing::random_tuple(rng, kRad, static_cast<int>(rng.pick(3, 6)), false);
        ok = tuple_boundary(tuple_boundary(t)).is_zero();
        BarSimplex b = testing::random_bar_simplex(rng, kRad, static_cast<int>(rng.pick(2, 4)));
        ok = ok && bar_boundary(bar_boundary(b)).is_zero();
        Cusp cusp = testing::random_parabolic_cusp(rng, kRad);
        ConeSimplex cone = testing::random_cone_simplex(rng, cusp, static_cast<int>(rng.pick(1, 3)));
        ok = ok && dcone_boundary(dcone_boundary(Chain<DConeGen>(DConeGen(cone)))).is_zero();
    }
    criterion("chain maps 1/4: boundary squares to zero on 1000 generators in all three complexes", ok);

    ok = true;
    CuspData data;
    data.c0 = ProjPoint::finite(Scalar(Rational(0)));
    data.cusps = {testing::random_parabolic_cusp(rng, kRad)};
    data.validate();
    for (int k = 0; k < 1000 && ok; ++k) {
        BarSimplex b = testing::random_bar_simplex(rng, kRad, static_cast<int>(rng.pick(2, 4)));
        ok = reduce_q(tuple_boundary(ev_bar(b, data.c0))) ==
             reduce_q(ev_chain(dcone_boundary(DConeGen(b)), data));
    }
    for (int k = 0; k < 500 && ok; ++k) {
        CuspData rnd;
        rnd.c0 = data.c0;
        rnd.cusps = {testing::random_parabolic_cusp(rng, kRad)};
        rnd.validate();
        ConeSimplex cone = testing::random_cone_simplex(rng, rnd.cusps[0], static_cast<int>(rng.pick(1, 3)));
        ok = reduce_q(tuple_boundary(ev_cone(cone, rnd))) ==
             reduce_q(ev_chain(dcone_boundary(DConeGen(cone)), rnd));
    }
    criterion("chain maps 2/4: evaluation commutes with boundaries on 1000 bar + 500 cone simplices", ok);

    ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
        CuspData rnd;
        rnd.c0 = data.c0;
        rnd.cusps = {testing::random_parabolic_cusp(rng, kRad)};
        rnd.validate();
        DecoratedSimplex s = testing::random_decorated_simplex(rng, kRad, rnd.cusps[0],
                                                               static_cast<int>(rng.pick(2, 4)),
                                                               rng.coin());
        ok = reduce_q(tuple_boundary(ideal_push(s, rnd))) ==
             reduce_q(ideal_push(decorated_boundary(s), rnd));
    }
    criterion("chain maps 3/4: basepoint push commutes with boundaries on 500 decorated simplices", ok);

    ok = true;
    for (int k = 0; k < 200 && ok; ++k) {
        CuspData rnd;
        rnd.c0 = testing::random_point(rng, kRad, false);
        rnd.cusps = {testing::random_parabolic_cusp(rng, kRad)};
        rnd.validate();
        DecoratedSimplex s = testing::random_decorated_simplex(rng, kRad, rnd.cusps[0],
                                                               static_cast<int>(rng.pick(1, 4)),
                                                               rng.coin());
        ok = reduce_q(Chain<IdealTuple>(ev_gen(to_bar(s), rnd))) ==
             reduce_q(Chain<IdealTuple>(ideal_push(s, rnd)));
    }
    if (ok) {
        CycleFile f = CycleFile::load(fixture("figure8.json"));
        CuspData cusps = f.resolve_cusps(f.generators);
        for (const auto& [s, coeff] : f.decorated_chain(f.generators)) {
            ok = ok && reduce_q(Chain<IdealTuple>(ev_gen(to_bar(s), cusps))) ==
                           reduce_q(Chain<IdealTuple>(ideal_push(s, cusps)));
        }
    }
    criterion("chain maps 4/4: the square commutes on 200 random + all fixture simplices", ok);
}

void coinvariant_invariance() {
    Rng rng(88);
    bool ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
        IdealTuple t = testing::random_tuple(rng, kRad, 4);
        Mat2 g = testing::random_unimodular(rng, kRad);
        ok = reduce_q(Chain<IdealTuple>(mobius_apply(g, t))) == reduce_q(Chain<IdealTuple>(t));
    }
    criterion("coinvariant G-invariance on 500 random (g, tuple) pairs, exact", ok);
}

void degree_machinery() {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    DegreeReport report = check_ideal_fundamental_cycle(f.raw_chain(), 100, 7);
    bool ok = report.pass && report.degrees_all_one && report.samples == 100 &&
              report.l1_norm == Rational(2);
    criterion("degree machinery 1/3: fixture certificate passes with 100 samples all equal to 1", ok);

    Rng rng(33);
    ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        ProjPoint cr = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        int cr_sign = cr.is_infinity() ? 0 : cr.value().im_sign();
        ok = simplex_orientation(StraightTetra(IdealTuple(pts))) == cr_sign;
    }
    criterion("degree machinery 2/3: orientation matches the cross-ratio sign on 500 ideal tetras", ok);

    ok = true;
    int instances = 0;
    while (instances < 20 && ok) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        StraightTetra tet{IdealTuple(pts)};
        if (simplex_orientation(tet) == 0) continue;
        Chain<IdealTuple> z{IdealTuple(pts)};
        Chain<IdealTuple> zdw = z + tuple_boundary(testing::random_tuple(rng, kRad, 5));
        auto ca = as_tetra_chain(z), cb = as_tetra_chain(zdw);
        int checked = 0;
        for (unsigned s = 0; checked < 50 && s < 600 && ok; ++s) {
            try {
                H3Point y = sample_inside(tet, 131 * instances + s);
                ok = point_degree(ca, y) == point_degree(cb, y);
                ++checked;
            } catch (const OnBoundaryFace&) {
            }
        }
        ok = ok && checked == 50;
        ++instances;
    }
    criterion("degree machinery 3/3: degree invariant under boundaries at 50 points x 20 instances", ok);
}

void selftest_quick() {
    auto start = std::chrono::steady_clock::now();
    std::string cmd = std::string(PREBLOCH_CLI_PATH) + " selftest --quick > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    double elapsed = seconds_since(start);
    criterion("selftest --quick finishes under 5 s with zero failures", rc == 0 && elapsed < 5.0);
}

}  // namespace

int main() {
    set_precision_bits(212);
    figure_eight_end_to_end();
    beta_well_definedness();
    dilog_constants();
    five_term_suite();
    chain_map_suites();
    coinvariant_invariance();
    degree_machinery();
    selftest_quick();
    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: FAILURES: " + std::to_string(g_failures))
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
