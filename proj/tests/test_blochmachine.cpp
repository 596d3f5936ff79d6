#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "prebloch/prebloch_group.hpp"
#include "prebloch/testing.hpp"

using namespace prebloch;
using testing::Rng;

namespace {
const std::int64_t kRad = 3;

ProjPoint P(long v) { return ProjPoint::finite(Scalar(Rational(v))); }
const ProjPoint inf = ProjPoint::infinity();

FloatC unit(double theta_num, double theta_den) {
    Float theta = Float(theta_num) / Float(theta_den) * pi_value();
    return {cos(theta), sin(theta)};
}

// Independent oracle: the Lobachevsky-style integral -int_0^theta log|2 sin(t/2)| dt
// equals D(e^{i theta}); evaluated by adaptive Simpson quadrature in double.
double clausen_quadrature(double theta) {
    auto f = [](double t) { return t == 0 ? 0.0 : -std::log(std::fabs(2 * std::sin(t / 2))); };
    std::function<double(double, double, double, double, double, int)> simpson =
        [&](double a, double b, double fa, double fb, double fm, int depth) -> double {
        double m = (a + b) / 2;
        double lm = (a + m) / 2, rm = (m + b) / 2;
        double flm = f(lm), frm = f(rm);
        double whole = (b - a) / 6 * (fa + 4 * fm + fb);
        double left = (m - a) / 6 * (fa + 4 * flm + fm);
        double right = (b - m) / 6 * (fm + 4 * frm + fb);
        if (depth > 24 || std::fabs(left + right - whole) < 1e-13) return left + right;
        return simpson(a, m, fa, fm, flm, depth + 1) + simpson(m, b, fm, fb, frm, depth + 1);
    };
    double eps = 1e-9;  // skip the integrable log singularity at 0
    return simpson(eps, theta, f(eps), f(theta), f((eps + theta) / 2), 0) + eps * (1 - std::log(eps));
}
}  // namespace

TEST_CASE("Catalan constant at i against the MPFR oracle") {
    set_precision_bits(212);
    Float d_i = bloch_wigner(FloatC(Float(0), Float(1)));
    Float err = abs(d_i - catalan_constant());
    CHECK(err < ldexp(Float(1), -180));
    // frozen decimal value
    CHECK(abs(d_i - Float("0.9159655941772190150546035149324")) < Float(1e-24));
}

TEST_CASE("value at the hexagonal point against quadrature and the frozen constant") {
    set_precision_bits(212);
    Float v = bloch_wigner(unit(1, 3));
    CHECK(abs(v - Float("1.0149416064096536250212025542745")) < Float(1e-24));
    double q = clausen_quadrature(std::acos(-1.0) / 3);
    CHECK(std::fabs(static_cast<double>(v) - q) < 1e-7);
    // the naive series at an interior sample point as a second oracle
    FloatC z(Float(3) / 10, Float(2) / 5);
    FloatC direct;
    FloatC zp(Float(1), Float(0));
    for (int n = 1; n <= 400; ++n) {
        zp = zp * z;
        direct.re += zp.re / (n * n);
        direct.im += zp.im / (n * n);
    }
    FloatC one(Float(1), Float(0));
    Float d_direct = direct.im + arg_c(one - z) * log(z.abs());
    CHECK(abs(bloch_wigner(z) - d_direct) < Float(1e-40));
}

TEST_CASE("vanishing on the real axis") {
    Rng rng(71);
    for (int k = 0; k < 100; ++k) {
        Float x = Float(static_cast<double>(rng.pick(-4000, 4000)) / 1000);
        CHECK(bloch_wigner(FloatC(x, Float(0))) == 0);
    }
    CHECK(bloch_wigner(FloatC(Float(1) / 2, Float(0))) == 0);
}

TEST_CASE("six-fold symmetry and conjugation") {
    set_precision_bits(212);
    Rng rng(73);
    Float tol(1e-40);
    for (int k = 0; k < 1000; ++k) {
        FloatC z(Float(static_cast<double>(rng.pick(-300, 300)) / 100),
                 Float(static_cast<double>(rng.pick(1, 300)) / 100));
        Float d = bloch_wigner(z);
        FloatC one(Float(1), Float(0));
        CHECK(abs(bloch_wigner(z.conj()) + d) < tol);
        CHECK(abs(bloch_wigner(one / z) + d) < tol);
        CHECK(abs(bloch_wigner(one - z) + d) < tol);
        CHECK(abs(bloch_wigner(one / (one - z)) - d) < tol);
        CHECK(abs(bloch_wigner((z - one) / z) - d) < tol);
        CHECK(abs(bloch_wigner(z / (z - one)) + d) < tol);
    }
}

TEST_CASE("cross-ratio classes") {
    Scalar w6(QuadRat(Rational(1, 2)), QuadRat(Rational(0), Rational(1, 2), 3));
    ProjPoint z = ProjPoint::finite(w6);
    PreBlochElem e = cr_class(IdealTuple{inf, P(0), P(1), z});
    CHECK(e.chain.size() == 1);

    Rng rng(79);
    Mat2 g = testing::random_unimodular(rng, kRad);
    PreBlochElem moved = cr_class(IdealTuple{mobius_apply(g, inf), mobius_apply(g, P(0)),
                                             mobius_apply(g, P(1)), mobius_apply(g, z)});
    CHECK(e == moved);

    CHECK(cr_class(IdealTuple{inf, P(0), P(1), P(1)}).chain.is_zero());

    // odd permutation flips the class over Q
    for (int k = 0; k < 100; ++k) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        PreBlochElem a = cr_class(IdealTuple{pts[0], pts[1], pts[2], pts[3]});
        PreBlochElem b = cr_class(IdealTuple{pts[1], pts[0], pts[2], pts[3]});
        CHECK(a.chain == -b.chain);
    }
}

TEST_CASE("five-term boundaries have vanishing volume") {
    set_precision_bits(212);
    Rng rng(83);
    Float worst(0);
    for (int k = 0; k < 1000; ++k) {
        auto pts = testing::random_distinct_points(rng, kRad, 5);
        PreBlochElem b = five_term_boundary(pts[0], pts[1], pts[2], pts[3], pts[4]);
        Float v = abs(algvol(b));
        if (v > worst) worst = v;
    }
    CHECK(worst < Float(1e-8));

    ProjPoint x = P(7);
    CHECK_THROWS_AS(five_term_boundary(inf, P(0), P(1), x, x), DegenerateTuple);
}

TEST_CASE("algvol on raw tuples matches the normal-form volume") {
    set_precision_bits(212);
    ProjPoint i_pt = ProjPoint::finite(Scalar(QuadRat(), QuadRat(Rational(1))));
    Chain<IdealTuple> c(IdealTuple{inf, P(0), P(1), i_pt});
    Float v = algvol(c);
    CHECK(abs(v - catalan_constant()) < Float(1e-40));

    Rng rng(89);
    for (int k = 0; k < 1000; ++k) {
        IdealTuple t = testing::random_tuple(rng, kRad, 4);
        Chain<IdealTuple> raw(t);
        Float direct = algvol(raw);
        Float reduced = algvol(cr_class(t));
        CHECK(abs(direct - reduced) < Float(1e-38));
    }
}

TEST_CASE("volume kills boundaries of 5-tuples") {
    set_precision_bits(212);
    Rng rng(97);
    for (int k = 0; k < 1000; ++k) {
        IdealTuple t = testing::random_tuple(rng, kRad, 5);
        CHECK(abs(algvol(tuple_boundary(t))) < Float(1e-8));
    }
}
