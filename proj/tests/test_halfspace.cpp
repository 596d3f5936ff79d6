#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prebloch/halfspace.hpp"
#include "prebloch/testing.hpp"

using namespace prebloch;
using testing::Rng;

namespace {
const std::int64_t kRad = 3;

ProjPoint P(long v) { return ProjPoint::finite(Scalar(Rational(v))); }
const ProjPoint inf = ProjPoint::infinity();
ProjPoint imag_unit() { return ProjPoint::finite(Scalar(QuadRat(), QuadRat(Rational(1)))); }

StraightTetra tetra(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
    return StraightTetra(IdealTuple{a, b, c, d});
}
}  // namespace

TEST_CASE("orientation of reference tetrahedra") {
    set_precision_bits(212);
    CHECK(simplex_orientation(tetra(inf, P(0), P(1), imag_unit())) == 1);
    ProjPoint minus_i = ProjPoint::finite(Scalar(QuadRat(), QuadRat(Rational(-1))));
    CHECK(simplex_orientation(tetra(inf, P(0), P(1), minus_i)) == -1);
    CHECK(simplex_orientation(tetra(inf, P(0), P(1), P(2))) == 0);
}

TEST_CASE("orientation equals the cross-ratio imaginary sign on ideal tetras") {
    Rng rng(101);
    for (int k = 0; k < 500; ++k) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        int det_sign = simplex_orientation(tetra(pts[0], pts[1], pts[2], pts[3]));
        ProjPoint cr = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        int cr_sign = cr.is_infinity() ? 0 : cr.value().im_sign();
        CHECK(det_sign == cr_sign);
    }
}

TEST_CASE("odd vertex permutation flips orientation") {
    Rng rng(103);
    for (int k = 0; k < 200; ++k) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        int a = simplex_orientation(tetra(pts[0], pts[1], pts[2], pts[3]));
        int b = simplex_orientation(tetra(pts[1], pts[0], pts[2], pts[3]));
        CHECK(a == -b);
    }
}

TEST_CASE("point membership in the reference tetra") {
    set_precision_bits(212);
    std::vector<std::pair<Rational, StraightTetra>> chain;
    chain.emplace_back(Rational(1), tetra(inf, P(0), P(1), imag_unit()));

    // inside the vertical chimney over the triangle (0, 1, i), above the hemispheres
    CHECK(point_degree(chain, H3Point(Float(3) / 10, Float(3) / 10, Float(2))) == 1);
    // far outside the footprint
    CHECK(point_degree(chain, H3Point(Float(5), Float(5), Float(1))) == 0);
    // cancellation
    chain.emplace_back(Rational(-1), tetra(inf, P(0), P(1), imag_unit()));
    CHECK(point_degree(chain, H3Point(Float(3) / 10, Float(3) / 10, Float(2))) == 0);
}

TEST_CASE("sampled points land inside their simplex") {
    Rng rng(107);
    for (int k = 0; k < 50; ++k) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        StraightTetra t = tetra(pts[0], pts[1], pts[2], pts[3]);
        int orient = simplex_orientation(t);
        if (orient == 0) continue;
        std::vector<std::pair<Rational, StraightTetra>> chain{{Rational(1), t}};
        for (unsigned s = 0; s < 10; ++s) {
            H3Point y = sample_inside(t, 1000 * k + s);
            if (face_proximity(chain, y) < Float(1) / 1000000) continue;
            Rational deg = point_degree(chain, y);
            CHECK(deg == orient);
        }
    }
}

TEST_CASE("degree is invariant under isometries") {
    set_precision_bits(212);
    Rng rng(109);
    int checked = 0;
    while (checked < 100) {
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        StraightTetra t = tetra(pts[0], pts[1], pts[2], pts[3]);
        if (simplex_orientation(t) == 0) continue;
        Mat2 g = testing::random_unimodular(rng, kRad);
        std::vector<std::pair<Rational, StraightTetra>> chain{{Rational(1), t}};
        std::vector<std::pair<Rational, StraightTetra>> moved{
            {Rational(1), tetra(mobius_apply(g, pts[0]), mobius_apply(g, pts[1]),
                                mobius_apply(g, pts[2]), mobius_apply(g, pts[3]))}};
        H3Point y = sample_inside(t, 77 + checked);
        H3Point gy = mobius_apply_h3(g, y);
        if (face_proximity(chain, y) < Float(1) / 1000000 ||
            face_proximity(moved, gy) < Float(1) / 1000000)
            continue;
        Rational da = point_degree(chain, y);
        Rational db = point_degree(moved, gy);
        CHECK(da == db);
        ++checked;
    }
}

TEST_CASE("mixed interior/ideal simplices lift consistently") {
    set_precision_bits(212);
    // a mixed tetra with one interior vertex still has a well-defined sign
    StraightTetra mixed(std::array<TetraVertex, 4>{
        TetraVertex(inf), TetraVertex(P(0)), TetraVertex(P(1)),
        TetraVertex(H3Point(Float(1) / 2, Float(1) / 2, Float(1)))});
    int s = simplex_orientation(mixed);
    CHECK(s != 0);
    // reflecting the interior vertex across the real axis flips it
    StraightTetra mirrored(std::array<TetraVertex, 4>{
        TetraVertex(inf), TetraVertex(P(0)), TetraVertex(P(1)),
        TetraVertex(H3Point(Float(1) / 2, Float(-1) / 2, Float(1)))});
    CHECK(simplex_orientation(mirrored) == -s);
}

TEST_CASE("degree unchanged by adding a boundary") {
    set_precision_bits(212);
    Rng rng(113);
    int instances = 0;
    while (instances < 20) {
        // base chain: one or two nondegenerate tetras
        auto pts = testing::random_distinct_points(rng, kRad, 4);
        StraightTetra t = tetra(pts[0], pts[1], pts[2], pts[3]);
        if (simplex_orientation(t) == 0) continue;
        Chain<IdealTuple> z(IdealTuple{pts[0], pts[1], pts[2], pts[3]});
        IdealTuple w = testing::random_tuple(rng, kRad, 5);
        Chain<IdealTuple> zdw = z + tuple_boundary(w);
        auto chain_z = as_tetra_chain(z);
        auto chain_zdw = as_tetra_chain(zdw);
        int sampled = 0;
        for (unsigned s = 0; sampled < 50 && s < 500; ++s) {
            try {
                H3Point y = sample_inside(t, 7919 * instances + s);
                Rational da = point_degree(chain_z, y);
                Rational db = point_degree(chain_zdw, y);
                CHECK(da == db);
                ++sampled;
            } catch (const OnBoundaryFace&) {
                continue;
            }
        }
        CHECK(sampled == 50);
        ++instances;
    }
}

TEST_CASE("fundamental-cycle certificate on simple inputs") {
    set_precision_bits(212);
    // a single positively oriented tetra is not a relative cycle in the
    // alternating quotient, though its support degrees are all one
    Chain<IdealTuple> single(IdealTuple{inf, P(0), P(1), imag_unit()});
    DegreeReport r = check_ideal_fundamental_cycle(single, 40, 1);
    CHECK_FALSE(r.cycle_alternating);
    CHECK(r.degrees_all_one);
    CHECK(r.l1_norm == 1);

    // reversed orientation: sampled degrees are -1
    Chain<IdealTuple> reversed = -single;
    DegreeReport r2 = check_ideal_fundamental_cycle(reversed, 40, 1);
    CHECK_FALSE(r2.degrees_all_one);
    CHECK(r2.degree_histogram.count(Rational(-1)));
    CHECK_FALSE(r2.pass);

    // T - T cancels everywhere
    Chain<IdealTuple> cancel;
    cancel.add(IdealTuple{inf, P(0), P(1), imag_unit()}, Rational(1));
    cancel.add(IdealTuple{inf, P(0), P(1), imag_unit()}, Rational(-1));
    CHECK(cancel.is_zero());  // consolidates to the empty chain already
    Chain<IdealTuple> overlap;
    overlap.add(IdealTuple{inf, P(0), P(1), imag_unit()}, Rational(2));
    DegreeReport r3 = check_ideal_fundamental_cycle(overlap, 40, 1);
    CHECK_FALSE(r3.degrees_all_one);
    CHECK(r3.degree_histogram.count(Rational(2)));
}

TEST_CASE("points on a face plane are rejected") {
    set_precision_bits(212);
    std::vector<std::pair<Rational, StraightTetra>> chain;
    chain.emplace_back(Rational(1), tetra(inf, P(0), P(1), imag_unit()));
    // the plane through inf, 0, 1 is the vertical half-plane over the real axis
    CHECK_THROWS_AS(point_degree(chain, H3Point(Float(1) / 2, Float(0), Float(2))), OnBoundaryFace);
    CHECK(face_proximity(chain, H3Point(Float(1) / 2, Float(0), Float(2))) < Float(1e-30));
}

TEST_CASE("sampling a chain of flat simplices is exhausted") {
    Chain<IdealTuple> flat(IdealTuple{inf, P(0), P(1), P(2)});
    CHECK_THROWS_AS(check_ideal_fundamental_cycle(flat, 10, 1), SamplingExhausted);
}

TEST_CASE("certificate reports are deterministic for a fixed seed") {
    Chain<IdealTuple> c;
    c.add(IdealTuple{inf, P(0), P(1), imag_unit()}, Rational(1));
    DegreeReport a = check_ideal_fundamental_cycle(c, 60, 42);
    DegreeReport b = check_ideal_fundamental_cycle(c, 60, 42);
    CHECK(a.degree_histogram == b.degree_histogram);
    CHECK(a.samples == 60);
    CHECK(report_text(a) == report_text(b));
    DegreeReport other = check_ideal_fundamental_cycle(c, 60, 43);
    CHECK(other.seed != a.seed);
}
