#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prebloch/barcone.hpp"
#include "prebloch/testing.hpp"

using namespace prebloch;
using testing::Rng;

namespace {
const std::int64_t kRad = 3;
}

TEST_CASE("bar boundary formulas") {
    Rng rng(3);
    Mat2 g = testing::random_unimodular(rng, kRad);
    Mat2 h = testing::random_unimodular(rng, kRad);
    Mat2 k = testing::random_unimodular(rng, kRad);

    // two-face cancellation in degree 1
    CHECK(bar_boundary(BarSimplex{g}).is_zero());

    Chain<BarSimplex> b = bar_boundary(BarSimplex{g, h});
    CHECK(b.coeff(BarSimplex{h}) == 1);
    CHECK(b.coeff(BarSimplex{g * h}) == -1);
    CHECK(b.coeff(BarSimplex{g}) == 1);

    CHECK(bar_boundary(bar_boundary(BarSimplex{g, h, k})).is_zero());
    CHECK_THROWS_AS(bar_boundary(BarSimplex{}), BoundaryOfBasepoint);
}

TEST_CASE("boundary squares to zero on random bar and cone simplices") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        int k = static_cast<int>(rng.pick(2, 4));
        BarSimplex b = testing::random_bar_simplex(rng, kRad, k);
        CHECK(bar_boundary(bar_boundary(b)).is_zero());
        CHECK(dcone_boundary(dcone_boundary(Chain<DConeGen>(DConeGen(b)))).is_zero());

        Cusp cusp = testing::random_parabolic_cusp(rng, kRad);
        ConeSimplex cone = testing::random_cone_simplex(rng, cusp, static_cast<int>(rng.pick(0, 3)));
        CHECK(dcone_boundary(dcone_boundary(Chain<DConeGen>(DConeGen(cone)))).is_zero());
    }
}

TEST_CASE("cone boundary in low degree") {
    Rng rng(7);
    Mat2 g = testing::random_unimodular(rng, kRad);
    // Cone over a 1-simplex: the two coned faces cancel, the base survives
    ConeSimplex cone{BarSimplex{g}, 1, false};
    Chain<DConeGen> b = dcone_boundary(DConeGen(cone));
    CHECK(b.size() == 1);
    CHECK(b.coeff(DConeGen(BarSimplex{g})) == 1);

    // Cone over the basepoint: cone vertex minus basepoint
    ConeSimplex edge{BarSimplex{}, 2, false};
    Chain<DConeGen> be = dcone_boundary(DConeGen(edge));
    CHECK(be.coeff(DConeGen(ConeSimplex{BarSimplex{}, 2, true})) == 1);
    CHECK(be.coeff(DConeGen(BarSimplex{})) == -1);

    CHECK_THROWS_AS(dcone_boundary(DConeGen(ConeSimplex{BarSimplex{}, 1, true})), BoundaryOfBasepoint);
}

TEST_CASE("decorated dictionary matches the two boundary operators") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Cusp cusp = testing::random_parabolic_cusp(rng, kRad);
        int d = static_cast<int>(rng.pick(2, 4));
        DecoratedSimplex s = testing::random_decorated_simplex(rng, kRad, cusp, d, rng.coin());
        // interior decorations map to bar simplices, ideal ones to cones
        DConeGen image = to_bar(s);
        if (s.ideal)
            CHECK(std::holds_alternative<ConeSimplex>(image));
        else
            CHECK(std::holds_alternative<BarSimplex>(image));
        CHECK(to_bar(decorated_boundary(s)) == dcone_boundary(image));
        CHECK(to_bar(decorated_boundary(decorated_boundary(s))).is_zero());
    }
}

TEST_CASE("decorated dictionary on the examples") {
    Rng rng(13);
    Mat2 g1 = testing::random_unimodular(rng, kRad);
    Mat2 g2 = testing::random_unimodular(rng, kRad);

    DecoratedSimplex interior{{g1, g2}, std::nullopt};
    CHECK(to_bar(interior) == DConeGen(BarSimplex{g1, g2}));

    DecoratedSimplex ideal{{g1}, DecoratedSimplex::IdealVertex{1, Mat2::identity()}};
    CHECK(to_bar(ideal) == DConeGen(ConeSimplex{BarSimplex{g1}, 1, false}));

    DecoratedSimplex basepoint;
    CHECK(to_bar(basepoint) == DConeGen(BarSimplex{}));
}

TEST_CASE("degeneracy insertions keep boundary identities") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        BarSimplex b = testing::random_bar_simplex(rng, kRad, 3);
        std::size_t j = static_cast<std::size_t>(rng.pick(0, 3));
        BarSimplex s = b.degeneracy(j);
        CHECK(s.dim() == 4);
        CHECK(bar_boundary(bar_boundary(s)).is_zero());
    }
}

TEST_CASE("conjugation commutes with the cone boundary") {
    Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        Mat2 h = testing::random_unimodular(rng, kRad);
        Cusp cusp = testing::random_parabolic_cusp(rng, kRad);
        Chain<DConeGen> c;
        c.add(DConeGen(testing::random_bar_simplex(rng, kRad, 3)), testing::random_rational(rng));
        c.add(DConeGen(testing::random_cone_simplex(rng, cusp, 2)), testing::random_rational(rng));
        CHECK(dcone_boundary(conjugate_chain(c, h)) == conjugate_chain(dcone_boundary(c), h));
    }
}
