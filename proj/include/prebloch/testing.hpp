#pragma once

#include <random>

#include "prebloch/evmaps.hpp"

namespace prebloch::testing {

// Shared randomized-input generators for the property suites (unit tests and
// the CLI self test).
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(unsigned seed) : engine(seed) {}
    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(engine() % static_cast<unsigned long>(hi - lo + 1));
    }
    bool coin() { return engine() & 1; }
};

inline Rational random_rational(Rng& rng, long span = 6) {
    return Rational(rng.pick(-span, span), rng.pick(1, span));
}

inline QuadRat random_quadrat(Rng& rng, std::int64_t rad, long span = 6) {
    Rational b = rng.coin() ? random_rational(rng, span) : Rational(0);
    return QuadRat(random_rational(rng, span), b, b == 0 ? 0 : rad);
}

inline Scalar random_scalar(Rng& rng, std::int64_t rad, long span = 6) {
    return Scalar(random_quadrat(rng, rad, span), random_quadrat(rng, rad, span));
}

// Element a + b*sqrt(d) of the quadratic field itself (d < 0: b lands in the
// imaginary part).
inline Scalar random_scalar_in_field(Rng& rng, std::int64_t d, long span = 6) {
    Rational a = random_rational(rng, span);
    Rational b = random_rational(rng, span);
    std::int64_t rad = (d < 0 ? -d : d) <= 1 ? 0 : (d < 0 ? -d : d);
    if (rad == 0 || b == 0) return Scalar(QuadRat(a), QuadRat(d == -1 ? b : Rational(0)));
    if (d < 0) return Scalar(QuadRat(a), QuadRat(Rational(0), b, rad));
    return Scalar(QuadRat(a, b, rad), QuadRat());
}

inline std::vector<ProjPoint> random_distinct_points_in_field(Rng& rng, std::int64_t d, int n) {
    std::vector<ProjPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        ProjPoint p = rng.pick(0, 9) == 0 ? ProjPoint::infinity()
                                          : ProjPoint::finite(random_scalar_in_field(rng, d, 4));
        bool dup = false;
        for (const auto& q : pts) dup = dup || p == q;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

inline Scalar random_nonzero_scalar(Rng& rng, std::int64_t rad, long span = 6) {
    for (;;) {
        Scalar s = random_scalar(rng, rad, span);
        if (!s.is_zero()) return s;
    }
}

inline ProjPoint random_point(Rng& rng, std::int64_t rad, bool allow_infinity = true) {
    if (allow_infinity && rng.pick(0, 9) == 0) return ProjPoint::infinity();
    return ProjPoint::finite(random_scalar(rng, rad, 4));
}

inline std::vector<ProjPoint> random_distinct_points(Rng& rng, std::int64_t rad, int n,
                                                     bool allow_infinity = true) {
    std::vector<ProjPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        ProjPoint p = random_point(rng, rad, allow_infinity && pts.empty());
        bool dup = false;
        for (const auto& q : pts) dup = dup || p == q;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

// Product of elementary unipotent matrices: exactly unimodular, entries small.
inline Mat2 random_unimodular(Rng& rng, std::int64_t rad, int factors = 3) {
    Mat2 g = Mat2::identity();
    for (int k = 0; k < factors; ++k) {
        Scalar s = random_scalar(rng, rad, 2);
        Mat2 e = rng.coin() ? Mat2(Scalar(Rational(1)), s, Scalar(Rational(0)), Scalar(Rational(1)))
                            : Mat2(Scalar(Rational(1)), Scalar(Rational(0)), s, Scalar(Rational(1)));
        g = g * e;
    }
    return g;
}

inline BarSimplex random_bar_simplex(Rng& rng, std::int64_t rad, int k) {
    std::vector<Mat2> elems;
    for (int i = 0; i < k; ++i) elems.push_back(random_unimodular(rng, rad));
    return BarSimplex(std::move(elems));
}

inline IdealTuple random_tuple(Rng& rng, std::int64_t rad, int len, bool distinct = true) {
    if (distinct) return IdealTuple(random_distinct_points(rng, rad, len));
    std::vector<ProjPoint> pts;
    for (int i = 0; i < len; ++i) pts.push_back(random_point(rng, rad));
    return IdealTuple(std::move(pts));
}

// A cusp with commuting parabolic generators: conjugates of translations by a
// matrix moving infinity to a random point.
inline Cusp random_parabolic_cusp(Rng& rng, std::int64_t rad, int n_generators = 2) {
    Mat2 g = random_unimodular(rng, rad);
    Mat2 ginv = g.inverse_unimodular();
    Cusp cusp;
    cusp.fixed_point = mobius_apply(g, ProjPoint::infinity());
    for (int i = 0; i < n_generators; ++i) {
        Scalar shift = random_nonzero_scalar(rng, rad, 3);
        Mat2 par(Scalar(Rational(1)), shift, Scalar(Rational(0)), Scalar(Rational(1)));
        cusp.generators.push_back(g * par * ginv);
    }
    return cusp;
}

inline ConeSimplex random_cone_simplex(Rng& rng, const Cusp& cusp, int base_dim, int cusp_index = 1) {
    std::vector<Mat2> elems;
    for (int i = 0; i < base_dim; ++i) {
        Mat2 e = cusp.generators[rng.engine() % cusp.generators.size()];
        if (rng.coin()) e = e.inverse_unimodular();
        elems.push_back(e);
    }
    return ConeSimplex{BarSimplex(std::move(elems)), cusp_index, false};
}

inline DecoratedSimplex random_decorated_simplex(Rng& rng, std::int64_t rad, const Cusp& cusp, int dim,
                                                 bool ideal, int cusp_index = 1) {
    DecoratedSimplex s;
    if (ideal) {
        for (int i = 0; i + 1 < dim; ++i) {
            Mat2 e = cusp.generators[rng.engine() % cusp.generators.size()];
            if (rng.coin()) e = e.inverse_unimodular();
            s.edges.push_back(e);
        }
        s.ideal = DecoratedSimplex::IdealVertex{cusp_index, Mat2::identity()};
    } else {
        for (int i = 0; i < dim; ++i) s.edges.push_back(random_unimodular(rng, rad));
    }
    return s;
}

}  // namespace prebloch::testing
