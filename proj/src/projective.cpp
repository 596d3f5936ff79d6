#include "prebloch/projective.hpp"

namespace prebloch {

ProjPoint::ProjPoint(Scalar num, Scalar den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        if (num_.is_zero()) throw ZeroPoint("(0 : 0) is not a point");
        num_ = Scalar(Rational(1));
        if (!num_.is_exact() || !den_.is_exact()) {
            num_ = Scalar::floating(FloatC(Float(1), Float(0)));
            den_ = Scalar::floating(FloatC());
        } else {
            den_ = Scalar(Rational(0));
        }
    } else {
        num_ = num_ / den_;
        den_ = num_.is_exact() ? Scalar(Rational(1)) : Scalar::floating(FloatC(Float(1), Float(0)));
    }
}

std::string ProjPoint::str(const FieldSpec& field) const {
    if (is_infinity()) return "inf";
    return num_.str(field);
}

ProjPoint ProjPoint::parse(const std::string& text, const FieldSpec& field, bool exact_mode) {
    if (text == "inf") return infinity();
    return finite(Scalar::parse(text, field, exact_mode));
}

void Mat2::require_unimodular() const {
    Scalar dt = det();
    if (dt.is_exact()) {
        if (!(dt == Scalar(Rational(1)))) throw InvariantViolation("matrix determinant is not 1");
    } else {
        if (!almost_equal(dt, Scalar::floating(FloatC(Float(1), Float(0)))))
            throw InvariantViolation("matrix determinant is not 1 within tolerance");
    }
}

ProjPoint mobius_apply(const Mat2& g, const ProjPoint& p) {
    return ProjPoint(g.a * p.num() + g.b * p.den(), g.c * p.num() + g.d * p.den());
}

namespace {

// Linear functional vanishing exactly at p: L_p(v) = p.den*v.num - p.num*v.den.
Scalar line_at(const ProjPoint& p, const ProjPoint& v) {
    return p.den() * v.num() - p.num() * v.den();
}

}  // namespace

MobiusMap mobius_from_triple(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2) {
    if (p0 == p1 || p0 == p2 || p1 == p2) throw DegenerateTriple();
    // Row 2 kills p0 (so p0 -> inf), row 1 kills p1; relative scale fixed by p2 -> 1.
    Scalar alpha = line_at(p0, p2);
    Scalar beta = line_at(p1, p2);
    MobiusMap map;
    map.m = Mat2(alpha * p1.den(), -(alpha * p1.num()),
                 beta * p0.den(), -(beta * p0.num()));
    Scalar dt = map.m.det();
    Scalar root;
    if (scalar_sqrt(dt, root) && !root.is_zero()) {
        Scalar inv = root.inverse();
        map.m = Mat2(map.m.a * inv, map.m.b * inv, map.m.c * inv, map.m.d * inv);
        map.unit_det = true;
    }
    return map;
}

ProjPoint cross_ratio(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    const ProjPoint* pts[4] = {&p0, &p1, &p2, &p3};
    int distinct = 0;
    for (int i = 0; i < 4; ++i) {
        bool seen = false;
        for (int j = 0; j < i; ++j) seen = seen || *pts[i] == *pts[j];
        if (!seen) ++distinct;
    }
    if (distinct < 3) throw DegenerateTuple("cross-ratio needs three distinct points");
    Scalar num = line_at(p1, p3) * line_at(p0, p2);
    Scalar den = line_at(p0, p3) * line_at(p1, p2);
    if (num.is_zero() && den.is_zero()) throw DegenerateTuple("indeterminate cross-ratio");
    return ProjPoint(num, den);
}

std::array<ProjPoint, 6> cross_ratio_orbit(const ProjPoint& z) {
    Scalar n = z.num(), d = z.den();
    return {
        ProjPoint(n, d),
        ProjPoint(d, n),
        ProjPoint(d - n, d),
        ProjPoint(d, d - n),
        ProjPoint(n, n - d),
        ProjPoint(n - d, n),
    };
}

}  // namespace prebloch
