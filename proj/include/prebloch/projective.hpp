#pragma once

#include <array>
#include <compare>

#include "prebloch/scalar.hpp"

namespace prebloch {

// Point of P^1 in canonical form: (z, 1) for finite z, (1, 0) for infinity.
class ProjPoint {
public:
    ProjPoint() : num_(Scalar(Rational(0))), den_(Scalar(Rational(1))) {}
    ProjPoint(Scalar num, Scalar den);

    static ProjPoint infinity() {
        ProjPoint p;
        p.num_ = Scalar(Rational(1));
        p.den_ = Scalar(Rational(0));
        return p;
    }
    static ProjPoint finite(Scalar z) { return ProjPoint(std::move(z), Scalar(Rational(1))); }

    bool is_infinity() const { return den_.is_zero(); }
    const Scalar& num() const { return num_; }
    const Scalar& den() const { return den_; }
    // finite value; precondition !is_infinity()
    const Scalar& value() const {
        if (is_infinity()) throw ZeroPoint("value() of infinity");
        return num_;
    }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
        return p.num_ == q.num_ && p.den_ == q.den_;
    }
    // Total order: infinity is largest, finite points by scalar coordinate order.
    friend std::strong_ordering operator<=>(const ProjPoint& p, const ProjPoint& q) {
        if (p.is_infinity() || q.is_infinity()) {
            if (p.is_infinity() && q.is_infinity()) return std::strong_ordering::equal;
            return p.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return p.num_ <=> q.num_;
    }

    friend bool almost_equal(const ProjPoint& p, const ProjPoint& q) {
        if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
        return almost_equal(p.num_, q.num_);
    }

    std::string str(const FieldSpec& field) const;
    static ProjPoint parse(const std::string& text, const FieldSpec& field, bool exact_mode);

private:
    Scalar num_, den_;
};

// 2x2 matrix over Scalar; group elements are the det = 1 ones.
struct Mat2 {
    Scalar a, b, c, d;

    Mat2() : a(Rational(1)), b(Rational(0)), c(Rational(0)), d(Rational(1)) {}
    Mat2(Scalar a0, Scalar b0, Scalar c0, Scalar d0)
        : a(std::move(a0)), b(std::move(b0)), c(std::move(c0)), d(std::move(d0)) {}

    static Mat2 identity() { return Mat2(); }

    Scalar det() const { return a * d - b * c; }
    Scalar trace() const { return a + d; }
    bool is_identity() const { return *this == identity(); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    // inverse assuming det = 1
    Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend std::strong_ordering operator<=>(const Mat2& x, const Mat2& y) {
        if (auto r = x.a <=> y.a; r != 0) return r;
        if (auto r = x.b <=> y.b; r != 0) return r;
        if (auto r = x.c <=> y.c; r != 0) return r;
        return x.d <=> y.d;
    }

    // Throws InvariantViolation unless det = 1 (exact) / within tolerance (float).
    void require_unimodular() const;
};

// Moebius action on P^1: (num : den) -> (a num + b den : c num + d den).
ProjPoint mobius_apply(const Mat2& g, const ProjPoint& p);

// The unique transformation with p0 -> inf, p1 -> 0, p2 -> 1, as a matrix up
// to scale. det-normalized to 1 when sqrt(det) exists in the field.
struct MobiusMap {
    Mat2 m;
    bool unit_det = false;

    ProjPoint operator()(const ProjPoint& p) const { return mobius_apply(m, p); }
};

MobiusMap mobius_from_triple(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2);

// Cross-ratio with the convention cr(p0,p1,p2,p3) = image of p3 under the map
// sending (p0,p1,p2) to (inf,0,1); in particular cr(inf,0,1,z) = z. Returned
// as a point of P^1 so the infinite value has a representation.
ProjPoint cross_ratio(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

// The six values {z, 1/z, 1-z, 1/(1-z), z/(z-1), (z-1)/z} as points, in this order.
std::array<ProjPoint, 6> cross_ratio_orbit(const ProjPoint& z);

}  // namespace prebloch
