#pragma once

#include <compare>
#include <cstdint>

#include "prebloch/numbers.hpp"

namespace prebloch {

// Element a + b*sqrt(rad) of the real quadratic extension Q(sqrt(rad)),
// rad a non-square positive integer. Invariant: b == 0  =>  rad == 0, so
// plain rationals have a unique representation and mix freely with any field.
struct QuadRat {
    Rational a;
    Rational b;
    std::int64_t rad = 0;

    QuadRat() = default;
    QuadRat(Rational a0) : a(std::move(a0)) {}
    QuadRat(Rational a0, Rational b0, std::int64_t r) : a(std::move(a0)), b(std::move(b0)), rad(r) {
        if (b == 0) rad = 0;
        if (b != 0 && rad <= 1) throw FieldMismatch("radicand must exceed 1");
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    // Shared radicand of two operands; 0 mixes with anything, distinct
    // nontrivial radicands are rejected (one field per run).
    static std::int64_t join(std::int64_t r1, std::int64_t r2) {
        if (r1 == r2) return r1;
        if (r1 == 0) return r2;
        if (r2 == 0) return r1;
        throw FieldMismatch("mixed radicands " + std::to_string(r1) + " vs " + std::to_string(r2));
    }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a + y.a, x.b + y.b, join(x.rad, y.rad));
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a - y.a, x.b - y.b, join(x.rad, y.rad));
    }
    QuadRat operator-() const { return QuadRat(-a, -b, rad); }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        std::int64_t r = join(x.rad, y.rad);
        return QuadRat(x.a * y.a + x.b * y.b * r, x.a * y.b + x.b * y.a, r);
    }

    // (a + b w)^{-1} = (a - b w) / (a^2 - b^2 rad); the denominator is the
    // field norm and vanishes only at zero.
    QuadRat inverse() const {
        if (is_zero()) throw ZeroPoint("inverse of zero");
        Rational n = a * a - b * b * rad;
        return QuadRat(a / n, -b / n, rad);
    }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a == y.a && x.b == y.b;  // representation is unique
    }

    // Coordinate-lexicographic order (a, b); a total order used for canonical
    // forms, unrelated to numeric order.
    friend std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
        if (auto c = compare(x.a, y.a); c != 0) return c;
        return compare(x.b, y.b);
    }

    // Exact numeric sign of a + b*sqrt(rad).
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 rad
        Rational d = a * a - b * b * rad;
        int sd = d.sign();
        return sd == 0 ? 0 : sa * sd;
    }

    Float to_float() const {
        Float v = prebloch::to_float(a);
        if (b != 0) v += prebloch::to_float(b) * sqrt(Float(rad));
        return v;
    }
};

// Square root within the field when it exists: solves (p + q w)^2 = x.
bool quadrat_sqrt(const QuadRat& x, QuadRat& root);

}  // namespace prebloch
