#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "prebloch/quadratic.hpp"

namespace prebloch {

// A field descriptor as declared in input headers: the square-free integer d
// of Q(sqrt(d)). Internally scalars live in Q(i, sqrt(|d|)), which contains
// Q(sqrt(d)) for either sign of d and carries exact real/imaginary parts.
struct FieldSpec {
    std::int64_t d = 0;

    std::int64_t radicand() const {
        std::int64_t a = d < 0 ? -d : d;
        return a <= 1 ? 0 : a;
    }
    void validate() const;
};

// Exact-or-bigfloat complex scalar. Exact mode: re + i*im with re, im in the
// real quadratic field Q(sqrt(rad)). Float mode: MPFR pair at the run
// precision. Modes never mix inside one arithmetic expression.
class Scalar {
public:
    Scalar() : exact_(true) {}
    Scalar(long v) : exact_(true), re_(Rational(v)) {}
    Scalar(Rational v) : exact_(true), re_(std::move(v)) {}
    Scalar(QuadRat re, QuadRat im) : exact_(true), re_(std::move(re)), im_(std::move(im)) {
        QuadRat::join(re_.rad, im_.rad);
    }
    static Scalar floating(FloatC v) {
        Scalar s;
        s.exact_ = false;
        s.f_ = std::move(v);
        return s;
    }

    bool is_exact() const { return exact_; }
    bool is_zero() const { return exact_ ? (re_.is_zero() && im_.is_zero()) : (f_.re == 0 && f_.im == 0); }
    const QuadRat& exact_re() const { return re_; }
    const QuadRat& exact_im() const { return im_; }
    const FloatC& float_value() const { return f_; }

    Scalar conj() const;
    Scalar inverse() const;
    Scalar operator-() const;

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);

    // Structural equality: exact in exact mode, bitwise in float mode.
    friend bool operator==(const Scalar& x, const Scalar& y);
    // Total order on canonical representations, used for container keys and
    // lexicographic normal forms: (re.a, re.b, im.a, im.b) in exact mode,
    // (re, im) in float mode.
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    // |x - y| <= 2^{-P/2} componentwise; the float-mode notion of equality.
    friend bool almost_equal(const Scalar& x, const Scalar& y);

    FloatC to_float() const;

    // Exact decidable sign of the imaginary part (exact mode only).
    int im_sign() const;

    std::string str(const FieldSpec& field) const;
    static Scalar parse(const std::string& text, const FieldSpec& field, bool exact_mode);

private:
    bool exact_;
    QuadRat re_, im_;
    FloatC f_;
};

// Square root in the exact field when one exists (used for optional
// determinant normalization of Moebius matrices).
bool scalar_sqrt(const Scalar& x, Scalar& root);

}  // namespace prebloch
