#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <string>

#include "prebloch/errors.hpp"

namespace prebloch {

using Int      = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Float    = boost::multiprecision::mpfr_float;  // runtime precision

inline std::strong_ordering compare(const Rational& x, const Rational& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const Float& x, const Float& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Working precision in bits for the big-float mode. MPFR precision is
// process-global; it is set once per run (file header or --precision).
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// 2^{-precision_bits()/2}, the absolute tolerance for float equality on
// canonical coordinates.
Float float_equality_tolerance();

Float catalan_constant();
Float pi_value();

inline Float to_float(const Rational& q) {
    return Float(numerator(q).str()) / Float(denominator(q).str());
}

// Parses "a" or "a/b" with explicit canonicalization. Throws ParseError.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// Exact integer square root test: returns true and sets r if n = r^2.
bool perfect_square(const Int& n, Int& r);
bool rational_sqrt(const Rational& q, Rational& r);

// Complex big float.
struct FloatC {
    Float re, im;

    FloatC() : re(0), im(0) {}
    FloatC(Float r, Float i) : re(std::move(r)), im(std::move(i)) {}
    explicit FloatC(double r) : re(r), im(0) {}

    FloatC operator-() const { return {-re, -im}; }
    FloatC conj() const { return {re, -im}; }
    Float norm() const { return re * re + im * im; }
    Float abs() const { return sqrt(norm()); }

    friend FloatC operator+(const FloatC& a, const FloatC& b) { return {a.re + b.re, a.im + b.im}; }
    friend FloatC operator-(const FloatC& a, const FloatC& b) { return {a.re - b.re, a.im - b.im}; }
    friend FloatC operator*(const FloatC& a, const FloatC& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend FloatC operator/(const FloatC& a, const FloatC& b) {
        Float n = b.norm();
        if (n == 0) throw ZeroPoint("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const FloatC& a, const FloatC& b) { return a.re == b.re && a.im == b.im; }
};

// Principal branch: log z = log|z| + i arg z, arg in (-pi, pi].
FloatC log_c(const FloatC& z);
Float arg_c(const FloatC& z);

}  // namespace prebloch
