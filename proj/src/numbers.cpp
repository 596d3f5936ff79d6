#include "prebloch/numbers.hpp"

#include <cmath>

namespace prebloch {

namespace {
unsigned g_precision_bits = 212;
}

void set_precision_bits(unsigned bits) {
    if (bits < 24 || bits > 100000) throw ParseError("precision out of range: " + std::to_string(bits));
    g_precision_bits = bits;
    // boost mpfr_float speaks decimal digits; round up so we never under-run.
    unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
    Float::default_precision(digits10);
}

unsigned precision_bits() { return g_precision_bits; }

Float float_equality_tolerance() {
    Float t = ldexp(Float(1), -static_cast<int>(g_precision_bits / 2));
    return t;
}

Float catalan_constant() {
    mpfr_t c;
    mpfr_init2(c, g_precision_bits + 16);
    mpfr_const_catalan(c, MPFR_RNDN);
    Float out(c);
    mpfr_clear(c);
    return out;
}

Float pi_value() {
    mpfr_t c;
    mpfr_init2(c, g_precision_bits + 16);
    mpfr_const_pi(c, MPFR_RNDN);
    Float out(c);
    mpfr_clear(c);
    return out;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational: " + s);
    try {
        Rational q(s);
        mpq_canonicalize(q.backend().data());
        return q;
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + s);
    }
}

std::string rational_str(const Rational& q) { return q.str(); }

bool perfect_square(const Int& n, Int& r) {
    if (n < 0) return false;
    r = sqrt(n);
    return r * r == n;
}

bool rational_sqrt(const Rational& q, Rational& r) {
    if (q < 0) return false;
    Int rn, rd;
    if (!perfect_square(numerator(q), rn)) return false;
    if (!perfect_square(denominator(q), rd)) return false;
    r = Rational(rn, rd);
    return true;
}

FloatC log_c(const FloatC& z) {
    Float n = z.norm();
    if (n == 0) throw ZeroPoint("log of zero");
    return {log(n) / 2, arg_c(z)};
}

Float arg_c(const FloatC& z) { return atan2(z.im, z.re); }

}  // namespace prebloch
