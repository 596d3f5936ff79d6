#include "prebloch/scalar.hpp"

#include <cctype>
#include <vector>

namespace prebloch {

void FieldSpec::validate() const {
    std::int64_t a = d < 0 ? -d : d;
    for (std::int64_t p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0) throw ParseError("field discriminant not square-free: " + std::to_string(d));
}

namespace {

void require_same_mode(const Scalar& x, const Scalar& y) {
    if (x.is_exact() != y.is_exact()) throw FieldMismatch("mixed exact/float scalars");
}

}  // namespace

Scalar Scalar::conj() const {
    if (exact_) return Scalar(re_, -im_);
    return floating(f_.conj());
}

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-re_, -im_);
    return floating(-f_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    require_same_mode(x, y);
    if (x.exact_) return Scalar(x.re_ + y.re_, x.im_ + y.im_);
    return Scalar::floating(x.f_ + y.f_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    require_same_mode(x, y);
    if (x.exact_) return Scalar(x.re_ - y.re_, x.im_ - y.im_);
    return Scalar::floating(x.f_ - y.f_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    require_same_mode(x, y);
    if (x.exact_)
        return Scalar(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
    return Scalar::floating(x.f_ * y.f_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ZeroPoint("scalar inverse of zero");
    if (exact_) {
        QuadRat n = re_ * re_ + im_ * im_;  // field norm over the reals, > 0
        QuadRat ninv = n.inverse();
        return Scalar(re_ * ninv, -im_ * ninv);
    }
    return floating(FloatC(Float(1), Float(0)) / f_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.exact_ != y.exact_) return false;
    if (x.exact_) return x.re_ == y.re_ && x.im_ == y.im_;
    return x.f_ == y.f_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    if (x.exact_ != y.exact_) return x.exact_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.exact_) {
        if (auto c = x.re_ <=> y.re_; c != 0) return c;
        return x.im_ <=> y.im_;
    }
    if (auto c = compare(x.f_.re, y.f_.re); c != 0) return c;
    return compare(x.f_.im, y.f_.im);
}

bool almost_equal(const Scalar& x, const Scalar& y) {
    if (x.is_exact() && y.is_exact()) return x == y;
    FloatC a = x.to_float(), b = y.to_float();
    Float tol = float_equality_tolerance();
    return abs(a.re - b.re) <= tol && abs(a.im - b.im) <= tol;
}

FloatC Scalar::to_float() const {
    if (!exact_) return f_;
    return {re_.to_float(), im_.to_float()};
}

int Scalar::im_sign() const {
    if (exact_) return im_.sign();
    return f_.im == 0 ? 0 : (f_.im < 0 ? -1 : 1);
}

bool scalar_sqrt(const Scalar& x, Scalar& root) {
    if (!x.is_exact()) {
        FloatC z = x.float_value();
        Float r = sqrt(z.abs());
        Float half_arg = arg_c(z) / 2;
        root = Scalar::floating({r * cos(half_arg), r * sin(half_arg)});
        return true;
    }
    const QuadRat& u = x.exact_re();
    const QuadRat& v = x.exact_im();
    if (v.is_zero()) {
        QuadRat r;
        if (u.sign() >= 0) {
            if (!quadrat_sqrt(u, r)) return false;
            root = Scalar(r, QuadRat());
            return true;
        }
        if (!quadrat_sqrt(-u, r)) return false;
        root = Scalar(QuadRat(), r);
        return true;
    }
    // (a+ib)^2 = u+iv: a^2 = (u + |x|)/2 with |x| = sqrt(u^2+v^2) in the field.
    QuadRat mod2 = u * u + v * v;
    QuadRat mod;
    if (!quadrat_sqrt(mod2, mod)) return false;
    if (mod.sign() < 0) mod = -mod;
    for (int sign : {+1, -1}) {
        QuadRat a2 = (u + (sign > 0 ? mod : -mod)) * QuadRat(Rational(1, 2));
        QuadRat a;
        if (a2.sign() > 0 && quadrat_sqrt(a2, a)) {
            QuadRat b = v * (a + a).inverse();
            Scalar cand(a, b);
            if (cand * cand == x) {
                root = cand;
                return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Serialization. Exact values print as sums over the token basis
// {1, s, i, i*s} where s = sqrt(d) from the file header; elements of Q(sqrt(d))
// use only {1, s} and reproduce the "a/b+c/d*s" form.

namespace {

struct Basis {
    // token values as scalars
    Scalar s, i;
};

Basis token_basis(const FieldSpec& field) {
    Basis b;
    b.i = Scalar(QuadRat(), QuadRat(Rational(1)));
    std::int64_t rad = field.radicand();
    if (field.d == 0)
        b.s = Scalar(Rational(0));
    else if (field.d == 1)
        b.s = Scalar(Rational(1));
    else if (field.d == -1)
        b.s = b.i;
    else if (field.d > 1)
        b.s = Scalar(QuadRat(Rational(0), Rational(1), rad), QuadRat());
    else
        b.s = Scalar(QuadRat(), QuadRat(Rational(0), Rational(1), rad));
    return b;
}

std::string float_str(const Float& v) {
    return v.str(0, std::ios_base::scientific);
}

void emit_term(std::string& out, const Rational& coeff, const char* token) {
    if (coeff == 0) return;
    Rational c = coeff;
    if (out.empty()) {
        if (c < 0) {
            out += '-';
            c = -c;
        }
    } else {
        out += c < 0 ? '-' : '+';
        if (c < 0) c = -c;
    }
    out += rational_str(c);
    if (token[0]) {
        out += '*';
        out += token;
    }
}

}  // namespace

std::string Scalar::str(const FieldSpec& field) const {
    if (!exact_) {
        std::string out = float_str(f_.re);
        if (f_.im != 0) {
            std::string im = float_str(f_.im);
            if (im[0] != '-') out += '+';
            out += im + "*i";
        }
        return out;
    }
    std::int64_t rad = field.radicand();
    if (re_.rad != 0 && re_.rad != rad) throw FieldMismatch("scalar outside declared field");
    if (im_.rad != 0 && im_.rad != rad) throw FieldMismatch("scalar outside declared field");
    std::string out;
    if (field.d < -1) {
        // basis 1, s = i w, i, i*s = -w
        emit_term(out, re_.a, "");
        emit_term(out, im_.b, "s");
        emit_term(out, im_.a, "i");
        emit_term(out, -re_.b, "i*s");
    } else if (field.d > 1) {
        emit_term(out, re_.a, "");
        emit_term(out, re_.b, "s");
        emit_term(out, im_.a, "i");
        emit_term(out, im_.b, "i*s");
    } else {
        emit_term(out, re_.a, "");
        emit_term(out, im_.a, "i");
    }
    return out.empty() ? "0" : out;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& field, bool exact_mode) {
    if (text.empty()) throw ParseError("empty scalar");
    Basis basis = token_basis(field);
    // split into signed terms at top level; '+'/'-' directly after [eE] belong
    // to a float exponent
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c == ' ') continue;
        if ((c == '+' || c == '-') && !cur.empty() &&
            !(std::tolower(static_cast<unsigned char>(cur.back())) == 'e' && !exact_mode)) {
            terms.push_back(cur);
            cur.clear();
        }
        cur += c;
    }
    if (!cur.empty()) terms.push_back(cur);
    if (terms.empty()) throw ParseError("empty scalar: " + text);

    Scalar total = exact_mode ? Scalar(Rational(0)) : Scalar::floating(FloatC());
    for (std::string term : terms) {
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw ParseError("dangling sign in scalar: " + text);
        // split factors on '*'
        bool has_s = false, has_i = false;
        std::string number;
        std::size_t pos = 0;
        while (pos <= term.size()) {
            std::size_t star = term.find('*', pos);
            std::string factor = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            if (factor == "s")
                has_s = !has_s ? true : throw ParseError("repeated token s");
            else if (factor == "i")
                has_i = !has_i ? true : throw ParseError("repeated token i");
            else if (!factor.empty()) {
                if (!number.empty()) throw ParseError("two numeric factors in: " + term);
                number = factor;
            } else
                throw ParseError("empty factor in: " + term);
            if (star == std::string::npos) break;
            pos = star + 1;
        }
        Scalar value = exact_mode ? Scalar(number.empty() ? Rational(1) : parse_rational(number))
                                  : Scalar::floating(FloatC(number.empty() ? Float(1) : Float(number), Float(0)));
        Scalar s = exact_mode ? basis.s : Scalar::floating(basis.s.to_float());
        Scalar i = exact_mode ? basis.i : Scalar::floating(basis.i.to_float());
        if (has_s) value = value * s;
        if (has_i) value = value * i;
        if (negative) value = -value;
        total = total + value;
    }
    return total;
}

}  // namespace prebloch
