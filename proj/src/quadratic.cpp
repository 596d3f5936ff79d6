#include "prebloch/quadratic.hpp"

namespace prebloch {

bool quadrat_sqrt(const QuadRat& x, QuadRat& root) {
    if (x.sign() < 0) return false;
    if (x.b == 0) {
        Rational r;
        if (rational_sqrt(x.a, r)) {
            root = QuadRat(r);
            return true;
        }
        return false;
    }
    // (p + q w)^2 = u + v w with v != 0: q = v/(2p), p^2 = (u +- s)/2 where
    // s = sqrt(u^2 - v^2 rad) must be rational.
    Rational disc = x.a * x.a - x.b * x.b * x.rad;
    Rational s;
    if (!rational_sqrt(disc, s)) return false;
    for (int sign : {+1, -1}) {
        Rational p2 = (x.a + (sign > 0 ? s : -s)) / 2;
        Rational p;
        if (p2 > 0 && rational_sqrt(p2, p)) {
            QuadRat cand(p, x.b / (2 * p), x.rad);
            if (cand * cand == x) {
                root = cand;
                return true;
            }
        }
    }
    return false;
}

}  // namespace prebloch
