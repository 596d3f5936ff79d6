#pragma once

#include "prebloch/dilog.hpp"
#include "prebloch/tuples.hpp"

namespace prebloch {

// Element of the degree-3 coinvariant quotient: the target group of the
// cross-ratio class map, generated by 4-point normal forms (inf,0,1,z).
struct PreBlochElem {
    Chain<CoinvariantGen> chain;
    CoeffMode mode = CoeffMode::Q;

    friend bool operator==(const PreBlochElem& x, const PreBlochElem& y) {
        return x.mode == y.mode && x.chain == y.chain;
    }
};

// Cross-ratio class of an ideal 4-tuple; degenerate tuples map to zero.
PreBlochElem cr_class(const IdealTuple& t, CoeffMode mode = CoeffMode::Q);
PreBlochElem cr_class(const Chain<IdealTuple>& c, CoeffMode mode = CoeffMode::Q);

// Alternating sum of the cross-ratio classes of the facets of a 5-tuple; a
// boundary by construction, so its signed volume vanishes.
PreBlochElem five_term_boundary(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2,
                                const ProjPoint& p3, const ProjPoint& p4, CoeffMode mode = CoeffMode::Q);

// Signed hyperbolic volume: sum of coefficient * D(parameter). The normal
// form already carries the permutation sign in the coefficient.
Float algvol(const PreBlochElem& e);
// Volume of a raw degree-3 tuple chain: orientation-signed volumes of the
// straight ideal simplices spanned.
Float algvol(const Chain<IdealTuple>& c);

// Parameter z of a degree-3 normal form (inf,0,1,z).
const ProjPoint& prebloch_parameter(const CoinvariantGen& g);

}  // namespace prebloch
