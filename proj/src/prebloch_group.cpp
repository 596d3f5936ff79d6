#include "prebloch/prebloch_group.hpp"

namespace prebloch {

PreBlochElem cr_class(const IdealTuple& t, CoeffMode mode) {
    if (t.points.size() != 4) throw MixedDegree("cross-ratio class needs a 4-tuple");
    PreBlochElem out;
    out.mode = mode;
    out.chain = coinvariant_reduce(Chain<IdealTuple>(t), mode);
    return out;
}

PreBlochElem cr_class(const Chain<IdealTuple>& c, CoeffMode mode) {
    if (!c.is_zero() && chain_degree(c) != 3) throw MixedDegree("cross-ratio class needs degree 3");
    PreBlochElem out;
    out.mode = mode;
    out.chain = coinvariant_reduce(c, mode);
    return out;
}

PreBlochElem five_term_boundary(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2,
                                const ProjPoint& p3, const ProjPoint& p4, CoeffMode mode) {
    IdealTuple t{p0, p1, p2, p3, p4};
    if (t.has_repeat()) throw DegenerateTuple("five-term relation needs distinct points");
    PreBlochElem out;
    out.mode = mode;
    out.chain = coinvariant_reduce(tuple_boundary(t), mode);
    return out;
}

const ProjPoint& prebloch_parameter(const CoinvariantGen& g) {
    if (g.tuple.points.size() != 4) throw MixedDegree("parameter of a non-4-tuple normal form");
    return g.tuple.points[3];
}

Float algvol(const PreBlochElem& e) {
    Float total(0);
    for (const auto& [g, coeff] : e.chain) {
        if (g.tuple.points.size() != 4) throw MixedDegree("volume of a non-degree-3 class");
        const ProjPoint& z = prebloch_parameter(g);
        if (z.is_infinity()) continue;
        total += Float(numerator(coeff).str()) / Float(denominator(coeff).str()) * bloch_wigner(z.value());
    }
    return total;
}

Float algvol(const Chain<IdealTuple>& c) {
    Float total(0);
    for (const auto& [t, coeff] : c) {
        if (t.points.size() != 4) throw MixedDegree("volume of a non-degree-3 chain");
        if (t.has_repeat()) continue;
        ProjPoint z = cross_ratio(t.points[0], t.points[1], t.points[2], t.points[3]);
        if (z.is_infinity()) continue;
        total += Float(numerator(coeff).str()) / Float(denominator(coeff).str()) * bloch_wigner(z.value());
    }
    return total;
}

}  // namespace prebloch
