#include "prebloch/tuples.hpp"

#include <algorithm>
#include <numeric>

namespace prebloch {

IdealTuple mobius_apply(const Mat2& g, const IdealTuple& t) {
    std::vector<ProjPoint> pts;
    pts.reserve(t.points.size());
    for (const auto& p : t.points) pts.push_back(mobius_apply(g, p));
    return IdealTuple(std::move(pts));
}

Chain<IdealTuple> tuple_boundary(const IdealTuple& t) {
    if (t.degree() < 1) throw BoundaryOfVertex();
    Chain<IdealTuple> out;
    Rational sign(1);
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        out.add(t.facet(i), sign);
        sign = -sign;
    }
    return out;
}

Chain<IdealTuple> tuple_boundary(const Chain<IdealTuple>& c) {
    Chain<IdealTuple> out;
    for (const auto& [t, coeff] : c)
        if (t.degree() > 0) out.add(tuple_boundary(t), coeff);
    return out;
}

namespace {

int sort_parity(std::vector<ProjPoint>& pts) {
    // insertion sort counting swaps; tuples are tiny
    int sign = 1;
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = i; j > 0 && pts[j] < pts[j - 1]; --j) {
            std::swap(pts[j], pts[j - 1]);
            sign = -sign;
        }
    return sign;
}

int perm_parity(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

}  // namespace

Chain<IdealTuple> alternation_reduce(const Chain<IdealTuple>& c) {
    Chain<IdealTuple> out;
    for (const auto& [t, coeff] : c) {
        if (t.has_repeat()) continue;
        std::vector<ProjPoint> pts = t.points;
        int sign = sort_parity(pts);
        out.add(IdealTuple(std::move(pts)), sign > 0 ? coeff : -coeff);
    }
    return out;
}

CoinvariantGen coinvariant_normal_form(const IdealTuple& t, int& sign_out, bool& torsion_out) {
    const std::size_t n = t.points.size();
    if (t.has_repeat()) throw UnnormalizableTuple("repeated point; reduce by alternation first");
    if (n > 5) throw UnnormalizableTuple("degree above 4 is not supported");

    static const ProjPoint inf = ProjPoint::infinity();
    static const ProjPoint zero = ProjPoint::finite(Scalar(Rational(0)));
    static const ProjPoint one = ProjPoint::finite(Scalar(Rational(1)));

    if (n == 1) {
        sign_out = 1;
        torsion_out = false;
        return CoinvariantGen{IdealTuple{inf}, false};
    }
    if (n == 2) {
        // both orders normalize to (inf, 0): always 2-torsion
        sign_out = 1;
        torsion_out = true;
        return CoinvariantGen{IdealTuple{inf, zero}, true};
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool have = false, torsion = false;
    IdealTuple best;
    int best_sign = 1;
    do {
        MobiusMap norm = mobius_from_triple(t.points[perm[0]], t.points[perm[1]], t.points[perm[2]]);
        std::vector<ProjPoint> pts;
        pts.reserve(n);
        pts.push_back(inf);
        pts.push_back(zero);
        pts.push_back(one);
        for (std::size_t i = 3; i < n; ++i) pts.push_back(norm(t.points[perm[i]]));
        IdealTuple cand(std::move(pts));
        int sign = perm_parity(perm);
        if (!have || cand < best) {
            best = cand;
            best_sign = sign;
            have = true;
            torsion = false;
        } else if (cand == best && sign != best_sign) {
            torsion = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    sign_out = torsion ? 1 : best_sign;
    torsion_out = torsion;
    return CoinvariantGen{best, torsion};
}

Chain<CoinvariantGen> coinvariant_reduce(const Chain<IdealTuple>& c, CoeffMode mode) {
    Chain<CoinvariantGen> out;
    for (const auto& [t, coeff] : c) {
        if (t.has_repeat()) continue;
        int sign;
        bool torsion;
        CoinvariantGen gen = coinvariant_normal_form(t, sign, torsion);
        if (torsion && mode == CoeffMode::Q) continue;
        out.add(gen, sign > 0 ? coeff : -coeff);
    }
    return out;
}

int chain_degree(const Chain<IdealTuple>& c) {
    int deg = -1;
    for (const auto& [t, coeff] : c) {
        if (deg == -1)
            deg = t.degree();
        else if (deg != t.degree())
            throw MixedDegree();
    }
    return deg;
}

bool is_cycle(const Chain<IdealTuple>& c, Quotient quotient, CoeffMode mode) {
    chain_degree(c);
    if (c.is_zero()) return true;
    Chain<IdealTuple> b = tuple_boundary(c);
    switch (quotient) {
        case Quotient::Free:
            return b.is_zero();
        case Quotient::Alternating:
            return alternation_reduce(b).is_zero();
        case Quotient::Coinvariant:
            return coinvariant_reduce(b, mode).is_zero();
    }
    return false;
}

}  // namespace prebloch
