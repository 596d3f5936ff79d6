#include "prebloch/evmaps.hpp"

#include <set>
#include <sstream>

namespace prebloch {

void CuspData::validate() {
    for (auto& cusp : cusps) {
        cusp.parabolic.clear();
        for (const auto& g : cusp.generators) {
            g.require_unimodular();
            if (!(mobius_apply(g, cusp.fixed_point) == cusp.fixed_point))
                throw CuspFixedPointViolation("cusp generator does not fix its cusp point");
            Scalar tr = g.trace();
            cusp.parabolic.push_back(tr == Scalar(Rational(2)) || tr == Scalar(Rational(-2)));
        }
    }
}

IdealTuple ev_bar(const BarSimplex& b, const ProjPoint& c0) {
    std::vector<ProjPoint> pts;
    pts.reserve(b.dim() + 1);
    pts.push_back(c0);
    Mat2 acc = Mat2::identity();
    for (const auto& g : b.elems) {
        acc = acc * g;
        pts.push_back(mobius_apply(acc, c0));
    }
    return IdealTuple(std::move(pts));
}

IdealTuple ev_cone(const ConeSimplex& c, const CuspData& cusps) {
    const Cusp& cusp = cusps.at(c.cusp_index);
    if (c.vertex_only) return IdealTuple{cusp.fixed_point};
    for (const auto& g : c.base.elems)
        if (!(mobius_apply(g, cusp.fixed_point) == cusp.fixed_point))
            throw CuspFixedPointViolation("cone entry does not stabilize the cusp point");
    std::vector<ProjPoint> pts;
    pts.reserve(c.base.dim() + 2);
    pts.push_back(cusps.c0);
    Mat2 acc = Mat2::identity();
    for (const auto& g : c.base.elems) {
        acc = acc * g;
        pts.push_back(mobius_apply(acc, cusps.c0));
    }
    pts.push_back(cusp.fixed_point);
    return IdealTuple(std::move(pts));
}

IdealTuple ev_gen(const DConeGen& g, const CuspData& cusps) {
    if (std::holds_alternative<BarSimplex>(g)) return ev_bar(std::get<BarSimplex>(g), cusps.c0);
    return ev_cone(std::get<ConeSimplex>(g), cusps);
}

Chain<IdealTuple> ev_chain(const Chain<DConeGen>& c, const CuspData& cusps) {
    Chain<IdealTuple> out;
    for (const auto& [g, coeff] : c) out.add(ev_gen(g, cusps), coeff);
    return out;
}

IdealTuple ideal_push(const DecoratedSimplex& s, const CuspData& cusps) {
    if (!s.ideal) return ev_bar(BarSimplex(s.edges), cusps.c0);
    const Cusp& cusp = cusps.at(s.ideal->cusp_index);
    if (s.vertex_only) return IdealTuple{cusp.fixed_point};
    for (const auto& g : s.edges)
        if (!(mobius_apply(g, cusp.fixed_point) == cusp.fixed_point))
            throw CuspFixedPointViolation("interior edge word does not stabilize the cusp point");
    std::vector<ProjPoint> pts;
    pts.reserve(s.dim() + 1);
    pts.push_back(cusps.c0);
    Mat2 acc = Mat2::identity();
    for (const auto& g : s.edges) {
        acc = acc * g;
        pts.push_back(mobius_apply(acc, cusps.c0));
    }
    pts.push_back(cusp.fixed_point);
    return IdealTuple(std::move(pts));
}

Chain<IdealTuple> ideal_push(const Chain<DecoratedSimplex>& c, const CuspData& cusps) {
    Chain<IdealTuple> out;
    for (const auto& [s, coeff] : c) out.add(ideal_push(s, cusps), coeff);
    return out;
}

VerifyReport verify_routes(const Chain<DecoratedSimplex>& cycle, const CuspData& cusps, CoeffMode mode) {
    VerifyReport report;
    CuspData data = cusps;
    data.validate();

    Chain<DConeGen> encoded = to_bar(cycle);
    if (!dcone_boundary(encoded).is_zero())
        throw NotRelativeCycle("decorated chain is not closed in the coned complex");

    // base-point collision check: c0 must differ from the cusp points and from
    // the orbit points appearing in either route
    Chain<IdealTuple> left_tuples = ev_chain(encoded, data);
    Chain<IdealTuple> right_tuples = ideal_push(cycle, data);
    std::set<ProjPoint> appearing;
    for (const auto& [t, coeff] : left_tuples)
        for (std::size_t i = 1; i < t.points.size(); ++i) appearing.insert(t.points[i]);
    for (const auto& [t, coeff] : right_tuples)
        for (std::size_t i = 1; i < t.points.size(); ++i) appearing.insert(t.points[i]);
    for (const auto& cusp : data.cusps)
        if (data.c0 == cusp.fixed_point) {
            std::string suggestions;
            int listed = 0;
            for (long cand : {0, 1, -1, 2, 3, -2, 5}) {
                ProjPoint p = ProjPoint::finite(Scalar(Rational(cand)));
                bool clash = appearing.count(p) > 0;
                for (const auto& c : data.cusps) clash = clash || p == c.fixed_point;
                if (clash) continue;
                suggestions += (listed ? ", " : "") + std::to_string(cand);
                if (++listed == 3) break;
            }
            throw BasePointCollision("base point equals a cusp point; try c0 in {" + suggestions + "}");
        }
    if (appearing.count(data.c0))
        report.warnings.push_back(
            "base point lies on an orbit point of the cycle; degenerate tuples were dropped");

    report.left = coinvariant_reduce(left_tuples, mode);
    report.right = coinvariant_reduce(right_tuples, mode);
    report.chains_equal = report.left == report.right;
    PreBlochElem lelem{report.left, mode}, relem{report.right, mode};
    report.volume_left = algvol(lelem);
    report.volume_right = algvol(relem);
    report.volume_diff = report.volume_left - report.volume_right;
    report.l1_norm = cycle.l1_norm();
    if (!report.chains_equal) {
        Chain<CoinvariantGen> diff = report.left - report.right;
        for (const auto& [g, coeff] : diff) {
            std::ostringstream os;
            os << "coefficient difference " << coeff << " at a degree-" << g.tuple.degree()
               << " generator";
            report.mismatches.push_back(os.str());
        }
    }
    return report;
}

namespace {

std::string chain_text(const Chain<CoinvariantGen>& c, const FieldSpec& field) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, coeff] : c) {
        if (!first) os << " + ";
        first = false;
        os << coeff << "*[";
        for (std::size_t i = 0; i < g.tuple.points.size(); ++i) {
            if (i) os << ", ";
            os << g.tuple.points[i].str(field);
        }
        os << "]";
        if (g.torsion) os << "{torsion}";
    }
    return os.str();
}

}  // namespace

std::string report_text(const VerifyReport& r, const FieldSpec& field) {
    std::ostringstream os;
    os.precision(13);
    os << "left_chain: " << chain_text(r.left, field) << "\n";
    os << "right_chain: " << chain_text(r.right, field) << "\n";
    os << "chains_equal: " << (r.chains_equal ? "true" : "false") << "\n";
    os << "left_volume: " << r.volume_left.str(13) << "\n";
    os << "right_volume: " << r.volume_right.str(13) << "\n";
    os << "volume_diff: " << r.volume_diff.str(4) << "\n";
    os << "l1_norm: " << r.l1_norm << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    for (const auto& m : r.mismatches) os << "mismatch: " << m << "\n";
    return os.str();
}

}  // namespace prebloch
