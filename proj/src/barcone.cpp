#include "prebloch/barcone.hpp"

namespace prebloch {

Chain<BarSimplex> bar_boundary(const BarSimplex& b) {
    const int k = b.dim();
    if (k < 1) throw BoundaryOfBasepoint();
    Chain<BarSimplex> out;
    Rational sign(1);
    // del_0 drops g_1
    out.add(BarSimplex(std::vector<Mat2>(b.elems.begin() + 1, b.elems.end())), sign);
    for (int i = 1; i < k; ++i) {
        sign = -sign;
        std::vector<Mat2> elems;
        elems.reserve(k - 1);
        for (int j = 0; j < k; ++j) {
            if (j == i - 1) {
                elems.push_back(b.elems[j] * b.elems[j + 1]);
                ++j;
            } else {
                elems.push_back(b.elems[j]);
            }
        }
        out.add(BarSimplex(std::move(elems)), sign);
    }
    sign = -sign;
    // del_k drops g_k
    out.add(BarSimplex(std::vector<Mat2>(b.elems.begin(), b.elems.end() - 1)), sign);
    return out;
}

Chain<BarSimplex> bar_boundary(const Chain<BarSimplex>& c) {
    Chain<BarSimplex> out;
    for (const auto& [b, coeff] : c)
        if (b.dim() > 0) out.add(bar_boundary(b), coeff);
    return out;
}

Chain<DConeGen> dcone_boundary(const DConeGen& g) {
    Chain<DConeGen> out;
    if (std::holds_alternative<BarSimplex>(g)) {
        const auto& b = std::get<BarSimplex>(g);
        for (const auto& [f, coeff] : bar_boundary(b)) out.add(DConeGen(f), coeff);
        return out;
    }
    const auto& cone = std::get<ConeSimplex>(g);
    if (cone.vertex_only) throw BoundaryOfBasepoint("boundary of a cone point");
    const int k = cone.base.dim();
    if (k == 0) {
        // the edge from the basepoint to the cone point
        out.add(DConeGen(ConeSimplex{BarSimplex(), cone.cusp_index, true}), Rational(1));
        out.add(DConeGen(cone.base), Rational(-1));
        return out;
    }
    // faces j = 0..k cone over the bar faces of the base, face k+1 is the base
    for (const auto& [f, coeff] : bar_boundary(cone.base))
        out.add(DConeGen(ConeSimplex{f, cone.cusp_index, false}), coeff);
    out.add(DConeGen(cone.base), (k + 1) % 2 == 0 ? Rational(1) : Rational(-1));
    return out;
}

Chain<DConeGen> dcone_boundary(const Chain<DConeGen>& c) {
    Chain<DConeGen> out;
    for (const auto& [g, coeff] : c)
        if (dim(g) > 0) out.add(dcone_boundary(g), coeff);
    return out;
}

Chain<DConeGen> conjugate_chain(const Chain<DConeGen>& c, const Mat2& h) {
    h.require_unimodular();
    Mat2 hinv = h.inverse_unimodular();
    auto conj = [&](const Mat2& g) { return h * g * hinv; };
    Chain<DConeGen> out;
    for (const auto& [g, coeff] : c) {
        if (std::holds_alternative<BarSimplex>(g)) {
            BarSimplex b = std::get<BarSimplex>(g);
            for (auto& e : b.elems) e = conj(e);
            out.add(DConeGen(b), coeff);
        } else {
            ConeSimplex cone = std::get<ConeSimplex>(g);
            for (auto& e : cone.base.elems) e = conj(e);
            out.add(DConeGen(cone), coeff);
        }
    }
    return out;
}

DConeGen to_bar(const DecoratedSimplex& s) {
    if (!s.ideal) return DConeGen(BarSimplex(s.edges));
    if (s.vertex_only) return DConeGen(ConeSimplex{BarSimplex(), s.ideal->cusp_index, true});
    return DConeGen(ConeSimplex{BarSimplex(s.edges), s.ideal->cusp_index, false});
}

Chain<DecoratedSimplex> decorated_boundary(const DecoratedSimplex& s) {
    Chain<DecoratedSimplex> out;
    const int n = s.dim();
    if (n < 1) throw BoundaryOfBasepoint("boundary of a decorated vertex");
    if (!s.ideal) {
        for (const auto& [f, coeff] : bar_boundary(BarSimplex(s.edges)))
            out.add(DecoratedSimplex{f.elems, std::nullopt}, coeff);
        return out;
    }
    const auto& edges = s.edges;
    const int k = static_cast<int>(edges.size());  // simplex dim is k+1
    if (k == 0) {
        DecoratedSimplex vertex{{}, s.ideal, true};
        out.add(vertex, Rational(1));
        out.add(DecoratedSimplex{}, Rational(-1));
        return out;
    }
    Rational sign(1);
    for (int j = 0; j <= k; ++j, sign = -sign) {
        DecoratedSimplex face;
        face.ideal = s.ideal;
        if (j == 0) {
            face.edges.assign(edges.begin() + 1, edges.end());
            face.ideal->coset = edges[0].inverse_unimodular() * face.ideal->coset;
        } else if (j == k) {
            face.edges.assign(edges.begin(), edges.end() - 1);
        } else {
            face.edges.reserve(k - 1);
            for (int m = 0; m < k; ++m) {
                if (m == j - 1) {
                    face.edges.push_back(edges[m] * edges[m + 1]);
                    ++m;
                } else {
                    face.edges.push_back(edges[m]);
                }
            }
        }
        out.add(face, sign);
    }
    // final face drops the ideal vertex
    out.add(DecoratedSimplex{edges, std::nullopt}, (k + 1) % 2 == 0 ? Rational(1) : Rational(-1));
    return out;
}

Chain<DecoratedSimplex> decorated_boundary(const Chain<DecoratedSimplex>& c) {
    Chain<DecoratedSimplex> out;
    for (const auto& [s, coeff] : c)
        if (s.dim() > 0) out.add(decorated_boundary(s), coeff);
    return out;
}

Chain<DConeGen> to_bar(const Chain<DecoratedSimplex>& c) {
    Chain<DConeGen> out;
    for (const auto& [s, coeff] : c) out.add(to_bar(s), coeff);
    return out;
}

}  // namespace prebloch
