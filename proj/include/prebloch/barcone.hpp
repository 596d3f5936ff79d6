#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "prebloch/chain.hpp"
#include "prebloch/projective.hpp"

namespace prebloch {

// k-simplex (g_1,...,g_k) of the classifying-space complex of the matrix
// group; k = 0 is the basepoint.
struct BarSimplex {
    std::vector<Mat2> elems;

    BarSimplex() = default;
    explicit BarSimplex(std::vector<Mat2> g) : elems(std::move(g)) {}
    BarSimplex(std::initializer_list<Mat2> g) : elems(g) {}

    int dim() const { return static_cast<int>(elems.size()); }

    // s_j inserts an identity entry after position j (j = 0..k).
    BarSimplex degeneracy(std::size_t j) const {
        if (j > elems.size()) throw InvariantViolation("degeneracy index out of range");
        BarSimplex out = *this;
        out.elems.insert(out.elems.begin() + j, Mat2::identity());
        return out;
    }

    friend bool operator==(const BarSimplex& x, const BarSimplex& y) { return x.elems == y.elems; }
    friend std::strong_ordering operator<=>(const BarSimplex& x, const BarSimplex& y) {
        if (auto c = x.elems.size() <=> y.elems.size(); c != 0) return c;
        for (std::size_t i = 0; i < x.elems.size(); ++i)
            if (auto c = x.elems[i] <=> y.elems[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

// Simplex of the coned complex attached to boundary subgroup i: the cone over
// the bar simplex `base` of that subgroup, with the cone point last. The
// vertex_only form is the cone point itself (a 0-simplex).
struct ConeSimplex {
    BarSimplex base;
    int cusp_index = 0;  // 1-based
    bool vertex_only = false;

    int dim() const { return vertex_only ? 0 : base.dim() + 1; }

    friend bool operator==(const ConeSimplex& x, const ConeSimplex& y) {
        return x.cusp_index == y.cusp_index && x.vertex_only == y.vertex_only && x.base == y.base;
    }
    friend std::strong_ordering operator<=>(const ConeSimplex& x, const ConeSimplex& y) {
        if (auto c = x.cusp_index <=> y.cusp_index; c != 0) return c;
        if (auto c = x.vertex_only <=> y.vertex_only; c != 0) return c;
        return x.base <=> y.base;
    }
};

// Generator of the disjoint-cone complex: plain bar simplices of the ambient
// group together with cone simplices of the boundary subgroups.
using DConeGen = std::variant<BarSimplex, ConeSimplex>;

inline int dim(const DConeGen& g) {
    return std::visit([](const auto& s) { return s.dim(); }, g);
}

inline bool operator<(const DConeGen& x, const DConeGen& y) {
    if (x.index() != y.index()) return x.index() < y.index();
    if (x.index() == 0) return std::get<0>(x) < std::get<0>(y);
    return std::get<1>(x) < std::get<1>(y);
}

Chain<BarSimplex> bar_boundary(const BarSimplex& b);
Chain<BarSimplex> bar_boundary(const Chain<BarSimplex>& c);

Chain<DConeGen> dcone_boundary(const DConeGen& g);
Chain<DConeGen> dcone_boundary(const Chain<DConeGen>& c);

inline Chain<DConeGen> to_dcone(const Chain<BarSimplex>& c) {
    return c.map_linear([](const BarSimplex& b) { return Chain<DConeGen>(DConeGen(b)); });
}

// Entrywise conjugation g -> h g h^{-1}; h must be unimodular.
Chain<DConeGen> conjugate_chain(const Chain<DConeGen>& c, const Mat2& h);

// Decorated straight simplex: interior vertices on the basepoint orbit with
// edge words, optionally one ideal last vertex on a cusp orbit.
struct DecoratedSimplex {
    struct IdealVertex {
        int cusp_index = 0;  // 1-based
        Mat2 coset;          // lift bookkeeping; the maps use the orbit representative

        friend bool operator==(const IdealVertex&, const IdealVertex&) = default;
    };

    std::vector<Mat2> edges;
    std::optional<IdealVertex> ideal;
    bool vertex_only = false;  // the bare ideal vertex (0-simplex); requires ideal

    int dim() const {
        if (vertex_only) return 0;
        return static_cast<int>(edges.size()) + (ideal ? 1 : 0);
    }

    friend bool operator==(const DecoratedSimplex& x, const DecoratedSimplex& y) {
        return x.vertex_only == y.vertex_only && x.edges == y.edges &&
               x.ideal.has_value() == y.ideal.has_value() &&
               (!x.ideal || (x.ideal->cusp_index == y.ideal->cusp_index && x.ideal->coset == y.ideal->coset));
    }
    friend std::strong_ordering operator<=>(const DecoratedSimplex& x, const DecoratedSimplex& y) {
        if (auto c = x.vertex_only <=> y.vertex_only; c != 0) return c;
        if (auto c = x.ideal.has_value() <=> y.ideal.has_value(); c != 0) return c;
        if (x.ideal) {
            if (auto c = x.ideal->cusp_index <=> y.ideal->cusp_index; c != 0) return c;
            if (auto c = x.ideal->coset <=> y.ideal->coset; c != 0) return c;
        }
        if (auto c = x.edges.size() <=> y.edges.size(); c != 0) return c;
        for (std::size_t i = 0; i < x.edges.size(); ++i)
            if (auto c = x.edges[i] <=> y.edges[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

// The decorated-simplex / bar-tuple dictionary: interior simplices to bar
// simplices, ideal-last-vertex simplices to cone simplices. Bijective on
// generators and compatible with the two boundary operators.
DConeGen to_bar(const DecoratedSimplex& s);

Chain<DecoratedSimplex> decorated_boundary(const DecoratedSimplex& s);
Chain<DecoratedSimplex> decorated_boundary(const Chain<DecoratedSimplex>& c);

Chain<DConeGen> to_bar(const Chain<DecoratedSimplex>& c);

}  // namespace prebloch
