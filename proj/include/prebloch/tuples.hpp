#pragma once

#include <vector>

#include "prebloch/chain.hpp"
#include "prebloch/projective.hpp"

namespace prebloch {

// Ordered (q+1)-tuple of canonical boundary points; the free generators of
// the ideal-boundary chain groups.
struct IdealTuple {
    std::vector<ProjPoint> points;

    IdealTuple() = default;
    explicit IdealTuple(std::vector<ProjPoint> pts) : points(std::move(pts)) {
        if (points.empty()) throw InvariantViolation("empty tuple");
    }
    IdealTuple(std::initializer_list<ProjPoint> pts) : IdealTuple(std::vector<ProjPoint>(pts)) {}

    int degree() const { return static_cast<int>(points.size()) - 1; }
    bool has_repeat() const {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j]) return true;
        return false;
    }

    IdealTuple facet(std::size_t drop) const {
        std::vector<ProjPoint> pts;
        pts.reserve(points.size() - 1);
        for (std::size_t i = 0; i < points.size(); ++i)
            if (i != drop) pts.push_back(points[i]);
        return IdealTuple(std::move(pts));
    }

    friend bool operator==(const IdealTuple& s, const IdealTuple& t) { return s.points == t.points; }
    friend std::strong_ordering operator<=>(const IdealTuple& s, const IdealTuple& t) {
        if (auto c = s.points.size() <=> t.points.size(); c != 0) return c;
        for (std::size_t i = 0; i < s.points.size(); ++i)
            if (auto c = s.points[i] <=> t.points[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

IdealTuple mobius_apply(const Mat2& g, const IdealTuple& t);

// Normal form of a G-and-permutation orbit: tuple starting (inf, 0, 1) that is
// the lexicographic minimum over the signed orbit. torsion is set when the
// minimum is attained with both permutation parities (the generator equals its
// own negative in the quotient).
struct CoinvariantGen {
    IdealTuple tuple;
    bool torsion = false;

    friend bool operator==(const CoinvariantGen& x, const CoinvariantGen& y) {
        return x.torsion == y.torsion && x.tuple == y.tuple;
    }
    friend std::strong_ordering operator<=>(const CoinvariantGen& x, const CoinvariantGen& y) {
        if (auto c = x.tuple <=> y.tuple; c != 0) return c;
        return x.torsion <=> y.torsion;
    }
};

enum class Quotient { Free, Alternating, Coinvariant };

// del(z_0..z_q) = sum (-1)^i (z_0..^z_i..z_q); degree q >= 1.
Chain<IdealTuple> tuple_boundary(const IdealTuple& t);
Chain<IdealTuple> tuple_boundary(const Chain<IdealTuple>& c);

// Relations i) and ii) of the ideal chain groups: kill repeats, replace each
// generator by its sorted representative times the sort parity. Idempotent.
Chain<IdealTuple> alternation_reduce(const Chain<IdealTuple>& c);

// Full G x S_{q+1} normal form; Q-mode drops torsion generators, Z-mode keeps
// them flagged (with the positive-parity sign convention).
Chain<CoinvariantGen> coinvariant_reduce(const Chain<IdealTuple>& c, CoeffMode mode);
CoinvariantGen coinvariant_normal_form(const IdealTuple& t, int& sign_out, bool& torsion_out);

bool is_cycle(const Chain<IdealTuple>& c, Quotient quotient, CoeffMode mode = CoeffMode::Q);

// Degree of the homogeneous chain; throws MixedDegree.
int chain_degree(const Chain<IdealTuple>& c);

}  // namespace prebloch
