#pragma once

#include <array>
#include <map>
#include <variant>
#include <vector>

#include "prebloch/tuples.hpp"

namespace prebloch {

// Interior point of the upper half-space model, t > 0.
struct H3Point {
    Float x, y, t;

    H3Point(Float x0, Float y0, Float t0) : x(std::move(x0)), y(std::move(y0)), t(std::move(t0)) {
        if (!(t > 0)) throw InvariantViolation("interior point needs t > 0");
    }
};

using TetraVertex = std::variant<ProjPoint, H3Point>;

// Straight simplex determined by its four vertices, each interior or ideal.
struct StraightTetra {
    std::array<TetraVertex, 4> v;

    explicit StraightTetra(std::array<TetraVertex, 4> verts) : v(std::move(verts)) {}
    explicit StraightTetra(const IdealTuple& t);
    bool all_ideal() const;
};

// Lift to the Hermitian-matrix model of Minkowski space: interior points map
// to det-1 positive matrices [[A,B],[conj B,C]], ideal points to the rank-one
// matrix of their canonical coordinate vector.
struct HermVec {
    Float A, C;
    FloatC B;

    std::array<Float, 4> coords() const { return {A, C, B.re, B.im}; }
};

HermVec lift(const ProjPoint& p);
HermVec lift(const H3Point& p);
HermVec lift(const TetraVertex& v);

// Isometry action M -> g M g^*; reads back an interior point.
H3Point mobius_apply_h3(const Mat2& g, const H3Point& p);

// Sign of the 4x4 vertex determinant in the Minkowski lift; 0 when the four
// vertices span a geodesic plane. For all-ideal tetras this agrees with the
// sign of Im(cross-ratio).
int simplex_orientation(const StraightTetra& s);

// Signed count of the simplices covering y: sum coeff * [y inside] * orientation.
// Throws OnBoundaryFace when y is within rounding tolerance of some face plane
// and the side is genuinely ambiguous.
Rational point_degree(const std::vector<std::pair<Rational, StraightTetra>>& chain, const H3Point& y);

// Smallest normalized distance proxy from y to any face plane of the chain;
// the sampler rejects candidates below 1e-6.
Float face_proximity(const std::vector<std::pair<Rational, StraightTetra>>& chain, const H3Point& y);

std::vector<std::pair<Rational, StraightTetra>> as_tetra_chain(const Chain<IdealTuple>& c);

struct DegreeReport {
    bool cycle_alternating = false;
    bool cycle_coinvariant = false;
    std::map<Rational, long> degree_histogram;
    bool degrees_all_one = false;
    bool pass = false;
    Rational l1_norm;  // ideal simplicial volume upper bound
    unsigned seed = 0;
    int samples = 0;
};

// Samples quasi-random points inside the support of the chain (each simplex
// gets its share), avoiding all face planes, and certifies that every sampled
// degree equals one; also runs the chain checks and the l1 statistic.
DegreeReport check_ideal_fundamental_cycle(const Chain<IdealTuple>& c, int n_samples, unsigned seed,
                                           CoeffMode mode = CoeffMode::Q);

// Deterministic low-discrepancy interior points of one simplex (exposed for
// the randomized degree tests).
H3Point sample_inside(const StraightTetra& tet, unsigned index);

std::string report_text(const DegreeReport& r);

}  // namespace prebloch
