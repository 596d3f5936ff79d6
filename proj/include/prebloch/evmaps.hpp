#pragma once

#include <string>
#include <vector>

#include "prebloch/barcone.hpp"
#include "prebloch/prebloch_group.hpp"

namespace prebloch {

// Boundary-subgroup data: generators of each cusp subgroup together with the
// ideal point the subgroup stabilizes, plus the global base ideal point.
struct Cusp {
    ProjPoint fixed_point;
    std::vector<Mat2> generators;
    std::vector<bool> parabolic;  // trace = +-2 per generator, reported not enforced
};

struct CuspData {
    std::vector<Cusp> cusps;  // cusp i is cusps[i-1]
    ProjPoint c0;             // base ideal point, default 0

    const Cusp& at(int index) const {
        if (index < 1 || index > static_cast<int>(cusps.size()))
            throw InvalidDecoration("cusp index " + std::to_string(index) + " out of range");
        return cusps[index - 1];
    }

    // Checks the stabilizer condition exactly and records parabolicity flags.
    void validate();
};

// ev(g_1,...,g_n) = (c0, g_1 c0, g_1 g_2 c0, ..., g_1...g_n c0).
IdealTuple ev_bar(const BarSimplex& b, const ProjPoint& c0);

// Cone simplices evaluate with the cusp point appended last; every base entry
// must stabilize that point.
IdealTuple ev_cone(const ConeSimplex& c, const CuspData& cusps);

IdealTuple ev_gen(const DConeGen& g, const CuspData& cusps);
Chain<IdealTuple> ev_chain(const Chain<DConeGen>& c, const CuspData& cusps);

// Basepoint push of a decorated simplex: interior vertices go to the orbit of
// c0, the ideal vertex to its cusp representative.
IdealTuple ideal_push(const DecoratedSimplex& s, const CuspData& cusps);
Chain<IdealTuple> ideal_push(const Chain<DecoratedSimplex>& c, const CuspData& cusps);

// Representation data: images of named generators. Words are resolved at the
// file layer; this checks the supplied relators map to the identity.
struct Representation {
    std::vector<std::pair<std::string, Mat2>> images;
};

struct VerifyReport {
    Chain<CoinvariantGen> left;   // bar route: evaluation of the coned encoding
    Chain<CoinvariantGen> right;  // ideal route: cross-ratio classes of the push
    bool chains_equal = false;
    Float volume_left, volume_right;
    Float volume_diff;
    Rational l1_norm;
    std::vector<std::string> warnings;
    std::vector<std::string> mismatches;  // per-generator diff when unequal

    bool passed(const Float& tolerance) const {
        return chains_equal && abs(volume_diff) < tolerance;
    }
};

// Runs both routes on a closed decorated chain: the coned bar encoding
// evaluated at c0 versus the cross-ratio classes of the ideal push. Checks
// closure of the encoded chain first (NotRelativeCycle) and that c0 avoids
// the cusp points and the orbit points appearing in the tuples.
VerifyReport verify_routes(const Chain<DecoratedSimplex>& cycle, const CuspData& cusps,
                           CoeffMode mode = CoeffMode::Q);

std::string report_text(const VerifyReport& r, const FieldSpec& field);

}  // namespace prebloch
