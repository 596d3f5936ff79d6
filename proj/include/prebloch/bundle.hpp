#pragma once

#include <string>
#include <vector>

#include "prebloch/evmaps.hpp"

namespace prebloch {

// Group element with its word over a named generator alphabet; products keep
// the word freely reduced. Used by the cycle builder so emitted fixtures can
// carry words for representation tables.
struct GroupWord {
    Mat2 mat;
    std::vector<int> word;  // letter k+1 = generator k, negative = inverse

    static GroupWord generator(const Mat2& m, int index) { return {m, {index + 1}}; }
    static GroupWord identity() { return {Mat2::identity(), {}}; }

    GroupWord inverse() const;
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
};

std::string word_text(const std::vector<int>& word, const std::vector<std::string>& names);

// Elementary fiber moves on a generating pair (a, b) of a once-punctured
// torus group, each fixing the boundary commutator [a, b]:
//   RInv: (a, b) -> (a, b a^{-1})     LInv: (a, b) -> (a b^{-1}, b)
//   R:    (a, b) -> (a, b a)          L:    (a, b) -> (a b, b)
enum class FiberMove { R, L, RInv, LInv };

struct BundleData {
    std::vector<std::string> names;  // generator names, index order of `gens`
    std::vector<Mat2> gens;          // fiber pair x, y and the circle element t
    std::vector<FiberMove> moves;    // pair-move word realizing conjugation by t
    ProjPoint cusp_point;            // common fixed point of [x,y] and t
    bool negate = false;             // orientation flip of the produced class
};

struct BundleTerm {
    Rational coeff;
    bool cone = false;
    int cusp = 1;
    std::vector<GroupWord> entries;
};

struct BundleCycle {
    std::vector<BundleTerm> terms;
    CuspData cusps;

    Chain<DecoratedSimplex> decorated() const;
};

// Closed decorated 3-chain of the mapping torus of a once-punctured-torus
// automorphism: the fiber 2-class crossed with the circle direction, with the
// boundary torus coned off. Requires, exactly:
//   t^{-1} x t and t^{-1} y t equal to the images of (x, y) under `moves`,
//   [x, y] and t stabilizing `cusp_point`.
// Closure in the coned complex is asserted before returning.
BundleCycle build_bundle_cycle(const BundleData& data);

// Whether the move word reproduces conjugation by t on the pair (x, y).
bool moves_match_conjugation(const BundleData& data);

// Random honest variations for property tests: entrywise conjugates (which
// also transport the cusp data) and added boundaries of 4-dimensional
// decorated simplices.
std::pair<Chain<DecoratedSimplex>, CuspData> conjugate_decorated(const Chain<DecoratedSimplex>& c,
                                                                 const CuspData& cusps, const Mat2& h);
Chain<DecoratedSimplex> random_decorated_boundary(const CuspData& cusps,
                                                  const std::vector<Mat2>& interior_pool,
                                                  unsigned seed, int n_simplices);

}  // namespace prebloch
