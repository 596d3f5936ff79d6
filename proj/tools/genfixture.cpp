// Builds the shipped cycle fixtures:
//   figure8.json        decorated + raw + shape payloads of the figure-eight
//                       knot complement (field d = -3)
//   product_bundle.json trivial-monodromy sanity bundle over the same fiber
//
// The decorated payload comes from the mapping-torus construction in
// bundle.hpp. The fiber pair (x, y) inside the holonomy group <A, B> is found
// by an exact search: t = A^{+-1} must conjugate the pair by the elementary
// move word, and [x, y] must be parabolic fixing infinity. The produced class
// is certified by closure and by its hyperbolic volume before anything is
// written.

#include <iostream>
#include <vector>

#include "prebloch/cyclefile.hpp"

using namespace prebloch;

namespace {

const FieldSpec kField{-3};

Scalar S(long n, long d = 1) { return Scalar(Rational(n, d)); }

// omega = (-1 + sqrt(-3))/2, a primitive cube root of unity
Scalar omega() { return Scalar(QuadRat(Rational(-1, 2)), QuadRat(Rational(0), Rational(1, 2), 3)); }
Scalar omega6() { return Scalar(QuadRat(Rational(1, 2)), QuadRat(Rational(0), Rational(1, 2), 3)); }

std::vector<Mat2> reduced_words(const std::vector<Mat2>& letters, int max_len) {
    // products of reduced words over letters {g0, g0^-1, g1, g1^-1}
    struct Node {
        Mat2 value;
        int last;  // letter index, -1 for empty
    };
    std::vector<Node> frontier{{Mat2::identity(), -1}};
    std::vector<Mat2> out;
    auto inverse_index = [](int i) { return i ^ 1; };
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
                if (node.last >= 0 && inverse_index(node.last) == i) continue;
                next.push_back({node.value * letters[i], i});
                out.push_back(next.back().value);
            }
        frontier = std::move(next);
    }
    return out;
}

bool parabolic_at_infinity(const Mat2& w) {
    if (!w.c.is_zero()) return false;
    if (!(w.a == w.d)) return false;
    if (!(w.a == S(1) || w.a == S(-1))) return false;
    return !w.b.is_zero();
}

struct SearchHit {
    Mat2 x, y, t;
    std::vector<FiberMove> moves;
};

// Final pair of the move word, as words in the free group on (x, y); used to
// derive the partner generator from the conjugation relations.
std::pair<GroupWord, GroupWord> pair_after_moves(const Mat2& x, const Mat2& y,
                                                 const std::vector<FiberMove>& moves) {
    GroupWord a = GroupWord::generator(x, 0);
    GroupWord b = GroupWord::generator(y, 1);
    for (FiberMove m : moves) {
        switch (m) {
            case FiberMove::RInv: b = b * a.inverse(); break;
            case FiberMove::LInv: a = a * b.inverse(); break;
            case FiberMove::R: b = b * a; break;
            case FiberMove::L: a = a * b; break;
        }
    }
    return {a, b};
}

std::vector<SearchHit> search_fiber_pairs(const Mat2& A, const Mat2& B, int max_len) {
    std::vector<SearchHit> hits;
    std::vector<Mat2> letters = {A, A.inverse_unimodular(), B, B.inverse_unimodular()};
    std::vector<Mat2> words = reduced_words(letters, max_len);
    std::vector<std::vector<FiberMove>> move_words = {
        {FiberMove::RInv, FiberMove::LInv},
        {FiberMove::LInv, FiberMove::RInv},
        {FiberMove::R, FiberMove::L},
        {FiberMove::L, FiberMove::R},
    };
    for (const Mat2& t : {A, A.inverse_unimodular()}) {
        Mat2 tinv = t.inverse_unimodular();
        for (const Mat2& base : words) {
            // each move word forces the partner generator through one of the
            // two commutator-shaped relations; try both shapes in both roles
            Mat2 binv = base.inverse_unimodular();
            std::vector<Mat2> partners = {tinv * binv * t * base, binv * tinv * base * t};
            for (const Mat2& partner : partners)
                for (int role = 0; role < 2; ++role) {
                    Mat2 x = role == 0 ? partner : base;
                    Mat2 y = role == 0 ? base : partner;
                    for (const auto& moves : move_words)
                        for (int sx = 0; sx < 2; ++sx)
                            for (int sy = 0; sy < 2; ++sy) {
                                Mat2 xs = sx ? -x : x;
                                Mat2 ys = sy ? -y : y;
                                Mat2 w = xs * ys * xs.inverse_unimodular() * ys.inverse_unimodular();
                                if (!parabolic_at_infinity(w)) continue;
                                auto [fa, fb] = pair_after_moves(xs, ys, moves);
                                if (tinv * xs * t == fa.mat && tinv * ys * t == fb.mat) {
                                    hits.push_back({xs, ys, t, moves});
                                    if (hits.size() > 40) return hits;
                                }
                            }
                }
        }
    }
    return hits;
}

CycleFile make_figure8(const BundleCycle& cycle, const BundleData& data) {
    CycleFile f = bundle_to_file(cycle, data, kField);
    f.precision = 212;
    f.mode = CoeffMode::Q;
    f.c0_text = "0";

    // monodromy relators t^-1 g t = (moved pair), written as words equal to 1
    auto [fa, fb] = pair_after_moves(data.gens[0], data.gens[1], data.moves);
    auto relator = [&](const std::string& gen, const GroupWord& target) {
        std::string out = data.names[2] + "^-1 " + gen + " " + data.names[2];
        GroupWord inv = target.inverse();
        std::string tail = word_text(inv.word, data.names);
        if (tail != "1") out += " " + tail;
        return out;
    };
    f.relators.push_back(relator(data.names[0], fa));
    f.relators.push_back(relator(data.names[1], fb));

    // raw payload: the two regular ideal simplices over the rhombus (0,1,w6,w)
    ProjPoint z6 = ProjPoint::finite(omega6());
    ProjPoint w = ProjPoint::finite(omega());
    CycleFile::RawTerm t1{Rational(1), {"inf", "0", "1", z6.str(kField)}};
    CycleFile::RawTerm t2{Rational(1), {"inf", "0", z6.str(kField), w.str(kField)}};
    f.raw_terms = {t1, t2};

    // shape payload: both simplices are regular
    f.shape_terms = {{Rational(1), z6.str(kField)}, {Rational(1), z6.str(kField)}};
    return f;
}

}  // namespace

int main(int argc, char** argv) try {
    std::string outdir = argc > 1 ? argv[1] : PREBLOCH_FIXTURE_DIR;
    set_precision_bits(212);

    Mat2 A(S(1), S(1), S(0), S(1));
    Mat2 B(S(1), S(0), -omega(), S(1));

    Float expected("2.029883212819307250042405108549");
    std::vector<SearchHit> hits = search_fiber_pairs(A, B, 6);
    std::cout << "candidate fiber pairs: " << hits.size() << "\n";

    for (const auto& hit : hits) {
        BundleData data;
        data.names = {"x", "y", "t"};
        data.gens = {hit.x, hit.y, hit.t};
        data.moves = hit.moves;
        data.cusp_point = ProjPoint::infinity();
        for (bool negate : {false, true}) {
            data.negate = negate;
            BundleCycle cycle;
            try {
                cycle = build_bundle_cycle(data);
            } catch (const Error& e) {
                std::cout << "  rejected: " << e.what() << "\n";
                break;
            }
            VerifyReport report = verify_routes(cycle.decorated(), cycle.cusps);
            std::cout << "  candidate volume " << report.volume_left.str(15)
                      << " chains_equal=" << report.chains_equal << "\n";
            if (report.chains_equal && abs(report.volume_left - expected) < Float(1e-6)) {
                CycleFile f = make_figure8(cycle, data);
                f.save(outdir + "/figure8.json");
                std::cout << "wrote " << outdir << "/figure8.json\n";

                // trivial-monodromy sanity bundle over the same fiber pair
                BundleData product;
                product.names = {"x", "y", "t"};
                product.gens = {hit.x, hit.y, -Mat2::identity()};
                product.moves = {};
                product.cusp_point = ProjPoint::infinity();
                BundleCycle pcycle = build_bundle_cycle(product);
                CycleFile pf = bundle_to_file(pcycle, product, kField);
                pf.precision = 212;
                pf.c0_text = "0";
                pf.save(outdir + "/product_bundle.json");
                std::cout << "wrote " << outdir << "/product_bundle.json\n";
                return 0;
            }
        }
    }
    std::cerr << "no fiber pair certified; fixtures not written\n";
    return 1;
} catch (const std::exception& e) {
    std::cerr << "genfixture: " << e.what() << "\n";
    return 1;
}
