#include "prebloch/bundle.hpp"

#include <random>

namespace prebloch {

GroupWord GroupWord::inverse() const {
    GroupWord out;
    out.mat = mat.inverse_unimodular();
    out.word.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.word.push_back(-*it);
    return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord out;
    out.mat = a.mat * b.mat;
    out.word = a.word;
    for (int letter : b.word) {
        if (!out.word.empty() && out.word.back() == -letter)
            out.word.pop_back();
        else
            out.word.push_back(letter);
    }
    return out;
}

std::string word_text(const std::vector<int>& word, const std::vector<std::string>& names) {
    if (word.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        int letter = word[i];
        int index = (letter > 0 ? letter : -letter) - 1;
        if (index >= static_cast<int>(names.size())) throw InvariantViolation("word letter out of range");
        out += names[index];
        if (letter < 0) out += "^-1";
    }
    return out;
}

namespace {

using Term2 = std::pair<Rational, std::array<GroupWord, 2>>;
using Term3 = std::pair<Rational, std::array<GroupWord, 3>>;

// u'(a, b) = (b, a) - (a, b) + ([a,b], b a); del u' = ([a,b]).
std::vector<Term2> fiber_chain(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a * b * a.inverse() * b.inverse();
    return {{Rational(1), {b, a}}, {Rational(-1), {a, b}}, {Rational(1), {w, b * a}}};
}

// Prism filler for the move (a, b) -> (a, b a^{-1}):
// del V = u'(a, b) - u'(a, b a^{-1});  V = -(a, ba^{-1}, a) + ([a,b], b, a).
std::vector<Term3> filler_r_inv(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a * b * a.inverse() * b.inverse();
    return {{Rational(-1), {a, b * a.inverse(), a}}, {Rational(1), {w, b, a}}};
}

// Prism filler for the move (a, b) -> (a b^{-1}, b):
// del V = u'(a, b) - u'(a b^{-1}, b);  V = (b, ab^{-1}, b) + ([a,b], bab^{-1}, b).
std::vector<Term3> filler_l_inv(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a * b * a.inverse() * b.inverse();
    return {{Rational(1), {b, a * b.inverse(), b}},
            {Rational(1), {w, b * a * b.inverse(), b}}};
}

void append_scaled(std::vector<Term3>& into, const std::vector<Term3>& terms, const Rational& scale) {
    for (const auto& [c, entry] : terms) into.emplace_back(c * scale, entry);
}

}  // namespace

bool moves_match_conjugation(const BundleData& data) {
    if (data.gens.size() != 3) throw InvariantViolation("bundle data needs generators x, y, t");
    GroupWord a = GroupWord::generator(data.gens[0], 0);
    GroupWord b = GroupWord::generator(data.gens[1], 1);
    GroupWord t = GroupWord::generator(data.gens[2], 2);
    for (FiberMove m : data.moves) {
        switch (m) {
            case FiberMove::RInv: b = b * a.inverse(); break;
            case FiberMove::LInv: a = a * b.inverse(); break;
            case FiberMove::R: b = b * a; break;
            case FiberMove::L: a = a * b; break;
        }
    }
    Mat2 tinv = t.mat.inverse_unimodular();
    return tinv * data.gens[0] * t.mat == a.mat && tinv * data.gens[1] * t.mat == b.mat;
}

BundleCycle build_bundle_cycle(const BundleData& data) {
    if (data.gens.size() != 3 || data.names.size() != 3)
        throw InvariantViolation("bundle data needs named generators x, y, t");
    for (const auto& g : data.gens) g.require_unimodular();

    GroupWord x = GroupWord::generator(data.gens[0], 0);
    GroupWord y = GroupWord::generator(data.gens[1], 1);
    GroupWord t = GroupWord::generator(data.gens[2], 2);
    GroupWord w = x * y * x.inverse() * y.inverse();
    if (w.mat.is_identity()) throw InvariantViolation("fiber pair commutes");

    if (!(mobius_apply(w.mat, data.cusp_point) == data.cusp_point) ||
        !(mobius_apply(t.mat, data.cusp_point) == data.cusp_point))
        throw CuspFixedPointViolation("boundary pair must stabilize the cusp point");
    if (!(w.mat * t.mat == t.mat * w.mat))
        throw InvariantViolation("boundary pair does not commute");
    if (!moves_match_conjugation(data))
        throw InvariantViolation("move word does not realize conjugation by t");

    // fiber 2-chain and the prism fillers along the move word
    std::vector<Term2> u = fiber_chain(x, y);
    std::vector<Term3> fillers;
    GroupWord a = x, b = y;
    for (FiberMove m : data.moves) {
        switch (m) {
            case FiberMove::RInv:
                append_scaled(fillers, filler_r_inv(a, b), Rational(1));
                b = b * a.inverse();
                break;
            case FiberMove::LInv:
                append_scaled(fillers, filler_l_inv(a, b), Rational(1));
                a = a * b.inverse();
                break;
            case FiberMove::R:
                b = b * a;
                append_scaled(fillers, filler_r_inv(a, b), Rational(-1));
                break;
            case FiberMove::L:
                a = a * b;
                append_scaled(fillers, filler_l_inv(a, b), Rational(-1));
                break;
        }
    }

    // circle direction: S(a, b) = (a, b, t) - (a, t, b^t) + (t, a^t, b^t)
    // with g^t = t^{-1} g t, satisfying del S + S del = conj_t - id.
    std::vector<Term3> bar3;
    auto conj_t = [&](const GroupWord& g) { return t.inverse() * g * t; };
    for (const auto& [coeff, pair] : u) {
        const GroupWord& p = pair[0];
        const GroupWord& q = pair[1];
        bar3.emplace_back(coeff, std::array<GroupWord, 3>{p, q, t});
        bar3.emplace_back(-coeff, std::array<GroupWord, 3>{p, t, conj_t(q)});
        bar3.emplace_back(coeff, std::array<GroupWord, 3>{t, conj_t(p), conj_t(q)});
    }
    append_scaled(bar3, fillers, Rational(1));

    BundleCycle out;
    Rational orient = data.negate ? Rational(-1) : Rational(1);
    for (const auto& [coeff, entry] : bar3) {
        if (coeff == 0) continue;
        BundleTerm term;
        term.coeff = coeff * orient;
        term.entries.assign(entry.begin(), entry.end());
        out.terms.push_back(std::move(term));
    }
    // cone the boundary torus: + Cone(w, t) - Cone(t, w)
    BundleTerm cone1{orient, true, 1, {w, t}};
    BundleTerm cone2{-orient, true, 1, {t, w}};
    out.terms.push_back(cone1);
    out.terms.push_back(cone2);

    out.cusps.c0 = ProjPoint::finite(Scalar(Rational(0)));
    Cusp cusp;
    cusp.fixed_point = data.cusp_point;
    cusp.generators = {w.mat, t.mat};
    out.cusps.cusps = {cusp};
    out.cusps.validate();

    if (!dcone_boundary(to_bar(out.decorated())).is_zero())
        throw NotRelativeCycle("bundle construction failed to close");
    return out;
}

Chain<DecoratedSimplex> BundleCycle::decorated() const {
    Chain<DecoratedSimplex> out;
    for (const auto& term : terms) {
        DecoratedSimplex s;
        for (const auto& e : term.entries) s.edges.push_back(e.mat);
        if (term.cone) s.ideal = DecoratedSimplex::IdealVertex{term.cusp, Mat2::identity()};
        out.add(s, term.coeff);
    }
    return out;
}

std::pair<Chain<DecoratedSimplex>, CuspData> conjugate_decorated(const Chain<DecoratedSimplex>& c,
                                                                 const CuspData& cusps, const Mat2& h) {
    h.require_unimodular();
    Mat2 hinv = h.inverse_unimodular();
    auto conj = [&](const Mat2& g) { return h * g * hinv; };
    Chain<DecoratedSimplex> chain;
    for (const auto& [s, coeff] : c) {
        DecoratedSimplex out = s;
        for (auto& e : out.edges) e = conj(e);
        if (out.ideal) out.ideal->coset = conj(out.ideal->coset);
        chain.add(out, coeff);
    }
    CuspData data = cusps;
    for (auto& cusp : data.cusps) {
        cusp.fixed_point = mobius_apply(h, cusp.fixed_point);
        for (auto& g : cusp.generators) g = conj(g);
    }
    return {chain, data};
}

Chain<DecoratedSimplex> random_decorated_boundary(const CuspData& cusps,
                                                  const std::vector<Mat2>& interior_pool,
                                                  unsigned seed, int n_simplices) {
    std::mt19937 rng(seed);
    auto pick_interior = [&]() { return interior_pool[rng() % interior_pool.size()]; };
    Chain<DecoratedSimplex> total;
    for (int k = 0; k < n_simplices; ++k) {
        DecoratedSimplex s;
        if (!cusps.cusps.empty() && rng() % 2 == 0) {
            int cusp_index = 1 + static_cast<int>(rng() % cusps.cusps.size());
            const Cusp& cusp = cusps.at(cusp_index);
            auto pick_peripheral = [&]() {
                Mat2 g = cusp.generators[rng() % cusp.generators.size()];
                if (rng() % 2) g = g.inverse_unimodular();
                if (rng() % 2) g = g * cusp.generators[rng() % cusp.generators.size()];
                return g;
            };
            s.edges = {pick_peripheral(), pick_peripheral(), pick_peripheral()};
            s.ideal = DecoratedSimplex::IdealVertex{cusp_index, Mat2::identity()};
        } else {
            s.edges = {pick_interior(), pick_interior(), pick_interior(), pick_interior()};
        }
        Rational coeff(1 + static_cast<long>(rng() % 3));
        if (rng() % 2) coeff = -coeff;
        total.add(decorated_boundary(s), coeff);
    }
    return total;
}

}  // namespace prebloch
