#include "prebloch/halfspace.hpp"

#include <sstream>

namespace prebloch {

namespace {

Float det3(const std::array<std::array<Float, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Float det4(const std::array<std::array<Float, 4>, 4>& m) {
    Float out(0);
    int sign = 1;
    for (int j = 0; j < 4; ++j, sign = -sign) {
        std::array<std::array<Float, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Float term = m[0][j] * det3(minor);
        out += sign > 0 ? term : -term;
    }
    return out;
}

// Covector of the plane through three lift vectors: N with N . Y =
// det(V0, V1, V2, Y), via cofactors of the missing fourth row.
std::array<Float, 4> plane_covector(const HermVec& v0, const HermVec& v1, const HermVec& v2) {
    std::array<std::array<Float, 4>, 3> rows = {v0.coords(), v1.coords(), v2.coords()};
    std::array<Float, 4> n;
    int sign = -1;  // (-1)^{3 + j} for j = 0
    for (int j = 0; j < 4; ++j, sign = -sign) {
        std::array<std::array<Float, 3>, 3> minor;
        for (int r = 0; r < 3; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                minor[r][cc++] = rows[r][c];
            }
        }
        Float d = det3(minor);
        n[j] = sign > 0 ? d : -d;
    }
    return n;
}

Float dot4(const std::array<Float, 4>& a, const std::array<Float, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Float norm2(const std::array<Float, 4>& a) { return sqrt(dot4(a, a)); }

// relative-proximity threshold for "on a face plane"
Float face_tolerance() { return Float(1) / 1000000; }

int sign_with_threshold(const Float& value, const Float& scale) {
    Float tol = scale * float_equality_tolerance();
    if (value > tol) return 1;
    if (value < -tol) return -1;
    return 0;
}

}  // namespace

StraightTetra::StraightTetra(const IdealTuple& t) : v{ProjPoint(), ProjPoint(), ProjPoint(), ProjPoint()} {
    if (t.points.size() != 4) throw MixedDegree("straight tetra needs 4 vertices");
    for (int i = 0; i < 4; ++i) v[i] = t.points[i];
}

bool StraightTetra::all_ideal() const {
    for (const auto& vert : v)
        if (!std::holds_alternative<ProjPoint>(vert)) return false;
    return true;
}

HermVec lift(const ProjPoint& p) {
    FloatC n = p.num().to_float();
    FloatC d = p.den().to_float();
    return {n.norm(), d.norm(), n * d.conj()};
}

HermVec lift(const H3Point& p) {
    FloatC z{p.x, p.y};
    return {(z.norm() + p.t * p.t) / p.t, Float(1) / p.t, FloatC(p.x / p.t, p.y / p.t)};
}

HermVec lift(const TetraVertex& v) {
    return std::visit([](const auto& p) { return lift(p); }, v);
}

H3Point mobius_apply_h3(const Mat2& g, const H3Point& p) {
    HermVec m = lift(p);
    FloatC a = g.a.to_float(), b = g.b.to_float(), c = g.c.to_float(), d = g.d.to_float();
    // M' = g M g^*, with M = [[A, B], [conj B, C]]
    FloatC A(m.A, Float(0)), C(m.C, Float(0));
    FloatC r0 = a * A + b * m.B.conj();
    FloatC r1 = a * m.B + b * C;
    FloatC A2 = r0 * a.conj() + r1 * b.conj();
    FloatC B2 = r0 * c.conj() + r1 * d.conj();
    FloatC r2 = c * A + d * m.B.conj();
    FloatC r3 = c * m.B + d * C;
    FloatC C2 = r2 * c.conj() + r3 * d.conj();
    Float det = A2.re * C2.re - B2.norm();
    if (!(C2.re > 0) || !(det > 0)) throw InvariantViolation("isometry did not preserve the interior");
    Float t = sqrt(det) / C2.re;
    return H3Point(B2.re / C2.re, B2.im / C2.re, t);
}

int simplex_orientation(const StraightTetra& s) {
    std::array<std::array<Float, 4>, 4> rows;
    Float scale(1);
    for (int i = 0; i < 4; ++i) {
        rows[i] = lift(s.v[i]).coords();
        Float rmax(0);
        for (const auto& x : rows[i])
            if (abs(x) > rmax) rmax = abs(x);
        if (rmax == 0) throw InvariantViolation("zero lift vector");
        scale *= rmax;
    }
    return sign_with_threshold(det4(rows), scale);
}

Rational point_degree(const std::vector<std::pair<Rational, StraightTetra>>& chain, const H3Point& y) {
    HermVec ylift = lift(y);
    std::array<Float, 4> yc = ylift.coords();
    Float ynorm = norm2(yc);
    Rational total(0);
    for (const auto& [coeff, tet] : chain) {
        int orient = simplex_orientation(tet);
        if (orient == 0) continue;  // flat simplex, empty interior
        std::array<HermVec, 4> lifts = {lift(tet.v[0]), lift(tet.v[1]), lift(tet.v[2]), lift(tet.v[3])};
        bool inside = true;
        for (int i = 0; i < 4 && inside; ++i) {
            std::array<HermVec, 3> face;
            int cc = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) face[cc++] = lifts[j];
            std::array<Float, 4> n = plane_covector(face[0], face[1], face[2]);
            Float nn = norm2(n);
            Float at_y = dot4(n, yc);
            int sy = sign_with_threshold(at_y, nn * ynorm);
            if (sy == 0) throw OnBoundaryFace();
            Float at_ref = dot4(n, lifts[i].coords());
            int sr = sign_with_threshold(at_ref, nn * norm2(lifts[i].coords()));
            if (sr == 0 || sy != sr) inside = false;
        }
        if (inside) total += orient > 0 ? coeff : -coeff;
    }
    return total;
}

Float face_proximity(const std::vector<std::pair<Rational, StraightTetra>>& chain, const H3Point& y) {
    HermVec ylift = lift(y);
    std::array<Float, 4> yc = ylift.coords();
    Float ynorm = norm2(yc);
    Float best(-1);
    for (const auto& [coeff, tet] : chain) {
        std::array<HermVec, 4> lifts = {lift(tet.v[0]), lift(tet.v[1]), lift(tet.v[2]), lift(tet.v[3])};
        for (int i = 0; i < 4; ++i) {
            std::array<HermVec, 3> face;
            int cc = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) face[cc++] = lifts[j];
            std::array<Float, 4> n = plane_covector(face[0], face[1], face[2]);
            Float nn = norm2(n);
            if (nn == 0) continue;
            Float d = abs(dot4(n, yc)) / (nn * ynorm);
            if (best < 0 || d < best) best = d;
        }
    }
    return best < 0 ? Float(1) : best;
}

std::vector<std::pair<Rational, StraightTetra>> as_tetra_chain(const Chain<IdealTuple>& c) {
    std::vector<std::pair<Rational, StraightTetra>> out;
    out.reserve(c.size());
    for (const auto& [t, coeff] : c) out.emplace_back(coeff, StraightTetra(t));
    return out;
}

namespace {

// radical-inverse low-discrepancy sequence
Float halton(unsigned index, unsigned base) {
    Float f(1), r(0);
    while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
    }
    return r;
}

}  // namespace

H3Point sample_inside(const StraightTetra& tet, unsigned index) {
    static const unsigned bases[4] = {2, 3, 5, 7};
    // positive barycentric weights in the Minkowski lift stay inside the
    // geodesic simplex; -log of the low-discrepancy coordinates keeps them
    // away from the corners
    Float w[4];
    Float total(0);
    for (int j = 0; j < 4; ++j) {
        Float u = halton(index + 1, bases[j]);
        u = (u + Float(1) / 1000) / (Float(1) + Float(2) / 1000);
        w[j] = -log(u);
        total += w[j];
    }
    HermVec acc{Float(0), Float(0), FloatC()};
    for (int j = 0; j < 4; ++j) {
        HermVec l = lift(tet.v[j]);
        Float s = w[j] / total;
        acc.A += s * l.A;
        acc.C += s * l.C;
        acc.B.re += s * l.B.re;
        acc.B.im += s * l.B.im;
    }
    Float det = acc.A * acc.C - acc.B.norm();
    if (!(acc.C > 0) || !(det > 0)) throw SamplingExhausted("degenerate barycentric sample");
    return H3Point(acc.B.re / acc.C, acc.B.im / acc.C, sqrt(det) / acc.C);
}

DegreeReport check_ideal_fundamental_cycle(const Chain<IdealTuple>& c, int n_samples, unsigned seed,
                                           CoeffMode mode) {
    DegreeReport report;
    report.seed = seed;
    report.l1_norm = c.l1_norm();
    report.cycle_alternating = is_cycle(c, Quotient::Alternating, mode);
    report.cycle_coinvariant = is_cycle(c, Quotient::Coinvariant, mode);

    auto tetras = as_tetra_chain(c);
    std::vector<const StraightTetra*> support;
    for (const auto& [coeff, tet] : tetras)
        if (simplex_orientation(tet) != 0) support.push_back(&tet);
    if (support.empty()) throw SamplingExhausted("chain has no nondegenerate simplex");

    unsigned index = seed * 7919u + 1u;
    int attempts_left = 200 * n_samples + 1000;
    int accepted = 0;
    bool all_one = true;
    while (accepted < n_samples) {
        if (--attempts_left <= 0) throw SamplingExhausted("face-plane avoidance failed repeatedly");
        const StraightTetra& tet = *support[accepted % support.size()];
        H3Point y = sample_inside(tet, index++);
        if (face_proximity(tetras, y) < face_tolerance()) continue;
        Rational deg;
        try {
            deg = point_degree(tetras, y);
        } catch (const OnBoundaryFace&) {
            continue;
        }
        ++accepted;
        ++report.degree_histogram[deg];
        if (deg != 1) all_one = false;
    }
    report.samples = accepted;
    report.degrees_all_one = all_one;
    report.pass = all_one && report.cycle_coinvariant;
    return report;
}

std::string report_text(const DegreeReport& r) {
    std::ostringstream os;
    os << "is_cycle_alternating: " << (r.cycle_alternating ? "true" : "false") << "\n";
    os << "is_cycle_coinvariant: " << (r.cycle_coinvariant ? "true" : "false") << "\n";
    os << "degrees_histogram:";
    for (const auto& [deg, count] : r.degree_histogram) os << " " << deg << ":" << count;
    os << "\n";
    os << "degrees_all_one: " << (r.degrees_all_one ? "true" : "false") << "\n";
    os << "l1_norm: " << r.l1_norm << "\n";
    os << "seed: " << r.seed << "\n";
    os << "samples: " << r.samples << "\n";
    os << "pass: " << (r.pass ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace prebloch
