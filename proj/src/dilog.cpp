#include "prebloch/dilog.hpp"

#include <mutex>

namespace prebloch {

const std::vector<Rational>& bernoulli_table(std::size_t n) {
    static std::vector<Rational>* table = new std::vector<Rational>{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    // recurrence sum_{j=0}^{m-1} C(m+1, j) B_j = -(m+1) B_m
    while (table->size() <= n) {
        std::size_t m = table->size();
        Rational acc(0);
        Int binom(1);  // C(m+1, 0)
        for (std::size_t j = 0; j < m; ++j) {
            acc += Rational(binom) * (*table)[j];
            binom = binom * Int(m + 1 - j) / Int(j + 1);
        }
        // binom is now C(m+1, m) = m+1
        table->push_back(-acc / Rational(binom));
    }
    return *table;
}

FloatC li2_reduced(const FloatC& z) {
    if (z.re == 0 && z.im == 0) return FloatC();
    // w = -log(1-z); on |z| <= 1, Re z <= 1/2 the ratio |w|/2pi stays below
    // ~0.52, so the Bernoulli series sum_k B_k w^{k+1}/(k+1)! converges
    // geometrically.
    FloatC one(Float(1), Float(0));
    FloatC w = -log_c(one - z);
    Float cutoff = ldexp(Float(1), -static_cast<int>(precision_bits()) - 16);
    const std::size_t kmax = 2 * precision_bits() + 80;
    const auto& bern = bernoulli_table(kmax);

    FloatC term = w;    // w^{k+1}/(k+1)! at k = 0
    FloatC sum = term;  // B_0 = 1
    for (std::size_t k = 1; k <= kmax; ++k) {
        term = term * w;
        term.re /= static_cast<unsigned long>(k + 1);
        term.im /= static_cast<unsigned long>(k + 1);
        if (bern[k] == 0) continue;  // odd k > 1
        Float coeff = to_float(bern[k]);
        FloatC contrib{term.re * coeff, term.im * coeff};
        sum = sum + contrib;
        if (k > 4 && abs(contrib.re) < cutoff && abs(contrib.im) < cutoff) break;
    }
    return sum;
}

Float bloch_wigner(const FloatC& z_in) {
    FloatC z = z_in;
    // identically zero on the real axis, including the parameters 0, 1, inf
    if (z.im == 0) return Float(0);
    Float sign(1);
    FloatC one(Float(1), Float(0));
    if (z.norm() > 1) {
        z = one / z;
        sign = -sign;
    }
    if (z.re > Float(1) / 2) {
        z = one - z;
        sign = -sign;
    }
    FloatC li2 = li2_reduced(z);
    Float out = li2.im + arg_c(one - z) * (log(z.norm()) / 2);
    return sign * out;
}

Float bloch_wigner(const Scalar& z) {
    if (z.is_exact() && z.im_sign() == 0) return Float(0);
    return bloch_wigner(z.to_float());
}

}  // namespace prebloch
