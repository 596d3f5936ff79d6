#pragma once

#include <vector>

#include "prebloch/scalar.hpp"

namespace prebloch {

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention).
const std::vector<Rational>& bernoulli_table(std::size_t n);

// Dilogarithm Li_2(z) for |z| <= 1, Re z <= 1/2, via the Bernoulli series in
// w = -log(1-z). Exposed for the test oracles; bloch_wigner handles the
// reduction into that region.
FloatC li2_reduced(const FloatC& z);

// Bloch-Wigner function D(z) = Im Li_2(z) + arg(1-z) log|z|. Vanishes on the
// real axis; D(conj z) = -D(z); satisfies the six-fold symmetry
// D(z) = -D(1/z) = -D(1-z). Accuracy ~2^-P at working precision P.
Float bloch_wigner(const FloatC& z);
Float bloch_wigner(const Scalar& z);

}  // namespace prebloch
