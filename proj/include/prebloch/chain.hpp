#pragma once

#include <functional>
#include <map>

#include "prebloch/numbers.hpp"

namespace prebloch {

enum class CoeffMode { Z, Q };

// Sparse linear combination of generators over Q; Z-mode restrictions are
// handled by the operations that care (torsion, input validation). Zero
// coefficients are never stored.
template <class Gen>
class Chain {
public:
    using Terms = std::map<Gen, Rational>;

    Chain() = default;
    explicit Chain(const Gen& g, Rational coeff = Rational(1)) { add(g, std::move(coeff)); }

    void add(const Gen& g, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(g, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const Chain& other, const Rational& scale = Rational(1)) {
        for (const auto& [g, c] : other.terms_) add(g, c * scale);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coeff(const Gen& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational l1_norm() const {
        Rational s(0);
        for (const auto& [g, c] : terms_) s += abs(c);
        return s;
    }

    friend Chain operator+(const Chain& x, const Chain& y) {
        Chain r = x;
        r.add(y);
        return r;
    }
    friend Chain operator-(const Chain& x, const Chain& y) {
        Chain r = x;
        r.add(y, Rational(-1));
        return r;
    }
    friend Chain operator*(const Rational& s, const Chain& x) {
        Chain r;
        if (s != 0)
            for (const auto& [g, c] : x.terms_) r.terms_.emplace(g, c * s);
        return r;
    }
    Chain operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const Chain& x, const Chain& y) { return x.terms_ == y.terms_; }

    // Linear extension of a generator-wise map into chains of another type.
    template <class F>
    auto map_linear(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const Gen&>()))>;
        Out out;
        for (const auto& [g, c] : terms_) out.add(f(g), c);
        return out;
    }

private:
    Terms terms_;
};

}  // namespace prebloch
