#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "fcohom/errors.hpp"

namespace fcohom {

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}.
// The ambient variable count is the vector length and is fixed per value.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}

    std::size_t nvars() const { return exponents.size(); }
    int operator[](std::size_t i) const { return exponents[i]; }

    int total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }

    bool is_constant() const {
        return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
    }

    Monomial operator*(const Monomial& other) const {
        require_same_arity(other);
        Monomial r(*this);
        for (std::size_t i = 0; i < nvars(); ++i) r.exponents[i] += other.exponents[i];
        return r;
    }

    // Exact quotient; caller must check divides() first.
    Monomial operator/(const Monomial& other) const {
        require_same_arity(other);
        Monomial r(*this);
        for (std::size_t i = 0; i < nvars(); ++i) r.exponents[i] -= other.exponents[i];
        return r;
    }

    bool divides(const Monomial& other) const {
        if (nvars() != other.nvars()) return false;
        for (std::size_t i = 0; i < nvars(); ++i)
            if (exponents[i] > other.exponents[i]) return false;
        return true;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.require_same_arity(b);
        Monomial r(a);
        for (std::size_t i = 0; i < a.nvars(); ++i)
            r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
    // Arbitrary but fixed total order used for canonical term storage.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }

    void require_same_arity(const Monomial& other) const {
        if (nvars() != other.nvars())
            throw ArityMismatch("monomials with different variable counts");
    }
};

// Positive integer weights w_1..w_n, optionally annotated with the
// expected quasi-homogeneity degree N.
struct WeightSystem {
    std::vector<int> weights;
    std::optional<int> degree_hint;

    WeightSystem() = default;
    explicit WeightSystem(std::vector<int> w, std::optional<int> hint = std::nullopt)
        : weights(std::move(w)), degree_hint(hint) {
        for (int wi : weights)
            if (wi < 1) throw PreconditionError("invalid_weights", "weights must be >= 1");
    }

    std::size_t nvars() const { return weights.size(); }

    long total() const {
        return std::accumulate(weights.begin(), weights.end(), 0LL);
    }
};

inline long weighted_degree(const Monomial& m, const WeightSystem& W) {
    if (m.nvars() != W.nvars())
        throw ArityMismatch("monomial/weight arity mismatch");
    long d = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        d += static_cast<long>(W.weights[i]) * m.exponents[i];
    return d;
}

} // namespace fcohom
