#pragma once

// Sparse multivariate polynomials over the rationals. Values are immutable
// in spirit: every operation returns a fresh polynomial and nothing mutates
// a term map that has been handed out.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fcohom/monomial.hpp"
#include "fcohom/rational.hpp"

namespace fcohom {

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        if (!fcohom::is_zero(c)) p.terms_.emplace(Monomial(nvars), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Monomial m(nvars);
        m.exponents[i] = 1;
        return term(m, Rational(1));
    }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p(m.nvars());
        if (!fcohom::is_zero(c)) p.terms_.emplace(m, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.nvars() != nvars_) throw ArityMismatch("term arity differs from polynomial");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (fcohom::is_zero(it->second)) terms_.erase(it);
        } else if (fcohom::is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& other) {
        require_same_arity(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        require_same_arity(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_arity(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (fcohom::is_zero(c)) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(nvars_, Rational(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    void require_same_arity(const Polynomial& other) const {
        if (nvars_ != other.nvars_)
            throw ArityMismatch("polynomials with different variable counts");
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
    if (i >= f.nvars()) throw PreconditionError("bad_variable_index", "variable index out of range");
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponents[i];
        if (e == 0) continue;
        Monomial dm(m);
        dm.exponents[i] = e - 1;
        r.add_term(dm, c * Rational(e));
    }
    return r;
}

// Directional derivative along a weighted Euler field: sum w_i x_i df/dx_i.
inline Polynomial euler_derivative(const Polynomial& f, const WeightSystem& W) {
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c * Rational(weighted_degree(m, W)));
    return r;
}

// Sum of the terms of weighted degree exactly d.
inline Polynomial graded_component(const Polynomial& f, const WeightSystem& W, long d) {
    Polynomial r(f.nvars());
    if (d < 0) return r;
    for (const auto& [m, c] : f.terms())
        if (weighted_degree(m, W) == d) r.add_term(m, c);
    return r;
}

inline long max_weighted_degree(const Polynomial& f, const WeightSystem& W) {
    long d = -1;
    for (const auto& [m, c] : f.terms()) d = std::max(d, weighted_degree(m, W));
    return d;
}

// Degree N with W.f = N f, or nullopt when the terms are not co-graded.
// The zero polynomial has no quasi-homogeneity degree and is rejected.
inline std::optional<long> is_quasi_homogeneous(const Polynomial& f, const WeightSystem& W) {
    if (f.is_zero())
        throw PreconditionError("zero_polynomial", "quasi-homogeneity is undefined for 0");
    std::optional<long> N;
    for (const auto& [m, c] : f.terms()) {
        long d = weighted_degree(m, W);
        if (!N) N = d;
        else if (*N != d) return std::nullopt;
    }
    return N;
}

// Substitute images[i] for variable i. The images live in a common ring
// whose arity is images[0].nvars().
inline Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (images.size() != f.nvars())
        throw ArityMismatch("substitution list length differs from variable count");
    std::size_t target_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != target_vars) throw ArityMismatch("substitution images of mixed arity");
    Polynomial r(target_vars);
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target_vars, c);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (m.exponents[i] > 0) term = term * images[i].pow(m.exponents[i]);
        r += term;
    }
    return r;
}

} // namespace fcohom
