#pragma once

#include <string>
#include <utility>

#include "fcohom/monomial.hpp"
#include "fcohom/polynomial.hpp"

namespace fcohom {

// Total, multiplicative, well-founded term orders. weighted_grevlex(W) is
// the default everywhere downstream so leading terms respect the grading.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, weighted_grevlex };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
    static MonomialOrder weighted_grevlex(WeightSystem W) {
        return MonomialOrder(Kind::weighted_grevlex, std::move(W));
    }

    Kind kind() const { return kind_; }
    const WeightSystem& weights() const { return weights_; }

    // Strict "a comes before b", i.e. a is the larger term.
    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::lex: {
                for (std::size_t i = 0; i < a.nvars(); ++i)
                    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
                return false;
            }
            case Kind::grevlex:
                return graded_revlex(a, b, a.total_degree(), b.total_degree());
            case Kind::weighted_grevlex:
                return graded_revlex(a, b, weighted_degree(a, weights_),
                                     weighted_degree(b, weights_));
        }
        return false;
    }

    bool less(const Monomial& a, const Monomial& b) const { return greater(b, a); }

    std::string name() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::weighted_grevlex: return "weighted-grevlex";
        }
        return "";
    }

private:
    MonomialOrder(Kind kind, WeightSystem W) : kind_(kind), weights_(std::move(W)) {}

    static bool graded_revlex(const Monomial& a, const Monomial& b, long da, long db) {
        if (da != db) return da > db;
        for (std::size_t i = a.nvars(); i-- > 0;)
            if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
        return false;
    }

    Kind kind_;
    WeightSystem weights_;
};

// Leading term of a nonzero polynomial.
inline std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw PreconditionError("zero_polynomial", "zero polynomial has no leading term");
    const auto* best = &*p.terms().begin();
    for (const auto& t : p.terms())
        if (order.greater(t.first, best->first)) best = &t;
    return {best->first, best->second};
}

} // namespace fcohom
