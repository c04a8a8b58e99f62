#pragma once

// Dense univariate polynomials over the integers, just enough for Poincare
// series products. Coefficient i is the coefficient of t^i.

#include <vector>

#include "fcohom/rational.hpp"

namespace fcohom {

struct UnivariatePoly {
    std::vector<Integer> coeff;

    void trim() {
        while (!coeff.empty() && sgn(coeff.back()) == 0) coeff.pop_back();
    }

    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    Integer at(std::size_t i) const { return i < coeff.size() ? coeff[i] : Integer(0); }

    static UnivariatePoly one() { return UnivariatePoly{{Integer(1)}}; }

    // t^e - 1 (e >= 1)
    static UnivariatePoly power_minus_one(std::size_t e) {
        UnivariatePoly p;
        p.coeff.assign(e + 1, Integer(0));
        p.coeff[0] = -1;
        p.coeff[e] = 1;
        return p;
    }

    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UnivariatePoly r;
        r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeff.size(); ++i)
            for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
        r.trim();
        return r;
    }

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.coeff == b.coeff;
    }

    // Exact division; throws when the remainder is nonzero or a leading
    // division is inexact.
    UnivariatePoly exact_div(const UnivariatePoly& d) const {
        if (d.is_zero()) throw PreconditionError("division_by_zero", "univariate division by zero");
        UnivariatePoly rem = *this;
        rem.trim();
        UnivariatePoly q;
        if (rem.coeff.size() < d.coeff.size()) {
            if (!rem.is_zero())
                throw PreconditionError("inexact_division", "univariate division is not exact");
            return q;
        }
        q.coeff.assign(rem.coeff.size() - d.coeff.size() + 1, Integer(0));
        for (std::size_t k = q.coeff.size(); k-- > 0;) {
            Integer num = rem.at(k + d.coeff.size() - 1);
            if (sgn(num % d.coeff.back()) != 0)
                throw PreconditionError("inexact_division", "univariate division is not exact");
            Integer c = num / d.coeff.back();
            q.coeff[k] = c;
            if (sgn(c) != 0)
                for (std::size_t j = 0; j < d.coeff.size(); ++j) rem.coeff[k + j] -= c * d.coeff[j];
        }
        rem.trim();
        if (!rem.is_zero())
            throw PreconditionError("inexact_division", "univariate division is not exact");
        q.trim();
        return q;
    }

    Integer eval_at_one() const {
        Integer s(0);
        for (const auto& c : coeff) s += c;
        return s;
    }
};

} // namespace fcohom
