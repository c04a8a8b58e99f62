#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
// selection, plus multivariate division. Scale target is desk-size Jacobian
// ideals (n <= 4, degree <= 12), where this is entirely adequate.

#include <algorithm>
#include <list>
#include <vector>

#include "fcohom/monomial_order.hpp"
#include "fcohom/polynomial.hpp"

namespace fcohom {

struct GroebnerBasis {
    std::vector<Polynomial> generators; // reduced, monic, sorted ascending
    MonomialOrder order;
};

namespace detail {

// Divisor scan: index of the first generator whose leading monomial divides m.
inline int find_reducer(const Monomial& m, const std::vector<Monomial>& lead) {
    for (std::size_t i = 0; i < lead.size(); ++i)
        if (lead[i].divides(m)) return static_cast<int>(i);
    return -1;
}

} // namespace detail

// Remainder of multivariate division of g by gb. No term of the result is
// divisible by a leading monomial of the basis; g - result lies in the ideal.
inline Polynomial normal_form_poly(const Polynomial& g, const GroebnerBasis& gb) {
    std::vector<Monomial> lead;
    lead.reserve(gb.generators.size());
    for (const auto& b : gb.generators) lead.push_back(leading_term(b, gb.order).first);

    Polynomial work = g;
    Polynomial remainder(g.nvars());
    while (!work.is_zero()) {
        auto [m, c] = leading_term(work, gb.order);
        int r = detail::find_reducer(m, lead);
        if (r < 0) {
            remainder.add_term(m, c);
            work.add_term(m, -c);
        } else {
            const Polynomial& b = gb.generators[r];
            auto [lm, lc] = leading_term(b, gb.order);
            work -= Polynomial::term(m / lm, c / lc) * b;
        }
    }
    return remainder;
}

namespace detail {

struct BasisEntry {
    Polynomial poly;
    Monomial lead;
    long sugar;
};

struct Pair {
    std::size_t i, j;
    Monomial lcm_lead;
    long sugar;
};

inline long sugar_degree(const Polynomial& p) {
    long d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max<long>(d, m.total_degree());
    return d;
}

// Full reduction that tracks the sugar of the intermediate result.
inline Polynomial reduce_with_sugar(Polynomial work, const std::vector<BasisEntry>& basis,
                                    const MonomialOrder& order, long& sugar) {
    Polynomial remainder(work.nvars());
    while (!work.is_zero()) {
        auto [m, c] = leading_term(work, order);
        int r = -1;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].lead.divides(m)) { r = static_cast<int>(i); break; }
        if (r < 0) {
            remainder.add_term(m, c);
            work.add_term(m, -c);
        } else {
            const auto& b = basis[r];
            Monomial q = m / b.lead;
            sugar = std::max(sugar, b.sugar + q.total_degree());
            work -= Polynomial::term(q, c / leading_term(b.poly, order).second) * b.poly;
        }
    }
    return remainder;
}

} // namespace detail

// Buchberger. The result is the unique reduced monic basis for the order.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty())
        throw PreconditionError("empty_generators", "need at least one nonzero generator");

    using detail::BasisEntry;
    using detail::Pair;
    std::vector<BasisEntry> basis;
    std::list<Pair> pairs;

    auto add_poly = [&](const Polynomial& p) {
        Monomial lm = leading_term(p, order).first;
        std::size_t t = basis.size();
        // Gebauer-Moeller update: drop new pairs strictly dominated by the
        // new leading monomial, keep the ones the chain criterion needs.
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            Monomial l = lcm(basis[i].lead, lm);
            long sugar = std::max(basis[i].sugar + (l / basis[i].lead).total_degree(),
                                  detail::sugar_degree(p) + (l / lm).total_degree());
            fresh.push_back(Pair{i, t, l, sugar});
        }
        // Criterion M: discard (i,t) when another (j,t) has a properly
        // dividing lcm.
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[a] || !keep[b]) continue;
                if (fresh[b].lcm_lead.divides(fresh[a].lcm_lead) &&
                    !(fresh[a].lcm_lead == fresh[b].lcm_lead))
                    keep[a] = false;
            }
        // Criterion F: among equal lcms keep one.
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (keep[a] && keep[b] && fresh[a].lcm_lead == fresh[b].lcm_lead) keep[b] = false;
        // Product criterion.
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            if (lcm(basis[fresh[a].i].lead, lm) == basis[fresh[a].i].lead * lm) keep[a] = false;
        }
        // Old pairs whose lcm is a proper multiple of the new lead are gone.
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (lm.divides(it->lcm_lead) && !(lcm(basis[it->i].lead, lm) == it->lcm_lead) &&
                !(lcm(basis[it->j].lead, lm) == it->lcm_lead))
                it = pairs.erase(it);
            else
                ++it;
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) pairs.push_back(fresh[a]);
        basis.push_back(BasisEntry{p, lm, detail::sugar_degree(p)});
    };

    for (const auto& g : nonzero) add_poly(g);

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (it->sugar < best->sugar ||
                (it->sugar == best->sugar && order.less(it->lcm_lead, best->lcm_lead)))
                best = it;
        Pair pr = *best;
        pairs.erase(best);

        const auto& fi = basis[pr.i];
        const auto& fj = basis[pr.j];
        Polynomial spoly =
            Polynomial::term(pr.lcm_lead / fi.lead,
                             Rational(1) / leading_term(fi.poly, order).second) * fi.poly -
            Polynomial::term(pr.lcm_lead / fj.lead,
                             Rational(1) / leading_term(fj.poly, order).second) * fj.poly;
        if (spoly.is_zero()) continue;
        long sugar = pr.sugar;
        Polynomial rem = detail::reduce_with_sugar(spoly, basis, order, sugar);
        if (!rem.is_zero()) add_poly(rem);
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lead.divides(basis[i].lead) &&
                (!(basis[i].lead == basis[j].lead) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i].poly);
    }

    // Inter-reduce tails and normalize to monic.
    GroebnerBasis result{{}, order};
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis others{{}, order};
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.generators.push_back(minimal[j]);
        Polynomial reduced = others.generators.empty()
                                 ? minimal[i]
                                 : normal_form_poly(minimal[i], others);
        auto [lm, lc] = leading_term(reduced, order);
        result.generators.push_back(Rational(1) / lc * reduced);
    }
    std::sort(result.generators.begin(), result.generators.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order.greater(leading_term(a, order).first, leading_term(b, order).first);
              });
    return result;
}

// Leading monomials of the basis, in basis order.
inline std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> lead;
    lead.reserve(gb.generators.size());
    for (const auto& g : gb.generators) lead.push_back(leading_term(g, gb.order).first);
    return lead;
}

} // namespace fcohom
