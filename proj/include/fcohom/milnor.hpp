#pragma once

// Jacobian-ideal invariants of a quasi-homogeneous isolated singularity:
// Milnor number, standard-monomial basis of the quotient algebra, its
// graded dimensions, and the derived Hodge numbers.

#include <map>
#include <vector>

#include "fcohom/groebner.hpp"
#include "fcohom/univariate.hpp"

namespace fcohom {

struct MilnorData {
    GroebnerBasis jacobian_gb;
    std::vector<Monomial> basis_B; // sorted by (weighted degree, order)
    long milnor_number = 0;
    std::map<long, long> graded_dims;     // weighted degree -> dim (Q_f)_d
    std::map<long, long> hodge;           // q -> h^{q, n-q}
    long degree_N = 0;
    WeightSystem weights;

    long graded_dim(long d) const {
        auto it = graded_dims.find(d);
        return it == graded_dims.end() ? 0 : it->second;
    }
    long hodge_number(long q) const {
        return graded_dim(q * degree_N - weights.total());
    }
};

inline MilnorData milnor_data(const Polynomial& f, const WeightSystem& W) {
    auto N = is_quasi_homogeneous(f, W);
    if (!N) throw NotQuasiHomogeneous("f is not quasi-homogeneous for the given weights");

    std::size_t n = f.nvars();
    std::vector<Polynomial> jac;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        jac.push_back(partial_derivative(f, i));
        any = any || !jac.back().is_zero();
    }
    if (!any) throw NotIsolatedSingularity("Jacobian ideal is zero");

    MilnorData data{buchberger(jac, MonomialOrder::weighted_grevlex(W)), {}, 0, {}, {}, *N, W};
    std::vector<Monomial> lead = leading_monomials(data.jacobian_gb);

    // Finite quotient iff every variable carries a pure power among the
    // leading monomials (a constant leading monomial makes the ideal (1)).
    std::vector<int> bound(n, -1);
    bool unit_ideal = false;
    for (const auto& m : lead) {
        if (m.is_constant()) unit_ideal = true;
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exponents[i] == 0) continue;
            if (support >= 0) { pure = false; break; }
            support = static_cast<int>(i);
        }
        if (pure && support >= 0) {
            int e = m.exponents[support];
            if (bound[support] < 0 || e < bound[support]) bound[support] = e;
        }
    }
    if (!unit_ideal)
        for (std::size_t i = 0; i < n; ++i)
            if (bound[i] < 0)
                throw NotIsolatedSingularity("no pure power of variable " + std::to_string(i) +
                                             " in the leading ideal");

    if (!unit_ideal) {
        // Enumerate the finite exponent box and keep standard monomials.
        Monomial m(n);
        std::vector<Monomial> standard;
        while (true) {
            bool divisible = false;
            for (const auto& l : lead)
                if (l.divides(m)) { divisible = true; break; }
            if (!divisible) standard.push_back(m);
            std::size_t i = 0;
            while (i < n) {
                if (++m.exponents[i] < bound[i]) break;
                m.exponents[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
        MonomialOrder order = data.jacobian_gb.order;
        std::sort(standard.begin(), standard.end(), [&](const Monomial& a, const Monomial& b) {
            long da = weighted_degree(a, W), db = weighted_degree(b, W);
            if (da != db) return da < db;
            return order.greater(a, b);
        });
        data.basis_B = std::move(standard);
    }

    data.milnor_number = static_cast<long>(data.basis_B.size());
    for (const auto& m : data.basis_B) ++data.graded_dims[weighted_degree(m, W)];
    for (long q = 1; q <= static_cast<long>(n); ++q)
        data.hodge[q] = data.hodge_number(q);
    return data;
}

// Independent oracle for the graded dimensions of the quotient algebra:
// prod_i (t^{N-w_i} - 1)/(t^{w_i} - 1), expanded exactly.
inline UnivariatePoly poincare_series_product(const WeightSystem& W, long N) {
    for (int w : W.weights)
        if (N <= w)
            throw PreconditionError("degree_too_small", "need N > w_i for every weight");
    UnivariatePoly num = UnivariatePoly::one();
    for (int w : W.weights) num = num * UnivariatePoly::power_minus_one(static_cast<std::size_t>(N - w));
    for (int w : W.weights) num = num.exact_div(UnivariatePoly::power_minus_one(static_cast<std::size_t>(w)));
    return num;
}

} // namespace fcohom
