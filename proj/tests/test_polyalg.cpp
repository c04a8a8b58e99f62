#include <gtest/gtest.h>

#include <random>

#include "fcohom/poly_io.hpp"
#include "fcohom/polynomial.hpp"

using namespace fcohom;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = XY) {
    return parse_poly(s, vars);
}

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

// Random polynomial with small integer coefficients, n <= 4, degree <= deg.
Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int deg, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, deg);
    Polynomial p(nvars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(nvars);
        int budget = deg;
        for (std::size_t j = 0; j < nvars; ++j) {
            int e = exp(rng) % (budget + 1);
            m.exponents[j] = e;
            budget -= e;
        }
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

} // namespace

TEST(Parse, DirectTranscription) {
    Polynomial p = P("x^2 + y^2");
    EXPECT_EQ(p.term_count(), 2u);
    EXPECT_EQ(p.coeff(M({2, 0})), Rational(1));
    EXPECT_EQ(p.coeff(M({0, 2})), Rational(1));
}

TEST(Parse, ZeroPolynomial) {
    Polynomial p = parse_poly("0", {"x"});
    EXPECT_TRUE(p.is_zero());
}

TEST(Parse, FractionsAndSigns) {
    Polynomial p = P("3*x^2*y - 1/2*y^3");
    EXPECT_EQ(p.term_count(), 2u);
    EXPECT_EQ(p.coeff(M({2, 1})), Rational(3));
    EXPECT_EQ(p.coeff(M({0, 3})), Rational(-1, 2));
}

TEST(Parse, OptionalStarAndWhitespace) {
    EXPECT_EQ(P("2x y"), P("2*x*y"));
    EXPECT_EQ(P("  - x ^ 2  +  x^2 "), P("0", XY));
}

TEST(Parse, SyntaxErrorCarriesOffset) {
    try {
        P("x^2 + @");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 6u);
    }
}

TEST(Parse, UnknownVariable) {
    EXPECT_THROW(P("x + z"), ParseError);
}

TEST(Parse, ExponentOverflow) {
    EXPECT_THROW(P("x^99999999"), ParseError);
}

TEST(Parse, DuplicateVariablesRejected) {
    EXPECT_THROW(parse_poly("x", {"x", "x"}), PreconditionError);
}

TEST(Print, Canonical) {
    EXPECT_EQ(print_poly(P("3*x^2*y - 1/2*y^3"), XY), "3*x^2*y - 1/2*y^3");
    EXPECT_EQ(print_poly(P("0", XY), XY), "0");
    EXPECT_EQ(print_poly(P("y^2+x^2"), XY), "x^2 + y^2");
    EXPECT_EQ(print_poly(P("-x - 1"), XY), "-x - 1");
}

TEST(Arithmetic, Examples) {
    EXPECT_EQ(partial_derivative(P("x^2+y^2"), 0), P("2*x"));
    EXPECT_EQ(P("x+y") * P("x-y"), P("x^2-y^2"));
    EXPECT_EQ(partial_derivative(P("x^3+y^3"), 1), P("3*y^2"));
}

TEST(Arithmetic, ArityMismatchRejected) {
    EXPECT_THROW(P("x") + parse_poly("x", {"x"}), ArityMismatch);
}

TEST(WeightedDegree, Examples) {
    WeightSystem W12({1, 2});
    EXPECT_EQ(weighted_degree(M({1, 1}), W12), 3);
    EXPECT_EQ(weighted_degree(M({0, 0}), W12), 0);
    EXPECT_EQ(weighted_degree(M({3, 0}), WeightSystem({4, 3})), 12);
}

TEST(QuasiHomogeneous, Examples) {
    EXPECT_EQ(is_quasi_homogeneous(P("x^2+y^3"), WeightSystem({3, 2})), 6);
    EXPECT_EQ(is_quasi_homogeneous(P("x^2+y^3"), WeightSystem({1, 1})), std::nullopt);
    EXPECT_EQ(is_quasi_homogeneous(P("x^2+y^2"), WeightSystem({1, 1})), 2);
    EXPECT_THROW(is_quasi_homogeneous(P("0", XY), WeightSystem({1, 1})), PreconditionError);
}

TEST(GradedComponent, Examples) {
    WeightSystem W({1, 1});
    EXPECT_EQ(graded_component(P("x^2+y^3"), W, 2), P("x^2"));
    EXPECT_TRUE(graded_component(P("x^2+y^3"), W, -1).is_zero());
    Polynomial f = P("x^2+x*y+y^2");
    EXPECT_EQ(graded_component(f, W, 2), f);
}

TEST(Properties, RingAxioms) {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Polynomial a = random_poly(rng, n, 4), b = random_poly(rng, n, 4),
                   c = random_poly(rng, n, 4);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(Properties, MixedPartialsCommute) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 3;
        Polynomial f = random_poly(rng, n, 8);
        std::size_t i = rng() % n, j = rng() % n;
        EXPECT_EQ(partial_derivative(partial_derivative(f, i), j),
                  partial_derivative(partial_derivative(f, j), i));
    }
}

TEST(Properties, EulerIdentity) {
    std::mt19937_64 rng(7);
    std::vector<Polynomial> corpus = {P("x^2+y^2"), P("x^3+y^3"),
                                      parse_poly("x^2+y^3", {"x", "y"})};
    std::vector<WeightSystem> weights = {WeightSystem({1, 1}), WeightSystem({1, 1}),
                                         WeightSystem({3, 2})};
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        auto N = is_quasi_homogeneous(corpus[c], weights[c]);
        ASSERT_TRUE(N.has_value());
        Polynomial lhs(corpus[c].nvars());
        for (std::size_t i = 0; i < corpus[c].nvars(); ++i)
            lhs += Polynomial::variable(corpus[c].nvars(), i) *
                   Rational(weights[c].weights[i]) * partial_derivative(corpus[c], i);
        EXPECT_EQ(lhs, Rational(*N) * corpus[c]);
    }
    // And on random quasi-homogeneous polynomials assembled degree by degree.
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 2;
        std::vector<int> w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(1 + int(rng() % 3));
        WeightSystem W(w);
        Polynomial f = random_poly(rng, n, 6);
        long d = max_weighted_degree(f, W);
        if (d < 0) continue;
        Polynomial g = graded_component(f, W, d);
        auto N = is_quasi_homogeneous(g, W);
        ASSERT_EQ(N, d);
        EXPECT_EQ(euler_derivative(g, W), Rational(d) * g);
    }
}

TEST(Properties, ParsePrintRoundTrip) {
    std::mt19937_64 rng(99);
    std::vector<std::string> names = {"x", "y", "z", "w"};
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::vector<std::string> vars(names.begin(), names.begin() + n);
        Polynomial f = random_poly(rng, n, 6);
        EXPECT_EQ(parse_poly(print_poly(f, vars), vars), f);
    }
}
