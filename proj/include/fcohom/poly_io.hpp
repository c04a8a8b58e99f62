#pragma once

// Text grammar for polynomials:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := rational | var ('^' integer)?
//   rational := integer ('/' integer)?
// Whitespace is insignificant. The canonical printer emits terms in
// descending graded reverse lexicographic order with explicit '*' and '^'.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "fcohom/polynomial.hpp"

namespace fcohom {

namespace detail {

constexpr int kMaxExponent = 1 << 20;

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars, std::size_t base)
        : text_(text), vars_(vars), base_(base), pos_(0) {}

    Polynomial parse() {
        Polynomial p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial parse_sum() {
        Polynomial acc(vars_.size());
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                break;
            }
            acc += parse_term(sign);
            first = false;
            skip_ws();
            if (pos_ >= text_.size()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-' between terms");
        }
        return acc;
    }

    Polynomial parse_term(int sign) {
        Rational coeff(sign);
        Monomial mono(vars_.size());
        bool any = false;
        while (true) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_rational();
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                auto [index, exponent] = parse_var_power();
                mono.exponents[index] += exponent;
                if (mono.exponents[index] > kMaxExponent) fail("exponent overflow");
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size()) fail("dangling '*'");
                continue;
            }
            c = peek();
            if (!(std::isdigit(static_cast<unsigned char>(c)) ||
                  std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
                break;
        }
        if (!any) fail("expected a term");
        return Polynomial::term(mono, coeff);
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer den = parse_integer();
            if (sgn(den) == 0) fail_at("zero denominator", at);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    std::pair<std::size_t, int> parse_var_power() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        std::size_t index = vars_.size();
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) { index = i; break; }
        if (index == vars_.size()) fail_at("unknown variable '" + name + "'", start);
        int exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer e = parse_integer();
            if (e < 0 || e > kMaxExponent) fail_at("exponent overflow", at);
            exponent = static_cast<int>(e.get_si());
        }
        return {index, exponent};
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        throw ParseError(message, base_ + at);
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t base_;
    std::size_t pos_;
};

// Graded reverse lexicographic comparison; true when a precedes b in the
// descending print order (a is larger).
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
    }
    return false;
}

} // namespace detail

inline Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars,
                             std::size_t offset_base = 0) {
    std::string trimmed = text;
    // Parsers validate variable distinctness once here.
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw PreconditionError("duplicate_variables", "variable names must be distinct");
    std::size_t i = 0;
    while (i < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[i]))) ++i;
    if (i == trimmed.size()) throw ParseError("empty polynomial", offset_base);
    return detail::PolyParser(trimmed, vars, offset_base).parse();
}

inline std::string print_monomial(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!first) out << '*';
        out << vars[i];
        if (m.exponents[i] > 1) out << '^' << m.exponents[i];
        first = false;
    }
    if (first) out << '1';
    return out.str();
}

inline std::string print_poly(const Polynomial& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        return detail::grevlex_greater(a->first, b->first);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : terms) {
        Rational c = t->second;
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        Rational a = abs(c);
        if (t->first.is_constant()) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << '*';
            out << print_monomial(t->first, vars);
        }
        first = false;
    }
    return out.str();
}

} // namespace fcohom
