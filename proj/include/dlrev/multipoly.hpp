#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <dlrev/rational.hpp>

namespace dlrev {

// Sparse multivariate polynomial over Rational in named commuting
// indeterminates.
//
// Variables are kept sorted by name, and only variables that actually
// occur with a nonzero exponent are retained, so equal polynomials have
// identical (variables, terms) pairs. Terms are keyed by exponent vectors
// aligned with variables(); zero coefficients are never stored.
class MultiPoly {
public:
    using Monomial = std::vector<std::uint32_t>;
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    MultiPoly(const Rational &c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(const std::string &name);
    static MultiPoly monomial(const Rational &coeff, const std::map<std::string, std::uint32_t> &powers);

    const std::vector<std::string> &variables() const noexcept { return vars_; }
    const TermMap &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return vars_.empty(); }
    // Constant coefficient (the term with all exponents zero).
    Rational constant_term() const;

    // Total degree; -1 for the zero polynomial.
    long total_degree() const;
    // Degree in one variable; -1 for the zero polynomial, 0 if absent.
    long degree_in(const std::string &var) const;
    bool depends_on(const std::string &var) const;

    // Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient(const std::string &var, std::uint32_t k) const;
    MultiPoly derivative(const std::string &var) const;
    MultiPoly substitute(const std::string &var, const MultiPoly &value) const;

    // Throws MissingVariable when the assignment does not cover every
    // variable of the polynomial.
    Rational evaluate(const std::map<std::string, Rational> &assignment) const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator/(MultiPoly a, const Rational &c) { return a *= c.inverse(); }
    MultiPoly operator-() const;

    MultiPoly pow(std::uint32_t exponent) const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const MultiPoly &p) { return os << p.to_string(); }

private:
    MultiPoly(std::vector<std::string> vars, TermMap terms);

    // Re-expresses the term map over a superset of the current variables.
    TermMap lifted(const std::vector<std::string> &vars) const;
    void normalize();

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Exact quotient a / b. Throws NotExactDivision when b does not divide a,
// DivisionByZero when b is zero.
MultiPoly exact_div(const MultiPoly &a, const MultiPoly &b);

// Union of two sorted variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string> &a, const std::vector<std::string> &b);

} // namespace dlrev
