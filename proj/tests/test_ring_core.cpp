#include "helpers.hpp"

#include <functional>

#include <dlrev/matrix.hpp>

using namespace dlrev;
using testing::code_of;

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("2/4").to_string() == "1/2");
    CHECK(Rational::parse(" -6/9 ").to_string() == "-2/3");
    CHECK(Rational::parse("+7").to_string() == "7");
    CHECK(Rational::parse("10/5").to_string() == "2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(code_of([] { Rational::parse("abc"); }) == ErrorCode::MalformedRational);
    CHECK(code_of([] { Rational::parse("1/"); }) == ErrorCode::MalformedRational);
    CHECK(code_of([] { Rational::parse("1/-2"); }) == ErrorCode::MalformedRational);
    CHECK(code_of([] { Rational::parse("1.5"); }) == ErrorCode::MalformedRational);
    CHECK(code_of([] { Rational::parse("3/0"); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { Rational(1, 0); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { Rational(0).inverse(); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { Rational(1) / Rational(0); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("rational field axioms on random values")
{
    std::mt19937 rng(1);
    for (int i = 0; i < 200; ++i) {
        const Rational a = testing::random_rational(rng);
        const Rational b = testing::random_rational(rng);
        const Rational c = testing::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        CHECK(Rational::parse(a.to_string()) == a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Rational(1));
            CHECK(a.pow(-2) * a.pow(2) == Rational(1));
        }
        CHECK(((a < b) || (b < a) || (a == b)));
    }
}

TEST_CASE("binomials and factorials agree with Pascal's triangle")
{
    std::vector<std::vector<long>> pascal{{1}};
    for (long n = 1; n <= 20; ++n) {
        std::vector<long> row(static_cast<std::size_t>(n + 1), 1);
        for (long k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)] + pascal.back()[static_cast<std::size_t>(k)];
        }
        pascal.push_back(row);
    }
    for (long n = 0; n <= 20; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == Rational(pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
        }
        CHECK(binomial(n, n + 1) == Rational(0));
    }
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(10) == Rational(3628800));
    CHECK(code_of([] { factorial(-1); }) == ErrorCode::BadRange);
}

TEST_CASE("multivariate polynomials: canonical form")
{
    const auto x = MultiPoly::variable("x");
    const auto y = MultiPoly::variable("y");
    CHECK((x - x).is_zero());
    CHECK((x - x).variables().empty());
    CHECK((x * y - y * x).is_zero());
    CHECK((x + MultiPoly(1) - x).is_constant());
    CHECK((x + y) * (x - y) == x.pow(2) - y.pow(2));
    CHECK((MultiPoly(2) * x.pow(2) * y - MultiPoly(Rational(1, 2))).to_string() == "2*x^2*y - 1/2");
    CHECK(((x + y).pow(3)).degree_in("x") == 3);
    CHECK(MultiPoly().degree_in("x") == -1);
    CHECK(y.degree_in("x") == 0);
    CHECK(((x + y).pow(2)).coefficient("x", 1) == MultiPoly(2) * y);
    CHECK(!y.depends_on("x"));
}

TEST_CASE("multivariate polynomials: ring laws and evaluation homomorphism")
{
    std::mt19937 rng(2);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int i = 0; i < 40; ++i) {
        const auto p = testing::random_poly(rng, vars);
        const auto q = testing::random_poly(rng, {"b", "c"});
        const auto r = testing::random_poly(rng, {"a"});
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        const std::map<std::string, Rational> at{{"a", testing::random_rational(rng)},
                                                 {"b", testing::random_rational(rng)},
                                                 {"c", testing::random_rational(rng)}};
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
        CHECK(p.substitute("a", MultiPoly(at.at("a"))).substitute("b", MultiPoly(at.at("b"))).substitute("c", MultiPoly(at.at("c")))
              == MultiPoly(p.evaluate(at)));
        CHECK((p * q).derivative("b") == p.derivative("b") * q + p * q.derivative("b"));
        if (!q.is_zero()) {
            CHECK(exact_div(p * q, q) == p);
        }
    }
    const auto x = MultiPoly::variable("x");
    CHECK(code_of([&] { x.evaluate({}); }) == ErrorCode::MissingVariable);
    CHECK(code_of([&] { exact_div(x, MultiPoly::variable("y")); }) == ErrorCode::NotExactDivision);
    CHECK(code_of([&] { exact_div(x.pow(2) + MultiPoly(1), x + MultiPoly(1)); }) == ErrorCode::NotExactDivision);
    CHECK(code_of([&] { exact_div(x, MultiPoly()); }) == ErrorCode::DivisionByZero);
}

namespace {

// Laplace expansion along the first row.
Rational cofactor_det(const Matrix<Rational> &m)
{
    const std::size_t n = m.rows();
    if (n == 0) {
        return Rational(1);
    }
    Rational total;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Rational> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c != j) {
                    minor(r - 1, cc++) = m(r, c);
                }
            }
        }
        const Rational term = m(0, j) * cofactor_det(minor);
        total += j % 2 == 0 ? term : -term;
    }
    return total;
}

} // namespace

TEST_CASE("determinants agree with cofactor expansion")
{
    std::mt19937 rng(3);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix<Rational> m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    // Sparse entries exercise pivoting.
                    m(i, j) = rng() % 3 == 0 ? Rational(0) : testing::random_rational(rng);
                }
            }
            const Rational want = cofactor_det(m);
            CHECK(det_fraction_free(m) == want);
            CHECK(det_gauss(m) == want);
        }
    }
    Matrix<Rational> swap(2, 2, {0, 1, 1, 0});
    CHECK(det_fraction_free(swap) == Rational(-1));
    Matrix<Rational> singular(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
    CHECK(det_fraction_free(singular) == Rational(0));
    CHECK(code_of([] { det_fraction_free(Matrix<Rational>(2, 3)); }) == ErrorCode::NonSquare);
    CHECK(det_fraction_free(Matrix<Rational>(0, 0)) == Rational(1));
}

TEST_CASE("symbolic determinant")
{
    const auto v = [](const char *n) { return MultiPoly::variable(n); };
    Matrix<MultiPoly> m(2, 2, {v("a"), v("b"), v("c"), v("d")});
    CHECK(det_fraction_free(m) == v("a") * v("d") - v("b") * v("c"));
    Matrix<MultiPoly> m3(3, 3, {v("a"), v("b"), v("c"), v("b"), v("c"), v("d"), v("c"), v("d"), v("e")});
    const MultiPoly want = v("a") * (v("c") * v("e") - v("d").pow(2)) - v("b") * (v("b") * v("e") - v("c") * v("d"))
                           + v("c") * (v("b") * v("d") - v("c").pow(2));
    CHECK(det_fraction_free(m3) == want);
}
