#include "helpers.hpp"

#include <dlrev/combinatorics.hpp>
#include <dlrev/reversion.hpp>
#include <dlrev/transforms.hpp>

using namespace dlrev;
using testing::code_of;

namespace {

std::vector<Rational> catalan(std::size_t n)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(binomial(2 * static_cast<long>(i), static_cast<long>(i)) / Rational(static_cast<long>(i) + 1));
    }
    return c;
}

JFraction<Rational> random_jfraction(std::mt19937 &rng, std::size_t depth)
{
    JFraction<Rational> jf;
    jf.d0 = testing::random_nonzero(rng);
    for (std::size_t h = 0; h <= depth; ++h) {
        jf.p.push_back(testing::random_rational(rng));
    }
    for (std::size_t h = 0; h < depth; ++h) {
        jf.q.push_back(testing::random_nonzero(rng));
    }
    return jf;
}

} // namespace

TEST_CASE("inverse transform")
{
    std::mt19937 rng(40);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = testing::random_series(rng, 9);
        const auto ta = shift_up(a, 1);
        const auto lhs = truncate((RationalSeries::one(10) + ta) * (RationalSeries::one(10) - shift_up(inverse_transform(a), 1)), 10);
        CHECK(lhs == RationalSeries::one(10));
    }
}

TEST_CASE("inverse transform iterate at integer x")
{
    std::mt19937 rng(41);
    const auto a = testing::random_series(rng, 8);
    const auto ix = inverse_transform_iterate(a);
    CHECK(specialize(ix, "x", MultiPoly(0)) == to_poly_series(a));
    CHECK(specialize(ix, "x", MultiPoly(1)) == to_poly_series(inverse_transform(a)));
    CHECK(specialize(ix, "x", MultiPoly(2)) == to_poly_series(inverse_transform(inverse_transform(a))));
    for (std::size_t k = 0; k < ix.order(); ++k) {
        CHECK(ix[k].degree_in("x") <= static_cast<long>(k));
    }
}

TEST_CASE("binomial transform agrees with its generating function")
{
    std::mt19937 rng(42);
    for (const Rational &x : {Rational(1), Rational(-2), Rational(3, 4)}) {
        const auto a = testing::random_vector(rng, 9);
        CHECK(binomial_transform(a, x) == binomial_transform_gf(RationalSeries(a), x).coeffs());
    }
    // Binomial transform of 1, 0, 0, ... is the powers of x.
    std::vector<Rational> delta(6, Rational(0));
    delta[0] = Rational(1);
    const auto powers = binomial_transform(delta, Rational(3));
    CHECK(powers[5] == Rational(243));
}

TEST_CASE("Hankel determinants")
{
    const auto c = catalan(21);
    CHECK(hankel_transform(c, 0, 10) == std::vector<Rational>(10, Rational(1)));
    CHECK(hankel_transform(c, 1, 10) == std::vector<Rational>(10, Rational(1)));
    // d_{2,n} for Catalan numbers is n + 1.
    const auto h2 = hankel_transform(c, 2, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(h2[n - 1] == Rational(static_cast<long>(n) + 1));
    }
    CHECK(code_of([&] { hankel_det(c, 11, 6); }) == ErrorCode::InsufficientSequence);
}

TEST_CASE("Dodgson condensation")
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        const auto seq = testing::random_vector(rng, 12);
        const auto report = dodgson_check(seq, 3, 4);
        CHECK(report.holds);
        CHECK(report.checked == 12);
    }
    const auto c = catalan(15);
    CHECK(hankel_transform_condensed(c, 7) == hankel_transform(c, 0, 7));

    const std::vector<Rational> pivot{1, 1, 0, 1, 1, 1, 1, 2, 3};
    CHECK(code_of([&] { hankel_transform_condensed(pivot, 4); }) == ErrorCode::ZeroPivot);
    CHECK(hankel_transform_fast(pivot, 4) == hankel_transform(pivot, 0, 4));
    CHECK(code_of([&] { dodgson_check(pivot, 3, 4); }) == ErrorCode::InsufficientSequence);
}

TEST_CASE("J-fraction of the Catalan series")
{
    const auto jf = jfraction_expand(RationalSeries(catalan(8)), 2);
    CHECK(jf.d0 == Rational(1));
    CHECK(jf.p == std::vector<Rational>{Rational(1), Rational(2), Rational(2)});
    CHECK(jf.q == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("J-fraction round trip and Motzkin expansion")
{
    std::mt19937 rng(44);
    for (std::size_t depth = 0; depth <= 4; ++depth) {
        const auto jf = random_jfraction(rng, depth);
        const auto d = jfraction_contract(jf, 2 * depth + 2);
        CHECK(jfraction_expand(d, depth) == jf);

        const auto longer = jfraction_contract(jf, 9);
        for (std::size_t n = 0; n < 9; ++n) {
            Rational sum(0);
            for (const auto &path : enum_motzkin(n)) {
                sum += motzkin_weight(path, jf);
            }
            CHECK(longer[n] == jf.d0 * sum);
        }
        for (std::size_t k = 0; k <= depth; ++k) {
            CHECK(hankel_det(d.coeffs(), 0, k + 1) == principal_minor_product(jf, k));
        }
        CHECK(code_of([&] { principal_minor_product(jf, depth + 1); }) == ErrorCode::InsufficientDepth);
    }
}

TEST_CASE("J-fraction errors")
{
    CHECK(code_of([] { jfraction_expand(RationalSeries(std::vector<Rational>{0, 1, 2, 3}), 1); })
          == ErrorCode::ZeroConstantTerm);
    CHECK(code_of([] { jfraction_expand(RationalSeries(catalan(5)), 2); }) == ErrorCode::InsufficientPrecision);
    CHECK(code_of([] { jfraction_expand(RationalSeries(std::vector<Rational>(6, Rational(1))), 1); })
          == ErrorCode::SingularExpansion);
    JFraction<Rational> bad{Rational(1), {Rational(1)}, {Rational(1)}};
    CHECK(code_of([&] { jfraction_contract(bad, 4); }) == ErrorCode::ValidationError);
}

TEST_CASE("J-fraction of the series of Lukasiewicz words without s1")
{
    const auto reduced = reduced_luk_series(8);
    std::mt19937 rng(45);
    for (int trial = 0; trial < 10; ++trial) {
        std::map<std::string, Rational> s;
        for (std::size_t i = 0; i < 8; ++i) {
            s[letter("s", i)] = testing::random_nonzero(rng);
        }
        if (trial == 0) {
            for (auto &[name, value] : s) {
                value = Rational(1);
            }
        }
        std::vector<Rational> d;
        for (std::size_t n = 1; n < reduced.order(); ++n) {
            d.push_back(reduced[n].evaluate(s) / s["s0"]);
        }
        const auto jf = jfraction_expand(RationalSeries(d), 2);
        const Rational s0 = s["s0"], s2 = s["s2"], s3 = s["s3"], s4 = s["s4"];
        CHECK(jf.d0 == Rational(1));
        CHECK(jf.p[0] == Rational(0));
        CHECK(jf.q[0] == s0 * s2);
        CHECK(jf.p[1] == s0 * s3 / s2);
        CHECK(jf.q[1] == s0 * s2 + s0 * s0 * s4 / s2 - s0 * s0 * s3 * s3 / (s2 * s2));
        if (trial == 0) {
            CHECK(jf.q[0] == Rational(1));
            CHECK(jf.p[1] == Rational(1));
            CHECK(jf.q[1] == Rational(1));
        }
    }
}

TEST_CASE("Hankel determinants of the iterated inverse transform have degree <= k")
{
    std::mt19937 rng(46);
    for (int trial = 0; trial < 3; ++trial) {
        auto a = testing::random_vector(rng, 10);
        a[0] = testing::random_nonzero(rng);
        for (std::size_t k = 0; k <= 2; ++k) {
            for (std::size_t n = 1; n <= 3; ++n) {
                CHECK(laymangen_degree_check(a, k, n) <= static_cast<long>(k));
            }
        }
    }
    // Catalan numbers: I^x keeps d_{0,n} = 1 for every x.
    CHECK(iterate_hankel_det(catalan(7), 0, 3) == MultiPoly(1));
    CHECK(code_of([] { iterate_hankel_det(catalan(3), 0, 3); }) == ErrorCode::InsufficientSequence);
    CHECK(code_of([] { iterate_hankel_det({0, 1, 2, 3, 4}, 0, 2); }) == ErrorCode::ZeroConstantTerm);
}

TEST_CASE("Hankel determinants of the mirror polynomials are free of s1")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(laymangen_s1_check(n));
    }
    const auto det2 = mirror_hankel_det(2);
    CHECK_FALSE(det2.is_zero());
    CHECK(det2.depends_on("s0"));
    CHECK_FALSE(det2.depends_on("s1"));
    CHECK(mirror_hankel_det(0) == MultiPoly(1));
}
