#include "helpers.hpp"

#include <dlrev/interp_group.hpp>
#include <dlrev/reversion.hpp>

using namespace dlrev;
using testing::code_of;

namespace {

RationalSeries random_unit(std::mt19937 &rng, std::size_t order)
{
    auto c = testing::random_vector(rng, order);
    c[0] = Rational(1);
    return RationalSeries(c);
}

RationalSeries random_tangent(std::mt19937 &rng, std::size_t order)
{
    auto c = testing::random_vector(rng, order);
    c[0] = Rational(0);
    c[1] = Rational(1);
    return RationalSeries(c);
}

} // namespace

TEST_CASE("group element validation")
{
    CHECK(code_of([] { GroupElement<Rational>(RationalSeries::constant(Rational(2), 4), RationalSeries::x(4)); })
          == ErrorCode::BadConstantTerm);
    CHECK(code_of([] { GroupElement<Rational>(RationalSeries::one(4), RationalSeries::monomial(Rational(2), 1, 4)); })
          == ErrorCode::BadValuation);
    CHECK(code_of([] { sg_from_diffeo(RationalSeries::x(4), Rational(0)); }) == ErrorCode::BadRange);
}

TEST_CASE("diffeomorphisms embed as SG(tau)")
{
    std::mt19937 rng(30);
    for (const Rational &tau : {Rational(1), Rational(1, 2), Rational(-1), Rational(3), Rational(-2, 3)}) {
        const auto alpha = random_tangent(rng, 12);
        const auto beta = random_tangent(rng, 12);
        const auto ga = sg_from_diffeo(alpha, tau);
        CHECK(in_sg(ga, tau));
        CHECK(group_mul(ga, sg_from_diffeo(beta, tau)) == sg_from_diffeo(compose(beta, alpha), tau));
    }
    const GroupElement<Rational> outside(random_unit(rng, 10), RationalSeries::x(10));
    CHECK_FALSE(in_sg(outside, Rational(1)));
    CHECK(in_sg(outside, Rational(0)) == (outside.alpha == RationalSeries::x(10)));
}

TEST_CASE("twist is an automorphism")
{
    std::mt19937 rng(31);
    const GroupElement<Rational> g(random_unit(rng, 10), random_tangent(rng, 10));
    const GroupElement<Rational> h(random_unit(rng, 10), random_tangent(rng, 10));
    for (const Rational &lambda : {Rational(2), Rational(-1, 3)}) {
        CHECK(twist(group_mul(g, h), lambda) == group_mul(twist(g, lambda), twist(h, lambda)));
    }
    const auto same = twist(g, Rational(0));
    CHECK(same.a == truncate(g.a, 9));
    CHECK(same.alpha == g.alpha);
}

TEST_CASE("deformation endpoints")
{
    std::mt19937 rng(32);
    const auto a = random_unit(rng, 12);
    CHECK(deform_inversion_reversion(a, Rational(0)) == invert(a));
    CHECK(truncate(shift_up(deform_inversion_reversion(a, Rational(1)), 1), 12) == truncate(revert(shift_up(a, 1)), 12));
    CHECK(deform_derivative_variant(a, Rational(0)) == invert(a));
    CHECK(truncate(integrate(deform_derivative_variant(a, Rational(1))), 12) == truncate(revert(integrate(a)), 12));
    CHECK(code_of([] { deform_inversion_reversion(RationalSeries::constant(Rational(3), 4), Rational(1)); })
          == ErrorCode::BadConstantTerm);
}

TEST_CASE("coefficients of F_tau are polynomials of degree <= k in tau")
{
    std::mt19937 rng(33);
    const std::size_t order = 7;
    const auto a = random_unit(rng, order);
    for (std::size_t k = 0; k < order; ++k) {
        std::vector<Rational> values;
        for (long t = 0; t <= static_cast<long>(k) + 1; ++t) {
            values.push_back(deform_inversion_reversion(a, Rational(t))[k]);
        }
        const auto poly = interpolate_integer_nodes(values, "tau");
        CHECK(poly.degree_in("tau") <= static_cast<long>(k));
        for (const Rational &tau : {Rational(1, 2), Rational(-3), Rational(5, 7)}) {
            CHECK(poly.evaluate({{"tau", tau}}) == deform_inversion_reversion(a, tau)[k]);
        }
    }
}
