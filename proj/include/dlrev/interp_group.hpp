#pragma once

#include <algorithm>

#include <dlrev/series.hpp>

namespace dlrev {

// Element (A, alpha) of the special group SU x| SD: A has constant term 1,
// alpha = x + O(x^2). The product is (A, alpha)(B, beta) = (A (B o alpha), beta o alpha).
template <typename R = Rational>
struct GroupElement {
    TruncatedSeries<R> a;
    TruncatedSeries<R> alpha;

    GroupElement(TruncatedSeries<R> unit, TruncatedSeries<R> diffeo) : a(std::move(unit)), alpha(std::move(diffeo))
    {
        if (!(a[0] == R(1))) {
            throw Error(ErrorCode::BadConstantTerm, "unit part must have constant term 1");
        }
        if (alpha.order() < 2 || !is_zero(alpha[0]) || !(alpha[1] == R(1))) {
            throw Error(ErrorCode::BadValuation, "diffeomorphism part must be x + O(x^2)");
        }
    }

    static GroupElement neutral(std::size_t order)
    {
        return GroupElement(TruncatedSeries<R>::one(order), TruncatedSeries<R>::x(order));
    }

    std::size_t order() const { return std::min(a.order(), alpha.order()); }

    friend bool operator==(const GroupElement &g, const GroupElement &h) { return g.a == h.a && g.alpha == h.alpha; }
};

template <typename R>
GroupElement<R> truncate(const GroupElement<R> &g, std::size_t order)
{
    return GroupElement<R>(truncate(g.a, order), truncate(g.alpha, order));
}

template <typename R>
GroupElement<R> group_mul(const GroupElement<R> &g, const GroupElement<R> &h)
{
    return GroupElement<R>(g.a * compose(h.a, g.alpha), compose(h.alpha, g.alpha));
}

// (A, alpha)^{-1} = (1 / (A o alpha^<-1>), alpha^<-1>)
template <typename R>
GroupElement<R> group_inv(const GroupElement<R> &g)
{
    auto back = revert(g.alpha);
    auto unit = invert(compose(g.a, back));
    return GroupElement<R>(std::move(unit), std::move(back));
}

// (A, x A^tau), an element of SG(tau).
template <typename R>
GroupElement<R> sg_element(const TruncatedSeries<R> &a, const Rational &tau)
{
    return GroupElement<R>(a, shift_up(pow(a, tau), 1));
}

// Whether g lies in SG(tau), compared at the order g is known to.
template <typename R>
bool in_sg(const GroupElement<R> &g, const Rational &tau)
{
    const std::size_t n = std::min(g.a.order() + 1, g.alpha.order());
    return truncate(g.alpha, n) == truncate(shift_up(pow(g.a, tau), 1), n);
}

// The isomorphism SD -> SG(tau), alpha |-> ((alpha/x)^{1/tau}, alpha), tau != 0.
template <typename R>
GroupElement<R> sg_from_diffeo(const TruncatedSeries<R> &alpha, const Rational &tau)
{
    if (tau.is_zero()) {
        throw Error(ErrorCode::BadRange, "SG(0) is commutative and not isomorphic to SD");
    }
    return GroupElement<R>(pow(shift_down(alpha, 1), tau.inverse()), alpha);
}

// The automorphism (A, alpha) |-> (A (alpha/x)^lambda, alpha) of the special group.
template <typename R>
GroupElement<R> twist(const GroupElement<R> &g, const Rational &lambda)
{
    return GroupElement<R>(g.a * pow(shift_down(g.alpha, 1), lambda), g.alpha);
}

// F_tau = 1 / (A o (x A^tau)^<-1>); F_0 = 1/A and x F_1 = (xA)^<-1>.
template <typename R>
TruncatedSeries<R> deform_inversion_reversion(const TruncatedSeries<R> &a, const Rational &tau)
{
    if (!(a[0] == R(1))) {
        throw Error(ErrorCode::BadConstantTerm, "A must have constant term 1");
    }
    return invert(compose(a, revert(shift_up(pow(a, tau), 1))));
}

// Same deformation through the group structure: (x A^tau)^{-1} in SG(tau) is
// the image of alpha^<-1> under the isomorphism from SD, so
// F_tau = ((x A^tau)^<-1> / x)^{1/tau}. Requires tau != 0.
template <typename R>
TruncatedSeries<R> deform_inversion_reversion_via_group(const TruncatedSeries<R> &a, const Rational &tau)
{
    if (!(a[0] == R(1))) {
        throw Error(ErrorCode::BadConstantTerm, "A must have constant term 1");
    }
    const auto alpha = shift_up(pow(a, tau), 1);
    return sg_from_diffeo(revert(alpha), tau).a;
}

// G_tau = 1 / (A o (int_0 A^tau)^<-1>); G_0 = 1/A and int_0 G_1 = (int_0 A)^<-1>.
template <typename R>
TruncatedSeries<R> deform_derivative_variant(const TruncatedSeries<R> &a, const Rational &tau)
{
    if (!(a[0] == R(1))) {
        throw Error(ErrorCode::BadConstantTerm, "A must have constant term 1");
    }
    return invert(compose(a, revert(integrate(pow(a, tau)))));
}

} // namespace dlrev
