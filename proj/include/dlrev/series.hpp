#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <dlrev/error.hpp>
#include <dlrev/ring.hpp>

namespace dlrev {

// A formal power series known modulo x^order: coefficients c_0..c_{order-1}.
//
// Every operation returns the largest order it can prove (minimum of the
// inputs, one less after differentiation, one more after integration).
// Coefficients beyond the known order are never invented.
template <typename R>
class TruncatedSeries {
public:
    using ring_type = R;

    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw Error(ErrorCode::EmptyCoefficients, "a truncated series needs order >= 1");
        }
    }

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(std::vector<R>(check(order), R(0))); }
    static TruncatedSeries constant(const R &c, std::size_t order)
    {
        std::vector<R> v(check(order), R(0));
        v[0] = c;
        return TruncatedSeries(std::move(v));
    }
    static TruncatedSeries one(std::size_t order) { return constant(R(1), order); }
    // The series x (identity for composition).
    static TruncatedSeries x(std::size_t order) { return monomial(R(1), 1, order); }
    static TruncatedSeries monomial(const R &c, std::size_t degree, std::size_t order)
    {
        std::vector<R> v(check(order), R(0));
        if (degree < order) {
            v[degree] = c;
        }
        return TruncatedSeries(std::move(v));
    }
    // A polynomial is known exactly, so it may be viewed at any order.
    static TruncatedSeries from_polynomial(const std::vector<R> &poly, std::size_t order)
    {
        std::vector<R> v(check(order), R(0));
        for (std::size_t i = 0; i < std::min(order, poly.size()); ++i) {
            v[i] = poly[i];
        }
        return TruncatedSeries(std::move(v));
    }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<R> &coeffs() const noexcept { return coeffs_; }
    const R &operator[](std::size_t i) const { return coeffs_.at(i); }

    // Index of the first nonzero coefficient, or order() if none is known.
    std::size_t valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!is_zero(coeffs_[i])) {
                return i;
            }
        }
        return coeffs_.size();
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        coeffs_.resize(std::min(order(), o.order()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        coeffs_.resize(std::min(order(), o.order()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries &operator*=(const Rational &c)
    {
        for (auto &v : coeffs_) {
            v *= c;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational &c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational &c, TruncatedSeries a) { return a *= c; }
    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto &v : r.coeffs_) {
            v = -v;
        }
        return r;
    }

    // Multiplies every coefficient by a ring element.
    TruncatedSeries scaled(const R &c) const
    {
        TruncatedSeries r = *this;
        for (auto &v : r.coeffs_) {
            v = v * c;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) { return a.coeffs_ == b.coeffs_; }

private:
    static std::size_t check(std::size_t order)
    {
        if (order == 0) {
            throw Error(ErrorCode::EmptyCoefficients, "a truncated series needs order >= 1");
        }
        return order;
    }

    std::vector<R> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<MultiPoly>;

template <typename R>
TruncatedSeries<R> operator*(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> c(n, R(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(a[i])) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!is_zero(b[j])) {
                c[i + j] += a[i] * b[j];
            }
        }
    }
    return TruncatedSeries<R>(std::move(c));
}

// First k coefficients. Asking for more than is known is an error.
template <typename R>
TruncatedSeries<R> truncate(const TruncatedSeries<R> &a, std::size_t k)
{
    if (k == 0) {
        throw Error(ErrorCode::EmptyCoefficients, "truncation order must be >= 1");
    }
    if (k > a.order()) {
        throw Error(ErrorCode::InsufficientPrecision,
                    "cannot truncate a series of order " + std::to_string(a.order()) + " at order "
                        + std::to_string(k));
    }
    return TruncatedSeries<R>(std::vector<R>(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(k)));
}

// Multiplication by x^v.
template <typename R>
TruncatedSeries<R> shift_up(const TruncatedSeries<R> &a, std::size_t v)
{
    std::vector<R> c(v, R(0));
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return TruncatedSeries<R>(std::move(c));
}

// Division by x^v; the first v coefficients must vanish.
template <typename R>
TruncatedSeries<R> shift_down(const TruncatedSeries<R> &a, std::size_t v)
{
    if (v >= a.order()) {
        throw Error(ErrorCode::InsufficientPrecision, "nothing known after dividing by x^" + std::to_string(v));
    }
    for (std::size_t i = 0; i < v; ++i) {
        if (!is_zero(a[i])) {
            throw Error(ErrorCode::BadValuation, "series is not divisible by x^" + std::to_string(v));
        }
    }
    return TruncatedSeries<R>(std::vector<R>(a.coeffs().begin() + static_cast<long>(v), a.coeffs().end()));
}

template <typename R>
TruncatedSeries<R> invert(const TruncatedSeries<R> &a)
{
    const R inv0 = unit_inverse(a[0]);
    const std::size_t n = a.order();
    std::vector<R> b(n, R(0));
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        R acc(0);
        for (std::size_t i = 1; i <= k; ++i) {
            if (!is_zero(a[i]) && !is_zero(b[k - i])) {
                acc += a[i] * b[k - i];
            }
        }
        b[k] = -(acc * inv0);
    }
    return TruncatedSeries<R>(std::move(b));
}

// a / b, defined as a * invert(b).
template <typename R>
TruncatedSeries<R> divide(const TruncatedSeries<R> &a, const TruncatedSeries<R> &b)
{
    return a * invert(b);
}

template <typename R>
TruncatedSeries<R> pow_int(const TruncatedSeries<R> &a, std::size_t k)
{
    auto result = TruncatedSeries<R>::one(a.order());
    auto base = a;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

// g(f(x)), by Horner's rule. f must have no constant term.
template <typename R>
TruncatedSeries<R> compose(const TruncatedSeries<R> &g, const TruncatedSeries<R> &f)
{
    if (!is_zero(f[0])) {
        throw Error(ErrorCode::NonzeroConstantTermInner, "inner series of a composition must vanish at 0");
    }
    const std::size_t n = std::min(g.order(), f.order());
    const auto inner = truncate(f, n);
    auto acc = TruncatedSeries<R>::constant(g[n - 1], n);
    for (std::size_t j = n - 1; j-- > 0;) {
        acc = acc * inner;
        std::vector<R> c = acc.coeffs();
        c[0] += g[j];
        acc = TruncatedSeries<R>(std::move(c));
    }
    return acc;
}

template <typename R>
TruncatedSeries<R> derivative(const TruncatedSeries<R> &a)
{
    if (a.order() < 2) {
        throw Error(ErrorCode::InsufficientPrecision, "derivative of an order-1 series carries no information");
    }
    std::vector<R> c;
    c.reserve(a.order() - 1);
    for (std::size_t i = 1; i < a.order(); ++i) {
        c.push_back(a[i] * Rational(static_cast<long>(i)));
    }
    return TruncatedSeries<R>(std::move(c));
}

// Antiderivative with zero constant term; known one order further.
template <typename R>
TruncatedSeries<R> integrate(const TruncatedSeries<R> &a)
{
    std::vector<R> c;
    c.reserve(a.order() + 1);
    c.push_back(R(0));
    for (std::size_t i = 0; i < a.order(); ++i) {
        c.push_back(a[i] * Rational(1, static_cast<long>(i + 1)));
    }
    return TruncatedSeries<R>(std::move(c));
}

template <typename R>
TruncatedSeries<R> exp(const TruncatedSeries<R> &a)
{
    if (!is_zero(a[0])) {
        throw Error(ErrorCode::BadConstantTerm, "exp needs a series without constant term");
    }
    // b = exp(a) satisfies b' = a' b, i.e. n b_n = sum_k k a_k b_{n-k}.
    const std::size_t n = a.order();
    std::vector<R> b(n, R(0));
    b[0] = R(1);
    for (std::size_t m = 1; m < n; ++m) {
        R acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (!is_zero(a[k]) && !is_zero(b[m - k])) {
                acc += a[k] * b[m - k] * Rational(static_cast<long>(k));
            }
        }
        b[m] = acc * Rational(1, static_cast<long>(m));
    }
    return TruncatedSeries<R>(std::move(b));
}

template <typename R>
TruncatedSeries<R> log(const TruncatedSeries<R> &a)
{
    if (!(a[0] == R(1))) {
        throw Error(ErrorCode::BadConstantTerm, "log needs constant term 1");
    }
    if (a.order() == 1) {
        return TruncatedSeries<R>::zero(1);
    }
    return integrate(derivative(a) * invert(a));
}

// a^tau = exp(tau log a) for a with constant term 1.
template <typename R>
TruncatedSeries<R> pow(const TruncatedSeries<R> &a, const Rational &tau)
{
    if (!(a[0] == R(1))) {
        throw Error(ErrorCode::BadConstantTerm, "pow needs constant term 1");
    }
    return exp(log(a) * tau);
}

namespace detail {

template <typename R>
TruncatedSeries<R> resized(const TruncatedSeries<R> &a, std::size_t n)
{
    std::vector<R> c = a.coeffs();
    c.resize(n, R(0));
    return TruncatedSeries<R>(std::move(c));
}

} // namespace detail

// Compositional inverse of p (p_0 = 0, p_1 a unit) by Newton iteration
//   q <- q - (p o q - x) / (p' o q),
// doubling the number of correct coefficients each step.
template <typename R>
TruncatedSeries<R> revert(const TruncatedSeries<R> &p)
{
    if (p.order() < 2) {
        throw Error(ErrorCode::InsufficientPrecision, "reversion needs the linear coefficient");
    }
    if (!is_zero(p[0]) || !is_unit(p[1])) {
        throw Error(ErrorCode::BadValuation, "reversion needs p_0 = 0 and an invertible p_1");
    }
    const std::size_t n = p.order();
    auto q = TruncatedSeries<R>::monomial(unit_inverse(p[1]), 1, 2);
    std::size_t prec = 2;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        const auto pt = truncate(p, prec);
        const auto qt = detail::resized(q, prec);
        const auto err = compose(pt, qt) - TruncatedSeries<R>::x(prec);
        const std::size_t v = err.valuation();
        if (v == prec) {
            q = qt;
            continue;
        }
        // err has valuation v >= 2; divide it by x^v first so that the
        // quotient by p' o q (known to one order less) keeps order prec.
        const auto slope = compose(derivative(pt), qt);
        const auto step = shift_up(shift_down(err, v) * invert(slope), v);
        q = qt - step;
    }
    q = detail::resized(q, n);
    if (!(compose(p, q) == TruncatedSeries<R>::x(n))) {
        throw Error(ErrorCode::ValidationError, "internal: Newton reversion failed verification");
    }
    return q;
}

// Coefficient-wise conversion into the polynomial ring.
template <typename R>
PolySeries to_poly_series(const TruncatedSeries<R> &a)
{
    std::vector<MultiPoly> c;
    c.reserve(a.order());
    for (const auto &v : a.coeffs()) {
        c.push_back(to_poly(v));
    }
    return PolySeries(std::move(c));
}

} // namespace dlrev
