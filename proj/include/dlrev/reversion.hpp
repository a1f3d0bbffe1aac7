#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <dlrev/matrix.hpp>
#include <dlrev/series.hpp>

namespace dlrev {

// The truncation sequence P_1 = s_0, P_k = floor(P_{k-1} s)_k of a series s,
// together with the mirror polynomials Q_n(x) = x^{n-1} P_n(1/x).
//
// Polynomials are dense coefficient vectors in x: P(n)[j] = [x^j] P_n.
// Both P_n and Q_n are stored with exactly n slots, so Q(n)[j] = P(n)[n-1-j].
template <typename R>
class DLSequence {
public:
    DLSequence(TruncatedSeries<R> s, std::vector<std::vector<R>> p) : s_(std::move(s)), p_(std::move(p))
    {
        q_.reserve(p_.size());
        for (const auto &poly : p_) {
            q_.emplace_back(poly.rbegin(), poly.rend());
        }
    }

    const TruncatedSeries<R> &source() const noexcept { return s_; }
    std::size_t size() const noexcept { return p_.size(); }
    const std::vector<R> &P(std::size_t n) const { return p_.at(n - 1); }
    const std::vector<R> &Q(std::size_t n) const { return q_.at(n - 1); }
    // Q_n(0), the leading coefficient of P_n viewed in degree n-1.
    const R &Q_at_zero(std::size_t n) const { return q_.at(n - 1).front(); }

private:
    TruncatedSeries<R> s_;
    std::vector<std::vector<R>> p_;
    std::vector<std::vector<R>> q_;
};

template <typename R>
DLSequence<R> dl_build(const TruncatedSeries<R> &s, std::size_t n_max)
{
    if (n_max == 0) {
        throw Error(ErrorCode::BadRange, "n_max must be >= 1");
    }
    if (is_zero(s[0])) {
        throw Error(ErrorCode::NonInvertibleConstantTerm, "s_0 must be nonzero");
    }
    if (s.order() < n_max) {
        throw Error(ErrorCode::InsufficientPrecision,
                    "P_" + std::to_string(n_max) + " needs s to order " + std::to_string(n_max));
    }
    std::vector<std::vector<R>> p;
    p.reserve(n_max);
    p.push_back({s[0]});
    for (std::size_t k = 2; k <= n_max; ++k) {
        const auto &prev = p.back();
        std::vector<R> next(k, R(0));
        for (std::size_t i = 0; i < prev.size(); ++i) {
            if (is_zero(prev[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < k; ++j) {
                if (!is_zero(s[j])) {
                    next[i + j] += prev[i] * s[j];
                }
            }
        }
        p.push_back(std::move(next));
    }
    return DLSequence<R>(truncate(s, n_max), std::move(p));
}

// q(t) = sum_{n=1}^{n_max} Q_n(0) t^n, known modulo t^{n_max+1}. The
// functional equation q = t s(q) is checked before returning.
template <typename R>
TruncatedSeries<R> q_series(const DLSequence<R> &dl)
{
    const std::size_t n = dl.size();
    std::vector<R> c(n + 1, R(0));
    for (std::size_t k = 1; k <= n; ++k) {
        c[k] = dl.Q_at_zero(k);
    }
    TruncatedSeries<R> q(std::move(c));
    const auto rhs = shift_up(compose(dl.source(), q), 1);
    if (!(truncate(rhs, n + 1) == q)) {
        throw Error(ErrorCode::ValidationError, "internal: q = t s(q) does not hold");
    }
    return q;
}

// (k+1)/n [x^{n-k-1}] s(x)^n, which equals [t^n] q(t)^{k+1}.
template <typename R>
R lagrange_coeff(const TruncatedSeries<R> &s, std::size_t n, std::size_t k)
{
    if (!(k < n) || n > s.order()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "need 0 <= k < n <= order (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    const auto power = pow_int(truncate(s, n - k), n);
    return power[n - k - 1] * Rational(static_cast<long>(k + 1), static_cast<long>(n));
}

// Both sides of n [x^n] q^k = k [x^{n-k}] (x/p)^n, each computed on its own
// route: the left through Newton reversion, the right through s = x/p.
template <typename R>
std::pair<R, R> lagrange_burmann_check(const TruncatedSeries<R> &p, std::size_t n, std::size_t k)
{
    if (!is_zero(p[0]) || p.order() < 2 || !is_unit(p[1])) {
        throw Error(ErrorCode::BadValuation, "p must have valuation 1 with invertible linear term");
    }
    if (n == 0 || k > n || n >= p.order()) {
        throw Error(ErrorCode::IndexOutOfRange, "need 1 <= n < order and k <= n");
    }
    const auto q = revert(truncate(p, n + 1));
    R lhs = pow_int(q, k)[n] * Rational(static_cast<long>(n));
    const auto s = invert(shift_down(truncate(p, n + 1), 1));
    // k = 0 makes both sides vanish; s is only known up to x^{n-1}.
    R rhs = k == 0 ? R(0) : pow_int(s, n)[n - k] * Rational(static_cast<long>(k));
    return {std::move(lhs), std::move(rhs)};
}

// sum_n Q_n(x) t^n and q(t) / (1 - x q(t)), both over polynomials with the
// indeterminate `var` adjoined, modulo t^{n_max+1}.
template <typename R>
std::pair<PolySeries, PolySeries> full_generating_series(const DLSequence<R> &dl, const std::string &var = "x")
{
    const std::size_t n = dl.size();
    const MultiPoly x = MultiPoly::variable(var);
    std::vector<MultiPoly> lhs(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        MultiPoly acc;
        MultiPoly xp(1);
        for (const auto &c : dl.Q(k)) {
            acc += to_poly(c) * xp;
            xp *= x;
        }
        lhs[k] = std::move(acc);
    }
    const PolySeries q = to_poly_series(q_series(dl));
    const PolySeries rhs = q * invert(PolySeries::one(n + 1) - q.scaled(x));
    return {PolySeries(std::move(lhs)), rhs};
}

// (k+1)(n-k) n^{n-2-k} == k sum_{m=k}^{n-1} C(n-k, n-m) m^{m-1-k} (n-m)^{n-m-1}
bool exp_identity_check(long n, long k);

// The n-fold composition f o f o ... o f (m = 0 gives x).
template <typename R>
TruncatedSeries<R> compose_power(const TruncatedSeries<R> &f, std::size_t m)
{
    auto acc = TruncatedSeries<R>::x(f.order());
    for (std::size_t i = 0; i < m; ++i) {
        acc = compose(f, acc);
    }
    return acc;
}

// Lagrange interpolation through (0, y_0), ..., (d, y_d) as a polynomial in var.
template <typename R>
MultiPoly interpolate_integer_nodes(const std::vector<R> &values, const std::string &var)
{
    const MultiPoly x = MultiPoly::variable(var);
    const long d = static_cast<long>(values.size());
    MultiPoly result;
    for (long m = 0; m < d; ++m) {
        if (is_zero(values[static_cast<std::size_t>(m)])) {
            continue;
        }
        MultiPoly basis(1);
        Rational denom(1);
        for (long j = 0; j < d; ++j) {
            if (j != m) {
                basis *= x - MultiPoly(j);
                denom *= Rational(m - j);
            }
        }
        result += to_poly(values[static_cast<std::size_t>(m)]) * basis * denom.inverse();
    }
    return result;
}

// Polynomials C_1(x), ..., C_{n_max}(x) with f^{o x}(t) = sum C_n(x) t^n,
// interpolated from the integer iterates f^{o 0}, ..., f^{o (n-1)}.
template <typename R>
std::vector<MultiPoly> compose_iterate_interpolate(const TruncatedSeries<R> &f, std::size_t n_max,
                                                   const std::string &var = "x")
{
    if (f.order() < 2 || !is_zero(f[0]) || !(f[1] == R(1))) {
        throw Error(ErrorCode::NotTangentToIdentity, "f must be t + O(t^2)");
    }
    if (f.order() < n_max + 1) {
        throw Error(ErrorCode::InsufficientPrecision, "f must be known to order n_max + 1");
    }
    const auto base = truncate(f, n_max + 1);
    std::vector<TruncatedSeries<R>> iterates;
    iterates.push_back(TruncatedSeries<R>::x(n_max + 1));
    for (std::size_t m = 1; m < n_max; ++m) {
        iterates.push_back(compose(base, iterates.back()));
    }
    std::vector<MultiPoly> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<R> values;
        values.reserve(n);
        for (std::size_t m = 0; m < n; ++m) {
            values.push_back(iterates[m][n]);
        }
        out.push_back(interpolate_integer_nodes(values, var));
    }
    return out;
}

// Upper-triangular matrix whose row k (k = 1..size) holds the coefficients
// of x^1..x^size in f^k. With this layout M(f o g) = M(f) M(g).
template <typename R>
Matrix<R> composition_matrix(const TruncatedSeries<R> &f, std::size_t size)
{
    if (f.order() < 2 || !is_zero(f[0]) || is_zero(f[1])) {
        throw Error(ErrorCode::BadValuation, "composition matrix needs valuation 1");
    }
    if (f.order() < size + 1) {
        throw Error(ErrorCode::InsufficientPrecision, "f must be known to order size + 1");
    }
    const auto base = truncate(f, size + 1);
    Matrix<R> m(size, size);
    auto power = TruncatedSeries<R>::one(size + 1);
    for (std::size_t k = 1; k <= size; ++k) {
        power = power * base;
        for (std::size_t j = 1; j <= size; ++j) {
            m(k - 1, j - 1) = power[j];
        }
    }
    return m;
}

// s_0 + s_1 x + ... with each coefficient a fresh indeterminate prefix<j>.
PolySeries symbolic_series(const std::string &prefix, std::size_t order);

std::string letter(const std::string &prefix, std::size_t index);

} // namespace dlrev
