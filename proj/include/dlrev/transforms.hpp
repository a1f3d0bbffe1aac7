#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <dlrev/matrix.hpp>
#include <dlrev/reversion.hpp>
#include <dlrev/series.hpp>

namespace dlrev {

// I[a] = a / (1 + t a). Satisfies (1 + t a)(1 - t I[a]) = 1.
template <typename R>
TruncatedSeries<R> inverse_transform(const TruncatedSeries<R> &a)
{
    return a * invert(TruncatedSeries<R>::one(a.order()) + shift_up(a, 1));
}

// I^x[a] = a / (1 + x t a) with x a polynomial indeterminate. The k-th
// coefficient is a polynomial I_k(x) of degree <= k.
template <typename R>
PolySeries inverse_transform_iterate(const TruncatedSeries<R> &a, const std::string &var = "x")
{
    const PolySeries ap = to_poly_series(a);
    const auto denom = PolySeries::one(a.order()) + shift_up(ap, 1).scaled(MultiPoly::variable(var));
    return ap * invert(denom);
}

// Substitutes var := value in every coefficient.
PolySeries specialize(const PolySeries &a, const std::string &var, const MultiPoly &value);

// b_k = sum_n C(k, n) a_n x^{k-n}.
template <typename R>
std::vector<R> binomial_transform(const std::vector<R> &a, const Rational &x)
{
    std::vector<R> b(a.size(), R(0));
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t n = 0; n <= k; ++n) {
            const Rational w = binomial(static_cast<long>(k), static_cast<long>(n)) * x.pow(static_cast<long>(k - n));
            if (!w.is_zero()) {
                b[k] += a[n] * w;
            }
        }
    }
    return b;
}

// Generating-function form of the binomial transform: a(t/(1-xt)) / (1-xt).
template <typename R>
TruncatedSeries<R> binomial_transform_gf(const TruncatedSeries<R> &a, const Rational &x)
{
    const std::size_t n = a.order();
    std::vector<R> one_minus{R(1), R(-x)};
    const auto denom_inv = invert(TruncatedSeries<R>::from_polynomial(one_minus, n));
    const auto inner = truncate(shift_up(denom_inv, 1), n);
    return denom_inv * compose(a, inner);
}

// H_k(n) = (s_{i+j+k})_{0 <= i,j < n}.
template <typename R>
Matrix<R> hankel_matrix(const std::vector<R> &seq, std::size_t shift, std::size_t size)
{
    if (size > 0 && seq.size() < 2 * size - 1 + shift) {
        throw Error(ErrorCode::InsufficientSequence,
                    "H_" + std::to_string(shift) + "(" + std::to_string(size) + ") needs "
                        + std::to_string(2 * size - 1 + shift) + " terms, got " + std::to_string(seq.size()));
    }
    Matrix<R> m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            m(i, j) = seq[i + j + shift];
        }
    }
    return m;
}

template <typename R>
R hankel_det(const std::vector<R> &seq, std::size_t shift, std::size_t size)
{
    return det_fraction_free(hankel_matrix(seq, shift, size));
}

// (d_{k,1}, ..., d_{k,n_max}) with d_{k,n} = det H_k(n).
template <typename R>
std::vector<R> hankel_transform(const std::vector<R> &seq, std::size_t shift, std::size_t n_max)
{
    if (n_max > 0 && seq.size() < 2 * n_max - 1 + shift) {
        throw Error(ErrorCode::InsufficientSequence, "sequence too short for the requested Hankel transform");
    }
    std::vector<R> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(hankel_det(seq, shift, n));
    }
    return out;
}

struct DodgsonReport {
    bool holds = true;
    std::size_t checked = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

// Checks d_{k-1,n+1} d_{k+1,n-1} = d_{k-1,n} d_{k+1,n} - d_{k,n}^2 (with
// d_{k,0} = 1) for 1 <= k <= k_max, 1 <= n <= n_max, all determinants direct.
template <typename R>
DodgsonReport dodgson_check(const std::vector<R> &seq, std::size_t k_max, std::size_t n_max)
{
    if (k_max == 0 || n_max == 0 || seq.size() < k_max + 2 * n_max) {
        throw Error(ErrorCode::InsufficientSequence, "Dodgson check needs k_max + 2 n_max terms");
    }
    auto d = [&seq](std::size_t k, std::size_t n) { return n == 0 ? R(1) : hankel_det(seq, k, n); };
    DodgsonReport report;
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            const R dkn = d(k, n);
            const R lhs = d(k - 1, n + 1) * d(k + 1, n - 1);
            const R rhs = d(k - 1, n) * d(k + 1, n) - dkn * dkn;
            ++report.checked;
            if (!(lhs == rhs) && report.holds) {
                report.holds = false;
                report.first_violation = std::make_pair(k, n);
            }
        }
    }
    return report;
}

// d_{0,1..n_max} by condensation, starting from d_{k,0} = 1 and d_{k,1} = s_k.
// Throws ZeroPivot when some d_{k+1,n-1} needed as a divisor vanishes.
template <typename R>
std::vector<R> hankel_transform_condensed(const std::vector<R> &seq, std::size_t n_max)
{
    if (n_max > 0 && seq.size() < 2 * n_max - 1) {
        throw Error(ErrorCode::InsufficientSequence, "sequence too short for the requested Hankel transform");
    }
    const std::size_t len = seq.size();
    // rows[n][k] = d_{k,n}, defined while k + 2n - 2 < len.
    std::vector<std::vector<R>> rows;
    rows.emplace_back(len, R(1));
    rows.emplace_back(seq);
    for (std::size_t n = 1; n < n_max; ++n) {
        std::vector<R> next;
        for (std::size_t k = 1; k + 2 * n <= len; ++k) {
            const R &pivot = rows[n - 1][k + 1];
            if (is_zero(pivot)) {
                throw Error(ErrorCode::ZeroPivot, "d_{" + std::to_string(k + 1) + "," + std::to_string(n - 1)
                                                      + "} vanishes");
            }
            const R num = rows[n][k - 1] * rows[n][k + 1] - rows[n][k] * rows[n][k];
            next.push_back(exact_div(num, pivot));
        }
        rows.push_back(std::move(next));
    }
    std::vector<R> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(rows[n][0]);
    }
    return out;
}

// Condensation when it applies, direct determinants otherwise.
template <typename R>
std::vector<R> hankel_transform_fast(const std::vector<R> &seq, std::size_t n_max)
{
    try {
        return hankel_transform_condensed(seq, n_max);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::ZeroPivot) {
            throw;
        }
    }
    return hankel_transform(seq, 0, n_max);
}

// d(u) = d0 / (1 - p(0)u - q(0)u^2 / (1 - p(1)u - q(1)u^2 / (... / (1 - p(m)u)))).
template <typename R = Rational>
struct JFraction {
    R d0;
    std::vector<R> p; // p(0..m)
    std::vector<R> q; // q(0..m-1)

    std::size_t depth() const { return p.empty() ? 0 : p.size() - 1; }

    friend bool operator==(const JFraction &a, const JFraction &b)
    {
        return a.d0 == b.d0 && a.p == b.p && a.q == b.q;
    }
};

// Peels the continued fraction level by level: for a tail c with constant
// term 1, p = [u]c and q u^2 c_next = 1 - p u - 1/c. Needs 2m + 2 known
// coefficients.
JFraction<Rational> jfraction_expand(const RationalSeries &d, std::size_t depth);

// Series of the finite continued fraction at the given order. It reproduces
// the expanded series on its first 2 depth + 2 coefficients.
template <typename R>
TruncatedSeries<R> jfraction_contract(const JFraction<R> &jf, std::size_t order)
{
    if (jf.p.empty() || jf.q.size() + 1 != jf.p.size()) {
        throw Error(ErrorCode::ValidationError, "J-fraction needs m+1 values of p and m values of q");
    }
    const std::size_t m = jf.depth();
    auto level = [order](const R &p) { return TruncatedSeries<R>::from_polynomial({R(1), R(-p)}, order); };
    auto tail = invert(level(jf.p[m]));
    for (std::size_t h = m; h-- > 0;) {
        const auto qu2 = truncate(shift_up(tail, 2), order).scaled(jf.q[h]);
        tail = invert(level(jf.p[h]) - qu2);
    }
    return tail.scaled(jf.d0);
}

// d0^{k+1} q(0)^k q(1)^{k-1} ... q(k-1).
template <typename R>
R principal_minor_product(const JFraction<R> &jf, std::size_t k)
{
    if (k > jf.depth() || jf.q.size() < k) {
        throw Error(ErrorCode::InsufficientDepth, "principal minor of size k+1 needs depth >= k");
    }
    R acc = jf.d0;
    for (std::size_t i = 0; i < k; ++i) {
        acc = acc * jf.d0;
    }
    for (std::size_t h = 0; h < k; ++h) {
        for (std::size_t e = 0; e < k - h; ++e) {
            acc = acc * jf.q[h];
        }
    }
    return acc;
}

// det (I_{i+j+k}(x))_{0<=i,j<n} over polynomials in var, for the
// continuous inverse-transform iterate of a.
MultiPoly iterate_hankel_det(const std::vector<Rational> &a, std::size_t k, std::size_t n,
                             const std::string &var = "x");

// deg_x of iterate_hankel_det; bounded by k.
long laymangen_degree_check(const std::vector<Rational> &a, std::size_t k, std::size_t n);

// det (Q_{1+i+j}(x))_{0<=i,j<n} over letters s_0..s_{2n-2} and x.
MultiPoly mirror_hankel_det(std::size_t n);

// Whether mirror_hankel_det(n) is free of s_1.
bool laymangen_s1_check(std::size_t n);

} // namespace dlrev
