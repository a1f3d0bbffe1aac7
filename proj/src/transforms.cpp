#include <dlrev/transforms.hpp>

namespace dlrev {

PolySeries specialize(const PolySeries &a, const std::string &var, const MultiPoly &value)
{
    std::vector<MultiPoly> c;
    c.reserve(a.order());
    for (const auto &v : a.coeffs()) {
        c.push_back(v.substitute(var, value));
    }
    return PolySeries(std::move(c));
}

JFraction<Rational> jfraction_expand(const RationalSeries &d, std::size_t depth)
{
    if (d[0].is_zero()) {
        throw Error(ErrorCode::ZeroConstantTerm, "J-fraction expansion needs d_0 != 0");
    }
    if (d.order() < 2 * depth + 2) {
        throw Error(ErrorCode::InsufficientPrecision, "depth " + std::to_string(depth) + " needs "
                                                          + std::to_string(2 * depth + 2) + " coefficients");
    }
    JFraction<Rational> jf;
    jf.d0 = d[0];
    RationalSeries tail = d * d[0].inverse();
    for (std::size_t h = 0;; ++h) {
        const Rational p = tail[1];
        jf.p.push_back(p);
        if (h == depth) {
            break;
        }
        const auto rest = RationalSeries::from_polynomial({Rational(1), -p}, tail.order()) - invert(tail);
        const Rational q = rest[2];
        if (q.is_zero()) {
            throw Error(ErrorCode::SingularExpansion, "q(" + std::to_string(h) + ") vanishes");
        }
        jf.q.push_back(q);
        tail = shift_down(rest, 2) * q.inverse();
    }
    return jf;
}

MultiPoly iterate_hankel_det(const std::vector<Rational> &a, std::size_t k, std::size_t n, const std::string &var)
{
    if (n == 0) {
        return MultiPoly(1);
    }
    if (a.size() < k + 2 * n - 1) {
        throw Error(ErrorCode::InsufficientSequence, "need " + std::to_string(k + 2 * n - 1) + " terms");
    }
    if (a[0].is_zero()) {
        throw Error(ErrorCode::ZeroConstantTerm, "the degree bound is stated for a_0 != 0");
    }
    const auto ix = inverse_transform_iterate(RationalSeries(std::vector<Rational>(a.begin(), a.begin() + static_cast<long>(k + 2 * n - 1))), var);
    return hankel_det(ix.coeffs(), k, n);
}

long laymangen_degree_check(const std::vector<Rational> &a, std::size_t k, std::size_t n)
{
    return iterate_hankel_det(a, k, n, "x").degree_in("x");
}

MultiPoly mirror_hankel_det(std::size_t n)
{
    if (n == 0) {
        return MultiPoly(1);
    }
    const std::size_t terms = 2 * n - 1;
    const auto dl = dl_build(symbolic_series("s", terms), terms);
    const MultiPoly x = MultiPoly::variable("x");
    std::vector<MultiPoly> seq;
    seq.reserve(terms);
    for (std::size_t m = 1; m <= terms; ++m) {
        MultiPoly acc;
        MultiPoly xp(1);
        for (const auto &c : dl.Q(m)) {
            acc += c * xp;
            xp *= x;
        }
        seq.push_back(std::move(acc));
    }
    return hankel_det(seq, 0, n);
}

bool laymangen_s1_check(std::size_t n)
{
    return mirror_hankel_det(n).derivative("s1").is_zero();
}

} // namespace dlrev
