#include <dlrev/reversion.hpp>

namespace dlrev {

bool exp_identity_check(long n, long k)
{
    if (!(n > k && k > 1)) {
        throw Error(ErrorCode::BadRange, "need n > k > 1");
    }
    const Rational lhs = Rational((k + 1) * (n - k)) * Rational(n).pow(n - 2 - k);
    Rational sum;
    for (long m = k; m <= n - 1; ++m) {
        sum += binomial(n - k, n - m) * Rational(m).pow(m - 1 - k) * Rational(n - m).pow(n - m - 1);
    }
    return lhs == Rational(k) * sum;
}

std::string letter(const std::string &prefix, std::size_t index)
{
    return prefix + std::to_string(index);
}

PolySeries symbolic_series(const std::string &prefix, std::size_t order)
{
    std::vector<MultiPoly> c;
    c.reserve(order);
    for (std::size_t j = 0; j < order; ++j) {
        c.push_back(MultiPoly::variable(letter(prefix, j)));
    }
    return PolySeries(std::move(c));
}

} // namespace dlrev
