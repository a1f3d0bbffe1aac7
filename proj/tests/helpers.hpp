#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include <dlrev/error.hpp>
#include <dlrev/multipoly.hpp>
#include <dlrev/rational.hpp>
#include <dlrev/series.hpp>

namespace testing {

using dlrev::MultiPoly;
using dlrev::Rational;
using dlrev::RationalSeries;

inline Rational random_rational(std::mt19937 &rng, long span = 9, long max_den = 6)
{
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(std::mt19937 &rng)
{
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) {
            return r;
        }
    }
}

inline std::vector<Rational> random_vector(std::mt19937 &rng, std::size_t n)
{
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(random_rational(rng));
    }
    return v;
}

inline RationalSeries random_series(std::mt19937 &rng, std::size_t order) { return RationalSeries(random_vector(rng, order)); }

// Random polynomial in the given variables with a handful of small terms.
inline MultiPoly random_poly(std::mt19937 &rng, const std::vector<std::string> &vars, int terms = 4, unsigned max_exp = 2)
{
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        std::map<std::string, std::uint32_t> powers;
        for (const auto &v : vars) {
            powers[v] = exp(rng);
        }
        p += MultiPoly::monomial(random_rational(rng), powers);
    }
    return p;
}

// Runs f and reports the ErrorCode it threw, failing if it did not throw.
template <typename F>
dlrev::ErrorCode code_of(F &&f)
{
    try {
        f();
    } catch (const dlrev::Error &e) {
        return e.code();
    }
    FAIL("expected a dlrev::Error");
    return dlrev::ErrorCode::ValidationError;
}

} // namespace testing
