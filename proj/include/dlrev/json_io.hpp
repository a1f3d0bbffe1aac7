#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <dlrev/multipoly.hpp>
#include <dlrev/series.hpp>
#include <dlrev/transforms.hpp>

namespace dlrev {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings ("5" when integral).
Json to_json(const Rational &r);
// Polynomials travel as lists of {"coeff": "...", "monomial": {"var": exp}}.
Json to_json(const MultiPoly &p);

template <typename R>
Json to_json(const std::vector<R> &v)
{
    Json out = Json::array();
    for (const auto &x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

template <typename R>
Json to_json(const TruncatedSeries<R> &s)
{
    return Json{{"order", s.order()}, {"coeffs", to_json(s.coeffs())}};
}

Json to_json(const JFraction<Rational> &jf);

// Accepts a JSON string or an integer.
Rational parse_rational(const Json &j);
std::vector<Rational> parse_rational_list(const Json &j);
// {"order": N, "coeffs": [...]}; fewer coefficients than the order are
// zero-padded, more are rejected.
RationalSeries parse_series(const Json &j);
JFraction<Rational> parse_jfraction(const Json &j);

// Parses text as JSON, reporting failures as ParseError.
Json parse_json_text(const std::string &text);

} // namespace dlrev
