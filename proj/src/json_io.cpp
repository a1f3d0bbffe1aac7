#include <dlrev/json_io.hpp>

namespace dlrev {

Json to_json(const Rational &r) { return r.to_string(); }

Json to_json(const MultiPoly &p)
{
    Json out = Json::array();
    const auto &vars = p.variables();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json mono = Json::object();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (it->first[i] != 0) {
                mono[vars[i]] = it->first[i];
            }
        }
        out.push_back(Json{{"coeff", it->second.to_string()}, {"monomial", mono}});
    }
    return out;
}

Json to_json(const JFraction<Rational> &jf)
{
    return Json{{"d0", to_json(jf.d0)}, {"p", to_json(jf.p)}, {"q", to_json(jf.q)}};
}

Rational parse_rational(const Json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw Error(ErrorCode::MalformedRational, "expected a rational string, got " + j.dump());
}

std::vector<Rational> parse_rational_list(const Json &j)
{
    if (!j.is_array()) {
        throw Error(ErrorCode::ParseError, "expected a JSON array of rationals");
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto &x : j) {
        out.push_back(parse_rational(x));
    }
    return out;
}

RationalSeries parse_series(const Json &j)
{
    if (j.is_array()) {
        return parse_series(Json{{"coeffs", j}});
    }
    if (!j.is_object() || !j.contains("coeffs")) {
        throw Error(ErrorCode::ParseError, "series must be an array or an object with \"coeffs\"");
    }
    auto coeffs = parse_rational_list(j.at("coeffs"));
    std::size_t order = coeffs.size();
    if (j.contains("order")) {
        if (!j.at("order").is_number_unsigned()) {
            throw Error(ErrorCode::ParseError, "\"order\" must be a nonnegative integer");
        }
        order = j.at("order").get<std::size_t>();
        if (coeffs.size() > order) {
            throw Error(ErrorCode::ValidationError, "more coefficients than the stated order");
        }
    }
    if (order == 0) {
        throw Error(ErrorCode::EmptyCoefficients, "a series needs at least one coefficient");
    }
    coeffs.resize(order, Rational(0));
    return RationalSeries(std::move(coeffs));
}

JFraction<Rational> parse_jfraction(const Json &j)
{
    if (!j.is_object() || !j.contains("d0") || !j.contains("p") || !j.contains("q")) {
        throw Error(ErrorCode::ParseError, "J-fraction must be {\"d0\", \"p\", \"q\"}");
    }
    JFraction<Rational> jf{parse_rational(j.at("d0")), parse_rational_list(j.at("p")),
                           parse_rational_list(j.at("q"))};
    if (jf.p.empty() || jf.q.size() + 1 != jf.p.size()) {
        throw Error(ErrorCode::ValidationError, "J-fraction needs m+1 values of p and m values of q");
    }
    return jf;
}

Json parse_json_text(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

} // namespace dlrev
