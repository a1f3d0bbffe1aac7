#include <dlrev/rational.hpp>

#include <cctype>

#include <dlrev/error.hpp>

namespace dlrev {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero, "zero denominator");
    }
    v_ = mpq_class(num, 1);
    v_ /= den;
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    auto num = s.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw Error(ErrorCode::MalformedRational, "cannot parse '" + std::string(text) + "'");
    }
    mpq_class v(parse_integer(num));
    if (slash != std::string_view::npos) {
        auto den = s.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
            throw Error(ErrorCode::MalformedRational, "cannot parse '" + std::string(text) + "'");
        }
        mpz_class d = parse_integer(den);
        if (d == 0) {
            throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
        }
        v /= mpq_class(d);
    }
    return Rational(std::move(v));
}

std::string Rational::to_string() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational::from_integer(r);
}

Rational factorial(long n)
{
    if (n < 0) {
        throw Error(ErrorCode::BadRange, "factorial of a negative number");
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational::from_integer(r);
}

} // namespace dlrev
