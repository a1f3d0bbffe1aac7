#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dlrev {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class so that
// expression templates never leak into generic code.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    static Rational from_integer(const mpz_class &z) { return Rational(mpq_class(z)); }

    // Accepts "n", "-n", "n/d" with optional surrounding whitespace.
    // Non-reduced input such as "2/4" is normalized.
    static Rational parse(std::string_view text);

    std::string to_string() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class &raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational inverse() const;
    Rational pow(long exponent) const;

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class v_{0};
};

Rational binomial(long n, long k);
Rational factorial(long n);

} // namespace dlrev
