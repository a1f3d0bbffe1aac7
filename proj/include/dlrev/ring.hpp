#pragma once

#include <string>

#include <dlrev/error.hpp>
#include <dlrev/multipoly.hpp>
#include <dlrev/rational.hpp>

// Uniform vocabulary over the two coefficient rings used throughout the
// library: the field Rational and the polynomial ring MultiPoly. Generic
// series and matrix code is written against these overloads only.
namespace dlrev {

inline bool is_zero(const Rational &a) { return a.is_zero(); }
inline bool is_zero(const MultiPoly &a) { return a.is_zero(); }

inline bool is_unit(const Rational &a) { return !a.is_zero(); }
inline bool is_unit(const MultiPoly &a) { return a.is_constant() && !a.is_zero(); }

inline Rational unit_inverse(const Rational &a)
{
    if (a.is_zero()) {
        throw Error(ErrorCode::NonInvertibleConstantTerm, "zero is not invertible");
    }
    return a.inverse();
}

inline MultiPoly unit_inverse(const MultiPoly &a)
{
    if (!is_unit(a)) {
        throw Error(ErrorCode::NonInvertibleConstantTerm, "'" + a.to_string() + "' is not a unit");
    }
    return MultiPoly(a.constant_term().inverse());
}

inline Rational exact_div(const Rational &a, const Rational &b) { return a / b; }

inline MultiPoly to_poly(const Rational &a) { return MultiPoly(a); }
inline const MultiPoly &to_poly(const MultiPoly &a) { return a; }

inline std::string to_string(const Rational &a) { return a.to_string(); }
inline std::string to_string(const MultiPoly &a) { return a.to_string(); }

} // namespace dlrev
