#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>
#include <boost/safe_numerics/safe_integer.hpp>

namespace triplet {

// Overflow-checked 64-bit integer. Any arithmetic overflow throws instead
// of wrapping, so every value the library reports is exact or absent.
using Int = boost::safe_numerics::safe<std::int64_t>;
using Rational = boost::rational<Int>;

inline std::int64_t to_i64(const Int& v) { return static_cast<std::int64_t>(v); }

inline std::int64_t num(const Rational& r) { return to_i64(r.numerator()); }
inline std::int64_t den(const Rational& r) { return to_i64(r.denominator()); }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

/// Largest integer n >= 0 with n*n <= r (r >= 0).
std::int64_t floor_sqrt(const Rational& r);

/// A rational upper bound for sqrt(r), tight to within 1/resolution.
Rational sqrt_upper(const Rational& r, std::int64_t resolution = 1024);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

/// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

}  // namespace triplet
