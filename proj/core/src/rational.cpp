#include "triplet/rational.hpp"

#include <stdexcept>

namespace triplet {

std::int64_t floor_of(const Rational& r) {
  const std::int64_t n = num(r);
  const std::int64_t d = den(r);
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

std::int64_t floor_sqrt(const Rational& r) {
  if (r < Rational(0)) throw std::domain_error("floor_sqrt of a negative rational");
  const std::int64_t target = floor_of(r);
  // floor(sqrt(r)) == floor(sqrt(floor(r))) for r >= 0.
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (hi <= target / hi) hi *= 2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid <= target / mid) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Rational sqrt_upper(const Rational& r, std::int64_t resolution) {
  const Rational scaled = r * Rational(Int(resolution) * Int(resolution));
  return Rational(Int(floor_sqrt(scaled) + 1), Int(resolution));
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return std::to_string(num(r));
  return std::to_string(num(r)) + "/" + std::to_string(den(r));
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const std::int64_t n = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("not a rational: " + text);
    return Rational(Int(n));
  }
  const std::string a = text.substr(0, slash);
  const std::string b = text.substr(slash + 1);
  const std::int64_t n = std::stoll(a, &used);
  if (used != a.size()) throw std::invalid_argument("not a rational: " + text);
  const std::int64_t d = std::stoll(b, &used);
  if (used != b.size() || d == 0) throw std::invalid_argument("not a rational: " + text);
  return Rational(Int(n), Int(d));
}

}  // namespace triplet
