#include "triplet/qseries.hpp"

#include <algorithm>
#include <string>

namespace triplet {

OrderUnderflow::OrderUnderflow(int required, int available)
    : std::invalid_argument("q-series order too small: need order " + std::to_string(required) + ", have " +
                            std::to_string(available)),
      required_(required) {}

QSeries::QSeries(Rational base, std::vector<Int> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c != 0; });
  if (first == coeffs_.end() || first == coeffs_.begin()) return;
  const auto shift = first - coeffs_.begin();
  base_ += Rational(Int(static_cast<std::int64_t>(shift)));
  coeffs_.erase(coeffs_.begin(), first);
}

QSeries QSeries::zero(Rational base, int order) {
  if (order < 0) throw std::invalid_argument("negative q-series order");
  return QSeries(std::move(base), std::vector<Int>(static_cast<std::size_t>(order) + 1, Int(0)));
}

QSeries QSeries::monomial(Rational exponent, Int coeff, int order) {
  if (order < 0) throw std::invalid_argument("negative q-series order");
  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  c[0] = coeff;
  return QSeries(std::move(exponent), std::move(c));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

Int QSeries::coefficient_at(const Rational& exponent) const {
  if (exponent > top()) throw OrderUnderflow(order() + 1, order());
  const Rational d = exponent - base_;
  if (!is_integer(d)) {
    if (is_zero()) return 0;
    throw IncompatibleGrid("exponent " + to_string(exponent) + " is off the grid " + to_string(base_) + " + Z");
  }
  if (d < Rational(0)) return 0;
  return coeffs_[static_cast<std::size_t>(num(d))];
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order()) throw OrderUnderflow(order, this->order());
  if (order < 0) throw std::invalid_argument("negative q-series order");
  return QSeries(base_, std::vector<Int>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

namespace {

void check_grid(const QSeries& a, const QSeries& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!is_integer(a.base() - b.base()))
    throw IncompatibleGrid("q-series bases " + to_string(a.base()) + " and " + to_string(b.base()) +
                           " differ by a non-integer");
}

// Everything up to `top` is zero.
QSeries zero_through(const Rational& top) { return QSeries::zero(top, 0); }

}  // namespace

QSeries qs_add(const QSeries& a, const QSeries& b) {
  check_grid(a, b);
  const Rational top = std::min(a.top(), b.top());
  if (a.is_zero() && b.is_zero()) return zero_through(top);
  if (a.is_zero() || b.is_zero()) {
    const QSeries& x = a.is_zero() ? b : a;
    if (top < x.base()) return zero_through(top);
    return x.truncated(static_cast<int>(floor_of(top - x.base())));
  }
  const Rational base = std::min(a.base(), b.base());
  if (top < base) return zero_through(top);
  const auto order = static_cast<int>(floor_of(top - base));
  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  for (int n = 0; n <= order; ++n) {
    const Rational e = base + Rational(n);
    c[static_cast<std::size_t>(n)] = a.coefficient_at(e) + b.coefficient_at(e);
  }
  return QSeries(base, std::move(c));
}

QSeries qs_scale(const QSeries& a, Int m) {
  if (m == 0) return zero_through(a.top());
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x *= m;
  return QSeries(a.base(), std::move(c));
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_scale(b, -1)); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  const Rational base = a.base() + b.base();
  if (a.is_zero() || b.is_zero()) return zero_through(base + Rational(order));
  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs()[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j)
      c[static_cast<std::size_t>(i + j)] += a.coeffs()[static_cast<std::size_t>(i)] * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return QSeries(base, std::move(c));
}

bool qs_eq(const QSeries& a, const QSeries& b, int order) {
  check_grid(a, b);
  const Rational low = std::min(a.base(), b.base());
  const Rational top = std::min(a.top(), b.top());
  if (top < low + Rational(order)) {
    const int available = top < low ? -1 : static_cast<int>(floor_of(top - low));
    throw OrderUnderflow(order, available);
  }
  for (int n = 0; n <= order; ++n) {
    const Rational e = low + Rational(n);
    if (a.coefficient_at(e) != b.coefficient_at(e)) return false;
  }
  return true;
}

bool qs_leq(const QSeries& a, const QSeries& b, const Rational& up_to) {
  check_grid(a, b);
  if (a.top() < up_to || b.top() < up_to) {
    const Rational top = std::min(a.top(), b.top());
    const Rational low = std::min(a.base(), b.base());
    throw OrderUnderflow(static_cast<int>(ceil_of(up_to - low)),
                         top < low ? -1 : static_cast<int>(floor_of(top - low)));
  }
  const QSeries& grid = a.is_zero() ? b : a;
  const Rational low = std::min(a.base(), b.base());
  // first grid point at or above `low`
  Rational e = grid.base() - Rational(floor_of(grid.base() - low));
  for (; e <= up_to; e += Rational(1))
    if (a.coefficient_at(e) > b.coefficient_at(e)) return false;
  return true;
}

QSeries eta_inv_pow(int l, int order) {
  if (l < 1) throw std::invalid_argument("eta_inv_pow needs l >= 1");
  if (order < 0) throw std::invalid_argument("negative q-series order");
  const auto n_max = static_cast<std::size_t>(order);
  std::vector<Int> c(n_max + 1, Int(0));
  c[0] = 1;
  // multiply by 1/(1 - q^n), l times for each n
  for (std::size_t n = 1; n <= n_max; ++n)
    for (int rep = 0; rep < l; ++rep)
      for (std::size_t k = n; k <= n_max; ++k) c[k] += c[k - n];
  return QSeries(Rational(Int(-l), Int(24)), std::move(c));
}

void add_term(MonomialSum& terms, const Rational& exponent, Int coeff) {
  terms.try_emplace(exponent, Int(0)).first->second += coeff;
}

QSeries monomials_over_eta(const MonomialSum& terms, const Rational& complete_to, int l, int order) {
  const Rational eta_base(Int(-l), Int(24));
  const auto lowest = std::find_if(terms.begin(), terms.end(), [](const auto& t) { return t.second != 0; });
  if (lowest == terms.end()) return QSeries::zero(complete_to + eta_base, 0);
  const Rational low = lowest->first;
  if (low + Rational(order) > complete_to)
    throw std::logic_error("monomials_over_eta: terms are not complete to the requested order");
  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  for (auto it = lowest; it != terms.end(); ++it) {
    if (it->first > low + Rational(order)) break;
    const Rational d = it->first - low;
    if (!is_integer(d))
      throw IncompatibleGrid("monomial exponents " + to_string(low) + " and " + to_string(it->first) +
                             " differ by a non-integer");
    c[static_cast<std::size_t>(num(d))] += it->second;
  }
  return qs_mul(QSeries(low, std::move(c)), eta_inv_pow(l, order));
}

}  // namespace triplet
