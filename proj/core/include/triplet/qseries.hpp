#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "triplet/rational.hpp"

namespace triplet {

/// Operands whose exponents do not differ by integers.
class IncompatibleGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A comparison asked for more terms than an operand carries.
class OrderUnderflow : public std::invalid_argument {
 public:
  OrderUnderflow(int required, int available);
  int required() const noexcept { return required_; }

 private:
  int required_;
};

/// sum_{n=0}^{order} coeffs[n] q^{base + n} + O(q^{base + order + 1}).
///
/// Nonzero series are normalized so that coeffs[0] != 0. A zero series records
/// only how far it is known to vanish.
class QSeries {
 public:
  QSeries() : base_(0), coeffs_(1, Int(0)) {}
  QSeries(Rational base, std::vector<Int> coeffs);

  static QSeries zero(Rational base, int order);
  static QSeries monomial(Rational exponent, Int coeff, int order);

  const Rational& base() const noexcept { return base_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Highest exponent whose coefficient is known.
  Rational top() const { return base_ + Rational(order()); }
  bool is_zero() const;
  Int leading() const { return coeffs_.front(); }

  /// Coefficient of q^exponent; zero below the base. Throws past top() or off the grid.
  Int coefficient_at(const Rational& exponent) const;

  /// Drops terms beyond the given order.
  QSeries truncated(int order) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Rational base_;
  std::vector<Int> coeffs_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, Int m);
/// Equality of the first `order` + 1 coefficients counted from the lower base.
bool qs_eq(const QSeries& a, const QSeries& b, int order);
/// Coefficientwise a <= b for every exponent up to `up_to` (inclusive).
bool qs_leq(const QSeries& a, const QSeries& b, const Rational& up_to);

/// eta(q)^{-l} = q^{-l/24} sum_n p_l(n) q^n, to the given order.
QSeries eta_inv_pow(int l, int order);

/// Signed monomials sum_e c_e q^e collected before multiplying by eta^{-l}.
using MonomialSum = std::map<Rational, Int>;
/// terms[exponent] += coeff, starting from zero (Int does not zero-initialize).
void add_term(MonomialSum& terms, const Rational& exponent, Int coeff);

/// (sum_e c_e q^e) * eta^{-l}, to `order` terms above the lowest surviving monomial.
/// The caller guarantees that monomials are complete up to `complete_to`.
QSeries monomials_over_eta(const MonomialSum& terms, const Rational& complete_to, int l, int order);

}  // namespace triplet
