#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triplet/rational.hpp"

namespace triplet {

enum class Family { A, D, E };

/// A simply-laced Cartan type: A_l (l >= 1), D_l (l >= 4), E_6, E_7, E_8.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses names such as "A2", "d4", "E8". Throws std::invalid_argument.
  static CartanType parse(std::string_view text);

  void validate() const;
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Coordinates in the fundamental-weight basis: coords[i] is the coefficient of omega_{i+1}.
template <class T>
class BasicWeight {
 public:
  BasicWeight() = default;
  explicit BasicWeight(std::size_t rank) : coords_(rank, T(0)) {}
  explicit BasicWeight(std::vector<T> coords) : coords_(std::move(coords)) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<T>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != T(0)) return false;
    return true;
  }

  BasicWeight& operator+=(const BasicWeight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  BasicWeight& operator-=(const BasicWeight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  BasicWeight& operator*=(const T& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend BasicWeight operator+(BasicWeight a, const BasicWeight& b) { return a += b; }
  friend BasicWeight operator-(BasicWeight a, const BasicWeight& b) { return a -= b; }
  friend BasicWeight operator-(BasicWeight a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend bool operator==(const BasicWeight& a, const BasicWeight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const BasicWeight& a, const BasicWeight& b) { return a.coords_ < b.coords_; }

 private:
  void check_rank(const BasicWeight& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  }

  std::vector<T> coords_;
};

/// s * w. A named function because the safe-integer operator templates claim Int * w.
template <class T>
BasicWeight<T> scale(const T& s, BasicWeight<T> w) {
  return w *= s;
}

/// An element of the weight lattice P.
using IntWeight = BasicWeight<Int>;
/// An element of P tensor Q (rational coordinates).
using Weight = BasicWeight<Rational>;

IntWeight make_weight(std::initializer_list<std::int64_t> coords);
Weight to_rational(const IntWeight& w);
/// Returns the integral weight when every coordinate is an integer.
std::optional<IntWeight> to_integral(const Weight& w);

std::string to_string(const IntWeight& w);
std::string to_string(const Weight& w);

/// Root coordinates: coefficients in the simple-root basis.
using RootCoords = std::vector<Int>;

/// Cartan data for one simply-laced type, with exact rational pairings.
/// Numbering of simple roots follows Bourbaki.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  std::string name() const { return type_.name(); }

  Int cartan(int i, int j) const { return cartan_[idx(i, j)]; }
  const Rational& inv_cartan(int i, int j) const { return inv_cartan_[idx(i, j)]; }
  /// det of the Cartan matrix, i.e. |P/Q|.
  Int det() const noexcept { return det_; }

  /// Positive roots in the simple-root basis, ordered by height then lexicographically.
  const std::vector<RootCoords>& positive_roots() const noexcept { return positive_roots_; }
  /// The same roots in the fundamental-weight basis.
  const std::vector<IntWeight>& positive_root_weights() const noexcept { return positive_root_weights_; }

  const IntWeight& rho() const noexcept { return rho_; }
  const IntWeight& theta() const noexcept { return theta_; }
  const RootCoords& theta_root() const noexcept { return positive_roots_.back(); }

  int coxeter_number() const noexcept { return coxeter_h_; }
  int dim_g() const noexcept { return rank() + 2 * static_cast<int>(positive_roots_.size()); }
  /// Exponents read off the height distribution of the positive roots.
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  /// Product of the degrees (exponent + 1).
  Int weyl_order() const noexcept { return weyl_order_; }

  IntWeight simple_root(int i) const;
  IntWeight fundamental(int i) const;
  IntWeight zero() const { return IntWeight(static_cast<std::size_t>(rank())); }
  IntWeight from_root_coords(const RootCoords& n) const;
  /// Simple-root coordinates of a weight (rational in general).
  std::vector<Rational> to_root_coords(const Weight& w) const;
  std::vector<Rational> to_root_coords(const IntWeight& w) const;
  std::optional<RootCoords> root_coords_if_in_Q(const IntWeight& w) const;
  bool in_Q(const IntWeight& w) const;
  /// det * (simple-root coordinates of w), reduced mod det. Two weights share a P/Q class
  /// exactly when their residues agree.
  std::vector<Int> class_residue(const IntWeight& w) const;

  /// One dominant representative per P/Q class: zero, then each minuscule fundamental
  /// weight (coefficient 1 in theta) in index order, paired with its class residue.
  struct ClassRep {
    IntWeight weight;
    std::vector<Int> residue;
  };
  const std::vector<ClassRep>& class_reps() const noexcept { return class_reps_; }
  bool in_Q(const Weight& w) const;

  Rational pairing(const IntWeight& a, const IntWeight& b) const;
  Rational pairing(const Weight& a, const Weight& b) const;
  Rational norm2(const IntWeight& a) const { return pairing(a, a); }
  Rational norm2(const Weight& a) const { return pairing(a, a); }
  /// (w, gamma) for a root given in simple-root coordinates: sum_i n_i w_i.
  static Int pair_with_root(const IntWeight& w, const RootCoords& gamma);
  static Rational pair_with_root(const Weight& w, const RootCoords& gamma);

  /// s_i(w) = w - w_i alpha_i.
  IntWeight reflect(int i, const IntWeight& w) const;

  bool is_dominant(const IntWeight& w) const;

  void check_rank(std::size_t r) const {
    if (static_cast<int>(r) != rank()) throw std::invalid_argument("weight rank does not match " + name());
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * rank() + j); }

  CartanType type_;
  std::vector<Int> cartan_;
  std::vector<Rational> inv_cartan_;
  std::vector<Int> adj_;  // det * inverse Cartan, integral
  Int det_{1};
  std::vector<RootCoords> positive_roots_;
  std::vector<IntWeight> positive_root_weights_;
  IntWeight rho_;
  IntWeight theta_;
  int coxeter_h_ = 0;
  std::vector<int> exponents_;
  Int weyl_order_{1};
  std::vector<ClassRep> class_reps_;
};

/// Weyl dimension formula. beta must be dominant integral.
Int weyl_dim(const RootSystem& rs, const IntWeight& beta);

/// A norm bound of the form |v| <= constant + rho_multiple * |rho|, compared exactly.
struct NormBound {
  Rational constant{0};
  Rational rho_multiple{0};

  static NormBound of(Rational r) { return {r, Rational(0)}; }
  static NormBound rho_plus(Rational r) { return {r, Rational(1)}; }

  bool admits(const RootSystem& rs, const Rational& norm2) const;
  /// A rational upper bound on the square of the bound.
  Rational squared_upper(const RootSystem& rs) const;
};

/// All alpha in P_+ cap Q with |alpha + rho| within the bound, sorted by |alpha|^2 then coordinates.
std::vector<IntWeight> enum_dominant_in_Q(const RootSystem& rs, const Rational& bound);
std::vector<IntWeight> enum_dominant_in_Q(const RootSystem& rs, const NormBound& bound);

/// Dominant weights a (not necessarily in Q) with |a + shift|^2 <= radius2,
/// where shift is dominant. Visits in depth-first coordinate order.
void for_each_dominant_in_ball(const RootSystem& rs, const IntWeight& shift, const Rational& radius2,
                               const std::function<void(const IntWeight&)>& visit);

/// Every beta in Q with |beta - center|^2 <= radius2, exact.
void for_each_root_lattice_point(const RootSystem& rs, const Weight& center, const Rational& radius2,
                                 const std::function<void(const IntWeight&)>& visit);

}  // namespace triplet
