#pragma once

#include <vector>

#include "triplet/rootsys.hpp"
#include "triplet/weyl.hpp"

namespace triplet {

/// Root system plus the integer p >= 2 fixing the rescaled lattice sqrt(p) Q.
///
/// Q0 = sqrt(p) - 1/sqrt(p) is never evaluated; only Q0^2 = (p-1)^2/p and the
/// combination Q0 (mu, rho) = (1 - 1/p)(sqrt(p) mu, rho) are used.
class ModelParams {
 public:
  ModelParams(RootSystem rs, int p);

  const RootSystem& rs() const noexcept { return rs_; }
  int p() const noexcept { return p_; }
  int rank() const noexcept { return rs_.rank(); }
  int h() const noexcept { return rs_.coxeter_number(); }
  const WeylElement& w0() const noexcept { return w0_; }

  Rational q0_squared() const { return Rational(Int(p_ - 1) * Int(p_ - 1), Int(p_)); }
  /// l - 12 |Q0 rho|^2
  Rational central_charge() const;
  /// l - Q0^2 h dim g
  Rational central_charge_from_dimension() const;
  Rational k() const { return Rational(p_ - h()); }
  Rational k_dual() const { return Rational(Int(1), Int(p_)) - Rational(h()); }

 private:
  RootSystem rs_;
  int p_;
  WeylElement w0_;
};

/// mu = x / sqrt(p) in (1/sqrt(p)) P, stored through the integral weight x = sqrt(p) mu.
struct ScaledWeight {
  IntWeight x;
  int p = 2;

  friend ScaledWeight operator+(const ScaledWeight& a, const ScaledWeight& b);
  friend ScaledWeight operator-(const ScaledWeight& a, const ScaledWeight& b);
  friend bool operator==(const ScaledWeight&, const ScaledWeight&) = default;
};

/// Digits 0 <= s_i <= p-1 of sqrt(p) lambda_p = sum_i s_i omega_i.
using Digits = std::vector<int>;

/// lambda = -sqrt(p) lambda0 + lambda_p with lambda0 in Lambda0.
struct LambdaParam {
  IntWeight lambda0;
  Digits sp;
  int p = 2;

  IntWeight sp_weight() const;
  /// x = sqrt(p) lambda = -p lambda0 + sum s_i omega_i
  ScaledWeight scaled() const;

  friend bool operator==(const LambdaParam&, const LambdaParam&) = default;
};

std::string to_string(const Digits& sp);

/// Zero plus every minuscule fundamental weight, in index order.
std::vector<IntWeight> lambda0_set(const RootSystem& rs);
/// The member of lambda0_set congruent to w modulo Q.
IntWeight lambda0_representative(const RootSystem& rs, const IntWeight& w);

struct Decomposition {
  IntWeight mu0;  // in P
  Digits sp;      // digits of sqrt(p) mu_p
};

/// mu = -sqrt(p) mu0 + mu_p with mu_p in Lambda_p.
Decomposition decompose(const ScaledWeight& mu);

ScaledWeight star_act(const ModelParams& mp, const WeylElement& w, const ScaledWeight& mu);
/// (1/sqrt(p)) (w * lambda_p - (w * lambda_p)_p), an element of P.
IntWeight epsilon(const ModelParams& mp, const Digits& sp, const WeylElement& w);

/// (1/2)|mu|^2 - Q0 (mu, rho)
Rational conformal_weight(const ModelParams& mp, const ScaledWeight& mu);
/// (1/2)|mu - Q0 rho|^2 + (c - l)/24, the shifted-square form of the same quantity.
Rational conformal_weight_shifted_form(const ModelParams& mp, const ScaledWeight& mu);
/// (1/2)|mu - Q0 rho|^2
Rational half_norm_shifted(const ModelParams& mp, const ScaledWeight& mu);

/// (sqrt(p) lambda_p + rho, theta)
Int theta_level(const ModelParams& mp, const Digits& sp);
/// (sqrt(p) lambda_p + rho, theta) <= p
bool narrow(const ModelParams& mp, const Digits& sp);

/// For a reduced word of w0 (word[0] leftmost), checks that
/// (epsilon(s_{i_n} ... s_{i_1}), alpha_{i_{n+1}}) = 0 for 1 <= n < l(w0),
/// where i_1 is the rightmost letter. Throws if the word is not a reduced word of w0.
bool epsilon_chain_vanishes(const ModelParams& mp, const Digits& sp, const std::vector<int>& word);

/// The unique lambda in Lambda congruent to x modulo sqrt(p) Q.
LambdaParam canonical_lambda(const ModelParams& mp, const ScaledWeight& x);
/// Canonical representative of lambda' = -w0(lambda).
LambdaParam dual_param(const ModelParams& mp, const LambdaParam& lambda);
/// Canonical representative of w0 * lambda' (the parameter of the contragredient module).
LambdaParam dual_module_param(const ModelParams& mp, const LambdaParam& lambda);

/// All of Lambda: lambda0 in lambda0_set order, digits in lexicographic order.
std::vector<LambdaParam> enumerate_lambda(const ModelParams& mp);
/// |Lambda0| * p^l
Int lambda_count(const ModelParams& mp);

void validate(const ModelParams& mp, const LambdaParam& lambda);
void validate(const ModelParams& mp, const Digits& sp);

}  // namespace triplet
