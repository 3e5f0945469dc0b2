#pragma once

#include <string>

#include "triplet/params.hpp"
#include "triplet/weyl.hpp"

namespace triplet {

/// mu = classical + level * Lambda_0 + delta * delta.
struct AffineWeight {
  Weight classical;
  Rational level{0};
  Rational delta{0};

  friend AffineWeight operator+(const AffineWeight& a, const AffineWeight& b);
  friend AffineWeight operator-(const AffineWeight& a, const AffineWeight& b);
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

AffineWeight make_affine(const IntWeight& classical, const Rational& level, const Rational& delta = Rational(0));

/// The element sigma t_beta of W x Q (beta stored in the weight basis, validated to lie in Q).
class AffineWeylElement {
 public:
  AffineWeylElement(const RootSystem& rs, WeylElement sigma, IntWeight beta);

  const WeylElement& sigma() const noexcept { return sigma_; }
  const IntWeight& beta() const noexcept { return beta_; }

  /// t_gamma w, rewritten as w t_{w^{-1} gamma}.
  static AffineWeylElement translation_first(const RootSystem& rs, const IntWeight& gamma, const WeylElement& w);

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.sigma_ == b.sigma_ && a.beta_ == b.beta_;
  }

 private:
  WeylElement sigma_;
  IntWeight beta_;
};

/// (s t_b)(s' t_b') = (s s') t_{s'^{-1} b + b'}
AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& a, const AffineWeylElement& b);

/// sigma t_beta (mu) = sigma(mu_bar + K beta) + K Lambda_0 + ((mu, Lambda_0 - beta) - |beta|^2 K / 2) delta
AffineWeight aff_act(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& mu);
/// y(mu + rho + h Lambda_0) - (rho + h Lambda_0)
AffineWeight aff_circ(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& mu);

/// 0 <= (sigma^{-1}(gamma), p(beta - (alpha + lambda0 + rho)) + sqrt(p) lambda_p + rho) <= p
/// for every positive root gamma.
bool alcove_condition(const ModelParams& mp, const WeylElement& sigma, const IntWeight& beta, const IntWeight& alpha,
                      const LambdaParam& lambda);

/// Membership of a level-k affine weight in the closed fundamental chamber of the dot
/// action, decided directly from the real positive affine roots (only n = 1 can bind).
bool in_dominant_chamber(const RootSystem& rs, const AffineWeight& mu);

/// omega: the Lambda0 representative of lambda0 + rho; sigma: the Weyl element with
/// sigma^{-1}(positive roots) = {g > 0 : (g, omega) = 0} u {-g : g > 0, (g, omega) = 1};
/// beta = alpha + lambda0 + rho - omega in Q.
struct ChamberPair {
  IntWeight omega;
  WeylElement sigma;
  IntWeight beta;
};

ChamberPair chamber_pair(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha,
                         const IntWeight& lambda0);

/// t_{omega - (alpha + lambda0 + rho)} sigma^{-1}
AffineWeylElement y_alpha(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha,
                          const IntWeight& lambda0);
/// t_{sigma(omega) - (alpha + lambda0 + rho)} sigma sigma_{lambda0}^{-1}
AffineWeylElement y_sigma(const ModelParams& mp, const ChamberPair& pair, const WeylElement& sigma,
                          const IntWeight& alpha, const IntWeight& lambda0);
AffineWeylElement y_sigma(const ModelParams& mp, const WeylGroup& group, const WeylElement& sigma,
                          const IntWeight& alpha, const IntWeight& lambda0);

/// sigma_{lambda0}(-p omega + sqrt(p) lambda_p + rho) - rho + k Lambda_0.
/// The pair must come from chamber_pair for lambda.lambda0 (omega and sigma do not depend on alpha).
AffineWeight mu_lambda(const ModelParams& mp, const ChamberPair& pair, const LambdaParam& lambda);
AffineWeight mu_lambda(const ModelParams& mp, const WeylGroup& group, const LambdaParam& lambda);

/// (1/2p) |classical(y_sigma o mu_lambda) + rho|^2; requires the narrow condition.
Rational affine_exponent(const ModelParams& mp, const ChamberPair& pair, const WeylElement& sigma,
                         const IntWeight& alpha, const LambdaParam& lambda);
Rational affine_exponent(const ModelParams& mp, const WeylGroup& group, const WeylElement& sigma,
                         const IntWeight& alpha, const LambdaParam& lambda);

/// (1/2) |sqrt(p) sigma(alpha + lambda0 + rho) - lambda_p - rho / sqrt(p)|^2
Rational direct_exponent(const ModelParams& mp, const WeylElement& sigma, const IntWeight& alpha,
                         const LambdaParam& lambda);

/// Thrown when an operation that needs the narrow condition receives a non-narrow lambda.
class NotNarrow : public std::invalid_argument {
 public:
  NotNarrow(const ModelParams& mp, const Digits& sp);
};

/// Checks alpha in P_+ cap Q.
void validate_alpha(const RootSystem& rs, const IntWeight& alpha);

}  // namespace triplet
