#include "triplet/affine.hpp"

#include <set>

namespace triplet {

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
  return {a.classical + b.classical, a.level + b.level, a.delta + b.delta};
}

AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
  return {a.classical - b.classical, a.level - b.level, a.delta - b.delta};
}

AffineWeight make_affine(const IntWeight& classical, const Rational& level, const Rational& delta) {
  return {to_rational(classical), level, delta};
}

AffineWeylElement::AffineWeylElement(const RootSystem& rs, WeylElement sigma, IntWeight beta)
    : sigma_(std::move(sigma)), beta_(std::move(beta)) {
  rs.check_rank(beta_.rank());
  if (sigma_.rank() != rs.rank()) throw std::invalid_argument("affine Weyl element: rank mismatch");
  if (!rs.in_Q(beta_)) throw std::invalid_argument("translation part " + to_string(beta_) + " is not in the root lattice");
}

AffineWeylElement AffineWeylElement::translation_first(const RootSystem& rs, const IntWeight& gamma,
                                                       const WeylElement& w) {
  return AffineWeylElement(rs, w, inverse(rs, w).act(gamma));
}

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& a, const AffineWeylElement& b) {
  const WeylElement s = multiply(rs, a.sigma(), b.sigma());
  return AffineWeylElement(rs, s, inverse(rs, b.sigma()).act(a.beta()) + b.beta());
}

AffineWeight aff_act(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& mu) {
  rs.check_rank(mu.classical.rank());
  const Weight beta = to_rational(y.beta());
  AffineWeight out;
  out.classical = y.sigma().act(mu.classical + scale(mu.level, beta));
  out.level = mu.level;
  out.delta = mu.delta - rs.pairing(mu.classical, beta) - rs.norm2(beta) * mu.level / Rational(2);
  return out;
}

AffineWeight aff_circ(const RootSystem& rs, const AffineWeylElement& y, const AffineWeight& mu) {
  const AffineWeight shift = make_affine(rs.rho(), Rational(rs.coxeter_number()));
  return aff_act(rs, y, mu + shift) - shift;
}

void validate_alpha(const RootSystem& rs, const IntWeight& alpha) {
  rs.check_rank(alpha.rank());
  if (!rs.is_dominant(alpha) || !rs.in_Q(alpha))
    throw std::invalid_argument("alpha " + to_string(alpha) + " is not a dominant element of the root lattice");
}

NotNarrow::NotNarrow(const ModelParams& mp, const Digits& sp)
    : std::invalid_argument("lambda_p with digits " + to_string(sp) + " is not narrow: (sqrt(p) lambda_p + rho, theta) = " +
                            std::to_string(to_i64(theta_level(mp, sp))) + " > p = " + std::to_string(mp.p())) {}

bool alcove_condition(const ModelParams& mp, const WeylElement& sigma, const IntWeight& beta, const IntWeight& alpha,
                      const LambdaParam& lambda) {
  const auto& rs = mp.rs();
  const Int p = mp.p();
  const IntWeight a = alpha + lambda.lambda0 + rs.rho();
  const IntWeight v = scale(p, beta - a) + lambda.sp_weight() + rs.rho();
  // (sigma^{-1} g, v) = (g, sigma v)
  const IntWeight moved = sigma.act(v);
  for (const auto& g : rs.positive_roots()) {
    const Int value = RootSystem::pair_with_root(moved, g);
    if (value < 0 || value > p) return false;
  }
  return true;
}

bool in_dominant_chamber(const RootSystem& rs, const AffineWeight& mu) {
  const Weight v = mu.classical + to_rational(rs.rho());
  const Rational level = mu.level + Rational(rs.coxeter_number());
  // gamma + n delta pairs to (gamma, v) + n * level; unbounded n forces level >= 0.
  if (level < Rational(0)) return false;
  for (const auto& g : rs.positive_roots()) {
    const Rational value = RootSystem::pair_with_root(v, g);
    if (value < Rational(0) || value > level) return false;
  }
  return true;
}

ChamberPair chamber_pair(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha,
                         const IntWeight& lambda0) {
  const auto& rs = mp.rs();
  validate_alpha(rs, alpha);
  const IntWeight omega = lambda0_representative(rs, lambda0 + rs.rho());

  std::set<std::vector<Int>> target;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const Int pairing = RootSystem::pair_with_root(omega, rs.positive_roots()[k]);
    const IntWeight& g = rs.positive_root_weights()[k];
    if (pairing == 0) {
      target.insert(g.coords());
    } else if (pairing == 1) {
      target.insert((-g).coords());
    }
  }

  const WeylElement* found = nullptr;
  for (const auto& w : group.elements()) {
    // w plays the role of sigma^{-1}
    bool ok = true;
    for (const auto& g : rs.positive_root_weights()) {
      if (!target.count(w.act(g).coords())) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (found) throw std::logic_error("chamber_pair: Weyl element is not unique");
    found = &w;
  }
  if (!found) throw std::logic_error("chamber_pair: no Weyl element matches the root partition");

  const IntWeight beta = alpha + lambda0 + rs.rho() - omega;
  if (!rs.in_Q(beta)) throw std::logic_error("chamber_pair: beta is not in the root lattice");
  return {omega, inverse(rs, *found), beta};
}

AffineWeylElement y_alpha(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha,
                          const IntWeight& lambda0) {
  const auto& rs = mp.rs();
  const ChamberPair cp = chamber_pair(mp, group, alpha, lambda0);
  return AffineWeylElement::translation_first(rs, cp.omega - (alpha + lambda0 + rs.rho()), inverse(rs, cp.sigma));
}

AffineWeylElement y_sigma(const ModelParams& mp, const ChamberPair& pair, const WeylElement& sigma,
                          const IntWeight& alpha, const IntWeight& lambda0) {
  const auto& rs = mp.rs();
  const IntWeight gamma = sigma.act(pair.omega) - (alpha + lambda0 + rs.rho());
  return AffineWeylElement::translation_first(rs, gamma, multiply(rs, sigma, inverse(rs, pair.sigma)));
}

AffineWeylElement y_sigma(const ModelParams& mp, const WeylGroup& group, const WeylElement& sigma,
                          const IntWeight& alpha, const IntWeight& lambda0) {
  return y_sigma(mp, chamber_pair(mp, group, alpha, lambda0), sigma, alpha, lambda0);
}

AffineWeight mu_lambda(const ModelParams& mp, const ChamberPair& pair, const LambdaParam& lambda) {
  validate(mp, lambda);
  const auto& rs = mp.rs();
  const IntWeight inner = lambda.sp_weight() + rs.rho() - scale(Int(mp.p()), pair.omega);
  return make_affine(pair.sigma.act(inner) - rs.rho(), mp.k());
}

AffineWeight mu_lambda(const ModelParams& mp, const WeylGroup& group, const LambdaParam& lambda) {
  return mu_lambda(mp, chamber_pair(mp, group, mp.rs().zero(), lambda.lambda0), lambda);
}

Rational affine_exponent(const ModelParams& mp, const ChamberPair& pair, const WeylElement& sigma,
                         const IntWeight& alpha, const LambdaParam& lambda) {
  validate(mp, lambda);
  if (!narrow(mp, lambda.sp)) throw NotNarrow(mp, lambda.sp);
  const auto& rs = mp.rs();
  const AffineWeylElement y = y_sigma(mp, pair, sigma, alpha, lambda.lambda0);
  const AffineWeight moved = aff_circ(rs, y, mu_lambda(mp, pair, lambda));
  const Weight v = moved.classical + to_rational(rs.rho());
  return rs.norm2(v) / Rational(Int(2) * Int(mp.p()));
}

Rational affine_exponent(const ModelParams& mp, const WeylGroup& group, const WeylElement& sigma,
                         const IntWeight& alpha, const LambdaParam& lambda) {
  return affine_exponent(mp, chamber_pair(mp, group, alpha, lambda.lambda0), sigma, alpha, lambda);
}

Rational direct_exponent(const ModelParams& mp, const WeylElement& sigma, const IntWeight& alpha,
                         const LambdaParam& lambda) {
  const auto& rs = mp.rs();
  const IntWeight a = alpha + lambda.lambda0 + rs.rho();
  // sqrt(p) times the vector inside the norm
  const IntWeight v = scale(Int(mp.p()), sigma.act(a)) - lambda.sp_weight() - rs.rho();
  return rs.norm2(v) / Rational(Int(2) * Int(mp.p()));
}

}  // namespace triplet
