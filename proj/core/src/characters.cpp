#include "triplet/characters.hpp"

#include <functional>

namespace triplet {

namespace {

QSeries finite_over_eta(const MonomialSum& terms, int l, int order) {
  Rational complete_to(0);
  for (const auto& [e, c] : terms)
    if (c != 0) complete_to = e + Rational(order);
  if (complete_to == Rational(0)) complete_to = Rational(order);
  return monomials_over_eta(terms, complete_to, l, order);
}

bool all_cancel(const MonomialSum& terms) {
  for (const auto& [e, c] : terms)
    if (c != 0) return false;
  return true;
}

// Sums over infinite lattices. collect(E) must return every monomial with
// exponent <= E; E grows until the lowest surviving monomial plus `order` is covered.
QSeries infinite_over_eta(const std::function<MonomialSum(const Rational&)>& collect, const Rational& guess, int l,
                          int order) {
  Rational limit = guess + Rational(order);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const MonomialSum terms = collect(limit);
    if (all_cancel(terms)) {
      limit += Rational(order + 1);
      continue;
    }
    Rational low(0);
    for (const auto& [e, c] : terms)
      if (c != 0) {
        low = e;
        break;
      }
    if (low + Rational(order) <= limit) return monomials_over_eta(terms, limit, l, order);
    limit = low + Rational(order);
  }
  throw std::logic_error("character sum cancels through every tested exponent");
}

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
}

}  // namespace

QSeries fock_char(const ModelParams& mp, const ScaledWeight& mu, int order) {
  check_order(order);
  return qs_mul(QSeries::monomial(half_norm_shifted(mp, mu), 1, order), eta_inv_pow(mp.rank(), order));
}

QSeries w_char(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha, const LambdaParam& lambda,
               int order) {
  check_order(order);
  validate_alpha(mp.rs(), alpha);
  validate(mp, lambda);
  MonomialSum terms;
  for (const auto& sigma : group.elements()) add_term(terms, direct_exponent(mp, sigma, alpha, lambda), sigma.sign());
  return finite_over_eta(terms, mp.rank(), order);
}

QSeries w_char_affine(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha,
                      const LambdaParam& lambda, int order) {
  check_order(order);
  validate(mp, lambda);
  if (!narrow(mp, lambda.sp)) throw NotNarrow(mp, lambda.sp);
  const ChamberPair pair = chamber_pair(mp, group, alpha, lambda.lambda0);
  MonomialSum terms;
  for (const auto& sigma : group.elements())
    add_term(terms, affine_exponent(mp, pair, sigma, alpha, lambda), sigma.sign());
  return finite_over_eta(terms, mp.rank(), order);
}

QSeries module_char(const ModelParams& mp, const WeylGroup& group, const LambdaParam& lambda, int order) {
  check_order(order);
  validate(mp, lambda);
  const auto& rs = mp.rs();
  const Rational p(mp.p());
  const IntWeight shift = lambda.lambda0 + rs.rho();
  const Rational v_norm = sqrt_upper(rs.norm2(lambda.sp_weight() + rs.rho()));

  const auto collect = [&](const Rational& limit) {
    // |p sigma(A) - v| >= p|A| - |v|, so only |A| <= (|v| + sqrt(2 p limit)) / p can contribute.
    const Rational reach = (v_norm + sqrt_upper(Rational(2) * p * limit)) / p;
    MonomialSum terms;
    for_each_dominant_in_ball(rs, shift, reach * reach, [&](const IntWeight& alpha) {
      if (!rs.in_Q(alpha)) return;
      const Int dim = weyl_dim(rs, alpha + lambda.lambda0);
      for (const auto& sigma : group.elements()) {
        const Rational e = direct_exponent(mp, sigma, alpha, lambda);
        if (e <= limit) add_term(terms, e, dim * Int(sigma.sign()));
      }
    });
    return terms;
  };
  const Rational guess = direct_exponent(mp, group.identity(), rs.zero(), lambda);
  return infinite_over_eta(collect, guess, mp.rank(), order);
}

QSeries lattice_char(const ModelParams& mp, const LambdaParam& lambda, int order) {
  check_order(order);
  validate(mp, lambda);
  const auto& rs = mp.rs();
  const Rational p(mp.p());
  // Exponent of F(-sqrt(p) alpha + lambda) is (p/2)|alpha + c|^2 with
  // c = lambda0 - (s - (p-1) rho) / p.
  const Weight c = to_rational(lambda.lambda0) -
                   scale(Rational(1) / p, to_rational(lambda.sp_weight() - scale(Int(mp.p() - 1), rs.rho())));
  const ScaledWeight x = lambda.scaled();

  const auto collect = [&](const Rational& limit) {
    MonomialSum terms;
    for_each_root_lattice_point(rs, -c, Rational(2) * limit / p, [&](const IntWeight& alpha) {
      add_term(terms, p / Rational(2) * rs.norm2(to_rational(alpha) + c), 1);
    });
    return terms;
  };
  return infinite_over_eta(collect, half_norm_shifted(mp, x), mp.rank(), order);
}

}  // namespace triplet
