#pragma once

#include "triplet/affine.hpp"
#include "triplet/qseries.hpp"

namespace triplet {

/// Character of the Fock module F(mu): q^{|mu - Q0 rho|^2 / 2} eta^{-l}.
QSeries fock_char(const ModelParams& mp, const ScaledWeight& mu, int order);

/// sum_sigma (-1)^{l(sigma)} q^{|sqrt(p) sigma(alpha + lambda0 + rho) - lambda_p - rho/sqrt(p)|^2 / 2} eta^{-l}
QSeries w_char(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha, const LambdaParam& lambda,
               int order);

/// The same signed sum with exponents read off the affine orbit y_sigma o mu_lambda.
/// Throws NotNarrow for non-narrow lambda.
QSeries w_char_affine(const ModelParams& mp, const WeylGroup& group, const IntWeight& alpha,
                      const LambdaParam& lambda, int order);

/// sum over alpha in P_+ cap Q of dim L(alpha + lambda0) times w_char(alpha, lambda).
QSeries module_char(const ModelParams& mp, const WeylGroup& group, const LambdaParam& lambda, int order);

/// sum over alpha in Q of fock_char(-sqrt(p) alpha + lambda).
QSeries lattice_char(const ModelParams& mp, const LambdaParam& lambda, int order);

}  // namespace triplet
