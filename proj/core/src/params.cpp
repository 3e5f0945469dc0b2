#include "triplet/params.hpp"

#include <algorithm>

namespace triplet {

ModelParams::ModelParams(RootSystem rs, int p) : rs_(std::move(rs)), p_(p), w0_(longest_element(rs_)) {
  if (p < 2) throw std::invalid_argument("p must be an integer >= 2, got " + std::to_string(p));
}

Rational ModelParams::central_charge() const {
  return Rational(rank()) - Rational(12) * q0_squared() * rs_.norm2(rs_.rho());
}

Rational ModelParams::central_charge_from_dimension() const {
  return Rational(rank()) - q0_squared() * Rational(h()) * Rational(rs_.dim_g());
}

namespace {

void check_same_p(const ScaledWeight& a, const ScaledWeight& b) {
  if (a.p != b.p)
    throw std::invalid_argument("scaled weights with different p (" + std::to_string(a.p) + " vs " +
                                std::to_string(b.p) + ")");
}

void check_p(const ModelParams& mp, const ScaledWeight& mu) {
  if (mu.p != mp.p()) throw std::invalid_argument("scaled weight p does not match the model");
  mp.rs().check_rank(mu.x.rank());
}

IntWeight digits_weight(const Digits& sp) {
  std::vector<Int> v;
  v.reserve(sp.size());
  for (int s : sp) v.emplace_back(s);
  return IntWeight(std::move(v));
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

ScaledWeight operator+(const ScaledWeight& a, const ScaledWeight& b) {
  check_same_p(a, b);
  return {a.x + b.x, a.p};
}

ScaledWeight operator-(const ScaledWeight& a, const ScaledWeight& b) {
  check_same_p(a, b);
  return {a.x - b.x, a.p};
}

IntWeight LambdaParam::sp_weight() const { return digits_weight(sp); }

ScaledWeight LambdaParam::scaled() const { return {sp_weight() - scale(Int(p), lambda0), p}; }

std::string to_string(const Digits& sp) {
  std::string s = "(";
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sp[i]);
  }
  return s + ")";
}

std::vector<IntWeight> lambda0_set(const RootSystem& rs) {
  std::vector<IntWeight> out;
  for (const auto& c : rs.class_reps()) out.push_back(c.weight);
  return out;
}

IntWeight lambda0_representative(const RootSystem& rs, const IntWeight& w) {
  const auto residue = rs.class_residue(w);
  for (const auto& c : rs.class_reps())
    if (c.residue == residue) return c.weight;
  throw std::logic_error("no minuscule representative found for " + to_string(w));
}

Decomposition decompose(const ScaledWeight& mu) {
  Decomposition d{IntWeight(mu.x.rank()), Digits(mu.x.rank(), 0)};
  for (std::size_t i = 0; i < mu.x.rank(); ++i) {
    const std::int64_t xi = to_i64(mu.x[i]);
    const std::int64_t s = mod_floor(xi, mu.p);
    d.sp[i] = static_cast<int>(s);
    d.mu0[i] = (Int(s) - mu.x[i]) / Int(mu.p);
  }
  return d;
}

ScaledWeight star_act(const ModelParams& mp, const WeylElement& w, const ScaledWeight& mu) {
  check_p(mp, mu);
  const Decomposition d = decompose(mu);
  return {circ_act(mp.rs(), w, digits_weight(d.sp)) - scale(Int(mp.p()), d.mu0), mp.p()};
}

IntWeight epsilon(const ModelParams& mp, const Digits& sp, const WeylElement& w) {
  validate(mp, sp);
  const ScaledWeight moved = star_act(mp, w, {digits_weight(sp), mp.p()});
  return -decompose(moved).mu0;
}

Rational conformal_weight(const ModelParams& mp, const ScaledWeight& mu) {
  check_p(mp, mu);
  const auto& rs = mp.rs();
  const Rational p(mp.p());
  return rs.norm2(mu.x) / (Rational(2) * p) - (Rational(1) - Rational(1) / p) * rs.pairing(mu.x, rs.rho());
}

Rational half_norm_shifted(const ModelParams& mp, const ScaledWeight& mu) {
  check_p(mp, mu);
  const auto& rs = mp.rs();
  // sqrt(p)(mu - Q0 rho) = x - (p-1) rho
  const IntWeight v = mu.x - scale(Int(mp.p() - 1), rs.rho());
  return rs.norm2(v) / Rational(Int(2) * Int(mp.p()));
}

Rational conformal_weight_shifted_form(const ModelParams& mp, const ScaledWeight& mu) {
  return half_norm_shifted(mp, mu) + (mp.central_charge() - Rational(mp.rank())) / Rational(24);
}

Int theta_level(const ModelParams& mp, const Digits& sp) {
  validate(mp, sp);
  return RootSystem::pair_with_root(digits_weight(sp) + mp.rs().rho(), mp.rs().theta_root());
}

bool narrow(const ModelParams& mp, const Digits& sp) { return theta_level(mp, sp) <= mp.p(); }

bool epsilon_chain_vanishes(const ModelParams& mp, const Digits& sp, const std::vector<int>& word) {
  const auto& rs = mp.rs();
  const auto total = rs.positive_roots().size();
  if (word.size() != total || !(WeylElement::from_word(rs, word) == mp.w0()))
    throw std::invalid_argument("word is not a reduced expression of the longest element");
  const std::size_t L = word.size();
  for (std::size_t n = 1; n + 1 <= L; ++n) {
    // s_{i_n} ... s_{i_1} is the suffix of length n; i_{n+1} sits just before it.
    const std::vector<int> suffix(word.end() - static_cast<std::ptrdiff_t>(n), word.end());
    const IntWeight eps = epsilon(mp, sp, WeylElement::from_word(rs, suffix));
    if (eps[static_cast<std::size_t>(word[L - n - 1])] != 0) return false;
  }
  return true;
}

LambdaParam canonical_lambda(const ModelParams& mp, const ScaledWeight& x) {
  check_p(mp, x);
  const Decomposition d = decompose(x);
  return {lambda0_representative(mp.rs(), d.mu0), d.sp, mp.p()};
}

LambdaParam dual_param(const ModelParams& mp, const LambdaParam& lambda) {
  validate(mp, lambda);
  return canonical_lambda(mp, {-mp.w0().act(lambda.scaled().x), mp.p()});
}

LambdaParam dual_module_param(const ModelParams& mp, const LambdaParam& lambda) {
  const LambdaParam prime = dual_param(mp, lambda);
  return canonical_lambda(mp, star_act(mp, mp.w0(), prime.scaled()));
}

std::vector<LambdaParam> enumerate_lambda(const ModelParams& mp) {
  const auto l = static_cast<std::size_t>(mp.rank());
  std::vector<LambdaParam> out;
  std::int64_t per_class = 1;
  for (std::size_t i = 0; i < l; ++i) per_class = to_i64(Int(per_class) * Int(mp.p()));
  for (const auto& l0 : lambda0_set(mp.rs())) {
    for (std::int64_t code = 0; code < per_class; ++code) {
      Digits sp(l, 0);
      std::int64_t rest = code;
      for (std::size_t i = l; i-- > 0;) {
        sp[i] = static_cast<int>(rest % mp.p());
        rest /= mp.p();
      }
      out.push_back({l0, std::move(sp), mp.p()});
    }
  }
  return out;
}

Int lambda_count(const ModelParams& mp) {
  Int n = static_cast<std::int64_t>(lambda0_set(mp.rs()).size());
  for (int i = 0; i < mp.rank(); ++i) n *= Int(mp.p());
  return n;
}

void validate(const ModelParams& mp, const Digits& sp) {
  if (static_cast<int>(sp.size()) != mp.rank()) throw std::invalid_argument("digit vector has the wrong length");
  for (int s : sp)
    if (s < 0 || s >= mp.p())
      throw std::invalid_argument("digit " + std::to_string(s) + " outside [0, p-1] in " + to_string(sp));
}

void validate(const ModelParams& mp, const LambdaParam& lambda) {
  if (lambda.p != mp.p()) throw std::invalid_argument("lambda parameter p does not match the model");
  validate(mp, lambda.sp);
  const auto set = lambda0_set(mp.rs());
  if (std::find(set.begin(), set.end(), lambda.lambda0) == set.end())
    throw std::invalid_argument("lambda0 " + to_string(lambda.lambda0) + " is not in Lambda0");
}

}  // namespace triplet
