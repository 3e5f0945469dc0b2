#include "triplet/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace triplet {

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': t.family = Family::A; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    default: throw std::invalid_argument("unsupported Cartan family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 64) throw std::invalid_argument("rank too large in '" + std::string(text) + "'");
  }
  t.rank = rank;
  t.validate();
  return t;
}

void CartanType::validate() const {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("invalid Cartan type " + name());
}

std::string CartanType::name() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

IntWeight make_weight(std::initializer_list<std::int64_t> coords) {
  std::vector<Int> v;
  v.reserve(coords.size());
  for (auto c : coords) v.emplace_back(c);
  return IntWeight(std::move(v));
}

Weight to_rational(const IntWeight& w) {
  std::vector<Rational> v;
  v.reserve(w.rank());
  for (const auto& c : w.coords()) v.emplace_back(c);
  return Weight(std::move(v));
}

std::optional<IntWeight> to_integral(const Weight& w) {
  std::vector<Int> v;
  v.reserve(w.rank());
  for (const auto& c : w.coords()) {
    if (!is_integer(c)) return std::nullopt;
    v.push_back(c.numerator());
  }
  return IntWeight(std::move(v));
}

namespace {

template <class W, class F>
std::string join_coords(const W& w, F&& fmt) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ",";
    out += fmt(w[i]);
  }
  return out + ")";
}

std::vector<std::pair<int, int>> dynkin_edges(const CartanType& t) {
  std::vector<std::pair<int, int>> edges;
  const int l = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(l - 3, l - 1);
      break;
    case Family::E:
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

}  // namespace

std::string to_string(const IntWeight& w) {
  return join_coords(w, [](const Int& c) { return std::to_string(to_i64(c)); });
}

std::string to_string(const Weight& w) {
  return join_coords(w, [](const Rational& c) { return to_string(c); });
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  type_.validate();
  const int l = rank();
  const auto n = static_cast<std::size_t>(l);

  cartan_.assign(n * n, Int(0));
  for (int i = 0; i < l; ++i) cartan_[idx(i, i)] = 2;
  for (auto [i, j] : dynkin_edges(type_)) {
    cartan_[idx(i, j)] = -1;
    cartan_[idx(j, i)] = -1;
  }

  // Gauss-Jordan over Q; the determinant is the product of pivots.
  std::vector<Rational> m(n * n);
  inv_cartan_.assign(n * n, Rational(0));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[idx(i, j)] = Rational(cartan_[idx(i, j)]);
    inv_cartan_[idx(i, i)] = 1;
  }
  Rational det(1);
  for (int c = 0; c < l; ++c) {
    // Cartan matrices of finite type are positive definite, so pivots are nonzero.
    const Rational pivot = m[idx(c, c)];
    det *= pivot;
    for (int j = 0; j < l; ++j) {
      m[idx(c, j)] /= pivot;
      inv_cartan_[idx(c, j)] /= pivot;
    }
    for (int r = 0; r < l; ++r) {
      if (r == c || m[idx(r, c)] == Rational(0)) continue;
      const Rational f = m[idx(r, c)];
      for (int j = 0; j < l; ++j) {
        m[idx(r, j)] -= f * m[idx(c, j)];
        inv_cartan_[idx(r, j)] -= f * inv_cartan_[idx(c, j)];
      }
    }
  }
  det_ = det.numerator();
  adj_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const Rational a = inv_cartan_[k] * Rational(det_);
    adj_[k] = a.numerator();
  }

  // Closure of the simple roots under simple reflections, kept in the positive cone.
  std::set<RootCoords> found;
  std::vector<RootCoords> frontier;
  for (int i = 0; i < l; ++i) {
    RootCoords e(n, Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const auto& g : frontier) {
      for (int i = 0; i < l; ++i) {
        Int pair = 0;
        for (int j = 0; j < l; ++j) pair += g[static_cast<std::size_t>(j)] * cartan_[idx(j, i)];
        if (pair == 0) continue;
        RootCoords r = g;
        r[static_cast<std::size_t>(i)] -= pair;
        const bool positive = std::all_of(r.begin(), r.end(), [](const Int& x) { return x >= 0; });
        if (positive && found.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(found.begin(), found.end());
  auto height = [](const RootCoords& r) {
    Int h = 0;
    for (const auto& x : r) h += x;
    return to_i64(h);
  };
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [&](const RootCoords& a, const RootCoords& b) { return height(a) < height(b); });
  const auto top = height(positive_roots_.back());
  if (positive_roots_.size() >= 2 && height(positive_roots_[positive_roots_.size() - 2]) == top)
    throw std::logic_error("highest root is not unique for " + name());

  for (const auto& r : positive_roots_) positive_root_weights_.push_back(from_root_coords(r));
  rho_ = IntWeight(std::vector<Int>(n, Int(1)));
  theta_ = positive_root_weights_.back();
  coxeter_h_ = static_cast<int>(top) + 1;

  std::map<std::int64_t, int> by_height;
  for (const auto& r : positive_roots_) ++by_height[height(r)];
  for (std::int64_t k = 1; k <= top; ++k) {
    const int here = by_height[k];
    const int above = by_height.count(k + 1) ? by_height[k + 1] : 0;
    for (int c = 0; c < here - above; ++c) exponents_.push_back(static_cast<int>(k));
  }
  weyl_order_ = 1;
  for (int e : exponents_) weyl_order_ *= Int(e + 1);

  class_reps_.push_back({zero(), class_residue(zero())});
  for (int i = 0; i < l; ++i)
    if (theta_root()[static_cast<std::size_t>(i)] == 1)
      class_reps_.push_back({fundamental(i), class_residue(fundamental(i))});
}

IntWeight RootSystem::simple_root(int i) const {
  IntWeight w(static_cast<std::size_t>(rank()));
  for (int j = 0; j < rank(); ++j) w[static_cast<std::size_t>(j)] = cartan_[idx(i, j)];
  return w;
}

IntWeight RootSystem::fundamental(int i) const {
  IntWeight w(static_cast<std::size_t>(rank()));
  w[static_cast<std::size_t>(i)] = 1;
  return w;
}

IntWeight RootSystem::from_root_coords(const RootCoords& nvec) const {
  check_rank(nvec.size());
  IntWeight w(nvec.size());
  for (int i = 0; i < rank(); ++i) {
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s += cartan_[idx(i, j)] * nvec[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(i)] = s;
  }
  return w;
}

std::vector<Rational> RootSystem::to_root_coords(const Weight& w) const {
  check_rank(w.rank());
  std::vector<Rational> out(w.rank(), Rational(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out[static_cast<std::size_t>(i)] += inv_cartan_[idx(i, j)] * w[static_cast<std::size_t>(j)];
  return out;
}

std::vector<Rational> RootSystem::to_root_coords(const IntWeight& w) const {
  check_rank(w.rank());
  std::vector<Rational> out;
  out.reserve(w.rank());
  for (int i = 0; i < rank(); ++i) {
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s += adj_[idx(i, j)] * w[static_cast<std::size_t>(j)];
    out.emplace_back(s, det_);
  }
  return out;
}

std::optional<RootCoords> RootSystem::root_coords_if_in_Q(const IntWeight& w) const {
  RootCoords out;
  for (const auto& c : to_root_coords(w)) {
    if (!is_integer(c)) return std::nullopt;
    out.push_back(c.numerator());
  }
  return out;
}

std::vector<Int> RootSystem::class_residue(const IntWeight& w) const {
  check_rank(w.rank());
  std::vector<Int> out(static_cast<std::size_t>(rank()), Int(0));
  for (int i = 0; i < rank(); ++i) {
    Int s = 0;
    for (int j = 0; j < rank(); ++j) s += adj_[idx(i, j)] * w[static_cast<std::size_t>(j)];
    s %= det_;
    if (s < 0) s += det_;
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

bool RootSystem::in_Q(const IntWeight& w) const {
  const auto r = class_residue(w);
  return std::all_of(r.begin(), r.end(), [](const Int& c) { return c == 0; });
}

bool RootSystem::in_Q(const Weight& w) const {
  for (const auto& c : to_root_coords(w))
    if (!is_integer(c)) return false;
  return true;
}

Rational RootSystem::pairing(const IntWeight& a, const IntWeight& b) const {
  check_rank(a.rank());
  check_rank(b.rank());
  Int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    Int row = 0;
    for (int j = 0; j < rank(); ++j) row += adj_[idx(i, j)] * b[static_cast<std::size_t>(j)];
    s += a[static_cast<std::size_t>(i)] * row;
  }
  return Rational(s, det_);
}

Rational RootSystem::pairing(const Weight& a, const Weight& b) const {
  check_rank(a.rank());
  check_rank(b.rank());
  Rational s(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      s += a[static_cast<std::size_t>(i)] * inv_cartan_[idx(i, j)] * b[static_cast<std::size_t>(j)];
  return s;
}

Int RootSystem::pair_with_root(const IntWeight& w, const RootCoords& gamma) {
  Int s = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) s += gamma[i] * w[i];
  return s;
}

Rational RootSystem::pair_with_root(const Weight& w, const RootCoords& gamma) {
  Rational s(0);
  for (std::size_t i = 0; i < gamma.size(); ++i) s += Rational(gamma[i]) * w[i];
  return s;
}

IntWeight RootSystem::reflect(int i, const IntWeight& w) const {
  check_rank(w.rank());
  IntWeight out = w;
  const Int c = w[static_cast<std::size_t>(i)];
  if (c == 0) return out;
  for (int j = 0; j < rank(); ++j) out[static_cast<std::size_t>(j)] -= c * cartan_[idx(i, j)];
  return out;
}

bool RootSystem::is_dominant(const IntWeight& w) const {
  check_rank(w.rank());
  return std::all_of(w.coords().begin(), w.coords().end(), [](const Int& c) { return c >= 0; });
}

Int weyl_dim(const RootSystem& rs, const IntWeight& beta) {
  if (!rs.is_dominant(beta)) throw std::invalid_argument("weyl_dim: weight " + to_string(beta) + " is not dominant");
  const IntWeight shifted = beta + rs.rho();
  Rational d(1);
  for (const auto& g : rs.positive_roots())
    d *= Rational(RootSystem::pair_with_root(shifted, g), RootSystem::pair_with_root(rs.rho(), g));
  if (!is_integer(d)) throw std::logic_error("weyl_dim produced a non-integer");
  return d.numerator();
}

bool NormBound::admits(const RootSystem& rs, const Rational& norm2) const {
  const Rational r2 = rs.norm2(rs.rho());
  const Rational lhs = norm2 - constant * constant - rho_multiple * rho_multiple * r2;
  if (lhs <= Rational(0)) return true;
  if (constant == Rational(0) || rho_multiple == Rational(0)) return false;
  return lhs * lhs <= Rational(4) * constant * constant * rho_multiple * rho_multiple * r2;
}

Rational NormBound::squared_upper(const RootSystem& rs) const {
  const Rational b = constant + rho_multiple * sqrt_upper(rs.norm2(rs.rho()));
  return b * b;
}

void for_each_dominant_in_ball(const RootSystem& rs, const IntWeight& shift, const Rational& radius2,
                               const std::function<void(const IntWeight&)>& visit) {
  if (!rs.is_dominant(shift)) throw std::invalid_argument("for_each_dominant_in_ball: shift must be dominant");
  const auto l = static_cast<std::size_t>(rs.rank());
  IntWeight a(l);
  // With a dominant shift and a positive inverse Cartan matrix the norm grows in every coordinate.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == l) {
      visit(a);
      return;
    }
    for (Int c = 0;; ++c) {
      a[i] = c;
      if (rs.norm2(a + shift) > radius2) break;
      rec(i + 1);
    }
    a[i] = 0;
  };
  if (rs.norm2(shift) <= radius2) rec(0);
}

std::vector<IntWeight> enum_dominant_in_Q(const RootSystem& rs, const NormBound& bound) {
  std::vector<IntWeight> out;
  for_each_dominant_in_ball(rs, rs.rho(), bound.squared_upper(rs), [&](const IntWeight& a) {
    if (rs.in_Q(a) && bound.admits(rs, rs.norm2(a + rs.rho()))) out.push_back(a);
  });
  std::sort(out.begin(), out.end(), [&](const IntWeight& x, const IntWeight& y) {
    const Rational nx = rs.norm2(x);
    const Rational ny = rs.norm2(y);
    if (nx != ny) return nx < ny;
    return x < y;
  });
  return out;
}

std::vector<IntWeight> enum_dominant_in_Q(const RootSystem& rs, const Rational& bound) {
  if (bound < Rational(0)) throw std::invalid_argument("enum_dominant_in_Q: negative bound");
  return enum_dominant_in_Q(rs, NormBound::of(bound));
}

void for_each_root_lattice_point(const RootSystem& rs, const Weight& center, const Rational& radius2,
                                 const std::function<void(const IntWeight&)>& visit) {
  if (radius2 < Rational(0)) return;
  const auto l = static_cast<std::size_t>(rs.rank());
  const std::vector<Rational> c = rs.to_root_coords(center);

  // y^T C y = sum_i d_i (y_i + sum_{j>i} u_ij y_j)^2
  std::vector<Rational> m(l * l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) m[i * l + j] = Rational(rs.cartan(static_cast<int>(i), static_cast<int>(j)));
  std::vector<Rational> d(l);
  std::vector<Rational> u(l * l, Rational(0));
  for (std::size_t i = 0; i < l; ++i) {
    d[i] = m[i * l + i];
    for (std::size_t j = i + 1; j < l; ++j) u[i * l + j] = m[i * l + j] / d[i];
    for (std::size_t j = i + 1; j < l; ++j)
      for (std::size_t k = i + 1; k < l; ++k) m[j * l + k] -= d[i] * u[i * l + j] * u[i * l + k];
  }

  RootCoords n(l, Int(0));
  std::vector<Rational> y(l);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t level, const Rational& rem) {
    const std::size_t i = level - 1;
    Rational t(0);
    for (std::size_t j = i + 1; j < l; ++j) t += u[i * l + j] * y[j];
    const Rational mid = c[i] - t;
    const Rational s = sqrt_upper(rem / d[i]);
    for (std::int64_t k = ceil_of(mid - s); k <= floor_of(mid + s); ++k) {
      const Rational yi = Rational(Int(k)) - c[i];
      const Rational z = yi + t;
      const Rational term = d[i] * z * z;
      if (term > rem) continue;
      n[i] = k;
      y[i] = yi;
      if (i == 0) {
        visit(rs.from_root_coords(n));
      } else {
        rec(i, rem - term);
      }
    }
  };
  rec(l, radius2);
}

}  // namespace triplet
