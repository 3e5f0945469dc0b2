#include "triplet/weyl.hpp"

#include <functional>

namespace triplet {

namespace {

std::vector<Int> apply_matrix(int l, const std::vector<Int>& m, const std::vector<Int>& v) {
  std::vector<Int> out(static_cast<std::size_t>(l), Int(0));
  for (int i = 0; i < l; ++i) {
    Int s = 0;
    for (int j = 0; j < l; ++j) s += m[static_cast<std::size_t>(i * l + j)] * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

// Greedy left-descent peeling: the smallest i with (w rho)_i < 0 is the smallest left
// descent, and repeating on s_i w yields the lexicographically smallest reduced word.
std::vector<int> lexmin_word(const RootSystem& rs, IntWeight v) {
  std::vector<int> word;
  for (;;) {
    int next = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (v[static_cast<std::size_t>(i)] < 0) {
        next = i;
        break;
      }
    }
    if (next < 0) return word;
    word.push_back(next);
    v = rs.reflect(next, v);
  }
}

std::vector<Int> matrix_of_word(const RootSystem& rs, const std::vector<int>& word) {
  const int l = rs.rank();
  std::vector<Int> m(static_cast<std::size_t>(l * l), Int(0));
  for (int k = 0; k < l; ++k) {
    IntWeight col = rs.fundamental(k);
    for (auto it = word.rbegin(); it != word.rend(); ++it) col = rs.reflect(*it, col);
    for (int i = 0; i < l; ++i) m[static_cast<std::size_t>(i * l + k)] = col[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) { return from_word(rs, {}); }

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple reflection index out of range");
  return from_word(rs, {i});
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word)
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("generator index out of range in word");
  return from_matrix(rs, matrix_of_word(rs, word));
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, std::vector<Int> matrix) {
  const int l = rs.rank();
  if (matrix.size() != static_cast<std::size_t>(l * l)) throw std::invalid_argument("Weyl matrix has wrong size");
  IntWeight image(apply_matrix(l, matrix, rs.rho().coords()));
  std::vector<int> word = lexmin_word(rs, image);
  if (matrix_of_word(rs, word) != matrix) throw std::invalid_argument("matrix is not a Weyl group element");
  return WeylElement(l, std::move(matrix), std::move(word));
}

IntWeight WeylElement::act(const IntWeight& mu) const {
  if (static_cast<int>(mu.rank()) != rank_) throw std::invalid_argument("Weyl action: rank mismatch");
  return IntWeight(apply_matrix(rank_, matrix_, mu.coords()));
}

Weight WeylElement::act(const Weight& mu) const {
  if (static_cast<int>(mu.rank()) != rank_) throw std::invalid_argument("Weyl action: rank mismatch");
  Weight out(mu.rank());
  for (int i = 0; i < rank_; ++i) {
    Rational s(0);
    for (int j = 0; j < rank_; ++j) s += Rational(entry(i, j)) * mu[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(word_[k] + 1);
  }
  return s;
}

IntWeight circ_act(const RootSystem& rs, const WeylElement& w, const IntWeight& mu) {
  return w.act(mu + rs.rho()) - rs.rho();
}

Weight circ_act(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  const Weight rho = to_rational(rs.rho());
  return w.act(mu + rho) - rho;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  const int l = rs.rank();
  std::vector<Int> m(static_cast<std::size_t>(l * l), Int(0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Int s = 0;
      for (int k = 0; k < l; ++k) s += a.entry(i, k) * b.entry(k, j);
      m[static_cast<std::size_t>(i * l + j)] = s;
    }
  return WeylElement::from_matrix(rs, std::move(m));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(rs, rev);
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& g : rs.positive_root_weights())
    if (rs.pairing(w.act(g), rs.rho()) < Rational(0)) ++count;
  return count;
}

WeylElement longest_element(const RootSystem& rs) {
  return WeylElement::from_word(rs, lexmin_word(rs, -rs.rho()));
}

std::vector<std::vector<int>> reduced_words(const RootSystem& rs, const WeylElement& w, std::size_t max_words) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::function<void(const IntWeight&)> rec = [&](const IntWeight& image) {
    if (out.size() >= max_words) return;
    bool any = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (image[static_cast<std::size_t>(i)] >= 0) continue;
      any = true;
      prefix.push_back(i);
      rec(rs.reflect(i, image));
      prefix.pop_back();
      if (out.size() >= max_words) return;
    }
    if (!any) out.push_back(prefix);
  };
  rec(w.act(rs.rho()));
  return out;
}

std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, std::uint64_t cap) {
  const auto order = static_cast<std::uint64_t>(to_i64(rs.weyl_order()));
  if (order > cap) throw WeylCapExceeded(rs.name(), order, cap);

  const int l = rs.rank();
  std::vector<WeylElement> all{WeylElement::identity(rs)};
  std::map<std::vector<Int>, bool> seen{{rs.rho().coords(), true}};
  std::size_t layer_begin = 0;
  while (layer_begin < all.size()) {
    const std::size_t layer_end = all.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int i = 0; i < l; ++i) {
        // (w s_i) rho = w (rho - alpha_i)
        const IntWeight key = all[k].act(rs.rho() - rs.simple_root(i));
        if (!seen.emplace(key.coords(), true).second) continue;
        std::vector<Int> m = all[k].matrix();
        for (int r = 0; r < l; ++r) {
          // right-multiplying by s_i only changes column i: w(s_i omega_i) = w omega_i - w alpha_i
          const Int wi = all[k].entry(r, i);
          Int walpha = 0;
          for (int j = 0; j < l; ++j) walpha += all[k].entry(r, j) * rs.cartan(i, j);
          m[static_cast<std::size_t>(r * l + i)] = wi - walpha;
        }
        std::vector<int> word = all[k].word();
        word.push_back(i);
        all.push_back(WeylElement::from_matrix(rs, std::move(m)));
        if (all.back().word() != word)
          throw std::logic_error("breadth-first word disagrees with the canonical reduced word");
      }
    }
    layer_begin = layer_end;
  }
  if (all.size() != order) throw std::logic_error("Weyl enumeration size disagrees with the order formula");
  return all;
}

WeylGroup::WeylGroup(const RootSystem& rs, std::uint64_t cap) : elements_(weyl_enumerate(rs, cap)), rho_(rs.rho()) {
  for (std::size_t k = 0; k < elements_.size(); ++k) by_rho_image_.emplace(elements_[k].act(rho_).coords(), k);
}

const WeylElement& WeylGroup::find(const WeylElement& w) const {
  const auto it = by_rho_image_.find(w.act(rho_).coords());
  if (it == by_rho_image_.end()) throw std::logic_error("element not in the enumerated Weyl group");
  return elements_[it->second];
}

}  // namespace triplet
