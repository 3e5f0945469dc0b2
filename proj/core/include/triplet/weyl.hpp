#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "triplet/rootsys.hpp"

namespace triplet {

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

/// Thrown instead of producing a partial Weyl group.
class WeylCapExceeded : public std::runtime_error {
 public:
  WeylCapExceeded(const std::string& type, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error("Weyl group of " + type + " has " + std::to_string(required) +
                           " elements, above the cap " + std::to_string(cap) + "; rerun with a cap >= " +
                           std::to_string(required)),
        required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

/// A Weyl group element: the integer matrix of its action on fundamental-weight
/// coordinates, and its lexicographically smallest reduced word (0-based generators,
/// word[0] is the leftmost factor).
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  /// Any word (not necessarily reduced); the stored word is the canonical reduced one.
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  static WeylElement from_matrix(const RootSystem& rs, std::vector<Int> matrix);

  const std::vector<int>& word() const noexcept { return word_; }
  int length() const noexcept { return static_cast<int>(word_.size()); }
  int rank() const noexcept { return rank_; }
  const std::vector<Int>& matrix() const noexcept { return matrix_; }
  Int entry(int i, int j) const { return matrix_[static_cast<std::size_t>(i * rank_ + j)]; }
  int sign() const noexcept { return length() % 2 == 0 ? 1 : -1; }

  IntWeight act(const IntWeight& mu) const;
  Weight act(const Weight& mu) const;

  /// "1 2 1" style, 1-based; "e" for the identity.
  std::string word_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  WeylElement(int rank, std::vector<Int> matrix, std::vector<int> word)
      : rank_(rank), matrix_(std::move(matrix)), word_(std::move(word)) {}

  int rank_ = 0;
  std::vector<Int> matrix_;
  std::vector<int> word_;
};

/// Dot action: w(mu + rho) - rho.
IntWeight circ_act(const RootSystem& rs, const WeylElement& w, const IntWeight& mu);
Weight circ_act(const RootSystem& rs, const WeylElement& w, const Weight& mu);

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// Number of positive roots sent to negative roots, computed from the matrix alone.
int inversion_count(const RootSystem& rs, const WeylElement& w);

/// The longest element, found without enumerating the group.
WeylElement longest_element(const RootSystem& rs);

/// Every reduced word of w, lexicographically sorted, stopping after max_words.
std::vector<std::vector<int>> reduced_words(const RootSystem& rs, const WeylElement& w, std::size_t max_words);

/// Breadth-first enumeration; elements ordered by length, then by canonical word.
std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

/// The enumerated group with lookup by the image of rho (which is regular, so the image
/// identifies the element).
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);

  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }
  const WeylElement& find(const WeylElement& w) const;

 private:
  std::vector<WeylElement> elements_;
  std::map<std::vector<Int>, std::size_t> by_rho_image_;
  IntWeight rho_;
};

}  // namespace triplet
