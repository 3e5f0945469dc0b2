#pragma once

// Reference computations that avoid the library's own algorithms.

#include <cstdint>
#include <vector>

namespace oracle {

// p(n, k): partitions of n with every part <= k, by the textbook recursion.
inline std::int64_t partitions_bounded(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partitions_bounded(n - k, k) + partitions_bounded(n, k - 1);
}

inline std::vector<std::int64_t> partitions(int count) {
  std::vector<std::int64_t> out;
  for (int n = 0; n < count; ++n) out.push_back(partitions_bounded(n, n));
  return out;
}

inline std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(std::min(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Partitions into parts of l colors: the l-fold self-convolution of p(n).
inline std::vector<std::int64_t> colored_partitions(int l, int count) {
  const auto p = partitions(count);
  std::vector<std::int64_t> out(static_cast<std::size_t>(count), 0);
  out[0] = 1;
  for (int i = 0; i < l; ++i) out = convolve(out, p);
  return out;
}

// Plain integer matrices for Weyl group checks.
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix identity(int l) {
  Matrix m(static_cast<std::size_t>(l), std::vector<std::int64_t>(static_cast<std::size_t>(l), 0));
  for (int i = 0; i < l; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t l = a.size();
  Matrix m(l, std::vector<std::int64_t>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t j = 0; j < l; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

// s_i on fundamental-weight coordinates: row i becomes e_i - (column i of the Cartan matrix).
inline Matrix reflection(const Matrix& cartan, int i) {
  const auto l = static_cast<int>(cartan.size());
  Matrix m = identity(l);
  for (int j = 0; j < l; ++j)
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return m;
}

}  // namespace oracle
