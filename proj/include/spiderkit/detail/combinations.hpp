#pragma once

#include <cstdint>
#include <vector>

namespace spiderkit::detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// rank-th k-subset of 0..n-1 in lexicographic order.
inline std::vector<std::uint32_t> unrank_combination(std::uint32_t n,
                                                     std::uint32_t k,
                                                     std::uint64_t rank) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (;; ++x) {
      std::uint64_t block = binomial(n - x - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(x++);
  }
  return out;
}

// Advances idx to the next k-subset of 0..n-1 in lexicographic order.
inline bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t n) {
  std::uint32_t k = static_cast<std::uint32_t>(idx.size());
  for (std::uint32_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::uint32_t> first_combination(std::uint32_t k) {
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace spiderkit::detail
