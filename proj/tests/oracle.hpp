#pragma once

// Deliberately naive reference implementations: explicit subsequence vectors
// in ordered sets, quadratic rank reduction, no fingerprints, no pruning.
// Slow past n = 10; that is the point.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<int> reduce(const std::vector<int>& sub) {
  std::vector<int> out(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    int rank = 1;
    for (size_t j = 0; j < sub.size(); ++j) rank += sub[j] < sub[i];
    out[i] = rank;
  }
  return out;
}

inline std::vector<std::uint64_t> census_per_length(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::set<std::vector<int>> seen;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(p[static_cast<size_t>(i)]);
    seen.insert(reduce(sub));
  }
  std::vector<std::uint64_t> per(static_cast<size_t>(n), 0);
  for (const auto& pat : seen) ++per[pat.size() - 1];
  return per;
}

inline std::uint64_t census_total(const std::vector<int>& p) {
  const auto per = census_per_length(p);
  return std::accumulate(per.begin(), per.end(), std::uint64_t{0});
}

struct MaxSearch {
  std::uint64_t h = 0;
  std::vector<std::vector<int>> argmax;  // every maximizer, no symmetry pruning
};

inline MaxSearch max_over_sn(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  MaxSearch best;
  do {
    const std::uint64_t f = census_total(p);
    if (f > best.h) {
      best.h = f;
      best.argmax.assign(1, p);
    } else if (f == best.h) {
      best.argmax.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace oracle
