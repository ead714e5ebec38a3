#include "permpat/constructions.hpp"

#include <string>

#include "permpat/errors.hpp"

namespace permpat {

Permutation wilf_permutation(int n) {
  if (n < 1) throw InvalidInputError("wilf length must be at least 1");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n));
  int lo = 1, hi = n;
  while (lo <= hi) {
    e.push_back(lo++);
    if (lo <= hi) e.push_back(hi--);
  }
  return Permutation(std::move(e));
}

ColemanPermutation coleman_permutation(int k) {
  if (k < 2)
    throw InvalidInputError("segment count must be at least 2, got " +
                            std::to_string(k));
  std::vector<int> e;
  e.reserve(static_cast<size_t>(k) * static_cast<size_t>(k));
  std::vector<int> perigee_positions;
  perigee_positions.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    perigee_positions.push_back((j - 1) * k + 1);
    for (int i = 1; i <= k; ++i) e.push_back((i - 1) * k + (k - j + 1));
  }
  return ColemanPermutation{k, Permutation(std::move(e)),
                            std::move(perigee_positions)};
}

std::vector<std::pair<int, int>> perigees(const ColemanPermutation& c) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(c.k));
  for (int j = 1; j <= c.k; ++j)
    out.emplace_back((j - 1) * c.k + 1, c.k - j + 1);
  return out;
}

Permutation record15() {
  return Permutation({5, 12, 2, 7, 15, 10, 4, 13, 8, 1, 11, 6, 14, 3, 9});
}

}  // namespace permpat
