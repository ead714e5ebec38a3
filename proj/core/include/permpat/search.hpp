#pragma once

#include <cstdint>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

// The order-8 group generated by reverse, complement, inverse. f is constant
// on orbits, so exhaustive search only examines lexicographic orbit minima.
std::vector<Permutation> symmetry_images(const Permutation& p);  // all 8, p first
Permutation orbit_representative(const Permutation& p);          // lex-min image
bool is_orbit_representative(const Permutation& p);

// n <= 9 runs freely; 10..12 need allow_big (minutes of work); beyond that
// the cost estimate alone is the answer.
inline constexpr int kSearchFreeMaxN = 9;
inline constexpr int kSearchBigMaxN = 12;

struct SearchOptions {
  int threads = 0;
  bool allow_big = false;
};

struct SearchRecord {
  int n = 0;
  std::uint64_t h_value = 0;
  // Every orbit representative attaining h_value, sorted. Reported values are
  // canonical: a published maximizer may appear as another member of one of
  // these orbits.
  std::vector<Permutation> argmax;
  double elapsed_seconds = 0;  // informational; never printed by the CLI
  std::uint64_t classes_examined = 0;
};

SearchRecord search_h(int n, const SearchOptions& opts = {});

struct HDifferenceReport {
  int n_max = 0;
  std::vector<std::uint64_t> h;          // h[i] = h(i+1)
  std::vector<std::int64_t> differences;  // h(n) - h(n-1) for n = 2..n_max
  bool monotone = false;                  // all differences positive
};

HDifferenceReport h_difference_report(int n_max, const SearchOptions& opts = {});

// Sum over pairs i < j of (j - i) + |p_i - p_j|. On all of S_n this is the
// constant n(n^2-1)/3: both terms sum over the same multiset of index pairs
// regardless of arrangement. Kept as a scorer because the CLI reports it.
long long distance_score(const Permutation& p);

struct HeuristicResult {
  Permutation p;
  long long score = 0;
  std::uint64_t census_total = 0;
};

// Steepest-ascent pair swaps on distance_score from `beam` seeded random
// starts, ranked by (score, census total, text). Deterministic for a fixed
// seed. No optimality claim; see the score note above.
std::vector<HeuristicResult> heuristic_top(int n, int beam, std::uint64_t seed);

}  // namespace permpat
