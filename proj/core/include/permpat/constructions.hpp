#pragma once

#include <utility>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

// W_n: alternate lowest remaining, highest remaining: 1, n, 2, n-1, ...
Permutation wilf_permutation(int n);

// pi_k: k ascending segments of length k; segment j holds
// (k-j+1, 2k-j+1, ..., k^2-j+1) at positions (j-1)k+1 .. jk. The first entry
// of each segment is its perigee; the only descents are at segment ends.
struct ColemanPermutation {
  int k = 0;
  Permutation body;
  std::vector<int> perigee_positions;  // (j-1)k+1 for j = 1..k
};

ColemanPermutation coleman_permutation(int k);  // k >= 2

// (position, value) of each perigee: ((j-1)k+1, k-j+1) for j = 1..k.
std::vector<std::pair<int, int>> perigees(const ColemanPermutation& c);

// The length-15 record holder (hard-coded by definition, unlike the
// generated families).
Permutation record15();

}  // namespace permpat
