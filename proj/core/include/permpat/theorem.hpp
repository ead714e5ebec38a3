#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permpat/permutation.hpp"

namespace permpat {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);
// lgamma-based, for sizes where the exact value is pointless.
double log2_binomial(int n, int k);

// The distinguished subsequence family of pi_k: all of segment 1 and every
// perigee are required (2k-1 entries); of the remaining (k-1)^2 positions,
// exactly floor((k-1)^2 / 2) are chosen freely.
struct RestrictedFamilySpec {
  int k = 0;
  std::vector<int> required_positions;  // ascending
  std::vector<int> free_positions;      // ascending, size (k-1)^2
  int choose = 0;
  int member_length = 0;  // 2k-1 + choose
};

RestrictedFamilySpec restricted_family_spec(int k);  // k >= 2

// Enumeration is kept to k <= 6: the family has binomial((k-1)^2, choose)
// members, about 5.2 million at k = 6.
inline constexpr int kFamilyEnumMaxK = 6;

std::uint64_t restricted_family_size(int k);

// Streams each member as its sorted positions into pi_k's body, ordered
// lexicographically by the chosen free positions. k in 2..6.
void restricted_family(int k,
                       const std::function<void(const std::vector<int>&)>& yield);

struct DistinctnessReport {
  int k = 0;
  std::uint64_t family_size = 0;
  std::uint64_t distinct_patterns = 0;
  bool all_distinct = false;
  // Two members reducing to the same pattern, if the claim ever failed.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> counterexample;
};

// Reduces every family member and counts distinct patterns. Deterministic,
// parallel over combination-rank ranges.
DistinctnessReport verify_distinctness(int k, int threads = 0);

double theorem_bound(int n);       // 2^(n - 2 sqrt n) / sqrt n
double theorem_bound_log2(int n);  // (n - 2 sqrt n) - log2(n) / 2

struct BoundReport {
  int k = 0;
  int n = 0;  // k^2
  BigInt family_count;                 // exact
  double stirling_estimate = 0;        // sqrt(2/pi) 2^((k-1)^2) / (k-1)
  double theorem_bound = 0;
  double improved_constant_bound = 0;  // (2 sqrt 2/sqrt pi) 2^(n-2 sqrt n)/(sqrt n - 1)
  double golden_bound = 0;             // phi^n
  BigInt cap;                          // 2^n - 1
  bool family_exceeds_theorem = false;
  bool improved_exceeds_theorem = false;
  bool family_within_cap = false;
  bool family_exceeds_golden = false;
};

BoundReport bound_chain(int k);  // exact arithmetic; k in 2..10

// Log2-scale version of the chain for arbitrary k >= 2.
struct BoundChainLog2 {
  int k = 0;
  int n = 0;
  double log2_family = 0;
  double log2_stirling = 0;
  double log2_theorem = 0;
  double log2_improved = 0;
  double log2_golden = 0;
  double log2_cap = 0;  // log2 of 2^n (the -1 is invisible at this scale)
};

BoundChainLog2 bound_chain_log2(int k);

// binomial(2m, m) * sqrt(pi m) / 4^m, exact big-integer binomial; tends to 1
// from below as m grows. m in 1..500.
double central_binomial_stirling_ratio(int m);

}  // namespace permpat
