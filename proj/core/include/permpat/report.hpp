#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permpat/census.hpp"
#include "permpat/permutation.hpp"
#include "permpat/search.hpp"
#include "permpat/theorem.hpp"

namespace permpat {

// All report text is deterministic: no timestamps, no elapsed times, no
// locale-dependent formatting. Floats use "%.6g".
std::string fmt_double(double v);

// CSV: header length,distinct_patterns,cap_binomial,cap_factorial; one row
// per length; final row total,<f>,,
std::string census_csv(const CensusResult& r);
std::string census_report(const Permutation& p, const CensusResult& r);

// CSV: header k,n,family_size,distinct,theorem_bound,ok. ok means all
// members distinct AND family_size > theorem_bound.
std::string distinctness_csv(const std::vector<DistinctnessReport>& reports);
std::string distinctness_report(const DistinctnessReport& r);

// CSV: header n,h,argmax_count,example_argmax (example quoted).
std::string search_csv(const SearchRecord& r);
std::string search_report(const SearchRecord& r);

std::string h_difference_csv(const HDifferenceReport& r);   // n,h,diff
std::string h_difference_text(const HDifferenceReport& r);

struct BoundsTableOptions {
  int n_max = 30;
  int measure_h_max = 6;   // exhaustive search is cheap only up to here
  int measure_f_max = 16;  // census cutoff for the constructed families
  int exact_max = 400;     // exact 2^n - 1 column cutoff
};

// One row per n: cap 2^n - 1, golden phi^n, theorem and improved bounds,
// log2 columns throughout (the only populated ones past the overflow
// cutoffs), and a measured f or h where one is desk-scale computable.
std::string bounds_table_csv(const BoundsTableOptions& opts);
std::string bounds_table_text(const BoundsTableOptions& opts);

std::string heuristic_csv(int n, int beam, std::uint64_t seed,
                          const std::vector<HeuristicResult>& results);
std::string heuristic_text(int n, int beam, std::uint64_t seed,
                           const std::vector<HeuristicResult>& results);

}  // namespace permpat
