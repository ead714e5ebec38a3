#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "permpat/fingerprint.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

// In-memory census refuses n beyond CensusOptions::max_n (default 24); the
// streamed variant goes up to 28. Beyond that the distinct-fingerprint
// volume stops being desk scale.
inline constexpr int kCensusDefaultMaxN = 24;
inline constexpr int kCensusHardMaxN = 28;

struct CensusOptions {
  int threads = 0;  // 0: PERMPAT_THREADS env var, else hardware concurrency
  int max_n = kCensusDefaultMaxN;
};

struct CensusResult {
  int n = 0;
  // per_length[k-1] = number of distinct patterns of length k contained in p.
  std::vector<std::uint64_t> per_length;
  std::uint64_t total = 0;  // sum of per_length
  // f counts nonempty patterns only; the empty pattern is never included.
  bool excludes_empty_pattern = true;

  // Sum over lengths 2..n-1: drops the two classes forced for every
  // permutation (the single-entry pattern and the whole permutation).
  // This is the convention under which the record permutation's published
  // count is reproduced exactly; see README.
  std::uint64_t interior_total() const;
};

// Exact distinct-pattern counts for all lengths 1..n. Deterministic and
// independent of thread count.
CensusResult census(const Permutation& p, const CensusOptions& opts = {});

// Count for a single length; agrees with census(p).per_length[k-1].
std::uint64_t census_of_length(const Permutation& p, int k,
                               const CensusOptions& opts = {});

// All distinct length-k patterns of p as sorted fingerprints (k <= 20).
std::vector<PatternFingerprint> distinct_patterns_of_length(
    const Permutation& p, int k, const CensusOptions& opts = {});

struct StreamOptions {
  int threads = 0;
  // Empty: PERMPAT_SPILL_DIR env var, else the system temp directory.
  std::string spill_dir;
  // Total budget for in-memory fingerprint buffers before sorted runs spill.
  std::size_t spill_buffer_bytes = std::size_t{64} << 20;
};

// External-memory census for n up to 28: fingerprints accumulate in sorted
// runs on disk and a final k-way merge counts distinct values per length.
// Results identical to census().
CensusResult census_streamed(const Permutation& p,
                             const StreamOptions& opts = {});

// Restriction to pattern lengths k_lo..k_hi; returns those counts only.
std::vector<std::uint64_t> census_streamed_lengths(const Permutation& p,
                                                   int k_lo, int k_hi,
                                                   const StreamOptions& opts = {});

// requested > 0 is used as-is; otherwise PERMPAT_THREADS, if set and
// positive, else std::thread::hardware_concurrency(), floored at 1.
int resolve_thread_count(int requested);

}  // namespace permpat
