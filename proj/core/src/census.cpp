#include "permpat/census.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <queue>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permpat/errors.hpp"

namespace fs = std::filesystem;

namespace permpat {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Open-addressing set of 64-bit codes. Zero is the empty-slot sentinel and
// gets a flag of its own (the identity pattern of any length has code 0).
class FingerprintSet {
 public:
  void insert(std::uint64_t x) {
    if (x == 0) {
      has_zero_ = true;
      return;
    }
    if (slots_.empty()) grow(1024);
    size_t i = static_cast<size_t>(mix64(x)) & mask_;
    while (slots_[i] != 0) {
      if (slots_[i] == x) return;
      i = (i + 1) & mask_;
    }
    slots_[i] = x;
    if (++count_ * 10 >= slots_.size() * 7) grow(slots_.size() * 2);
  }

  std::uint64_t size() const { return count_ + (has_zero_ ? 1 : 0); }

  template <class F>
  void for_each(F f) const {
    if (has_zero_) f(0);
    for (std::uint64_t s : slots_)
      if (s != 0) f(s);
  }

 private:
  void grow(size_t cap) {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(cap, 0);
    mask_ = cap - 1;
    for (std::uint64_t x : old) {
      if (x == 0) continue;
      size_t i = static_cast<size_t>(mix64(x)) & mask_;
      while (slots_[i] != 0) i = (i + 1) & mask_;
      slots_[i] = x;
    }
  }

  std::vector<std::uint64_t> slots_;
  size_t mask_ = 0;
  std::uint64_t count_ = 0;
  bool has_zero_ = false;
};

struct DfsParams {
  const int* values = nullptr;  // 1-based values at 0-based positions
  int n = 0;
  int k_lo = 1;
  int k_hi = 0;
};

// DFS over positions, one take/skip branch per position. Each take extends
// the Lehmer code by one factorial-base digit: c = number of already chosen
// values greater than the new one. digits[] carries the raw digit bytes for
// the lengths past 64-bit capacity.
template <class Sink>
void dfs(const DfsParams& P, Sink& sink, int pos, int len,
         std::uint64_t valmask, std::uint64_t code, std::uint8_t* digits) {
  if (len == P.k_hi) return;
  if (len + (P.n - pos) < P.k_lo) return;
  if (pos == P.n) return;
  dfs(P, sink, pos + 1, len, valmask, code, digits);
  const int v = P.values[pos];
  const int c = std::popcount(valmask >> v);
  std::uint64_t ncode = 0;
  if (len < kFingerprintMaxLen)
    ncode = code + static_cast<std::uint64_t>(c) * kFactorial[len];
  digits[len] = static_cast<std::uint8_t>(c);
  const int nl = len + 1;
  if (nl >= P.k_lo) sink.record(nl, ncode, digits);
  dfs(P, sink, pos + 1, nl, valmask | (1ull << (v - 1)), ncode, digits);
}

// One block fixes take/skip for the first t positions (the top t bits of the
// subset bitmask, so a block is a contiguous mask range). Prefix subsequences
// are re-recorded by every block sharing them; the dedup stores absorb that.
template <class Sink>
void run_block(const DfsParams& P, Sink& sink, int t, std::uint32_t block,
               std::uint8_t* digits) {
  std::uint64_t valmask = 0, code = 0;
  int len = 0;
  for (int i = 0; i < t; ++i) {
    if ((block >> (t - 1 - i)) & 1u) {
      if (len == P.k_hi) return;
      const int v = P.values[i];
      const int c = std::popcount(valmask >> v);
      std::uint64_t ncode = 0;
      if (len < kFingerprintMaxLen)
        ncode = code + static_cast<std::uint64_t>(c) * kFactorial[len];
      digits[len] = static_cast<std::uint8_t>(c);
      ++len;
      if (len >= P.k_lo) sink.record(len, ncode, digits);
      valmask |= 1ull << (v - 1);
      code = ncode;
    }
  }
  dfs(P, sink, t, len, valmask, code, digits);
}

int pick_block_bits(int n, int workers) {
  if (workers <= 1 || n <= 14) return 0;
  int t = 1;
  while ((1 << t) < workers * 8 && t < 16) ++t;
  return std::max(0, std::min(t, n - 10));
}

template <class Sink>
void enumerate(const Permutation& p, int k_lo, int k_hi, int threads,
               std::vector<Sink>& sinks) {
  DfsParams P{p.entries().data(), p.size(), k_lo, k_hi};
  const int t = pick_block_bits(P.n, threads);
  if (t == 0 || sinks.size() == 1) {
    std::array<std::uint8_t, 32> digits{};
    run_block(P, sinks[0], 0, 0, digits.data());
    return;
  }
  const std::uint32_t blocks = 1u << t;
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(sinks.size());
  for (size_t w = 0; w < sinks.size(); ++w) {
    pool.emplace_back([&, w] {
      std::array<std::uint8_t, 32> digits{};
      try {
        for (std::uint32_t b = next.fetch_add(1); b < blocks;
             b = next.fetch_add(1))
          run_block(P, sinks[w], t, b, digits.data());
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// ---- in-memory sink ----

struct InMemorySink {
  int k_hi = 0;
  std::vector<FingerprintSet> narrow;                 // index = length, <= 20
  std::vector<std::unordered_set<std::string>> wide;  // index = length - 21

  explicit InMemorySink(int k_hi_) : k_hi(k_hi_) {
    narrow.resize(static_cast<size_t>(std::min(k_hi, kFingerprintMaxLen)) + 1);
    if (k_hi > kFingerprintMaxLen)
      wide.resize(static_cast<size_t>(k_hi - kFingerprintMaxLen));
  }

  void record(int len, std::uint64_t code, const std::uint8_t* digits) {
    if (len <= kFingerprintMaxLen) {
      narrow[static_cast<size_t>(len)].insert(code);
    } else {
      wide[static_cast<size_t>(len - kFingerprintMaxLen - 1)].insert(
          std::string(reinterpret_cast<const char*>(digits),
                      static_cast<size_t>(len)));
    }
  }
};

std::uint64_t merged_count(std::vector<InMemorySink>& sinks, int len) {
  if (len <= kFingerprintMaxLen) {
    if (sinks.size() == 1)
      return sinks[0].narrow[static_cast<size_t>(len)].size();
    std::vector<std::uint64_t> all;
    std::uint64_t upper = 0;
    for (auto& s : sinks) upper += s.narrow[static_cast<size_t>(len)].size();
    all.reserve(upper);
    for (auto& s : sinks)
      s.narrow[static_cast<size_t>(len)].for_each(
          [&](std::uint64_t x) { all.push_back(x); });
    std::sort(all.begin(), all.end());
    return static_cast<std::uint64_t>(
        std::unique(all.begin(), all.end()) - all.begin());
  }
  const size_t wi = static_cast<size_t>(len - kFingerprintMaxLen - 1);
  for (size_t s = 1; s < sinks.size(); ++s)
    sinks[0].wide[wi].merge(sinks[s].wide[wi]);
  return sinks[0].wide[wi].size();
}

void check_census_size(int n, int max_n) {
  const int limit = std::min(max_n, kCensusHardMaxN);
  if (n <= limit) return;
  char est[64];
  std::snprintf(est, sizeof est, "%.3g", std::exp2(n));
  if (n > kCensusHardMaxN)
    throw ResourceLimitError(
        "length " + std::to_string(n) + " exceeds the census hard maximum " +
        std::to_string(kCensusHardMaxN) + " (about " + est +
        " subsequence nodes)");
  throw ResourceLimitError(
      "length " + std::to_string(n) + " exceeds the configured census maximum " +
      std::to_string(limit) + " (about " + est +
      " subsequence nodes); raise max_n (hard cap " +
      std::to_string(kCensusHardMaxN) + ") or use census_streamed");
}

std::vector<std::uint64_t> census_lengths(const Permutation& p, int k_lo,
                                          int k_hi, const CensusOptions& opts) {
  const int workers = resolve_thread_count(opts.threads);
  std::vector<InMemorySink> sinks;
  sinks.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) sinks.emplace_back(k_hi);
  enumerate(p, k_lo, k_hi, workers, sinks);
  std::vector<std::uint64_t> counts;
  counts.reserve(static_cast<size_t>(k_hi - k_lo + 1));
  for (int k = k_lo; k <= k_hi; ++k) counts.push_back(merged_count(sinks, k));
  return counts;
}

}  // namespace

std::uint64_t CensusResult::interior_total() const {
  std::uint64_t t = 0;
  for (int k = 2; k <= n - 1; ++k) t += per_length[static_cast<size_t>(k - 1)];
  return t;
}

CensusResult census(const Permutation& p, const CensusOptions& opts) {
  check_census_size(p.size(), opts.max_n);
  CensusResult r;
  r.n = p.size();
  r.per_length = census_lengths(p, 1, p.size(), opts);
  for (std::uint64_t c : r.per_length) r.total += c;
  return r;
}

std::uint64_t census_of_length(const Permutation& p, int k,
                               const CensusOptions& opts) {
  if (k < 1 || k > p.size())
    throw InvalidInputError("pattern length " + std::to_string(k) +
                            " outside 1.." + std::to_string(p.size()));
  check_census_size(p.size(), opts.max_n);
  return census_lengths(p, k, k, opts)[0];
}

std::vector<PatternFingerprint> distinct_patterns_of_length(
    const Permutation& p, int k, const CensusOptions& opts) {
  if (k < 1 || k > p.size())
    throw InvalidInputError("pattern length " + std::to_string(k) +
                            " outside 1.." + std::to_string(p.size()));
  if (k > kFingerprintMaxLen)
    throw CapacityError("pattern length " + std::to_string(k) +
                        " exceeds the 64-bit fingerprint capacity of 20");
  check_census_size(p.size(), opts.max_n);
  const int workers = resolve_thread_count(opts.threads);
  std::vector<InMemorySink> sinks;
  sinks.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) sinks.emplace_back(k);
  enumerate(p, k, k, workers, sinks);
  std::vector<std::uint64_t> all;
  for (auto& s : sinks)
    s.narrow[static_cast<size_t>(k)].for_each(
        [&](std::uint64_t x) { all.push_back(x); });
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<PatternFingerprint> out;
  out.reserve(all.size());
  for (std::uint64_t code : all) out.push_back(PatternFingerprint{code, k});
  return out;
}

namespace {

// ---- streamed sink ----

// Codes for one pattern length accumulate in a buffer; full buffers leave as
// sorted deduplicated runs on disk. Lengths past 20 stay in memory: their
// classes are tiny (at n = 28 a length-21 class tops out near 1.2e6).
struct RunWriter {
  fs::path dir;
  std::string stem;
  size_t cap = 0;
  std::vector<std::uint64_t> buf;
  std::vector<fs::path> runs;  // owned per writer: flush runs on worker threads

  void add(std::uint64_t code) {
    buf.push_back(code);
    if (buf.size() >= cap) flush();
  }

  void flush() {
    if (buf.empty()) return;
    std::sort(buf.begin(), buf.end());
    buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    fs::path f = dir / (stem + "-" + std::to_string(runs.size()) + ".run");
    std::ofstream out(f, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create spill file " + f.string());
    runs.push_back(f);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(std::uint64_t)));
    out.flush();
    if (!out) throw IoError("cannot write spill file " + f.string());
    buf.clear();
  }
};

struct StreamSink {
  int k_lo = 1, k_hi = 0;
  std::vector<RunWriter> writers;                     // index = length
  std::vector<std::unordered_set<std::string>> wide;  // index = length - 21

  void record(int len, std::uint64_t code, const std::uint8_t* digits) {
    if (len <= kFingerprintMaxLen) {
      writers[static_cast<size_t>(len)].add(code);
    } else {
      wide[static_cast<size_t>(len - kFingerprintMaxLen - 1)].insert(
          std::string(reinterpret_cast<const char*>(digits),
                      static_cast<size_t>(len)));
    }
  }
};

struct RunCursor {
  std::ifstream in;
  std::vector<std::uint64_t> buf;
  size_t pos = 0, avail = 0;

  explicit RunCursor(const fs::path& f) : in(f, std::ios::binary) {
    if (!in) throw IoError("cannot read spill file " + f.string());
    buf.resize(1 << 15);
  }

  bool next(std::uint64_t& v) {
    if (pos == avail) {
      in.read(reinterpret_cast<char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(std::uint64_t)));
      avail = static_cast<size_t>(in.gcount()) / sizeof(std::uint64_t);
      pos = 0;
      if (avail == 0) return false;
    }
    v = buf[pos++];
    return true;
  }
};

std::uint64_t merge_count_runs(const std::vector<fs::path>& runs) {
  using Item = std::pair<std::uint64_t, size_t>;
  std::vector<RunCursor> cursors;
  cursors.reserve(runs.size());
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (size_t i = 0; i < runs.size(); ++i) {
    cursors.emplace_back(runs[i]);
    std::uint64_t v;
    if (cursors[i].next(v)) heap.emplace(v, i);
  }
  std::uint64_t count = 0;
  bool have_last = false;
  std::uint64_t last = 0;
  while (!heap.empty()) {
    auto [v, i] = heap.top();
    heap.pop();
    if (!have_last || v != last) {
      ++count;
      last = v;
      have_last = true;
    }
    std::uint64_t nv;
    if (cursors[i].next(nv)) heap.emplace(nv, i);
  }
  return count;
}

fs::path resolve_spill_dir(const StreamOptions& opts) {
  if (!opts.spill_dir.empty()) return fs::path(opts.spill_dir);
  if (const char* env = std::getenv("PERMPAT_SPILL_DIR"))
    if (*env) return fs::path(env);
  std::error_code ec;
  fs::path tmp = fs::temp_directory_path(ec);
  if (ec) throw IoError("cannot resolve a spill directory: " + ec.message());
  return tmp;
}

}  // namespace

std::vector<std::uint64_t> census_streamed_lengths(const Permutation& p,
                                                   int k_lo, int k_hi,
                                                   const StreamOptions& opts) {
  const int n = p.size();
  if (k_lo < 1 || k_hi < k_lo || k_hi > n)
    throw InvalidInputError("length range " + std::to_string(k_lo) + ".." +
                            std::to_string(k_hi) + " invalid for n = " +
                            std::to_string(n));
  if (n > kCensusHardMaxN) {
    char est[64];
    std::snprintf(est, sizeof est, "%.3g", std::exp2(n));
    throw ResourceLimitError(
        "length " + std::to_string(n) + " exceeds the streamed census hard " +
        "maximum " + std::to_string(kCensusHardMaxN) + " (about " + est +
        " subsequence nodes)");
  }

  const int workers = resolve_thread_count(opts.threads);
  const fs::path dir = resolve_spill_dir(opts);
  const int narrow_lens = std::max(0, std::min(k_hi, kFingerprintMaxLen) - k_lo + 1);
  const size_t total_entries =
      std::max<size_t>(opts.spill_buffer_bytes / sizeof(std::uint64_t), 64);
  const size_t cap_per_writer = std::max<size_t>(
      64, total_entries / std::max(1, narrow_lens * workers));

  const std::string base = "permpat-spill-" + std::to_string(::getpid());
  std::vector<StreamSink> sinks(static_cast<size_t>(workers));
  struct Cleanup {
    std::vector<StreamSink>* sinks;
    ~Cleanup() {
      std::error_code ec;
      for (auto& s : *sinks)
        for (auto& w : s.writers)
          for (const auto& f : w.runs) fs::remove(f, ec);
    }
  } cleanup{&sinks};
  for (int w = 0; w < workers; ++w) {
    StreamSink& s = sinks[static_cast<size_t>(w)];
    s.k_lo = k_lo;
    s.k_hi = k_hi;
    s.writers.resize(static_cast<size_t>(std::min(k_hi, kFingerprintMaxLen)) + 1);
    for (int len = k_lo; len <= std::min(k_hi, kFingerprintMaxLen); ++len) {
      RunWriter& rw = s.writers[static_cast<size_t>(len)];
      rw.dir = dir;
      rw.stem = base + "-w" + std::to_string(w) + "-len" + std::to_string(len);
      rw.cap = cap_per_writer;
    }
    if (k_hi > kFingerprintMaxLen)
      s.wide.resize(static_cast<size_t>(k_hi - kFingerprintMaxLen));
  }

  enumerate(p, k_lo, k_hi, workers, sinks);
  for (auto& s : sinks)
    for (int len = k_lo; len <= std::min(k_hi, kFingerprintMaxLen); ++len)
      s.writers[static_cast<size_t>(len)].flush();

  std::vector<std::uint64_t> counts;
  counts.reserve(static_cast<size_t>(k_hi - k_lo + 1));
  for (int len = k_lo; len <= k_hi; ++len) {
    if (len <= kFingerprintMaxLen) {
      std::vector<fs::path> runs;
      for (const auto& s : sinks) {
        const auto& wr = s.writers[static_cast<size_t>(len)];
        runs.insert(runs.end(), wr.runs.begin(), wr.runs.end());
      }
      counts.push_back(merge_count_runs(runs));
    } else {
      const size_t wi = static_cast<size_t>(len - kFingerprintMaxLen - 1);
      for (size_t s = 1; s < sinks.size(); ++s)
        sinks[0].wide[wi].merge(sinks[s].wide[wi]);
      counts.push_back(sinks[0].wide[wi].size());
    }
  }
  return counts;
}

CensusResult census_streamed(const Permutation& p, const StreamOptions& opts) {
  CensusResult r;
  r.n = p.size();
  r.per_length = census_streamed_lengths(p, 1, p.size(), opts);
  for (std::uint64_t c : r.per_length) r.total += c;
  return r;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return std::min(requested, 1024);
  if (const char* env = std::getenv("PERMPAT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace permpat
