#include "permpat/theorem.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "permpat/census.hpp"
#include "permpat/constructions.hpp"
#include "permpat/errors.hpp"

namespace permpat {

namespace {

using u128 = unsigned __int128;

const u128* fact128() {
  static const std::array<u128, 29> table = [] {
    std::array<u128, 29> t{};
    t[0] = 1;
    for (int i = 1; i <= 28; ++i) t[i] = t[i - 1] * static_cast<unsigned>(i);
    return t;
  }();
  return table.data();
}

// C(n, k) in 64 bits for n <= 40: covers every family size used here.
std::uint64_t comb64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

void validate_family_k(int k) {
  if (k < 2)
    throw InvalidInputError("segment count must be at least 2, got " +
                            std::to_string(k));
  if (k > kFamilyEnumMaxK)
    throw ResourceLimitError(
        "family enumeration capped at k = " + std::to_string(kFamilyEnumMaxK) +
        " (k = " + std::to_string(k) + " has " +
        std::to_string(comb64((k - 1) * (k - 1), (k - 1) * (k - 1) / 2)) +
        " members)");
}

// Lexicographically next size-|comb| subset of {0..m-1}; false at the last.
bool next_combination(std::vector<int>& comb, int m) {
  const int c = static_cast<int>(comb.size());
  for (int i = c - 1; i >= 0; --i) {
    if (comb[static_cast<size_t>(i)] < m - (c - i)) {
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < c; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

// Subset of {0..m-1} with |comb| = c at lexicographic rank r.
std::vector<int> unrank_combination(int m, int c, std::uint64_t r) {
  std::vector<int> comb;
  comb.reserve(static_cast<size_t>(c));
  int v = 0;
  for (int s = 0; s < c; ++s) {
    while (true) {
      std::uint64_t block = comb64(m - v - 1, c - s - 1);
      if (r < block) break;
      r -= block;
      ++v;
    }
    comb.push_back(v++);
  }
  return comb;
}

struct MemberCoder {
  const std::vector<int>* body = nullptr;      // pi_k entries, 0-based index
  const std::vector<int>* required = nullptr;  // ascending 1-based positions
  const std::vector<int>* free_pos = nullptr;  // ascending 1-based positions
  std::vector<int> member;                     // scratch: merged positions

  // Merge required with the chosen free positions, then fold the subsequence
  // values into a factorial-base Lehmer code. 28! < 2^128, so u128 covers
  // every member length that occurs (k = 6 gives length 23).
  u128 code_of(const std::vector<int>& comb) {
    merge_positions(comb);
    u128 code = 0;
    std::uint64_t valmask = 0;
    int len = 0;
    for (int pos : member) {
      const int v = (*body)[static_cast<size_t>(pos - 1)];
      const int c = std::popcount(valmask >> v);
      code += static_cast<u128>(c) * fact128()[len];
      ++len;
      valmask |= 1ull << (v - 1);
    }
    return code;
  }

  void merge_positions(const std::vector<int>& comb) {
    member.clear();
    size_t ri = 0;
    size_t ci = 0;
    while (ri < required->size() || ci < comb.size()) {
      int rp = ri < required->size() ? (*required)[ri]
                                     : std::numeric_limits<int>::max();
      int cp = ci < comb.size()
                   ? (*free_pos)[static_cast<size_t>(comb[ci])]
                   : std::numeric_limits<int>::max();
      if (rp < cp) {
        member.push_back(rp);
        ++ri;
      } else {
        member.push_back(cp);
        ++ci;
      }
    }
  }
};

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0) throw InvalidInputError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

double log2_binomial(int n, int k) {
  if (n < 0) throw InvalidInputError("binomial needs n >= 0");
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  const double ln2 = std::numbers::ln2;
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
          std::lgamma(n - k + 1.0)) /
         ln2;
}

RestrictedFamilySpec restricted_family_spec(int k) {
  if (k < 2)
    throw InvalidInputError("segment count must be at least 2, got " +
                            std::to_string(k));
  RestrictedFamilySpec spec;
  spec.k = k;
  const int n = k * k;
  std::vector<char> is_required(static_cast<size_t>(n) + 1, 0);
  for (int pos = 1; pos <= k; ++pos) is_required[static_cast<size_t>(pos)] = 1;
  for (int j = 2; j <= k; ++j)
    is_required[static_cast<size_t>((j - 1) * k + 1)] = 1;
  for (int pos = 1; pos <= n; ++pos) {
    if (is_required[static_cast<size_t>(pos)])
      spec.required_positions.push_back(pos);
    else
      spec.free_positions.push_back(pos);
  }
  spec.choose = (k - 1) * (k - 1) / 2;
  spec.member_length = 2 * k - 1 + spec.choose;
  return spec;
}

std::uint64_t restricted_family_size(int k) {
  validate_family_k(k);
  return comb64((k - 1) * (k - 1), (k - 1) * (k - 1) / 2);
}

void restricted_family(
    int k, const std::function<void(const std::vector<int>&)>& yield) {
  validate_family_k(k);
  const RestrictedFamilySpec spec = restricted_family_spec(k);
  const int m = static_cast<int>(spec.free_positions.size());
  std::vector<int> comb(static_cast<size_t>(spec.choose));
  for (int i = 0; i < spec.choose; ++i) comb[static_cast<size_t>(i)] = i;
  MemberCoder coder;
  coder.required = &spec.required_positions;
  coder.free_pos = &spec.free_positions;
  bool more = true;
  while (more) {
    coder.merge_positions(comb);
    yield(coder.member);
    more = next_combination(comb, m);
  }
}

DistinctnessReport verify_distinctness(int k, int threads) {
  validate_family_k(k);
  const RestrictedFamilySpec spec = restricted_family_spec(k);
  const ColemanPermutation pk = coleman_permutation(k);
  const std::vector<int>& body = pk.body.entries();
  const int m = static_cast<int>(spec.free_positions.size());
  const std::uint64_t size = restricted_family_size(k);

  DistinctnessReport report;
  report.k = k;
  report.family_size = size;

  std::vector<u128> codes(size);
  int workers = resolve_thread_count(threads);
  if (size < 100000) workers = 1;

  auto fill_range = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<int> comb = unrank_combination(m, spec.choose, lo);
    MemberCoder coder;
    coder.body = &body;
    coder.required = &spec.required_positions;
    coder.free_pos = &spec.free_positions;
    for (std::uint64_t r = lo; r < hi; ++r) {
      codes[r] = coder.code_of(comb);
      if (r + 1 < hi) next_combination(comb, m);
    }
  };

  if (workers <= 1) {
    fill_range(0, size);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = size * static_cast<std::uint64_t>(w) /
                               static_cast<std::uint64_t>(workers);
      const std::uint64_t hi = size * static_cast<std::uint64_t>(w + 1) /
                               static_cast<std::uint64_t>(workers);
      pool.emplace_back([&, lo, hi] {
        try {
          fill_range(lo, hi);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::sort(codes.begin(), codes.end());
  std::uint64_t distinct = size == 0 ? 0 : 1;
  bool have_dup = false;
  u128 dup = 0;
  for (std::uint64_t i = 1; i < size; ++i) {
    if (codes[i] != codes[i - 1]) {
      ++distinct;
    } else if (!have_dup) {
      have_dup = true;
      dup = codes[i];
    }
  }
  report.distinct_patterns = distinct;
  report.all_distinct = distinct == size;

  if (have_dup) {
    // Cold path for a failed claim: rescan for the two colliding members.
    std::vector<int> first, second;
    restricted_family(k, [&](const std::vector<int>& member) {
      if (!second.empty()) return;
      u128 code = 0;
      std::uint64_t valmask = 0;
      int len = 0;
      for (int pos : member) {
        const int v = body[static_cast<size_t>(pos - 1)];
        code += static_cast<u128>(std::popcount(valmask >> v)) * fact128()[len];
        ++len;
        valmask |= 1ull << (v - 1);
      }
      if (code == dup) {
        if (first.empty())
          first = member;
        else
          second = member;
      }
    });
    report.counterexample = std::make_pair(first, second);
  }
  return report;
}

double theorem_bound(int n) {
  if (n < 1) throw InvalidInputError("bound needs n >= 1");
  return std::exp2(n - 2.0 * std::sqrt(n)) / std::sqrt(n);
}

double theorem_bound_log2(int n) {
  if (n < 1) throw InvalidInputError("bound needs n >= 1");
  return (n - 2.0 * std::sqrt(n)) - 0.5 * std::log2(static_cast<double>(n));
}

BoundReport bound_chain(int k) {
  if (k < 2)
    throw InvalidInputError("segment count must be at least 2, got " +
                            std::to_string(k));
  if (k > 10)
    throw ResourceLimitError(
        "exact bound chain capped at k = 10; use bound_chain_log2 for k = " +
        std::to_string(k));
  BoundReport r;
  r.k = k;
  r.n = k * k;
  const int f = (k - 1) * (k - 1);
  r.family_count = binomial(f, f / 2);
  const double pi = std::numbers::pi;
  r.stirling_estimate = std::sqrt(2.0 / pi) * std::exp2(f) / (k - 1);
  r.theorem_bound = permpat::theorem_bound(r.n);
  const double sqrt_n = std::sqrt(static_cast<double>(r.n));
  r.improved_constant_bound = (2.0 * std::sqrt(2.0) / std::sqrt(pi)) *
                              std::exp2(r.n - 2.0 * sqrt_n) / (sqrt_n - 1.0);
  r.golden_bound = std::pow(std::numbers::phi, r.n);
  r.cap = (BigInt(1) << r.n) - 1;
  const double family_d = r.family_count.convert_to<double>();
  r.family_exceeds_theorem = family_d > r.theorem_bound;
  r.improved_exceeds_theorem = r.improved_constant_bound > r.theorem_bound;
  r.family_within_cap = r.family_count <= r.cap;
  r.family_exceeds_golden = family_d > r.golden_bound;
  return r;
}

BoundChainLog2 bound_chain_log2(int k) {
  if (k < 2)
    throw InvalidInputError("segment count must be at least 2, got " +
                            std::to_string(k));
  BoundChainLog2 r;
  r.k = k;
  r.n = k * k;
  const int f = (k - 1) * (k - 1);
  const double pi = std::numbers::pi;
  r.log2_family = log2_binomial(f, f / 2);
  r.log2_stirling = 0.5 * std::log2(2.0 / pi) + f - std::log2(k - 1.0);
  r.log2_theorem = theorem_bound_log2(r.n);
  const double sqrt_n = std::sqrt(static_cast<double>(r.n));
  r.log2_improved = std::log2(2.0 * std::sqrt(2.0) / std::sqrt(pi)) +
                    (r.n - 2.0 * sqrt_n) - std::log2(sqrt_n - 1.0);
  r.log2_golden = r.n * std::log2(std::numbers::phi);
  r.log2_cap = r.n;
  return r;
}

double central_binomial_stirling_ratio(int m) {
  if (m < 1 || m > 500)
    throw InvalidInputError("central binomial ratio supported for m in 1..500");
  const double b = binomial(2 * m, m).convert_to<double>();
  return b * std::sqrt(std::numbers::pi * m) / std::exp2(2.0 * m);
}

}  // namespace permpat
