#include "permpat/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "permpat/census.hpp"
#include "permpat/errors.hpp"

namespace permpat {

namespace {

struct BlockBest {
  std::uint64_t h = 0;
  std::vector<Permutation> argmax;
  std::uint64_t classes = 0;
};

void consider(BlockBest& best, const Permutation& p, std::uint64_t total) {
  if (total > best.h) {
    best.h = total;
    best.argmax.clear();
  }
  if (total == best.h) best.argmax.push_back(p);
}

std::string search_cost_note(int n) {
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "about %.3g orbit classes with 2^%d subsequence nodes each",
                std::tgamma(n + 1.0) / 8.0, n);
  return buf;
}

}  // namespace

std::vector<Permutation> symmetry_images(const Permutation& p) {
  std::vector<Permutation> images;
  images.reserve(8);
  const Permutation inv = inverse(p);
  for (const Permutation* base : {&p, &inv}) {
    images.push_back(*base);
    images.push_back(reverse(*base));
    images.push_back(complement(*base));
    images.push_back(reverse(complement(*base)));
  }
  return images;
}

Permutation orbit_representative(const Permutation& p) {
  std::vector<Permutation> images = symmetry_images(p);
  return *std::min_element(images.begin(), images.end());
}

bool is_orbit_representative(const Permutation& p) {
  return p == orbit_representative(p);
}

SearchRecord search_h(int n, const SearchOptions& opts) {
  if (n < 1) throw InvalidInputError("search needs n >= 1");
  if (n > kSearchBigMaxN)
    throw ResourceLimitError("exhaustive search capped at n = " +
                             std::to_string(kSearchBigMaxN) + "; n = " +
                             std::to_string(n) + " means " +
                             search_cost_note(n));
  if (n > kSearchFreeMaxN && !opts.allow_big)
    throw ResourceLimitError(
        "n = " + std::to_string(n) + " needs the big-search override (" +
        search_cost_note(n) + ")");

  const auto start = std::chrono::steady_clock::now();
  SearchRecord record;
  record.n = n;

  const CensusOptions inner{.threads = 1, .max_n = kCensusDefaultMaxN};

  if (n == 1) {
    const Permutation p = Permutation::identity(1);
    record.h_value = census(p, inner).total;
    record.argmax.push_back(p);
    record.classes_examined = 1;
  } else {
    // One block per ordered first pair (a, b); workers pull blocks from a
    // shared counter and keep private bests, merged at the end.
    std::vector<std::pair<int, int>> blocks;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (a != b) blocks.emplace_back(a, b);

    const int workers =
        std::min<int>(resolve_thread_count(opts.threads),
                      static_cast<int>(blocks.size()));
    std::vector<BlockBest> bests(static_cast<size_t>(workers));
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto run_worker = [&](int w) {
      BlockBest& best = bests[static_cast<size_t>(w)];
      std::vector<int> entries(static_cast<size_t>(n));
      for (size_t bi = next.fetch_add(1); bi < blocks.size();
           bi = next.fetch_add(1)) {
        const auto [a, b] = blocks[bi];
        entries[0] = a;
        entries[1] = b;
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(n) - 2);
        for (int v = 1; v <= n; ++v)
          if (v != a && v != b) rest.push_back(v);
        do {
          std::copy(rest.begin(), rest.end(), entries.begin() + 2);
          const Permutation p(entries);
          if (!is_orbit_representative(p)) continue;
          ++best.classes;
          consider(best, p, census(p, inner).total);
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
    };

    if (workers == 1) {
      run_worker(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(workers));
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            run_worker(w);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }

    for (const BlockBest& b : bests) {
      record.classes_examined += b.classes;
      if (b.h > record.h_value) {
        record.h_value = b.h;
        record.argmax.clear();
      }
      if (b.h == record.h_value)
        record.argmax.insert(record.argmax.end(), b.argmax.begin(),
                             b.argmax.end());
    }
    std::sort(record.argmax.begin(), record.argmax.end());
  }

  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

HDifferenceReport h_difference_report(int n_max, const SearchOptions& opts) {
  if (n_max < 1) throw InvalidInputError("difference report needs n_max >= 1");
  HDifferenceReport r;
  r.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) r.h.push_back(search_h(n, opts).h_value);
  r.monotone = true;
  for (int n = 2; n <= n_max; ++n) {
    const std::int64_t d =
        static_cast<std::int64_t>(r.h[static_cast<size_t>(n - 1)]) -
        static_cast<std::int64_t>(r.h[static_cast<size_t>(n - 2)]);
    r.differences.push_back(d);
    if (d <= 0) r.monotone = false;
  }
  return r;
}

long long distance_score(const Permutation& p) {
  const int n = p.size();
  long long s = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      s += (j - i) + std::abs(p[i] - p[j]);
  return s;
}

std::vector<HeuristicResult> heuristic_top(int n, int beam,
                                           std::uint64_t seed) {
  if (n < 1) throw InvalidInputError("heuristic needs n >= 1");
  if (beam < 1 || beam > 10000)
    throw InvalidInputError("beam must be in 1..10000");
  if (n > kCensusDefaultMaxN)
    throw ResourceLimitError(
        "heuristic scores candidates by census; n capped at " +
        std::to_string(kCensusDefaultMaxN));

  std::mt19937_64 rng(seed);
  const CensusOptions inner{.threads = 1, .max_n = kCensusDefaultMaxN};
  std::vector<HeuristicResult> results;
  results.reserve(static_cast<size_t>(beam));

  for (int s = 0; s < beam; ++s) {
    // Hand-rolled shuffle: identical output for a given seed everywhere.
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      const size_t j = static_cast<size_t>(rng() %
                                           static_cast<std::uint64_t>(i + 1));
      std::swap(e[static_cast<size_t>(i)], e[j]);
    }

    long long score = distance_score(Permutation(std::vector<int>(e)));
    // Steepest ascent: always move to the best-scoring swap neighbor.
    while (true) {
      long long best = score;
      int bi = -1, bj = -1;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          std::swap(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)]);
          const long long cand =
              distance_score(Permutation(std::vector<int>(e)));
          std::swap(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)]);
          if (cand > best) {
            best = cand;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) break;
      std::swap(e[static_cast<size_t>(bi)], e[static_cast<size_t>(bj)]);
      score = best;
    }

    Permutation p(std::move(e));
    const std::uint64_t total = census(p, inner).total;
    results.push_back(HeuristicResult{std::move(p), score, total});
  }

  std::sort(results.begin(), results.end(),
            [](const HeuristicResult& a, const HeuristicResult& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.census_total != b.census_total)
                return a.census_total > b.census_total;
              return a.p < b.p;
            });
  return results;
}

}  // namespace permpat
