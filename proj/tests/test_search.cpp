#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "permpat/census.hpp"
#include "permpat/constructions.hpp"
#include "permpat/errors.hpp"
#include "permpat/search.hpp"

#include "oracle.hpp"

using namespace permpat;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("the symmetry orbit has order dividing eight") {
  const Permutation p({2, 4, 1, 3});
  const auto images = symmetry_images(p);
  REQUIRE(images.size() == 8);
  CHECK(images.front() == p);
  const std::set<Permutation> orbit(images.begin(), images.end());
  CHECK(8 % orbit.size() == 0);
  // Closure: applying any generator to any image stays inside.
  for (const auto& q : orbit) {
    CHECK(orbit.count(reverse(q)) == 1);
    CHECK(orbit.count(complement(q)) == 1);
    CHECK(orbit.count(inverse(q)) == 1);
  }
}

TEST_CASE("orbit representatives are lexicographic minima") {
  for (const auto& p : all_perms(5)) {
    const auto images = symmetry_images(p);
    const Permutation rep = orbit_representative(p);
    CHECK(rep == *std::min_element(images.begin(), images.end()));
    CHECK(is_orbit_representative(p) == (rep == p));
  }
}

TEST_CASE("census totals are constant on orbits") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_perms(n)) {
      const auto base = census(p).total;
      for (const auto& q : symmetry_images(p)) CHECK(census(q).total == base);
    }
}

TEST_CASE("maximum pattern counts are frozen for small lengths") {
  const std::vector<std::uint64_t> expected_h = {1, 2, 4, 8, 15, 28, 55};
  for (int n = 1; n <= 7; ++n) {
    const SearchRecord r = search_h(n);
    CHECK(r.n == n);
    CHECK(r.h_value == expected_h[static_cast<size_t>(n - 1)]);
    CHECK(std::is_sorted(r.argmax.begin(), r.argmax.end()));
    for (const auto& p : r.argmax) {
      CHECK(is_orbit_representative(p));
      CHECK(census(p).total == r.h_value);
    }
  }
  CHECK(search_h(3).argmax == std::vector<Permutation>{Permutation({1, 3, 2})});
  CHECK(search_h(4).argmax == std::vector<Permutation>{Permutation({2, 4, 1, 3})});
}

TEST_CASE("pruned search equals the pruning-free oracle") {
  for (int n = 1; n <= 6; ++n) {
    const SearchRecord r = search_h(n);
    const oracle::MaxSearch naive = oracle::max_over_sn(n);
    CHECK(r.h_value == naive.h);
    std::set<Permutation> naive_reps;
    for (const auto& v : naive.argmax)
      naive_reps.insert(orbit_representative(Permutation(v)));
    CHECK(std::set<Permutation>(r.argmax.begin(), r.argmax.end()) ==
          naive_reps);
  }
}

TEST_CASE("search results are thread-count independent") {
  const SearchRecord a = search_h(6, {.threads = 1});
  const SearchRecord b = search_h(6, {.threads = 3});
  CHECK(a.h_value == b.h_value);
  CHECK(a.argmax == b.argmax);
  CHECK(a.classes_examined == b.classes_examined);
}

TEST_CASE("search caps and the big gate") {
  CHECK_THROWS_AS(search_h(0), InvalidInputError);
  CHECK_THROWS_AS(search_h(10), ResourceLimitError);         // needs allow_big
  CHECK_THROWS_AS(search_h(13, {.allow_big = true}), ResourceLimitError);
}

TEST_CASE("difference report shows strictly growing maxima") {
  const HDifferenceReport r = h_difference_report(6);
  CHECK(r.n_max == 6);
  CHECK(r.h == std::vector<std::uint64_t>{1, 2, 4, 8, 15, 28});
  CHECK(r.differences == std::vector<std::int64_t>{1, 2, 4, 7, 13});
  CHECK(r.monotone);
}

TEST_CASE("distance score is the pair-sum constant") {
  for (int n = 1; n <= 6; ++n) {
    const long long expected =
        static_cast<long long>(n) * (static_cast<long long>(n) * n - 1) / 3;
    for (const auto& p : all_perms(n)) CHECK(distance_score(p) == expected);
  }
  CHECK(distance_score(coleman_permutation(3).body) == 240);
  CHECK(distance_score(wilf_permutation(10)) == 330);
}

TEST_CASE("certified lower bounds for the record length") {
  // Exhausting length 15 is out of reach; the record census itself is the
  // certificate that the maximum is at least as large.
  const std::uint64_t f_record = census(record15()).total;
  CHECK(f_record >= 16876);
  CHECK(census(wilf_permutation(15)).total <= f_record);
  CHECK(search_h(7).h_value >= census(wilf_permutation(7)).total);
  CHECK(search_h(9, {.threads = 2}).h_value >=
        census(coleman_permutation(3).body).total);
}

TEST_CASE("heuristic ranking is deterministic and honestly labeled") {
  const auto a = heuristic_top(7, 4, 99);
  const auto b = heuristic_top(7, 4, 99);
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == 4);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].score == b[i].score);
    CHECK(a[i].census_total == b[i].census_total);
    CHECK(a[i].score == 112);  // 7 * 48 / 3: the scorer cannot discriminate
    CHECK(a[i].census_total == census(a[i].p).total);
  }
  for (size_t i = 1; i < a.size(); ++i)
    CHECK(a[i - 1].census_total >= a[i].census_total);
  CHECK_THROWS_AS(heuristic_top(7, 0, 1), InvalidInputError);
  CHECK_THROWS_AS(heuristic_top(25, 3, 1), ResourceLimitError);
}
