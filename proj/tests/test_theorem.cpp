#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "permpat/census.hpp"
#include "permpat/constructions.hpp"
#include "permpat/errors.hpp"
#include "permpat/fingerprint.hpp"
#include "permpat/theorem.hpp"

using namespace permpat;

TEST_CASE("exact binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(25, 12) == 5200300);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("log2 binomial tracks the exact value") {
  const double exact = std::log2(binomial(100, 50).convert_to<double>());
  CHECK(std::abs(log2_binomial(100, 50) - exact) < 1e-9);
  CHECK(log2_binomial(10, 11) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("family spec pins required and free positions") {
  const RestrictedFamilySpec s2 = restricted_family_spec(2);
  CHECK(s2.required_positions == std::vector<int>{1, 2, 3});
  CHECK(s2.free_positions == std::vector<int>{4});
  CHECK(s2.choose == 0);
  CHECK(s2.member_length == 3);

  const RestrictedFamilySpec s3 = restricted_family_spec(3);
  CHECK(s3.required_positions == std::vector<int>{1, 2, 3, 4, 7});
  CHECK(s3.free_positions == std::vector<int>{5, 6, 8, 9});
  CHECK(s3.choose == 2);
  CHECK(s3.member_length == 7);

  CHECK_THROWS_AS(restricted_family_spec(1), InvalidInputError);
}

TEST_CASE("family sizes follow the binomial formula") {
  CHECK(restricted_family_size(2) == 1);
  CHECK(restricted_family_size(3) == 6);
  CHECK(restricted_family_size(4) == 126);
  CHECK(restricted_family_size(5) == 12870);
  CHECK(restricted_family_size(6) == 5200300);
}

TEST_CASE("family enumeration is lexicographic and complete") {
  std::vector<std::vector<int>> members;
  restricted_family(3, [&](const std::vector<int>& m) { members.push_back(m); });
  REQUIRE(members.size() == 6);
  CHECK(members.front() == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(members.back() == std::vector<int>{1, 2, 3, 4, 7, 8, 9});
  const RestrictedFamilySpec spec = restricted_family_spec(3);
  for (const auto& m : members) {
    CHECK(std::is_sorted(m.begin(), m.end()));
    CHECK(std::includes(m.begin(), m.end(), spec.required_positions.begin(),
                        spec.required_positions.end()));
    CHECK(m.size() == 7);
  }
  CHECK_THROWS_AS(restricted_family(7, [](const std::vector<int>&) {}),
                  ResourceLimitError);
}

TEST_CASE("family members reduce to pairwise distinct patterns") {
  for (int k = 2; k <= 5; ++k) {
    const DistinctnessReport r = verify_distinctness(k);
    CHECK(r.k == k);
    CHECK(r.family_size == restricted_family_size(k));
    CHECK(r.distinct_patterns == r.family_size);
    CHECK(r.all_distinct);
    CHECK_FALSE(r.counterexample.has_value());
  }
  CHECK_THROWS_AS(verify_distinctness(1), InvalidInputError);
  CHECK_THROWS_AS(verify_distinctness(7), ResourceLimitError);
}

TEST_CASE("distinctness verification is thread-count independent") {
  const DistinctnessReport a = verify_distinctness(4, 1);
  const DistinctnessReport b = verify_distinctness(4, 5);
  CHECK(a.family_size == b.family_size);
  CHECK(a.distinct_patterns == b.distinct_patterns);
  CHECK(a.all_distinct == b.all_distinct);
}

TEST_CASE("family patterns really occur in the segment permutation") {
  const Permutation body = coleman_permutation(3).body;
  const auto len7 = distinct_patterns_of_length(body, 7);
  std::set<PatternFingerprint> have(len7.begin(), len7.end());
  restricted_family(3, [&](const std::vector<int>& m) {
    std::vector<int> values;
    for (int pos : m) values.push_back(body[pos]);
    CHECK(have.count(encode_fingerprint(reduce(values))) == 1);
  });
}

TEST_CASE("member descents sit exactly before the later perigees") {
  for (int k = 2; k <= 4; ++k) {
    const Permutation body = coleman_permutation(k).body;
    std::set<int> perigee_pos;
    for (int j = 2; j <= k; ++j) perigee_pos.insert((j - 1) * k + 1);
    restricted_family(k, [&](const std::vector<int>& m) {
      std::vector<int> values;
      for (int pos : m) values.push_back(body[pos]);
      std::vector<int> expected;
      for (size_t i = 1; i < m.size(); ++i)
        if (perigee_pos.count(m[i])) expected.push_back(static_cast<int>(i));
      CHECK(descents(reduce(values)) == expected);
    });
  }
}

TEST_CASE("closed-form bound values") {
  CHECK(theorem_bound(9) == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(theorem_bound(16) == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(theorem_bound(25) == doctest::Approx(6553.6).epsilon(1e-12));
  CHECK(theorem_bound_log2(25) ==
        doctest::Approx(std::log2(6553.6)).epsilon(1e-12));
  CHECK_THROWS_AS(theorem_bound(0), InvalidInputError);
}

TEST_CASE("bound chain at small k") {
  const BoundReport r3 = bound_chain(3);
  CHECK(r3.n == 9);
  CHECK(r3.family_count == 6);
  CHECK(r3.theorem_bound == doctest::Approx(8.0 / 3.0));
  CHECK(r3.stirling_estimate == doctest::Approx(6.38308).epsilon(1e-5));
  CHECK(r3.golden_bound == doctest::Approx(std::pow((1 + std::sqrt(5.0)) / 2, 9)));
  CHECK(r3.cap == 511);
  CHECK(r3.family_exceeds_theorem);
  CHECK(r3.improved_exceeds_theorem);
  CHECK(r3.family_within_cap);
  CHECK_FALSE(r3.family_exceeds_golden);

  for (int k = 2; k <= 10; ++k) {
    const BoundReport r = bound_chain(k);
    CHECK(r.family_exceeds_theorem);
    CHECK(r.improved_exceeds_theorem);
    CHECK(r.family_within_cap);
    // At n = k^2 the improved constant bound coincides with the Stirling
    // estimate of the family size.
    CHECK(r.improved_constant_bound ==
          doctest::Approx(r.stirling_estimate).epsilon(1e-9));
  }
  CHECK_FALSE(bound_chain(7).family_exceeds_golden);
  CHECK(bound_chain(8).family_exceeds_golden);
  CHECK(bound_chain(10).family_exceeds_golden);
  CHECK_THROWS_AS(bound_chain(1), InvalidInputError);
  CHECK_THROWS_AS(bound_chain(11), ResourceLimitError);
}

TEST_CASE("log2 bound chain extends past double range") {
  const BoundChainLog2 r = bound_chain_log2(20);
  CHECK(r.n == 400);
  CHECK(std::abs(r.log2_family - r.log2_stirling) < 1.0);
  CHECK(r.log2_theorem < r.log2_improved);
  CHECK(r.log2_improved < r.log2_family + 1.0);
  CHECK(r.log2_golden < r.log2_family);
  CHECK(r.log2_family < r.log2_cap);
  // Exact agreement with the big-integer count where both are available.
  const BoundChainLog2 small = bound_chain_log2(5);
  const double exact = std::log2(bound_chain(5).family_count.convert_to<double>());
  CHECK(small.log2_family == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("central binomial ratio approaches one from below") {
  const double r1 = central_binomial_stirling_ratio(1);
  const double r32 = central_binomial_stirling_ratio(32);
  const double r64 = central_binomial_stirling_ratio(64);
  CHECK(r1 == doctest::Approx(std::sqrt(std::acos(-1.0)) / 2).epsilon(1e-12));
  CHECK(r32 >= 0.98);
  CHECK(r32 < 1.0);
  CHECK(r64 > r32);
  CHECK(central_binomial_stirling_ratio(500) < 1.0);
  CHECK_THROWS_AS(central_binomial_stirling_ratio(0), InvalidInputError);
  CHECK_THROWS_AS(central_binomial_stirling_ratio(501), InvalidInputError);
}
