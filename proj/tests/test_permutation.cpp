#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <doctest.h>

#include "permpat/errors.hpp"
#include "permpat/fingerprint.hpp"
#include "permpat/permutation.hpp"

using namespace permpat;

namespace {

// All permutations of 1..n, lexicographic.
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

TEST_CASE("construction validates rearrangements of 1..n") {
  CHECK(Permutation({3, 1, 2}).size() == 3);
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidInputError);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidInputError);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidInputError);
  CHECK_THROWS_AS(Permutation({}), InvalidInputError);
}

TEST_CASE("parse accepts the one-line format and nothing else") {
  CHECK(Permutation::parse("3 6 9 2 5 8 1 4 7").size() == 9);
  CHECK(Permutation::parse("1") == Permutation({1}));
  CHECK(Permutation::parse("  2  1 ") == Permutation({2, 1}));
  CHECK_THROWS_AS(Permutation::parse(""), InvalidInputError);
  CHECK_THROWS_AS(Permutation::parse("a b"), InvalidInputError);
  CHECK_THROWS_AS(Permutation::parse("1 2 x"), InvalidInputError);
  CHECK_THROWS_AS(Permutation::parse("1 1"), InvalidInputError);
  CHECK_THROWS_AS(Permutation::parse("2 4 1"), InvalidInputError);
  CHECK_THROWS_AS(Permutation::parse("1.5 2"), InvalidInputError);
}

TEST_CASE("to_string round-trips through parse") {
  const Permutation p({5, 3, 1, 4, 2});
  CHECK(p.to_string() == "5 3 1 4 2");
  CHECK(Permutation::parse(p.to_string()) == p);
}

TEST_CASE("indexing is 1-based") {
  const Permutation p({4, 1, 3, 2});
  CHECK(p[1] == 4);
  CHECK(p[4] == 2);
  CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
}

TEST_CASE("reduce maps values to ranks") {
  CHECK(reduce({3, 6, 9}) == Permutation({1, 2, 3}));
  CHECK(reduce({5, 12, 2}) == Permutation({2, 3, 1}));
  CHECK(reduce({4, 2, 7}) == Permutation({2, 1, 3}));
  CHECK(reduce({42}) == Permutation({1}));
  CHECK_THROWS_AS(reduce({2, 2}), InvalidInputError);
  CHECK_THROWS_AS(reduce({}), InvalidInputError);
}

TEST_CASE("identically_ordered matches pairwise comparisons") {
  CHECK(identically_ordered({3, 6, 9}, {2, 5, 8}));
  CHECK(identically_ordered({1}, {7}));
  CHECK_FALSE(identically_ordered({1, 2}, {2, 1}));
  CHECK_FALSE(identically_ordered({1, 2}, {1, 2, 3}));
  CHECK(identically_ordered({5, 12, 2, 7}, {4, 9, 1, 6}));
}

TEST_CASE("containment finds order-isomorphic subsequences") {
  const Permutation p({3, 6, 9, 2, 5, 8, 1, 4, 7});
  CHECK(contains(p, Pattern({3, 1, 2})));
  CHECK(contains(p, Pattern({1, 2, 3})));
  CHECK(contains(p, p));
  CHECK_FALSE(contains(Permutation::identity(5), Pattern({2, 1})));
  CHECK_FALSE(contains(Permutation({2, 1}), Pattern({1, 2, 3})));
  // Longest decreasing subsequence takes one entry per ascending run: 3.
  CHECK_FALSE(contains(p, Pattern({4, 3, 2, 1})));
}

TEST_CASE("containment agrees with brute force on small cases") {
  const auto perms5 = all_perms(5);
  const auto pats3 = all_perms(3);
  for (const auto& p : perms5) {
    for (const auto& q : pats3) {
      bool naive = false;
      for (int a = 1; a <= 5 && !naive; ++a)
        for (int b = a + 1; b <= 5 && !naive; ++b)
          for (int c = b + 1; c <= 5 && !naive; ++c)
            naive = reduce({p[a], p[b], p[c]}) == q;
      CHECK(contains(p, q) == naive);
    }
  }
}

TEST_CASE("symmetries are involutions and commute as expected") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_perms(n)) {
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(inverse(inverse(p)) == p);
      CHECK(reverse(complement(p)) == complement(reverse(p)));
    }
  }
}

TEST_CASE("inverse swaps positions and values") {
  const Permutation p({2, 3, 1});
  CHECK(inverse(p) == Permutation({3, 1, 2}));
  for (const auto& q : all_perms(5)) {
    const Permutation inv = inverse(q);
    for (int i = 1; i <= 5; ++i) CHECK(inv[q[i]] == i);
  }
}

TEST_CASE("containment is preserved by each symmetry") {
  const auto pats = all_perms(3);
  for (const auto& p : all_perms(5)) {
    for (const auto& q : pats) {
      const bool base = contains(p, q);
      CHECK(contains(reverse(p), reverse(q)) == base);
      CHECK(contains(complement(p), complement(q)) == base);
      CHECK(contains(inverse(p), inverse(q)) == base);
    }
  }
}

TEST_CASE("descents are the down-steps") {
  CHECK(descents(Permutation::identity(5)).empty());
  CHECK(descents(Permutation({1, 6, 2, 5, 3, 4})) == std::vector<int>{2, 4});
  CHECK(descents(Permutation({4, 3, 2, 1})) == std::vector<int>{1, 2, 3});
  CHECK(descents(Permutation({1})).empty());
}

TEST_CASE("fingerprint encodes the identity of length 1 as zero") {
  const PatternFingerprint f = encode_fingerprint(Pattern({1}));
  CHECK(f.code == 0);
  CHECK(f.length == 1);
}

TEST_CASE("fingerprint digits follow the inversion-count definition") {
  CHECK(encode_fingerprint(Pattern({1, 2})).code == 0);
  CHECK(encode_fingerprint(Pattern({2, 1})).code == 1);
  CHECK(encode_fingerprint(Pattern({3, 1, 2})).code == 3);
  CHECK(decode_fingerprint({3, 3}) == Pattern({3, 1, 2}));
}

TEST_CASE("fingerprints round-trip for every pattern up to length 7") {
  for (int k = 1; k <= 7; ++k) {
    std::set<std::uint64_t> codes;
    for (const auto& p : all_perms(k)) {
      const PatternFingerprint f = encode_fingerprint(p);
      CHECK(f.length == k);
      CHECK(f.code < kFactorial[k]);
      codes.insert(f.code);
      CHECK(decode_fingerprint(f) == p);
    }
    CHECK(codes.size() == static_cast<size_t>(kFactorial[k]));
  }
}

TEST_CASE("fingerprints refuse lengths past the 64-bit factorial range") {
  std::vector<int> v(21);
  std::iota(v.begin(), v.end(), 1);
  CHECK_THROWS_AS(encode_fingerprint(Pattern(v)), CapacityError);
  CHECK_THROWS_AS(decode_fingerprint({0, 21}), InvalidInputError);
  CHECK_THROWS_AS(decode_fingerprint({0, 0}), InvalidInputError);
  CHECK_THROWS_AS(decode_fingerprint({6, 3}), InvalidInputError);  // 6 = 3!
}

TEST_CASE("length-20 fingerprints stay in range") {
  std::vector<int> v(20);
  std::iota(v.begin(), v.end(), 1);
  std::reverse(v.begin(), v.end());
  const PatternFingerprint f = encode_fingerprint(Pattern(v));
  CHECK(f.code == kFactorial[20] - 1);  // the reversal maxes every digit
  CHECK(decode_fingerprint(f) == Pattern(v));
  CHECK_THROWS_AS(decode_fingerprint({kFactorial[20], 20}), InvalidInputError);
}
