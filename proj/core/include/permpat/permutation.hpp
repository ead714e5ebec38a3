#pragma once

#include <compare>
#include <string>
#include <vector>

namespace permpat {

// A permutation of 1..n. Values and positions are 1-based at every interface;
// operator[] takes a 1-based position.
class Permutation {
 public:
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  // One-line text format: space-separated 1-based values, e.g. "3 6 9 2 5 8 1 4 7".
  static Permutation parse(const std::string& line);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int pos) const { return entries_[pos - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

// A pattern is a permutation in reduced (canonical) form; the alias marks
// intent at interfaces.
using Pattern = Permutation;

// Ranks of the values: output_i < output_j iff input_i < input_j, values 1..k.
Pattern reduce(const std::vector<int>& subsequence);

bool identically_ordered(const std::vector<int>& a, const std::vector<int>& b);

// True iff some subsequence of p reduces to q. Backtracking with value-window
// pruning; exponential worst case, fine at desk scale.
bool contains(const Permutation& p, const Pattern& q);

Permutation complement(const Permutation& p);  // p_i -> n - p_i + 1
Permutation reverse(const Permutation& p);
Permutation inverse(const Permutation& p);

// 1-based positions i < n with p_i > p_{i+1}, ascending.
std::vector<int> descents(const Permutation& p);

}  // namespace permpat
