#include "permpat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "permpat/errors.hpp"

namespace permpat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n < 1) throw InvalidInputError("permutation must have length at least 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : entries_) {
    if (v < 1 || v > n)
      throw InvalidInputError("value " + std::to_string(v) +
                              " outside 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v - 1)]++)
      throw InvalidInputError("duplicate value " + std::to_string(v));
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidInputError("identity length must be at least 1");
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> e;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInputError("not an integer: '" + tok + "'");
    }
    if (used != tok.size())
      throw InvalidInputError("not an integer: '" + tok + "'");
    e.push_back(v);
  }
  if (e.empty()) throw InvalidInputError("empty permutation text");
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string s;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(entries_[i]);
  }
  return s;
}

Pattern reduce(const std::vector<int>& subsequence) {
  const int k = static_cast<int>(subsequence.size());
  if (k < 1) throw InvalidInputError("cannot reduce an empty sequence");
  std::vector<int> order(static_cast<size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return subsequence[static_cast<size_t>(a)] <
                                       subsequence[static_cast<size_t>(b)]; });
  std::vector<int> ranks(static_cast<size_t>(k));
  for (int r = 0; r < k; ++r) {
    int idx = order[static_cast<size_t>(r)];
    if (r > 0 && subsequence[static_cast<size_t>(idx)] ==
                     subsequence[static_cast<size_t>(order[static_cast<size_t>(r - 1)])])
      throw InvalidInputError("duplicate value in sequence");
    ranks[static_cast<size_t>(idx)] = r + 1;
  }
  return Pattern(std::move(ranks));
}

bool identically_ordered(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  return reduce(a) == reduce(b);
}

namespace {

// For each pattern index j, the indices (or -1) of the tightest earlier
// entries below and above q_j; a candidate match only needs two comparisons.
struct ContainsPlan {
  std::vector<int> lower;
  std::vector<int> upper;
};

ContainsPlan make_plan(const Pattern& q) {
  const int k = q.size();
  ContainsPlan plan{std::vector<int>(static_cast<size_t>(k), -1),
                    std::vector<int>(static_cast<size_t>(k), -1)};
  for (int j = 1; j < k; ++j) {
    int lo = -1, hi = -1;
    for (int i = 0; i < j; ++i) {
      if (q[i + 1] < q[j + 1]) {
        if (lo < 0 || q[i + 1] > q[lo + 1]) lo = i;
      } else {
        if (hi < 0 || q[i + 1] < q[hi + 1]) hi = i;
      }
    }
    plan.lower[static_cast<size_t>(j)] = lo;
    plan.upper[static_cast<size_t>(j)] = hi;
  }
  return plan;
}

bool match_from(const Permutation& p, const Pattern& q, const ContainsPlan& plan,
                std::vector<int>& chosen, int j, int pos) {
  const int n = p.size();
  const int k = q.size();
  if (j == k) return true;
  for (int i = pos; i <= n - (k - j) + 1; ++i) {
    int v = p[i];
    int lo = plan.lower[static_cast<size_t>(j)];
    if (lo >= 0 && v <= chosen[static_cast<size_t>(lo)]) continue;
    int hi = plan.upper[static_cast<size_t>(j)];
    if (hi >= 0 && v >= chosen[static_cast<size_t>(hi)]) continue;
    chosen[static_cast<size_t>(j)] = v;
    if (match_from(p, q, plan, chosen, j + 1, i + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& p, const Pattern& q) {
  if (q.size() > p.size()) return false;
  ContainsPlan plan = make_plan(q);
  std::vector<int> chosen(static_cast<size_t>(q.size()), 0);
  return match_from(p, q, plan, chosen, 0, 1);
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> e;
  e.reserve(static_cast<size_t>(n));
  for (int v : p.entries()) e.push_back(n - v + 1);
  return Permutation(std::move(e));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> e(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) e[static_cast<size_t>(p[i] - 1)] = i;
  return Permutation(std::move(e));
}

std::vector<int> descents(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i)
    if (p[i] > p[i + 1]) d.push_back(i);
  return d;
}

}  // namespace permpat
