#include "permpat/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "permpat/constructions.hpp"
#include "permpat/errors.hpp"
#include "permpat/version.hpp"

namespace permpat {

namespace {

BigInt big_factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::string quoted(const Permutation& p) { return '"' + p.to_string() + '"'; }

// Right-aligned columns joined by two spaces; empty cells already hold "-".
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out.append(width[i] - row[i].size(), ' ');
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

bool is_square(int n, int& root) {
  const int r = static_cast<int>(std::lround(std::sqrt(double(n))));
  for (int c = std::max(1, r - 1); c <= r + 1; ++c) {
    if (c * c == n) {
      root = c;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string census_csv(const CensusResult& r) {
  std::string out = "length,distinct_patterns,cap_binomial,cap_factorial\n";
  for (int k = 1; k <= r.n; ++k) {
    out += std::to_string(k) + ',' +
           std::to_string(r.per_length[static_cast<size_t>(k - 1)]) + ',' +
           binomial(r.n, k).str() + ',' + big_factorial(k).str() + '\n';
  }
  out += "total," + std::to_string(r.total) + ",,\n";
  return out;
}

std::string census_report(const Permutation& p, const CensusResult& r) {
  std::string out = std::string(kVersionLine) + '\n';
  out += "input: " + p.to_string() + '\n';
  out += "n: " + std::to_string(r.n) + '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"length", "distinct", "cap_binomial", "cap_factorial"});
  for (int k = 1; k <= r.n; ++k)
    rows.push_back({std::to_string(k),
                    std::to_string(r.per_length[static_cast<size_t>(k - 1)]),
                    binomial(r.n, k).str(), big_factorial(k).str()});
  out += aligned(rows);
  out += "total distinct nonempty patterns: " + std::to_string(r.total) + '\n';
  if (r.n >= 3)
    out += "interior total (lengths 2.." + std::to_string(r.n - 1) +
           ", drops the two forced classes): " +
           std::to_string(r.interior_total()) + '\n';
  out += "subset cap: 2^" + std::to_string(r.n) + " - 1 = " +
         ((BigInt(1) << r.n) - 1).str() +
         " (nonempty subsequences; the empty pattern is never counted)\n";
  return out;
}

std::string distinctness_csv(const std::vector<DistinctnessReport>& reports) {
  std::string out = "k,n,family_size,distinct,theorem_bound,ok\n";
  for (const auto& r : reports) {
    const int n = r.k * r.k;
    const double bound = theorem_bound(n);
    const bool ok =
        r.all_distinct && static_cast<double>(r.family_size) > bound;
    out += std::to_string(r.k) + ',' + std::to_string(n) + ',' +
           std::to_string(r.family_size) + ',' +
           std::to_string(r.distinct_patterns) + ',' + fmt_double(bound) +
           ',' + (ok ? "true" : "false") + '\n';
  }
  return out;
}

std::string distinctness_report(const DistinctnessReport& r) {
  const BoundReport chain = bound_chain(r.k);
  std::string out = std::string(kVersionLine) + '\n';
  out += "family check: k = " + std::to_string(r.k) +
         " (n = " + std::to_string(chain.n) + ")\n";
  out += "family size: " + std::to_string(r.family_size) + '\n';
  out += "distinct patterns: " + std::to_string(r.distinct_patterns) + '\n';
  out += std::string("all distinct: ") + (r.all_distinct ? "yes" : "no") + '\n';
  if (r.counterexample) {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
      }
      return s;
    };
    out += "counterexample positions: " + join(r.counterexample->first) +
           " | " + join(r.counterexample->second) + '\n';
  }
  out += "theorem bound 2^(n - 2 sqrt n)/sqrt n: " +
         fmt_double(chain.theorem_bound) + '\n';
  out += std::string("family exceeds bound: ") +
         (static_cast<double>(r.family_size) > chain.theorem_bound ? "yes"
                                                                   : "no") +
         '\n';
  out += "stirling estimate sqrt(2/pi) 2^((k-1)^2)/(k-1): " +
         fmt_double(chain.stirling_estimate) + '\n';
  out += "improved constant bound (2 sqrt 2/sqrt pi) 2^(n-2 sqrt n)/(sqrt n - 1): " +
         fmt_double(chain.improved_constant_bound) + '\n';
  out += "golden bound phi^n: " + fmt_double(chain.golden_bound) + '\n';
  out += "subset cap 2^n - 1: " + chain.cap.str() + '\n';
  return out;
}

std::string search_csv(const SearchRecord& r) {
  std::string out = "n,h,argmax_count,example_argmax\n";
  out += std::to_string(r.n) + ',' + std::to_string(r.h_value) + ',' +
         std::to_string(r.argmax.size()) + ',' +
         (r.argmax.empty() ? std::string() : quoted(r.argmax.front())) + '\n';
  return out;
}

std::string search_report(const SearchRecord& r) {
  std::string out = std::string(kVersionLine) + '\n';
  out += "search n: " + std::to_string(r.n) + '\n';
  out += "h(" + std::to_string(r.n) + ") = " + std::to_string(r.h_value) + '\n';
  out += "orbit classes examined: " + std::to_string(r.classes_examined) + '\n';
  out += "canonical maximizers (" + std::to_string(r.argmax.size()) + "):\n";
  for (const auto& p : r.argmax) out += "  " + p.to_string() + '\n';
  return out;
}

std::string h_difference_csv(const HDifferenceReport& r) {
  std::string out = "n,h,diff\n";
  for (int n = 1; n <= r.n_max; ++n) {
    out += std::to_string(n) + ',' +
           std::to_string(r.h[static_cast<size_t>(n - 1)]) + ',';
    if (n >= 2)
      out += std::to_string(r.differences[static_cast<size_t>(n - 2)]);
    out += '\n';
  }
  return out;
}

std::string h_difference_text(const HDifferenceReport& r) {
  std::string out = std::string(kVersionLine) + '\n';
  out += "h values and first differences up to n = " + std::to_string(r.n_max) +
         '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "h", "diff"});
  for (int n = 1; n <= r.n_max; ++n)
    rows.push_back({std::to_string(n),
                    std::to_string(r.h[static_cast<size_t>(n - 1)]),
                    n >= 2 ? std::to_string(
                                 r.differences[static_cast<size_t>(n - 2)])
                           : std::string("-")});
  out += aligned(rows);
  out += std::string("monotone increasing: ") + (r.monotone ? "yes" : "no") +
         '\n';
  return out;
}

namespace {

struct BoundsRow {
  std::string cap, log2_cap, golden, log2_golden, theorem, log2_theorem;
  std::string improved, log2_improved, measured, measured_kind;
};

BoundsRow bounds_row(int n, const BoundsTableOptions& opts) {
  BoundsRow row;
  const double log2_phi = std::log2(std::numbers::phi);
  row.cap = n <= opts.exact_max ? ((BigInt(1) << n) - 1).str() : "";
  row.log2_cap = fmt_double(n);
  const double lg = n * log2_phi;
  row.log2_golden = fmt_double(lg);
  if (lg < 1023) row.golden = fmt_double(std::pow(std::numbers::phi, n));
  const double lt = theorem_bound_log2(n);
  row.log2_theorem = fmt_double(lt);
  if (lt < 1023) row.theorem = fmt_double(theorem_bound(n));
  if (n >= 2) {
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double li = std::log2(2.0 * std::sqrt(2.0) /
                                std::sqrt(std::numbers::pi)) +
                      (n - 2.0 * sqrt_n) - std::log2(sqrt_n - 1.0);
    row.log2_improved = fmt_double(li);
    if (li < 1023)
      row.improved = fmt_double(
          (2.0 * std::sqrt(2.0) / std::sqrt(std::numbers::pi)) *
          std::exp2(n - 2.0 * sqrt_n) / (sqrt_n - 1.0));
  }

  // Measured column: the best desk-scale value available at this n.
  std::uint64_t measured = 0;
  std::string kind;
  const CensusOptions copts{.threads = 0, .max_n = kCensusDefaultMaxN};
  if (n <= opts.measure_h_max) {
    measured = search_h(n).h_value;
    kind = "h";
  }
  if (n == 15 && opts.measure_f_max >= 15) {
    const std::uint64_t f = census(record15(), copts).total;
    if (f > measured) {
      measured = f;
      kind = "f_record15";
    }
  }
  int root = 0;
  if (n <= opts.measure_f_max && is_square(n, root) && root >= 2) {
    const std::uint64_t f = census(coleman_permutation(root).body, copts).total;
    if (f > measured) {
      measured = f;
      kind = "f_coleman";
    }
  }
  if (n <= opts.measure_f_max) {
    const std::uint64_t f = census(wilf_permutation(n), copts).total;
    if (f > measured) {
      measured = f;
      kind = "f_wilf";
    }
  }
  if (!kind.empty()) row.measured = std::to_string(measured);
  row.measured_kind = kind;
  return row;
}

void validate_bounds_options(const BoundsTableOptions& opts) {
  if (opts.n_max < 1 || opts.n_max > 100000)
    throw InvalidInputError("bounds table n_max must be in 1..100000");
  if (opts.measure_h_max < 0 || opts.measure_h_max > kSearchFreeMaxN)
    throw InvalidInputError("measured h capped at n = " +
                            std::to_string(kSearchFreeMaxN));
  if (opts.measure_f_max < 0 || opts.measure_f_max > kCensusDefaultMaxN)
    throw InvalidInputError("measured f capped at n = " +
                            std::to_string(kCensusDefaultMaxN));
  if (opts.exact_max < 0 || opts.exact_max > 4000)
    throw InvalidInputError("exact cap column limited to n <= 4000");
}

}  // namespace

std::string bounds_table_csv(const BoundsTableOptions& opts) {
  validate_bounds_options(opts);
  std::string out =
      "n,cap,log2_cap,golden,log2_golden,theorem,log2_theorem,improved,"
      "log2_improved,measured,measured_kind\n";
  for (int n = 1; n <= opts.n_max; ++n) {
    const BoundsRow r = bounds_row(n, opts);
    out += std::to_string(n) + ',' + r.cap + ',' + r.log2_cap + ',' +
           r.golden + ',' + r.log2_golden + ',' + r.theorem + ',' +
           r.log2_theorem + ',' + r.improved + ',' + r.log2_improved + ',' +
           r.measured + ',' + r.measured_kind + '\n';
  }
  return out;
}

std::string bounds_table_text(const BoundsTableOptions& opts) {
  validate_bounds_options(opts);
  std::string out = std::string(kVersionLine) + '\n';
  out += "bounds up to n = " + std::to_string(opts.n_max) +
         " (cap 2^n - 1, golden phi^n, theorem 2^(n-2 sqrt n)/sqrt n, "
         "improved constant variant; log2 columns carry on past double "
         "range)\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "cap", "golden", "theorem", "improved", "log2_theorem",
                  "measured", "kind"});
  auto dash = [](const std::string& s) { return s.empty() ? "-" : s; };
  for (int n = 1; n <= opts.n_max; ++n) {
    const BoundsRow r = bounds_row(n, opts);
    rows.push_back({std::to_string(n), dash(r.cap), dash(r.golden),
                    dash(r.theorem), dash(r.improved), dash(r.log2_theorem),
                    dash(r.measured), dash(r.measured_kind)});
  }
  out += aligned(rows);
  return out;
}

std::string heuristic_csv(int n, int beam, std::uint64_t seed,
                          const std::vector<HeuristicResult>& results) {
  (void)n;
  (void)beam;
  (void)seed;
  std::string out = "rank,score,census_total,permutation\n";
  for (size_t i = 0; i < results.size(); ++i)
    out += std::to_string(i + 1) + ',' + std::to_string(results[i].score) +
           ',' + std::to_string(results[i].census_total) + ',' +
           quoted(results[i].p) + '\n';
  return out;
}

std::string heuristic_text(int n, int beam, std::uint64_t seed,
                           const std::vector<HeuristicResult>& results) {
  std::string out = std::string(kVersionLine) + '\n';
  out += "heuristic ranking by pairwise distance score (exploration aid, no "
         "optimality claim)\n";
  out += "n: " + std::to_string(n) + "  beam: " + std::to_string(beam) +
         "  seed: " + std::to_string(seed) + '\n';
  const long long constant =
      static_cast<long long>(n) * (static_cast<long long>(n) * n - 1) / 3;
  out += "note: the score is n(n^2-1)/3 = " + std::to_string(constant) +
         " for every permutation of length " + std::to_string(n) +
         ", so ties fall back to census totals\n";
  int root = 0;
  if (is_square(n, root) && root >= 2)
    out += "reference construction (k = " + std::to_string(root) +
           "): score " +
           std::to_string(distance_score(coleman_permutation(root).body)) +
           '\n';
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"rank", "score", "census_total", "permutation"});
  for (size_t i = 0; i < results.size(); ++i)
    rows.push_back({std::to_string(i + 1), std::to_string(results[i].score),
                    std::to_string(results[i].census_total),
                    results[i].p.to_string()});
  out += aligned(rows);
  return out;
}

}  // namespace permpat
