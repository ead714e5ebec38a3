#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permpat/permpat.hpp"

namespace {

permpat::Permutation read_count_input(const std::vector<std::string>& words) {
  std::string line;
  if (!words.empty()) {
    for (size_t i = 0; i < words.size(); ++i) {
      if (i) line += ' ';
      line += words[i];
    }
  } else if (!std::getline(std::cin, line)) {
    throw permpat::InvalidInputError(
        "count needs a permutation argument or one line on standard input");
  }
  return permpat::Permutation::parse(line);
}

struct CountArgs {
  std::vector<std::string> words;
  bool csv = false;
  bool quiet = false;
  bool streamed = false;
  int threads = 0;
  int max_n = permpat::kCensusDefaultMaxN;
  std::string spill_dir;
};

int run_count(const CountArgs& a) {
  const permpat::Permutation p = read_count_input(a.words);
  permpat::CensusResult r;
  if (a.streamed) {
    permpat::StreamOptions opts;
    opts.threads = a.threads;
    opts.spill_dir = a.spill_dir;
    r = permpat::census_streamed(p, opts);
  } else {
    r = permpat::census(p, {.threads = a.threads, .max_n = a.max_n});
  }
  if (a.quiet)
    std::cout << r.total << '\n';
  else if (a.csv)
    std::cout << permpat::census_csv(r);
  else
    std::cout << permpat::census_report(p, r);
  return 0;
}

struct ConstructArgs {
  std::string which;
  int n = 0;
  int k = 0;
};

int run_construct(const ConstructArgs& a) {
  permpat::Permutation p = permpat::Permutation::identity(1);
  if (a.which == "wilf") {
    if (a.n < 1)
      throw permpat::InvalidInputError("construct wilf needs --n >= 1");
    p = permpat::wilf_permutation(a.n);
  } else if (a.which == "coleman") {
    if (a.k < 2)
      throw permpat::InvalidInputError("construct coleman needs --k >= 2");
    p = permpat::coleman_permutation(a.k).body;
  } else {
    p = permpat::record15();
  }
  std::cout << p.to_string() << '\n';
  return 0;
}

struct VerifyArgs {
  std::string family;
  int k = 3;
  int threads = 0;
  bool csv = false;
};

int run_verify(const VerifyArgs& a) {
  const permpat::DistinctnessReport r =
      permpat::verify_distinctness(a.k, a.threads);
  if (a.csv)
    std::cout << permpat::distinctness_csv({r});
  else
    std::cout << permpat::distinctness_report(r);
  return 0;
}

struct SearchArgs {
  int n = 0;
  bool big = false;
  bool csv = false;
  bool quiet = false;
  bool diff = false;
  int threads = 0;
};

int run_search(const SearchArgs& a) {
  const permpat::SearchOptions opts{.threads = a.threads, .allow_big = a.big};
  if (a.diff) {
    const permpat::HDifferenceReport r =
        permpat::h_difference_report(a.n, opts);
    std::cout << (a.csv ? permpat::h_difference_csv(r)
                        : permpat::h_difference_text(r));
    return 0;
  }
  const permpat::SearchRecord r = permpat::search_h(a.n, opts);
  if (a.quiet)
    std::cout << r.h_value << '\n';
  else if (a.csv)
    std::cout << permpat::search_csv(r);
  else
    std::cout << permpat::search_report(r);
  return 0;
}

struct BoundsArgs {
  permpat::BoundsTableOptions opts;
  bool csv = false;
};

int run_bounds(const BoundsArgs& a) {
  std::cout << (a.csv ? permpat::bounds_table_csv(a.opts)
                      : permpat::bounds_table_text(a.opts));
  return 0;
}

struct HeuristicArgs {
  int n = 0;
  int beam = 5;
  std::uint64_t seed = 1;
  bool csv = false;
};

int run_heuristic(const HeuristicArgs& a) {
  const std::vector<permpat::HeuristicResult> results =
      permpat::heuristic_top(a.n, a.beam, a.seed);
  std::cout << (a.csv ? permpat::heuristic_csv(a.n, a.beam, a.seed, results)
                      : permpat::heuristic_text(a.n, a.beam, a.seed, results));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinct-pattern counts, constructions, and bound checks for "
               "permutations"};
  app.set_version_flag("--version", std::string(permpat::kVersionLine));
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "count distinct patterns of a permutation");
  count->add_option("perm", count_args.words,
                    "permutation, e.g. \"3 1 2\" (else read from stdin)");
  count->add_flag("--csv", count_args.csv, "CSV output");
  count->add_flag("--quiet", count_args.quiet, "print the total only");
  count->add_flag("--streamed", count_args.streamed,
                  "external-memory census (n up to 28)");
  count->add_option("--threads", count_args.threads, "worker threads (0: auto)");
  count->add_option("--max-n", count_args.max_n, "in-memory length cap")
      ->check(CLI::Range(1, permpat::kCensusHardMaxN));
  count->add_option("--spill-dir", count_args.spill_dir,
                    "spill directory for --streamed");

  ConstructArgs construct_args;
  CLI::App* construct =
      app.add_subcommand("construct", "emit a named permutation");
  construct
      ->add_option("which", construct_args.which,
                   "one of: wilf, coleman, record15")
      ->required()
      ->check(CLI::IsMember({"wilf", "coleman", "record15"}));
  construct->add_option("--n", construct_args.n, "length for wilf");
  construct->add_option("--k", construct_args.k, "segment count for coleman");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check pairwise distinctness of the restricted family");
  verify->add_option("family", verify_args.family, "family name")
      ->required()
      ->check(CLI::IsMember({"coleman"}));
  verify->add_option("--k", verify_args.k, "segment count")->required();
  verify->add_option("--threads", verify_args.threads,
                     "worker threads (0: auto)");
  verify->add_flag("--csv", verify_args.csv, "CSV output");

  SearchArgs search_args;
  CLI::App* search =
      app.add_subcommand("search", "exhaustive h(n) search with symmetry pruning");
  search->add_option("--n", search_args.n, "permutation length")->required();
  search->add_flag("--big", search_args.big,
                   "allow n in 10..12 (minutes to hours)");
  search->add_flag("--diff", search_args.diff,
                   "report h(1..n) with first differences");
  search->add_flag("--csv", search_args.csv, "CSV output");
  search->add_flag("--quiet", search_args.quiet, "print h only");
  search->add_option("--threads", search_args.threads,
                     "worker threads (0: auto)");

  BoundsArgs bounds_args;
  CLI::App* bounds =
      app.add_subcommand("bounds", "bound-vs-measured comparison table");
  bounds->add_option("--n-max", bounds_args.opts.n_max, "last row");
  bounds->add_option("--measure-h", bounds_args.opts.measure_h_max,
                     "run the h search up to this n");
  bounds->add_option("--measure-f", bounds_args.opts.measure_f_max,
                     "census the constructions up to this n");
  bounds->add_option("--exact-max", bounds_args.opts.exact_max,
                     "exact 2^n - 1 column up to this n");
  bounds->add_flag("--csv", bounds_args.csv, "CSV output");

  HeuristicArgs heuristic_args;
  CLI::App* heuristic = app.add_subcommand(
      "heuristic", "rank random-restart swap ascents by distance score");
  heuristic->add_option("--n", heuristic_args.n, "permutation length")
      ->required();
  heuristic->add_option("--beam", heuristic_args.beam, "number of restarts");
  heuristic->add_option("--seed", heuristic_args.seed, "RNG seed");
  heuristic->add_flag("--csv", heuristic_args.csv, "CSV output");

  try {
    app.parse(argc, argv);
    if (*count) return run_count(count_args);
    if (*construct) return run_construct(construct_args);
    if (*verify) return run_verify(verify_args);
    if (*search) return run_search(search_args);
    if (*bounds) return run_bounds(bounds_args);
    if (*heuristic) return run_heuristic(heuristic_args);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const permpat::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const permpat::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const permpat::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
