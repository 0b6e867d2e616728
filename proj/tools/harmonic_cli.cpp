// Command-line front end for the harmonic-number library.
//
// Subcommands:
//   eval N        print the full exact dossier (divisor counts, divisor sums,
//                 all nine means, flags) for a single integer
//   classify N... print the flag list for one or more integers
//   search        stream matching records over a range, optionally
//                 checkpointed and multi-threaded (output order and bytes are
//                 independent of --jobs)
//   verify        run the built-in theorem and classical-fact checkers
//   report        run the bi-unitary harmonic census over a range
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error, 3 runtime error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harmonic/harmonic.hpp"

namespace {

using harmonic::u64;

struct EvalArgs {
  u64 n = 0;
  std::string format = "text";
};

struct ClassifyArgs {
  std::vector<u64> numbers;
  std::vector<std::string> predicates;
};

struct SearchArgs {
  u64 min = 1;
  u64 max = 0;
  std::vector<std::string> predicates;
  std::string shape;
  unsigned jobs = 1;
  u64 segment_size = harmonic::kDefaultSegmentSize;
  std::string checkpoint;
  bool resume = false;
  std::string format = "table";
  bool include_one = false;
  bool progress = false;
  u64 max_segments = 0;
};

struct VerifyArgs {
  bool all = false;
  int theorem = 0;  // 0: not selected
  bool classical = false;
  u64 bound = 1000000;
  u64 prime_bound = 1000;
  unsigned kmax = 4;
  std::string format = "text";
};

struct ReportArgs {
  u64 max = 1000000;
  unsigned jobs = 1;
  u64 segment_size = harmonic::kDefaultSegmentSize;
  std::string format = "text";
  bool progress = false;
};

int run_eval(const EvalArgs& args) {
  const harmonic::NumberProfile p = harmonic::profile_of(args.n);
  if (args.format == "text") {
    std::cout << harmonic::render_profile_text(p);
    return 0;
  }
  const harmonic::OutputFormat fmt = harmonic::parse_output_format(args.format);
  if (fmt == harmonic::OutputFormat::Csv) std::cout << harmonic::record_csv_header() << '\n';
  if (fmt == harmonic::OutputFormat::Table) std::cout << harmonic::record_table_header() << '\n';
  std::cout << harmonic::render_record(p, fmt) << '\n';
  return 0;
}

int run_classify(const ClassifyArgs& args) {
  std::vector<harmonic::PredicateTerm> terms;
  terms.reserve(args.predicates.size());
  for (const std::string& text : args.predicates) {
    terms.push_back(harmonic::parse_predicate_term(text));
  }
  for (u64 n : args.numbers) {
    const harmonic::NumberProfile p = harmonic::profile_of(n);
    std::cout << n << ": ";
    if (terms.empty()) {
      const std::string flags = harmonic::flags_str(p, ',');
      std::cout << (flags.empty() ? "-" : flags) << '\n';
      continue;
    }
    bool first = true;
    for (const harmonic::PredicateTerm& term : terms) {
      bool value = harmonic::profile_predicate(p, term.tag);
      if (term.negated) value = !value;
      if (!first) std::cout << ' ';
      first = false;
      std::cout << term.str() << '=' << (value ? "yes" : "no");
    }
    std::cout << '\n';
  }
  return 0;
}

int run_search(const SearchArgs& args) {
  harmonic::SearchQuery query;
  query.lo = args.min;
  query.hi = args.max;
  for (const std::string& text : args.predicates) {
    query.predicates.push_back(harmonic::parse_predicate_term(text));
  }
  if (!args.shape.empty()) query.shape = harmonic::ShapePattern::parse(args.shape);
  query.include_one = args.include_one;
  query.validate();

  harmonic::SearchOptions options;
  options.workers = args.jobs == 0 ? 1 : args.jobs;
  options.segment_size = args.segment_size;
  options.checkpoint_path = args.checkpoint;
  options.resume = args.resume;
  options.max_segments = args.max_segments;
  if (args.progress) {
    const u64 hi = query.hi;
    options.on_segment = [hi](u64 next_unscanned, u64 hits) {
      std::fprintf(stderr, "progress: scanned up to %llu of %llu, %llu hits\n",
                   static_cast<unsigned long long>(next_unscanned - 1),
                   static_cast<unsigned long long>(hi),
                   static_cast<unsigned long long>(hits));
    };
  }

  const harmonic::OutputFormat fmt = harmonic::parse_output_format(args.format);
  if (fmt == harmonic::OutputFormat::Csv) std::cout << harmonic::record_csv_header() << '\n';
  if (fmt == harmonic::OutputFormat::Table) std::cout << harmonic::record_table_header() << '\n';

  const harmonic::SearchSummary summary =
      harmonic::search(query, options, [&](const harmonic::NumberProfile& p) {
        std::cout << harmonic::render_record(p, fmt) << '\n';
      });
  std::cout.flush();
  std::cerr << harmonic::render_summary_text(summary);
  return 0;
}

int run_verify(const VerifyArgs& args) {
  std::vector<harmonic::VerificationOutcome> outcomes;
  const bool run_all = args.all || (args.theorem == 0 && !args.classical);
  if (run_all) {
    outcomes = harmonic::verify_all(args.bound, args.kmax);
  } else {
    if (args.theorem != 0) {
      switch (args.theorem) {
        case 1: outcomes.push_back(harmonic::verify_theorem1(std::min<u64>(args.bound, 1000000000))); break;
        case 2: outcomes.push_back(harmonic::verify_theorem2(args.bound)); break;
        case 3: outcomes.push_back(harmonic::verify_theorem3(std::min<u64>(args.bound, 1000000000))); break;
        case 4: outcomes.push_back(harmonic::verify_theorem4(args.prime_bound, args.bound)); break;
        case 5: outcomes.push_back(harmonic::verify_theorem5(args.bound)); break;
        case 6: outcomes.push_back(harmonic::verify_theorem6(args.bound)); break;
        case 7: outcomes.push_back(harmonic::verify_theorem7(args.bound)); break;
        default: throw std::invalid_argument("verify: --theorem expects 1..7");
      }
    }
    if (args.classical) outcomes.push_back(harmonic::verify_classical(args.bound, args.kmax));
  }

  bool all_passed = true;
  for (const harmonic::VerificationOutcome& o : outcomes) {
    all_passed = all_passed && o.passed;
    if (args.format == "jsonl") {
      std::cout << harmonic::render_outcome_jsonl(o) << '\n';
    } else {
      std::cout << harmonic::render_outcome_text(o);
    }
  }
  return all_passed ? 0 : 1;
}

int run_report(const ReportArgs& args) {
  harmonic::SearchOptions options;
  options.workers = args.jobs == 0 ? 1 : args.jobs;
  options.segment_size = args.segment_size;
  if (args.progress) {
    const u64 hi = args.max;
    options.on_segment = [hi](u64 next_unscanned, u64 hits) {
      std::fprintf(stderr, "progress: scanned up to %llu of %llu, %llu hits\n",
                   static_cast<unsigned long long>(next_unscanned - 1),
                   static_cast<unsigned long long>(hi),
                   static_cast<unsigned long long>(hits));
    };
  }
  const harmonic::CensusReport report = harmonic::census_report(args.max, options);
  if (args.format == "jsonl") {
    std::cout << harmonic::render_census_jsonl(report) << '\n';
  } else {
    std::cout << harmonic::render_census_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"exact arithmetic for harmonic-type numbers"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "print the exact dossier for one integer");
  eval->add_option("n", eval_args.n, "integer to evaluate (>= 1)")->required();
  eval->add_option("--format", eval_args.format, "text, table, jsonl, or csv")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "table", "jsonl", "csv"}));

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand("classify", "print flag lists for integers");
  classify->add_option("n", classify_args.numbers, "integers to classify")->required();
  classify->add_option("--pred", classify_args.predicates,
                       "predicate to test instead of listing flags (repeatable, '!' negates)");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "stream records matching predicates over a range");
  search->add_option("--min", search_args.min, "lower bound of the scan range")->default_val(1);
  search->add_option("--max", search_args.max, "upper bound of the scan range (<= 10^10)")->required();
  search->add_option("--pred", search_args.predicates,
                     "predicate name, prefix '!' to negate (repeatable, conjunction)");
  search->add_option("--shape", search_args.shape,
                     "exponent multiset filter, e.g. 2,2,1 for p^2*q^2*r");
  search->add_option("--jobs", search_args.jobs, "worker threads")
      ->envname("HARMONIC_JOBS")
      ->default_val(1);
  search->add_option("--segment-size", search_args.segment_size, "integers per work segment")
      ->default_val(harmonic::kDefaultSegmentSize);
  search->add_option("--checkpoint", search_args.checkpoint,
                     "checkpoint file, rewritten atomically after every merged segment");
  search->add_flag("--resume", search_args.resume, "resume from the checkpoint file");
  search->add_option("--format", search_args.format, "table, jsonl, or csv")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "jsonl", "csv"}));
  search->add_flag("--include-one", search_args.include_one, "emit n = 1 when it matches");
  search->add_flag("--progress", search_args.progress, "report per-segment progress on stderr");
  search->add_option("--max-segments", search_args.max_segments,
                     "stop after merging this many segments (testing aid)")
      ->group("");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run theorem and classical-fact checkers");
  verify->add_flag("--all", verify_args.all, "run every checker (default)");
  verify->add_option("--theorem", verify_args.theorem, "run one numbered checker (1..7)")
      ->check(CLI::Range(1, 7));
  verify->add_flag("--classical", verify_args.classical, "run the classical-fact checker");
  verify->add_option("--bound", verify_args.bound, "scan bound for range-based checks")
      ->default_val(1000000);
  verify->add_option("--prime-bound", verify_args.prime_bound,
                     "prime bound for the symbolic part of checker 4")
      ->default_val(1000);
  verify->add_option("--kmax", verify_args.kmax, "largest k for the k-harmonic sweep (2..8)")
      ->default_val(4);
  verify->add_option("--format", verify_args.format, "text or jsonl")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "jsonl"}));

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "bi-unitary harmonic census over a range");
  report->add_option("--max", report_args.max, "census bound (<= 10^10)")->default_val(1000000);
  report->add_option("--jobs", report_args.jobs, "worker threads")
      ->envname("HARMONIC_JOBS")
      ->default_val(1);
  report->add_option("--segment-size", report_args.segment_size, "integers per work segment")
      ->default_val(harmonic::kDefaultSegmentSize);
  report->add_option("--format", report_args.format, "text or jsonl")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "jsonl"}));
  report->add_flag("--progress", report_args.progress, "report per-segment progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*classify) return run_classify(classify_args);
    if (*search) return run_search(search_args);
    if (*verify) return run_verify(verify_args);
    if (*report) return run_report(report_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
