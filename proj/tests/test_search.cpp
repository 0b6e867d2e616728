#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/format.hpp"
#include "harmonic/search.hpp"

using harmonic::PredicateTag;
using harmonic::PredicateTerm;
using harmonic::SearchOptions;
using harmonic::SearchQuery;
using harmonic::SearchSummary;
using harmonic::u64;

namespace {

SearchQuery query_of(u64 lo, u64 hi, std::vector<PredicateTerm> terms,
                     bool include_one = false) {
  SearchQuery q;
  q.lo = lo;
  q.hi = hi;
  q.predicates = std::move(terms);
  q.include_one = include_one;
  return q;
}

struct RunResult {
  SearchSummary summary;
  std::vector<u64> hits;
  std::string stream;  // concatenated record lines, for byte-identity checks
};

RunResult run(const SearchQuery& q, SearchOptions opt = {}) {
  RunResult r;
  r.summary = harmonic::search(q, opt, [&](const harmonic::NumberProfile& p) {
    r.hits.push_back(p.n);
    r.stream += harmonic::record_jsonl(p);
    r.stream += '\n';
  });
  return r;
}

std::string temp_path(const char* stem) {
  return (std::filesystem::temp_directory_path() / stem).string();
}

}  // namespace

TEST_CASE("predicate names round-trip") {
  for (const auto& [name, tag] : harmonic::kPredicateNames) {
    const PredicateTerm t = harmonic::parse_predicate_term(name);
    CHECK(t.tag == tag);
    CHECK_FALSE(t.negated);
    CHECK(t.str() == name);
    const PredicateTerm neg = harmonic::parse_predicate_term("!" + std::string(name));
    CHECK(neg.negated);
    CHECK(neg.str() == "!" + std::string(name));
  }
  CHECK_THROWS_AS(harmonic::parse_predicate_term("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(harmonic::parse_predicate_term("!"), std::invalid_argument);
  CHECK_THROWS_AS(harmonic::parse_predicate_term(""), std::invalid_argument);
}

TEST_CASE("frozen query results") {
  const auto harm = run(query_of(1, 10000, {{PredicateTag::Harmonic, false}}, true));
  CHECK(harm.hits == std::vector<u64>{1, 6, 28, 140, 270, 496, 672, 1638, 2970, 6200, 8128, 8190});
  CHECK(harm.summary.hits == 12);
  CHECK(harm.summary.one_matched);
  CHECK(harm.summary.complete);

  const auto no_one = run(query_of(1, 10000, {{PredicateTag::Harmonic, false}}, false));
  CHECK(no_one.hits == std::vector<u64>{6, 28, 140, 270, 496, 672, 1638, 2970, 6200, 8128, 8190});
  CHECK(no_one.summary.one_matched);  // counted even though not emitted

  // Conjunction with negation: harmonic but not multiperfect.
  const auto nmp = run(query_of(1, 10000,
                                {{PredicateTag::Harmonic, false},
                                 {PredicateTag::Multiperfect, true}}));
  CHECK(nmp.hits == std::vector<u64>{140, 270, 1638, 2970, 6200, 8190});

  // Shape filter: the only bi-unitary harmonic p^2*q below 10^6 is 45.
  SearchQuery shaped = query_of(1, 1000000, {{PredicateTag::BiunitaryHarmonic, false}});
  shaped.shape = harmonic::ShapePattern::of({2, 1});
  const auto sh = run(shaped);
  CHECK(sh.hits == std::vector<u64>{45});

  // Per-term counts tally every satisfying integer independently of the
  // conjunction; a negated term counts integers satisfying the negation.
  // Multiperfect to 10^4: 6, 28, 120, 496, 672, 8128.
  bool found = false;
  for (const auto& [term, count] : nmp.summary.term_counts) {
    if (term == "harmonic") {
      CHECK(count == 12);
      found = true;
    }
    if (term == "!multiperfect") CHECK(count == 10000 - 6);
  }
  CHECK(found);
}

TEST_CASE("unitary perfect numbers to 10^6 are unitary harmonic") {
  const auto up = run(query_of(1, 1000000, {{PredicateTag::UnitaryPerfect, false}}));
  CHECK(up.hits == std::vector<u64>{6, 60, 90, 87360});
  const auto uh = run(query_of(1, 1000000, {{PredicateTag::UnitaryPerfect, false},
                                            {PredicateTag::UnitaryHarmonic, false}}));
  CHECK(uh.hits == up.hits);
}

TEST_CASE("results are independent of workers and segment size") {
  const SearchQuery q = query_of(1, 200000, {{PredicateTag::BiunitaryHarmonic, false}}, true);

  SearchOptions base;
  base.segment_size = 1 << 16;
  const RunResult ref = run(q, base);
  CHECK(ref.summary.hits == 29);

  for (unsigned workers : {2u, 4u, 7u}) {
    SearchOptions opt;
    opt.workers = workers;
    opt.segment_size = 1 << 16;
    const RunResult got = run(q, opt);
    CHECK(got.stream == ref.stream);
    CHECK(got.summary.digest == ref.summary.digest);
    CHECK(got.summary.hits == ref.summary.hits);
    CHECK(got.summary.term_counts == ref.summary.term_counts);
  }
  for (u64 seg : {4096ull, 65536ull, 1048576ull}) {
    SearchOptions opt;
    opt.workers = 3;
    opt.segment_size = seg;
    const RunResult got = run(q, opt);
    CHECK(got.stream == ref.stream);
    CHECK(got.summary.digest == ref.summary.digest);
  }
}

TEST_CASE("checkpoint text round-trips") {
  harmonic::SearchCheckpoint cp;
  cp.fingerprint = 0x0123456789abcdefull;
  cp.next_unscanned = 65537;
  cp.hits = 42;
  cp.one_matched = true;
  cp.digest = 0xfeedfacecafebeefull;
  cp.term_counts = {{"harmonic", 12}, {"!multiperfect", 9995}};
  const std::string text = harmonic::render_checkpoint(cp);
  std::istringstream in(text);
  const harmonic::SearchCheckpoint back = harmonic::parse_checkpoint(in);
  CHECK(back.fingerprint == cp.fingerprint);
  CHECK(back.next_unscanned == cp.next_unscanned);
  CHECK(back.hits == cp.hits);
  CHECK(back.one_matched == cp.one_matched);
  CHECK(back.digest == cp.digest);
  CHECK(back.term_counts == cp.term_counts);

  std::istringstream garbage("not a checkpoint\n");
  CHECK_THROWS_AS(harmonic::parse_checkpoint(garbage), std::runtime_error);
  std::istringstream truncated(text.substr(0, text.size() / 2));
  CHECK_THROWS_AS(harmonic::parse_checkpoint(truncated), std::runtime_error);
}

TEST_CASE("interrupted search resumes to an identical result") {
  const SearchQuery q = query_of(1, 200000, {{PredicateTag::BiunitaryHarmonic, false}}, true);
  const std::string path = temp_path("harmonic-test-resume.ckpt");
  std::filesystem::remove(path);

  SearchOptions plain;
  plain.segment_size = 1 << 14;
  const RunResult ref = run(q, plain);

  SearchOptions first;
  first.segment_size = 1 << 14;
  first.checkpoint_path = path;
  first.max_segments = 6;  // simulate an interrupt partway through
  const RunResult half = run(q, first);
  CHECK_FALSE(half.summary.complete);
  CHECK(half.summary.next_unscanned == 1 + 6 * (1 << 14));

  SearchOptions second;
  second.segment_size = 1 << 14;
  second.checkpoint_path = path;
  second.resume = true;
  const RunResult rest = run(q, second);
  CHECK(rest.summary.complete);

  CHECK(half.stream + rest.stream == ref.stream);
  CHECK(rest.summary.digest == ref.summary.digest);
  CHECK(rest.summary.hits == ref.summary.hits);
  CHECK(rest.summary.term_counts == ref.summary.term_counts);
  CHECK(rest.summary.one_matched == ref.summary.one_matched);

  // Resuming a finished search is a no-op that stays complete.
  const RunResult again = run(q, second);
  CHECK(again.summary.complete);
  CHECK(again.hits.empty());
  CHECK(again.summary.hits == ref.summary.hits);
  CHECK(again.summary.digest == ref.summary.digest);

  std::filesystem::remove(path);
}

TEST_CASE("resume refuses a checkpoint from a different query") {
  const std::string path = temp_path("harmonic-test-mismatch.ckpt");
  std::filesystem::remove(path);

  SearchOptions opt;
  opt.segment_size = 1 << 14;
  opt.checkpoint_path = path;
  opt.max_segments = 2;
  run(query_of(1, 100000, {{PredicateTag::Harmonic, false}}), opt);

  SearchOptions resume;
  resume.segment_size = 1 << 14;
  resume.checkpoint_path = path;
  resume.resume = true;
  const SearchQuery other = query_of(1, 100000, {{PredicateTag::Perfect, false}});
  CHECK_THROWS_AS(run(other, resume), std::runtime_error);

  std::filesystem::remove(path);
}

TEST_CASE("fingerprints separate queries and canonical text is stable") {
  const SearchQuery a = query_of(1, 1000, {{PredicateTag::Harmonic, false}});
  SearchQuery b = a;
  b.hi = 1001;
  SearchQuery c = a;
  c.predicates[0].negated = true;
  SearchQuery d = a;
  d.include_one = true;
  CHECK(harmonic::query_fingerprint(a) != harmonic::query_fingerprint(b));
  CHECK(harmonic::query_fingerprint(a) != harmonic::query_fingerprint(c));
  CHECK(harmonic::query_fingerprint(a) != harmonic::query_fingerprint(d));
  CHECK(harmonic::query_fingerprint(a) == harmonic::query_fingerprint(query_of(
            1, 1000, {{PredicateTag::Harmonic, false}})));
}

TEST_CASE("scan_segment matches a single-segment search") {
  const SearchQuery q = query_of(1, 10000, {{PredicateTag::Harmonic, false}}, true);
  const auto records = harmonic::scan_segment(1, 10000, q, 1 << 20);
  const RunResult ref = run(q);
  REQUIRE(records.size() == ref.hits.size());
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(records[i].n == ref.hits[i]);
  CHECK_THROWS_AS(harmonic::scan_segment(1, 10000, q, 100), std::length_error);
  CHECK_THROWS_AS(harmonic::scan_segment(0, 10, q), std::invalid_argument);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(query_of(0, 10, {}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(query_of(10, 2, {}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(query_of(1, 10000000001ull, {}).validate(), std::invalid_argument);
  CHECK_NOTHROW(query_of(1, 1, {}).validate());
}
