#pragma once

#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "harmonic/classify.hpp"
#include "harmonic/scan.hpp"

namespace harmonic {

// ---------------------------------------------------------------------------
// Predicates

enum class PredicateTag : int {
  Harmonic,
  UnitaryHarmonic,
  BiunitaryHarmonic,
  H1,
  H2,
  H3,
  H4,
  H5,
  H6,
  Perfect,
  Multiperfect,
  UnitaryPerfect,
  BiunitaryPerfect,
  BiunitaryMultiperfect,
  Balanced,
  Friendly,
  Powerful,
  Square,
  Squarefree,
};

inline constexpr std::pair<std::string_view, PredicateTag> kPredicateNames[] = {
    {"harmonic", PredicateTag::Harmonic},
    {"unitary-harmonic", PredicateTag::UnitaryHarmonic},
    {"biunitary-harmonic", PredicateTag::BiunitaryHarmonic},
    {"h1", PredicateTag::H1},
    {"h2", PredicateTag::H2},
    {"h3", PredicateTag::H3},
    {"h4", PredicateTag::H4},
    {"h5", PredicateTag::H5},
    {"h6", PredicateTag::H6},
    {"perfect", PredicateTag::Perfect},
    {"multiperfect", PredicateTag::Multiperfect},
    {"unitary-perfect", PredicateTag::UnitaryPerfect},
    {"biunitary-perfect", PredicateTag::BiunitaryPerfect},
    {"biunitary-multiperfect", PredicateTag::BiunitaryMultiperfect},
    {"balanced", PredicateTag::Balanced},
    {"friendly", PredicateTag::Friendly},
    {"powerful", PredicateTag::Powerful},
    {"square", PredicateTag::Square},
    {"squarefree", PredicateTag::Squarefree},
};

inline std::string_view predicate_name(PredicateTag t) {
  for (const auto& [name, tag] : kPredicateNames) {
    if (tag == t) return name;
  }
  return "?";
}

struct PredicateTerm {
  PredicateTag tag;
  bool negated = false;

  std::string str() const {
    return (negated ? "!" : "") + std::string(predicate_name(tag));
  }

  friend bool operator==(const PredicateTerm&, const PredicateTerm&) = default;
};

// Accepts "harmonic" or the negation "!harmonic".
inline PredicateTerm parse_predicate_term(std::string_view text) {
  PredicateTerm term;
  if (!text.empty() && text.front() == '!') {
    term.negated = true;
    text.remove_prefix(1);
  }
  for (const auto& [name, tag] : kPredicateNames) {
    if (name == text) {
      term.tag = tag;
      return term;
    }
  }
  throw std::invalid_argument("unknown predicate: " + std::string(text));
}

namespace detail {

// sum | n*count, arranged so the product never leaves 64 bits for the scan
// ranges (sum < 2^37, count < 2^13 there).
inline bool divides_scaled(u64 n, u64 count, u64 sum) {
  return (n % sum) * count % sum == 0;
}

}  // namespace detail

// Fused predicate evaluation against a scan cell; the reference semantics
// are the profile_of flags, and the two agree everywhere (tested).
inline bool eval_predicate(PredicateTag t, u64 n, const ProfileCell& c) {
  using detail::divides_scaled;
  switch (t) {
    case PredicateTag::Harmonic: return divides_scaled(n, c.d, c.sigma);
    case PredicateTag::UnitaryHarmonic: return divides_scaled(n, c.d_star, c.sigma_star);
    case PredicateTag::BiunitaryHarmonic: return divides_scaled(n, c.d_bistar, c.sigma_bistar);
    case PredicateTag::H1: return divides_scaled(n, c.d, c.sigma_star);
    case PredicateTag::H2: return divides_scaled(n, c.d_star, c.sigma);
    case PredicateTag::H3: return divides_scaled(n, c.d, c.sigma_bistar);
    case PredicateTag::H4: return divides_scaled(n, c.d_bistar, c.sigma);
    case PredicateTag::H5: return divides_scaled(n, c.d_star, c.sigma_bistar);
    case PredicateTag::H6: return divides_scaled(n, c.d_bistar, c.sigma_star);
    case PredicateTag::Perfect: return c.sigma == 2 * n;
    case PredicateTag::Multiperfect: return c.sigma % n == 0 && c.sigma >= 2 * n;
    case PredicateTag::UnitaryPerfect: return c.sigma_star == 2 * n;
    case PredicateTag::BiunitaryPerfect: return c.sigma_bistar == 2 * n;
    case PredicateTag::BiunitaryMultiperfect:
      return c.sigma_bistar % n == 0 && c.sigma_bistar >= 2 * n;
    case PredicateTag::Balanced: return 2 * c.sigma == n * c.d;
    case PredicateTag::Friendly: return n > 1 && std::gcd(n, c.sigma) == 1;
    case PredicateTag::Powerful: return c.powerful();
    case PredicateTag::Square: return c.perfect_square();
    case PredicateTag::Squarefree: return c.squarefree();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Queries

struct SearchQuery {
  u64 lo = 1;
  u64 hi = 1;
  std::vector<PredicateTerm> predicates;  // conjunction; may be empty
  std::optional<ShapePattern> shape;
  bool include_one = false;  // emit n = 1 as a record when it matches

  void validate() const {
    if (lo < 1 || lo > hi) throw std::invalid_argument("SearchQuery: need 1 <= lo <= hi");
    if (hi > kMaxScanBound) throw std::invalid_argument("SearchQuery: hi exceeds 10^10");
  }

  // Canonical text form; the checkpoint fingerprint hashes this, so it must
  // cover everything that affects the record stream.
  std::string canonical() const {
    std::string s = "v1;lo=" + std::to_string(lo) + ";hi=" + std::to_string(hi) + ";pred=";
    for (std::size_t i = 0; i < predicates.size(); ++i) {
      if (i > 0) s += ',';
      s += predicates[i].str();
    }
    s += ";shape=";
    s += shape ? shape->str() : "-";
    s += ";include-one=";
    s += include_one ? '1' : '0';
    return s;
  }
};

// ---------------------------------------------------------------------------
// Digest / fingerprint

inline constexpr u64 kFnvOffset = 14695981039346656037ull;
inline constexpr u64 kFnvPrime = 1099511628211ull;

inline u64 fnv1a(std::string_view bytes, u64 h = kFnvOffset) {
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

inline void fnv1a_append(u64& h, u128 v) {
  for (int i = 0; i < 16; ++i) {
    h ^= static_cast<unsigned char>(v >> (8 * i));
    h *= kFnvPrime;
  }
}

// Format-independent digest of a hit: folds n and the six function values.
inline void digest_record(u64& h, const NumberProfile& r) {
  fnv1a_append(h, r.n);
  fnv1a_append(h, r.d);
  fnv1a_append(h, r.d_star);
  fnv1a_append(h, r.d_bistar);
  fnv1a_append(h, r.sigma);
  fnv1a_append(h, r.sigma_star);
  fnv1a_append(h, r.sigma_bistar);
}

inline u64 query_fingerprint(const SearchQuery& q) { return fnv1a(q.canonical()); }

// ---------------------------------------------------------------------------
// Checkpoints

struct SearchCheckpoint {
  int format_version = 1;
  u64 fingerprint = 0;
  u64 next_unscanned = 0;
  u64 hits = 0;
  bool one_matched = false;
  u64 digest = kFnvOffset;
  std::vector<std::pair<std::string, u64>> term_counts;
};

namespace detail {

inline std::string hex16(u64 v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace detail

inline std::string render_checkpoint(const SearchCheckpoint& cp) {
  std::string s;
  s += "harmonic-checkpoint " + std::to_string(cp.format_version) + "\n";
  s += "fingerprint " + detail::hex16(cp.fingerprint) + "\n";
  s += "next " + std::to_string(cp.next_unscanned) + "\n";
  s += "hits " + std::to_string(cp.hits) + "\n";
  s += "one-matched " + std::string(cp.one_matched ? "1" : "0") + "\n";
  s += "digest " + detail::hex16(cp.digest) + "\n";
  for (const auto& [term, count] : cp.term_counts) {
    s += "count " + term + " " + std::to_string(count) + "\n";
  }
  s += "end\n";
  return s;
}

inline SearchCheckpoint parse_checkpoint(std::istream& in) {
  SearchCheckpoint cp;
  std::string line;
  bool saw_end = false;
  if (!std::getline(in, line) || line.rfind("harmonic-checkpoint ", 0) != 0) {
    throw std::runtime_error("checkpoint: bad header");
  }
  cp.format_version = std::stoi(line.substr(20));
  if (cp.format_version != 1) throw std::runtime_error("checkpoint: unsupported version");
  while (std::getline(in, line)) {
    if (line == "end") {
      saw_end = true;
      break;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "fingerprint" || key == "digest") {
      std::string hex;
      ls >> hex;
      const u64 v = std::stoull(hex, nullptr, 16);
      (key == "fingerprint" ? cp.fingerprint : cp.digest) = v;
    } else if (key == "next") {
      ls >> cp.next_unscanned;
    } else if (key == "hits") {
      ls >> cp.hits;
    } else if (key == "one-matched") {
      int v = 0;
      ls >> v;
      cp.one_matched = v != 0;
    } else if (key == "count") {
      std::string term;
      u64 v = 0;
      ls >> term >> v;
      cp.term_counts.emplace_back(term, v);
    } else {
      throw std::runtime_error("checkpoint: unknown field '" + key + "'");
    }
    if (!ls) throw std::runtime_error("checkpoint: malformed line '" + line + "'");
  }
  if (!saw_end) throw std::runtime_error("checkpoint: truncated file");
  return cp;
}

inline SearchCheckpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
  return parse_checkpoint(in);
}

// Atomic replace: write to a sibling temp file, then rename over the target.
inline void store_checkpoint(const std::string& path, const SearchCheckpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
    out << render_checkpoint(cp);
    out.flush();
    if (!out) throw std::runtime_error("checkpoint: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("checkpoint: rename failed for " + path);
  }
}

// ---------------------------------------------------------------------------
// Search

struct SearchOptions {
  unsigned workers = 1;
  u64 segment_size = kDefaultSegmentSize;
  std::string checkpoint_path;  // empty: no checkpointing
  bool resume = false;
  u64 max_segments = 0;  // nonzero: stop after merging this many (used to test resumption)
  // Called on the caller's thread after each segment is merged, with the new
  // scan cursor and the running hit count.  Must not throw.
  std::function<void(u64 next_unscanned, u64 hits)> on_segment;
};

struct SearchSummary {
  u64 lo = 0;
  u64 hi = 0;
  u64 next_unscanned = 0;  // hi + 1 when complete
  bool complete = false;
  u64 hits = 0;            // records emitted
  bool one_matched = false;
  u64 digest = kFnvOffset;
  std::vector<std::pair<std::string, u64>> term_counts;
};

using RecordSink = std::function<void(const NumberProfile&)>;

namespace detail {

struct SegmentResult {
  u64 lo = 0, hi = 0;
  std::vector<NumberProfile> records;
  std::vector<u64> term_counts;
  bool one_matched = false;
};

struct CompiledQuery {
  std::vector<PredicateTerm> terms;
  u32 shape_key = 0;  // 0: no shape filter
  bool include_one = false;
};

inline SegmentResult scan_one_segment(ProfileScanner& scanner, u64 lo, u64 hi,
                                      const CompiledQuery& q) {
  SegmentResult res;
  res.lo = lo;
  res.hi = hi;
  res.term_counts.assign(q.terms.size(), 0);
  scanner.scan(lo, hi, [&](u64 n, const ProfileCell& c) {
    bool all = true;
    for (std::size_t t = 0; t < q.terms.size(); ++t) {
      const bool v = eval_predicate(q.terms[t].tag, n, c) != q.terms[t].negated;
      res.term_counts[t] += v ? 1 : 0;
      all = all && v;
    }
    if (q.shape_key != 0 && c.shape_key != q.shape_key) all = false;
    if (!all) return;
    if (n == 1) {
      res.one_matched = true;
      if (!q.include_one) return;
    }
    try {
      res.records.push_back(profile_of(n));
    } catch (const std::overflow_error& e) {
      throw std::overflow_error("segment [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] aborted at n=" + std::to_string(n) + ": " + e.what());
    }
  });
  return res;
}

}  // namespace detail

// Ordered single-segment scan; the building block the parallel search
// distributes.  [lo, hi] is the range scanned; the query contributes the
// predicates, shape filter and include-one convention.  Records come back
// ascending.
inline std::vector<NumberProfile> scan_segment(u64 lo, u64 hi, const SearchQuery& query,
                                               u64 max_length = kDefaultSegmentSize) {
  if (lo < 1 || lo > hi || hi > kMaxScanBound) {
    throw std::invalid_argument("scan_segment: need 1 <= lo <= hi <= 10^10");
  }
  if (hi - lo + 1 > max_length) {
    throw std::length_error("scan_segment: segment exceeds maximum length");
  }
  detail::CompiledQuery cq{query.predicates, query.shape ? query.shape->key() : 0,
                           query.include_one};
  ProfileScanner scanner(hi);
  return detail::scan_one_segment(scanner, lo, hi, cq).records;
}

// Parallel deterministic search.  Fixed-size segments are claimed from a
// shared counter by worker threads; the caller's thread is the single
// in-order merger, emitting records and rolling the checkpoint forward
// after every merged segment.  Output (records, order, digest) depends only
// on the query, never on worker count, segment size, or resume point.
inline SearchSummary search(const SearchQuery& query, const SearchOptions& options,
                            const RecordSink& sink) {
  query.validate();
  if (options.workers < 1) throw std::invalid_argument("search: workers must be >= 1");
  if (options.segment_size < 1) throw std::invalid_argument("search: segment size must be >= 1");

  const u64 fingerprint = query_fingerprint(query);

  SearchSummary summary;
  summary.lo = query.lo;
  summary.hi = query.hi;
  summary.term_counts.reserve(query.predicates.size());
  for (const auto& term : query.predicates) summary.term_counts.emplace_back(term.str(), 0);

  u64 start = query.lo;
  if (options.resume) {
    if (options.checkpoint_path.empty()) {
      throw std::invalid_argument("search: resume requires a checkpoint path");
    }
    const SearchCheckpoint cp = load_checkpoint(options.checkpoint_path);
    if (cp.fingerprint != fingerprint) {
      throw std::runtime_error("search: checkpoint fingerprint mismatch (different query)");
    }
    if (cp.next_unscanned < query.lo || cp.next_unscanned > query.hi + 1) {
      throw std::runtime_error("search: checkpoint cursor outside query range");
    }
    if (cp.term_counts.size() != query.predicates.size()) {
      throw std::runtime_error("search: checkpoint term list does not match query");
    }
    start = cp.next_unscanned;
    summary.hits = cp.hits;
    summary.one_matched = cp.one_matched;
    summary.digest = cp.digest;
    for (std::size_t i = 0; i < cp.term_counts.size(); ++i) {
      if (cp.term_counts[i].first != summary.term_counts[i].first) {
        throw std::runtime_error("search: checkpoint term list does not match query");
      }
      summary.term_counts[i].second = cp.term_counts[i].second;
    }
  }

  summary.next_unscanned = start;
  if (start > query.hi) {  // checkpoint says everything is already done
    summary.complete = true;
    return summary;
  }

  const u64 seg_size = options.segment_size;
  const u64 total_segments = (query.hi - start) / seg_size + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<u64>(options.workers, total_segments));
  const u64 in_flight_cap = std::max<u64>(2 * workers, 4);

  struct Shared {
    std::mutex m;
    std::condition_variable claimable;
    std::condition_variable mergeable;
    u64 next_claim = 0;
    u64 in_flight = 0;
    bool stop = false;
    std::exception_ptr error;
    std::map<u64, detail::SegmentResult> done;
  } shared;

  const detail::CompiledQuery cq{query.predicates, query.shape ? query.shape->key() : 0,
                                 query.include_one};

  const auto segment_bounds = [&](u64 k) {
    const u64 lo = start + k * seg_size;
    const u64 hi = std::min(query.hi, lo + seg_size - 1);
    return std::pair<u64, u64>(lo, hi);
  };

  const auto worker_main = [&] {
    try {
      ProfileScanner scanner(query.hi);
      for (;;) {
        u64 k;
        {
          std::unique_lock lock(shared.m);
          shared.claimable.wait(lock, [&] {
            return shared.stop || shared.error || shared.next_claim >= total_segments ||
                   shared.in_flight < in_flight_cap;
          });
          if (shared.stop || shared.error || shared.next_claim >= total_segments) return;
          k = shared.next_claim++;
          ++shared.in_flight;
        }
        const auto [lo, hi] = segment_bounds(k);
        detail::SegmentResult res = detail::scan_one_segment(scanner, lo, hi, cq);
        {
          std::lock_guard lock(shared.m);
          shared.done.emplace(k, std::move(res));
        }
        shared.mergeable.notify_one();
      }
    } catch (...) {
      {
        std::lock_guard lock(shared.m);
        shared.error = std::current_exception();
      }
      shared.mergeable.notify_one();
      shared.claimable.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_main);

  u64 merged = 0;
  std::exception_ptr failure;
  for (u64 k = 0; k < total_segments; ++k) {
    detail::SegmentResult res;
    {
      std::unique_lock lock(shared.m);
      shared.mergeable.wait(lock, [&] { return shared.error || shared.done.contains(k); });
      if (shared.error) {
        failure = shared.error;
        break;
      }
      auto node = shared.done.extract(k);
      res = std::move(node.mapped());
    }

    for (const NumberProfile& rec : res.records) {
      sink(rec);
      digest_record(summary.digest, rec);
    }
    summary.hits += res.records.size();
    summary.one_matched = summary.one_matched || res.one_matched;
    for (std::size_t i = 0; i < res.term_counts.size(); ++i) {
      summary.term_counts[i].second += res.term_counts[i];
    }
    summary.next_unscanned = res.hi + 1;
    ++merged;

    if (!options.checkpoint_path.empty()) {
      SearchCheckpoint cp;
      cp.fingerprint = fingerprint;
      cp.next_unscanned = summary.next_unscanned;
      cp.hits = summary.hits;
      cp.one_matched = summary.one_matched;
      cp.digest = summary.digest;
      cp.term_counts = summary.term_counts;
      store_checkpoint(options.checkpoint_path, cp);
    }
    if (options.on_segment) options.on_segment(summary.next_unscanned, summary.hits);

    bool stopping = false;
    {
      std::lock_guard lock(shared.m);
      --shared.in_flight;
      if (options.max_segments != 0 && merged >= options.max_segments) {
        shared.stop = true;
        stopping = true;
      }
    }
    shared.claimable.notify_all();
    if (stopping) break;
  }

  {
    std::lock_guard lock(shared.m);
    shared.stop = true;
  }
  shared.claimable.notify_all();
  for (std::thread& t : pool) t.join();

  if (failure) std::rethrow_exception(failure);
  {
    std::lock_guard lock(shared.m);
    if (shared.error) std::rethrow_exception(shared.error);
  }

  summary.complete = summary.next_unscanned == query.hi + 1;
  return summary;
}

}  // namespace harmonic
