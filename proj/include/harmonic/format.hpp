#pragma once

#include <string>
#include <string_view>

#include "harmonic/census.hpp"
#include "harmonic/search.hpp"
#include "harmonic/theorems.hpp"

namespace harmonic {

enum class OutputFormat { Table, Jsonl, Csv };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "jsonl") return OutputFormat::Jsonl;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format: " + std::string(s) +
                              " (expected table, jsonl or csv)");
}

inline std::string factorization_str(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) s += '*';
    s += std::to_string(f.factors[i].prime);
    if (f.factors[i].exponent > 1) s += '^' + std::to_string(f.factors[i].exponent);
  }
  return s;
}

// "num/den"; the "/1" of integers is kept in structured formats and
// suppressed in tables.
inline std::string ratio_str(const ExactRatio& r, bool suppress_unit_den = false) {
  if (suppress_unit_den && r.den == 1) return to_string(r.num);
  return to_string(r.num) + "/" + to_string(r.den);
}

// True predicate flags of a profile, in the canonical tag order.
inline bool profile_predicate(const NumberProfile& p, PredicateTag t) {
  switch (t) {
    case PredicateTag::Harmonic: return p.harmonic;
    case PredicateTag::UnitaryHarmonic: return p.unitary_harmonic;
    case PredicateTag::BiunitaryHarmonic: return p.biunitary_harmonic;
    case PredicateTag::H1: return p.h_number[0];
    case PredicateTag::H2: return p.h_number[1];
    case PredicateTag::H3: return p.h_number[2];
    case PredicateTag::H4: return p.h_number[3];
    case PredicateTag::H5: return p.h_number[4];
    case PredicateTag::H6: return p.h_number[5];
    case PredicateTag::Perfect: return p.perfect;
    case PredicateTag::Multiperfect: return p.perfect_level.has_value();
    case PredicateTag::UnitaryPerfect: return p.unitary_perfect;
    case PredicateTag::BiunitaryPerfect: return p.biunitary_perfect;
    case PredicateTag::BiunitaryMultiperfect: return p.biunitary_perfect_level.has_value();
    case PredicateTag::Balanced: return p.balanced;
    case PredicateTag::Friendly: return p.friendly;
    case PredicateTag::Powerful: return p.powerful;
    case PredicateTag::Square: return p.perfect_square;
    case PredicateTag::Squarefree: return p.squarefree;
  }
  return false;
}

inline std::string flags_str(const NumberProfile& p, char sep = ';') {
  std::string s;
  for (const auto& [name, tag] : kPredicateNames) {
    if (!profile_predicate(p, tag)) continue;
    if (!s.empty()) s += sep;
    s += name;
  }
  return s;
}

namespace detail {

inline void json_string(std::string& out, std::string_view s) {
  out += '"';
  for (const char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  out += '"';
}

}  // namespace detail

// One record per line: {"n":...,"factorization":"...","d":...,...,
// "h":"a/b",...,"flags":[...]}.
inline std::string record_jsonl(const NumberProfile& p) {
  std::string s = "{\"n\":" + std::to_string(p.n);
  s += ",\"factorization\":";
  detail::json_string(s, factorization_str(p.factorization));
  s += ",\"d\":" + std::to_string(p.d);
  s += ",\"d_star\":" + std::to_string(p.d_star);
  s += ",\"d_bistar\":" + std::to_string(p.d_bistar);
  s += ",\"sigma\":" + to_string(p.sigma);
  s += ",\"sigma_star\":" + to_string(p.sigma_star);
  s += ",\"sigma_bistar\":" + to_string(p.sigma_bistar);
  for (const MeanKind k : kAllMeans) {
    s += ",\"" + std::string(mean_name(k)) + "\":";
    detail::json_string(s, ratio_str(p.mean(k)));
  }
  s += ",\"flags\":[";
  bool first = true;
  for (const auto& [name, tag] : kPredicateNames) {
    if (!profile_predicate(p, tag)) continue;
    if (!first) s += ',';
    first = false;
    detail::json_string(s, name);
  }
  s += "]}";
  return s;
}

inline std::string record_csv_header() {
  std::string s = "n,factorization,d,d_star,d_bistar,sigma,sigma_star,sigma_bistar";
  for (const MeanKind k : kAllMeans) s += "," + std::string(mean_name(k));
  s += ",flags";
  return s;
}

inline std::string record_csv(const NumberProfile& p) {
  std::string s = std::to_string(p.n);
  s += ',' + factorization_str(p.factorization);
  s += ',' + std::to_string(p.d);
  s += ',' + std::to_string(p.d_star);
  s += ',' + std::to_string(p.d_bistar);
  s += ',' + to_string(p.sigma);
  s += ',' + to_string(p.sigma_star);
  s += ',' + to_string(p.sigma_bistar);
  for (const MeanKind k : kAllMeans) s += ',' + ratio_str(p.mean(k));
  s += ',' + flags_str(p);
  return s;
}

namespace detail {

inline std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string record_table_header() {
  using detail::pad_right;
  return pad_right("n", 12) + " " + pad_right("factorization", 28) + " " + pad_right("h", 10) +
         " " + pad_right("h_star", 10) + " " + pad_right("h_bistar", 10) + " flags";
}

inline std::string record_table(const NumberProfile& p) {
  using detail::pad_right;
  return pad_right(std::to_string(p.n), 12) + " " +
         pad_right(factorization_str(p.factorization), 28) + " " +
         pad_right(ratio_str(p.mean(MeanKind::H), true), 10) + " " +
         pad_right(ratio_str(p.mean(MeanKind::HStar), true), 10) + " " +
         pad_right(ratio_str(p.mean(MeanKind::HBistar), true), 10) + " " + flags_str(p, ',');
}

inline std::string render_record(const NumberProfile& p, OutputFormat f) {
  switch (f) {
    case OutputFormat::Table: return record_table(p);
    case OutputFormat::Jsonl: return record_jsonl(p);
    case OutputFormat::Csv: return record_csv(p);
  }
  return {};
}

// Multi-line dossier for a single integer (the eval subcommand).
inline std::string render_profile_text(const NumberProfile& p) {
  std::string s;
  s += "n              " + std::to_string(p.n) + "\n";
  s += "factorization  " + factorization_str(p.factorization) + "\n";
  s += "d              " + std::to_string(p.d) + "\n";
  s += "d*             " + std::to_string(p.d_star) + "\n";
  s += "d**            " + std::to_string(p.d_bistar) + "\n";
  s += "sigma          " + to_string(p.sigma) + "\n";
  s += "sigma*         " + to_string(p.sigma_star) + "\n";
  s += "sigma**        " + to_string(p.sigma_bistar) + "\n";
  static constexpr std::string_view kMeanLabel[] = {"h", "h*", "h**", "h1", "h2",
                                                    "h3", "h4", "h5",  "h6"};
  for (const MeanKind k : kAllMeans) {
    std::string label(kMeanLabel[static_cast<int>(k)]);
    label.resize(15, ' ');
    s += label + ratio_str(p.mean(k), true);
    if (p.mean(k).is_integer()) s += " (integer)";
    s += "\n";
  }
  const std::string flags = flags_str(p, ' ');
  s += "flags          " + (flags.empty() ? std::string("-") : flags) + "\n";
  return s;
}

inline std::string render_outcome_text(const VerificationOutcome& o) {
  std::string s = o.id + ": " + (o.passed ? "PASS" : "FAIL") + " (" + o.bounds + ")\n";
  s += "  claim: " + o.claim + "\n";
  if (o.counterexample) {
    s += "  counterexample: n=" + std::to_string(o.counterexample->first) + " -- " +
         o.counterexample->second + "\n";
  }
  if (!o.witness_counts.empty()) {
    s += "  counts:";
    for (const auto& [key, value] : o.witness_counts) {
      s += " [" + key + "=" + std::to_string(value) + "]";
    }
    s += "\n";
  }
  return s;
}

inline std::string render_outcome_jsonl(const VerificationOutcome& o) {
  std::string s = "{\"id\":";
  detail::json_string(s, o.id);
  s += ",\"passed\":";
  s += o.passed ? "true" : "false";
  s += ",\"bounds\":";
  detail::json_string(s, o.bounds);
  s += ",\"claim\":";
  detail::json_string(s, o.claim);
  if (o.counterexample) {
    s += ",\"counterexample_n\":" + std::to_string(o.counterexample->first);
    s += ",\"counterexample\":";
    detail::json_string(s, o.counterexample->second);
  }
  s += ",\"counts\":{";
  bool first = true;
  for (const auto& [key, value] : o.witness_counts) {
    if (!first) s += ',';
    first = false;
    detail::json_string(s, key);
    s += ':' + std::to_string(value);
  }
  s += "}}";
  return s;
}

namespace detail {

inline std::string join_u64(const std::vector<u64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(v[i]);
  }
  return s.empty() ? "-" : s;
}

}  // namespace detail

inline std::string render_census_text(const CensusReport& r) {
  std::string s;
  s += "bi-unitary harmonic census of [1, " + std::to_string(r.bound) + "]\n";
  s += "  members including 1:  " + std::to_string(r.count_including_one) + "\n";
  s += "  members excluding 1:  " + std::to_string(r.count_excluding_one) + "\n";
  s += "  first member neither harmonic nor unitary harmonic: " +
       (r.first_exceptional ? std::to_string(*r.first_exceptional) : std::string("-")) + "\n";
  s += "  powerful members (>1):       " + detail::join_u64(r.powerful_members) + "\n";
  s += "  perfect-square members (>1): " + detail::join_u64(r.square_members) + "\n";
  for (const auto& [shape, members] : r.shape_catalog) {
    s += "  shape " + shape + " members: " + detail::join_u64(members) + "\n";
  }
  if (!r.summary.complete) s += "  (scan incomplete: stopped at " +
                                std::to_string(r.summary.next_unscanned) + ")\n";
  return s;
}

inline std::string render_census_jsonl(const CensusReport& r) {
  std::string s = "{\"bound\":" + std::to_string(r.bound);
  s += ",\"count_including_one\":" + std::to_string(r.count_including_one);
  s += ",\"count_excluding_one\":" + std::to_string(r.count_excluding_one);
  s += ",\"first_exceptional\":" +
       (r.first_exceptional ? std::to_string(*r.first_exceptional) : std::string("null"));
  const auto list = [&s](const char* key, const std::vector<u64>& v) {
    s += ",\"" + std::string(key) + "\":[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(v[i]);
    }
    s += ']';
  };
  list("members", r.members);
  list("powerful_members", r.powerful_members);
  list("square_members", r.square_members);
  s += ",\"shapes\":{";
  bool first = true;
  for (const auto& [shape, members] : r.shape_catalog) {
    if (!first) s += ',';
    first = false;
    detail::json_string(s, shape);
    s += ":[";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(members[i]);
    }
    s += ']';
  }
  s += "},\"complete\":";
  s += r.summary.complete ? "true" : "false";
  s += '}';
  return s;
}

inline std::string render_summary_text(const SearchSummary& s) {
  std::string out;
  out += "scanned [" + std::to_string(s.lo) + ", " + std::to_string(s.hi) + "]";
  if (!s.complete) out += " up to " + std::to_string(s.next_unscanned) + " (incomplete)";
  out += ": " + std::to_string(s.hits) + " record(s)";
  if (s.one_matched) out += "; n=1 matched";
  out += "; digest " + detail::hex16(s.digest);
  for (const auto& [term, count] : s.term_counts) {
    out += "\n  " + term + ": " + std::to_string(count);
  }
  out += "\n";
  return out;
}

}  // namespace harmonic
