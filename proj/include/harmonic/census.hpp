#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/search.hpp"

namespace harmonic {

// The six exponent shapes whose member lists the census reports.
inline const std::vector<ShapePattern>& census_shapes() {
  static const std::vector<ShapePattern> shapes = {
      ShapePattern::of({2, 1}),       ShapePattern::of({2, 1, 1}),
      ShapePattern::of({2, 2, 1}),    ShapePattern::of({2, 1, 1, 1}),
      ShapePattern::of({2, 2, 1, 1}), ShapePattern::of({2, 2, 2, 1}),
  };
  return shapes;
}

struct CensusReport {
  u64 bound = 0;
  u64 count_including_one = 0;
  u64 count_excluding_one = 0;
  std::optional<u64> first_exceptional;  // least member neither harmonic nor unitary harmonic
  std::vector<u64> members;              // ascending, 1 first when counted
  std::vector<u64> powerful_members;     // members > 1 with every exponent >= 2
  std::vector<u64> square_members;       // members > 1 that are perfect squares
  std::vector<std::pair<std::string, std::vector<u64>>> shape_catalog;
  SearchSummary summary;
};

// Full bi-unitary harmonic census of [1, bound]: dual counts (the n = 1
// convention differs between sources), the first member that is neither
// harmonic nor unitary harmonic, the powerful and perfect-square sublists,
// and the member list per reported shape.
inline CensusReport census_report(u64 bound, SearchOptions options = {}) {
  if (bound < 1 || bound > kMaxScanBound) {
    throw std::invalid_argument("census_report: need 1 <= bound <= 10^10");
  }
  if (options.resume) {
    // The member sublists cannot be reconstructed from a checkpoint's
    // aggregate counters, so a resumed census would under-report them.
    throw std::invalid_argument("census_report: resume is not supported; rerun the census");
  }

  SearchQuery query;
  query.lo = 1;
  query.hi = bound;
  query.predicates = {PredicateTerm{PredicateTag::BiunitaryHarmonic, false}};
  query.include_one = true;

  CensusReport report;
  report.bound = bound;

  std::vector<u32> shape_keys;
  for (const ShapePattern& s : census_shapes()) {
    report.shape_catalog.emplace_back(s.str(), std::vector<u64>{});
    shape_keys.push_back(s.key());
  }

  report.summary = search(query, options, [&](const NumberProfile& rec) {
    report.members.push_back(rec.n);
    if (rec.n > 1) {
      if (!rec.harmonic && !rec.unitary_harmonic && !report.first_exceptional) {
        report.first_exceptional = rec.n;
      }
      if (rec.powerful) report.powerful_members.push_back(rec.n);
      if (rec.perfect_square) report.square_members.push_back(rec.n);
      const u32 key = shape_key_of(rec.factorization);
      for (std::size_t i = 0; i < shape_keys.size(); ++i) {
        if (key == shape_keys[i]) report.shape_catalog[i].second.push_back(rec.n);
      }
    }
  });

  report.count_including_one = report.members.size();
  report.count_excluding_one =
      report.members.size() - (report.summary.one_matched ? 1 : 0);
  return report;
}

}  // namespace harmonic
