#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/census.hpp"
#include "harmonic/format.hpp"

using harmonic::OutputFormat;
using harmonic::u64;

TEST_CASE("output format parsing") {
  CHECK(harmonic::parse_output_format("table") == OutputFormat::Table);
  CHECK(harmonic::parse_output_format("jsonl") == OutputFormat::Jsonl);
  CHECK(harmonic::parse_output_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(harmonic::parse_output_format("json"), std::invalid_argument);
  CHECK_THROWS_AS(harmonic::parse_output_format(""), std::invalid_argument);
}

TEST_CASE("factorization strings") {
  CHECK(harmonic::factorization_str(harmonic::factorize(1)) == "1");
  CHECK(harmonic::factorization_str(harmonic::factorize(6)) == "2*3");
  CHECK(harmonic::factorization_str(harmonic::factorize(720)) == "2^4*3^2*5");
  CHECK(harmonic::factorization_str(harmonic::factorize(9922500)) == "2^2*3^4*5^4*7^2");
}

TEST_CASE("ratio strings with and without unit denominators") {
  CHECK(harmonic::ratio_str(harmonic::ExactRatio(45, 13)) == "45/13");
  CHECK(harmonic::ratio_str(harmonic::ExactRatio(6, 2)) == "3/1");
  CHECK(harmonic::ratio_str(harmonic::ExactRatio(6, 2), true) == "3");
  CHECK(harmonic::ratio_str(harmonic::ExactRatio(3, 2), true) == "3/2");
}

TEST_CASE("jsonl record is byte-frozen") {
  const auto p = harmonic::profile_of(45);
  CHECK(harmonic::record_jsonl(p) ==
        "{\"n\":45,\"factorization\":\"3^2*5\",\"d\":6,\"d_star\":4,\"d_bistar\":4,"
        "\"sigma\":78,\"sigma_star\":60,\"sigma_bistar\":60,"
        "\"h\":\"45/13\",\"h_star\":\"3/1\",\"h_bistar\":\"3/1\","
        "\"h1\":\"9/2\",\"h2\":\"30/13\",\"h3\":\"9/2\",\"h4\":\"30/13\","
        "\"h5\":\"3/1\",\"h6\":\"3/1\","
        "\"flags\":[\"unitary-harmonic\",\"biunitary-harmonic\",\"h5\",\"h6\"]}");
}

TEST_CASE("csv record is byte-frozen") {
  CHECK(harmonic::record_csv_header() ==
        "n,factorization,d,d_star,d_bistar,sigma,sigma_star,sigma_bistar,"
        "h,h_star,h_bistar,h1,h2,h3,h4,h5,h6,flags");
  const auto p = harmonic::profile_of(6);
  CHECK(harmonic::record_csv(p) ==
        "6,2*3,4,4,4,12,12,12,2/1,2/1,2/1,2/1,2/1,2/1,2/1,2/1,2/1,"
        "harmonic;unitary-harmonic;biunitary-harmonic;h1;h2;h3;h4;h5;h6;"
        "perfect;multiperfect;unitary-perfect;biunitary-perfect;"
        "biunitary-multiperfect;balanced;squarefree");
}

TEST_CASE("table rows carry the three principal means") {
  const std::string header = harmonic::record_table_header();
  CHECK(header.find("factorization") != std::string::npos);
  const std::string row = harmonic::record_table(harmonic::profile_of(45));
  CHECK(row.find("45/13") != std::string::npos);
  CHECK(row.find("unitary-harmonic,biunitary-harmonic,h5,h6") != std::string::npos);
  // Integral means print without the /1 in table mode.
  CHECK(row.find("3/1") == std::string::npos);
}

TEST_CASE("profile dossier marks integral means") {
  const std::string text = harmonic::render_profile_text(harmonic::profile_of(9072));
  CHECK(text.find("n              9072") != std::string::npos);
  CHECK(text.find("factorization  2^4*3^4*7") != std::string::npos);
  CHECK(text.find("sigma**        24192") != std::string::npos);
  CHECK(text.find("12 (integer)") != std::string::npos);
  CHECK(text.find("flags          biunitary-harmonic") != std::string::npos);
}

TEST_CASE("verification outcomes render in both formats") {
  harmonic::VerificationOutcome o;
  o.id = "check";
  o.claim = "nothing in particular";
  o.bounds = "n <= 10";
  o.count("seen", 10);
  CHECK(harmonic::render_outcome_text(o).find("check: PASS (n <= 10)") == 0);
  o.fail(7, "went \"wrong\"");
  const std::string text = harmonic::render_outcome_text(o);
  CHECK(text.find("check: FAIL") == 0);
  CHECK(text.find("n=7") != std::string::npos);
  const std::string jsonl = harmonic::render_outcome_jsonl(o);
  CHECK(jsonl.find("\"passed\":false") != std::string::npos);
  CHECK(jsonl.find("\\\"wrong\\\"") != std::string::npos);
  CHECK(jsonl.find("\"counterexample\"") != std::string::npos);
}

TEST_CASE("census to 1000 and its renderings") {
  const auto r = harmonic::census_report(1000);
  CHECK(r.count_including_one == 9);
  CHECK(r.count_excluding_one == 8);
  CHECK(r.members == std::vector<u64>{1, 6, 45, 60, 90, 270, 420, 630, 672});
  CHECK(r.powerful_members.empty());
  CHECK(r.square_members.empty());
  CHECK_FALSE(r.first_exceptional.has_value());
  REQUIRE(r.shape_catalog.size() == 6);
  CHECK(r.shape_catalog[0].first == "2,1");
  CHECK(r.shape_catalog[0].second == std::vector<u64>{45});
  CHECK(r.shape_catalog[1].second == std::vector<u64>{60, 90});
  CHECK(r.shape_catalog[3].second == std::vector<u64>{420, 630});
  CHECK(r.summary.complete);

  const std::string text = harmonic::render_census_text(r);
  CHECK(text.find("including 1") != std::string::npos);
  const std::string jsonl = harmonic::render_census_jsonl(r);
  CHECK(jsonl.find("\"count_including_one\":9") != std::string::npos);
  CHECK(jsonl.find("\"members\":[1,6,45,60,90,270,420,630,672]") != std::string::npos);

  CHECK_THROWS_AS(harmonic::census_report(0), std::invalid_argument);
}

TEST_CASE("search summaries render hit counts") {
  harmonic::SearchQuery q;
  q.lo = 1;
  q.hi = 10000;
  q.predicates = {harmonic::PredicateTerm{harmonic::PredicateTag::Harmonic, false}};
  harmonic::SearchSummary s =
      harmonic::search(q, {}, [](const harmonic::NumberProfile&) {});
  const std::string text = harmonic::render_summary_text(s);
  CHECK(text.find("11") != std::string::npos);   // hits excluding 1
  CHECK(text.find("harmonic") != std::string::npos);
}
