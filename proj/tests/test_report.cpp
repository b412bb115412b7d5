#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "defzero/error.hpp"
#include "defzero/report.hpp"
#include "support.hpp"

using namespace defzero::report;
using defzero::Error;
using defzero::ErrorCode;
using Json = nlohmann::json;

namespace {

std::vector<Json> run(const std::string& spec, std::uint32_t p, const std::string& q) {
  Options o;
  o.prime = p;
  o.q_selector = q;
  std::vector<Json> out;
  for (const auto& r : verify(load_group(spec), o)) {
    out.push_back(Json::parse(r.json));
    CHECK(r.verdicts.ok());
  }
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

std::vector<std::string> corpus_lines(const std::string& text, unsigned jobs, CorpusSummary* summary = nullptr) {
  std::istringstream in(text);
  Options o;
  o.jobs = jobs;
  std::vector<std::string> lines;
  const auto s = run_corpus(parse_corpus(in, support::source_path("corpus")), o,
                            [&](const std::string& l) { lines.push_back(l); });
  if (summary) *summary = s;
  return lines;
}

}  // namespace

TEST_CASE("Q selectors") {
  const GroupSource d8 = load_group(support::source_path("corpus/groups/d8.grp"));
  REQUIRE(d8.file_subgroup.has_value());
  CHECK(resolve_q(d8, 2, "auto").size() == 6);
  CHECK(resolve_q(d8, 2, "op").front().order() == 8);
  CHECK(resolve_q(d8, 2, "trivial").front().order() == 1);
  CHECK(resolve_q(d8, 2, "1").front().order() == 1);
  CHECK(resolve_q(d8, 2, "whole").front().order() == 8);
  CHECK(resolve_q(d8, 2, "file").front().order() == 2);
  CHECK(resolve_q(d8, 2, "gens:(1 2 3 4)").front().order() == 4);
  CHECK(resolve_q(d8, 2, support::source_path("corpus/groups/c4_in_d8.grp")).front().order() == 4);
  CHECK(code_of([&] { (void)resolve_q(d8, 2, "bogus"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)resolve_q(d8, 2, "gens:(1 2)"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)resolve_q(load_group("symmetric 3"), 2, "file"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("splitting degree") {
  CHECK(splitting_degree(*load_group("alternating 4").group, 2) == 2);
  CHECK(splitting_degree(*load_group("symmetric 4").group, 3) == 2);
  CHECK(splitting_degree(*load_group("cyclic 7").group, 2) == 3);
  CHECK(splitting_degree(*load_group("dihedral 8").group, 2) == 1);
  CHECK(splitting_degree(*load_group("symmetric 3").group, 2) == 2);
}

TEST_CASE("verify reports") {
  const auto s4 = run("symmetric 4", 2, "auto");
  REQUIRE(s4.size() == 2);
  CHECK(s4[0]["q_order"] == 1);
  CHECK(s4[1]["q_order"] == 4);
  CHECK(s4[1]["dim_wq"] == 1);
  CHECK(s4[1]["oracle"]["defect_zero"] == 1);
  CHECK(s4[1]["match"] == true);
  CHECK(s4[1]["all_properties"] == true);
  CHECK_FALSE(s4[1].contains("timings_ms"));

  const auto c3 = run("cyclic 3", 2, "trivial");
  CHECK(c3[0]["dim_wq"] == 3);
  CHECK(c3[0]["oracle"]["defect_zero"] == 3);

  const auto q8 = run("quaternion 8", 2, "whole");
  CHECK(q8[0]["dim_wq"] == 1);
  CHECK(q8[0]["quotient_order"] == 1);

  const auto a4 = run("alternating 4", 2, "op");
  CHECK(a4[0]["dim_wq"] == 3);
  CHECK(a4[0]["extension"]["degree"] == 2);
  CHECK(a4[0]["extension"]["dim_wq"] == 3);

  Options o;
  o.prime = 2;
  o.q_selector = "op";
  o.timings = true;
  o.dump_bases = true;
  const auto r = verify(load_group("sl23"), o);
  const Json j = Json::parse(r.front().json);
  CHECK(j["dim_wq"] == 3);
  CHECK(j.contains("timings_ms"));
  CHECK(j["bases"]["wq"].size() == 3);

  o.q_selector = "gens:(1 2)";
  CHECK(code_of([&] { (void)verify(load_group("symmetric 3"), o); }) == ErrorCode::NotNormal);
}

TEST_CASE("reports are deterministic") {
  Options o;
  o.prime = 3;
  const auto a = verify(load_group("symmetric 4"), o);
  const auto b = verify(load_group("symmetric 4"), o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].json == b[i].json);
}

TEST_CASE("inspect") {
  Options o;
  o.prime = 2;
  o.q_selector = "op";
  const auto lines = inspect(load_group("symmetric 4"), o);
  REQUIRE(lines.size() == 1);
  const Json j = Json::parse(lines.front());
  CHECK(j["restricted_span_dim"] == 1);
  CHECK_FALSE(j["qualifying"].empty());
  CHECK(j["spanning_candidates"].size() == 9);

  o.prime = 5;
  o.q_selector = "trivial";
  const Json c = Json::parse(inspect(load_group("symmetric 3"), o).front());
  CHECK(c["defect_zero_classes"].size() == 3);

  o.prime = 2;
  o.q_selector = "whole";
  const Json d = Json::parse(inspect(load_group("dihedral 8"), o).front());
  CHECK(d["qualifying"].size() == 1);
  CHECK(d["restricted_span_dim"] == 1);
}

TEST_CASE("corpus parsing") {
  std::istringstream ok("# comment\n\n s4 ; symmetric 4 ; 2 ; auto  # trailing\nd8 ; groups/d8.grp ; 2 ; file\n");
  const auto entries = parse_corpus(ok, support::source_path("corpus"));
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "s4");
  CHECK(entries[0].group == "symmetric 4");
  CHECK(entries[0].prime == 2);
  CHECK(entries[0].q_selector == "auto");
  CHECK(entries[1].group == support::source_path("corpus") + "/groups/d8.grp");
  for (const char* bad : {"a ; b ; 2\n", "a ; symmetric 3 ; x ; auto\n", "a ; symmetric 3 ; 1 ; auto\n", " ; g ; 2 ; auto\n"}) {
    std::istringstream in(bad);
    CHECK(code_of([&] { (void)parse_corpus(in); }) == ErrorCode::Parse);
  }
  CHECK(code_of([] { (void)load_corpus("/nonexistent.corpus"); }) == ErrorCode::Io);
}

TEST_CASE("corpus runs") {
  CorpusSummary s;
  const auto empty = corpus_lines("", 2, &s);
  REQUIRE(empty.size() == 1);
  CHECK(s.entries == 0);
  CHECK(s.ok());
  CHECK(Json::parse(empty.back())["summary"]["ok"] == true);

  const std::string text =
      "s3 ; symmetric 3 ; 2 ; auto\n"
      "bad ; symmetric 3 ; 2 ; gens:(1 2)\n"
      "a4 ; alternating 4 ; 2 ; op\n"
      "d8 ; groups/d8.grp ; 2 ; groups/c4_in_d8.grp\n";
  const auto one = corpus_lines(text, 1, &s);
  CHECK(s.entries == 4);
  CHECK(s.errors == 1);
  CHECK_FALSE(s.ok());
  CHECK(Json::parse(one[1])["error"]["code"] == "NotNormal");
  CHECK(corpus_lines(text, 4) == one);
  CHECK(corpus_lines(text, 16) == one);
}
