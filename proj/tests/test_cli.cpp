#include <gtest/gtest.h>

#include <set>

#include "json.hpp"

#include "cli.hpp"
#include "rigidspace/verify.hpp"

using namespace rigidspace;
using json = nlohmann::json;

namespace
{

RunConfig json_config()
{
  RunConfig c;
  c.format = OutputFormat::json;
  return c;
}

std::string last_line(const std::string &text)
{
  auto const end = text.find_last_not_of('\n');
  auto const start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - start);
}

} // namespace

TEST(Enumerate, Orders)
{
  RunConfig const text;
  EXPECT_EQ(last_line(cli::cmd_enumerate("P+:2", text).output), "order: 4");
  EXPECT_EQ(last_line(cli::cmd_enumerate("P:2", text).output), "order: 8");
  EXPECT_EQ(last_line(cli::cmd_enumerate("Q8", text).output), "order: 8");
  EXPECT_EQ(last_line(cli::cmd_enumerate("P-:3", text).output), "order: 24");
  EXPECT_EQ(last_line(cli::cmd_enumerate("P:1", text).output), "order: 2");
  EXPECT_EQ(last_line(cli::cmd_enumerate("P+:1", text).output), "order: 1");
}

TEST(Enumerate, JsonIsCanonicalAndDeterministic)
{
  auto const a = cli::cmd_enumerate("P+:3", json_config()).output;
  EXPECT_EQ(a, cli::cmd_enumerate("P+:3", json_config()).output);
  auto const doc = json::parse(a);
  EXPECT_EQ(doc["order"], 24);
  auto const elements = doc["elements"].get<std::vector<std::string>>();
  std::vector<ArrowPermutation> parsed;
  for (auto const &e : elements)
    parsed.push_back(parse_arrow_permutation(e));
  EXPECT_TRUE(std::is_sorted(parsed.begin(), parsed.end()));
}

TEST(Enumerate, BadSpecs)
{
  RunConfig const c;
  EXPECT_THROW(cli::cmd_enumerate("P", c), cli::UsageError);
  EXPECT_THROW(cli::cmd_enumerate("R:3", c), cli::UsageError);
  EXPECT_THROW(cli::cmd_enumerate("P:0", c), cli::UsageError);
  EXPECT_THROW(cli::cmd_enumerate("P:9", c), cli::UsageError);
  EXPECT_THROW(cli::cmd_enumerate("Ppm:2+x", c), cli::UsageError);
}

TEST(Quotient, Examples)
{
  RunConfig const c;
  EXPECT_EQ(cli::cmd_quotient("H+:3", "110", std::nullopt, c).output.substr(0, 11), "syndrome: 0");
  auto const doc = json::parse(cli::cmd_quotient("Hpm:2+2", "1011", "b", json_config()).output);
  EXPECT_EQ(doc["syndrome"], "10");
  EXPECT_EQ(doc["cosets"], 4);
  EXPECT_EQ(doc["factorization"]["classes"].size(), 3u);
  auto const full = json::parse(cli::cmd_quotient("full:3", "101", std::nullopt, json_config()).output);
  EXPECT_EQ(full["syndrome"], "");
  EXPECT_EQ(full["cosets"], 1);
  EXPECT_THROW(cli::cmd_quotient("H+:3", "10", std::nullopt, c), cli::UsageError);
  EXPECT_THROW(cli::cmd_quotient("H+:3", "1a0", std::nullopt, c), cli::UsageError);
  EXPECT_THROW(cli::cmd_quotient("H+:3", "110", "x", c), cli::UsageError);
}

TEST(Decompose, Examples)
{
  RunConfig const c;
  auto const id = json::parse(cli::cmd_decompose("[[1,0,0],[0,1,0],[0,0,1]]", json_config()).output);
  EXPECT_TRUE(id["accepted"]);
  EXPECT_TRUE(id["generators"].empty());
  EXPECT_EQ(id["reconstruction_error"], 0.0);

  auto const so4 = cli::matrix_to_json(random_so(4, 12));
  auto const r = cli::cmd_decompose(so4, json_config());
  EXPECT_EQ(r.exit_code, cli::kSuccess);
  EXPECT_LT(json::parse(r.output)["reconstruction_error"].get<double>(), 1e-9);

  auto const reflection = cli::cmd_decompose("[[1,0],[0,-1]]", c);
  EXPECT_EQ(reflection.exit_code, cli::kVerificationFailure);
  EXPECT_NE(reflection.output.find("det = -1"), std::string::npos);

  EXPECT_THROW(cli::cmd_decompose("[[1,0],[0]]", c), cli::UsageError);
  EXPECT_THROW(cli::cmd_decompose("not json", c), cli::UsageError);
  EXPECT_THROW(cli::cmd_decompose("[[[0,1]]]", c), cli::UsageError);
}

TEST(MatrixJson, ComplexEntries)
{
  ComplexMatrix const m = cli::parse_matrix_json("[[[0,1],2],[3,[4,-5]]]");
  EXPECT_EQ(m(0, 0), std::complex<double>(0, 1));
  EXPECT_EQ(m(0, 1), std::complex<double>(2, 0));
  EXPECT_EQ(m(1, 1), std::complex<double>(4, -5));
  EXPECT_THROW(cli::parse_matrix_json("[[1,\"a\"],[0,1]]"), cli::UsageError);
}

TEST(Embed, Examples)
{
  RunConfig const c;
  EXPECT_EQ(cli::cmd_embed("su-to-so", 3, c).exit_code, cli::kSuccess);
  EXPECT_EQ(cli::cmd_embed("su-to-so", 1, c).exit_code, cli::kSuccess);
  auto const quat = cli::cmd_embed("quat-to-perm", 2, json_config());
  EXPECT_EQ(quat.exit_code, cli::kSuccess);
  EXPECT_TRUE(validate_report_json(quat.output).empty());
  EXPECT_NE(quat.output.find("8 elements"), std::string::npos);
  EXPECT_THROW(cli::cmd_embed("other", 2, c), cli::UsageError);
  EXPECT_THROW(cli::cmd_embed("su-to-so", 0, c), cli::UsageError);
  EXPECT_THROW(cli::cmd_embed("quat-to-perm", 1, c), cli::UsageError);
}

TEST(Verify, SuiteNames)
{
  EXPECT_EQ(parse_suite("section2"), Suite::section2);
  EXPECT_THROW(parse_suite(""), std::invalid_argument);
  EXPECT_THROW(parse_suite("section9"), std::invalid_argument);
  EXPECT_THROW(cli::cmd_verify("", RunConfig{}), cli::UsageError);
}

TEST(Verify, ConfigBounds)
{
  RunConfig c;
  c.max_n = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_n = 6;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_n = 4;
  c.tolerance = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Verify, SectionTwoCanonicalShapesPass)
{
  auto const reports = run_suite(Suite::section2, RunConfig{});
  ASSERT_FALSE(reports.empty());
  for (auto const &r : reports) {
    // Block shapes with a block of two or more sites reach all of P_n.
    auto const at = r.claim_id.find("blocks:");
    bool const multi_site = at != std::string::npos &&
                            r.claim_id.find_first_of("23456789", at) != std::string::npos;
    if (!multi_site)
      EXPECT_EQ(r.status, Status::pass) << r.claim_id << ": " << r.detail;
  }
}

TEST(Verify, ReportsAreSortedUniqueAndAnchored)
{
  auto const reports = run_suite(Suite::all, RunConfig{});
  std::set<std::string> ids;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    EXPECT_TRUE(ids.insert(reports[k].claim_id).second) << reports[k].claim_id;
    EXPECT_FALSE(reports[k].anchor.empty());
    if (k > 0)
      EXPECT_LT(reports[k - 1].claim_id, reports[k].claim_id);
  }
}

TEST(Verify, JsonIsDeterministicAndValid)
{
  RunConfig const c = json_config();
  auto const reports = run_suite(Suite::section3, c);
  std::string const a = render_json(reports, Suite::section3, c);
  std::string const b = render_json(run_suite(Suite::section3, c), Suite::section3, c);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(validate_report_json(a).empty());
  EXPECT_EQ(json::parse(a)["schema"], "rigidspace-report/1");
  EXPECT_EQ(a.find("runtime_ms"), std::string::npos);

  RunConfig timed = c;
  timed.timings = true;
  std::string const t = render_json(reports, Suite::section3, timed);
  EXPECT_NE(t.find("runtime_ms"), std::string::npos);
  EXPECT_TRUE(validate_report_json(t).empty());
}

TEST(Verify, SeedChangesSampledValuesOnly)
{
  RunConfig a = json_config(), b = json_config();
  b.seed = 17;
  auto const ra = run_suite(Suite::section0, a), rb = run_suite(Suite::section0, b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    EXPECT_EQ(ra[k].claim_id, rb[k].claim_id);
    EXPECT_EQ(ra[k].status, rb[k].status);
  }
}

TEST(Verify, ExitCodeContract)
{
  VerificationReport pass, fail, skip;
  pass.status = Status::pass;
  fail.status = Status::fail;
  skip.status = Status::skipped;
  EXPECT_EQ(exit_code({}), 0);
  EXPECT_EQ(exit_code({pass, skip}), 0);
  EXPECT_EQ(exit_code({pass, fail, skip}), 1);
}

TEST(Verify, ValidatorRejectsBrokenReports)
{
  EXPECT_FALSE(validate_report_json("{").empty());
  EXPECT_FALSE(validate_report_json("[]").empty());
  json doc = json::parse(render_json({}, Suite::all, RunConfig{}));
  EXPECT_TRUE(validate_report_json(doc.dump()).empty());
  doc["schema"] = "rigidspace-report/2";
  EXPECT_FALSE(validate_report_json(doc.dump()).empty());

  VerificationReport r;
  r.claim_id = "X";
  r.status = Status::pass;
  r.computed = std::int64_t{1};
  r.expected = std::int64_t{1};
  r.comparator = "==";
  r.anchor = "topic";
  json two = json::parse(render_json({r, r}, Suite::all, RunConfig{}));
  EXPECT_FALSE(validate_report_json(two.dump()).empty()); // duplicate ids
  json one = json::parse(render_json({r}, Suite::all, RunConfig{}));
  one["summary"]["passed"] = 0;
  EXPECT_FALSE(validate_report_json(one.dump()).empty());
  one = json::parse(render_json({r}, Suite::all, RunConfig{}));
  one["reports"][0].erase("anchor");
  EXPECT_FALSE(validate_report_json(one.dump()).empty());
}
