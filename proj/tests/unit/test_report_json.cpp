#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "divbound/arith.hpp"
#include "divbound/report_json.hpp"

namespace divbound {
namespace {

using Json = nlohmann::ordered_json;

Json parse_line(const std::string& line) {
  EXPECT_EQ(line.find('\n'), std::string::npos);
  return Json::parse(line);
}

TEST(ReportJson, RhoFieldsInOrder) {
  Json j = parse_line(to_json_line(rho(parse_factored("2^26*3^16"))));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"kind", "n", "log_n", "omega", "log_tau", "theta", "rho",
                                            "exceeds_two", "in_theorem_range", "escalated"}));
  EXPECT_EQ(j["kind"], "rho");
  EXPECT_EQ(j["n"], "2^26*3^16");
  EXPECT_NEAR(j["rho"].get<double>(), 2.0008012822217082, 1e-15);
  EXPECT_EQ(j["omega"], 2);
}

TEST(ReportJson, NonFiniteBecomesNull) {
  GridCertificate c;
  c.k = 7;
  c.slack = -std::numeric_limits<double>::infinity();
  c.diagnostic = "non-finite value at x=1";
  Json j = parse_line(to_json_line(c));
  EXPECT_TRUE(j["slack"].is_null());
  EXPECT_TRUE(j["grid_max"].is_null());
  EXPECT_EQ(j["diagnostic"], "non-finite value at x=1");
  EXPECT_EQ(j["k"], 7);
}

TEST(ReportJson, CertificateSummary) {
  std::vector<GridCertificate> certs(3);
  for (std::size_t i = 0; i < 3; ++i) {
    certs[i].k = 44 + i;
    certs[i].slack = 0.5 - 0.1 * static_cast<double>(i);
    certs[i].pass = true;
    certs[i].points_evaluated = 10;
  }
  Json j = parse_line(certificates_summary_json("verify-mid", certs));
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["points"], 30);
  EXPECT_EQ(j["min_slack_k"], 46);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_FALSE(j.contains("wall_seconds"));
  Json timed = parse_line(certificates_summary_json("verify-mid", certs, 1.5));
  EXPECT_EQ(timed["wall_seconds"], 1.5);
}

TEST(ReportJson, ScanAndSummary) {
  ScanReport r;
  r.n_lo = 17;
  r.n_hi = 100;
  r.max_rho = 1.97;
  r.argmax_n = 32;
  Json j = parse_line(to_json_line(r));
  EXPECT_TRUE(j["violations"].is_array());
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_TRUE(j["pass"].get<bool>());
  r.violations.push_back({99, 2.5});
  Json s = parse_line(scan_summary_json(r, 1));
  EXPECT_EQ(s["violations"][0]["n"], 99);
  EXPECT_FALSE(s["pass"].get<bool>());

  RunSummary summary{"all", true, {{"scan", true}, {"lemmas", true}}, std::nullopt};
  Json a = parse_line(to_json_line(summary));
  EXPECT_EQ(a["parts"]["lemmas"], true);
  EXPECT_FALSE(a.contains("wall_seconds"));
}

TEST(ReportJson, KappaAndLemmaReports) {
  Json k = parse_line(to_json_line(KappaResult{9, 1.3840127408266659}));
  EXPECT_EQ(k["k"], 9);
  LemmaReport report;
  report.checks.push_back({"x", "range", 5, 1, {"k=3"}, -0.5});
  Json l = parse_line(to_json_line(report));
  EXPECT_FALSE(l["pass"].get<bool>());
  EXPECT_EQ(l["checks"][0]["examples"][0], "k=3");
}

}  // namespace
}  // namespace divbound
