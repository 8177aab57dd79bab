#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qusp/report.hpp"

namespace {

qusp::Report sample() {
  qusp::Report r;
  r.config["command"] = "demo";
  r.tol = 1e-10;
  r.scalars["nu"] = 0.1;
  qusp::Table t("demo", "n");
  t.add("u_n", {0.0, 1.5, 1.0 / 3.0}).add("a_n", {2.0, 0.25});
  r.tables.push_back(t);
  r.add_residual("r", 1e-12);
  return r;
}

TEST(Report, StatusFollowsResiduals) {
  auto r = sample();
  EXPECT_TRUE(r.passed());
  r.add_residual("big", 1e-9);
  EXPECT_FALSE(r.passed());
  auto nan = sample();
  nan.add_residual("nan", std::numeric_limits<double>::quiet_NaN());
  EXPECT_FALSE(nan.passed());
  auto err = sample();
  err.error = {{"RejectedParameter", "x"}};
  EXPECT_FALSE(err.passed());
}

TEST(Report, NumbersRoundTrip) {
  EXPECT_EQ(qusp::format_number(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(qusp::format_number(4.0), "4.0");
  EXPECT_EQ(std::stod(qusp::format_number(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Report, CsvLayout) {
  EXPECT_EQ(qusp::render(sample(), qusp::Format::Csv),
            "n,u_n,a_n\n"
            "0,0.0,2.0\n"
            "1,1.5,0.25\n"
            "2,0.3333333333333333,\n");
}

TEST(Report, JsonSchemaAndRoundTrip) {
  const std::string text = qusp::render(sample(), qusp::Format::Json);
  const auto parsed = qusp::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [key, value] : parsed.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "payload", "residuals", "status"}));
  EXPECT_EQ(parsed["status"], "pass");
  EXPECT_EQ(parsed["payload"]["tables"]["demo"]["n"].size(), 3u);
  EXPECT_EQ(parsed.dump(2) + "\n", text);
}

TEST(Report, ErrorReport) {
  auto r = sample();
  r.error = {{"RejectedParameter", "bad beta"}};
  const auto parsed = qusp::ordered_json::parse(qusp::render(r, qusp::Format::Json));
  EXPECT_EQ(parsed["error"]["kind"], "RejectedParameter");
  EXPECT_FALSE(parsed.contains("payload"));
  EXPECT_EQ(parsed["status"], "fail");
}

}  // namespace
