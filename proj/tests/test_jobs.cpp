#include "entsym/jobs.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace entsym;

namespace {

JobConfig job(const std::string& command, Json params, const std::string& format = "json") {
  JobConfig c;
  c.command = command;
  c.params = std::move(params);
  c.format = format;
  return c;
}

/// Masks the two fields that legitimately differ between identical runs.
std::string strip_clock(const std::string& text) {
  static const std::regex wall(R"("wall_time_s": ?[^,}\n]*)");
  static const std::regex stamp(R"("timestamp": ?"[^"]*")");
  return std::regex_replace(std::regex_replace(text, wall, "\"wall_time_s\":_"), stamp, "\"timestamp\":_");
}

std::vector<JobConfig> sample_jobs() {
  return {
      job("dims", {{"n", 4}, {"d", 3}}),
      job("spectrum", {{"source", "iid"}, {"p", "7/10,3/10"}, {"n", 6}}),
      job("spectrum", {{"source", "clone1"}, {"p", "0.7,0.3"}, {"m", 8}, {"r", 2}, {"form", "flat"}}),
      job("spectrum", {{"source", "clone2"}, {"p", "0.7,0.3"}, {"m", 6}, {"n", 3}, {"view", "merged"}}),
      job("fidelity-curve", {{"source", "iid"}, {"p", "0.7,0.3"}, {"n", 30}, {"R_step", 0.1}}),
      job("rates", {{"source", "clone1"}, {"p", "0.7,0.3"}, {"m", 40}, {"r", 2}, {"epsilon", "0.01,0.05"}}),
      job("exponent", {{"p", "0.7,0.3"}, {"r", 2}, {"R", 1.0}, {"grid", 201}}),
      job("tradeoff", {{"p", "0.7,0.3"}, {"r", 2}, {"eta", 0.02}, {"grid", 201}}),
      job("protocol", {{"source", "iid"}, {"p", "0.7,0.3"}, {"n", 20}, {"R", 0.9}, {"trials", 2000}, {"seed", 5}}),
      job("protocol", {{"source", "iid"}, {"p", "0.7,0.3"}, {"n", 20}, {"protocol", "distillation"}, {"trials", 2000}}),
      job("converse-report", {{"p", "0.7,0.3"}, {"ms", "10,20"}, {"epsilon", "0.01,0.05"}}),
  };
}

}  // namespace

TEST(Jobs, DimsPayload) {
  const auto out = run(job("dims", {{"n", 3}, {"d", 2}}));
  ASSERT_EQ(out.exit_code, kExitOk) << out.error.dump();
  const Document doc = parse_json_document(out.rendered);
  EXPECT_EQ(doc.payload.at("blocks").size(), 2u);
  EXPECT_EQ(doc.payload.at("blocks")[0].at("dimU"), "4");
  EXPECT_EQ(doc.payload.at("blocks")[1].at("dimV"), "2");
  EXPECT_EQ(doc.payload.at("d_pow_n"), "8");
  EXPECT_TRUE(doc.payload.at("complete").get<bool>());
  EXPECT_EQ(doc.meta.command, "dims");
  EXPECT_EQ(doc.meta.config.at("params").at("n"), 3);
}

TEST(Jobs, EveryCommandSucceedsInBothFormats) {
  for (auto config : sample_jobs()) {
    for (const char* format : {"json", "csv"}) {
      config.format = format;
      const auto out = run(config);
      EXPECT_EQ(out.exit_code, kExitOk) << config.command << " " << format << " " << out.error.dump();
      EXPECT_FALSE(out.rendered.empty());
    }
  }
}

TEST(Jobs, OutputsRoundTripThroughTheirSchema) {
  for (auto config : sample_jobs()) {
    config.format = "json";
    const auto json_out = run(config);
    ASSERT_EQ(json_out.exit_code, kExitOk) << config.command;
    if (config.command == "protocol") {
      const auto [meta, parsed] = parse_json_lines(json_out.rendered);
      EXPECT_EQ(render_json_lines(meta, parsed), json_out.rendered);
    } else {
      EXPECT_EQ(render_json(parse_json_document(json_out.rendered)), json_out.rendered) << config.command;
    }
    config.format = "csv";
    const auto csv_out = run(config);
    ASSERT_EQ(csv_out.exit_code, kExitOk) << config.command;
    const auto [meta, table] = parse_csv(csv_out.rendered);
    EXPECT_EQ(render_csv(meta, table), csv_out.rendered) << config.command;
  }
}

TEST(Jobs, IdenticalConfigGivesIdenticalPayload) {
  for (auto config : sample_jobs()) {
    for (const char* format : {"json", "csv"}) {
      config.format = format;
      const auto a = run(config);
      const auto b = run(config);
      EXPECT_EQ(strip_clock(a.rendered), strip_clock(b.rendered)) << config.command << " " << format;
    }
  }
  auto threaded = sample_jobs()[8];
  const auto single = run(threaded);
  threaded.threads = 4;
  const auto multi = run(threaded);
  const auto [m1, r1] = parse_json_lines(single.rendered);
  const auto [m2, r2] = parse_json_lines(multi.rendered);
  ASSERT_EQ(r1.results.size(), r2.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) EXPECT_EQ(r1.results[i].outcome, r2.results[i].outcome);
}

TEST(Jobs, ErrorExitCodes) {
  EXPECT_EQ(run(job("nope", Json::object())).exit_code, kExitInvalid);
  EXPECT_EQ(run(job("dims", {{"n", 3}})).exit_code, kExitInvalid);
  EXPECT_EQ(run(job("dims", {{"n", 3}, {"d", 2}, {"bogus", 1}})).exit_code, kExitInvalid);
  EXPECT_EQ(run(job("dims", {{"n", "x"}, {"d", 2}})).exit_code, kExitInvalid);
  EXPECT_EQ(run(job("dims", {{"n", 3}, {"d", 2}}, "xml")).exit_code, kExitInvalid);
  EXPECT_EQ(run(job("spectrum", {{"source", "iid"}, {"p", "0.5,0.6"}, {"n", 3}})).exit_code, kExitInvalid);
  EXPECT_EQ(run(job("spectrum", {{"source", "clone1"}, {"p", "0.7,0.3"}, {"m", 5}, {"r", 2}})).exit_code,
            kExitInvalid);
  EXPECT_EQ(run(job("spectrum", {{"source", "iid"}, {"p", "0.5,0.5"}, {"n", 50}, {"max_partitions", 3}})).exit_code,
            kExitBudget);
  EXPECT_EQ(run(job("exponent", {{"p", "0.7,0.3"}, {"R", 1.5}})).exit_code, kExitInfeasible);
  EXPECT_EQ(run(job("exponent", {{"p", "0.4,0.3,0.2,0.1"}, {"R", 1.0}})).exit_code, kExitInvalid);
  const auto bad = run(job("rates", {{"source", "iid"}, {"p", "0.7,0.3"}, {"n", 5}, {"epsilon", 2}}));
  EXPECT_EQ(bad.exit_code, kExitInvalid);
  EXPECT_EQ(bad.error.at("kind"), "invalid_argument");
  EXPECT_TRUE(bad.rendered.empty());
}

TEST(Jobs, ConfigParsing) {
  const Json j = {{"command", "dims"},
                  {"params", {{"n", 2}, {"d", 2}}},
                  {"output", {{"format", "csv"}}},
                  {"threads", 2}};
  const auto config = JobConfig::from_json(j);
  EXPECT_EQ(config.command, "dims");
  EXPECT_EQ(config.format, "csv");
  EXPECT_EQ(config.threads, 2);
  EXPECT_EQ(JobConfig::from_json(config.to_json()).to_json(), config.to_json());
  EXPECT_THROW(JobConfig::from_json(Json{{"command", "dims"}, {"extra", 1}}), InvalidArgument);
  EXPECT_THROW(JobConfig::from_json(Json::array()), InvalidArgument);
}

TEST(Jobs, WritesToOutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "entsym_jobs_test";
  std::filesystem::remove_all(dir);
  ::setenv(kOutputDirEnv, dir.c_str(), 1);
  const auto out = run(job("dims", {{"n", 2}, {"d", 2}}, "csv"));
  ::unsetenv(kOutputDirEnv);
  ASSERT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.path, (dir / "dims.csv").string());
  std::ifstream in(out.path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), out.rendered);

  auto explicit_path = job("dims", {{"n", 2}, {"d", 2}});
  explicit_path.output_path = (dir / "nested" / "x.json").string();
  EXPECT_EQ(run(explicit_path).path, explicit_path.output_path);
  EXPECT_TRUE(std::filesystem::exists(explicit_path.output_path));
  std::filesystem::remove_all(dir);
}

TEST(Jobs, OracleCheckScopes) {
  const auto out = run(job("oracle-check", {{"scope", "exponent"}}));
  EXPECT_EQ(out.exit_code, kExitOk) << out.error.dump();
  EXPECT_FALSE(out.messages.empty());
  EXPECT_EQ(out.messages.front().rfind("PASS", 0), 0u);
  EXPECT_EQ(run(job("oracle-check", {{"scope", "everything"}})).exit_code, kExitInvalid);
}
