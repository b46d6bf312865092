#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

#include "vacfluct_cli/app.hpp"
#include "vacfluct_cli/config_file.hpp"
#include "vacfluct_cli/json_io.hpp"
#include "vacfluct_cli/sweep.hpp"

using namespace vacfluct;
using namespace vacfluct::cli;
using nlohmann::json;

namespace {
struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vacfluct");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string &s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    v.push_back(l);
  return v;
}
} // namespace

TEST(Cli, DispersionJsonRoundTrip) {
  const CliRun r = run_cli({"dispersion", "--component", "z", "--tau", "100", "--z", "1", "--b", "0.5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  const DispersionResult d = j.at("result").get<DispersionResult>();
  EXPECT_EQ(d.component, Component::z);
  EXPECT_DOUBLE_EQ(d.sigma, 0.02);
  EXPECT_TRUE(d.regime.late_time);
  EXPECT_NEAR(d.value, 1.5705951818e-4, 1e-12);
  EXPECT_LT(j.at("route_rel_difference").get<double>(), 1e-8);

  const json again = d;
  EXPECT_EQ(again.get<DispersionResult>().value, d.value);
}

TEST(Cli, SweepCsvShape) {
  const CliRun r = run_cli({"sweep", "--component", "x", "--param", "tau", "--from", "10", "--to",
                         "100", "--points", "5", "--log", "--b", "0.5", "--threads", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::vector<std::string> data;
  std::string header;
  for (const std::string &l : lines_of(r.out)) {
    if (l.empty() || l[0] == '#')
      continue;
    if (header.empty())
      header = l;
    else
      data.push_back(l);
  }
  EXPECT_EQ(header,
            "param,value,error_estimate,point_particle_value,late_time_asymptote,regime_flags");
  ASSERT_EQ(data.size(), 5u);
  EXPECT_EQ(data.front().substr(0, 3), "10,");
  EXPECT_EQ(data.back().substr(0, 4), "100,");
}

TEST(Cli, SweepJson) {
  const CliRun r = run_cli({"sweep", "--param", "z", "--from", "1", "--to", "2", "--points", "3",
                         "--tau", "0.5", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.contains("rows"));
  EXPECT_EQ(j["rows"].size(), 3u);
}

TEST(Cli, SweepOrderIndependentOfThreads) {
  SweepRequest req;
  req.parameter = SweepParameter::tau;
  req.range = {5.0, 50.0, 7, Spacing::log};
  req.fixed.packet_width_b = 0.3;
  req.threads = 1;
  const auto one = run_sweep(req);
  req.threads = 3;
  const auto three = run_sweep(req);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].param, three[i].param);
    EXPECT_EQ(one[i].value, three[i].value);
  }
  EXPECT_EQ(one.front().param, 5.0);
  EXPECT_EQ(one.back().param, 50.0);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
  const auto path = std::filesystem::temp_directory_path() / "vacfluct_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# test file\n\ntau = 50\nz=2\n";
  }
  const CliRun r = run_cli({"--config", path.string(), "dispersion", "--z", "1"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["config"]["tau"].get<double>(), 50.0);
  EXPECT_DOUBLE_EQ(j["config"]["z"].get<double>(), 1.0);
}

TEST(Cli, ConfigParseErrorsNameTheLine) {
  std::istringstream in("tau=1\nnonsense\n");
  try {
    parse_config(in, "mem");
    FAIL() << "expected UsageError";
  } catch (const UsageError &e) {
    EXPECT_NE(std::string(e.what()).find("mem:2"), std::string::npos) << e.what();
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"dispersion", "--z", "-1"}).code, kUsage);
  EXPECT_EQ(run_cli({"sweep", "--param", "tau", "--from", "2", "--to", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"dispersion", "--z", "1", "--tau", "3"}).code, kOk);
  // tau = 2z with b = 0 sits on the light-cone pole.
  EXPECT_EQ(run_cli({"dispersion", "--z", "1", "--tau", "2"}).code, kNumeric);
}

TEST(Cli, ErrorJson) {
  const CliRun r = run_cli({"--error-json", "dispersion", "--tau", "0"});
  EXPECT_EQ(r.code, kUsage);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "domain");
  EXPECT_EQ(j["error"]["field"], "measure_time_tau");
  EXPECT_EQ(j["error"]["exit_code"], kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SwitchingAndLimits) {
  CliRun r = run_cli({"switching", "--tau", "2", "--mu", "0.1", "--t", "0", "1.2", "--chi", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("0.489689094606"), std::string::npos);

  r = run_cli({"limits", "--component", "both", "--format", "json", "--tau", "50", "--b", "0.5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["limits"].size(), 2u);
}

TEST(Cli, SlopeHelpers) {
  std::vector<SweepRow> rows(2);
  rows[0].param = 1;
  rows[0].value = 1;
  rows[1].param = 10;
  rows[1].value = 0.01;
  EXPECT_NEAR(sweep_slope(rows), -2.0, 1e-12);
  EXPECT_EQ(slope_label(-2.0), "inverse-square");
  rows[1].value = -0.01;
  EXPECT_TRUE(std::isnan(sweep_slope(rows)));
  EXPECT_EQ(slope_label(sweep_slope(rows)), "undefined");
}

TEST(Cli, VersionsAreEchoed) {
  CliRun r = run_cli({"--version"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("vacfluct ", 0), 0u) << r.out;
  r = run_cli({"sweep", "--param", "b", "--from", "0", "--to", "1", "--points", "2", "--tau", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("# " + version_string() + "\n", 0), 0u) << r.out;
}
