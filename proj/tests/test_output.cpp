#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pushpull/errors.hpp"
#include "pushpull/output.hpp"
#include "pushpull/sim.hpp"

using namespace pushpull;

namespace {

OutputRecord sampleRecord() {
  OutputRecord rec;
  rec.schema = "pushpull.test.v1";
  rec.command = "pushpull test --x 1";
  rec.meta.emplace_back("note", "x");
  rec.columns = {"a", "b", "c"};
  rec.addRow({std::int64_t{1}, 0.5, std::string("plain")});
  rec.addRow({std::int64_t{2}, 1.0 / 3.0, std::string("quote\"and,comma")});
  return rec;
}

}  // namespace

TEST_CASE("doubles render with the shortest form that round-trips") {
  const double values[] = {1.0 / 3.0,  0.1, 1e-300, 6.02214076e23, 870.0923852256878,
                           -2.5e-7, 1.0};
  for (double v : values) {
    const std::string s = formatDouble(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(formatDouble(0.5) == "0.5");
  CHECK(formatDouble(0.96) == "0.96");
  CHECK(formatDouble(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("csv layout: comment header, column row, escaped cells") {
  std::ostringstream os;
  writeCsv(sampleRecord(), os);
  CHECK(os.str() ==
        "# schema: pushpull.test.v1\n"
        "# command: pushpull test --x 1\n"
        "# note: x\n"
        "a,b,c\n"
        "1,0.5,plain\n"
        "2,0.3333333333333333,\"quote\"\"and,comma\"\n");
}

TEST_CASE("json-lines layout: head object then one object per row") {
  std::ostringstream os;
  writeJsonLines(sampleRecord(), os);
  std::istringstream in(os.str());
  std::string line;

  REQUIRE(std::getline(in, line));
  const nlohmann::json head = nlohmann::json::parse(line);
  CHECK(head.at("schema") == "pushpull.test.v1");
  CHECK(head.at("command") == "pushpull test --x 1");
  CHECK(head.at("note") == "x");

  REQUIRE(std::getline(in, line));
  const nlohmann::json r0 = nlohmann::json::parse(line);
  CHECK(r0.at("a") == 1);
  CHECK(r0.at("b") == 0.5);
  CHECK(r0.at("c") == "plain");

  REQUIRE(std::getline(in, line));
  const nlohmann::json r1 = nlohmann::json::parse(line);
  CHECK(r1.at("c") == "quote\"and,comma");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("format names") {
  CHECK(parseOutputFormat("csv") == OutputFormat::csv);
  CHECK(parseOutputFormat("json-lines") == OutputFormat::jsonLines);
  CHECK_THROWS_AS(parseOutputFormat("yaml"), DomainError);
}

TEST_CASE("simulation reports flatten losslessly") {
  SimConfig sim;
  sim.net = {6, 2, 1};
  sim.algorithm = Algorithm::push;
  sim.replications = 50;
  sim.seed = 1;
  sim.levels = {0.5};
  const SimReport report = runMonteCarlo(sim, 1);

  OutputRecord rec;
  rec.schema = "pushpull.simulate.v1";
  rec.command = "cmd";
  appendSimReportRows(rec, report, true);

  REQUIRE(rec.columns == std::vector<std::string>{"section", "key", "index", "value"});

  double pmfMass = 0.0;
  std::int64_t tauHistTotal = 0, tauSampleRows = 0, runRows = 0;
  for (const auto& row : rec.rows) {
    const std::string& section = std::get<std::string>(row[0]);
    if (section == "y_pmf") pmfMass += std::get<double>(row[3]);
    if (section == "tau_hist") tauHistTotal += std::get<std::int64_t>(row[3]);
    if (section == "tau_samples") ++tauSampleRows;
    if (section == "run") ++runRows;
  }
  CHECK(pmfMass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tauHistTotal + report.levels[0].tauCensored == 50);
  CHECK(tauSampleRows == static_cast<std::int64_t>(report.levels[0].tauSamples.size()));
  CHECK(runRows == 9);

  // Without raw samples the histogram rows must still be present.
  OutputRecord compact;
  appendSimReportRows(compact, report, false);
  bool sawTauHist = false, sawSamples = false;
  for (const auto& row : compact.rows) {
    const std::string& section = std::get<std::string>(row[0]);
    sawTauHist |= section == "tau_hist";
    sawSamples |= section == "tau_samples" || section == "nu_samples";
  }
  CHECK(sawTauHist);
  CHECK_FALSE(sawSamples);
}
