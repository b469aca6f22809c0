#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "eqbif/json_io.hpp"
#include "golden_cases.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = eqbif::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GoldenFiles) {
  const bool update = std::getenv("EQBIF_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden::cases()) {
    const Result r = run(c.args);
    ASSERT_EQ(r.code, c.exit_code) << c.file << ": " << r.err;
    const std::string path = std::string(EQBIF_GOLDEN_DIR) + "/" + c.file;
    if (update) std::ofstream(path, std::ios::binary) << r.out;
    EXPECT_EQ(r.out, golden::read_file(path)) << c.file;
    EXPECT_EQ(run(c.args).out, r.out) << "second run differs for " << c.file;
  }
}

TEST(Cli, SpectrumExample) {
  const Result r = run({"spectrum", "--n", "2", "--gamma", "hemisphere", "--lambda-max", "21", "--no-cache"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& records = doc.at("spectrum").at("records");
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records.at(3).at("lambda_exact"), 20);
}

TEST(Cli, IndexExample) {
  const Result r = run({"index", "--n", "2", "--gamma", "hemisphere", "--m0", "1", "--sign", "+", "--p-minus", "1",
                        "--p-plus", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("display"), "{0: -2}");
}

TEST(Cli, CertificatesValidateAndSetExitCodes) {
  const Result proved = run({"certify", "unbounded", "--n", "2", "--m0", "3", "--p-minus", "2", "--p-plus", "2"});
  EXPECT_EQ(proved.code, 0) << proved.err;
  EXPECT_TRUE(eqbif::validate_certificate_json(nlohmann::json::parse(proved.out)).empty());

  const Result not_met = run({"certify", "unbounded", "--n", "2", "--m0", "1", "--p-minus", "2", "--p-plus", "2"});
  EXPECT_EQ(not_met.code, 2);

  const Result inconclusive =
      run({"certify", "symmetry-breaking", "--n", "2", "--m0", "3", "--p-minus", "1", "--format", "table"});
  EXPECT_EQ(inconclusive.code, 3);
  EXPECT_NE(inconclusive.out.find("verdict:     inconclusive"), std::string::npos);

  const Result bounded = run({"certify", "bounded-necessary", "--n", "2", "--m0", "2", "--p-minus", "2",
                              "--p-plus", "3"});
  EXPECT_EQ(bounded.code, 0);
  EXPECT_TRUE(eqbif::validate_certificate_json(nlohmann::json::parse(bounded.out)).empty());

  const Result alternative = run({"alternative", "--n", "2", "--p-minus", "1", "--p-plus", "1", "--candidates",
                                  "+1,-1"});
  EXPECT_EQ(alternative.code, 0);
  const auto doc = nlohmann::json::parse(alternative.out);
  EXPECT_TRUE(eqbif::validate_certificate_json(doc).empty());
  EXPECT_EQ(doc.at("sum").at("coeffs").at(0).at(1), "-4");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, eqbif::cli::kExitUsage);
  EXPECT_EQ(run({"spectrum", "--n", "2"}).code, eqbif::cli::kExitUsage);
  EXPECT_EQ(run({"spectrum", "--n", "x", "--lambda-max", "3"}).code, eqbif::cli::kExitUsage);
  EXPECT_EQ(run({"index", "--n", "2", "--gamma", "1.0", "--m0", "1", "--p-minus", "1"}).code,
            eqbif::cli::kExitUsage);
  EXPECT_EQ(run({"alternative", "--n", "2", "--p-minus", "1", "--candidates", "3"}).code, eqbif::cli::kExitUsage);
  EXPECT_EQ(run({"spectrum", "--n", "2", "--gamma", "half", "--lambda-max", "3"}).code, eqbif::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrors) {
  const Result r = run({"index", "--n", "2", "--m0", "2", "--sign", "-", "--p-minus", "1"});
  EXPECT_EQ(r.code, eqbif::cli::kExitDomain);
  EXPECT_NE(r.err.find("signature_violation"), std::string::npos);
  EXPECT_EQ(run({"spectrum", "--n", "2", "--gamma", "4", "--lambda-max", "3"}).code, eqbif::cli::kExitDomain);
  EXPECT_EQ(run({"certify", "unbounded", "--n", "2", "--m0", "5", "--p-minus", "1", "--scan-bound", "3"}).code,
            eqbif::cli::kExitDomain);
}

TEST(Cli, GammaForms) {
  EXPECT_TRUE(eqbif::cli::parse_gamma("hemisphere").is_hemisphere());
  EXPECT_FALSE(eqbif::cli::parse_gamma("pi/2").is_hemisphere());
  EXPECT_DOUBLE_EQ(eqbif::cli::parse_gamma("pi/3").value(), std::numbers::pi / 3);
  EXPECT_DOUBLE_EQ(eqbif::cli::parse_gamma("2pi/5").value(), 2 * std::numbers::pi / 5);
  EXPECT_DOUBLE_EQ(eqbif::cli::parse_gamma("2*pi/5").value(), 2 * std::numbers::pi / 5);
  EXPECT_DOUBLE_EQ(eqbif::cli::parse_gamma("0.75").value(), 0.75);
  EXPECT_THROW((void)eqbif::cli::parse_gamma("pi/0"), std::invalid_argument);
  EXPECT_THROW((void)eqbif::cli::parse_gamma("1.0rad"), std::invalid_argument);
}

TEST(Cli, CacheIsUsedOffHemisphere) {
  const fs::path dir = fs::temp_directory_path() / "eqbif-cli-cache-test";
  fs::remove_all(dir);
  const std::vector<std::string> args = {"spectrum", "--n", "2", "--gamma", "pi/3", "--lambda-max", "40",
                                         "--cache-dir", dir.string()};
  const Result first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  ASSERT_FALSE(fs::is_empty(dir));
  const Result second = run(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_TRUE(second.err.empty());

  const std::vector<std::string> uncached = {"spectrum", "--n", "2", "--gamma", "pi/3", "--lambda-max", "40",
                                             "--no-cache"};
  EXPECT_EQ(run(uncached).out, first.out);
  fs::remove_all(dir);
}

TEST(Cli, DecomposeAndDegree) {
  const Result d = run({"decompose", "--n", "4", "--m", "2", "--format", "table"});
  ASSERT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("R[3,0] + R[2,1] + R[1,2]"), std::string::npos);
  const Result g = run({"degree", "--n", "4", "--m", "2"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out).at("display"), "{0: -1, 1: 2, 2: 1}");
  const Result w = run({"degree", "--n", "2", "--weights", "0:1,3:2"});
  EXPECT_EQ(nlohmann::json::parse(w.out).at("display"), "{0: -1, 3: 2}");
  const Result e = run({"degree", "--n", "2", "--eigenspace", "3"});
  EXPECT_EQ(nlohmann::json::parse(e.out).at("display"), "{0: -1, 2: 1}");
  EXPECT_EQ(run({"degree", "--n", "2"}).code, eqbif::cli::kExitUsage);
}
