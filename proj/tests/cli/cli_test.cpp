#include "app.hpp"
#include "pdmsusy/shapeinv.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using pdmsusy::cli::run;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pdmsusy-cli");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path golden(const std::string& name) { return fs::path(PDMSUSY_GOLDEN_DIR) / name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pdmsusy_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::vector<std::vector<std::string>> csv_cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)); }

void expect_csv_matches(const std::string& actual, const std::string& expected) {
  const auto a = csv_cells(actual);
  const auto e = csv_cells(expected);
  ASSERT_EQ(a.size(), e.size());
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a[0], e[0]);
  for (std::size_t r = 1; r < a.size(); ++r) {
    ASSERT_EQ(a[r].size(), e[r].size());
    for (std::size_t c = 0; c < a[r].size(); ++c)
      EXPECT_PRED2(close, std::stod(a[r][c]), std::stod(e[r][c])) << "row " << r << " column " << e[0][c];
  }
}

void expect_json_matches(const nlohmann::ordered_json& a, const nlohmann::ordered_json& e, const std::string& path) {
  if (e.is_number() && !e.is_boolean()) {
    ASSERT_TRUE(a.is_number()) << path;
    // Solver residuals are round-off sized and only need to stay small.
    if (path.find("residual") != std::string::npos) {
      EXPECT_LT(a.get<double>(), 1e-8) << path;
      return;
    }
    EXPECT_PRED2(close, a.get<double>(), e.get<double>()) << path;
    return;
  }
  ASSERT_EQ(a.type(), e.type()) << path;
  if (e.is_object()) {
    std::vector<std::string> ka, ke;
    for (const auto& [k, v] : a.items()) ka.push_back(k);
    for (const auto& [k, v] : e.items()) ke.push_back(k);
    ASSERT_EQ(ka, ke) << path;
    for (const auto& [k, v] : e.items()) expect_json_matches(a[k], v, path + "." + k);
  } else if (e.is_array()) {
    ASSERT_EQ(a.size(), e.size()) << path;
    for (std::size_t i = 0; i < e.size(); ++i) expect_json_matches(a[i], e[i], path + "[" + std::to_string(i) + "]");
  } else {
    EXPECT_EQ(a, e) << path;
  }
}

}  // namespace

TEST(CliGolden, PotentialTable) {
  const Outcome r = invoke({"potential", "--a", "2", "--ordering", "zk", "--domain=-2:2", "--points", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_csv_matches(r.out, slurp(golden("potential_zk.csv")));
  // U at z = 1.
  EXPECT_NEAR(std::stod(csv_cells(r.out)[4][4]), 0.0493827, 1e-7);
}

TEST(CliGolden, IdentitiesJson) {
  const Outcome r = invoke({"identities", "--mass", "1", "--ordering", "likuhn", "--epsilon", "2", "--points", "9",
                            "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_json_matches(nlohmann::ordered_json::parse(r.out),
                      nlohmann::ordered_json::parse(slurp(golden("identities_unit_mass.json"))), "$");
}

TEST(CliGolden, MorseTable) {
  const Outcome r = invoke({"morse", "--a", "2", "--domain=-8:8", "--points", "17"});
  ASSERT_EQ(r.code, 0) << r.err;
  expect_csv_matches(r.out, slurp(golden("morse_a2.csv")));
  const auto cells = csv_cells(r.out);
  ASSERT_EQ(cells[10][0], "1");
  EXPECT_NEAR(std::stod(cells[10][2]), 1.2788414, 1e-7);
}

TEST(CliGolden, SpectrumJson) {
  const Outcome r = invoke({"spectrum", "--mass", "1", "--v0", "z^2", "--levels", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  expect_json_matches(doc, nlohmann::ordered_json::parse(slurp(golden("spectrum_oscillator.json"))), "$");
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(doc["rows"][n][1].get<double>(), 2 * n + 1, 1e-3);
}

TEST(CliExitCodes, Potential) {
  const Outcome bdd = invoke({"potential", "--a", "2", "--ordering", "bdd", "--points", "33"});
  ASSERT_EQ(bdd.code, 0);
  const auto cells = csv_cells(bdd.out);
  for (std::size_t r = 1; r < cells.size(); ++r) EXPECT_EQ(std::stod(cells[r][4]), 0.0);

  const fs::path out = scratch("bad.csv");
  const Outcome bad = invoke({"potential", "--mass", "(1 + z", "--output", out.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(invoke({"potential", "--mass", "1 + q"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--mass", "z"}).code, 2);  // non-positive mass
  EXPECT_EQ(invoke({"potential"}).code, 2);
}

TEST(CliExitCodes, Identities) {
  EXPECT_EQ(invoke({"identities", "--a", "2", "--ordering", "zk"}).code, 0);
  EXPECT_EQ(invoke({"identities", "--a", "2", "--ordering", "bdd"}).code, 0);
  const Outcome bastard = invoke({"identities", "--a", "2", "--ordering", "bastard", "--format", "json"});
  EXPECT_EQ(bastard.code, 1);
  const auto doc = nlohmann::ordered_json::parse(bastard.out);
  EXPECT_NEAR(doc["summary"]["probe"]["modification_residual"].get<double>(), 0.0493827, 1e-7);
  EXPECT_FALSE(doc["summary"]["passed"].get<bool>());
  for (const char* o : {"bdd", "bastard", "zk", "likuhn"})
    EXPECT_EQ(invoke({"identities", "--mass", "1", "--ordering", o}).code, 0) << o;
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--bogus", "1"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--domain", "3:1"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--domain", "abc"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--points", "2"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--ordering", "weyl"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--alpha", "-0.5"}).code, 2);
  EXPECT_EQ(invoke({"potential", "--a", "2", "--alpha", "-0.5", "--gamma", "0", "--ordering", "zk"}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--mass", "1"}).code, 2);
  EXPECT_EQ(invoke({"spectrum", "--mass", "1", "--v0", "z^2", "--points", "5", "--levels", "6"}).code, 2);
  EXPECT_EQ(invoke({"uniform-shift", "--a", "2", "--epsilon", "-1", "--points", "50"}).code, 2);
  EXPECT_EQ(invoke({"morse", "--a", "2", "--lambda", "0", "--points", "50"}).code, 2);
  const Outcome help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("uniform-shift"), std::string::npos);
}

TEST(CliExitCodes, ExplicitOrderingDerivesBeta) {
  const Outcome r = invoke({"potential", "--a", "2", "--alpha", "-0.25", "--gamma", "-0.25", "--points", "3",
                            "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["parameters"]["ordering"]["beta"].get<double>(), -0.5);
}

TEST(CliCommands, UniformShiftConstantMassLadder) {
  const Outcome r = invoke({"uniform-shift", "--mass", "1", "--epsilon", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  for (int n = 0; n < 4; ++n) {
    EXPECT_NEAR(doc["summary"]["levels"][n]["zk"].get<double>(), 2 * n + 1, 1e-3);
    EXPECT_NEAR(doc["summary"]["levels"][n]["bdd"].get<double>(), 2 * n + 1, 1e-3);
  }
  EXPECT_LT(doc["summary"]["ground_state_overlap_deficit"].get<double>(), 1e-4);
}

TEST(CliCommands, UniformShiftQuotientMass) {
  const Outcome r = invoke({"uniform-shift", "--a", "2", "--epsilon", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto s = nlohmann::ordered_json::parse(r.out)["summary"];
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(s["levels"][n]["zk"].get<double>(), 2 * n + 1, 1e-3);
  // The BDD operator with the unperturbed potential shares only the ground level.
  EXPECT_NEAR(s["levels"][0]["bdd"].get<double>(), 1.0, 1e-3);
  EXPECT_LE(s["sqrt_m_relation_max_abs"].get<double>(), 1e-3);
  EXPECT_TRUE(s["zk_ladder_within_tolerance"].get<bool>());
}

TEST(CliCommands, MorseConstantMass) {
  const Outcome r = invoke({"morse", "--a", "1", "--lambda", "0.7", "--C", "2", "--domain=-6:6", "--points", "121",
                            "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  for (const auto& row : doc["rows"]) {
    const double z = row[0].get<double>();
    EXPECT_NEAR(row[1].get<double>(), 2.0 * std::exp(-0.7 * z), 1e-10 * (1.0 + 2.0 * std::exp(-0.7 * z)));
  }
  EXPECT_LE(doc["summary"]["f0_max_abs_diff"].get<double>(), 1e-8);
}

TEST(CliCommands, MorseWithoutClosedForm) {
  const Outcome r = invoke({"morse", "--mass", "1 + 0.5*exp(-z^2)", "--domain=-4:4", "--points", "41"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(csv_cells(r.out)[0], (std::vector<std::string>{"z", "f0", "W"}));
  EXPECT_NE(r.err.find("closed_form_available: false"), std::string::npos);
}

TEST(CliCommands, SpectrumVectorsAndOutputFile) {
  const fs::path out = scratch("levels.csv");
  const fs::path vec = scratch("vectors.csv");
  const Outcome r = invoke({"spectrum", "--mass", "1", "--v0", "z^2", "--levels", "2", "--points", "399",
                            "--domain=-8:8", "--output", out.string(), "--vectors", vec.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto levels = csv_cells(slurp(out));
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_NEAR(std::stod(levels[1][1]), 1.0, 1e-3);
  const auto vectors = csv_cells(slurp(vec));
  ASSERT_EQ(vectors.size(), 400u);
  EXPECT_EQ(vectors[0], (std::vector<std::string>{"z", "psi0", "psi1"}));
}

TEST(CliConfig, FileValuesAndFlagPrecedence) {
  const fs::path cfg = scratch("run.ini");
  std::ofstream(cfg) << "a = 2\nordering = bastard\npoints = 64\n";
  EXPECT_EQ(invoke({"identities", "--config", cfg.string()}).code, 1);
  EXPECT_EQ(invoke({"identities", "--config", cfg.string(), "--ordering", "zk"}).code, 0);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> runs = {
      {"potential", "--a", "2", "--ordering", "likuhn", "--format", "json"},
      {"identities", "--a", "3", "--ordering", "bastard"},
      {"uniform-shift", "--a", "2", "--points", "800", "--format", "json"},
      {"morse", "--a", "2", "--domain=-8:8", "--points", "401"},
      {"spectrum", "--a", "2", "--v0", "z^2", "--ordering", "bdd", "--levels", "5", "--points", "1000"},
  };
  for (const auto& args : runs) {
    const Outcome first = invoke(args);
    const Outcome second = invoke(args);
    EXPECT_EQ(first.code, second.code) << args[0];
    EXPECT_EQ(first.out, second.out) << args[0];
    EXPECT_EQ(first.err, second.err) << args[0];
  }
}

TEST(CliCommands, SpectrumWithUniformShiftPotentialBdd) {
  const pdmsusy::UniformShiftModel model(pdmsusy::MassProfile(pdmsusy::rational_square_mass(2.0)), 2.0);
  const std::string v0 = model.unperturbed_potential().to_string();
  const Outcome r = invoke({"spectrum", "--a", "2", "--v0", v0, "--ordering", "bdd", "--levels", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cells = csv_cells(r.out);
  EXPECT_NEAR(std::stod(cells[1][1]), 1.0, 1e-3);
  // Only the ground level is shared with the uniform ladder (see uniform-shift summary).
  EXPECT_NEAR(std::stod(cells[2][1]), 2.642, 1e-2);
}
