// Copyright 2026 The catruler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catruler/physical_realization.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string output;
};

Run run(const std::string &args) {
    std::string cmd = std::string(CATRULER_CLI_PATH) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) {
        out.append(buf, n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("catruler_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string out(const std::string &sub = "") const { return "--out " + (dir_ / sub).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, usage_errors_exit_two) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--normalization sideways snr").code, 2);
    EXPECT_EQ(run(out() + " fringe --alpha 5 --points 1").code, 2);
    EXPECT_EQ(run(out() + " fringe --alpha -5").code, 2);
    EXPECT_EQ(run(out() + " fringe --alpha 5 --theta-span 1,0").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, fringe_two_points_and_schema_line) {
    auto r = run("--quiet " + out() + " fringe --alpha 5 --points 2");
    ASSERT_EQ(r.code, 0) << r.output;
    EXPECT_TRUE(r.output.empty());
    std::istringstream csv(slurp(dir_ / "fringe_alpha_5.csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "# schema=1");
    std::getline(csv, line);
    EXPECT_EQ(line, "theta,p_plus,p_minus,fringe,fringe_complement,leakage");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 2);
}

TEST_F(CliTest, fringe_row_at_zero_matches_library_call) {
    auto r = run("--quiet " + out() + " fringe --alpha 10 --theta-span -0.1,0.1 --points 3");
    ASSERT_EQ(r.code, 0) << r.output;
    std::istringstream csv(slurp(dir_ / "fringe_alpha_10.csv"));
    std::string line;
    for (int k = 0; k < 4; ++k) {
        std::getline(csv, line);
    }
    auto s = catruler::fringe_point(10, 0.0, catruler::QuadratureConvention::standard(),
                                    catruler::NormalizationMode::kConditional);
    char expected[256];
    std::snprintf(expected, sizeof expected, "0,%.12g,%.12g,%.12g,%.12g,%.12g", s.p_plus, s.p_minus, s.fringe,
                  s.fringe_complement, s.leakage);
    EXPECT_EQ(line, expected);
}

TEST_F(CliTest, auto_span_writes_one_file_per_alpha_deterministically) {
    ASSERT_EQ(run("--quiet " + out("a") + " fringe --alpha 5,10 --points 101").code, 0);
    ASSERT_EQ(run("--quiet --threads 3 " + out("b") + " fringe --alpha 5,10 --points 101").code, 0);
    for (const char *name : {"fringe_alpha_5.csv", "fringe_alpha_10.csv"}) {
        std::string a = slurp(dir_ / "a" / name);
        EXPECT_FALSE(a.empty()) << name;
        EXPECT_EQ(a, slurp(dir_ / "b" / name)) << name;
    }
    std::istringstream csv(slurp(dir_ / "a" / "fringe_alpha_10.csv"));
    std::string line;
    std::getline(csv, line);
    std::getline(csv, line);
    std::getline(csv, line);
    EXPECT_EQ(line.substr(0, line.find(',')), "-0.188495559215");
}

TEST_F(CliTest, joint_normalization_is_selectable) {
    ASSERT_EQ(run("--quiet --normalization joint " + out() + " fringe --alpha 5 --points 2").code, 0);
    ASSERT_EQ(run("--quiet " + out("c") + " fringe --alpha 5 --points 2").code, 0);
    EXPECT_NE(slurp(dir_ / "fringe_alpha_5.csv"), slurp(dir_ / "c" / "fringe_alpha_5.csv"));
}

TEST_F(CliTest, snr_table) {
    ASSERT_EQ(run("--quiet " + out() + " snr --n-bar 200 --v-theta 1e-6").code, 0);
    std::istringstream csv(slurp(dir_ / "snr.csv"));
    std::string line;
    std::getline(csv, line);
    std::getline(csv, line);
    EXPECT_EQ(line, "n_bar,snr_ideal,snr_squeezed,ratio,resource_adjusted_ratio");
    std::getline(csv, line);
    double n = 0, ideal = 0, sq = 0, ratio = 0, adjusted = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &n, &ideal, &sq, &ratio, &adjusted), 5);
    EXPECT_NEAR(ratio, 4, 0.2);
    EXPECT_NEAR(adjusted, 1, 0.05);

    ASSERT_EQ(run("--quiet " + out() + " snr --n-bar 200 --v-theta 0").code, 0);
    std::istringstream zero(slurp(dir_ / "snr.csv"));
    std::getline(zero, line);
    std::getline(zero, line);
    std::getline(zero, line);
    EXPECT_EQ(line, "200,0,0,0,0");
}

TEST_F(CliTest, ruler_report) {
    auto r = run("--quiet " + out() + " ruler --alpha 20 --wavelength 1e-6");
    ASSERT_EQ(r.code, 0) << r.output;
    auto doc = nlohmann::json::parse(slurp(dir_ / "ruler.json"));
    EXPECT_EQ(doc["ruler_interval"].get<double>(), 1.25e-9);
    EXPECT_EQ(doc["standard_interval"].get<double>(), 5e-7);
    EXPECT_LT(doc["relative_deviation"].get<double>(), 0.05);

    ASSERT_EQ(run("--quiet " + out() + " ruler --alpha 1 --no-scan").code, 0);
    auto one = nlohmann::json::parse(slurp(dir_ / "ruler.json"));
    EXPECT_EQ(one["ruler_interval"].get<double>(), 5e-7);
    EXPECT_FALSE(one.contains("scan_spacing"));
}

TEST_F(CliTest, width_scaling_report) {
    ASSERT_EQ(run("--quiet " + out() + " width-scaling --alpha 5,10,20").code, 0);
    auto doc = nlohmann::json::parse(slurp(dir_ / "width_scaling.json"));
    double e = doc["exponent"].get<double>();
    EXPECT_GE(e, -2.2);
    EXPECT_LE(e, -1.8);
    EXPECT_EQ(doc["ratios"].size(), 2u);

    ASSERT_EQ(run("--quiet " + out() + " width-scaling --alpha 10").code, 0);
    auto single = nlohmann::json::parse(slurp(dir_ / "width_scaling.json"));
    EXPECT_FALSE(single.contains("ratios"));
    EXPECT_EQ(single["widths"].size(), 1u);
}

TEST_F(CliTest, width_undefined_is_numerical_failure) {
    EXPECT_EQ(run("--quiet " + out() + " width-scaling --alpha 10 --points 3").code, 3);
}

TEST_F(CliTest, oracle_modes) {
    auto ok = run("--quiet --seed 4 " + out() + " oracle --cases 4 --max-alpha 2.5");
    EXPECT_EQ(ok.code, 0) << ok.output;
    auto doc = nlohmann::json::parse(slurp(dir_ / "oracle.json"));
    EXPECT_TRUE(doc["pass"].get<bool>());
    EXPECT_LT(doc["checks"]["probabilities"]["max_deviation"].get<double>(), 1e-6);
    EXPECT_EQ(run("--quiet " + out() + " oracle --cases 2 --inject-bug 0.01").code, 3);
    EXPECT_EQ(run("--quiet " + out() + " oracle --cases 0").code, 2);
}

TEST_F(CliTest, phase_error_surface) {
    ASSERT_EQ(run("--quiet " + out() + " phase-error --alpha-range 1,10,10 --theta-range -0.01,0.01,5").code, 0);
    std::istringstream csv(slurp(dir_ / "phase_error.csv"));
    std::string line;
    std::getline(csv, line);
    std::getline(csv, line);
    EXPECT_EQ(line, "alpha,theta,theta2_alpha2,error");
    int rows = 0;
    while (std::getline(csv, line)) {
        double a = 0, t = 0, x = 0, err = 0;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &a, &t, &x, &err), 4);
        if (x <= 0.01) {
            EXPECT_LE(err, x);
        }
        ++rows;
    }
    EXPECT_EQ(rows, 50);
}

TEST_F(CliTest, config_file_drives_sweep_and_flags_override) {
    fs::create_directories(dir_);
    auto cfg = dir_ / "sweep.json";
    std::ofstream(cfg) << R"({"alpha": [5], "theta_range": [-0.1, 0.1, 5], "seed": 3, "out": ")"
                       << (dir_ / "cfg").string() << "\"}";
    ASSERT_EQ(run("--quiet --config " + cfg.string() + " fringe").code, 0);
    std::istringstream csv(slurp(dir_ / "cfg" / "fringe_alpha_5.csv"));
    std::string line;
    int rows = -2;
    while (std::getline(csv, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 5);
    ASSERT_EQ(run("--quiet --config " + cfg.string() + " fringe --points 3").code, 0);

    std::ofstream(dir_ / "bad.json") << R"({"alphas": [5]})";
    EXPECT_EQ(run("--config " + (dir_ / "bad.json").string() + " fringe").code, 2);
    std::ofstream(dir_ / "broken.json") << "{";
    EXPECT_EQ(run("--config " + (dir_ / "broken.json").string() + " fringe").code, 2);
}
