#include "cohrep/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using cohrep::cli::run;
using Json = nlohmann::json;

namespace {

struct Output {
    int code = 0;
    std::string out;
    std::string err;
};

Output invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Output o;
    o.code = run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

/// Structural comparison with a relative-absolute tolerance on numbers.
void expect_json_near(const Json& want, const Json& got, const std::string& path, double tol = 1e-9) {
    if (want.is_number() && got.is_number()) {
        const double a = want.get<double>();
        const double b = got.get<double>();
        EXPECT_LE(std::abs(a - b), tol * std::max(1.0, std::abs(a))) << path << ": " << a << " vs " << b;
        return;
    }
    ASSERT_EQ(want.type(), got.type()) << path;
    if (want.is_object()) {
        ASSERT_EQ(want.size(), got.size()) << path;
        for (auto it = want.begin(); it != want.end(); ++it) {
            ASSERT_TRUE(got.contains(it.key())) << path << "/" << it.key();
            expect_json_near(it.value(), got.at(it.key()), path + "/" + it.key(), tol);
        }
    } else if (want.is_array()) {
        ASSERT_EQ(want.size(), got.size()) << path;
        for (std::size_t k = 0; k < want.size(); ++k) {
            expect_json_near(want[k], got[k], path + "/" + std::to_string(k), tol);
        }
    } else {
        EXPECT_EQ(want, got) << path;
    }
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int exit_code;
};

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"su2_generic_spin1", {"check", "su2", "--j0", "1", "--fiducial", "generic", "--seed", "1", "--show-pi"}, 0},
        {"su2_spin1_m0", {"check", "su2", "--j0", "1", "--fiducial", "canonical:0", "--show-pi"}, 2},
        {"su2_spin_half", {"check", "su2", "--j0", "1/2", "--fiducial", "canonical:1/2", "--show-pi"}, 0},
        {"su3_octet_torus", {"check", "su3", "--irrep", "1,1", "--fiducial", "i3y-charged", "--show-pi"}, 2},
        {"su3_octet_u2", {"check", "su3", "--irrep", "1,1", "--fiducial", "u2-scalar", "--show-pi"}, 2},
    };
    return cases;
}

const GoldenCase& golden_case(const std::string& name) {
    for (const auto& c : golden_cases()) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown golden case " + name);
}

/// Runs the case with --format json and compares against tests/golden/<name>.json.
/// With COHREP_UPDATE_GOLDEN set the file is rewritten first.
void check_golden(const std::string& name) {
    const GoldenCase& c = golden_case(name);
    std::vector<std::string> args = c.args;
    args.insert(args.end(), {"--format", "json"});
    const Output o = invoke(args);
    ASSERT_EQ(o.code, c.exit_code) << o.err;
    const std::filesystem::path path = std::filesystem::path(COHREP_GOLDEN_DIR) / (c.name + ".json");
    if (std::getenv("COHREP_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path) << o.out;
    }
    std::ifstream in(path);
    ASSERT_TRUE(in.good()) << "missing golden file " << path;
    const Json want = Json::parse(in);
    const Json got = Json::parse(o.out);
    expect_json_near(want, got, c.name);
}

}  // namespace

TEST(Golden, GenericSpinOne) { check_golden("su2_generic_spin1"); }
TEST(Golden, SpinOneZeroWeight) { check_golden("su2_spin1_m0"); }
TEST(Golden, SpinHalf) { check_golden("su2_spin_half"); }
TEST(Golden, OctetTorusFiducial) { check_golden("su3_octet_torus"); }
TEST(Golden, OctetU2Fiducial) { check_golden("su3_octet_u2"); }

TEST(Cli, TextAndJsonVerdictsAgree) {
    for (const auto& c : golden_cases()) {
        const Output text = invoke(c.args);
        std::vector<std::string> json_args = c.args;
        json_args.insert(json_args.end(), {"--format", "json"});
        const Json report = Json::parse(invoke(json_args).out);
        const bool exists = report["verdict"]["exists"].get<bool>();
        EXPECT_NE(text.out.find(exists ? "exists: true" : "exists: false"), std::string::npos) << c.name;
        EXPECT_EQ(text.code, exists ? cohrep::cli::kExitExists : cohrep::cli::kExitNotExists);
    }
}

TEST(Cli, CsvVerdict) {
    const Output o = invoke({"check", "su2", "--j0", "1", "--fiducial", "canonical:0", "--format", "csv"});
    EXPECT_EQ(o.code, 2);
    std::istringstream lines(o.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "label,status,required,available,rank,cols,singular_values");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 3);
    EXPECT_NE(o.out.find("\"1\",rank_deficient"), std::string::npos);
}

TEST(Cli, Spectrum) {
    const Output o = invoke({"spectrum", "su3", "--irrep", "1,1"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("(0,0) (1,1) (1,1) (3,0) (0,3) (2,2)"), std::string::npos) << o.out;
    const Output csv = invoke({"spectrum", "su2", "--j0", "3/2", "--format", "csv"});
    EXPECT_EQ(csv.out, "label,multiplicity,dimension\n\"0\",1,1\n\"1\",1,3\n\"2\",1,5\n\"3\",1,7\n");
}

TEST(Cli, PiCommandAlwaysSucceeds) {
    const Output o = invoke({"pi", "su2", "--j0", "1", "--fiducial", "canonical:0", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const Json report = Json::parse(o.out);
    EXPECT_EQ(report["command"], "pi");
    EXPECT_EQ(report["artifacts"]["pi_matrices"].size(), 3u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, cohrep::cli::kExitUsage);
    EXPECT_EQ(invoke({"check"}).code, cohrep::cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "so3"}).code, cohrep::cli::kExitUsage);
    const Output bogus = invoke({"check", "su2", "--j0", "1", "--fiducial", "bogus"});
    EXPECT_EQ(bogus.code, cohrep::cli::kExitUsage);
    EXPECT_EQ(bogus.err.rfind("error: ", 0), 0u);
    EXPECT_EQ(invoke({"check", "su2", "--j0", "1", "--fiducial", "canonical:1/2"}).code, cohrep::cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "su2", "--j0", "1", "--fiducial", "custom:1,0"}).code, cohrep::cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "su2", "--j0", "1", "--format", "xml"}).code, cohrep::cli::kExitUsage);
    EXPECT_EQ(invoke({"hw", "zeros"}).code, cohrep::cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "hw", "--grid", "4,64"}).code, cohrep::cli::kExitUsage);
}

TEST(Cli, UnsupportedStabilizerIsAnError) {
    // A spin-1 state stabilized by rotations about the x axis only.
    const double s = std::sqrt(0.5);
    const std::string custom = "custom:" + std::to_string(s) + ",0," + std::to_string(s);
    const Output o = invoke({"check", "su2", "--j0", "1", "--fiducial", custom});
    EXPECT_EQ(o.code, cohrep::cli::kExitUsage);
    EXPECT_NE(o.err.find("not one of the supported subgroups"), std::string::npos) << o.err;
}

TEST(Cli, CustomComplexFiducial) {
    const Output o = invoke({"check", "su2", "--j0", "1", "--fiducial", "custom:1,0.3+0.2i,-0.5i", "--format", "json"});
    EXPECT_EQ(o.code, 0) << o.err;
    const Json report = Json::parse(o.out);
    EXPECT_EQ(report["artifacts"]["stabilizer"]["subgroup"], "trivial");
}

TEST(Cli, HeisenbergWeylCheck) {
    EXPECT_EQ(invoke({"check", "hw", "--state", "vacuum"}).code, 0);
    EXPECT_EQ(invoke({"check", "hw", "--state", "squeezed:0.5"}).code, 0);
    const Output fock = invoke({"check", "hw", "--state", "fock:2", "--format", "json"});
    EXPECT_EQ(fock.code, 2);
    const Json report = Json::parse(fock.out);
    EXPECT_EQ(report["artifacts"]["zero_circles"].size(), 2u);
}

TEST(Cli, HeisenbergWeylCharAtPoint) {
    const Output o = invoke({"hw", "char", "--state", "vacuum", "--point", "2,0", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const Json report = Json::parse(o.out);
    const auto& v = report["artifacts"]["values"][0];
    EXPECT_NEAR(v["value"][0].get<double>(), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(v["matrix_route"][0].get<double>(), std::exp(-1.0), 1e-12);
}

TEST(Cli, HeisenbergWeylCharGridToFile) {
    const auto path = std::filesystem::temp_directory_path() / "cohrep_test_chi.csv";
    std::filesystem::remove(path);
    const Output o = invoke({"hw", "char", "--state", "fock:1", "--grid", "2,5", "--out", path.string(), "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const Json report = Json::parse(o.out);
    EXPECT_EQ(report["artifacts"]["csv_paths"][0], path.string());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "q0,p0,re,im");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 25);
    std::filesystem::remove(path);
}

TEST(Cli, HeisenbergWeylZeros) {
    const Output o = invoke({"hw", "zeros", "--fock", "2", "--format", "csv"});
    EXPECT_EQ(o.code, 0);
    std::istringstream lines(o.out);
    std::string header, r1, r2;
    std::getline(lines, header);
    std::getline(lines, r1);
    std::getline(lines, r2);
    EXPECT_EQ(header, "index,radius");
    EXPECT_NEAR(std::stod(r1.substr(2)), std::sqrt(2.0 * (2.0 - std::sqrt(2.0))), 1e-12);
    EXPECT_NEAR(std::stod(r2.substr(2)), std::sqrt(2.0 * (2.0 + std::sqrt(2.0))), 1e-12);
    const Output partial = invoke({"hw", "zeros", "--fock", "3", "--max-radius", "1"});
    EXPECT_EQ(partial.code, 0);
    EXPECT_NE(partial.err.find("warning: "), std::string::npos);
}

TEST(Cli, HeisenbergWeylWeightRefusal) {
    const Output o = invoke({"hw", "weight", "--state", "fock:1", "--operator", "thermal:1", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const Json report = Json::parse(o.out);
    EXPECT_TRUE(report["artifacts"]["refused"].get<bool>());
    EXPECT_FALSE(report["verdict"]["exists"].get<bool>());
    EXPECT_NEAR(report["artifacts"]["zero_circles"][0].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(Cli, ReportToFile) {
    const auto path = std::filesystem::temp_directory_path() / "cohrep_test_report.json";
    const Output o = invoke({"check", "su2", "--j0", "1", "--fiducial", "canonical:1", "--format", "json", "--out",
                             path.string()});
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    const Json report = Json::parse(in);
    EXPECT_TRUE(report["verdict"]["exists"].get<bool>());
    std::filesystem::remove(path);
}

TEST(ParseHelpers, Twice) {
    EXPECT_EQ(cohrep::cli::parse_twice("1/2"), 1);
    EXPECT_EQ(cohrep::cli::parse_twice("0.5"), 1);
    EXPECT_EQ(cohrep::cli::parse_twice("3"), 6);
    EXPECT_EQ(cohrep::cli::parse_twice("-3/2"), -3);
    EXPECT_THROW(cohrep::cli::parse_twice("1/3"), std::invalid_argument);
    EXPECT_THROW(cohrep::cli::parse_twice("abc"), std::invalid_argument);
}

TEST(ParseHelpers, Thrice) {
    EXPECT_EQ(cohrep::cli::parse_thrice("1/3"), 1);
    EXPECT_EQ(cohrep::cli::parse_thrice("-2/3"), -2);
    EXPECT_EQ(cohrep::cli::parse_thrice("1"), 3);
    EXPECT_THROW(cohrep::cli::parse_thrice("1/2"), std::invalid_argument);
}

TEST(ParseHelpers, Complex) {
    EXPECT_EQ(cohrep::cli::parse_complex("1.5"), std::complex<double>(1.5, 0));
    EXPECT_EQ(cohrep::cli::parse_complex("2i"), std::complex<double>(0, 2));
    EXPECT_EQ(cohrep::cli::parse_complex("-i"), std::complex<double>(0, -1));
    EXPECT_EQ(cohrep::cli::parse_complex("1-2i"), std::complex<double>(1, -2));
    EXPECT_EQ(cohrep::cli::parse_complex("1e-3+4e2i"), std::complex<double>(1e-3, 4e2));
    EXPECT_THROW(cohrep::cli::parse_complex(""), std::invalid_argument);
    EXPECT_THROW(cohrep::cli::parse_complex("x+yi"), std::invalid_argument);
}

TEST(ParseHelpers, FormatNumber) {
    EXPECT_EQ(cohrep::cli::format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(cohrep::cli::format_number(2.0), "2");
    EXPECT_EQ(std::stod(cohrep::cli::format_number(std::exp(-1.0))), std::exp(-1.0));
}
