#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "shgbeta/cli.hpp"

using nlohmann::json;

namespace {

std::string data_file(const std::string& name) {
  return std::string(SHGBETA_TEST_DATA) + "/" + name;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shgbeta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("beta json output carries the two-level value in both representations") {
  const auto r = run({"beta", "-m", data_file("twolevel.json"), "--omega",
                      "0.1", "--rep", "both", "--symmetrize", "--format",
                      "json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("subcommand") == "beta");
  CHECK(doc.at("input_digest").get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(doc.at("units").contains("beta"));
  CHECK(doc.at("warnings").is_array());

  const auto& res = doc.at("results");
  const double std_xxx =
      res.at("standard").at("components")[0][0][0][0].get<double>();
  const double fl_xxx =
      res.at("fluctuation").at("components")[0][0][0][0].get<double>();
  CHECK(std_xxx == doctest::Approx(135.0).epsilon(1e-12));
  CHECK(fl_xxx == doctest::Approx(135.0).epsilon(1e-12));
  CHECK(res.at("max_rel_diff_symmetrized").get<double>() <= 1e-10);
  CHECK(res.at("fluctuation").at("symmetrized").get<bool>());
}

TEST_CASE("beta accepts eV frequencies") {
  const auto hartree = run({"beta", "-m", data_file("twolevel.json"),
                            "--omega", "0.1", "--format", "json"});
  const auto ev = run({"beta", "-m", data_file("twolevel.json"), "--omega",
                       "2.7211386245988", "--omega-unit", "eV", "--format",
                       "json"});
  REQUIRE(hartree.code == 0);
  REQUIRE(ev.code == 0);
  const double a = json::parse(hartree.out)
                       .at("results").at("beta").at("components")[0][0][0][0];
  const double b = json::parse(ev.out)
                       .at("results").at("beta").at("components")[0][0][0][0];
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("machine output is byte-identical across runs") {
  const std::vector<std::string> args{"beta", "-m", data_file("twolevel.json"),
                                      "--omega", "0.1", "--rep", "both",
                                      "--format", "json"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const auto terms1 = run({"terms", "-m", data_file("random4.json"),
                           "--format", "json"});
  const auto terms2 = run({"terms", "-m", data_file("random4.json"),
                           "--format", "json"});
  CHECK(terms1.out == terms2.out);
}

TEST_CASE("terms table has 12 standard and 3 fluctuation rows") {
  const auto std_run =
      run({"terms", "-m", data_file("twolevel.json"), "--format", "json"});
  REQUIRE(std_run.code == 0);
  const json std_doc = json::parse(std_run.out);
  CHECK(std_doc.at("results").at("count") == 12);
  CHECK(std_doc.at("results").at("terms").size() == 12);

  const auto fl_run = run({"terms", "-m", data_file("twolevel.json"), "--rep",
                           "fluctuation", "--format", "json"});
  const json fl_doc = json::parse(fl_run.out);
  CHECK(fl_doc.at("results").at("count") == 3);

  const auto table =
      run({"terms", "-m", data_file("twolevel.json")});
  CHECK(table.out.find("12 terms") != std::string::npos);
  CHECK(table.out.find("pattern") != std::string::npos);
}

TEST_CASE("check passes at the default tolerance and fails at an absurd one") {
  const auto pass = run({"check", "-m", data_file("random4.json"),
                         "--omega-min", "0.05", "--omega-max", "0.12",
                         "--steps", "8", "--tol", "1e-10"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("pass") != std::string::npos);

  const auto fail = run({"check", "-m", data_file("twolevel.json"),
                         "--omega-min", "0.05", "--omega-max", "0.12",
                         "--steps", "8", "--tol", "1e-18", "--format",
                         "json"});
  CHECK(fail.code == shgbeta::cli::exit_tolerance);
  const json doc = json::parse(fail.out);
  CHECK(doc.at("results").at("pass") == false);
  CHECK(doc.at("results").at("grid").size() == 8);
}

TEST_CASE("amplitude bookkeeping through the CLI") {
  const auto zero = run({"amplitude", "-m", data_file("twolevel.json"),
                         "--omega", "0.1", "--n", "1", "--volume", "1e6",
                         "--format", "json"});
  REQUIRE(zero.code == 0);
  const json zdoc = json::parse(zero.out);
  CHECK(zdoc.at("results").at("amplitude_abs2").get<double>() == 0.0);

  const auto n2 = run({"amplitude", "-m", data_file("twolevel.json"),
                       "--omega", "0.1", "--n", "2", "--volume", "1e6",
                       "--format", "json"});
  const auto n3 = run({"amplitude", "-m", data_file("twolevel.json"),
                       "--omega", "0.1", "--n", "3", "--volume", "1e6",
                       "--format", "json"});
  const double a2 = json::parse(n2.out).at("results").at("amplitude_abs2");
  const double a3 = json::parse(n3.out).at("results").at("amplitude_abs2");
  CHECK(a3 / a2 == doctest::Approx(3.0).epsilon(1e-12));

  // y-polarized output on an x-only tensor vanishes
  const auto ortho = run({"amplitude", "-m", data_file("twolevel.json"),
                          "--omega", "0.1", "--n", "2", "--volume", "1e6",
                          "--pol-out", "y", "--format", "json"});
  CHECK(json::parse(ortho.out).at("results").at("amplitude_abs2").get<double>() ==
        0.0);
}

TEST_CASE("envshift reproduces the collinear pair values") {
  const auto r = run({"envshift", "-a", data_file("assembly_collinear.json"),
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  const auto& res = doc.at("results");
  CHECK(res.at("per_molecule_scalar")[0].get<double>() ==
        doctest::Approx(0.001).epsilon(1e-12));
  CHECK(res.at("total_scalar").get<double>() ==
        doctest::Approx(0.002).epsilon(1e-12));
  CHECK(res.at("per_molecule_matrix")[0][0][0].get<double>() == 0.0);
  CHECK(res.at("per_molecule_matrix")[0][0][1].get<double>() ==
        doctest::Approx(0.001).epsilon(1e-12));
  CHECK(res.at("per_molecule_matrix")[0][1][1].get<double>() ==
        doctest::Approx(0.004).epsilon(1e-12));

  const auto flipped = run({"envshift", "-a",
                            data_file("assembly_collinear.json"),
                            "--sign-convention", "classical", "--format",
                            "json"});
  CHECK(json::parse(flipped.out).at("results").at("total_scalar").get<double>() ==
        doctest::Approx(-0.002).epsilon(1e-12));
}

TEST_CASE("beta from an assembly site, with and without applied shifts") {
  const auto plain = run({"beta", "--assembly",
                          data_file("assembly_collinear.json"), "--site", "0",
                          "--omega", "0.05", "--format", "json"});
  REQUIRE(plain.code == 0);
  const auto shifted = run({"beta", "--assembly",
                            data_file("assembly_collinear.json"), "--site",
                            "0", "--apply-shifts", "--omega", "0.05",
                            "--format", "json"});
  REQUIRE(shifted.code == 0);
  const double a = json::parse(plain.out)
                       .at("results").at("beta").at("components")[2][2][2][0];
  const double b = json::parse(shifted.out)
                       .at("results").at("beta").at("components")[2][2][2][0];
  CHECK(a != b);  // the 0.004 hartree level shift moves the response

  // -m and --assembly cannot be combined
  CHECK(run({"beta", "-m", data_file("twolevel.json"), "--assembly",
             data_file("assembly_collinear.json"), "--omega", "0.05"})
            .code == shgbeta::cli::exit_usage);
}

TEST_CASE("selftest runs a seeded random equivalence audit") {
  const auto r = run({"selftest", "--seed", "7", "--models", "5", "--format",
                      "json"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("results").at("pass") == true);
  CHECK(doc.at("results").at("max_rel_diff_symmetrized").get<double>() <=
        1e-10);
}

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate"}).code == shgbeta::cli::exit_usage);
  CHECK(run({"beta", "--bogus-flag"}).code == shgbeta::cli::exit_usage);
  CHECK(run({}).code == shgbeta::cli::exit_usage);

  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("beta") != std::string::npos);
  CHECK(help.out.find("envshift") != std::string::npos);

  CHECK(run({"beta", "-m", data_file("no_such_file.json"), "--omega", "0.1"})
            .code == shgbeta::cli::exit_validation);

  // exact two-photon resonance of the undamped two-level molecule
  CHECK(run({"beta", "-m", data_file("twolevel.json"), "--omega", "0.15"})
            .code == shgbeta::cli::exit_singularity);

  // the damped molecule evaluates fine at the same frequency
  CHECK(run({"beta", "-m", data_file("twolevel_damped.json"), "--omega",
             "0.15", "--damping", "constant-sign"})
            .code == 0);
}
