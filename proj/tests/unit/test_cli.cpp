#include "cgstat/cli.hpp"
#include "cgstat/rational.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace cgstat;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  const int c = cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

std::vector<std::string> csv_last_row(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  std::vector<std::string> cells;
  std::istringstream row(last);
  std::string cell;
  while (std::getline(row, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("limit command") {
  Result r = run({"limit", "--family", "gl", "--q", "2", "--t", "1", "--tol", "1e-6"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == cli::kSchema);
  CHECK(j["config"]["command"] == "limit");
  CHECK(j["enclosure"]["lo"].get<double>() <= 0.2887881);
  CHECK(j["enclosure"]["hi"].get<double>() >= 0.2887880);
  CHECK(j["enclosure"]["hi"].get<double>() - j["enclosure"]["lo"].get<double>() <= 1e-6);
  CHECK(j.contains("q_infinity"));

  Result bad = run({"limit", "--family", "sp-odd", "--q", "2"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("odd") != std::string::npos);
  CHECK(run({"limit", "--family", "cube", "--q", "2"}).code == cli::kUsage);

  json half = json::parse(run({"limit", "--family", "o-half", "--q", "3", "--t", "1"}).out);
  json full = json::parse(run({"limit", "--family", "sp-odd", "--q", "3", "--t", "1"}).out);
  CHECK(half["enclosure"]["mid"].get<double>() == doctest::Approx(full["enclosure"]["mid"].get<double>() / 2).epsilon(1e-12));
}

TEST_CASE("series command") {
  Result r = run({"series", "--family", "gl", "--q", "2", "--t", "1", "--order", "40"});
  REQUIRE(r.code == 0);
  auto cells = csv_last_row(r.out);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == "40");
  CHECK(cells[1].find('/') != std::string::npos);
  CHECK(cells[1].find('.') == std::string::npos);
  const double last = Rational(cells[1]).get_d();
  json lim = json::parse(run({"limit", "--family", "gl", "--q", "2", "--t", "1", "--tol", "1e-9"}).out);
  CHECK(std::abs(last - lim["enclosure"]["mid"].get<double>()) < 1e-6);
  CHECK(run({"series", "--family", "sp", "--q", "2"}).code == cli::kUsage);
}

TEST_CASE("enumerate command") {
  Result r = run({"enumerate", "--family", "sp", "--n", "4", "--q", "2"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["elements"] == 720);
  CHECK(j["order"] == "720");
  Result p = run({"enumerate", "--family", "gl", "--n", "2", "--q", "2", "--t", "1", "--format", "csv"});
  CHECK(p.out.find("proportion,1/3") != std::string::npos);
  CHECK(run({"enumerate", "--family", "gl", "--n", "8", "--q", "3"}).code == cli::kResource);
  CHECK(run({"enumerate", "--family", "gl", "--n", "12", "--q", "2", "--t", "1", "--method", "montecarlo"}).code ==
        cli::kUsage);
  const std::vector<std::string> mc = {"enumerate", "--family", "gl", "--n", "12", "--q", "2", "--t", "2",
                                       "--method", "montecarlo", "--samples", "20000", "--seed", "9"};
  Result a = run(mc), b = run(mc);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Result e = run({"enumerate", "--family", "gl", "--n", "3", "--q", "2", "--t", "1", "--action", "flag:1"});
  json ej = json::parse(e.out);
  CHECK(ej["expectation"]["coset_average"] == "1");
}

TEST_CASE("verify command") {
  Result r = run({"verify", "--suite", "inverse-transpose", "--n", "4", "--q", "2", "--t", "1"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0]["lhs"] == "19/45");
  CHECK(run({"verify", "--suite", "exactness-bridge", "--n", "3", "--q", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "identities", "--q", "3", "--order", "5"}).code == 0);
  CHECK(run({"verify", "--suite", "expectation", "--n", "3", "--q", "2"}).code == 0);
  CHECK(run({"verify", "--suite", "symmetric", "--n", "6"}).code == 0);
  CHECK(run({"verify", "--suite", "bounds", "--q", "2", "--t", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("probe, presets and output files") {
  Result r = run({"probe", "--group", "psl2(7)"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["three_halves"] == true);
  CHECK(run({"probe", "--group", "psl2(7)", "--trials", "100"}).code == cli::kUsage);
  Result p = run({"enumerate", "--preset", "sp-2", "--n", "4"});
  REQUIRE(p.code == 0);
  json pj = json::parse(p.out);
  CHECK(pj["config"]["t"] == 2);
  CHECK(pj["proportion"]["value"] == "1/5");
  Result o = run({"enumerate", "--preset", "sp-2", "--n", "4", "--t", "1"});
  CHECK(json::parse(o.out)["config"]["t"] == 1);
  CHECK(run({"enumerate", "--preset", "missing", "--n", "4"}).code == cli::kUsage);
  const std::string path = "cgstat_cli_test_output.json";
  CHECK(run({"limit", "--family", "su", "--q", "2", "--output", path}).code == 0);
  std::ifstream in(path);
  json f = json::parse(in);
  CHECK(f["family"] == "su");
  std::remove(path.c_str());
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}
