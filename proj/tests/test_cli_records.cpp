#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "critbase/cli.hpp"
#include "critbase/records.hpp"
#include "critbase/words.hpp"

using namespace critbase;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"critical"}).code == 2);                       // missing --m
  CHECK(cli({"critical", "--m", "2", "--bogus"}).code == 2);  // unknown flag
  CHECK(cli({"mu"}).code == 2);                             // no mode picked
  CHECK(cli({"mu", "--word", "0(01)", "--kl"}).code == 2);  // two modes
  auto r = cli({"scan", "--from", "1.5", "--to", "1.2", "--step", "0.1"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("domain errors exit with 1 and a JSON error record") {
  auto r = cli({"mu", "--word", "1(0)"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("error"));
  CHECK(j.contains("detail"));

  auto bad = cli({"word", "--word", "1()"});
  CHECK(bad.code == 1);
}

TEST_CASE("critical --m 2 reports the top case") {
  auto r = cli({"critical", "--m", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == "TopG");
  CHECK(j["witness"] == "0(1)");
  CHECK(std::abs(j["L"].get<double>() - 2.618033988749895) <= 1e-10);
  CHECK(j["m"] == 2.0);
}

TEST_CASE("identical invocations produce byte-identical output") {
  std::vector<std::string> args = {"scan", "--from", "1.3", "--to", "1.4",
                                   "--step", "0.02", "--format", "json"};
  auto a = cli(args);
  auto b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
}

TEST_CASE("csv and json carry identical values with matching names") {
  std::vector<std::string> base = {"scan", "--from", "1.3", "--to", "1.36", "--step", "0.02"};
  auto csvv = base;
  csvv.push_back("--format");
  csvv.push_back("csv");
  auto jsonv = base;
  jsonv.push_back("--format");
  jsonv.push_back("json");
  auto rc = cli(csvv);
  auto rj = cli(jsonv);
  REQUIRE(rc.code == 0);
  REQUIRE(rj.code == 0);

  auto lines = split_lines(rc.out);
  auto header = split_csv(lines[0]);
  auto arr = nlohmann::json::parse(rj.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == lines.size() - 1);
  for (size_t i = 0; i < arr.size(); ++i) {
    auto cells = split_csv(lines[i + 1]);
    REQUIRE(cells.size() == header.size());
    for (size_t c = 0; c < header.size(); ++c) {
      const auto& jv = arr[i][header[c]];
      if (jv.is_number()) {
        CHECK(std::strtod(cells[c].c_str(), nullptr) == jv.get<double>());
      } else {
        CHECK(cells[c] == jv.get<std::string>());
      }
    }
  }
}

TEST_CASE("figure data satisfies the bound columns") {
  auto r = cli({"scan", "--from", "1.35", "--to", "1.45", "--step", "0.05", "--figure"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  CHECK(lines[0] == "m,G,L,sqrt_bound,upper");
  for (size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv(lines[i]);
    double m = std::strtod(cells[0].c_str(), nullptr);
    double G = std::strtod(cells[1].c_str(), nullptr);
    double L = std::strtod(cells[2].c_str(), nullptr);
    double rootb = std::strtod(cells[3].c_str(), nullptr);
    double upper = std::strtod(cells[4].c_str(), nullptr);
    CHECK(rootb == doctest::Approx(1 + std::sqrt(m)).epsilon(1e-12));
    CHECK(upper == doctest::Approx(1 + m).epsilon(1e-12));
    CHECK(G <= rootb + 1e-9);
    CHECK(rootb <= L + 1e-9);
    CHECK(L <= upper + 1e-9);
  }
}

TEST_CASE("figure row at m = 2 matches the pinned values") {
  auto r = cli({"scan", "--from", "1.99", "--to", "2.0", "--step", "0.01", "--figure"});
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  auto cells = split_csv(lines.back());
  REQUIRE(cells.size() == 5);
  CHECK(std::strtod(cells[0].c_str(), nullptr) == 2.0);
  CHECK(std::strtod(cells[1].c_str(), nullptr) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::strtod(cells[2].c_str(), nullptr) ==
        doctest::Approx(2.618033988749895).epsilon(1e-10));
  CHECK(std::strtod(cells[3].c_str(), nullptr) ==
        doctest::Approx(2.414213562373095).epsilon(1e-12));
  CHECK(std::strtod(cells[4].c_str(), nullptr) == 3.0);
}

TEST_CASE("word literals printed by the CLI re-parse to the same word") {
  for (const char* lit : {"0(01)", "10(01)", "0(10)", "011(0110)", "(1)"}) {
    auto r = cli({"word", "--word", lit, "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"canonical", "orbit_inf", "orbit_sup"}) {
      EPWord round = EPWord::parse(j[key].get<std::string>());
      CHECK(round.str() == j[key].get<std::string>());
    }
    CHECK(EPWord::parse(j["canonical"].get<std::string>()) == EPWord::parse(lit));
  }
}

TEST_CASE("mu subcommand modes") {
  auto r = cli({"mu", "--word", "0(01)", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["mu"].get<double>() - 1.281972) <= 1e-5);
  CHECK(j["bracket"].get<double>() <= 1e-11);

  auto d = cli({"mu", "--directive", "M", "--format", "json"});
  auto jd = nlohmann::json::parse(d.out);
  CHECK(std::abs(jd["mu"].get<double>() - 4.0 / 3.0) <= 1e-10);

  auto s = cli({"mu", "--sturmian", "(01)", "--format", "json"});
  auto js = nlohmann::json::parse(s.out);
  CHECK(std::abs(js["mu"].get<double>() - j["mu"].get<double>()) <= 1e-10);

  auto k = cli({"mu", "--kl", "--prefix-len", "64", "--tol", "1e-9", "--format", "json"});
  auto jk = nlohmann::json::parse(k.out);
  CHECK(jk["beta"].get<double>() >= 1.7872);
  CHECK(jk["beta"].get<double>() <= 1.7873);
}

TEST_CASE("unique and certify subcommands") {
  auto h = cli({"unique", "--holes", "--beta", "2.25", "--m", "1.5", "--format", "json"});
  REQUIRE(h.code == 0);
  auto jh = nlohmann::json::parse(h.out);
  CHECK(std::abs(jh["h1_lo"].get<double>() - 4.0 / 9.0) <= 1e-12);
  CHECK(std::abs(jh["h2_hi"].get<double>() - 44.0 / 45.0) <= 1e-12);

  auto u = cli({"unique", "--word", "(0)", "--beta", "2.2", "--m", "1.5", "--format", "json"});
  auto ju = nlohmann::json::parse(u.out);
  CHECK(ju["verdict"] == "unique");

  auto c = cli({"certify", "--v", "0", "--w", "1", "--beta", "3.1", "--m", "2", "--format", "json"});
  auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["result"] == "certified");
  CHECK(jc["dim"].get<double>() > 0.0);
}

TEST_CASE("classify emits the descent trace") {
  auto r = cli({"classify", "--m", "1.505", "--format", "json"});
  REQUIRE(r.code == 0);
  auto arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["decision"] == "descend M");
  CHECK(arr[1]["decision"] == "PlateauF:MM");
}

TEST_CASE("limitword and count run") {
  auto r = cli({"limitword", "--directive", "MMMM", "--length", "16", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["prefix"] == "0110100110010110");

  auto c = cli({"count", "--beta", "2.4", "--m", "1.5", "--depth", "8", "--format", "csv"});
  REQUIRE(c.code == 0);
  auto lines = split_lines(c.out);
  CHECK(lines[0] == "depth,survivors");
  CHECK(lines.size() == 9);
}

TEST_CASE("number formatting carries 15 significant digits") {
  CHECK(format_double(2.618033988749895) == "2.61803398874989");
  CHECK(round_to_15(2.618033988749895) == 2.61803398874989);
  CHECK(format_double(0.5) == "0.5");
}
