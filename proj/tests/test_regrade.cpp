#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "liecoh/regrade.hpp"

using liecoh::RegradeFixture;
using liecoh::RegradeReport;

namespace {

const char* kFixture = "regrade/v3_top_table.json";

bool check_failed(const RegradeReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name && !c.pass) return true;
  return false;
}

}  // namespace

TEST_CASE("top-degree fixture loads with the recorded shape") {
  RegradeFixture fx = RegradeFixture::load(kFixture);
  CHECK(fx.id == "v3_top_table");
  CHECK(fx.rows.size() == 23);
  CHECK(fx.display.size() == 16);
  CHECK(fx.known_missing.size() == 1);
  CHECK(fx.chart_path == "charts/K_2_4.json");

  int64_t stated = 0;
  for (const auto& t : fx.display) stated += t.coeff;
  CHECK(stated == 19);  // the stated series lists 19 generators

  REQUIRE(fx.row("v") != nullptr);
  CHECK(fx.row("v")->role == "periodicity");
  CHECK(fx.row("v")->top.eval(7) == 96);
  CHECK(fx.row("zeta2")->top.eval(7) == -1);
  CHECK(fx.known_missing[0].exp.eval(7) == 82);
}

TEST_CASE("table and series verify at p = 7 with the known discrepancies") {
  RegradeFixture fx = RegradeFixture::load(kFixture);
  RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);

  CHECK(rep.pass);
  CHECK(rep.failures() == 0);
  CHECK(rep.checks.size() == 26);  // 23 rows + coverage + period + reconcile

  // The stated series misses one generator family and uses a repeat degree
  // that differs from the periodicity class; both must be flagged.
  REQUIRE(rep.discrepancies.size() == 4);
  CHECK(rep.discrepancies[0].find("period: stated repeat") != std::string::npos);
  CHECK(rep.discrepancies[0].find("94") != std::string::npos);
  CHECK(rep.discrepancies[0].find("96") != std::string::npos);
  CHECK(rep.discrepancies[1] == "degree -14: computed coefficient 2, stated 1");
  CHECK(rep.discrepancies[2] == "degree -13: computed coefficient 3, stated 1");
  CHECK(rep.discrepancies[3] == "degree -12: computed coefficient 3, stated 2");

  CHECK(rep.str().find("PASS") != std::string::npos);
  CHECK(rep.str().find("DISCREPANCY") != std::string::npos);
}

TEST_CASE("windowed expansions have the hand-computed coefficients at p = 7") {
  RegradeFixture fx = RegradeFixture::load(kFixture);
  RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);

  auto at = [](const std::map<int64_t, int64_t>& m, int64_t d) {
    auto it = m.find(d);
    return it == m.end() ? int64_t{0} : it->second;
  };

  // Periodicity degree 96: translates of the twenty generator degrees times
  // the square of (1 + s^{-1}).
  CHECK(at(rep.computed_default, 0) == 1);
  CHECK(at(rep.computed_default, -3) == 2);
  CHECK(at(rep.computed_default, -4) == 4);
  CHECK(at(rep.computed_default, -5) == 2);
  CHECK(at(rep.computed_default, -6) == 1);
  CHECK(at(rep.computed_default, -7) == 2);
  CHECK(at(rep.computed_default, -8) == 1);
  CHECK(at(rep.computed_default, 7) == 3);
  CHECK(at(rep.computed_default, 20) == 6);
  CHECK(at(rep.computed_default, -13) == 1);
  CHECK(at(rep.computed_default, -14) == 3);

  // Stated repeat degree 94 shifts the top band into the window differently.
  CHECK(at(rep.computed_paper, -12) == 3);
  CHECK(at(rep.display_paper, -12) == 2);
  CHECK(at(rep.computed_paper, -14) == 2);
  CHECK(at(rep.display_paper, -14) == 1);
}

TEST_CASE("verification also passes at p = 11") {
  RegradeFixture fx = RegradeFixture::load(kFixture);
  RegradeReport rep = liecoh::verify_regrade(fx, 11, -30, 30);
  CHECK(rep.pass);
  // period 238 vs 240, missing family at 2p^2-2p-2 = 218
  CHECK(rep.discrepancies.size() >= 1);
  CHECK(rep.discrepancies[0].find("238") != std::string::npos);
  CHECK(rep.discrepancies[0].find("240") != std::string::npos);
}

TEST_CASE("tampered tables are caught") {
  SUBCASE("a wrong topological degree fails its row") {
    RegradeFixture fx = RegradeFixture::load(kFixture);
    for (auto& r : fx.rows)
      if (r.name == "h10") r.top = liecoh::PPoly::parse("2p-2");
    RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);
    CHECK_FALSE(rep.pass);
    CHECK(check_failed(rep, "table/h10"));
  }

  SUBCASE("a lift that disagrees with the chart fails its row") {
    RegradeFixture fx = RegradeFixture::load(kFixture);
    for (auto& r : fx.rows)
      if (r.name == "h10") {
        r.lift = liecoh::PPoly::parse("2p-4");
        r.top = liecoh::PPoly::parse("2p-5");
      }
    RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);
    CHECK_FALSE(rep.pass);
    CHECK(check_failed(rep, "table/h10"));
  }

  SUBCASE("dropping the recorded missing terms breaks reconciliation only") {
    RegradeFixture fx = RegradeFixture::load(kFixture);
    fx.known_missing.clear();
    RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);
    CHECK_FALSE(rep.pass);
    CHECK(rep.failures() == 1);
    CHECK(check_failed(rep, "series/reconcile"));
    CHECK(rep.discrepancies.size() == 4);  // still reported
  }

  SUBCASE("a wrong stated coefficient breaks reconciliation") {
    RegradeFixture fx = RegradeFixture::load(kFixture);
    for (auto& t : fx.display)
      if (t.exp.eval(7) == -3) t.coeff = 3;
    RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);
    CHECK_FALSE(rep.pass);
    CHECK(check_failed(rep, "series/reconcile"));
  }

  SUBCASE("a duplicated row fails") {
    RegradeFixture fx = RegradeFixture::load(kFixture);
    fx.rows.push_back(*fx.row("zeta2"));
    RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);
    CHECK_FALSE(rep.pass);
    CHECK(check_failed(rep, "table/zeta2"));
  }

  SUBCASE("a missing periodicity row fails coverage") {
    RegradeFixture fx = RegradeFixture::load(kFixture);
    fx.rows.pop_back();  // the periodicity row is last
    RegradeReport rep = liecoh::verify_regrade(fx, 7, -30, 30);
    CHECK_FALSE(rep.pass);
    CHECK(check_failed(rep, "table/coverage"));
  }
}

TEST_CASE("invalid inputs are rejected") {
  RegradeFixture fx = RegradeFixture::load(kFixture);
  CHECK_THROWS_AS(liecoh::verify_regrade(fx, 4, -30, 30), std::invalid_argument);
  CHECK_THROWS_AS(liecoh::verify_regrade(fx, 3, -30, 30), std::invalid_argument);
  CHECK_THROWS_AS(liecoh::verify_regrade(fx, 7, 10, -10), std::invalid_argument);
  CHECK_THROWS_AS(RegradeFixture::load("regrade/no_such_file.json"), std::runtime_error);

  std::filesystem::path bad = std::filesystem::temp_directory_path() / "regrade_bad_role.json";
  {
    std::ofstream out(bad);
    out << R"({"schema_version":1,"id":"x","min_p":5,"chart":"charts/K_2_4.json",
              "period_default":"2p^2-2","period_paper":"2p^2-4",
              "rows":[{"name":"1","role":"mystery","s":0,"lift":"0","top":"0"}],
              "display":[],"known_missing":[]})";
  }
  CHECK_THROWS_WITH_AS(RegradeFixture::load(bad.string()), doctest::Contains("mystery"),
                       std::runtime_error);
}
