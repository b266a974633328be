#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sre/runner.hpp"

using namespace sre;

TEST_CASE("grid parsing and number formatting") {
  CHECK(parse_grid("0.5,-1,2") == std::vector<double>{0.5, -1.0, 2.0});
  const auto g = parse_grid("lin:-1:1:5");
  REQUIRE(g.size() == 5);
  CHECK(g.front() == -1.0);
  CHECK(g[2] == doctest::Approx(0.0));
  CHECK(g.back() == 1.0);
  CHECK_THROWS(parse_grid("lin:0:1"));
  CHECK_THROWS(parse_grid("a,b"));
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("ordered pool keeps index order and forwards exceptions") {
  const auto res = run_ordered(20, 3, [](std::size_t i) {
    return std::vector<std::vector<std::string>>{{std::to_string(i)}};
  });
  REQUIRE(res.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(res[i][0][0] == std::to_string(i));
  CHECK_THROWS(run_ordered(5, 2, [](std::size_t i) -> std::vector<std::vector<std::string>> {
    if (i == 3) throw std::runtime_error("boom");
    return {};
  }));
}

TEST_CASE("configuration validation") {
  RunConfig c;
  c.command = "charged-moments";
  c.sizes = {8};
  CHECK_NOTHROW(c.validate());
  c.delta = 1.5;
  c.model = "xxz";
  CHECK_THROWS(c.validate());
  c.delta = 0.3;
  c.gamma = 1.0;
  CHECK_THROWS(c.validate());  // Delta and gamma disagree
  RunConfig d;
  d.command = "nonsense";
  CHECK_THROWS(run_command(d));
}

TEST_CASE("commands produce consistent tables") {
  RunConfig c;
  c.command = "charged-moments";
  c.sizes = {8};
  c.cuts = {3};
  c.n_values = {1, 2};
  const Table t = run_command(c);
  CHECK(t.checks_passed);
  CHECK(t.columns.back() == "ok");
  CHECK(!t.rows.empty());
  for (const auto& row : t.rows) CHECK(row.size() == t.columns.size());

  std::ostringstream csv, js;
  write_csv(t, csv);
  CHECK(csv.str().find(t.columns.front()) != std::string::npos);
  CHECK(csv.str().rfind("# ", 0) == 0);
  write_json(t, js);
  const auto parsed = nlohmann::json::parse(js.str());
  CHECK(parsed["rows"].size() == t.rows.size());

  RunConfig k;
  k.command = "clock";
  k.model = "clock";
  k.p = 2;
  k.sizes = {6, 8};
  k.n_values = {1, 2};
  CHECK(run_command(k).checks_passed);

  RunConfig x;
  x.command = "exact-xx";
  x.n_values = {1, 2};
  x.sizes = {32};
  x.alpha_grid = {0.5};
  CHECK(run_command(x).checks_passed);
}

TEST_CASE("listed runner examples") {
  RunConfig e;
  e.command = "charged-moments";
  const Table empty = run_command(e);
  CHECK(empty.rows.empty());
  CHECK(empty.checks_passed);
  std::ostringstream os;
  write_csv(empty, os);
  CHECK(os.str().find("model,N,r,n,alpha") != std::string::npos);

  RunConfig x;
  x.command = "charged-moments";
  x.sizes = {12};
  x.cuts = {5};
  x.alpha_grid = {0.7, 2.0};
  const Table tx = run_command(x);
  CHECK(tx.checks_passed);
  int ff = 0;
  for (const auto& row : tx.rows) ff += row[7] == "ff";
  CHECK(ff == 2);

  RunConfig z = x;
  z.model = "xxz";
  z.delta = 0.4;
  z.sizes = {10};
  z.cuts = {4};
  const Table tz = run_command(z);
  CHECK(tz.checks_passed);
  REQUIRE(!tz.rows.empty());
  for (const auto& row : tz.rows) CHECK(row[7] == "ed");
}

TEST_CASE("XXZ prefactor: overlap and two-point estimates agree") {
  RunConfig c;
  c.command = "prefactor";
  c.model = "xxz";
  c.delta = 0.4;
  c.sizes = {8, 10, 12, 14};
  c.alpha_grid = {0.5, 1.0};
  const Table t = run_command(c);
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 0; i < 4; i += 2) {
    const double a = std::stod(t.rows[i][4]), b = std::stod(t.rows[i + 1][4]);
    CHECK(std::abs(a / b - 1.0) < 0.01);
  }
}
