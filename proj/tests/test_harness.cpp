#include <doctest.h>

#include <cmath>

#include "qconcav/campaign.hpp"
#include "qconcav/render.hpp"
#include "qconcav/state_io.hpp"

using namespace qconcav;

TEST_CASE("appendix rows reproduce the published outcomes") {
  const std::vector<AppendixRow> rows = run_appendix();
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].id == 'a');
  CHECK(rows[0].expected == "lowbd1>lowbd2");
  CHECK(rows[1].id == 'b');
  CHECK(rows[1].expected == "lowbd2>lowbd1");
  CHECK(rows[2].id == 'c');
  CHECK(rows[2].expected == "lowbd2>lowbd0");

  for (const AppendixRow& r : rows) {
    CHECK(r.outcome_ok);
    CHECK(r.margin > 1e-6);
    CHECK(r.report.all_ok());
  }

  // only example (c) lists a Bloch vector outside the unit ball
  CHECK(!rows[0].clamped1);
  CHECK(!rows[0].clamped2);
  CHECK(!rows[1].clamped1);
  CHECK(!rows[1].clamped2);
  CHECK(rows[2].clamped1);
  CHECK(!rows[2].clamped2);

  // literals preserved exactly as published
  CHECK(rows[0].w1 == std::array<double, 3>{0.2876, 0.4322, 0.3112});
  CHECK(rows[2].w1 == std::array<double, 3>{-0.1850, 0.7506, -0.6388});
  CHECK(rows[2].x == 0.5218);
}

TEST_CASE("fuzz campaign stays clean and tallies both winners") {
  FuzzConfig cfg;
  cfg.dims = {2};
  cfg.trials_per_dim = 500;
  cfg.master_seed = 42;
  const CampaignResult result = run_fuzz(cfg);

  CHECK(result.ok());
  REQUIRE(result.tallies.size() == 1);
  const DimTally& t = result.tallies[0];
  CHECK(t.trials == 500);
  CHECK(t.chain_pass == 500);
  // the pinsker-vs-carlen_lieb comparison goes both ways on random qubits
  CHECK(t.winner_lowbd1 > 0);
  CHECK(t.winner_lowbd2 > 0);
  CHECK(t.winner_lowbd1 + t.winner_lowbd2 + t.winner_tie == 500);
  CHECK(t.best_lowbd0 + t.best_lowbd1 + t.best_lowbd2 + t.best_tie == 500);
}

TEST_CASE("rank-deficient campaigns stay clean") {
  // pure and low-rank states exercise the pseudo-inverse and
  // support-detection paths of every bound
  FuzzConfig cfg;
  cfg.dims = {3, 4, 5};
  cfg.ranks = {1, 2, 3};
  cfg.trials_per_dim = 300;
  cfg.master_seed = 2025;
  const CampaignResult result = run_fuzz(cfg);
  CHECK(result.ok());
  for (const DimTally& t : result.tallies) CHECK(t.chain_pass == t.trials);
}

TEST_CASE("fuzz with zero trials is an empty pass") {
  FuzzConfig cfg;
  cfg.dims = {2, 3};
  cfg.trials_per_dim = 0;
  const CampaignResult result = run_fuzz(cfg);
  CHECK(result.ok());
  CHECK(result.total_trials() == 0);
  for (const DimTally& t : result.tallies) CHECK(t.trials == 0);
}

TEST_CASE("fuzz config validation") {
  FuzzConfig cfg;
  cfg.dims = {2, 3};
  cfg.ranks = {1};
  CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
  cfg.ranks = {1, 2};
  cfg.trials_per_dim = 10;
  const CampaignResult result = run_fuzz(cfg);
  CHECK(result.tallies[0].rank == 1);
  CHECK(result.tallies[1].rank == 2);
  CHECK(result.ok());

  cfg.dims = {1};
  cfg.ranks.clear();
  CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);
}

TEST_CASE("campaign output is deterministic") {
  FuzzConfig cfg;
  cfg.dims = {2};
  cfg.trials_per_dim = 50;
  cfg.master_seed = 7;
  cfg.keep_rows = true;
  const CampaignResult a = run_fuzz(cfg);
  const CampaignResult b = run_fuzz(cfg);
  CHECK(render_campaign(a, OutputFormat::csv) == render_campaign(b, OutputFormat::csv));
  CHECK(render_campaign(a, OutputFormat::json) == render_campaign(b, OutputFormat::json));
  CHECK(render_campaign(a, OutputFormat::table) == render_campaign(b, OutputFormat::table));
}

TEST_CASE("csv schema is pinned") {
  CHECK(csv_header() ==
        "id,dim,x,gap,lowbd0,lowbd1,lowbd2,block_pinsker,upbd,rfz_bures,rfz_trace,"
        "audenaert,winner,max_abs_slack\n");

  FuzzConfig cfg;
  cfg.dims = {2};
  cfg.trials_per_dim = 3;
  cfg.keep_rows = true;
  const std::string csv = render_campaign(run_fuzz(cfg), OutputFormat::csv);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + one row per trial

  // the kim column renders "na" inside the indeterminate window
  const MixtureProblem p(0.5, from_bloch(BlochVector{{0, 0, 1}}),
                         from_bloch(BlochVector{{0, 0, -1}}));
  const std::string row = csv_row("eval", full_report(p));
  CHECK(row.find(",na,") != std::string::npos);
}

TEST_CASE("numbers render with 17 significant digits") {
  CHECK(format_g17(0.5) == "0.5");
  CHECK(format_g17(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_g17(std::log(2.0)) == "0.69314718055994529");
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("report json carries the headline fields") {
  const MixtureProblem p(0.5, from_bloch(BlochVector{{0, 0, 1}}),
                         from_bloch(BlochVector{{0, 0, -1}}));
  const std::string json = render_report(full_report(p), OutputFormat::json);
  CHECK(json.find("\"gap\":0.69314718055994529") != std::string::npos);
  CHECK(json.find("\"kim\":null") != std::string::npos);
  CHECK(json.find("\"all_ok\":true") != std::string::npos);
  CHECK(json.find("\"winner\":\"lowbd2\"") != std::string::npos);
}

TEST_CASE("state files parse and validate") {
  SUBCASE("bloch form") {
    const DensityMatrix rho = parse_state_json(R"({"bloch": [0.0, 0.0, 1.0]})");
    CHECK(rho.mat()(0, 0).real() == doctest::Approx(1.0));
  }
  SUBCASE("matrix form with imaginary part") {
    const DensityMatrix rho = parse_state_json(
        R"({"matrix": {"re": [[0.5, 0.0], [0.0, 0.5]], "im": [[0.0, -0.25], [0.25, 0.0]]}})");
    CHECK(rho.mat()(0, 1).imag() == doctest::Approx(-0.25));
  }
  SUBCASE("matrix form without imaginary part") {
    const DensityMatrix rho = parse_state_json(R"({"matrix": {"re": [[0.25, 0], [0, 0.75]]}})");
    CHECK(rho.mat()(1, 1).real() == doctest::Approx(0.75));
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(parse_state_json("not json"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"bloch": [1, 1]})"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"bloch": [1, 1, 1]})"), StateFormatError);
    CHECK_THROWS_AS(parse_state_json(R"({"other": 1})"), StateFormatError);
    // trace != 1
    CHECK_THROWS_AS(parse_state_json(R"({"matrix": {"re": [[0.5, 0], [0, 0.6]]}})"),
                    StateFormatError);
    // not hermitian
    CHECK_THROWS_AS(parse_state_json(R"({"matrix": {"re": [[0.5, 0.3], [0.0, 0.5]]}})"),
                    StateFormatError);
    // ragged rows
    CHECK_THROWS_AS(parse_state_json(R"({"matrix": {"re": [[0.5, 0], [0]]}})"),
                    StateFormatError);
  }
}

TEST_CASE("bloch triples parse strictly") {
  const BlochVector w = parse_bloch_triple("0.1,-0.2,0.3");
  CHECK(w.w[0] == doctest::Approx(0.1));
  CHECK(w.w[1] == doctest::Approx(-0.2));
  CHECK(w.w[2] == doctest::Approx(0.3));
  CHECK_THROWS(parse_bloch_triple("0.1,0.2"));
  CHECK_THROWS(parse_bloch_triple("0.1,0.2,0.3,0.4"));
  CHECK_THROWS(parse_bloch_triple("a,b,c"));
  CHECK_THROWS(parse_bloch_triple("0.1,0.2,0.3junk"));
}

TEST_CASE("critical rendering includes brackets and grid") {
  const MixtureProblem p(0.5, parse_state_json(R"({"bloch": [0, 0, 1]})"),
                         parse_state_json(R"({"bloch": [0, 0, -1]})"));
  const CriticalParams cp = find_critical_params(p);
  const std::string table = render_critical(cp, OutputFormat::table);
  CHECK(table.find("left_endpoint") != std::string::npos);
  CHECK(table.find("b_c=0.5") != std::string::npos);
  const std::string json = render_critical(cp, OutputFormat::json);
  CHECK(json.find("\"b_c\":0.5") != std::string::npos);
  const std::string csv = render_critical(cp, OutputFormat::csv);
  CHECK(csv.find("family,param,mixture,reference,satisfied") == 0);
}
