#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "divl1/experiments.hpp"

using namespace divl1;

TEST_CASE("loglog fit recovers a power law") {
    std::vector<double> xs, ys;
    for (double x = 10; x <= 1e6; x *= 10) {
        xs.push_back(x);
        ys.push_back(3.7 * std::pow(x, 0.5));
    }
    FitResult fit = fit_loglog(xs, ys);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::exp(fit.intercept) == doctest::Approx(3.7).epsilon(1e-9));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS(fit_loglog({1.0}, {2.0}));
}

TEST_CASE("report serialization round trips") {
    ExperimentReport rep;
    rep.name = "demo";
    rep.params = {{"delta", 2.0}};
    ReportRow row;
    row.x = 10;
    row.observed = 3;
    row.predicted = 2.5;
    row.residual = 0.5;
    row.normalized = 0.1;
    row.extra = {{"note", 7.0}};
    rep.rows.push_back(row);
    rep.fit = FitResult{0.5, 1.0, 0.99};

    nlohmann::json j = rep.to_json();
    CHECK(j["name"] == "demo");
    CHECK(j["params"]["delta"] == 2.0);
    CHECK(j["rows"].size() == 1);
    CHECK(j["rows"][0]["x"] == 10.0);
    CHECK(j["fit"]["slope"] == 0.5);
    CHECK(j["pass"] == true);

    std::string csv = rep.to_csv();
    CHECK(csv.find("x,observed,predicted,residual,normalized") !=
          std::string::npos);
    CHECK(csv.find("note") != std::string::npos);

    rep.write("/tmp/divl1_report_test.json", "json");
    std::ifstream in("/tmp/divl1_report_test.json");
    nlohmann::json back = nlohmann::json::parse(in);
    CHECK(back["name"] == "demo");
}

TEST_CASE("default moduli sweep") {
    auto mods = default_moduli(31);
    for (std::uint64_t p : {2ULL, 3ULL, 31ULL}) CHECK(std::count(mods.begin(), mods.end(), p) == 1);
    CHECK(std::count(mods.begin(), mods.end(), 120ULL) == 1);
    CHECK(std::count(mods.begin(), mods.end(), 32ULL) == 0);
}

TEST_CASE("lemma 1 experiment shrinks under the x^0.55 scaling") {
    DivisorTable table(300'000);
    ExperimentReport rep =
        run_lemma1({10'000, 30'000, 100'000, 300'000}, table);
    REQUIRE(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
        // prediction is within a few percent already at 1e4
        CHECK(std::fabs(row.residual) < 0.05 * row.observed);
        CHECK(row.normalized < 10.0);
    }
    REQUIRE(rep.fit.has_value());
    CHECK(rep.fit->slope < 0.75);  // residual grows strictly slower than x
}

TEST_CASE("lemma 2 experiment matches the arc-weight sum") {
    DivisorTable table(100'000);
    ExperimentReport rep = run_lemma2({10'000, 100'000}, 2.0, table);
    for (const auto& row : rep.rows) {
        INFO("x=", row.x);
        CHECK(std::fabs(row.residual) < 0.05 * std::fabs(row.observed));
    }
}

TEST_CASE("lemma 3 experiment keeps the variance ratio bounded") {
    DivisorTable table(100'000);
    ExperimentReport rep =
        run_lemma3({10'000, 100'000}, default_moduli(13), table);
    for (const auto& row : rep.rows) CHECK(row.normalized < 50.0);
}

TEST_CASE("theorem experiment produces a sqrt-x l1 norm") {
    DivisorTable table(1 << 14);
    ExperimentReport rep =
        run_theorem({1 << 10, 1 << 11, 1 << 12, 1 << 14}, 2, table);
    REQUIRE(rep.fit.has_value());
    CHECK(rep.fit->slope == doctest::Approx(0.5).epsilon(0.2));
    for (const auto& row : rep.rows) {
        // parseval calibration is part of each row
        bool found = false;
        for (const auto& [k, v] : row.extra)
            if (k == "l2_relative_error") {
                CHECK(v < 1e-9);
                found = true;
            }
        CHECK(found);
    }
}
