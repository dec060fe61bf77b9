#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "kstab/report.hpp"

using kstab::OutputFormat;
using kstab::Rational;

namespace {

kstab::RuledSurfaceConfig surface(long m_num, long m_den, long c_num, long c_den) {
    kstab::RuledSurfaceConfig cfg;
    cfg.genus = 2;
    cfg.degree = 1;
    cfg.m = Rational(m_num, m_den);
    cfg.c = Rational(c_num, c_den);
    return cfg;
}

} // namespace

TEST_CASE("output format parsing") {
    CHECK(kstab::parse_output_format("table") == OutputFormat::table);
    CHECK(kstab::parse_output_format("json") == OutputFormat::json);
    CHECK(kstab::parse_output_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(kstab::parse_output_format("yaml"), std::invalid_argument);
}

TEST_CASE("csv escaping follows RFC 4180 quoting") {
    CHECK(kstab::csv_escape("plain") == "plain");
    CHECK(kstab::csv_escape("7/2") == "7/2");
    CHECK(kstab::csv_escape("a,b") == "\"a,b\"");
    CHECK(kstab::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(kstab::csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("config files parse flat key = value lines") {
    std::istringstream in(
        "# comment\n"
        "m = 2\n"
        "c = 1   # trailing comment\n"
        "\n"
        "format = json\n");
    const auto config = kstab::parse_config_file(in);
    CHECK(config.at("m") == "2");
    CHECK(config.at("c") == "1");
    CHECK(config.at("format") == "json");
    CHECK(config.size() == 3);

    std::istringstream bad("novalue\n");
    CHECK_THROWS_AS(kstab::parse_config_file(bad), std::invalid_argument);
}

TEST_CASE("example run reproduces the known instability values") {
    const kstab::ExampleRun stable = kstab::run_example(surface(2, 1, 1, 1));
    CHECK(stable.f_chi == Rational(19, 11));
    CHECK(stable.closed_form_checked);
    CHECK(stable.closed_form_match);
    CHECK(stable.verdict == "not_destabilizing");

    const kstab::ExampleRun unstable = kstab::run_example(surface(19, 1, 7, 2));
    CHECK(unstable.f_chi == Rational(-50127, 15392));
    CHECK(unstable.closed_form_match);
    CHECK(unstable.verdict == "strictly_destabilized");
}

TEST_CASE("example reports embed exact rationals in every format") {
    const kstab::ExampleRun run = kstab::run_example(surface(2, 1, 1, 1));

    const std::string table = kstab::render_example(run, OutputFormat::table);
    CHECK(table.find("19/11") != std::string::npos);
    CHECK(table.find("1.72727272727") != std::string::npos);
    CHECK(table.find("match") != std::string::npos);

    const std::string json_text = kstab::render_example(run, OutputFormat::json);
    const auto j = nlohmann::json::parse(json_text);
    CHECK(j["schema"] == "kstab/1");
    CHECK(j["invariants"]["F_chi"]["num"] == "19");
    CHECK(j["invariants"]["F_chi"]["den"] == "11");
    CHECK(j["invariants"]["F_chi_approx"] == "1.72727272727");
    CHECK(j["closed_form_match"] == true);
    // exact and approximate fields stay separate
    CHECK(j["invariants"]["F_chi"].contains("num"));
    CHECK_FALSE(j["invariants"]["F_chi"].contains("approx"));

    const std::string csv = kstab::render_example(run, OutputFormat::csv);
    CHECK(csv.find("19/11") != std::string::npos);
    CHECK(csv.rfind("m,c,genus,degree", 0) == 0);
}

TEST_CASE("scan emits the documented csv columns") {
    const kstab::ScanRun run = kstab::run_scan({Rational(19), Rational(2)}, 50);
    REQUIRE(run.rows.size() == 2);
    CHECK(run.rows[0].m == Rational(2)); // sorted ascending
    CHECK(run.rows[1].m == Rational(19));

    const std::string csv = kstab::render_scan(run, OutputFormat::csv);
    std::istringstream lines(csv);
    std::string header, stable_row, unstable_row;
    std::getline(lines, header);
    std::getline(lines, stable_row);
    std::getline(lines, unstable_row);
    CHECK(header == "m,verdict,witness_c,F_chi_num,F_chi_den,F_chi_approx");
    CHECK(stable_row == "2,no_witness_found,,,,");
    CHECK(unstable_row == "19,strictly_destabilized,7/2,-50127,15392,-3.25669178794");

    const auto j = nlohmann::json::parse(kstab::render_scan(run, OutputFormat::json));
    CHECK(j["rows"][0]["witness_c"].is_null());
    CHECK(j["rows"][1]["witness_c"]["num"] == "7");

    const kstab::ScanRun empty = kstab::run_scan({}, 50);
    CHECK(kstab::render_scan(empty, OutputFormat::csv) ==
          "m,verdict,witness_c,F_chi_num,F_chi_den,F_chi_approx\n");
}

TEST_CASE("critical report carries interval and discriminant") {
    const kstab::CriticalRun run = kstab::run_critical(Rational(1, 100));
    CHECK(run.hi - run.lo <= Rational(1, 100));
    const std::string table = kstab::render_critical(run, OutputFormat::table);
    CHECK(table.find("m^4 - 16*m^3 - 52*m^2 - 48*m - 12") != std::string::npos);
    const auto j = nlohmann::json::parse(kstab::render_critical(run, OutputFormat::json));
    CHECK(j["schema"] == "kstab/1");
    CHECK(j["interval"]["lo"].contains("num"));
}

TEST_CASE("verify runs are deterministic per seed") {
    const kstab::VerifyRun a = kstab::run_verify(3, 7);
    const kstab::VerifyRun b = kstab::run_verify(3, 7);
    CHECK(a.ok);
    CHECK(kstab::render_verify(a, OutputFormat::json) ==
          kstab::render_verify(b, OutputFormat::json));
    CHECK(kstab::render_verify(a, OutputFormat::table) ==
          kstab::render_verify(b, OutputFormat::table));

    const kstab::VerifyRun single = kstab::run_verify(1, 1);
    CHECK(single.ok);
    for (const auto& p : single.properties) CHECK(p.trials == 1);
}

TEST_CASE("rationals round-trip through parse and emit unchanged") {
    for (const std::string s : {"7/2", "-50127/15392", "0", "19/11", "-3"}) {
        CHECK(Rational::parse(s).str() == s);
    }
}
