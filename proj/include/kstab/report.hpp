#ifndef KSTAB_REPORT_HPP
#define KSTAB_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kstab/invariants.hpp"
#include "kstab/rational.hpp"
#include "kstab/ruled_surface.hpp"
#include "kstab/verify.hpp"

namespace kstab {

enum class OutputFormat { table, json, csv };

// "table", "json" or "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);

// RFC 4180 quoting: fields containing commas, quotes or newlines are
// quoted, embedded quotes doubled.
std::string csv_escape(const std::string& field);

// Flat "key = value" config files; '#' starts a comment. Values from the
// command line always win over file values.
std::map<std::string, std::string> parse_config_file(std::istream& in);

// Full pipeline at one parameter point: build the weight system, fit,
// compute every invariant, and compare with the closed forms whenever
// they exist for the configuration.
struct ExampleRun {
    RuledSurfaceConfig cfg;
    Polynomial dim_poly;
    ExpansionLeads fitted;
    Rational futaki_alpha;
    Rational futaki_beta;
    Rational ip_alpha_beta;
    Rational ip_beta_beta;
    Rational chi_coeff;
    Rational f_chi;
    bool closed_form_checked = false; // genus 2, degree 1 only
    bool closed_form_match = true;
    std::optional<Rational> closed_f_chi;
    std::string verdict; // classification of this single parameter point
};

ExampleRun run_example(const RuledSurfaceConfig& cfg);
std::string render_example(const ExampleRun& run, OutputFormat format);

struct ScanRow {
    Rational m;
    StabilityVerdict verdict;
};

struct ScanRun {
    std::int64_t denominator_bound = 0;
    std::vector<ScanRow> rows; // sorted by m
};

ScanRun run_scan(std::vector<Rational> ms, std::int64_t denominator_bound);
std::string render_scan(const ScanRun& run, OutputFormat format);

struct CriticalRun {
    Rational precision;
    Rational lo;
    Rational hi;
    Polynomial discriminant;
};

CriticalRun run_critical(const Rational& precision);
std::string render_critical(const CriticalRun& run, OutputFormat format);

struct VerifyRun {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;
    bool ok = false;
};

VerifyRun run_verify(int trials, std::uint64_t seed);
std::string render_verify(const VerifyRun& run, OutputFormat format);

} // namespace kstab

#endif
