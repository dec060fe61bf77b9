#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kstab/report.hpp"

namespace {

using kstab::OutputFormat;
using kstab::Rational;

struct OptionBinding {
    CLI::Option* option;
    std::string* target;
    std::string config_key;
};

class Options {
public:
    void bind(CLI::App* cmd, const std::string& flag, const std::string& key,
              const std::string& desc) {
        values_[key] = "";
        bindings_.push_back({cmd->add_option(flag, values_[key], desc), &values_[key], key});
    }

    // config file values fill options the command line left unset
    void merge_config(const std::map<std::string, std::string>& config) {
        for (OptionBinding& b : bindings_) {
            if (b.option->count() > 0) continue;
            const auto it = config.find(b.config_key);
            if (it != config.end()) *b.target = it->second;
        }
    }

    std::string get(const std::string& key, const std::string& fallback = "") const {
        const auto it = values_.find(key);
        if (it == values_.end() || it->second.empty()) return fallback;
        return it->second;
    }

    bool has(const std::string& key) const {
        const auto it = values_.find(key);
        return it != values_.end() && !it->second.empty();
    }

private:
    std::map<std::string, std::string> values_;
    std::vector<OptionBinding> bindings_;
};

Rational parse_rational_arg(const std::string& value, const std::string& what) {
    try {
        return Rational::parse(value);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be an exact rational like 2 or 7/2, got \"" +
                                    value + "\"");
    }
}

long parse_long_arg(const std::string& value, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be an integer, got \"" + value + "\"");
    }
}

std::uint64_t parse_seed_arg(const std::string& value) {
    try {
        if (value.empty() || value[0] == '-') throw std::invalid_argument(value);
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("seed must be a nonnegative integer, got \"" + value + "\"");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = s.find(sep, begin);
        parts.push_back(s.substr(begin, end == std::string::npos ? end : end - begin));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return parts;
}

std::vector<Rational> parse_scan_values(const Options& opts) {
    const bool has_range = opts.has("m_range");
    const bool has_list = opts.has("m_list");
    if (has_range == has_list) {
        throw std::invalid_argument("scan needs exactly one of --m-range lo:step:hi or --m-list");
    }
    std::vector<Rational> ms;
    if (has_range) {
        const std::vector<std::string> parts = split(opts.get("m_range"), ':');
        if (parts.size() != 3) throw std::invalid_argument("--m-range must look like lo:step:hi");
        const Rational lo = parse_rational_arg(parts[0], "range lower bound");
        const Rational step = parse_rational_arg(parts[1], "range step");
        const Rational hi = parse_rational_arg(parts[2], "range upper bound");
        if (!(step > Rational(0))) throw std::invalid_argument("range step must be positive");
        for (Rational m = lo; m <= hi; m += step) ms.push_back(m);
    } else {
        for (const std::string& part : split(opts.get("m_list"), ',')) {
            ms.push_back(parse_rational_arg(part, "scan value"));
        }
    }
    for (const Rational& m : ms) {
        if (!(m > Rational(0))) {
            throw std::invalid_argument("scan values must be positive, got " + m.str());
        }
    }
    return ms;
}

void write_output(const Options& opts, const std::string& text) {
    const std::string path = opts.get("output");
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int dispatch(const std::string& command, Options& opts) {
    if (opts.has("config")) {
        std::ifstream in(opts.get("config"));
        if (!in) throw std::invalid_argument("cannot open config file: " + opts.get("config"));
        opts.merge_config(kstab::parse_config_file(in));
    }
    const OutputFormat format = kstab::parse_output_format(opts.get("format", "table"));

    if (command == "example") {
        if (!opts.has("m") || !opts.has("c"))
            throw std::invalid_argument("example needs --m and --c");
        kstab::RuledSurfaceConfig cfg;
        cfg.m = parse_rational_arg(opts.get("m"), "m");
        cfg.c = parse_rational_arg(opts.get("c"), "c");
        cfg.genus = static_cast<int>(parse_long_arg(opts.get("g", "2"), "genus"));
        cfg.degree = static_cast<int>(parse_long_arg(opts.get("d", "1"), "degree"));
        const kstab::ExampleRun run = kstab::run_example(cfg);
        write_output(opts, kstab::render_example(run, format));
        if (run.closed_form_checked && !run.closed_form_match) {
            std::cerr << "error: pipeline disagrees with the closed forms\n";
            return 2;
        }
        return 0;
    }
    if (command == "scan") {
        const std::vector<Rational> ms = parse_scan_values(opts);
        const long bound = parse_long_arg(opts.get("denominator_bound", "50"),
                                          "denominator bound");
        if (bound < 1) throw std::invalid_argument("denominator bound must be positive");
        const kstab::ScanRun run = kstab::run_scan(ms, bound);
        write_output(opts, kstab::render_scan(run, format));
        return 0;
    }
    if (command == "critical") {
        const Rational precision = parse_rational_arg(opts.get("precision", "1/1000"),
                                                      "precision");
        if (!(precision > Rational(0)))
            throw std::invalid_argument("precision must be positive");
        const kstab::CriticalRun run = kstab::run_critical(precision);
        write_output(opts, kstab::render_critical(run, format));
        return 0;
    }
    if (command == "verify") {
        const long trials = parse_long_arg(opts.get("trials", "25"), "trials");
        if (trials < 1) throw std::invalid_argument("trials must be at least 1");
        const std::uint64_t seed = parse_seed_arg(opts.get("seed", "7"));
        const kstab::VerifyRun run = kstab::run_verify(static_cast<int>(trials), seed);
        write_output(opts, kstab::render_verify(run, format));
        return run.ok ? 0 : 3;
    }
    throw std::logic_error("unknown command");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation of Donaldson-Futaki and relative Futaki invariants\n"
                 "for ruled-surface test-configurations"};
    app.require_subcommand(1);

    Options opts;
    const auto add_common = [&](CLI::App* cmd) {
        opts.bind(cmd, "--format", "format", "output format: table, json, csv");
        opts.bind(cmd, "--output", "output", "write the report to this path instead of stdout");
        opts.bind(cmd, "--config", "config", "key = value config file; flags override it");
    };

    CLI::App* example =
        app.add_subcommand("example", "run the full pipeline at one parameter point");
    opts.bind(example, "--m", "m", "polarisation parameter, exact rational");
    opts.bind(example, "--c", "c", "blow-up parameter, exact rational with 0 < c < m");
    opts.bind(example, "--g", "g", "genus of the base curve (default 2)");
    opts.bind(example, "--d", "d", "degree of the twisting bundle (default 1)");
    add_common(example);

    CLI::App* scan = app.add_subcommand("scan", "stability verdict for a range of m");
    opts.bind(scan, "--m-range", "m_range", "lo:step:hi, exact rationals");
    opts.bind(scan, "--m-list", "m_list", "comma-separated exact rationals");
    opts.bind(scan, "--denominator-bound", "denominator_bound",
              "largest witness denominator tried (default 50)");
    add_common(scan);

    CLI::App* critical =
        app.add_subcommand("critical", "isolate the smallest destabilizable m");
    opts.bind(critical, "--precision", "precision",
              "width bound for the isolating interval (default 1/1000)");
    add_common(critical);

    CLI::App* verify = app.add_subcommand("verify", "run the seeded property suite");
    opts.bind(verify, "--trials", "trials", "number of random trials (default 25)");
    opts.bind(verify, "--seed", "seed", "PRNG seed (default 7)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
