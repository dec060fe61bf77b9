#include "kstab/report.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kstab {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "kstab/1";

ojson rational_json(const Rational& r) {
    return ojson{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void table_row(std::ostringstream& os, const std::string& key, const std::string& value) {
    os << "  " << key;
    if (key.size() < 26) os << std::string(26 - key.size(), ' ');
    os << " " << value << "\n";
}

std::string exact_with_approx(const Rational& r) {
    return r.str() + "  (~ " + r.decimal() + ")";
}

} // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format: \"" + name + "\" (table, json, csv)");
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::map<std::string, std::string> parse_config_file(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        out[key] = value;
    }
    return out;
}

ExampleRun run_example(const RuledSurfaceConfig& cfg) {
    cfg.validate();
    const WeightSystem ws = build_weight_system(cfg);
    const HilbertData hd = fit_hilbert_data(ws);
    const InvariantReport inv = analyze(hd, 0, {1});

    ExampleRun run;
    run.cfg = cfg;
    run.dim_poly = hd.dim;
    run.fitted.dim_k2 = hd.dim.coeff(2);
    run.fitted.dim_k1 = hd.dim.coeff(1);
    run.fitted.alpha_k3 = hd.weight[0].coeff(3);
    run.fitted.alpha_k2 = hd.weight[0].coeff(2);
    run.fitted.beta_k3 = hd.weight[1].coeff(3);
    run.fitted.beta_k2 = hd.weight[1].coeff(2);
    run.fitted.alpha_beta_k4 = hd.pair_trace[0][1].coeff(4);
    run.fitted.beta_beta_k4 = hd.pair_trace[1][1].coeff(4);
    run.futaki_alpha = inv.futaki[0];
    run.futaki_beta = inv.futaki[1];
    run.ip_alpha_beta = inv.gram[0][1];
    run.ip_beta_beta = inv.gram[1][1];
    run.chi_coeff = inv.chi[0];
    run.f_chi = inv.relative;

    if (cfg.genus == 2 && cfg.degree == 1) {
        run.closed_form_checked = true;
        const ExpansionLeads closed = closed_form_expansions(cfg);
        run.closed_f_chi = closed_form_relative_futaki(cfg);
        run.closed_form_match = run.fitted == closed && run.f_chi == *run.closed_f_chi;
    }

    const int s = run.f_chi.sign();
    run.verdict = s < 0   ? "strictly_destabilized"
                  : s > 0 ? "not_destabilizing"
                          : "boundary_destabilized";
    return run;
}

std::string render_example(const ExampleRun& run, OutputFormat format) {
    switch (format) {
        case OutputFormat::table: {
            std::ostringstream os;
            os << "ruled surface example  (genus " << run.cfg.genus << ", degree "
               << run.cfg.degree << ", m = " << run.cfg.m << ", c = " << run.cfg.c << ")\n\n";
            table_row(os, "dimension polynomial", run.dim_poly.str("k"));
            table_row(os, "dim leads (k^2, k)",
                      run.fitted.dim_k2.str() + ", " + run.fitted.dim_k1.str());
            table_row(os, "Tr(alpha) leads (k^3, k^2)",
                      run.fitted.alpha_k3.str() + ", " + run.fitted.alpha_k2.str());
            table_row(os, "Tr(beta) leads (k^3, k^2)",
                      run.fitted.beta_k3.str() + ", " + run.fitted.beta_k2.str());
            table_row(os, "Tr(alpha beta) lead (k^4)", run.fitted.alpha_beta_k4.str());
            table_row(os, "Tr(beta beta) lead (k^4)", run.fitted.beta_beta_k4.str());
            os << "\n";
            table_row(os, "F(alpha)", exact_with_approx(run.futaki_alpha));
            table_row(os, "F(beta)", exact_with_approx(run.futaki_beta));
            table_row(os, "<alpha, beta>", exact_with_approx(run.ip_alpha_beta));
            table_row(os, "<beta, beta>", exact_with_approx(run.ip_beta_beta));
            table_row(os, "chi coefficient", exact_with_approx(run.chi_coeff));
            table_row(os, "F_chi(alpha)", exact_with_approx(run.f_chi));
            os << "\n";
            table_row(os, "verdict", run.verdict);
            table_row(os, "closed-form check",
                      run.closed_form_checked ? (run.closed_form_match ? "match" : "MISMATCH")
                                              : "n/a (no closed form for this genus/degree)");
            return os.str();
        }
        case OutputFormat::json: {
            ojson j;
            j["schema"] = kSchema;
            j["command"] = "example";
            j["inputs"] = ojson{{"m", rational_json(run.cfg.m)},
                                {"c", rational_json(run.cfg.c)},
                                {"genus", run.cfg.genus},
                                {"degree", run.cfg.degree}};
            j["dimension_polynomial"] = run.dim_poly.str("k");
            j["fitted"] = ojson{{"dim_k2", rational_json(run.fitted.dim_k2)},
                                {"dim_k1", rational_json(run.fitted.dim_k1)},
                                {"alpha_k3", rational_json(run.fitted.alpha_k3)},
                                {"alpha_k2", rational_json(run.fitted.alpha_k2)},
                                {"beta_k3", rational_json(run.fitted.beta_k3)},
                                {"beta_k2", rational_json(run.fitted.beta_k2)},
                                {"alpha_beta_k4", rational_json(run.fitted.alpha_beta_k4)},
                                {"beta_beta_k4", rational_json(run.fitted.beta_beta_k4)}};
            j["invariants"] = ojson{{"F_alpha", rational_json(run.futaki_alpha)},
                                    {"F_beta", rational_json(run.futaki_beta)},
                                    {"ip_alpha_beta", rational_json(run.ip_alpha_beta)},
                                    {"ip_beta_beta", rational_json(run.ip_beta_beta)},
                                    {"chi", rational_json(run.chi_coeff)},
                                    {"F_chi", rational_json(run.f_chi)},
                                    {"F_chi_approx", run.f_chi.decimal()}};
            j["verdict"] = run.verdict;
            if (run.closed_form_checked) {
                j["closed_form_match"] = run.closed_form_match;
                j["closed_form_F_chi"] = rational_json(*run.closed_f_chi);
            } else {
                j["closed_form_match"] = nullptr;
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "m,c,genus,degree,F_alpha,F_beta,ip_alpha_beta,ip_beta_beta,chi,F_chi,"
                  "F_chi_approx,verdict,closed_form_match\n";
            const std::string match = run.closed_form_checked
                                          ? (run.closed_form_match ? "true" : "false")
                                          : "";
            const std::vector<std::string> fields{
                run.cfg.m.str(),          run.cfg.c.str(),
                std::to_string(run.cfg.genus), std::to_string(run.cfg.degree),
                run.futaki_alpha.str(),   run.futaki_beta.str(),
                run.ip_alpha_beta.str(),  run.ip_beta_beta.str(),
                run.chi_coeff.str(),      run.f_chi.str(),
                run.f_chi.decimal(),      run.verdict,
                match};
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i) os << ",";
                os << csv_escape(fields[i]);
            }
            os << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

ScanRun run_scan(std::vector<Rational> ms, std::int64_t denominator_bound) {
    std::sort(ms.begin(), ms.end());
    ScanRun run;
    run.denominator_bound = denominator_bound;
    run.rows.reserve(ms.size());
    for (const Rational& m : ms) {
        run.rows.push_back({m, find_destabilizer(m, denominator_bound)});
    }
    return run;
}

std::string render_scan(const ScanRun& run, OutputFormat format) {
    switch (format) {
        case OutputFormat::table: {
            std::ostringstream os;
            os << "stability scan  (denominator bound " << run.denominator_bound << ")\n\n";
            for (const ScanRow& row : run.rows) {
                std::string line = to_string(row.verdict.kind);
                if (row.verdict.witness_c) {
                    line += "  witness c = " + row.verdict.witness_c->str();
                    line += ", F_chi = " + row.verdict.value->str() + "  (~ " +
                            row.verdict.value->decimal() + ")";
                }
                table_row(os, "m = " + row.m.str(), line);
            }
            if (run.rows.empty()) os << "  (empty range)\n";
            return os.str();
        }
        case OutputFormat::json: {
            ojson j;
            j["schema"] = kSchema;
            j["command"] = "scan";
            j["denominator_bound"] = run.denominator_bound;
            j["rows"] = ojson::array();
            for (const ScanRow& row : run.rows) {
                ojson r;
                r["m"] = rational_json(row.m);
                r["verdict"] = to_string(row.verdict.kind);
                if (row.verdict.witness_c) {
                    r["witness_c"] = rational_json(*row.verdict.witness_c);
                    r["F_chi"] = rational_json(*row.verdict.value);
                    r["F_chi_approx"] = row.verdict.value->decimal();
                } else {
                    r["witness_c"] = nullptr;
                    r["F_chi"] = nullptr;
                    r["F_chi_approx"] = nullptr;
                }
                j["rows"].push_back(std::move(r));
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "m,verdict,witness_c,F_chi_num,F_chi_den,F_chi_approx\n";
            for (const ScanRow& row : run.rows) {
                std::vector<std::string> fields{row.m.str(), to_string(row.verdict.kind), "", "",
                                                "", ""};
                if (row.verdict.witness_c) {
                    fields[2] = row.verdict.witness_c->str();
                    fields[3] = row.verdict.value->num().get_str();
                    fields[4] = row.verdict.value->den().get_str();
                    fields[5] = row.verdict.value->decimal();
                }
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (i) os << ",";
                    os << csv_escape(fields[i]);
                }
                os << "\n";
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

CriticalRun run_critical(const Rational& precision) {
    CriticalRun run;
    run.precision = precision;
    run.discriminant = stability_discriminant();
    const auto interval = critical_parameter(precision);
    run.lo = interval.first;
    run.hi = interval.second;
    return run;
}

std::string render_critical(const CriticalRun& run, OutputFormat format) {
    switch (format) {
        case OutputFormat::table: {
            std::ostringstream os;
            os << "instability threshold\n\n";
            table_row(os, "discriminant", run.discriminant.str("m"));
            table_row(os, "precision", run.precision.str());
            table_row(os, "interval lower", exact_with_approx(run.lo));
            table_row(os, "interval upper", exact_with_approx(run.hi));
            table_row(os, "width", (run.hi - run.lo).str());
            return os.str();
        }
        case OutputFormat::json: {
            ojson j;
            j["schema"] = kSchema;
            j["command"] = "critical";
            j["precision"] = rational_json(run.precision);
            j["discriminant"] = run.discriminant.str("m");
            j["interval"] = ojson{{"lo", rational_json(run.lo)},
                                  {"hi", rational_json(run.hi)},
                                  {"lo_approx", run.lo.decimal()},
                                  {"hi_approx", run.hi.decimal()}};
            j["width"] = rational_json(run.hi - run.lo);
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "precision,lo,hi,lo_approx,hi_approx,width\n";
            const std::vector<std::string> fields{run.precision.str(), run.lo.str(),
                                                  run.hi.str(),        run.lo.decimal(),
                                                  run.hi.decimal(),    (run.hi - run.lo).str()};
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i) os << ",";
                os << csv_escape(fields[i]);
            }
            os << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

VerifyRun run_verify(int trials, std::uint64_t seed) {
    VerifyRun run;
    run.trials = trials;
    run.seed = seed;
    run.properties = run_property_suite(trials, seed);
    run.ok = all_passed(run.properties);
    return run;
}

std::string render_verify(const VerifyRun& run, OutputFormat format) {
    switch (format) {
        case OutputFormat::table: {
            std::ostringstream os;
            os << "property verification  (trials " << run.trials << ", seed " << run.seed
               << ")\n\n";
            for (const PropertyResult& p : run.properties) {
                std::string line = p.failures == 0 ? "pass" : "FAIL";
                line += "  " + std::to_string(p.trials - p.failures) + "/" +
                        std::to_string(p.trials);
                if (p.failures != 0) line += "  first failure: " + p.first_failure;
                table_row(os, p.name, line);
            }
            os << "\n";
            table_row(os, "result", run.ok ? "all properties hold" : "FAILURES");
            return os.str();
        }
        case OutputFormat::json: {
            ojson j;
            j["schema"] = kSchema;
            j["command"] = "verify";
            j["trials"] = run.trials;
            j["seed"] = run.seed;
            j["properties"] = ojson::array();
            for (const PropertyResult& p : run.properties) {
                ojson r{{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}};
                if (p.failures != 0) r["first_failure"] = p.first_failure;
                j["properties"].push_back(std::move(r));
            }
            j["ok"] = run.ok;
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "property,trials,failures\n";
            for (const PropertyResult& p : run.properties) {
                os << csv_escape(p.name) << "," << p.trials << "," << p.failures << "\n";
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace kstab
