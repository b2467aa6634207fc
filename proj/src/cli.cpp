#include "compcode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "compcode/entropy.hpp"
#include "compcode/errors.hpp"
#include "compcode/report_io.hpp"

namespace compcode::cli {

namespace {

struct RawValues {
    std::optional<std::string> codes, eab, eae, trials, seed, threshold, output, threads, nmax, tstep;
    bool sifting_flag = false;
    bool sifting_from_file = false;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// plain "key = value" lines, '#' starts a comment
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config file '" + path + "' line " + std::to_string(lineno) +
                             ": expected 'key = value'");
        values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return values;
}

double parse_probability(const std::string& text, const std::string& field) {
    double value = 0.0;
    try {
        std::size_t pos = 0;
        value = std::stod(text, &pos);
        if (pos != text.size()) throw ParseError("");
    } catch (...) {
        throw ParseError("malformed probability for '" + field + "': '" + text + "'");
    }
    if (!(value >= 0.0 && value <= 0.5))
        throw ParseError("probability for '" + field + "' must be in [0, 0.5], got " + text);
    return value;
}

std::vector<double> parse_probability_list(const std::string& text, const std::string& field) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        values.push_back(parse_probability(item, field));
    }
    if (values.empty()) throw ParseError("empty value list for '" + field + "'");
    return values;
}

std::uint64_t parse_u64(const std::string& text, const std::string& field) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed integer for '" + field + "': '" + text + "'");
    try {
        return std::stoull(text);
    } catch (...) {
        throw ParseError("integer for '" + field + "' out of range: '" + text + "'");
    }
}

bool parse_bool(const std::string& text, const std::string& field) {
    if (text == "true" || text == "1" || text == "on" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "off" || text == "no") return false;
    throw ParseError("malformed boolean for '" + field + "': '" + text + "'");
}

// "--codes c1=<family>,c2=<family>"; family specs may themselves contain
// commas (rm:1,3), so split on the c1=/c2= markers rather than on commas
void parse_codes(const std::string& text, std::string& c1, std::string& c2) {
    const auto p1 = text.find("c1=");
    const auto p2 = text.find("c2=");
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw ParseError("codes must be given as 'c1=<family>,c2=<family>', got '" + text + "'");
    const auto value = [&](std::size_t start, std::size_t next_marker) {
        std::size_t end = text.size();
        if (next_marker != std::string::npos && next_marker > start) end = next_marker;
        std::string v = text.substr(start + 3, end - start - 3);
        while (!v.empty() && (v.back() == ',' || v.back() == ' ' || v.back() == ';')) v.pop_back();
        return trim(v);
    };
    c1 = value(p1, p2 > p1 ? p2 : std::string::npos);
    c2 = value(p2, p1 > p2 ? p1 : std::string::npos);
    if (c1.empty() || c2.empty())
        throw ParseError("codes must name both c1 and c2, got '" + text + "'");
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"composite-coding key distillation toolkit"};
    app.name("compcode");

    std::string command_name;
    app.add_option("command", command_name, "one of: info, validate, simulate, sweep, lemma1");

    RawValues raw;
    std::string codes, eab, eae, trials, seed, threshold, output, threads, nmax, tstep, config_path;
    auto* o_codes = app.add_option("--codes", codes, "composite pair, e.g. 'c1=hamming:3,c2=simplex:3'");
    auto* o_eab = app.add_option("--eab", eab, "Alice-Bob crossover probability (comma list for sweep)");
    auto* o_eae = app.add_option("--eae", eae, "Alice-Eve crossover probability (comma list for sweep)");
    auto* o_trials = app.add_option("--trials", trials, "Monte Carlo trials per grid point (default 10000)");
    auto* o_seed = app.add_option("--seed", seed, "64-bit experiment seed (default 1)");
    auto* o_threshold = app.add_option("--threshold", threshold, "sifting abort threshold (default 0.11)");
    auto* o_sifting = app.add_flag("--sifting", "enable the transmission/sifting prologue");
    auto* o_output = app.add_option("--output", output, "csv or json");
    auto* o_threads = app.add_option("--threads", threads, "worker count (0 = all cores)");
    auto* o_nmax = app.add_option("--nmax", nmax, "lemma1: largest block length (default 20)");
    auto* o_tstep = app.add_option("--tstep", tstep, "lemma1: grid step for t (default 0.025)");
    app.add_option("--config", config_path, "config file with 'key = value' lines; flags override");

    std::vector<const char*> argv;
    argv.push_back("compcode");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (o_codes->count()) raw.codes = codes;
    if (o_eab->count()) raw.eab = eab;
    if (o_eae->count()) raw.eae = eae;
    if (o_trials->count()) raw.trials = trials;
    if (o_seed->count()) raw.seed = seed;
    if (o_threshold->count()) raw.threshold = threshold;
    if (o_output->count()) raw.output = output;
    if (o_threads->count()) raw.threads = threads;
    if (o_nmax->count()) raw.nmax = nmax;
    if (o_tstep->count()) raw.tstep = tstep;
    raw.sifting_flag = o_sifting->count() > 0;

    if (!config_path.empty()) {
        const auto file = load_config_file(config_path);
        const auto fill = [&](std::optional<std::string>& slot, const char* key) {
            if (!slot && file.count(key)) slot = file.at(key);
        };
        fill(raw.codes, "codes");
        fill(raw.eab, "eab");
        fill(raw.eae, "eae");
        fill(raw.trials, "trials");
        fill(raw.seed, "seed");
        fill(raw.threshold, "threshold");
        fill(raw.output, "output");
        fill(raw.threads, "threads");
        fill(raw.nmax, "nmax");
        fill(raw.tstep, "tstep");
        if (!raw.sifting_flag && file.count("sifting"))
            raw.sifting_from_file = parse_bool(file.at("sifting"), "sifting");
    }

    RunConfig cfg;
    if (command_name == "info")
        cfg.command = Command::info;
    else if (command_name == "validate")
        cfg.command = Command::validate;
    else if (command_name == "simulate")
        cfg.command = Command::simulate;
    else if (command_name == "sweep")
        cfg.command = Command::sweep;
    else if (command_name == "lemma1")
        cfg.command = Command::lemma1;
    else if (command_name.empty())
        throw UsageError("missing command; expected one of: info, validate, simulate, sweep, lemma1");
    else
        throw UsageError("unknown command '" + command_name +
                         "'; expected one of: info, validate, simulate, sweep, lemma1");

    const bool needs_codes = cfg.command != Command::lemma1;
    if (needs_codes) {
        if (!raw.codes) throw UsageError("missing required field 'codes'");
        parse_codes(*raw.codes, cfg.c1_spec, cfg.c2_spec);
    }

    const bool needs_channel = cfg.command == Command::simulate || cfg.command == Command::sweep;
    if (needs_channel) {
        if (!raw.eab) throw UsageError("missing required field 'eab'");
        if (!raw.eae) throw UsageError("missing required field 'eae'");
        cfg.e_ab = parse_probability_list(*raw.eab, "eab");
        cfg.e_ae = parse_probability_list(*raw.eae, "eae");
        if (cfg.command == Command::simulate && (cfg.e_ab.size() != 1 || cfg.e_ae.size() != 1))
            throw UsageError("simulate expects single values for eab/eae; use sweep for grids");
    }

    if (raw.trials) cfg.trials = parse_u64(*raw.trials, "trials");
    if (cfg.trials < 1) throw UsageError("trials must be >= 1");
    if (raw.seed) cfg.seed = parse_u64(*raw.seed, "seed");
    if (raw.threshold) {
        cfg.threshold = parse_probability(*raw.threshold, "threshold");
        if (!(cfg.threshold > 0.0 && cfg.threshold < 0.5))
            throw ParseError("threshold must be strictly inside (0, 0.5)");
    }
    cfg.sifting = raw.sifting_flag || raw.sifting_from_file;
    if (raw.threads) cfg.threads = static_cast<int>(parse_u64(*raw.threads, "threads"));
    if (raw.nmax) {
        cfg.lemma_nmax = static_cast<unsigned>(parse_u64(*raw.nmax, "nmax"));
        if (cfg.lemma_nmax < 1 || cfg.lemma_nmax > 64)
            throw ParseError("nmax must be in [1, 64]");
    }
    if (raw.tstep) {
        double v = 0.0;
        try {
            std::size_t pos = 0;
            v = std::stod(*raw.tstep, &pos);
            if (pos != raw.tstep->size()) throw ParseError("");
        } catch (...) {
            throw ParseError("malformed tstep: '" + *raw.tstep + "'");
        }
        if (!(v > 0.0 && v <= 0.5)) throw ParseError("tstep must be in (0, 0.5]");
        cfg.lemma_tstep = v;
    }

    if (raw.output) {
        if (*raw.output != "csv" && *raw.output != "json")
            throw ParseError("output must be 'csv' or 'json', got '" + *raw.output + "'");
        cfg.output = *raw.output;
    } else {
        cfg.output = (cfg.command == Command::sweep || cfg.command == Command::lemma1) ? "csv" : "json";
    }
    return cfg;
}

namespace {

int execute_lemma1(const RunConfig& cfg, std::ostream& out) {
    struct Row {
        unsigned n;
        double t;
        Lemma1Result res;
    };
    std::vector<Row> rows;
    bool all_hold = true;
    for (unsigned n = 1; n <= cfg.lemma_nmax; ++n) {
        for (int i = 0;; ++i) {
            const double t = static_cast<double>(i) * cfg.lemma_tstep;
            if (t > 0.5 + 1e-12) break;
            const Lemma1Result res = lemma1_check(n, std::min(t, 0.5));
            all_hold = all_hold && res.holds;
            rows.push_back({n, std::min(t, 0.5), res});
        }
    }
    if (cfg.output == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"t", r.t}, {"lhs", r.res.lhs}, {"rhs", r.res.rhs}, {"holds", r.res.holds}});
        out << nlohmann::json{{"all_hold", all_hold}, {"rows", arr}}.dump(2) << '\n';
    } else {
        out << "n,t,lhs,rhs,holds\n";
        for (const auto& r : rows)
            out << r.n << ',' << csv_double(r.t) << ',' << r.res.lhs << ',' << csv_double(r.res.rhs) << ','
                << (r.res.holds ? "true" : "false") << '\n';
    }
    return all_hold ? 0 : 1;
}

int execute_validate(const CompositeCode& cc, const RunConfig& cfg, std::ostream& out) {
    const VerificationReport disjoint = cc.verify_coset_disjointness();
    const VerificationReport distinct = cc.verify_distinct_indices();
    const bool ok = disjoint.ok() && distinct.ok();
    if (cfg.output == "json") {
        out << nlohmann::json{{"coset_disjointness", verification_to_json(disjoint)},
                              {"ball_distinct_indices", verification_to_json(distinct)},
                              {"ok", ok}}
                   .dump(2)
            << '\n';
    } else {
        out << "check,checked,violations\n";
        out << "coset_disjointness," << disjoint.checked << ',' << disjoint.violations.size() << '\n';
        out << "ball_distinct_indices," << distinct.checked << ',' << distinct.violations.size() << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cfg.command == Command::lemma1) return execute_lemma1(cfg, out);

    const LinearCode c1 = LinearCode::make(cfg.c1_spec);
    const LinearCode c2 = LinearCode::make(cfg.c2_spec);
    const CompositeCode cc(c1, c2);

    switch (cfg.command) {
        case Command::info: {
            if (cfg.output == "csv") {
                out << "n,k1,k2,d1,d2,t1,t2,key_len\n";
                out << cc.n() << ',' << cc.c1().k() << ',' << cc.c2().k() << ',' << cc.c1().min_distance()
                    << ',' << cc.c2().min_distance() << ',' << cc.c1().t() << ',' << cc.c2().t() << ','
                    << cc.key_len() << '\n';
            } else {
                out << code_info_json(cc).dump(2) << '\n';
            }
            return 0;
        }
        case Command::validate:
            return execute_validate(cc, cfg, out);
        case Command::simulate: {
            const ChannelParams params{cfg.e_ab.front(), cfg.e_ae.front()};
            ProtocolOptions options;
            options.sifting = cfg.sifting;
            options.sifting_threshold = cfg.threshold;
            const ExperimentReport report =
                run_experiment(cc, params, cfg.trials, {cfg.seed, 0}, options, cfg.threads);
            if (cfg.output == "csv")
                out << experiment_csv_header() << '\n' << experiment_csv_row(report) << '\n';
            else
                out << experiment_to_json(report).dump(2) << '\n';
            return 0;
        }
        case Command::sweep: {
            ProtocolOptions options;
            options.sifting = cfg.sifting;
            options.sifting_threshold = cfg.threshold;
            std::vector<ExperimentReport> reports;
            std::uint64_t point = 0;
            for (double ab : cfg.e_ab) {
                for (double ae : cfg.e_ae) {
                    // each grid point runs on its own stream block
                    reports.push_back(run_experiment(cc, {ab, ae}, cfg.trials,
                                                     {cfg.seed, point << 32}, options, cfg.threads));
                    ++point;
                }
            }
            if (cfg.output == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports) arr.push_back(experiment_to_json(r));
                out << arr.dump(2) << '\n';
            } else {
                out << experiment_csv_header() << '\n';
                for (const auto& r : reports) out << experiment_csv_row(r) << '\n';
            }
            return 0;
        }
        default:
            throw UsageError("unhandled command");
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = parse_config(args);
        return execute(cfg, out, err);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace compcode::cli
