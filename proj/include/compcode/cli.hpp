#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace compcode::cli {

enum class Command { info, validate, simulate, sweep, lemma1 };

/// Fully validated run description.  All output is a pure function of this
/// struct: no clocks, hostnames or thread counts leak into reports.
struct RunConfig {
    Command command = Command::info;
    std::string c1_spec;
    std::string c2_spec;
    std::vector<double> e_ab;  // singleton for simulate, grid for sweep
    std::vector<double> e_ae;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    double threshold = 0.11;
    bool sifting = false;
    std::string output;  // "csv" or "json"
    int threads = 0;     // 0 = OpenMP default
    unsigned lemma_nmax = 20;
    double lemma_tstep = 0.025;
};

/// Raised by parse_config when --help is requested; run() prints the text
/// and exits 0.
struct HelpRequested {
    std::string text;
};

/// Parses command line arguments plus an optional "key = value" config file
/// (--config <path>); explicit flags override file values.  Throws
/// UsageError for missing/contradictory fields and ParseError for malformed
/// values.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes a validated config, writing the report to out.  Returns the
/// process exit status: 0 on success (validate additionally requires zero
/// violations; lemma1 requires every row to hold).
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse + execute with error rendering.  Exit status 2
/// for usage/parse problems, 1 for runtime failures or failed checks,
/// 0 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compcode::cli
