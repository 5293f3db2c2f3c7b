#ifndef SPINOR_CLI_HPP
#define SPINOR_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinor {

// Guardrails: exceeding any of these is a usage error (exit 2).
inline constexpr uint64_t kMaxSieveCutoff = 100000000; // 10^8
inline constexpr int kMaxSeriesOrder = 200;
inline constexpr uint64_t kMaxPrimeBound = 10000000; // 10^7

enum class Command { verify, eigen, moments, signs, bfree, constants };
enum class OutputFormat { csv, json };

struct SynthParams {
    uint64_t seed = 1;
    uint64_t prime_bound = 100;
    double zero_exponent = 0.0;
};

// One resolved run. Exactly one form source (file path or synth parameters)
// may be set; commands that need no form (constants) accept neither.
struct RunConfig {
    Command command = Command::constants;
    std::optional<std::string> form_path;
    std::optional<SynthParams> synth;

    uint64_t x = 0;                  // sieve/count cutoff
    int order = 40;                  // series truncation order
    std::vector<double> grid;        // moments: exponents k (x = p^k); signs: x values
    uint64_t prime = 2;              // moments / eigen local table
    bool local_table = false;        // eigen: per-prime table instead of global
    std::optional<std::pair<uint64_t, uint64_t>> window;      // bfree: (x, y)
    std::optional<std::pair<uint64_t, uint64_t>> progression; // bfree: (a, q)
    bool bset_squares = false;       // bfree: prime squares instead of form-derived
    OutputFormat format = OutputFormat::csv;
    std::string out_path;            // empty = stdout
    uint64_t sample_cap = 200;       // verify: max locals certified
    bool corrupt_q2 = false;         // verify: fault injection (debug)
};

struct RunResult {
    int exit_code; // 0 success, 1 computational failure, 2 usage error
    std::string report;
    std::string error; // diagnostic for nonzero exit
};

// Validates the config against the guardrails and executes the command.
// Deterministic: identical configs produce byte-identical reports.
RunResult run_command(const RunConfig& config);

} // namespace spinor

#endif
