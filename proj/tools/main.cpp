#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinor/cli.hpp"

namespace {

using spinor::RunConfig;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    return parts;
}

bool parse_synth(const std::string& s, spinor::SynthParams& out) {
    const auto parts = split_commas(s);
    if (parts.size() != 3) return false;
    try {
        out.seed = std::stoull(parts[0]);
        out.prime_bound = std::stoull(parts[1]);
        out.zero_exponent = std::stod(parts[2]);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_pair(const std::string& s, std::pair<uint64_t, uint64_t>& out) {
    const auto parts = split_commas(s);
    if (parts.size() != 2) return false;
    try {
        out.first = std::stoull(parts[0]);
        out.second = std::stoull(parts[1]);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinorlab: local spectral data of genus-2 Siegel eigenforms"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string synth_arg, window_arg, progression_arg, grid_arg, format_arg = "csv";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--form", cfg.form_path, "form file path");
        sub->add_option("--synth", synth_arg, "synthetic form: seed,prime_bound,delta");
        sub->add_option("--out", cfg.out_path, "write the report to this path");
        sub->add_option("--format", format_arg, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "run the identity certificates");
    add_common(verify);
    verify->add_option("--order", cfg.order, "series truncation order");
    verify->add_option("--sample", cfg.sample_cap, "max locals certified");
    verify->add_flag("--corrupt-q2", cfg.corrupt_q2,
                     "debug: inject a q2 fault to exercise the failure path");

    CLI::App* eigen = app.add_subcommand("eigen", "tabulate eigenvalues");
    add_common(eigen);
    eigen->add_option("--x", cfg.x, "tabulate lambda(n), a(n) for n <= x");
    auto* eigen_prime = eigen->add_option("--prime", cfg.prime,
                                          "tabulate the local table at this prime");
    eigen->add_option("--order", cfg.order, "local table depth");

    CLI::App* moments = app.add_subcommand("moments", "weighted moment experiments");
    add_common(moments);
    moments->add_option("--prime", cfg.prime, "prime of the local being probed");
    moments->add_option("--grid", grid_arg, "comma list of exponents k (x = p^k)");

    CLI::App* signs = app.add_subcommand("signs", "sign counting experiments");
    add_common(signs);
    signs->add_option("--x", cfg.x, "count signs of lambda(n) for n <= x");
    signs->add_option("--grid", grid_arg, "comma list of cutoffs x");

    CLI::App* bfree = app.add_subcommand("bfree", "exclusion-sieve experiments");
    add_common(bfree);
    bfree->add_option("--window", window_arg, "window x,y meaning (x, x+y]");
    bfree->add_option("--progression", progression_arg, "residue class a,q");
    bfree->add_flag("--squares", cfg.bset_squares,
                    "sieve with prime squares instead of the form-derived set");

    CLI::App* constants = app.add_subcommand("constants", "print phi0 and K");
    add_common(constants);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) cfg.command = spinor::Command::verify;
    else if (eigen->parsed()) cfg.command = spinor::Command::eigen;
    else if (moments->parsed()) cfg.command = spinor::Command::moments;
    else if (signs->parsed()) cfg.command = spinor::Command::signs;
    else if (bfree->parsed()) cfg.command = spinor::Command::bfree;
    else cfg.command = spinor::Command::constants;

    cfg.local_table = eigen_prime->count() > 0;
    cfg.format = format_arg == "json" ? spinor::OutputFormat::json
                                      : spinor::OutputFormat::csv;
    if (!synth_arg.empty()) {
        spinor::SynthParams sp;
        if (!parse_synth(synth_arg, sp)) {
            std::cerr << "bad --synth argument, expected seed,prime_bound,delta\n";
            return 2;
        }
        cfg.synth = sp;
    }
    if (!window_arg.empty()) {
        std::pair<uint64_t, uint64_t> w;
        if (!parse_pair(window_arg, w)) {
            std::cerr << "bad --window argument, expected x,y\n";
            return 2;
        }
        cfg.window = w;
    }
    if (!progression_arg.empty()) {
        std::pair<uint64_t, uint64_t> pr;
        if (!parse_pair(progression_arg, pr)) {
            std::cerr << "bad --progression argument, expected a,q\n";
            return 2;
        }
        cfg.progression = pr;
    }
    if (!grid_arg.empty()) {
        for (const std::string& tok : split_commas(grid_arg)) {
            try {
                cfg.grid.push_back(std::stod(tok));
            } catch (const std::exception&) {
                std::cerr << "bad --grid entry '" << tok << "'\n";
                return 2;
            }
        }
    }

    const spinor::RunResult res = spinor::run_command(cfg);
    if (!res.error.empty()) std::cerr << res.error << "\n";
    if (res.exit_code == 0 || !res.report.empty()) {
        if (cfg.out_path.empty()) {
            std::cout << res.report;
        } else {
            std::ofstream out(cfg.out_path);
            out << res.report;
            if (!out) {
                std::cerr << "cannot write " << cfg.out_path << "\n";
                return 1;
            }
        }
    }
    return res.exit_code;
}
