#include "spinor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "spinor/bfree.hpp"
#include "spinor/closedforms.hpp"
#include "spinor/errors.hpp"
#include "spinor/hecke.hpp"
#include "spinor/ingest.hpp"
#include "spinor/moments.hpp"
#include "spinor/report.hpp"
#include "spinor/satake.hpp"
#include "spinor/signs.hpp"

namespace spinor {

namespace {

RunResult usage_error(std::string msg) { return RunResult{2, "", std::move(msg)}; }

std::string render(const Table& t, OutputFormat f) {
    return f == OutputFormat::csv ? to_csv(t) : to_json(t);
}

EigenForm resolve_form(const RunConfig& cfg) {
    if (cfg.form_path) return load_form(*cfg.form_path);
    const SynthParams& s = *cfg.synth;
    return synth_form(s.seed, s.prime_bound, s.zero_exponent);
}

// Deterministic sample of at most cap locals, evenly strided.
std::vector<SatakeLocal> sample_locals(const EigenForm& form, uint64_t cap) {
    const auto all = form.locals();
    std::vector<SatakeLocal> out;
    if (cap == 0 || all.size() <= cap) {
        out.assign(all.begin(), all.end());
        return out;
    }
    const size_t stride = (all.size() + cap - 1) / cap;
    for (size_t i = 0; i < all.size(); i += stride) out.push_back(all[i]);
    return out;
}

struct Certificate {
    std::string name;
    uint64_t locals_used = 0;
    double max_error = 0.0;
    double tolerance;
    bool pass() const { return max_error <= tolerance; }
};

Table certificate_table(const std::vector<Certificate>& certs) {
    Table t;
    t.columns = {"identity", "locals", "max_error", "tolerance", "status"};
    for (const Certificate& c : certs) {
        t.rows.push_back({str_cell(c.name), int_cell(c.locals_used),
                          num_cell(c.max_error), num_cell(c.tolerance),
                          str_cell(c.pass() ? "pass" : "fail")});
    }
    return t;
}

RunResult cmd_verify(const RunConfig& cfg) {
    const EigenForm form = resolve_form(cfg);
    const auto locals = sample_locals(form, cfg.sample_cap);
    const int N = cfg.order;

    Certificate prop1{"prop1", 0, 0.0, 1e-8};
    Certificate prop2{"prop2", 0, 0.0, 1e-8};
    Certificate pf_a2{"pf_a_squared", 0, 0.0, 1e-8};
    Certificate pf_cross{"pf_cross", 0, 0.0, 1e-8};
    Certificate pf_tail2{"pf_tail_squared", 0, 0.0, 1e-8};
    Certificate decomp{"decomposition", 0, 0.0, 1e-9};
    Certificate residue{"residue_dual_form", 0, 0.0, 1e-10};

    using cx = std::complex<double>;
    for (const SatakeLocal& loc : locals) {
        const auto lams = lambda_coeffs(loc, N);
        const auto as = a_coeffs(loc, N);

        TruncSeries p1 = prop1_series(loc, N);
        if (cfg.corrupt_q2) {
            // Fault injection: rebuild the closed form with q2 off by 0.5.
            QCoeffs qc = q_coeffs(loc);
            qc.q[2] += 0.5;
            std::vector<double> poly(qc.q.begin(), qc.q.end());
            poly.push_back(0.0);
            for (size_t i = poly.size() - 1; i >= 1; --i) poly[i] += poly[i - 1];
            TruncSeries s = TruncSeries::polynomial(poly, N);
            for (const cx& eta : spectral_set(loc).etas)
                s = mul(s, TruncSeries::geom(eta, N));
            p1 = s;
        }
        for (int nu = 0; nu <= N; ++nu) {
            const double lam2 = lams[static_cast<size_t>(nu)] * lams[static_cast<size_t>(nu)];
            prop1.max_error = std::max(prop1.max_error, std::abs(p1.coeff(nu) - lam2));
        }
        ++prop1.locals_used;

        const TruncSeries p2 = prop2_series(loc, N);
        for (int nu = 0; nu <= N; ++nu) {
            const double a2 = as[static_cast<size_t>(nu)] * as[static_cast<size_t>(nu)];
            prop2.max_error = std::max(prop2.max_error, std::abs(p2.coeff(nu) - a2));
        }
        ++prop2.locals_used;

        decomp.max_error = std::max(decomp.max_error, decomposition_check(loc, N));
        ++decomp.locals_used;

        const auto [m9, m5] = distinctness_margin(loc);
        if (m5 > kDegeneracyGate) {
            const cx a = loc.a(), b = loc.b();
            const cx D = a * b / ((a - b) * (a * b - cx{1.0, 0.0}));
            const cx D2 = D * D;
            const TruncSeries fa = partial_fraction_series(loc, PartialFractionKind::ASquared, N);
            const TruncSeries fb = partial_fraction_series(loc, PartialFractionKind::Cross, N);
            const TruncSeries fc = partial_fraction_series(loc, PartialFractionKind::TailSquared, N);
            for (int nu = 0; nu <= N; ++nu) {
                const double A = A_direct(loc, nu);
                const double S = S_direct(loc, nu);
                pf_a2.max_error = std::max(pf_a2.max_error, std::abs(fa.coeff(nu) * D2 - A * A));
                pf_cross.max_error =
                    std::max(pf_cross.max_error, std::abs(fb.coeff(nu) * D2 - A * S));
                pf_tail2.max_error =
                    std::max(pf_tail2.max_error, std::abs(fc.coeff(nu) * D2 - S * S));
            }
            ++pf_a2.locals_used;
            ++pf_cross.locals_used;
            ++pf_tail2.locals_used;
        }
        if (m9 > kDegeneracyGate) {
            const auto [closed, product] = residue_forms(loc);
            residue.max_error = std::max(residue.max_error, std::abs(closed - product));
            if (!(closed > 0.0)) residue.max_error = 1.0; // positivity failure
            ++residue.locals_used;
        }
    }

    const std::vector<Certificate> certs{prop1,    prop2,  pf_a2, pf_cross,
                                         pf_tail2, decomp, residue};
    RunResult res{0, render(certificate_table(certs), cfg.format), ""};
    for (const Certificate& c : certs) {
        if (!c.pass()) {
            res.exit_code = 1;
            res.error = "certificate failed: " + c.name;
            break;
        }
    }
    return res;
}

RunResult cmd_eigen(const RunConfig& cfg) {
    const EigenForm form = resolve_form(cfg);
    Table t;
    if (cfg.local_table) {
        const LocalTable lt = local_table(form.local(cfg.prime), cfg.order);
        t.columns = {"p", "nu", "a", "lambda"};
        for (int nu = 0; nu <= lt.N; ++nu) {
            t.rows.push_back({int_cell(cfg.prime), int_cell(static_cast<uint64_t>(nu)),
                              num_cell(lt.a_vals[static_cast<size_t>(nu)]),
                              num_cell(lt.lambda_vals[static_cast<size_t>(nu)])});
        }
    } else {
        const uint64_t x = cfg.x == 0 ? 100 : cfg.x;
        const GlobalTable table = global_table(form, x);
        t.columns = {"n", "lambda", "a"};
        for (uint64_t n = 1; n <= x; ++n) {
            t.rows.push_back(
                {int_cell(n), num_cell(table.lambda(n)), num_cell(a_at(form, n))});
        }
    }
    return RunResult{0, render(t, cfg.format), ""};
}

RunResult cmd_moments(const RunConfig& cfg) {
    const EigenForm form = resolve_form(cfg);
    const SatakeLocal loc = form.local(cfg.prime);
    std::vector<double> exponents = cfg.grid;
    if (exponents.empty())
        exponents = {10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
    std::vector<double> grid;
    for (double k : exponents)
        grid.push_back(std::pow(static_cast<double>(cfg.prime), k));
    const MomentReport rep = moment_report(loc, grid);
    Table t;
    t.columns = {"p", "x", "second_lhs", "second_pred", "ratio", "first_lhs",
                 "first_over_logx"};
    for (const MomentRow& r : rep.rows) {
        t.rows.push_back({int_cell(rep.p), num_cell(r.x), num_cell(r.second_lhs),
                          num_cell(r.second_pred), num_cell(r.ratio),
                          num_cell(r.first_lhs), num_cell(r.first_over_logx)});
    }
    return RunResult{0, render(t, cfg.format), ""};
}

RunResult cmd_signs(const RunConfig& cfg) {
    const EigenForm form = resolve_form(cfg);
    std::vector<uint64_t> xs;
    if (!cfg.grid.empty()) {
        for (double g : cfg.grid) xs.push_back(static_cast<uint64_t>(g));
    } else {
        xs.push_back(cfg.x == 0 ? 10000 : cfg.x);
    }
    std::sort(xs.begin(), xs.end());
    const uint64_t xmax = xs.back();
    const GlobalTable table = global_table(form, xmax);
    const uint64_t rho_bound = std::min<uint64_t>(form.prime_bound(), 100000);
    const DensityEstimate rho = rho_F(form, rho_bound, 40);
    Table t;
    t.columns = {"x", "n_star", "n_plus", "n_minus", "rho_estimate"};
    for (uint64_t x : xs) {
        const SignCounts c = sign_counts(table, x);
        t.rows.push_back({int_cell(c.x), int_cell(c.n_star), int_cell(c.n_plus),
                          int_cell(c.n_minus), num_cell(rho.rho)});
    }
    return RunResult{0, render(t, cfg.format), ""};
}

RunResult cmd_bfree(const RunConfig& cfg) {
    const auto [x, y] = *cfg.window;
    BSet B = [&] {
        if (cfg.bset_squares) return prime_squares_bset(x + y);
        const EigenForm form = resolve_form(cfg);
        return build_BF(form, x + y);
    }();
    uint64_t q = 1, a = 1;
    uint64_t count;
    if (cfg.progression) {
        a = cfg.progression->first;
        q = cfg.progression->second;
        count = sieve_progression(B, x, y, a, q);
    } else {
        count = sieve_interval(B, x, y).count;
    }
    Table t;
    t.columns = {"x", "y", "q", "a", "count", "count_over_y"};
    t.rows.push_back({int_cell(x), int_cell(y), int_cell(q), int_cell(a),
                      int_cell(count),
                      num_cell(static_cast<double>(count) / static_cast<double>(y))});
    return RunResult{0, render(t, cfg.format), ""};
}

RunResult cmd_constants(const RunConfig& cfg) {
    const auto [phi0, K] = K_constant();
    Table t;
    t.columns = {"phi0", "K"};
    t.rows.push_back({num_cell(phi0), num_cell(K)});
    return RunResult{0, render(t, cfg.format), ""};
}

// Guardrail and shape validation; returns an error message or empty.
std::string validate(const RunConfig& cfg) {
    const bool needs_form = cfg.command == Command::verify ||
                            cfg.command == Command::eigen ||
                            cfg.command == Command::moments ||
                            cfg.command == Command::signs ||
                            (cfg.command == Command::bfree && !cfg.bset_squares);
    const int sources = (cfg.form_path ? 1 : 0) + (cfg.synth ? 1 : 0);
    if (sources > 1) return "specify at most one of --form and --synth";
    if (needs_form && sources == 0)
        return "this command needs a form: pass --form <path> or --synth seed,bound,delta";
    if (cfg.synth) {
        if (cfg.synth->prime_bound > kMaxPrimeBound)
            return "synth prime bound exceeds the 10^7 guardrail";
        if (cfg.synth->prime_bound < 2) return "synth prime bound must be >= 2";
        if (!(cfg.synth->zero_exponent >= 0.0 && cfg.synth->zero_exponent < 1.0))
            return "synth zero exponent must lie in [0, 1)";
    }
    if (cfg.order < 0 || cfg.order > kMaxSeriesOrder)
        return "series order must lie in [0, 200]";
    if (cfg.x > kMaxSieveCutoff) return "x exceeds the 10^8 guardrail";
    if (cfg.command == Command::signs) {
        for (double g : cfg.grid)
            if (!(g >= 1.0 && g <= static_cast<double>(kMaxSieveCutoff)))
                return "signs grid values must lie in [1, 10^8]";
    }
    if (cfg.command == Command::moments) {
        for (double g : cfg.grid)
            if (!(g >= 1.0 && g <= 64.0)) return "moment grid exponents must lie in [1, 64]";
        if (cfg.prime < 2) return "prime must be >= 2";
    }
    if (cfg.command == Command::bfree) {
        if (!cfg.window) return "bfree needs --window x,y";
        if (cfg.window->second < 1 || cfg.window->second > kMaxSieveCutoff)
            return "window length must lie in [1, 10^8]";
        if (cfg.progression) {
            const auto [a, q] = *cfg.progression;
            if (q < 1 || a < 1 || a > q) return "progression needs 1 <= a <= q";
        }
    }
    return "";
}

} // namespace

RunResult run_command(const RunConfig& cfg) {
    const std::string problem = validate(cfg);
    if (!problem.empty()) return usage_error(problem);
    try {
        switch (cfg.command) {
        case Command::verify: return cmd_verify(cfg);
        case Command::eigen: return cmd_eigen(cfg);
        case Command::moments: return cmd_moments(cfg);
        case Command::signs: return cmd_signs(cfg);
        case Command::bfree: return cmd_bfree(cfg);
        case Command::constants: return cmd_constants(cfg);
        }
    } catch (const Error& e) {
        return RunResult{1, "", e.what()};
    }
    return usage_error("unknown command");
}

} // namespace spinor
