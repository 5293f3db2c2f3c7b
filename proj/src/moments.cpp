#include "spinor/moments.hpp"

#include <cmath>

#include "spinor/closedforms.hpp"
#include "spinor/errors.hpp"
#include "spinor/hecke.hpp"

namespace spinor {

namespace {

// Largest nu with p^nu <= x.
int nu_max_below(uint64_t p, double x) {
    int nu = 0;
    long double pk = 1.0L;
    const long double bound = static_cast<long double>(x) * (1.0L + 1e-15L);
    while (pk * static_cast<long double>(p) <= bound) {
        pk *= static_cast<long double>(p);
        ++nu;
    }
    return nu;
}

} // namespace

double second_moment(const SatakeLocal& loc, double x) {
    if (!(x >= 2.0)) throw OutOfRange("x must be >= 2");
    const int numax = nu_max_below(loc.p, x);
    const auto lams = lambda_coeffs(loc, numax);
    const double logx = std::log(x);
    const double logp = std::log(static_cast<double>(loc.p));
    double sum = 0.0;
    for (int nu = 0; nu <= numax; ++nu) {
        const double lam = lams[static_cast<size_t>(nu)];
        sum += lam * lam * (logx - nu * logp);
    }
    return sum;
}

double first_moment(const SatakeLocal& loc, double x) {
    if (!(x >= 2.0)) throw OutOfRange("x must be >= 2");
    const auto [m9, m5] = distinctness_margin(loc);
    (void)m9;
    if (m5 <= kDegeneracyGate)
        throw Degenerate("five-element spectral margin below gate");
    const int numax = nu_max_below(loc.p, x);
    const auto lams = lambda_coeffs(loc, numax);
    const double logx = std::log(x);
    const double logp = std::log(static_cast<double>(loc.p));
    double sum = 0.0;
    for (int nu = 0; nu <= numax; ++nu)
        sum += lams[static_cast<size_t>(nu)] * (logx - nu * logp);
    return sum;
}

MomentReport moment_report(const SatakeLocal& loc, std::span<const double> grid) {
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 2.0)) throw OutOfRange("grid values must be >= 2");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw OutOfRange("grid must be strictly increasing");
    }
    const double C = residue_constant(loc);
    const double logp = std::log(static_cast<double>(loc.p));
    MomentReport report;
    report.p = loc.p;
    report.rows.reserve(grid.size());
    for (double x : grid) {
        const double logx = std::log(x);
        MomentRow row;
        row.x = x;
        row.second_lhs = second_moment(loc, x);
        // Residue main term of the weighted sum: the order-3 pole of
        // F_p(s) x^s / s^2 contributes (C/2) (log x)^2 / log p.
        row.second_pred = C * logx * logx / (2.0 * logp);
        row.ratio = row.second_lhs / row.second_pred;
        row.first_lhs = first_moment(loc, x);
        row.first_over_logx = row.first_lhs / logx;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace spinor
