#include "spinor/signs.hpp"

#include <cmath>
#include <numbers>

#include "spinor/errors.hpp"
#include "spinor/primes.hpp"

namespace spinor {

SignCounts sign_counts(const GlobalTable& table, uint64_t x) {
    if (x > table.x()) throw OutOfRange("x exceeds table coverage");
    SignCounts c{x, 0, 0, 0};
    for (uint64_t n = 1; n <= x; ++n) {
        const int s = table.sign(n);
        if (s > 0) ++c.n_plus;
        else if (s < 0) ++c.n_minus;
    }
    c.n_star = c.n_plus + c.n_minus;
    return c;
}

SignCounts sign_counts(const EigenForm& form, uint64_t x) {
    return sign_counts(global_table(form, x), x);
}

DensityEstimate density_from_indicator(
    const std::function<int(uint64_t p, int nu)>& delta,
    std::span<const uint64_t> primes, int nu_cut) {
    if (nu_cut < 1) throw OutOfRange("nu_cut must be >= 1");
    double rho = 1.0;
    double tail = 0.0;
    for (uint64_t p : primes) {
        const double pinv = 1.0 / static_cast<double>(p);
        double inner = 0.0;
        double pk = 1.0;
        for (int nu = 0; nu <= nu_cut; ++nu) {
            if (delta(p, nu)) inner += pk;
            pk *= pinv;
        }
        rho *= (1.0 - pinv) * inner;
        // Dropped geometric tail sum_{nu > nu_cut} p^{-nu} = p^{-nu_cut}/(p-1).
        tail += std::pow(pinv, nu_cut) / (static_cast<double>(p) - 1.0);
    }
    const uint64_t bound = primes.empty() ? 0 : primes.back();
    return DensityEstimate{rho, bound, nu_cut, tail};
}

DensityEstimate rho_F(const EigenForm& form, uint64_t prime_bound, int nu_cut) {
    if (!form.covers(prime_bound))
        throw MissingPrime("form covers primes up to " +
                           std::to_string(form.prime_bound()) + ", density needs " +
                           std::to_string(prime_bound));
    const auto primes = primes_up_to(prime_bound);
    // Cache the eigenvalue table per prime; delta applies the zero-snap rule.
    std::vector<std::vector<double>> lam_tables;
    lam_tables.reserve(primes.size());
    for (size_t i = 0; i < primes.size(); ++i)
        lam_tables.push_back(lambda_coeffs(form.local(primes[i]), nu_cut));
    auto delta = [&](uint64_t p, int nu) -> int {
        const size_t idx = static_cast<size_t>(
            std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
        return std::abs(lam_tables[idx][static_cast<size_t>(nu)]) > kZeroSnap ? 1 : 0;
    };
    DensityEstimate est = density_from_indicator(delta, primes, nu_cut);
    est.prime_bound = prime_bound;
    return est;
}

std::pair<double, double> K_constant() {
    const auto f = [](double phi) {
        return std::sin(phi) - phi * std::cos(phi) - std::numbers::pi / 2.0;
    };
    // Bracket by a pi/1000 scan, then bisect to 1e-12.
    const double step = std::numbers::pi / 1000.0;
    double lo = step, hi = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double x0 = i * step;
        const double x1 = (i + 1) * step;
        if (f(x0) <= 0.0 && f(x1) > 0.0) {
            lo = x0;
            hi = x1;
            break;
        }
    }
    if (hi == 0.0) throw ConstraintViolation("no sign change found in (0, pi)");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0.0) lo = mid;
        else hi = mid;
    }
    const double phi0 = 0.5 * (lo + hi);
    return {phi0, -std::cos(phi0)};
}

double hall_tenenbaum_rhs(const std::function<double(uint64_t)>& g_at_primes,
                          double x) {
    if (!(x >= 2.0)) throw OutOfRange("x must be >= 2");
    const double K = K_constant().second;
    double sum = 0.0;
    for (uint64_t p : primes_up_to(static_cast<uint64_t>(x))) {
        const double g = g_at_primes(p);
        if (!(std::abs(g) <= 1.0))
            throw OutOfRange("|g(p)| > 1 at p = " + std::to_string(p));
        sum += (1.0 - g) / static_cast<double>(p);
    }
    return x * std::exp(-K * sum);
}

double halberstam_prediction(double C, double kappa, double x) {
    if (!(x > 1.0)) throw OutOfRange("x must be > 1");
    if (!(kappa > 0.0)) throw OutOfRange("kappa must be > 0");
    return C * x * std::pow(std::log(x), kappa - 1.0);
}

} // namespace spinor
