#include "spinor/hecke.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <unordered_map>

#include "spinor/errors.hpp"
#include "spinor/primes.hpp"
#include "spinor/series.hpp"

namespace spinor {

namespace {

using cx = std::complex<double>;

double certified_real(cx z, const char* what) {
    if (std::abs(z.imag()) > kRealityTol * std::max(1.0, std::abs(z.real())))
        throw ConstraintViolation(std::string(what) + " has imaginary part " +
                                  std::to_string(z.imag()));
    return z.real();
}

// Complex A(nu) and the tail sums S(nu) for nu = 0..N, by the literal double
// geometric sums. S is accumulated incrementally: S(nu) = A(nu-2) + S(nu-2).
void direct_A_and_S(const SatakeLocal& loc, int N, std::vector<cx>& A,
                    std::vector<cx>& S) {
    const cx a = loc.a();
    const cx b = loc.b();
    const cx ab_inv = std::conj(a * b);
    A.assign(static_cast<size_t>(N) + 1, cx{});
    S.assign(static_cast<size_t>(N) + 1, cx{});
    for (int nu = 0; nu <= N; ++nu) {
        cx mono{};
        cx term = std::pow(a, nu);
        const cx step = b / a;
        for (int i = 0; i <= nu; ++i) {
            mono += term;
            term *= step;
        }
        cx geo{};
        cx g{1.0, 0.0};
        for (int j = 0; j <= nu; ++j) {
            geo += g;
            g *= ab_inv;
        }
        A[static_cast<size_t>(nu)] = mono * geo;
        if (nu >= 2)
            S[static_cast<size_t>(nu)] =
                A[static_cast<size_t>(nu - 2)] + S[static_cast<size_t>(nu - 2)];
    }
}

// Quartic 1 - e1 t + e2 t^2 - e1 t^3 + t^4 with e1 = t_a + t_b,
// e2 = t_a t_b + 2 (the reciprocal polynomial with roots a, 1/a, b, 1/b).
std::vector<double> quartic_coeffs(const SatakeLocal& loc) {
    const double e1 = loc.t_a + loc.t_b;
    const double e2 = loc.t_a * loc.t_b + 2.0;
    return {1.0, -e1, e2, -e1, 1.0};
}

} // namespace

double d4_prime_power_bound(int nu) {
    // C(nu+3, 3)
    return (static_cast<double>(nu) + 1.0) * (static_cast<double>(nu) + 2.0) *
           (static_cast<double>(nu) + 3.0) / 6.0;
}

double d5_prime_power_bound(int nu) {
    // C(nu+4, 4)
    return (static_cast<double>(nu) + 1.0) * (static_cast<double>(nu) + 2.0) *
           (static_cast<double>(nu) + 3.0) * (static_cast<double>(nu) + 4.0) / 24.0;
}

std::vector<double> a_coeffs(const SatakeLocal& loc, int N) {
    if (N < 0) throw OutOfRange("N must be >= 0");
    const cx a = loc.a();
    const cx b = loc.b();
    TruncSeries prod = mul(mul(TruncSeries::geom(a, N), TruncSeries::geom(std::conj(a), N)),
                           mul(TruncSeries::geom(b, N), TruncSeries::geom(std::conj(b), N)));
    std::vector<double> out(static_cast<size_t>(N) + 1);
    for (int nu = 0; nu <= N; ++nu)
        out[static_cast<size_t>(nu)] = certified_real(prod.coeff(nu), "a_F(p^nu)");
    return out;
}

double A_direct(const SatakeLocal& loc, int nu) {
    if (nu < 0) throw OutOfRange("nu must be >= 0");
    std::vector<cx> A, S;
    direct_A_and_S(loc, nu, A, S);
    return certified_real(A.back(), "A(nu)");
}

double S_direct(const SatakeLocal& loc, int nu) {
    if (nu < 0) throw OutOfRange("nu must be >= 0");
    std::vector<cx> A, S;
    direct_A_and_S(loc, nu, A, S);
    return certified_real(S.back(), "S(nu)");
}

double A_closed(const SatakeLocal& loc, int nu) {
    if (nu < 0) throw OutOfRange("nu must be >= 0");
    const auto [m9, m5] = distinctness_margin(loc);
    (void)m9;
    if (m5 <= 1e-6)
        throw Degenerate("five-element spectral margin " + std::to_string(m5) +
                         " below gate");
    const cx a = loc.a();
    const cx b = loc.b();
    const cx D = a * b / ((a - b) * (a * b - cx{1.0, 0.0}));
    const cx val = D * (std::pow(a, nu + 1) + std::pow(std::conj(a), nu + 1) -
                        std::pow(b, nu + 1) - std::pow(std::conj(b), nu + 1));
    return certified_real(val, "A(nu)");
}

std::vector<double> lambda_coeffs(const SatakeLocal& loc, int N) {
    if (N < 0) throw OutOfRange("N must be >= 0");
    std::vector<cx> A, S;
    direct_A_and_S(loc, N, A, S);
    const double pinv = 1.0 / static_cast<double>(loc.p);

    // Cross-check route: (1 - t^2/p) / quartic as a series.
    const std::vector<double> numer{1.0, 0.0, -pinv};
    const TruncSeries route_b = div(TruncSeries::polynomial(numer, N),
                                    TruncSeries::polynomial(quartic_coeffs(loc), N));

    std::vector<double> out(static_cast<size_t>(N) + 1);
    for (int nu = 0; nu <= N; ++nu) {
        const cx A_nu = A[static_cast<size_t>(nu)];
        const cx S_nu = S[static_cast<size_t>(nu)];
        const double lam = certified_real(A_nu + (1.0 - pinv) * S_nu, "lambda_F(p^nu)");
        // The A-route cancels intermediates of size |A| + |S| down to an O(1)
        // eigenvalue near trace collisions; the agreement bound carries that
        // cancellation mass. At well-separated locals it stays 1e-9.
        const double mass = std::abs(A_nu) + std::abs(S_nu);
        const double tol = 1e-9 * std::max(1.0, mass);
        if (std::abs(lam - route_b.coeff(nu).real()) > tol)
            throw ConstraintViolation(
                "lambda routes diverge at nu = " + std::to_string(nu) + ": " +
                std::to_string(lam) + " vs " + std::to_string(route_b.coeff(nu).real()));
        out[static_cast<size_t>(nu)] = lam;
    }
    return out;
}

double lambda_from_a(const SatakeLocal& loc, int nu) {
    if (nu < 0) throw OutOfRange("nu must be >= 0");
    const auto a_vals = a_coeffs(loc, nu);
    double v = a_vals[static_cast<size_t>(nu)];
    if (nu >= 2)
        v -= a_vals[static_cast<size_t>(nu - 2)] / static_cast<double>(loc.p);
    return v;
}

LocalTable local_table(const SatakeLocal& loc, int N) {
    LocalTable t{loc, N, a_coeffs(loc, N), lambda_coeffs(loc, N)};
    for (int nu = 0; nu <= N; ++nu) {
        if (std::abs(t.a_vals[static_cast<size_t>(nu)]) >
            d4_prime_power_bound(nu) + 1e-9)
            throw ConstraintViolation("a_F(p^nu) violates the d4 bound at nu = " +
                                      std::to_string(nu));
        if (std::abs(t.lambda_vals[static_cast<size_t>(nu)]) >
            d5_prime_power_bound(nu) + 1e-9)
            throw ConstraintViolation("lambda_F(p^nu) violates the d5 bound at nu = " +
                                      std::to_string(nu));
    }
    return t;
}

namespace {

// Factor n by trial division and multiply the per-prime-power values.
template <typename PowerValue>
double multiplicative_at(const EigenForm& form, uint64_t n, PowerValue value) {
    if (n == 0) throw OutOfRange("n must be >= 1");
    double out = 1.0;
    uint64_t rest = n;
    for (uint64_t d = 2; d * d <= rest; d == 2 ? d = 3 : d += 2) {
        if (rest % d != 0) continue;
        int nu = 0;
        while (rest % d == 0) {
            rest /= d;
            ++nu;
        }
        out *= value(form.local(d), nu);
    }
    if (rest > 1) out *= value(form.local(rest), 1);
    return out;
}

} // namespace

double lambda_at(const EigenForm& form, uint64_t n) {
    return multiplicative_at(form, n, [](const SatakeLocal& loc, int nu) {
        return lambda_coeffs(loc, nu).back();
    });
}

double a_at(const EigenForm& form, uint64_t n) {
    return multiplicative_at(form, n, [](const SatakeLocal& loc, int nu) {
        return a_coeffs(loc, nu).back();
    });
}

GlobalTable::GlobalTable(const EigenForm& form, uint64_t x) : x_(x) {
    if (x < 1) throw OutOfRange("x must be >= 1");
    values_.assign(x + 1, 1.0);
    values_[0] = 0.0;
    if (x == 1) return;

    const SpfTable spf = spf_table(x);
    // Per-prime eigenvalues at the powers that fit below x.
    std::vector<double> lam_p(spf.primes.size());
    std::vector<std::vector<double>> lam_powers(spf.primes.size());
    for (size_t i = 0; i < spf.primes.size(); ++i) {
        const uint64_t p = spf.primes[i];
        const SatakeLocal& loc = form.local(p);
        int nu_max = 1;
        for (uint64_t pk = p; pk <= x / p; pk *= p) ++nu_max;
        const auto lams = lambda_coeffs(loc, nu_max);
        lam_p[i] = lams[1];
        if (nu_max >= 2) lam_powers[i] = lams;
    }

    for (uint64_t n = 2; n <= x; ++n) {
        const uint32_t pi = spf.spf_index[n];
        const uint64_t p = spf.primes[pi];
        uint64_t m = n / p;
        int nu = 1;
        while (m % p == 0) {
            m /= p;
            ++nu;
        }
        const double local = nu == 1 ? lam_p[pi] : lam_powers[pi][static_cast<size_t>(nu)];
        values_[n] = values_[m] * local;
    }
}

int GlobalTable::sign(uint64_t n) const {
    const double v = values_[n];
    if (std::abs(v) <= kZeroSnap) return 0;
    return v > 0.0 ? 1 : -1;
}

GlobalTable global_table(const EigenForm& form, uint64_t x) {
    if (x > 100000000ull)
        throw CutoffTooLarge("x = " + std::to_string(x) + " exceeds the 10^8 guardrail");
    if (!form.covers(x))
        throw MissingPrime("form covers primes up to " +
                           std::to_string(form.prime_bound()) +
                           ", table needs " + std::to_string(x));
    return GlobalTable(form, x);
}

} // namespace spinor
