#ifndef SPINOR_HECKE_HPP
#define SPINOR_HECKE_HPP

#include <cstdint>
#include <vector>

#include "spinor/satake.hpp"

namespace spinor {

// Eigenvalues within this distance of 0 are treated as exactly 0 by sign
// logic (forced zeros are exact; float noise must not leak spurious signs).
inline constexpr double kZeroSnap = 1e-9;

// Computed eigenvalues must be real to this accuracy before the imaginary
// part is dropped.
inline constexpr double kRealityTol = 1e-9;

// Divisor bounds at prime powers: d4(p^nu) = C(nu+3, 3), d5(p^nu) = C(nu+4, 4).
double d4_prime_power_bound(int nu);
double d5_prime_power_bound(int nu);

// First N+1 Taylor coefficients of
//   1 / [(1-at)(1-a^{-1}t)(1-bt)(1-b^{-1}t)],
// i.e. the complete homogeneous symmetric functions of {a, a^{-1}, b, b^{-1}};
// these are the local Dirichlet coefficients a_F(p^nu). Built from the series
// module; reality is certified before the imaginary parts are dropped.
std::vector<double> a_coeffs(const SatakeLocal& loc, int N);

// The double geometric sum
//   A(nu) = sum_{0<=i<=nu} a^{nu-i} b^i  *  sum_{0<=j<=nu} (ab)^{-j},
// evaluated literally (no closed form).
double A_direct(const SatakeLocal& loc, int nu);

// Closed form A(nu) = D(a,b) (a^{nu+1} + a^{-nu-1} - b^{nu+1} - b^{-nu-1})
// with D(a,b) = ab / ((a-b)(ab-1)). Requires the five-element distinctness
// margin > 1e-6; throws Degenerate otherwise.
double A_closed(const SatakeLocal& loc, int nu);

// The tail sum S(nu) = sum_{1<=j<=floor(nu/2)} A(nu-2j), evaluated directly.
double S_direct(const SatakeLocal& loc, int nu);

// lambda_F(p^nu) for nu = 0..N via
//   lambda_F(p^nu) = A(nu) + (1 - 1/p) S(nu),
// cross-checked internally against the generating series
//   (1 - p^{-1} X^2) / [(1-aX)(1-a^{-1}X)(1-bX)(1-b^{-1}X)];
// the two routes must agree within 1e-9 (ConstraintViolation otherwise).
std::vector<double> lambda_coeffs(const SatakeLocal& loc, int N);

// lambda_F(p^nu) from the Moebius-weighted square-divisor sum over
// d^2 m = p^nu, which collapses to a_F(p^nu) - a_F(p^{nu-2})/p.
double lambda_from_a(const SatakeLocal& loc, int nu);

// Per-prime table of a_F(p^nu) and lambda_F(p^nu), nu <= N, with divisor
// bounds certified on construction.
struct LocalTable {
    SatakeLocal loc;
    int N;
    std::vector<double> a_vals;
    std::vector<double> lambda_vals;
};

LocalTable local_table(const SatakeLocal& loc, int N);

// Multiplicative extension lambda_F(n) = prod lambda_F(p_i^{nu_i}) by trial
// factorization; throws MissingPrime if a prime factor exceeds the form's
// coverage. a_at is the analogue for a_F(n).
double lambda_at(const EigenForm& form, uint64_t n);
double a_at(const EigenForm& form, uint64_t n);

// Materialized lambda_F(n) for 1 <= n <= x, built by a smallest-prime-factor
// sieve in O(x log x). Immutable after construction.
class GlobalTable {
public:
    GlobalTable(const EigenForm& form, uint64_t x);

    uint64_t x() const { return x_; }
    double lambda(uint64_t n) const { return values_[n]; }
    // -1, 0, +1 with the zero-snap rule.
    int sign(uint64_t n) const;
    const std::vector<double>& values() const { return values_; }

private:
    uint64_t x_;
    std::vector<double> values_; // index 0 unused
};

// x <= 10^8 guardrail (CutoffTooLarge); all primes <= x must be covered by
// the form (MissingPrime).
GlobalTable global_table(const EigenForm& form, uint64_t x);

} // namespace spinor

#endif
