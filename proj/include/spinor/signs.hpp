#ifndef SPINOR_SIGNS_HPP
#define SPINOR_SIGNS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>

#include "spinor/hecke.hpp"
#include "spinor/satake.hpp"

namespace spinor {

// Counts of n <= x with lambda_F(n) nonzero / positive / negative, under the
// zero-snap rule. n_star = n_plus + n_minus always.
struct SignCounts {
    uint64_t x;
    uint64_t n_star;
    uint64_t n_plus;
    uint64_t n_minus;
};

SignCounts sign_counts(const GlobalTable& table, uint64_t x);
SignCounts sign_counts(const EigenForm& form, uint64_t x);

// Truncated Euler-product density of {n : lambda_F(n) != 0}:
//   rho = prod_{p <= prime_bound} (1 - 1/p) sum_{nu <= nu_cut} delta(p^nu)/p^nu.
// tail_bound aggregates the dropped sum_{nu > nu_cut} p^{-nu} contributions,
// reported, never silently absorbed.
struct DensityEstimate {
    double rho;
    uint64_t prime_bound;
    int nu_cut;
    double tail_bound;
};

// Core Euler-product evaluator over an explicit prime list and indicator
// delta(p, nu) in {0, 1}.
DensityEstimate density_from_indicator(
    const std::function<int(uint64_t p, int nu)>& delta,
    std::span<const uint64_t> primes, int nu_cut);

// delta from the form's eigenvalues with the zero-snap rule. Requires local
// data for every prime <= prime_bound (MissingPrime).
DensityEstimate rho_F(const EigenForm& form, uint64_t prime_bound, int nu_cut);

// The sign-decay constant: phi0 is the unique root in (0, pi) of
// sin(phi) - phi cos(phi) = pi/2 (bracketed by a pi/1000 scan, then bisected
// to 1e-12) and K = -cos(phi0) = 0.32867...
std::pair<double, double> K_constant();

// Right-hand side of the mean-value decay bound for a real multiplicative g
// with |g| <= 1:  x exp{ -K sum_{p <= x} (1 - g(p))/p }. Diagnostic value;
// the absolute constant in front is unknowable.
double hall_tenenbaum_rhs(const std::function<double(uint64_t)>& g_at_primes,
                          double x);

// Main term C x (log x)^{kappa-1} of the mean value of a non-negative
// multiplicative function with average kappa on primes.
double halberstam_prediction(double C, double kappa, double x);

} // namespace spinor

#endif
