#ifndef SPINOR_SATAKE_HPP
#define SPINOR_SATAKE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spinor {

// Local Satake data at a prime p. The traces (t_a, t_b) in [-2, 2] are the
// canonical representation; the unit-circle parameters a, b are derived views
// a = e^{i arccos(t_a/2)}, so a^{-1} = conj(a) exactly. Every downstream
// formula is symmetric in (a, a^{-1}) and (b, b^{-1}), so the sign of the
// chosen angle is unobservable.
struct SatakeLocal {
    uint64_t p;
    double t_a;
    double t_b;

    std::complex<double> a() const;
    std::complex<double> b() const;
};

// Construct from traces. Throws OutOfRange if a trace leaves [-2, 2]
// (tolerance 1e-12, then clamped).
SatakeLocal from_traces(double t_a, double t_b, uint64_t p);

// Construct from the three Satake parameters normalized by
// alpha0^2 alpha1 alpha2 = 1; a = alpha0, b = alpha0 alpha1. Throws
// ConstraintViolation if the product relation or a unit-modulus check fails
// (ingestion tolerance 1e-10).
SatakeLocal from_alphas(std::complex<double> alpha0, std::complex<double> alpha1,
                        std::complex<double> alpha2, uint64_t p);

// Invert the eigenvalue map at nu = 1, 2: the traces are the roots of
// z^2 - s z + q with s = lambda_p and q = lambda_p^2 - lambda_p2 - 2 - 1/p,
// ordered t_a >= t_b. Throws NonRamanujan if the roots are complex or leave
// [-2, 2] (signals Maass-space-like or corrupted input).
SatakeLocal recover_local(double lambda_p, double lambda_p2, uint64_t p);

// The nine spectral values [1, a^2, a^-2, b^2, b^-2, ab, (ab)^-1, ab^-1,
// a^-1 b], in exactly this order.
std::array<std::complex<double>, 9> spectral_values(const SatakeLocal& loc);

// Minimum pairwise distance over the nine spectral values (first) and over
// {1, a, a^-1, b, b^-1} (second). Zero signals a degenerate local.
std::pair<double, double> distinctness_margin(const SatakeLocal& loc);

enum class FormSource { file, synthetic };

// A labeled family of locals, one per prime <= prime_bound. Immutable after
// construction; safe for concurrent reads.
class EigenForm {
public:
    // locals must hold every prime <= prime_bound exactly once (ascending or
    // not; they are sorted). Throws MissingPrime / ConstraintViolation.
    EigenForm(std::string label, std::vector<SatakeLocal> locals,
              FormSource source, uint64_t seed = 0);

    const std::string& label() const { return label_; }
    uint64_t prime_bound() const { return prime_bound_; }
    FormSource source() const { return source_; }
    uint64_t seed() const { return seed_; }

    std::span<const SatakeLocal> locals() const { return locals_; }
    bool has(uint64_t p) const;
    const SatakeLocal& local(uint64_t p) const; // throws MissingPrime
    // True iff every prime <= x has local data (no prime in (prime_bound, x]).
    bool covers(uint64_t x) const;

private:
    std::string label_;
    std::vector<SatakeLocal> locals_; // ascending p
    uint64_t prime_bound_ = 0;
    FormSource source_ = FormSource::file;
    uint64_t seed_ = 0;
};

// Deterministic synthetic form: per prime p <= prime_bound, angles
// theta_a, theta_b are drawn uniformly on (0, pi) from a stream keyed by
// (seed, p); with probability min(1, 0.5 / (log p)^{1 + zero_exponent}) the
// local is forced to t_b = -t_a so that lambda_F(p) = 0. Pure function of
// (seed, prime_bound, zero_exponent); a form is a prefix of the same form at
// any larger prime_bound.
EigenForm synth_form(uint64_t seed, uint64_t prime_bound, double zero_exponent);

} // namespace spinor

#endif
