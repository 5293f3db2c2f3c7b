#include "spinor/satake.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinor/errors.hpp"
#include "spinor/primes.hpp"

namespace spinor {

namespace {

using cx = std::complex<double>;

constexpr double kConstructTol = 1e-12; // constructed values
constexpr double kIngestTol = 1e-10;    // values carrying file/user precision

void require_prime(uint64_t p) {
    if (!is_prime(p))
        throw ConstraintViolation("p = " + std::to_string(p) + " is not prime");
}

double checked_trace(double t, double tol, const char* name) {
    if (!(std::abs(t) <= 2.0 + tol))
        throw OutOfRange(std::string(name) + " = " + std::to_string(t) +
                         " outside [-2, 2]");
    return std::clamp(t, -2.0, 2.0);
}

// splitmix64, keyed per (seed, prime) so a form is prefix-stable in the
// prime bound.
uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct LocalStream {
    uint64_t state;
    LocalStream(uint64_t seed, uint64_t p) : state(mix64(seed) ^ mix64(p * 0xa24baed4963ee407ull)) {}
    double next_unit() { // uniform in [0, 1)
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double next_angle() { // uniform in (0, pi)
        double u;
        do {
            u = next_unit();
        } while (u == 0.0);
        return u * std::numbers::pi;
    }
};

} // namespace

std::complex<double> SatakeLocal::a() const {
    const double theta = std::acos(t_a / 2.0);
    return cx{std::cos(theta), std::sin(theta)};
}

std::complex<double> SatakeLocal::b() const {
    const double theta = std::acos(t_b / 2.0);
    return cx{std::cos(theta), std::sin(theta)};
}

SatakeLocal from_traces(double t_a, double t_b, uint64_t p) {
    require_prime(p);
    return SatakeLocal{p, checked_trace(t_a, kConstructTol, "t_a"),
                       checked_trace(t_b, kConstructTol, "t_b")};
}

SatakeLocal from_alphas(cx alpha0, cx alpha1, cx alpha2, uint64_t p) {
    require_prime(p);
    const cx product = alpha0 * alpha0 * alpha1 * alpha2;
    if (std::abs(product - cx{1.0, 0.0}) > kIngestTol)
        throw ConstraintViolation("alpha0^2 alpha1 alpha2 != 1");
    for (const cx& alpha : {alpha0, alpha1, alpha2}) {
        if (std::abs(std::abs(alpha) - 1.0) > kIngestTol)
            throw ConstraintViolation("Satake parameter off the unit circle");
    }
    const cx a = alpha0 / std::abs(alpha0);
    const cx b0 = alpha0 * alpha1;
    const cx b = b0 / std::abs(b0);
    // For unit-modulus a the trace a + 1/a is 2 Re a.
    const double t_a = checked_trace(2.0 * a.real(), kIngestTol, "t_a");
    const double t_b = checked_trace(2.0 * b.real(), kIngestTol, "t_b");
    return SatakeLocal{p, t_a, t_b};
}

SatakeLocal recover_local(double lambda_p, double lambda_p2, uint64_t p) {
    require_prime(p);
    // t_a + t_b = lambda(p); t_a t_b = lambda(p)^2 - lambda(p^2) - 2 - 1/p.
    const double s = lambda_p;
    const double q = lambda_p * lambda_p - lambda_p2 - 2.0 - 1.0 / static_cast<double>(p);
    const double disc = s * s - 4.0 * q;
    if (disc < -1e-9)
        throw NonRamanujan("trace quadratic has complex roots (disc = " +
                           std::to_string(disc) + ")");
    const double root = std::sqrt(std::max(disc, 0.0));
    const double t_a = (s + root) / 2.0;
    const double t_b = (s - root) / 2.0;
    if (std::abs(t_a) > 2.0 + 1e-9 || std::abs(t_b) > 2.0 + 1e-9)
        throw NonRamanujan("recovered trace outside [-2, 2]: t_a = " +
                           std::to_string(t_a) + ", t_b = " + std::to_string(t_b));
    return SatakeLocal{p, std::clamp(t_a, -2.0, 2.0), std::clamp(t_b, -2.0, 2.0)};
}

std::array<cx, 9> spectral_values(const SatakeLocal& loc) {
    const cx a = loc.a();
    const cx b = loc.b();
    const cx ai = std::conj(a); // = a^{-1} on the unit circle
    const cx bi = std::conj(b);
    return {cx{1.0, 0.0}, a * a, ai * ai, b * b, bi * bi,
            a * b, ai * bi, a * bi, ai * b};
}

std::pair<double, double> distinctness_margin(const SatakeLocal& loc) {
    const auto nine = spectral_values(loc);
    double m9 = 8.0;
    for (size_t i = 0; i < nine.size(); ++i)
        for (size_t j = i + 1; j < nine.size(); ++j)
            m9 = std::min(m9, std::abs(nine[i] - nine[j]));
    const cx a = loc.a();
    const cx b = loc.b();
    const std::array<cx, 5> five{cx{1.0, 0.0}, a, std::conj(a), b, std::conj(b)};
    double m5 = 8.0;
    for (size_t i = 0; i < five.size(); ++i)
        for (size_t j = i + 1; j < five.size(); ++j)
            m5 = std::min(m5, std::abs(five[i] - five[j]));
    return {m9, m5};
}

EigenForm::EigenForm(std::string label, std::vector<SatakeLocal> locals,
                     FormSource source, uint64_t seed)
    : label_(std::move(label)), locals_(std::move(locals)), source_(source), seed_(seed) {
    std::sort(locals_.begin(), locals_.end(),
              [](const SatakeLocal& l, const SatakeLocal& r) { return l.p < r.p; });
    if (locals_.empty()) throw MissingPrime("form has no locals");
    prime_bound_ = locals_.back().p;
    for (const SatakeLocal& loc : locals_) {
        if (!is_prime(loc.p))
            throw ConstraintViolation("local at non-prime " + std::to_string(loc.p));
        if (std::abs(loc.t_a) > 2.0 || std::abs(loc.t_b) > 2.0)
            throw OutOfRange("trace outside [-2, 2] at p = " + std::to_string(loc.p));
    }
    // Coverage check: every prime <= prime_bound exactly once.
    const auto primes = primes_up_to(prime_bound_);
    if (primes.size() != locals_.size())
        throw MissingPrime("form covers " + std::to_string(locals_.size()) +
                           " primes, expected " + std::to_string(primes.size()) +
                           " up to " + std::to_string(prime_bound_));
    for (size_t i = 0; i < primes.size(); ++i) {
        if (locals_[i].p != primes[i])
            throw MissingPrime("no local data at p = " + std::to_string(primes[i]));
    }
}

bool EigenForm::has(uint64_t p) const {
    auto it = std::lower_bound(locals_.begin(), locals_.end(), p,
                               [](const SatakeLocal& l, uint64_t v) { return l.p < v; });
    return it != locals_.end() && it->p == p;
}

bool EigenForm::covers(uint64_t x) const {
    for (uint64_t n = prime_bound_ + 1; n <= x; ++n)
        if (is_prime(n)) return false;
    return true;
}

const SatakeLocal& EigenForm::local(uint64_t p) const {
    auto it = std::lower_bound(locals_.begin(), locals_.end(), p,
                               [](const SatakeLocal& l, uint64_t v) { return l.p < v; });
    if (it == locals_.end() || it->p != p)
        throw MissingPrime("no local data at p = " + std::to_string(p));
    return *it;
}

EigenForm synth_form(uint64_t seed, uint64_t prime_bound, double zero_exponent) {
    if (prime_bound < 2) throw OutOfRange("prime_bound must be >= 2");
    if (!(zero_exponent >= 0.0 && zero_exponent < 1.0))
        throw OutOfRange("zero_exponent must lie in [0, 1)");
    const auto primes = primes_up_to(prime_bound);
    std::vector<SatakeLocal> locals;
    locals.reserve(primes.size());
    for (uint64_t p : primes) {
        LocalStream rng(seed, p);
        const double t_a = 2.0 * std::cos(rng.next_angle());
        double t_b = 2.0 * std::cos(rng.next_angle());
        const double zero_prob =
            std::min(1.0, 0.5 / std::pow(std::log(static_cast<double>(p)),
                                         1.0 + zero_exponent));
        if (rng.next_unit() < zero_prob) t_b = -t_a; // lambda_F(p) = t_a + t_b = 0
        locals.push_back(SatakeLocal{p, t_a, t_b});
    }
    return EigenForm("synthetic-" + std::to_string(seed), std::move(locals),
                     FormSource::synthetic, seed);
}

} // namespace spinor
