#include "spinor/bfree.hpp"

#include <cmath>
#include <numeric>

#include "spinor/errors.hpp"
#include "spinor/primes.hpp"

namespace spinor {

namespace {

double reciprocal_sum(const std::vector<uint64_t>& members) {
    double s = 0.0;
    for (uint64_t b : members) s += 1.0 / static_cast<double>(b);
    return s;
}

} // namespace

BSet validate_bset(std::vector<uint64_t> members, uint64_t bound) {
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i] <= 1 || members[i] > bound)
            throw OutOfRange("member " + std::to_string(members[i]) +
                             " outside (1, bound]");
        if (i > 0 && members[i] <= members[i - 1])
            throw NotSorted("members not strictly increasing at index " +
                            std::to_string(i));
    }
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            if (std::gcd(members[i], members[j]) != 1)
                throw NotCoprime("members " + std::to_string(members[i]) + " and " +
                                 std::to_string(members[j]) + " share a factor");
        }
    }
    BSet b;
    b.members_ = std::move(members);
    b.bound_ = bound;
    b.rule_ = BSetRule::explicit_list;
    b.reciprocal_partial_ = reciprocal_sum(b.members_);
    return b;
}

BSet prime_squares_bset(uint64_t bound) {
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(bound)));
    while (root * root > bound) --root;
    while ((root + 1) * (root + 1) <= bound) ++root;
    BSet b;
    for (uint64_t p : primes_up_to(root)) b.members_.push_back(p * p);
    b.bound_ = bound;
    b.rule_ = BSetRule::prime_squares;
    b.reciprocal_partial_ = reciprocal_sum(b.members_);
    return b;
}

BSet build_BF(const EigenForm& form, uint64_t M) {
    if (M < 2) throw OutOfRange("M must be >= 2");
    if (!form.covers(M))
        throw MissingPrime("form covers primes up to " +
                           std::to_string(form.prime_bound()) +
                           ", construction needs " + std::to_string(M));
    std::vector<uint64_t> members;
    for (const SatakeLocal& loc : form.locals()) {
        if (loc.p > M) break;
        const bool zero_prime = std::abs(loc.t_a + loc.t_b) <= kZeroSnap;
        if (zero_prime) {
            members.push_back(loc.p);
        } else if (loc.p * loc.p <= M) {
            members.push_back(loc.p * loc.p);
        }
    }
    std::sort(members.begin(), members.end());
    BSet b;
    b.members_ = std::move(members);
    b.bound_ = M;
    b.rule_ = BSetRule::form_derived;
    b.reciprocal_partial_ = reciprocal_sum(b.members_);
    return b;
}

SieveResult sieve_interval(const BSet& B, uint64_t x, uint64_t y) {
    if (y < 1 || y > 100000000ull)
        throw CutoffTooLarge("window length must lie in [1, 10^8]");
    if (B.bound() < x + y)
        throw BoundTooSmall("exclusion set materialized to " +
                            std::to_string(B.bound()) + ", window ends at " +
                            std::to_string(x + y));
    std::vector<char> excluded(y, 0);
    for (uint64_t b : B.members()) {
        if (b > x + y) break;
        // first multiple of b strictly above x
        for (uint64_t m = (x / b + 1) * b; m <= x + y; m += b)
            excluded[m - x - 1] = 1;
    }
    SieveResult res{0, {}};
    for (uint64_t i = 0; i < y; ++i) {
        if (!excluded[i]) {
            ++res.count;
            res.survivors.push_back(x + 1 + i);
        }
    }
    return res;
}

uint64_t sieve_progression(const BSet& B, uint64_t x, uint64_t y, uint64_t a,
                           uint64_t q) {
    if (q < 1 || a < 1 || a > q)
        throw OutOfRange("need 1 <= a <= q");
    const uint64_t g = std::gcd(a, q);
    for (uint64_t b : B.members()) {
        if (std::gcd(g, b) != 1)
            throw BadResidue("((a, q), b) != 1 at member " + std::to_string(b));
    }
    const SieveResult res = sieve_interval(B, x, y);
    uint64_t count = 0;
    for (uint64_t n : res.survivors)
        if (n % q == a % q) ++count;
    return count;
}

namespace {

template <typename LambdaAt>
GapStat gap_scan(uint64_t n, uint64_t scan_limit, LambdaAt lambda_of) {
    GapStat stat{n, 0, false};
    for (uint64_t j = 1; j <= scan_limit; ++j) {
        if (std::abs(lambda_of(n + j)) > kZeroSnap) return stat;
        stat.i_F = j;
    }
    stat.incomplete = true;
    return stat;
}

} // namespace

GapStat gap_iF(const EigenForm& form, uint64_t n, uint64_t scan_limit) {
    return gap_scan(n, scan_limit,
                    [&](uint64_t m) { return lambda_at(form, m); });
}

GapStat gap_iF(const GlobalTable& table, uint64_t n, uint64_t scan_limit) {
    return gap_scan(n, scan_limit, [&](uint64_t m) {
        if (m > table.x()) throw MissingPrime("scan leaves table coverage");
        return table.lambda(m);
    });
}

} // namespace spinor
