#ifndef SPINOR_BFREE_HPP
#define SPINOR_BFREE_HPP

#include <cstdint>
#include <vector>

#include "spinor/hecke.hpp"
#include "spinor/satake.hpp"

namespace spinor {

enum class BSetRule { explicit_list, prime_squares, form_derived };

// A validated exclusion set: pairwise-coprime integers > 1, strictly
// increasing, materialized up to a working bound. An integer is "B-free"
// when no member divides it. Convergence of sum 1/b is not decidable from a
// finite list; the partial sum and the generator rule are recorded instead.
// Immutable after validation.
class BSet {
public:
    const std::vector<uint64_t>& members() const { return members_; }
    uint64_t bound() const { return bound_; }
    BSetRule rule() const { return rule_; }
    double reciprocal_partial() const { return reciprocal_partial_; }

private:
    BSet() = default;
    friend BSet validate_bset(std::vector<uint64_t> members, uint64_t bound);
    friend BSet prime_squares_bset(uint64_t bound);
    friend BSet build_BF(const EigenForm& form, uint64_t M);

    std::vector<uint64_t> members_;
    uint64_t bound_ = 0;
    BSetRule rule_ = BSetRule::explicit_list;
    double reciprocal_partial_ = 0.0;
};

// Validates an explicit member list: strictly increasing (NotSorted), members
// in (1, bound], pairwise coprime via O(k^2) gcds (NotCoprime names the
// offending pair).
BSet validate_bset(std::vector<uint64_t> members, uint64_t bound);

// {p^2 : p prime, p^2 <= bound}; B-free = squarefree.
BSet prime_squares_bset(uint64_t bound);

// The form-derived set: zero primes p <= M (lambda_F(p) = 0 under zero-snap)
// together with p^2 <= M for the remaining primes. Pairwise coprime by
// construction. Requires locals for all primes <= M (MissingPrime).
BSet build_BF(const EigenForm& form, uint64_t M);

struct SieveResult {
    uint64_t count;
    std::vector<uint64_t> survivors;
};

// B-free numbers in the window (x, x+y]: marks multiples of each member,
// memory O(y). Requires B materialized to at least x + y (BoundTooSmall) and
// y <= 10^8 (CutoffTooLarge). Matches per-n trial division exactly.
SieveResult sieve_interval(const BSet& B, uint64_t x, uint64_t y);

// B-free n === a (mod q) in (x, x+y], 1 <= a <= q. Requires
// gcd(gcd(a, q), b) = 1 for every member (BadResidue).
uint64_t sieve_progression(const BSet& B, uint64_t x, uint64_t y, uint64_t a,
                           uint64_t q);

// Length of the run of vanishing eigenvalues right after n:
// max{j >= 1 : lambda_F(n+i) = 0 for 0 < i <= j}, 0 if lambda_F(n+1) != 0.
// incomplete is set when the scan hits scan_limit without a nonzero value.
struct GapStat {
    uint64_t n;
    uint64_t i_F;
    bool incomplete;
};

GapStat gap_iF(const EigenForm& form, uint64_t n, uint64_t scan_limit);
GapStat gap_iF(const GlobalTable& table, uint64_t n, uint64_t scan_limit);

} // namespace spinor

#endif
