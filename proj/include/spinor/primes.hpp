#ifndef SPINOR_PRIMES_HPP
#define SPINOR_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace spinor {

// All primes <= n, ascending.
std::vector<uint64_t> primes_up_to(uint64_t n);

bool is_prime(uint64_t n);

// Smallest-prime-factor table built by a linear sieve.
// spf_index[n] is the index into `primes` of the smallest prime factor of n
// (n >= 2); entries 0 and 1 are unspecified.
struct SpfTable {
    std::vector<uint32_t> spf_index;
    std::vector<uint64_t> primes;
};

SpfTable spf_table(uint64_t n);

} // namespace spinor

#endif
