#include "spinor/primes.hpp"

#include <stdexcept>

namespace spinor {

std::vector<uint64_t> primes_up_to(uint64_t n) {
    std::vector<uint64_t> primes;
    if (n < 2) return primes;
    std::vector<char> composite(n + 1, 0);
    for (uint64_t i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    for (uint64_t i = 2; i <= n; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

SpfTable spf_table(uint64_t n) {
    SpfTable t;
    if (n < 2) {
        t.spf_index.assign(n + 1, 0);
        return t;
    }
    constexpr uint32_t kUnset = 0xffffffffu;
    t.spf_index.assign(n + 1, kUnset);
    // Linear sieve: each composite is struck once, by (smallest prime, cofactor).
    for (uint64_t i = 2; i <= n; ++i) {
        if (t.spf_index[i] == kUnset) {
            t.spf_index[i] = static_cast<uint32_t>(t.primes.size());
            t.primes.push_back(i);
        }
        const uint32_t spf_i = t.spf_index[i];
        for (uint32_t j = 0; j <= spf_i; ++j) {
            const uint64_t ip = i * t.primes[j];
            if (ip > n) break;
            t.spf_index[ip] = j;
        }
    }
    return t;
}

} // namespace spinor
