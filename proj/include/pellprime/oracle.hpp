#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pellprime {

// Ground-truth primality, kept algorithmically independent from the Pell
// test machinery: it has its own modular arithmetic on purpose, so that a
// scan disagreement implicates exactly one side.
namespace oracle {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    if (n <= 0xffffffffull) {
        return (a * b) % n;
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t n)
{
    std::uint64_t acc = 1 % n;
    std::uint64_t b = base % n;
    while (e != 0) {
        if (e & 1) {
            acc = mulmod(acc, b, n);
        }
        b = mulmod(b, b, n);
        e >>= 1;
    }
    return acc;
}

// One Miller-Rabin round; returns true when n passes for this witness.
inline bool miller_rabin_round(std::uint64_t n, std::uint64_t witness, std::uint64_t d, int s)
{
    std::uint64_t x = powmod(witness, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Exact primality for n < 2^64: trial division below 10^4, then
/// deterministic Miller-Rabin with the fixed witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37}.
inline bool is_prime_oracle(std::uint64_t n)
{
    if (n < 2) {
        throw std::invalid_argument("is_prime_oracle: n must be >= 2");
    }
    if (n < 10000) {
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    int s = 0;
    std::uint64_t d = n - 1;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }
    constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t w : witnesses) {
        if (!detail::miller_rabin_round(n, w, d, s)) {
            return false;
        }
    }
    return true;
}

/// All primes <= bound, ascending (Eratosthenes).
inline std::vector<std::uint64_t> sieve_upto(std::uint64_t bound)
{
    if (bound < 2) {
        throw std::invalid_argument("sieve_upto: bound must be >= 2");
    }
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        if (i > bound / i) {
            continue;  // i*i would overflow or exceed the bound
        }
        for (std::uint64_t j = i * i; j <= bound; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

} // namespace oracle

using oracle::is_prime_oracle;
using oracle::sieve_upto;

} // namespace pellprime
