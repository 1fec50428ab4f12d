#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "pellprime/modmath.hpp"

namespace pellprime {

/// Primes up to 997, the prime phase of the parameter search. The search
/// switches to plain integers from 998 onward instead of extending this
/// table further.
inline constexpr std::array<std::uint16_t, 168> kSearchPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263,
    269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349,
    353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433,
    439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521,
    523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613,
    617, 619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701,
    709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809,
    811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887,
    907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997,
};

/// Generalised Euler criterion probe for n = 3k + 1: true iff
/// candidate^((n-1)/3) != 1 mod n, certifying a non-cube when n is prime.
inline bool is_cube_witness(const OddModulus& n, const Residue& candidate)
{
    if (n.residue_class() != 1) {
        throw std::invalid_argument("is_cube_witness: requires n = 1 mod 3");
    }
    if (candidate.value() < 1 || candidate.value() > n.value() - 2) {
        throw std::invalid_argument("is_cube_witness: candidate must be in [1, n-2]");
    }
    const std::uint64_t e = (n.value() - 1) / 3;  // exact, n = 1 mod 3
    return powmod(candidate, e).value() != 1;
}

/// Smallest-non-cube search for n = 3k + 1: tries every prime in [2, 997]
/// ascending and then every integer in [998, n-2] ascending, skipping
/// candidates >= n-1, and returns the first one the Euler criterion flags
/// as a non-cube. An empty result means no candidate failed the
/// criterion, which the caller must interpret as "n is composite".
/// `probe`, when set, observes each candidate in the order it is tried.
inline std::optional<Residue> find_smallest_noncube(
    const OddModulus& n, const std::function<void(std::uint64_t)>& probe = {})
{
    if (n.residue_class() != 1) {
        throw std::invalid_argument("find_smallest_noncube: requires n = 1 mod 3");
    }
    const std::uint64_t limit = n.value() - 2;
    for (std::uint16_t q : kSearchPrimes) {
        if (q > limit) {
            break;
        }
        if (probe) {
            probe(q);
        }
        Residue candidate(q, n);
        if (is_cube_witness(n, candidate)) {
            return candidate;
        }
    }
    for (std::uint64_t c = 998; c <= limit; ++c) {
        if (probe) {
            probe(c);
        }
        Residue candidate(c, n);
        if (is_cube_witness(n, candidate)) {
            return candidate;
        }
    }
    return std::nullopt;
}

} // namespace pellprime
