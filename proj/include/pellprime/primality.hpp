#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pellprime/modmath.hpp"
#include "pellprime/paramsearch.hpp"
#include "pellprime/pellcore.hpp"

namespace pellprime {

enum class Outcome { Prime, Composite };

/// Cause of a verdict; Passed belongs to Prime verdicts only, every other
/// value names the first failed condition.
enum class Reason {
    Passed,
    DivisibleBy3,
    SmallFactor,
    NoNonCubeFound,
    CondX,
    CondY,
    CondZ,
    CondQuadratic,
    FermatBase2,
};

struct Verdict {
    Outcome outcome;
    Reason reason;
    std::optional<std::uint64_t> r_used;

    bool is_prime() const { return outcome == Outcome::Prime; }
};

inline std::string to_string(Outcome o)
{
    return o == Outcome::Prime ? "prime" : "composite";
}

inline std::string to_string(Reason r)
{
    switch (r) {
    case Reason::Passed: return "passed";
    case Reason::DivisibleBy3: return "divisible-by-3";
    case Reason::SmallFactor: return "small-factor";
    case Reason::NoNonCubeFound: return "no-non-cube-found";
    case Reason::CondX: return "cond-x";
    case Reason::CondY: return "cond-y";
    case Reason::CondZ: return "cond-z";
    case Reason::CondQuadratic: return "cond-quadratic";
    case Reason::FermatBase2: return "fermat-base-2";
    }
    return "unknown";
}

namespace detail {

inline Verdict prime_verdict(std::uint64_t r_used)
{
    return Verdict{Outcome::Prime, Reason::Passed, r_used};
}

inline Verdict composite_verdict(Reason reason,
                                 std::optional<std::uint64_t> r_used = std::nullopt)
{
    return Verdict{Outcome::Composite, reason, r_used};
}

inline Verdict pell_test_impl(std::uint64_t n, bool drop_quadratic_condition,
                              MulCounter* counter)
{
    if (n <= 3 || n % 2 == 0) {
        throw std::invalid_argument("pell_test: n must be odd and > 3");
    }
    if (n % 3 == 0) {
        return composite_verdict(Reason::DivisibleBy3);
    }

    OddModulus m(n);
    m.attach_counter(counter);
    const std::uint64_t k = m.k();

    if (m.residue_class() == 2) {
        // n = 3k + 2: conditions x = 1, y = 0, z = 2^k, with r = 2
        const Residue r(2, m);
        PellTriple t = power_of_generator(m, r, n);
        if (t.x().value() != 1) {
            return composite_verdict(Reason::CondX, 2);
        }
        if (t.y().value() != 0) {
            return composite_verdict(Reason::CondY, 2);
        }
        if (t.z() != powmod(r, k)) {
            return composite_verdict(Reason::CondZ, 2);
        }
        return prime_verdict(2);
    }

    // n = 3k + 1: r is the smallest non-cube; finding none proves n composite
    std::optional<Residue> r = find_smallest_noncube(m);
    if (!r) {
        return composite_verdict(Reason::NoNonCubeFound);
    }
    const std::uint64_t r_value = r->value();
    PellTriple t = power_of_generator(m, *r, n);
    if (t.x().value() != 1) {
        return composite_verdict(Reason::CondX, r_value);
    }
    if (t.y() != powmod(*r, k)) {
        return composite_verdict(Reason::CondY, r_value);
    }
    if (t.z().value() != 0) {
        return composite_verdict(Reason::CondZ, r_value);
    }
    if (!drop_quadratic_condition) {
        // y + y^2 = -1 mod n, with -1 represented as n - 1
        Residue q = addmod(t.y(), mulmod(t.y(), t.y()));
        if (q.value() != n - 1) {
            return composite_verdict(Reason::CondQuadratic, r_value);
        }
    }
    return prime_verdict(r_value);
}

} // namespace detail

/// The linear test: necessary primality conditions on the n-th power of
/// the generator triple. Composite verdicts name the first failed
/// condition in the fixed order x, y, z, quadratic.
inline Verdict pell_test(std::uint64_t n, MulCounter* counter = nullptr)
{
    return detail::pell_test_impl(n, false, counter);
}

/// pell_test with the y + y^2 = -1 check optionally skipped. Exists to
/// reproduce the false positives that the fourth condition eliminates.
inline Verdict pell_test_variant(std::uint64_t n, bool drop_quadratic_condition,
                                 MulCounter* counter = nullptr)
{
    return detail::pell_test_impl(n, drop_quadratic_condition, counter);
}

/// Composed test: table lookup for odd primes below 1000, trial division
/// by them, Fermat probable-prime check in base 2, then the linear test.
inline Verdict strong_test(std::uint64_t n, MulCounter* counter = nullptr)
{
    if (n <= 2 || n % 2 == 0) {
        throw std::invalid_argument("strong_test: n must be odd and > 2");
    }
    for (std::uint16_t q : kSearchPrimes) {
        if (q == 2) {
            continue;
        }
        if (n == q) {
            return Verdict{Outcome::Prime, Reason::Passed, std::nullopt};
        }
        if (n % q == 0) {
            return detail::composite_verdict(Reason::SmallFactor);
        }
    }
    {
        OddModulus m(n);  // n > 3, odd, 3 now known not to divide n
        m.attach_counter(counter);
        if (powmod(Residue(2, m), n - 1).value() != 1) {
            return detail::composite_verdict(Reason::FermatBase2);
        }
    }
    return pell_test(n, counter);
}

} // namespace pellprime
