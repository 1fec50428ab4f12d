#pragma once

#include <cstdint>
#include <stdexcept>

namespace pellprime {

/// Counts modular multiplications. Attach one to an OddModulus to measure
/// the operation cost of a computation; counters are per-context objects
/// and are never shared between threads implicitly.
struct MulCounter {
    std::uint64_t mulmods = 0;
};

namespace detail {

// (a * b) % n for a, b < n < 2^64. Single-width fast path when the
// product fits 64 bits, 128-bit intermediate otherwise.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    if (n <= 0xffffffffull) {
        return (a * b) % n;
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    // a + b can wrap around 2^64 when n is large
    std::uint64_t s = a + b;
    if (s < a || s >= n) {
        s -= n;
    }
    return s;
}

inline std::uint64_t submod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return a >= b ? a - b : n - (b - a);
}

} // namespace detail

/// An odd modulus n > 3 not divisible by 3, carrying the precomputed
/// quotient k = floor(n/3) and the class n mod 3. Construction rejects
/// anything else. The modulus object owns the optional instrumentation
/// counter; residues keep a reference to it, so it must outlive them.
class OddModulus {
public:
    explicit OddModulus(std::uint64_t n)
        : n_(n), k_(n / 3), residue_class_(static_cast<unsigned>(n % 3))
    {
        if (n <= 3 || n % 2 == 0) {
            throw std::invalid_argument("OddModulus: n must be odd and > 3");
        }
        if (residue_class_ == 0) {
            throw std::invalid_argument("OddModulus: n must not be divisible by 3");
        }
    }

    std::uint64_t value() const { return n_; }

    /// Quotient of the integer division of n by 3.
    std::uint64_t k() const { return k_; }

    /// n mod 3, either 1 or 2.
    unsigned residue_class() const { return residue_class_; }

    void attach_counter(MulCounter* counter) { counter_ = counter; }
    MulCounter* counter() const { return counter_; }

private:
    std::uint64_t n_;
    std::uint64_t k_;
    unsigned residue_class_;
    MulCounter* counter_ = nullptr;
};

/// A fully reduced value mod n. Every operation returns reduced values;
/// there is no lazy reduction.
class Residue {
public:
    Residue(std::uint64_t value, const OddModulus& modulus)
        : value_(value % modulus.value()), modulus_(&modulus)
    {
    }

    std::uint64_t value() const { return value_; }
    const OddModulus& modulus() const { return *modulus_; }

    bool operator==(const Residue& other) const
    {
        return value_ == other.value_ && modulus_->value() == other.modulus_->value();
    }
    bool operator!=(const Residue& other) const { return !(*this == other); }

private:
    std::uint64_t value_;
    const OddModulus* modulus_;
};

namespace detail {

inline void require_same_modulus(const Residue& a, const Residue& b)
{
    if (a.modulus().value() != b.modulus().value()) {
        throw std::invalid_argument("residue operands use different moduli");
    }
}

} // namespace detail

inline Residue mulmod(const Residue& a, const Residue& b)
{
    detail::require_same_modulus(a, b);
    const OddModulus& m = a.modulus();
    if (MulCounter* c = m.counter()) {
        ++c->mulmods;
    }
    return Residue(detail::mulmod_u64(a.value(), b.value(), m.value()), m);
}

inline Residue addmod(const Residue& a, const Residue& b)
{
    detail::require_same_modulus(a, b);
    const OddModulus& m = a.modulus();
    return Residue(detail::addmod_u64(a.value(), b.value(), m.value()), m);
}

inline Residue submod(const Residue& a, const Residue& b)
{
    detail::require_same_modulus(a, b);
    const OddModulus& m = a.modulus();
    return Residue(detail::submod_u64(a.value(), b.value(), m.value()), m);
}

inline Residue negmod(const Residue& a)
{
    const OddModulus& m = a.modulus();
    return Residue(a.value() == 0 ? 0 : m.value() - a.value(), m);
}

/// base^e mod n by binary exponentiation; powmod(b, 0) == 1.
inline Residue powmod(const Residue& base, std::uint64_t e)
{
    const OddModulus& m = base.modulus();
    Residue acc(1, m);
    Residue b = base;
    while (e != 0) {
        if (e & 1) {
            acc = mulmod(acc, b);
        }
        e >>= 1;
        if (e != 0) {
            b = mulmod(b, b);
        }
    }
    return acc;
}

} // namespace pellprime
