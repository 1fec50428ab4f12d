#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "pellprime/modmath.hpp"

namespace pellprime {

/// A residue triple (x, y, z) mod n together with the product parameter r,
/// representing an element combined under the triple product below.
/// All four residues must share one modulus.
class PellTriple {
public:
    PellTriple(Residue x, Residue y, Residue z, Residue r)
        : x_(x), y_(y), z_(z), r_(r)
    {
        const std::uint64_t n = x.modulus().value();
        if (y.modulus().value() != n || z.modulus().value() != n || r.modulus().value() != n) {
            throw std::invalid_argument("PellTriple: components use different moduli");
        }
    }

    /// The generator (1, 1, 0). Rejects r in {0, n-1}: with those
    /// parameters the generator does not belong to the group.
    static PellTriple generator(const OddModulus& m, const Residue& r)
    {
        if (r.value() == 0 || r.value() == m.value() - 1) {
            throw std::invalid_argument("PellTriple::generator: r must not be 0 or n-1");
        }
        return PellTriple(Residue(1, m), Residue(1, m), Residue(0, m), r);
    }

    /// The multiplicative identity (1, 0, 0).
    static PellTriple identity(const OddModulus& m, const Residue& r)
    {
        return PellTriple(Residue(1, m), Residue(0, m), Residue(0, m), r);
    }

    const Residue& x() const { return x_; }
    const Residue& y() const { return y_; }
    const Residue& z() const { return z_; }
    const Residue& r() const { return r_; }

    bool operator==(const PellTriple& other) const
    {
        return x_ == other.x_ && y_ == other.y_ && z_ == other.z_ && r_ == other.r_;
    }
    bool operator!=(const PellTriple& other) const { return !(*this == other); }

private:
    Residue x_, y_, z_, r_;
};

namespace detail {

inline void require_same_parameter(const PellTriple& a, const PellTriple& b)
{
    if (a.x().modulus().value() != b.x().modulus().value() || a.r() != b.r()) {
        throw std::invalid_argument("triple operands use different moduli or parameters");
    }
}

} // namespace detail

/// Generic product of two triples:
///   (x1*x2 + r*(y1*z2 + z1*y2),
///    x1*y2 + y1*x2 + r*z1*z2,
///    x1*z2 + y1*y2 + z1*x2)
inline PellTriple triple_mul(const PellTriple& a, const PellTriple& b)
{
    detail::require_same_parameter(a, b);
    const Residue& r = a.r();
    Residue x = addmod(mulmod(a.x(), b.x()),
                       mulmod(r, addmod(mulmod(a.y(), b.z()), mulmod(a.z(), b.y()))));
    Residue y = addmod(addmod(mulmod(a.x(), b.y()), mulmod(a.y(), b.x())),
                       mulmod(r, mulmod(a.z(), b.z())));
    Residue z = addmod(addmod(mulmod(a.x(), b.z()), mulmod(a.y(), b.y())),
                       mulmod(a.z(), b.x()));
    return PellTriple(x, y, z, r);
}

/// Squaring specialization: (x^2 + 2ryz, 2xy + rz^2, 2xz + y^2).
/// Eight modular multiplications per call.
inline PellTriple step_square(const PellTriple& a)
{
    const Residue& r = a.r();
    Residue yz = mulmod(a.y(), a.z());
    Residue x = addmod(mulmod(a.x(), a.x()), mulmod(r, addmod(yz, yz)));
    Residue xy = mulmod(a.x(), a.y());
    Residue y = addmod(addmod(xy, xy), mulmod(r, mulmod(a.z(), a.z())));
    Residue xz = mulmod(a.x(), a.z());
    Residue z = addmod(addmod(xz, xz), mulmod(a.y(), a.y()));
    return PellTriple(x, y, z, r);
}

/// Left-multiplication by the generator: (1,1,0) * (x,y,z) = (x + rz, x + y, y + z).
/// One modular multiplication per call.
inline PellTriple step_mul_generator(const PellTriple& a)
{
    Residue x = addmod(a.x(), mulmod(a.r(), a.z()));
    Residue y = addmod(a.x(), a.y());
    Residue z = addmod(a.y(), a.z());
    return PellTriple(x, y, z, a.r());
}

/// e-th power of the generator (1,1,0) mod n, e >= 1, by left-to-right
/// square-and-multiply over the bits of e: after the leading bit, each
/// bit costs one squaring plus one generator step when the bit is set.
inline PellTriple power_of_generator(const OddModulus& m, const Residue& r, std::uint64_t e)
{
    if (e == 0) {
        throw std::invalid_argument("power_of_generator: e must be >= 1");
    }
    PellTriple acc = PellTriple::generator(m, r);
    const int bits = std::bit_width(e);
    for (int i = bits - 2; i >= 0; --i) {
        acc = step_square(acc);
        if ((e >> i) & 1) {
            acc = step_mul_generator(acc);
        }
    }
    return acc;
}

} // namespace pellprime
