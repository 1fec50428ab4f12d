#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pellprime/modmath.hpp"

namespace pellprime {

/// Norm of the class [x:y:z]: x^3 - 3xyzr + y^3 r + z^3 r^2 mod p.
inline Residue norm(const Residue& x, const Residue& y, const Residue& z, const Residue& r)
{
    Residue x3 = mulmod(mulmod(x, x), x);
    Residue y3r = mulmod(mulmod(mulmod(y, y), y), r);
    Residue z3r2 = mulmod(mulmod(mulmod(mulmod(z, z), z), r), r);
    Residue mixed = mulmod(mulmod(mulmod(Residue(3, x.modulus()), x), y), mulmod(z, r));
    return submod(addmod(addmod(x3, y3r), z3r2), mixed);
}

/// Equivalence class [x:y:z] of a nonzero-norm triple mod a prime p,
/// together with the product parameter r. Comparisons are always between
/// canonical representatives; raw-triple equality is not exposed.
///
/// This layer re-derives every formula instead of delegating to the triple
/// product used by the primality test, so the two can cross-validate.
class ProjectivePoint {
public:
    ProjectivePoint(Residue x, Residue y, Residue z, Residue r)
        : x_(x), y_(y), z_(z), r_(r)
    {
        const std::uint64_t p = x.modulus().value();
        if (y.modulus().value() != p || z.modulus().value() != p || r.modulus().value() != p) {
            throw std::invalid_argument("ProjectivePoint: components use different moduli");
        }
        if (r.value() == 0 || r.value() == p - 1) {
            throw std::invalid_argument("ProjectivePoint: r must not be 0 or p-1");
        }
        if (norm(x, y, z, r).value() == 0) {
            throw std::invalid_argument("ProjectivePoint: zero norm, not a valid point");
        }
        canonical_ = compute_canonical_flag();
    }

    static ProjectivePoint identity(const OddModulus& p, const Residue& r)
    {
        return ProjectivePoint(Residue(1, p), Residue(0, p), Residue(0, p), r);
    }

    static ProjectivePoint generator(const OddModulus& p, const Residue& r)
    {
        return ProjectivePoint(Residue(1, p), Residue(1, p), Residue(0, p), r);
    }

    const Residue& x() const { return x_; }
    const Residue& y() const { return y_; }
    const Residue& z() const { return z_; }
    const Residue& r() const { return r_; }
    bool canonical() const { return canonical_; }

private:
    bool compute_canonical_flag() const
    {
        if (z_.value() == 1) {
            return true;
        }
        if (z_.value() == 0 && y_.value() == 1) {
            return true;
        }
        return z_.value() == 0 && y_.value() == 0 && x_.value() == 1;
    }

    Residue x_, y_, z_, r_;
    bool canonical_;
};

namespace detail {

// v^(p-2) mod p; p is prime throughout this module.
inline Residue invert(const Residue& v)
{
    if (v.value() == 0) {
        throw std::invalid_argument("invert: zero has no inverse");
    }
    return powmod(v, v.modulus().value() - 2);
}

} // namespace detail

/// Canonical representative: scale by z^-1 when z != 0, else by y^-1 when
/// y != 0, else by x^-1. Idempotent.
inline ProjectivePoint canonicalize(const ProjectivePoint& pt)
{
    if (pt.canonical()) {
        return pt;
    }
    Residue scale = pt.z().value() != 0 ? detail::invert(pt.z())
                  : pt.y().value() != 0 ? detail::invert(pt.y())
                                        : detail::invert(pt.x());
    return ProjectivePoint(mulmod(pt.x(), scale), mulmod(pt.y(), scale),
                           mulmod(pt.z(), scale), pt.r());
}

inline bool operator==(const ProjectivePoint& a, const ProjectivePoint& b)
{
    if (a.x().modulus().value() != b.x().modulus().value() || a.r() != b.r()) {
        return false;
    }
    ProjectivePoint ca = canonicalize(a);
    ProjectivePoint cb = canonicalize(b);
    return ca.x() == cb.x() && ca.y() == cb.y() && ca.z() == cb.z();
}

inline bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

/// Group product, canonicalized.
inline ProjectivePoint proj_mul(const ProjectivePoint& a, const ProjectivePoint& b)
{
    if (a.x().modulus().value() != b.x().modulus().value() || a.r() != b.r()) {
        throw std::invalid_argument("proj_mul: operands use different moduli or parameters");
    }
    const Residue& r = a.r();
    Residue x = addmod(mulmod(a.x(), b.x()),
                       mulmod(r, addmod(mulmod(a.y(), b.z()), mulmod(a.z(), b.y()))));
    Residue y = addmod(addmod(mulmod(a.x(), b.y()), mulmod(a.y(), b.x())),
                       mulmod(r, mulmod(a.z(), b.z())));
    Residue z = addmod(addmod(mulmod(a.x(), b.z()), mulmod(a.y(), b.y())),
                       mulmod(a.z(), b.x()));
    return canonicalize(ProjectivePoint(x, y, z, r));
}

/// Inverse [x^2 - ryz : rz^2 - xy : y^2 - xz], canonicalized.
inline ProjectivePoint proj_inverse(const ProjectivePoint& a)
{
    const Residue& r = a.r();
    Residue x = submod(mulmod(a.x(), a.x()), mulmod(r, mulmod(a.y(), a.z())));
    Residue y = submod(mulmod(r, mulmod(a.z(), a.z())), mulmod(a.x(), a.y()));
    Residue z = submod(mulmod(a.y(), a.y()), mulmod(a.x(), a.z()));
    return canonicalize(ProjectivePoint(x, y, z, r));
}

/// e-th power under the group product; e = 0 gives the identity.
inline ProjectivePoint proj_pow(const ProjectivePoint& a, std::uint64_t e)
{
    ProjectivePoint acc = ProjectivePoint::identity(a.x().modulus(), a.r());
    ProjectivePoint base = canonicalize(a);
    while (e != 0) {
        if (e & 1) {
            acc = proj_mul(acc, base);
        }
        e >>= 1;
        if (e != 0) {
            base = proj_mul(base, base);
        }
    }
    return acc;
}

/// All canonical points for a prime p < 10^4. For p = 1 mod 3 (r must be
/// a non-cube) the set is {[x:y:1]} u {[x:1:0]} u {[1:0:0]}, p^2 + p + 1
/// points. For p = 2 mod 3 the family built from the cube root s of r is
/// excluded, leaving p^2 - 1 points.
inline std::vector<ProjectivePoint> enumerate_points(const OddModulus& p, const Residue& r)
{
    const std::uint64_t pv = p.value();
    if (pv >= 10000) {
        throw std::invalid_argument("enumerate_points: enumeration is desk-scale only (p < 10^4)");
    }
    if (r.value() == 0 || r.value() == pv - 1) {
        throw std::invalid_argument("enumerate_points: r must not be 0 or p-1");
    }
    if (p.residue_class() == 1 && powmod(r, (pv - 1) / 3).value() == 1) {
        throw std::invalid_argument("enumerate_points: r must be a non-cube when p = 1 mod 3");
    }

    std::vector<ProjectivePoint> points;
    if (p.residue_class() == 1) {
        points.reserve(pv * pv + pv + 1);
        for (std::uint64_t y = 0; y < pv; ++y) {
            for (std::uint64_t x = 0; x < pv; ++x) {
                points.emplace_back(Residue(x, p), Residue(y, p), Residue(1, p), r);
            }
        }
        for (std::uint64_t x = 0; x < pv; ++x) {
            points.emplace_back(Residue(x, p), Residue(1, p), Residue(0, p), r);
        }
        points.push_back(ProjectivePoint::identity(p, r));
        return points;
    }

    // p = 2 mod 3: every element is a cube; find the unique s with s^3 = r.
    std::uint64_t s = 0;
    for (std::uint64_t c = 0; c < pv; ++c) {
        if (mulmod(mulmod(Residue(c, p), Residue(c, p)), Residue(c, p)).value() == r.value()) {
            s = c;
            break;
        }
    }
    const Residue s_res(s, p);
    const std::uint64_t s_squared = mulmod(s_res, s_res).value();

    points.reserve(pv * pv - 1);
    for (std::uint64_t y = 0; y < pv; ++y) {
        // the family member [-(y+s)s : y : 1]
        const std::uint64_t excluded_x =
            negmod(mulmod(addmod(Residue(y, p), s_res), s_res)).value();
        for (std::uint64_t x = 0; x < pv; ++x) {
            if (x == excluded_x) {
                continue;
            }
            if (y == s && x == s_squared) {
                continue;  // [s^2 : s : 1]
            }
            points.emplace_back(Residue(x, p), Residue(y, p), Residue(1, p), r);
        }
    }
    const std::uint64_t minus_s = negmod(s_res).value();
    for (std::uint64_t x = 0; x < pv; ++x) {
        if (x == minus_s) {
            continue;  // [-s : 1 : 0]
        }
        points.emplace_back(Residue(x, p), Residue(1, p), Residue(0, p), r);
    }
    points.push_back(ProjectivePoint::identity(p, r));
    return points;
}

} // namespace pellprime
