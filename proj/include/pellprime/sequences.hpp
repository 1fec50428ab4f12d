#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace pellprime {

using BigInt = boost::multiprecision::cpp_int;

/// Which of the three companion sequences: X starts (1,1,1), Y starts
/// (0,1,2), Z starts (0,0,1); all recur as
/// s_{i+3} = 3 s_{i+2} - 3 s_{i+1} + (r+1) s_i.
enum class SequenceKind { X, Y, Z };

namespace seqdetail {

// Exact integer coefficient ring.
struct ExactOps {
    using Value = BigInt;
    Value from_int(std::int64_t v) const { return Value(v); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
};

// Residues mod n with local arithmetic. This module cross-checks the
// production triple powering, so it does not reuse its helpers.
struct ModularOps {
    std::uint64_t n;
    using Value = std::uint64_t;
    Value from_int(std::int64_t v) const
    {
        if (v >= 0) {
            return static_cast<std::uint64_t>(v) % n;
        }
        return sub(0, static_cast<std::uint64_t>(-v) % n);
    }
    Value add(Value a, Value b) const
    {
        Value s = a + b;
        if (s < a || s >= n) {
            s -= n;
        }
        return s;
    }
    Value sub(Value a, Value b) const { return a >= b ? a - b : n - (b - a); }
    Value mul(Value a, Value b) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    }
};

} // namespace seqdetail

/// Rolling window (s_i, s_{i+1}, s_{i+2}) of one sequence; advance() shifts
/// the window one step along the recurrence. The parameter is passed as a
/// ring value so the modular flavour accepts any residue.
template <class Ops>
class SequenceState {
public:
    using Value = typename Ops::Value;

    SequenceState(Ops ops, Value r, SequenceKind kind)
        : ops_(ops),
          three_(ops.from_int(3)),
          r_plus_1_(ops.add(r, ops.from_int(1))),
          index_(0)
    {
        switch (kind) {
        case SequenceKind::X:
            window_ = {ops_.from_int(1), ops_.from_int(1), ops_.from_int(1)};
            break;
        case SequenceKind::Y:
            window_ = {ops_.from_int(0), ops_.from_int(1), ops_.from_int(2)};
            break;
        case SequenceKind::Z:
            window_ = {ops_.from_int(0), ops_.from_int(0), ops_.from_int(1)};
            break;
        }
    }

    /// s_i for the current index i.
    const Value& front() const { return window_[0]; }
    std::uint64_t index() const { return index_; }

    void advance()
    {
        Value next = ops_.add(
            ops_.sub(ops_.mul(three_, window_[2]), ops_.mul(three_, window_[1])),
            ops_.mul(r_plus_1_, window_[0]));
        window_[0] = window_[1];
        window_[1] = window_[2];
        window_[2] = next;
        ++index_;
    }

private:
    Ops ops_;
    Value three_;
    Value r_plus_1_;
    std::array<Value, 3> window_;
    std::uint64_t index_;
};

/// i-th term over the integers (term sizes grow exponentially; oracle use only).
inline BigInt seq_eval(SequenceKind kind, std::int64_t r, std::uint64_t index)
{
    seqdetail::ExactOps ops;
    SequenceState<seqdetail::ExactOps> st(ops, ops.from_int(r), kind);
    while (st.index() < index) {
        st.advance();
    }
    return st.front();
}

/// i-th term mod n.
inline std::uint64_t seq_eval_mod(SequenceKind kind, std::uint64_t r, std::uint64_t index,
                                  std::uint64_t n)
{
    seqdetail::ModularOps ops{n};
    SequenceState<seqdetail::ModularOps> st(ops, r % n, kind);
    while (st.index() < index) {
        st.advance();
    }
    return st.front();
}

namespace seqdetail {

template <class Ops>
struct Mat3 {
    using Value = typename Ops::Value;
    std::array<std::array<Value, 3>, 3> a;

    static Mat3 identity(const Ops& ops)
    {
        return Mat3{{{{ops.from_int(1), ops.from_int(0), ops.from_int(0)},
                      {ops.from_int(0), ops.from_int(1), ops.from_int(0)},
                      {ops.from_int(0), ops.from_int(0), ops.from_int(1)}}}};
    }
};

template <class Ops>
Mat3<Ops> mat_mul(const Ops& ops, const Mat3<Ops>& lhs, const Mat3<Ops>& rhs)
{
    Mat3<Ops> out = Mat3<Ops>::identity(ops);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            typename Ops::Value acc = ops.from_int(0);
            for (int t = 0; t < 3; ++t) {
                acc = ops.add(acc, ops.mul(lhs.a[i][t], rhs.a[t][j]));
            }
            out.a[i][j] = acc;
        }
    }
    return out;
}

template <class Ops>
Mat3<Ops> mat_pow(const Ops& ops, Mat3<Ops> base, std::uint64_t k)
{
    Mat3<Ops> acc = Mat3<Ops>::identity(ops);
    while (k != 0) {
        if (k & 1) {
            acc = mat_mul(ops, acc, base);
        }
        k >>= 1;
        if (k != 0) {
            base = mat_mul(ops, base, base);
        }
    }
    return acc;
}

// M = ((1,0,r),(1,1,0),(0,1,1)); M^k (1,0,0)^T tracks the generator powers.
template <class Ops>
std::array<typename Ops::Value, 3> companion_power(const Ops& ops,
                                                   typename Ops::Value r_value,
                                                   std::uint64_t k)
{
    Mat3<Ops> m{{{{ops.from_int(1), ops.from_int(0), r_value},
                  {ops.from_int(1), ops.from_int(1), ops.from_int(0)},
                  {ops.from_int(0), ops.from_int(1), ops.from_int(1)}}}};
    Mat3<Ops> p = mat_pow(ops, m, k);
    return {p.a[0][0], p.a[1][0], p.a[2][0]};
}

} // namespace seqdetail

/// M^k (1,0,0)^T over the integers.
inline std::array<BigInt, 3> matrix_power_vector(std::int64_t r, std::uint64_t k)
{
    seqdetail::ExactOps ops;
    return seqdetail::companion_power(ops, ops.from_int(r), k);
}

/// M^k (1,0,0)^T mod n.
inline std::array<std::uint64_t, 3> matrix_power_vector_mod(std::uint64_t r, std::uint64_t k,
                                                            std::uint64_t n)
{
    seqdetail::ModularOps ops{n};
    return seqdetail::companion_power(ops, r % n, k);
}

/// Smallest m in [1, p] with p dividing the m-th term, or empty when no
/// such m exists in that range. The identically zero seed term Z_1 = 0 is
/// not counted: it vanishes for every modulus and carries no information.
/// For the guaranteed combinations (Z with p = 1 mod 3, Y with
/// p = 2 mod 3) a miss is an implementation bug and throws.
inline std::optional<std::uint64_t> rank_of_appearance(SequenceKind kind, std::uint64_t r,
                                                       std::uint64_t p)
{
    if (kind == SequenceKind::X) {
        throw std::invalid_argument("rank_of_appearance: defined for Y and Z only");
    }
    if (p <= 3) {
        throw std::invalid_argument("rank_of_appearance: p must be a prime > 3");
    }
    seqdetail::ModularOps ops{p};
    SequenceState<seqdetail::ModularOps> st(ops, r % p, kind);
    const std::uint64_t first = kind == SequenceKind::Z ? 2 : 1;
    for (std::uint64_t m = first; m <= p; ++m) {
        while (st.index() < m) {
            st.advance();
        }
        if (st.front() == 0) {
            return m;
        }
    }
    const bool guaranteed = (kind == SequenceKind::Z && p % 3 == 1) ||
                            (kind == SequenceKind::Y && p % 3 == 2);
    if (guaranteed) {
        throw std::logic_error("rank_of_appearance: no rank <= p on a guaranteed branch");
    }
    return std::nullopt;
}

} // namespace pellprime
