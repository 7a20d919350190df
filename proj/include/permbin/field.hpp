#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "permbin/errors.hpp"

namespace permbin {

using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Canonical element encoding: an integer in [0, q).
/// Prime fields store the residue; extensions pack the coefficient vector
/// base p (digit i = coefficient of x^i), so equality of elements is
/// equality of reps and elements order/hash like plain integers.
using Elem = std::uint64_t;

bool is_prime(u64 n);
std::vector<u32> primes_in_range(u32 lo, u32 hi);
std::vector<std::pair<u64, unsigned>> trial_factorize(u64 n);

namespace detail {

struct FieldData {
    u32 p = 0;
    u32 e = 1;
    u64 q = 0;
    std::vector<u32> modulus;    // e+1 coefficients, constant term first; empty for e == 1
    std::vector<u16> mul_table;  // q*q entries for e > 1 (q <= 1024)
};

}  // namespace detail

/// Immutable descriptor of F_q, q = p^e.  Prime fields support p < 2^31;
/// extensions are capped at q <= 1024 and carry a precomputed
/// multiplication table.  Cheap to copy, safe to share across threads.
class Field {
  public:
    Field(u32 p, u32 e);

    u32 p() const { return d_->p; }
    u32 ext_degree() const { return d_->e; }
    u64 q() const { return d_->q; }
    bool is_prime_field() const { return d_->e == 1; }
    const std::vector<u32>& modulus() const { return d_->modulus; }

    Elem add(Elem x, Elem y) const {
        if (d_->e == 1) {
            Elem s = x + y;
            return s >= d_->q ? s - d_->q : s;
        }
        return add_ext(x, y);
    }

    Elem neg(Elem x) const {
        if (d_->e == 1) return x == 0 ? 0 : d_->q - x;
        return neg_ext(x);
    }

    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    Elem mul(Elem x, Elem y) const {
        if (d_->e == 1) return (x * y) % d_->q;
        return d_->mul_table[x * d_->q + y];
    }

    /// Square-and-multiply; pow(x, 0) = 1 for every x, including 0.
    Elem pow(Elem x, u64 n) const {
        Elem r = 1;
        while (n) {
            if (n & 1) r = mul(r, x);
            x = mul(x, x);
            n >>= 1;
        }
        return r;
    }

    Elem inv(Elem x) const {
        if (x == 0) throw DivisionByZero("inverse of zero");
        return pow(x, d_->q - 2);
    }

    /// The q elements in ascending rep order.
    std::vector<Elem> elements() const;

    bool operator==(const Field& o) const {
        return d_ == o.d_ || (d_->p == o.d_->p && d_->e == o.d_->e && d_->modulus == o.d_->modulus);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    Elem add_ext(Elem x, Elem y) const;
    Elem neg_ext(Elem x) const;

    std::shared_ptr<const detail::FieldData> d_;
};

inline Field make_field(u32 p, u32 e) { return Field(p, e); }

/// Smallest element (by rep) of multiplicative order q-1.
Elem smallest_generator(const Field& f);

}  // namespace permbin
