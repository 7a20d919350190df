#include "permbin/field.hpp"

#include <algorithm>
#include <numeric>

namespace permbin {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<u32> primes_in_range(u32 lo, u32 hi) {
    std::vector<u32> out;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(static_cast<u32>(n));
    return out;
}

std::vector<std::pair<u64, unsigned>> trial_factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned m = 0;
            while (n % d == 0) {
                n /= d;
                ++m;
            }
            out.emplace_back(d, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

using Digits = std::vector<u32>;  // coefficients mod p, constant term first

Digits unpack(u64 rep, u32 p, u32 e) {
    Digits d(e);
    for (u32 i = 0; i < e; ++i) {
        d[i] = static_cast<u32>(rep % p);
        rep /= p;
    }
    return d;
}

u64 pack(const Digits& d, u32 p) {
    u64 rep = 0;
    for (std::size_t i = d.size(); i-- > 0;) rep = rep * p + d[i];
    return rep;
}

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Dense polynomial helpers over F_p used only for modulus selection.
Digits poly_mul_mod(const Digits& a, const Digits& b, const Digits& mod, u32 p) {
    if (a.empty() || b.empty()) return {};
    Digits prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<u32>((prod[i + j] + u64(a[i]) * b[j]) % p);
    // reduce modulo the monic polynomial `mod`
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg;) {
        u32 c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) {
            u64 sub = u64(c) * mod[j] % p;
            prod[i - deg + j] = static_cast<u32>((prod[i - deg + j] + p - sub) % p);
        }
    }
    prod.resize(deg);
    trim(prod);
    return prod;
}

Digits poly_pow_mod(Digits base, u64 n, const Digits& mod, u32 p) {
    Digits r{1};
    while (n) {
        if (n & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        n >>= 1;
    }
    return r;
}

Digits poly_rem(Digits a, const Digits& b, u32 p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const u32 lead_inv = [&] {
        // b is not required monic here; invert its leading coefficient mod p
        u32 lc = b.back(), r = 1, base = lc, n = p - 2;
        while (n) {
            if (n & 1) r = static_cast<u32>(u64(r) * base % p);
            base = static_cast<u32>(u64(base) * base % p);
            n >>= 1;
        }
        return r;
    }();
    while (a.size() > db) {
        u32 c = static_cast<u32>(u64(a.back()) * lead_inv % p);
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 sub = u64(c) * b[j] % p;
            a[shift + j] = static_cast<u32>((a[shift + j] + p - sub) % p);
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Digits poly_gcd(Digits a, Digits b, u32 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Digits r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

u32 poly_eval(const Digits& f, u32 x, u32 p) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return static_cast<u32>(acc);
}

// Irreducibility over F_p: no roots, and for degree >= 4 no factor of
// degree <= e/2 (detected via gcd with x^(p^i) - x, whose irreducible
// factors are exactly those of degree dividing i).
bool is_irreducible(const Digits& f, u32 p) {
    const std::size_t e = f.size() - 1;
    for (u32 x = 0; x < p; ++x)
        if (poly_eval(f, x, p) == 0) return false;
    if (e >= 4) {
        Digits xp = poly_pow_mod(Digits{0, 1}, p, f, p);  // x^p mod f
        Digits t = xp;
        for (std::size_t i = 2; i <= e / 2; ++i) {
            t = poly_pow_mod(t, p, f, p);  // x^(p^i) mod f
            Digits diff = t;
            diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
            diff[1] = static_cast<u32>((diff[1] + p - 1) % p);  // t - x
            trim(diff);
            Digits g = poly_gcd(f, diff, p);
            if (g.size() != 1) return false;
        }
    }
    return true;
}

std::shared_ptr<detail::FieldData> build(u32 p, u32 e) {
    if (e < 1) throw BadParameters("extension degree must be >= 1");
    if (p < 2) throw CompositeCharacteristic("characteristic must be a prime >= 2");
    constexpr u64 kPrimeBound = u64(1) << 31;
    constexpr u64 kExtBound = 1024;
    u64 q = 1;
    for (u32 i = 0; i < e; ++i) {
        q *= p;
        if ((e == 1 && q > kPrimeBound) || (e > 1 && q > kExtBound))
            throw FieldTooLarge("field order exceeds supported bound");
    }
    if (!is_prime(p)) throw CompositeCharacteristic("characteristic is not prime");

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->e = e;
    data->q = q;
    if (e == 1) return data;

    // Deterministic modulus: scan monic polynomials x^e + (lower part) with
    // the lower coefficient vector enumerated in ascending packed order.
    Digits mod;
    for (u64 v = 0; v < q; ++v) {
        Digits cand = unpack(v, p, e);
        cand.push_back(1);
        if (is_irreducible(cand, p)) {
            mod = std::move(cand);
            break;
        }
    }
    data->modulus = mod;

    data->mul_table.resize(q * q);
    std::vector<Digits> reps(q);
    for (u64 r = 0; r < q; ++r) reps[r] = unpack(r, p, e);
    for (u64 x = 0; x < q; ++x) {
        for (u64 y = x; y < q; ++y) {
            Digits a = reps[x];
            Digits b = reps[y];
            trim(a);
            trim(b);
            u64 r = pack(poly_mul_mod(a, b, mod, p), p);
            data->mul_table[x * q + y] = static_cast<u16>(r);
            data->mul_table[y * q + x] = static_cast<u16>(r);
        }
    }
    return data;
}

}  // namespace

Field::Field(u32 p, u32 e) : d_(build(p, e)) {}

Elem Field::add_ext(Elem x, Elem y) const {
    const u32 p = d_->p;
    u64 out = 0, mult = 1;
    for (u32 i = 0; i < d_->e; ++i) {
        u64 s = (x % p + y % p) % p;
        out += s * mult;
        mult *= p;
        x /= p;
        y /= p;
    }
    return out;
}

Elem Field::neg_ext(Elem x) const {
    const u32 p = d_->p;
    u64 out = 0, mult = 1;
    for (u32 i = 0; i < d_->e; ++i) {
        u64 digit = x % p;
        out += (digit == 0 ? 0 : p - digit) * mult;
        mult *= p;
        x /= p;
    }
    return out;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> v(d_->q);
    std::iota(v.begin(), v.end(), Elem(0));
    return v;
}

Elem smallest_generator(const Field& f) {
    const u64 qm1 = f.q() - 1;
    if (qm1 == 1) return 1;
    const auto factors = trial_factorize(qm1);
    for (Elem x = 2; x < f.q(); ++x) {
        bool ok = true;
        for (const auto& [prime, mult] : factors) {
            (void)mult;
            if (f.pow(x, qm1 / prime) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    throw Error("multiplicative group has no generator; field construction is broken");
}

}  // namespace permbin
