#include "wolmor/modmath.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wolmor {

u64 powmod64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

u128 mulmod128(u128 a, u128 b, u128 m) {
    if (m <= ~u64(0)) return mulmod64(u64(a % m), u64(b % m), u64(m));
    a %= m;
    b %= m;
    if (a < b) std::swap(a, b);
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m || r < a) r -= m;
        }
        u128 next = a << 1;
        if (next >= m || next < a) next -= m;
        a = next;
        b >>= 1;
    }
    return r;
}

u128 powmod128(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    if (m <= ~u64(0)) return powmod64(u64(base % m), u64(exp), u64(m));
    u128 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod128(r, base, m);
        base = mulmod128(base, base, m);
        exp >>= 1;
    }
    return r;
}

u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace {

// Extended gcd on i128; inputs must fit signed 128-bit, i.e. moduli < 2^126.
i128 egcd(i128 a, i128 b, i128& x, i128& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i128 x1, y1;
    i128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::optional<u64> try_inverse_u64(u64 a, u64 m) {
    auto r = try_inverse_u128(a, m);
    if (!r) return std::nullopt;
    return u64(*r);
}

std::optional<u128> try_inverse_u128(u128 a, u128 m) {
    if (m == 1) return u128(0);
    a %= m;
    i128 x, y;
    i128 g = egcd(i128(a), i128(m), x, y);
    if (g != 1) return std::nullopt;
    i128 inv = x % i128(m);
    if (inv < 0) inv += i128(m);
    return u128(inv);
}

u64 inverse_u64(u64 a, u64 m) { return u64(inverse_u128(a, m)); }

u128 inverse_u128(u128 a, u128 m) {
    auto r = try_inverse_u128(a, m);
    if (!r) throw NotInvertibleError(gcd_u128(a % m, m), a % m, m);
    return *r;
}

std::vector<u64> inverse_table(u64 n, u64 modulus, u64 p) {
    assert(n <= p);
    (void)p;
    std::vector<u64> inv(n, 0);
    if (n > 1) inv[1] = 1;
    for (u64 i = 2; i < n; ++i) {
        u64 q = modulus / i, r = modulus % i;
        // r < i and r is coprime to the modulus (r = 0 only when i divides p^e,
        // impossible for 1 < i < p), so inv[r] is already valid.
        inv[i] = mulmod64(modulus - q, inv[r], modulus);
    }
    return inv;
}

std::vector<u64> batch_inverse(std::span<const u64> vals, u64 m) {
    std::vector<u64> out(vals.size());
    if (vals.empty()) return out;
    u64 acc = 1;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out[i] = acc;  // product of vals[0..i)
        acc = mulmod64(acc, vals[i] % m, m);
    }
    u64 inv_all = inverse_u64(acc, m);
    for (std::size_t i = vals.size(); i-- > 0;) {
        out[i] = mulmod64(out[i], inv_all, m);
        inv_all = mulmod64(inv_all, vals[i] % m, m);
    }
    return out;
}

Residue mod_pow(const Residue& base, u128 exp) { return base.pow(exp); }

Residue mod_inverse(u128 a, u128 m) { return Residue(inverse_u128(a % m, m), m); }

bool WideResidue::is_one() const {
    if (modulus.fits_u128() && modulus.to_u128() == 1) return true;
    return value == Nat(u64(1));
}

// ---------------------------------------------------------------------------

namespace {

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // This witness set is deterministic for the whole 64-bit range.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

namespace {

u64 rho_brent(u64 n) {
    // n odd composite, no factor below 10^6.
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        auto step = [&](u64 v) { return addmod64(mulmod64(v, v, n), c, n); };
        while (d == 1) {
            if (power == lam) {
                x = y;
                power <<= 1;
                lam = 0;
            }
            y = step(y);
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = rho_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factor_odd(u64 n) {
    if (n < 3) throw std::invalid_argument("factor_odd requires n >= 3");
    if (n % 2 == 0) throw EvenInputError("factor_odd requires odd n");
    std::vector<u64> primes;
    for (u64 d = 3; d <= 999'983 && d * d <= n; d += 2) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

u128 pow_u128_checked(u64 base, unsigned exp) {
    const u128 cap = u128(1) << 126;
    u128 m = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (m >= cap / (base ? base : 1) + 1) throw std::overflow_error("prime power exceeds 2^126");
        m *= base;
    }
    return m;
}

PrimePowerModulus PrimePowerModulus::make(u64 p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1 || e > 4) throw std::invalid_argument("exponent must be in 1..4");
    return PrimePowerModulus{p, e, pow_u128_checked(p, e)};
}

Residue crt_combine(std::span<const Residue> parts) {
    if (parts.empty()) throw std::invalid_argument("crt_combine needs at least one residue");
    Residue acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Residue& nxt = parts[i];
        u128 g = gcd_u128(acc.modulus, nxt.modulus);
        if (g != 1) throw NonCoprimeModuliError(g);
        const u128 cap = u128(1) << 126;
        if (nxt.modulus != 0 && acc.modulus > cap / nxt.modulus)
            throw std::overflow_error("crt product exceeds 2^126");
        u128 prod = acc.modulus * nxt.modulus;
        // x = acc + acc.modulus * t with t = (nxt - acc) / acc.modulus mod nxt.modulus
        u128 diff = submod128(nxt.value % nxt.modulus, acc.value % nxt.modulus, nxt.modulus);
        u128 t = mulmod128(diff, inverse_u128(acc.modulus % nxt.modulus, nxt.modulus), nxt.modulus);
        u128 x = acc.value + mulmod128(acc.modulus, t, prod) % prod;
        if (x >= prod) x -= prod;
        acc = Residue(x, prod);
    }
    return acc;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    return out;
}

std::vector<bool> prime_segment(u64 lo, u64 hi) {
    std::vector<bool> seg(hi > lo ? hi - lo : 0, true);
    if (hi <= lo) return seg;
    u64 root = 1;
    while ((root + 1) * (root + 1) <= hi - 1) ++root;
    static thread_local std::vector<u64> base;
    static thread_local u64 base_limit = 0;
    if (root > base_limit) {
        base = primes_up_to(root);
        base_limit = root;
    }
    for (u64 p : base) {
        if (p * p >= hi) break;
        u64 start = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 j = start; j < hi; j += p) seg[j - lo] = false;
    }
    for (u64 v = lo; v < std::min(hi, u64(2)); ++v) seg[v - lo] = false;
    return seg;
}

u64 mix64(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace wolmor
