#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wolmor/nat.hpp"

namespace wolmor {

// ---------------------------------------------------------------------------
// Errors

struct NotInvertibleError : std::runtime_error {
    NotInvertibleError(u128 g, u128 a, u128 m)
        : std::runtime_error("value " + to_string_u128(a) + " not invertible mod " +
                             to_string_u128(m) + " (gcd " + to_string_u128(g) + ")"),
          gcd(g) {}
    u128 gcd;
};

struct NonCoprimeModuliError : std::runtime_error {
    NonCoprimeModuliError(u128 g)
        : std::runtime_error("moduli share factor gcd " + to_string_u128(g)), gcd(g) {}
    u128 gcd;
};

struct IndexOutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCompositeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvenInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Word-level kernels

inline u64 mulmod64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 addmod64(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u64 submod64(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 powmod64(u64 base, u64 exp, u64 m);

/// a * b mod m for moduli up to 2^126. Falls back to the 64-bit kernel when
/// the modulus fits a word; otherwise shift-and-add (cold paths only).
u128 mulmod128(u128 a, u128 b, u128 m);
u128 powmod128(u128 base, u128 exp, u128 m);

inline u128 addmod128(u128 a, u128 b, u128 m) {
    u128 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u128 submod128(u128 a, u128 b, u128 m) { return a >= b ? a - b : a + m - b; }

u128 gcd_u128(u128 a, u128 b);

/// Returns x with a*x == 1 (mod m), or nullopt when gcd(a, m) > 1.
std::optional<u64> try_inverse_u64(u64 a, u64 m);
std::optional<u128> try_inverse_u128(u128 a, u128 m);

/// Inverse of a mod m; throws NotInvertibleError (carrying the gcd) otherwise.
u64 inverse_u64(u64 a, u64 m);
u128 inverse_u128(u128 a, u128 m);

/// inv[i] = i^{-1} mod p^e for 1 <= i < n, n <= p. Linear time.
std::vector<u64> inverse_table(u64 n, u64 modulus, u64 p);

/// Inverses of many values coprime to m with a single extended gcd
/// (prefix-product trick). Values must be nonzero mod m.
std::vector<u64> batch_inverse(std::span<const u64> vals, u64 m);

// ---------------------------------------------------------------------------
// Residue classes

/// A value together with its modulus. Modulus 1 is the degenerate class
/// containing everything; it is represented as 0 mod 1.
struct Residue {
    u128 value = 0;
    u128 modulus = 1;

    Residue() = default;
    Residue(u128 v, u128 m) : value(m == 0 ? 0 : v % m), modulus(m) {
        if (m == 0) throw std::invalid_argument("modulus must be positive");
    }

    static Residue from_signed(i128 v, u128 m) {
        if (m == 0) throw std::invalid_argument("modulus must be positive");
        i128 r = v % i128(m);
        if (r < 0) r += i128(m);
        return Residue(u128(r), m);
    }

    bool operator==(const Residue& rhs) const = default;

    Residue add(const Residue& rhs) const { return Residue(addmod128(value, rhs.value % modulus, modulus), modulus); }
    Residue sub(const Residue& rhs) const { return Residue(submod128(value, rhs.value % modulus, modulus), modulus); }
    Residue mul(const Residue& rhs) const { return Residue(mulmod128(value, rhs.value % modulus, modulus), modulus); }
    Residue pow(u128 exp) const { return Residue(powmod128(value, exp, modulus), modulus); }
    Residue inverse() const { return Residue(inverse_u128(value, modulus), modulus); }

    bool is_one() const { return modulus == 1 || value == 1; }
    std::string str() const { return to_string_u128(value) + " mod " + to_string_u128(modulus); }
};

Residue mod_pow(const Residue& base, u128 exp);
Residue mod_inverse(u128 a, u128 m);

/// Nat-backed residue for moduli beyond 2^126 (arbitrary-precision tier).
struct WideResidue {
    Nat value;
    Nat modulus;

    bool fits_u128() const { return modulus.fits_u128(); }
    Residue narrow() const { return Residue(value.to_u128(), modulus.to_u128()); }
    bool is_one() const;
    std::string str() const { return value.to_string() + " mod " + modulus.to_string(); }
    bool operator==(const WideResidue& rhs) const {
        return value == rhs.value && modulus == rhs.modulus;
    }
};

// ---------------------------------------------------------------------------
// Primality, factorization, prime enumeration

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(u64 n);

struct Factorization {
    std::vector<std::pair<u64, unsigned>> factors;  // primes strictly increasing

    u64 reconstruct() const {
        u64 n = 1;
        for (auto [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) n *= p;
        return n;
    }
    bool is_prime_power() const { return factors.size() == 1; }
    bool is_semiprime() const {
        return factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1;
    }
};

/// Complete factorization of an odd n >= 3: trial division below 10^6,
/// Brent's rho above.
Factorization factor_odd(u64 n);

/// p^e with p prime and 1 <= e <= 4, overflow-checked.
struct PrimePowerModulus {
    u64 p = 0;
    unsigned e = 0;
    u128 m = 0;

    static PrimePowerModulus make(u64 p, unsigned e);
};

u128 pow_u128_checked(u64 base, unsigned exp);  // throws overflow_error past 2^126

Residue crt_combine(std::span<const Residue> parts);

/// Primes in [2, limit] by plain sieve.
std::vector<u64> primes_up_to(u64 limit);

/// Bitmap of primality for [lo, hi): bit i set when lo + i is prime.
/// Segmented; fine for hi up to ~10^12 given base primes to sqrt(hi).
std::vector<bool> prime_segment(u64 lo, u64 hi);

/// splitmix64; used for deterministic per-candidate sampling decisions.
u64 mix64(u64 x);

}  // namespace wolmor
