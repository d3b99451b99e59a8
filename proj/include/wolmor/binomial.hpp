#pragma once

#include <memory>
#include <unordered_map>

#include "wolmor/modmath.hpp"

namespace wolmor {

/// Exact C(n, k) (the brute-force oracle; keep n small).
Nat binomial_exact(u64 n, u64 k);

/// Number of carries when adding k and n-k in base p; equals the p-adic
/// valuation of C(n, k).
u64 binomial_valuation(u64 n, u64 k, u64 p);

/// Prefix products of the integers coprime to p, cached per modulus p^e.
/// Tables are immutable once built; a cache instance belongs to one task.
struct UnitFactorialTable {
    u64 p = 0;
    u64 pe = 0;
    std::vector<u64> prefix;  // prefix[x] = prod_{1<=j<=x, p∤j} j mod p^e

    UnitFactorialTable(u64 p, u64 pe);
};

class FactorialTables {
public:
    explicit FactorialTables(u64 cache_cap = u64(1) << 16) : cache_cap_(cache_cap) {}
    const UnitFactorialTable* get(u64 p, u64 pe);

private:
    u64 cache_cap_;
    std::unordered_map<u64, std::unique_ptr<UnitFactorialTable>> tables_;
};

/// C(n, k) mod p^e via generalized factorials (products of integers coprime
/// to p) with explicit tracking of the power of p. Any e with p^e < 2^126.
u128 binomial_mod_pe(u64 n, u64 k, u64 p, unsigned e, FactorialTables* cache = nullptr);

/// Independent cross-check path: plain numerator/denominator product with
/// p-factors peeled term by term. O(min(k, n-k)).
u128 binomial_mod_pe_direct(u64 n, u64 k, u64 p, unsigned e);

Residue binomial_mod_prime_power(u64 n, u64 k, const PrimePowerModulus& pm,
                                 FactorialTables* cache = nullptr);

}  // namespace wolmor
