#include "wolmor/binomial.hpp"

#include <algorithm>
#include <cassert>

namespace wolmor {

Nat binomial_exact(u64 n, u64 k) {
    if (k > n) return Nat();
    k = std::min(k, n - k);
    Nat res(u64(1));
    for (u64 i = 1; i <= k; ++i) {
        res.mul_u64(n - k + i);
        res.div_exact_u64(i);
    }
    return res;
}

u64 binomial_valuation(u64 n, u64 k, u64 p) {
    if (k > n) return 0;
    u64 a = k, b = n - k, carries = 0, carry = 0;
    while (a || b || carry) {
        u64 digit = a % p + b % p + carry;
        carry = digit >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

UnitFactorialTable::UnitFactorialTable(u64 p_, u64 pe_) : p(p_), pe(pe_) {
    prefix.resize(pe);
    u64 acc = 1;
    prefix[0] = 1;
    for (u64 j = 1; j < pe; ++j) {
        if (j % p != 0) acc = mulmod64(acc, j, pe);
        prefix[j] = acc;
    }
}

const UnitFactorialTable* FactorialTables::get(u64 p, u64 pe) {
    if (pe > cache_cap_) return nullptr;
    auto it = tables_.find(pe);
    if (it != tables_.end()) return it->second.get();
    auto table = std::make_unique<UnitFactorialTable>(p, pe);
    return tables_.emplace(pe, std::move(table)).first->second.get();
}

namespace {

// (N!)_p mod p^e: product of integers in [1, N] coprime to p.
u64 unit_factorial_u64(u64 N, u64 p, u64 pe, const UnitFactorialTable* table) {
    if (N >= pe) {
        // Complete blocks of p^e consecutive integers each contribute the
        // full unit product (generalized Wilson, = -1 for odd p).
        u64 blocks = N / pe;
        u64 rest = N % pe;
        u64 wilson = table ? table->prefix[pe - 1] : 0;
        if (!table) {
            wilson = 1;
            for (u64 j = 1; j < pe; ++j)
                if (j % p != 0) wilson = mulmod64(wilson, j, pe);
        }
        u64 head = powmod64(wilson, blocks, pe);
        u64 tail;
        if (table) {
            tail = table->prefix[rest];
        } else {
            tail = 1;
            for (u64 j = 1; j <= rest; ++j)
                if (j % p != 0) tail = mulmod64(tail, j, pe);
        }
        return mulmod64(head, tail, pe);
    }
    if (table) return table->prefix[N];
    u64 acc = 1;
    for (u64 j = 1; j <= N; ++j)
        if (j % p != 0) acc = mulmod64(acc, j, pe);
    return acc;
}

u128 unit_factorial_u128(u64 N, u64 p, u128 pe) {
    // Moduli beyond one word only arise with p^e > N, so no block structure.
    u128 acc = 1;
    for (u64 j = 1; j <= N; ++j)
        if (j % p != 0) acc = mulmod128(acc, j, pe);
    return acc;
}

u128 binom_units_u128(u64 n, u64 k, u64 p, u128 pe) {
    u128 num = 1, den = 1;
    for (u64 nj = n, kj = k, rj = n - k; nj > 0; nj /= p, kj /= p, rj /= p) {
        num = mulmod128(num, unit_factorial_u128(nj, p, pe), pe);
        den = mulmod128(den, unit_factorial_u128(kj, p, pe), pe);
        den = mulmod128(den, unit_factorial_u128(rj, p, pe), pe);
    }
    return mulmod128(num, inverse_u128(den, pe), pe);
}

}  // namespace

u128 binomial_mod_pe(u64 n, u64 k, u64 p, unsigned e, FactorialTables* cache) {
    u128 pe = pow_u128_checked(p, e);
    if (pe == 1) return 0;
    if (k > n) return 0;
    u64 c = binomial_valuation(n, k, p);
    if (c >= e) return 0;
    u128 pc = 1;
    for (u64 i = 0; i < c; ++i) pc *= p;

    if (pe <= ~u64(0)) {
        u64 m = u64(pe);
        const UnitFactorialTable* table = cache ? cache->get(p, m) : nullptr;
        std::unique_ptr<UnitFactorialTable> local;
        if (!table && m <= (u64(1) << 22) && m <= 2 * n + 2) {
            // Worth building for this call even without a cache: the level-0
            // factorial walks the table range several times.
            local = std::make_unique<UnitFactorialTable>(p, m);
            table = local.get();
        }
        u64 num = 1, den = 1;
        for (u64 nj = n, kj = k, rj = n - k; nj > 0; nj /= p, kj /= p, rj /= p) {
            num = mulmod64(num, unit_factorial_u64(nj, p, m, table), m);
            den = mulmod64(den, unit_factorial_u64(kj, p, m, table), m);
            den = mulmod64(den, unit_factorial_u64(rj, p, m, table), m);
        }
        u64 units = mulmod64(num, inverse_u64(den, m), m);
        return mulmod64(u64(pc % m), units, m);
    }
    u128 units = binom_units_u128(n, k, p, pe);
    return mulmod128(pc, units, pe);
}

u128 binomial_mod_pe_direct(u64 n, u64 k, u64 p, unsigned e) {
    u128 pe = pow_u128_checked(p, e);
    if (pe == 1) return 0;
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 num = 1, den = 1;
    i64 val = 0;
    for (u64 i = 1; i <= k; ++i) {
        u64 top = n - k + i, bot = i;
        while (top % p == 0) {
            top /= p;
            ++val;
        }
        while (bot % p == 0) {
            bot /= p;
            --val;
        }
        num = mulmod128(num, top, pe);
        den = mulmod128(den, bot, pe);
    }
    assert(val >= 0);
    if (u64(val) >= e) return 0;
    u128 pv = 1;
    for (i64 i = 0; i < val; ++i) pv *= p;
    u128 units = mulmod128(num, inverse_u128(den, pe), pe);
    return mulmod128(pv, units, pe);
}

Residue binomial_mod_prime_power(u64 n, u64 k, const PrimePowerModulus& pm,
                                 FactorialTables* cache) {
    return Residue(binomial_mod_pe(n, k, pm.p, pm.e, cache), pm.m);
}

}  // namespace wolmor
