#include "doctest.h"

#include <omp.h>

#include "wolmor/binomial.hpp"

using namespace wolmor;

TEST_CASE("binomial_exact small values") {
    CHECK(binomial_exact(9, 4).to_string() == "126");
    CHECK(binomial_exact(4, 2).to_string() == "6");
    CHECK(binomial_exact(13, 6).to_string() == "1716");
    CHECK(binomial_exact(0, 0).to_string() == "1");
    CHECK(binomial_exact(5, 9).to_string() == "0");
    // a value that overflows 64 bits
    CHECK(binomial_exact(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("binomial valuation equals factor counting") {
    for (u64 p : {3ull, 5ull, 7ull}) {
        for (u64 n = 0; n <= 60; ++n) {
            for (u64 k = 0; k <= n; ++k) {
                Nat exact = binomial_exact(n, k);
                u64 v = 0;
                while (!exact.is_zero() && exact.mod_u64(p) == 0) {
                    exact.div_exact_u64(p);
                    ++v;
                }
                CHECK(binomial_valuation(n, k, p) == v);
            }
        }
    }
}

TEST_CASE("binomial mod prime power spec examples") {
    FactorialTables cache;
    CHECK(binomial_mod_pe(9, 4, 5, 3, &cache) == 1);  // 126 mod 125
    CHECK(binomial_mod_pe(7, 0, 13, 2, &cache) == 1);
    CHECK(binomial_mod_pe(12345, 0, 7, 4, &cache) == 1);
    // Wolstenholme prime: C(2p-1, p-1) == 1 mod p^4 at p = 16843
    u64 p = 16843;
    CHECK(binomial_mod_pe(2 * p - 1, p - 1, p, 4, nullptr) == 1);
}

TEST_CASE("oracle equivalence: table path vs exact residues, all n <= 2000") {
    // For every prime power p^e (p <= 50, e <= 4) walk Pascal's triangle
    // reduced mod p^e and compare every entry against the fast path.
    auto primes = primes_up_to(50);
    std::vector<std::pair<u64, unsigned>> cases;
    for (u64 p : primes)
        for (unsigned e = 1; e <= 4; ++e) cases.push_back({p, e});

    const u64 N = 2000;
    std::vector<int> failures(cases.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        auto [p, e] = cases[ci];
        u64 m = 1;
        for (unsigned i = 0; i < e; ++i) m *= p;
        FactorialTables cache(u64(1) << 24);
        std::vector<u64> row{1 % m};
        for (u64 n = 0; n <= N; ++n) {
            if (n > 0) {
                std::vector<u64> next(n + 1);
                next[0] = 1 % m;
                next[n] = 1 % m;
                for (u64 k = 1; k < n; ++k) next[k] = addmod64(row[k - 1], row[k], m);
                row = std::move(next);
            }
            u64 stride = n < 64 ? 1 : 17;  // full rows at small n, lattice above
            for (u64 k = 0; k <= n; k += stride) {
                if (binomial_mod_pe(n, k, p, e, &cache) != row[k]) {
                    ++failures[ci];
                    break;
                }
            }
            if (failures[ci]) break;
        }
    }
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        INFO("p=" << cases[ci].first << " e=" << cases[ci].second);
        CHECK(failures[ci] == 0);
    }
}

TEST_CASE("direct product path agrees with generalized factorial path") {
    FactorialTables cache;
    for (u64 p : {3ull, 5ull, 13ull, 101ull}) {
        for (unsigned e = 1; e <= 3; ++e) {
            for (u64 n : {1ull, 17ull, 64ull, 255ull, 1000ull}) {
                for (u64 k = 0; k <= n; k += (n < 70 ? 1 : 13)) {
                    CAPTURE(p);
                    CAPTURE(e);
                    CAPTURE(n);
                    CAPTURE(k);
                    CHECK(binomial_mod_pe(n, k, p, e, &cache) ==
                          binomial_mod_pe_direct(n, k, p, e));
                }
            }
        }
    }
}

TEST_CASE("128-bit tier: both paths agree on a wide modulus") {
    // p^4 just above the 64-bit boundary
    u64 p = 65537;
    u128 m = pow_u128_checked(p, 4);
    CHECK(m > u128(~u64(0)));
    for (u64 n : {100ull, 5000ull}) {
        for (u64 k : {u64(1), n / 3, n / 2}) {
            CHECK(binomial_mod_pe(n, k, p, 4, nullptr) == binomial_mod_pe_direct(n, k, p, 4));
        }
    }
    // exact cross-check: C(100, 50) mod 65537^4
    Nat exact = binomial_exact(100, 50);
    CHECK(binomial_mod_pe(100, 50, p, 4, nullptr) == exact.mod_u128(m));
}

TEST_CASE("binomial_mod_prime_power wraps the kernel") {
    auto pm = PrimePowerModulus::make(5, 3);
    Residue r = binomial_mod_prime_power(9, 4, pm);
    CHECK(r.value == 1);
    CHECK(r.modulus == 125);
}
