#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "wolmor/modmath.hpp"

using namespace wolmor;

TEST_CASE("nat arithmetic round trips") {
    Nat a = Nat::from_string("123456789012345678901234567890");
    CHECK(a.to_string() == "123456789012345678901234567890");
    Nat b = a * a;
    CHECK(b.to_string() == "15241578753238836750495351562536198787501905199875019052100");
    u64 check = 0;
    for (char c : b.to_string()) check = (check * 10 + u64(c - '0')) % 97;
    CHECK(b.mod_u64(97) == check);

    Nat c = a;
    c.mul_u64(1000000007ull);
    c.div_exact_u64(1000000007ull);
    CHECK(c == a);

    u128 m = (u128(1) << 100) + 7;
    u128 r = b.mod_u128(m);
    // cross-check by Horner over decimal digits with mulmod128
    u128 ref = 0;
    for (char ch : b.to_string()) ref = addmod128(mulmod128(ref, 10, m), u128(ch - '0') % m, m);
    CHECK(r == ref);
}

TEST_CASE("nat subtraction and compare") {
    Nat a = Nat::from_string("1000000000000000000000000");
    Nat b = Nat::from_string("999999999999999999999999");
    Nat d = a;
    d -= b;
    CHECK(d.to_string() == "1");
    CHECK(b < a);
    CHECK(a.compare(a) == 0);
}

TEST_CASE("mulmod128 against schoolbook cases") {
    u128 m = (u128(1) << 90) + 33;
    CHECK(mulmod128(2, 3, m) == 6);
    // (2^89)^2 mod m computed via pow
    u128 x = u128(1) << 89;
    u128 sq = mulmod128(x, x, m);
    CHECK(powmod128(2, 178, m) == sq);
    CHECK(powmod128(5, 0, m) == 1);
}

TEST_CASE("is_prime matches trial division below 20000 and spec cases") {
    auto sieve = primes_up_to(20000);
    std::vector<bool> tag(20001, false);
    for (u64 p : sieve) tag[p] = true;
    for (u64 n = 0; n <= 20000; ++n) CHECK(is_prime(n) == tag[n]);

    CHECK(is_prime(2));
    CHECK(is_prime(16843));
    CHECK_FALSE(is_prime(27173));  // 29 * 937
    CHECK(is_prime(2124679));
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime(3037000493ull * 2));  // even
    CHECK_FALSE(is_prime(u64(1000003) * 1000033));
}

TEST_CASE("is_prime agrees with the sieve for all n <= 10^6") {
    constexpr u64 LIMIT = 1000000;
    constexpr u64 CHUNK = 1 << 16;
    std::vector<u64> bad((LIMIT + CHUNK - 1) / CHUNK, 0);
#pragma omp parallel for schedule(dynamic)
    for (i64 c = 0; c < i64(bad.size()); ++c) {
        u64 lo = u64(c) * CHUNK, hi = std::min(LIMIT, lo + CHUNK);
        auto seg = prime_segment(lo, hi);
        for (u64 n = lo; n < hi; ++n)
            if (is_prime(n) != seg[n - lo]) bad[c] = n + 1;
    }
    for (std::size_t c = 0; c < bad.size(); ++c) {
        INFO("first disagreement at n=" << (bad[c] ? bad[c] - 1 : 0));
        CHECK(bad[c] == 0);
    }
}

TEST_CASE("mod_pow examples") {
    CHECK(mod_pow(Residue(4, 125), 4).value == 6);
    CHECK(mod_pow(Residue(17, 91), 0).value == 1);
    CHECK(mod_pow(Residue(2, 25), 4).value == 16);
}

TEST_CASE("mod_inverse examples and error") {
    CHECK(mod_inverse(2, 7).value == 4);
    CHECK(mod_inverse(30, 7).value == 4);
    try {
        mod_inverse(5, 25);
        FAIL("expected NotInvertibleError");
    } catch (const NotInvertibleError& e) {
        CHECK(e.gcd == 5);
    }
    // property: a * inv(a) == 1 for odd moduli
    for (u64 m : {7ull, 25ull, 343ull, 1000003ull}) {
        for (u64 a = 1; a < 50; ++a) {
            if (std::gcd(a, m) != 1) continue;
            CHECK(mulmod64(a % m, u64(mod_inverse(a, m).value), m) == 1);
        }
    }
}

TEST_CASE("crt_combine examples, reduction property, error") {
    {
        Residue parts[] = {Residue(1, 27), Residue(1, 125)};
        Residue r = crt_combine(parts);
        CHECK(r.value == 1);
        CHECK(r.modulus == 3375);
    }
    {
        Residue parts[] = {Residue(2, 3), Residue(3, 5)};
        Residue r = crt_combine(parts);
        CHECK(r.value == 8);
        CHECK(r.modulus == 15);
    }
    {
        Residue parts[] = {Residue(0, 4), Residue(0, 6)};
        CHECK_THROWS_AS((void)crt_combine(parts), NonCoprimeModuliError);
    }
    // output reduces correctly against every part
    Residue parts[] = {Residue(10, 49), Residue(4, 27), Residue(12, 25)};
    Residue r = crt_combine(parts);
    for (const Residue& part : parts) CHECK(r.value % part.modulus == part.value);
}

TEST_CASE("factor_odd spec examples and properties") {
    {
        Factorization f = factor_odd(27173);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0] == std::pair<u64, unsigned>{29, 1});
        CHECK(f.factors[1] == std::pair<u64, unsigned>{937, 1});
        CHECK(f.is_semiprime());
    }
    {
        // 16843^2, computed by direct multiplication
        u64 sq = 16843ull * 16843ull;
        CHECK(sq == 283686649ull);
        Factorization f = factor_odd(sq);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0] == std::pair<u64, unsigned>{16843, 2});
    }
    {
        Factorization f = factor_odd(9);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0] == std::pair<u64, unsigned>{3, 2});
    }
    CHECK_THROWS_AS(factor_odd(10), EvenInputError);

    // rho path: product of two primes above the trial-division bound
    u64 p = 1000003, q = 1000033;
    Factorization f = factor_odd(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[1].first == q);

    // reconstruction property over a mixed sample
    for (u64 n : {9ull, 45ull, 2001341ull, 283686649ull, 999999999999999989ull}) {
        if (n % 2 == 0) continue;
        Factorization f2 = factor_odd(n);
        CHECK(f2.reconstruct() == n);
        for (auto [pp, ee] : f2.factors) {
            CHECK(is_prime(pp));
            CHECK(ee >= 1);
        }
    }
}

TEST_CASE("prime power modulus validation") {
    auto pm = PrimePowerModulus::make(16843, 4);
    CHECK(pm.m == u128(16843) * 16843 * 16843 * 16843);
    CHECK_THROWS(PrimePowerModulus::make(15, 2));
    CHECK_THROWS(PrimePowerModulus::make(7, 5));
    // the second known Wolstenholme prime sits past the 64-bit line at the
    // fourth power; the 128-bit tier must carry it
    auto big = PrimePowerModulus::make(2124679, 4);
    u128 sq = u128(2124679) * 2124679;
    CHECK(big.m == sq * sq);
    CHECK(big.m > u128(~u64(0)));
}

TEST_CASE("prime segment matches simple sieve") {
    auto seg = prime_segment(1000, 2000);
    for (u64 v = 1000; v < 2000; ++v) CHECK(seg[v - 1000] == is_prime(v));
    auto low = prime_segment(0, 10);
    CHECK(low[2]);
    CHECK(low[3]);
    CHECK_FALSE(low[4]);
    CHECK_FALSE(low[0]);
    CHECK_FALSE(low[1]);
}

TEST_CASE("inverse_table is consistent") {
    for (u64 p : {5ull, 7ull, 13ull, 101ull}) {
        for (unsigned e = 1; e <= 3; ++e) {
            u64 m = 1;
            for (unsigned i = 0; i < e; ++i) m *= p;
            auto inv = inverse_table(p, m, p);
            for (u64 i = 1; i < p; ++i) CHECK(mulmod64(i, inv[i], m) == 1);
        }
    }
}
