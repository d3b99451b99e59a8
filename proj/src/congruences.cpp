#include "wolmor/congruences.hpp"

#include <algorithm>
#include <cassert>

namespace wolmor {

namespace {

u64 negmod(u64 x, u64 m) { return x == 0 ? 0 : m - x; }

u64 pow_u64(u64 base, unsigned e) {
    u64 m = 1;
    for (unsigned i = 0; i < e; ++i) m *= base;
    return m;
}

void require_odd_prime(u64 p, u64 min) {
    if (p < min || !is_prime(p))
        throw std::invalid_argument("expected an odd prime >= " + std::to_string(min) +
                                    ", got " + std::to_string(p));
}

}  // namespace

FermatQuotient fermat_quotient(u64 p, unsigned e) {
    require_odd_prime(p, 3);
    if (e < 1 || e > 2) throw std::invalid_argument("fermat quotient precision must be 1 or 2");
    u64 pe1 = pow_u64(p, e + 1);
    u64 t = powmod64(2, p - 1, pe1);
    u64 q = (t - 1) / p;  // exact: 2^{p-1} == 1 mod p
    return FermatQuotient{p, e, Residue(q, pow_u64(p, e))};
}

Residue harmonic_sum(u64 p, unsigned s, SumRange range, unsigned e) {
    require_odd_prime(p, 5);
    if (s < 1 || s > 3 || e < 1 || e > 3) throw std::invalid_argument("harmonic_sum: s, e in 1..3");
    u64 m = pow_u64(p, e);
    auto inv = inverse_table(p, m, p);
    u64 top = range == SumRange::Half ? (p - 1) / 2 : p - 1;
    u64 acc = 0;
    for (u64 i = 1; i <= top; ++i) {
        u64 term = inv[i];
        for (unsigned j = 1; j < s; ++j) term = mulmod64(term, inv[i], m);
        acc = addmod64(acc, term, m);
    }
    return Residue(acc, m);
}

Residue power_sum(u64 p, i64 n, SumRange range) {
    require_odd_prime(p, 5);
    u64 top = range == SumRange::Half ? (p - 1) / 2 : p - 1;
    u64 acc = 0;
    if (n >= 0) {
        for (u64 i = 1; i <= top; ++i) acc = addmod64(acc, powmod64(i, u64(n), p), p);
    } else {
        auto inv = inverse_table(p, p, p);
        for (u64 i = 1; i <= top; ++i) acc = addmod64(acc, powmod64(inv[i], u64(-n), p), p);
    }
    return Residue(acc, p);
}

HalfHarmonicData half_harmonic_data(u64 p) {
    HalfHarmonicData data{p, {}};
    for (unsigned s = 1; s <= 3; ++s)
        for (SumRange r : {SumRange::Half, SumRange::Full})
            for (unsigned e = 1; e <= 3; ++e)
                data.sums.emplace(std::make_tuple(s, r, e), harmonic_sum(p, s, r, e));
    return data;
}

u64 triple_harmonic_brute(u64 p, SumRange range) {
    require_odd_prime(p, 7);
    u64 top = range == SumRange::Half ? (p - 1) / 2 : p - 1;
    auto inv = inverse_table(p, p, p);
    u64 acc = 0;
    for (u64 i = 1; i <= top; ++i)
        for (u64 j = i + 1; j <= top; ++j) {
            u64 ij = mulmod64(inv[i], inv[j], p);
            for (u64 k = j + 1; k <= top; ++k) acc = addmod64(acc, mulmod64(ij, inv[k], p), p);
        }
    return acc;
}

std::pair<Residue, Residue> ij_square_sums(u64 p) {
    require_odd_prime(p, 7);
    u64 top = (p - 1) / 2;
    auto inv = inverse_table(p, p, p);
    u64 a = 0, b = 0;  // sum 1/(i j^2), sum 1/(i^2 j)
    for (u64 j = 2; j <= top; ++j) {
        u64 ij2 = mulmod64(inv[j], inv[j], p);
        for (u64 i = 1; i < j; ++i) {
            a = addmod64(a, mulmod64(inv[i], ij2, p), p);
            b = addmod64(b, mulmod64(mulmod64(inv[i], inv[i], p), inv[j], p), p);
        }
    }
    return {Residue(a, p), Residue(b, p)};
}

std::pair<u64, u64> ij_square_sums_full(u64 p) {
    require_odd_prime(p, 7);
    auto inv = inverse_table(p, p, p);
    u64 a = 0, b = 0;
    for (u64 j = 2; j <= p - 1; ++j) {
        u64 ij2 = mulmod64(inv[j], inv[j], p);
        for (u64 i = 1; i < j; ++i) {
            a = addmod64(a, mulmod64(inv[i], ij2, p), p);
            b = addmod64(b, mulmod64(mulmod64(inv[i], inv[i], p), inv[j], p), p);
        }
    }
    return {a, b};
}

std::vector<u64> bernoulli_row_mod_p(u64 p) {
    require_odd_prime(p, 5);
    std::vector<u64> row(p - 2, 0);  // indices 0..p-3
    auto inv = inverse_table(p, p, p);
    row[0] = 1;
    row[1] = negmod(inv[2], p);
    for (u64 m = 2; m + 2 <= p - 1; m += 2) {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        u64 acc = row[0];  // C(m+1,0) B_0
        u64 binom = 1;
        for (u64 k = 1; k < m; ++k) {
            binom = mulmod64(binom, mulmod64((m + 2 - k) % p, inv[k], p), p);
            if (row[k]) acc = addmod64(acc, mulmod64(binom, row[k], p), p);
        }
        row[m] = mulmod64(negmod(acc, p), inv[(m + 1) % p], p);
    }
    return row;
}

BernoulliModP bernoulli_mod_p(u64 p, u64 m) {
    require_odd_prime(p, 5);
    if (m + 2 >= p) throw IndexOutOfRangeError("bernoulli_mod_p: index must satisfy m <= p-3");
    if (m % 2 == 1 && m > 1) return BernoulliModP{p, m, Residue(0, p)};
    auto row = bernoulli_row_mod_p(p);
    return BernoulliModP{p, m, Residue(row[m], p)};
}

Residue bernoulli_pm3_fast(u64 p) {
    require_odd_prime(p, 5);
    auto inv = inverse_table(p, p, p);
    u64 acc = 0;
    for (u64 k = 1; k <= (p - 1) / 2; ++k) {
        u64 c = mulmod64(mulmod64(inv[k], inv[k], p), inv[k], p);
        acc = addmod64(acc, c, p);
    }
    // half-range cubic sum == -2 B_{p-3} mod p; constant pinned by the suite
    return Residue(mulmod64(negmod(inv[2], p), acc, p), p);
}

// ---------------------------------------------------------------------------

WTable::WTable(u64 p) : p_(p), half_((p - 1) / 2) {
    require_odd_prime(p, 3);
    auto inv = inverse_table(p, p, p);
    w_.resize(p);
    w_[0] = inv.size() > 2 ? inv[2] : 1 % p;  // the 1/2 convention
    if (p > 1) w_[1] = 1 % p;
    for (u64 n = 2; n < p; ++n) {
        u64 t = mulmod64(4 % p, mulmod64((2 * n - 1) % p, inv[(2 * n) % p], p), p);
        w_[n] = mulmod64(w_[n - 1], t, p);
    }
}

u64 WTable::eval(u64 n) const {
    if (n < p_) return w_[n];
    u64 m = n / p_, r = n % p_;
    if (r == 0) return eval(m);
    if (r > half_) return 0;
    u64 sub = eval(m);
    if (sub == 0) return 0;
    return mulmod64(mulmod64(2 % p_, sub, p_), w_[r], p_);
}

MTable::MTable(u64 p) : p_(p) {
    require_odd_prime(p, 3);
    auto inv = inverse_table(p, p, p);
    m_.resize((p - 1) / 2);
    m_[0] = 1;  // M_1
    if (p > 3) {
        u64 inv4 = mulmod64(inv[2], inv[2], p);
        for (u64 n = 3; n + 2 <= p; n += 2) {
            u64 t = mulmod64(inv4, mulmod64((n - 2) % p, inv[n - 1], p), p);
            m_[(n - 1) / 2] = negmod(mulmod64(m_[(n - 3) / 2], t, p), p);
        }
    }
}

u64 MTable::eval(u64 n) const {
    assert(n % 2 == 1);
    if (n < p_) return m_[(n - 1) / 2];
    u64 m = n / p_, r = n % p_;
    if (r == 0) return eval(m);
    if (m % 2 == 1) return 0;
    u64 sub = eval(m + 1);
    if (sub == 0) return 0;
    return mulmod64(sub, m_[(r - 1) / 2], p_);
}

Residue w_mod_p(u64 n, u64 p) {
    WTable table(p);
    return Residue(table.eval(n), p);
}

Residue m_mod_p(u64 n, u64 p) {
    if (n % 2 == 0) throw std::invalid_argument("m_mod_p: n must be odd");
    MTable table(p);
    return Residue(table.eval(n), p);
}

u128 w_n_mod_pe(u64 n, u64 p, unsigned e, FactorialTables* cache) {
    assert(n >= 1);
    return binomial_mod_pe(2 * n - 1, n - 1, p, e, cache);
}

u128 m_n_mod_pe(u64 n, u64 p, unsigned e, FactorialTables* cache) {
    assert(n % 2 == 1);
    u128 pe = pow_u128_checked(p, e);
    if (pe == 1) return 0;
    u128 c = binomial_mod_pe(n - 1, (n - 1) / 2, p, e, cache);
    u128 inv4 = inverse_u128(4 % pe, pe);
    u128 val = mulmod128(c, powmod128(inv4, n - 1, pe), pe);
    if (((n - 1) / 2) % 2 == 1) val = val == 0 ? 0 : pe - val;
    return val;
}

u128 w_n_mod_pe_direct(u64 n, u64 p, unsigned e) {
    assert(n >= 1);
    return binomial_mod_pe_direct(2 * n - 1, n - 1, p, e);
}

u128 m_n_mod_pe_direct(u64 n, u64 p, unsigned e) {
    assert(n % 2 == 1);
    u128 pe = pow_u128_checked(p, e);
    if (pe == 1) return 0;
    u128 c = binomial_mod_pe_direct(n - 1, (n - 1) / 2, p, e);
    u128 inv4 = inverse_u128(4 % pe, pe);
    u128 val = mulmod128(c, powmod128(inv4, n - 1, pe), pe);
    if (((n - 1) / 2) % 2 == 1) val = val == 0 ? 0 : pe - val;
    return val;
}

WideResidue crt_combine_wide(std::span<const Residue> parts) {
    if (parts.empty()) throw std::invalid_argument("crt_combine_wide needs at least one residue");
    WideResidue acc;
    acc.value = Nat(parts[0].value);
    acc.modulus = Nat(parts[0].modulus);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        u128 mi = parts[i].modulus;
        u128 a = acc.value.mod_u128(mi);
        u128 base = acc.modulus.mod_u128(mi);
        u128 g = gcd_u128(base, mi);
        if (g != 1) throw NonCoprimeModuliError(g);
        u128 t = mulmod128(submod128(parts[i].value % mi, a, mi), inverse_u128(base, mi), mi);
        acc.value += acc.modulus * Nat(t);
        acc.modulus = acc.modulus * Nat(mi);
    }
    return acc;
}

namespace {

// Factors with single multiplicity at order 1 take the digit-decomposition
// table route; higher prime powers go through the generalized factorials.
// Table building is skipped for very large primes where O(p) memory would
// dwarf the O(p) product walk it replaces.
WideResidue value_over_factors(u64 n, unsigned k, Family family, FactorialTables* cache,
                               bool tables_for_squarefree = false) {
    if (n % 2 == 0) throw EvenInputError("index must be odd");
    if (n == 1) return WideResidue{Nat(), Nat(u64(1))};
    Factorization f = factor_odd(n);
    std::vector<Residue> parts;
    for (auto [p, a] : f.factors) {
        unsigned e = a * k;
        u128 val;
        if (tables_for_squarefree && e == 1 && p <= (u64(1) << 20)) {
            val = family == Family::W ? WTable(p).eval(n) : MTable(p).eval(n);
        } else {
            val = family == Family::W ? w_n_mod_pe(n, p, e, cache) : m_n_mod_pe(n, p, e, cache);
        }
        parts.push_back(Residue(val, pow_u128_checked(p, e)));
    }
    return crt_combine_wide(parts);
}

}  // namespace

WideResidue w_value(u64 n, unsigned k, FactorialTables* cache) {
    if (k < 1 || k > 4) throw std::invalid_argument("w_value: k in 1..4");
    return value_over_factors(n, k, Family::W, cache);
}

WideResidue m_value(u64 n, unsigned k, FactorialTables* cache) {
    if (k < 1 || k > 4) throw std::invalid_argument("m_value: k in 1..4");
    return value_over_factors(n, k, Family::M, cache);
}

// ---------------------------------------------------------------------------

namespace {

/// Streaming sum of inverses mod m over x in [1, limit] coprime to p.
u64 inverse_sum_streamed(u64 limit, u64 m, u64 p) {
    constexpr std::size_t CHUNK = 4096;
    std::vector<u64> vals;
    vals.reserve(CHUNK);
    u64 acc = 0;
    auto flush = [&]() {
        if (vals.empty()) return;
        for (u64 v : batch_inverse(vals, m)) acc = addmod64(acc, v, m);
        vals.clear();
    };
    for (u64 x = 1; x <= limit; ++x) {
        if (x % p == 0) continue;
        vals.push_back(x % m);
        if (vals.size() == CHUNK) flush();
    }
    flush();
    return acc;
}

}  // namespace

Residue s_c_block_fast(u64 p) {
    require_odd_prime(p, 5);
    u64 p2 = p * p;
    u64 h = (p - 1) / 2;
    std::vector<u64> vals;
    vals.reserve(h);
    for (u64 i = 1; i <= h; ++i) vals.push_back(h * p + i);
    u64 acc = 0;
    for (u64 v : batch_inverse(vals, p2)) acc = addmod64(acc, v, p2);
    return Residue(acc, p2);
}

SSumRecord s_sums(u64 p) {
    require_odd_prime(p, 7);
    u64 p2 = p * p, p3 = p2 * p;
    u64 h = (p - 1) / 2;
    auto inv3 = inverse_table(p, p3, p);
    auto invp = inverse_table(p, p, p);

    u64 sa3 = 0;
    u64 sq2 = 0;  // sum 1/i^2 mod p^2 over the half range
    for (u64 i = 1; i <= h; ++i) {
        sa3 = addmod64(sa3, inv3[i], p3);
        u64 v2 = inv3[i] % p2;
        sq2 = addmod64(sq2, mulmod64(v2, v2, p2), p2);
    }
    u64 sa2 = sa3 % p2;
    u64 sb = mulmod64(inv3[2] % p2, submod64(mulmod64(sa2, sa2, p2), sq2, p2), p2);
    u64 sc = inverse_sum_streamed((p2 - 1) / 2, p2, p);

    // d factors into independent sums; the j side is the honest O(p^2) walk.
    u64 sum_j = 0;
    for (u64 j = 1; j <= (p2 - 1) / 2; ++j) {
        if (j % p == 0) continue;
        sum_j = addmod64(sum_j, invp[j % p], p);
    }
    u64 sd = mulmod64(sa3 % p, sum_j, p);

    // e through the cubing identity: S_a^3 = sum 1/i^3 + 3 sum 1/(ij^2)
    //                                + 3 sum 1/(i^2 j) + 6 S_e
    u64 cubic = 0;
    for (u64 i = 1; i <= h; ++i) {
        u64 v = invp[i];
        cubic = addmod64(cubic, mulmod64(v, mulmod64(v, v, p), p), p);
    }
    auto [dij2, di2j] = ij_square_sums(p);
    u64 sa1 = sa3 % p;
    u64 cube = mulmod64(sa1, mulmod64(sa1, sa1, p), p);
    u64 rest = addmod64(cubic, addmod64(mulmod64(3, u64(dij2.value) % p, p),
                                        mulmod64(3, u64(di2j.value) % p, p), p), p);
    u64 se = mulmod64(submod64(cube, rest, p), inverse_u64(6 % p, p), p);

    return SSumRecord{p, Residue(sa3, p3), Residue(sb, p2), Residue(sc, p2),
                      Residue(sd, p), Residue(se, p)};
}

TSumRecord t_sums(u64 p) {
    require_odd_prime(p, 7);
    u64 p2 = p * p, p3 = p2 * p;
    auto inv3 = inverse_table(p, p3, p);
    auto invp = inverse_table(p, p, p);

    u64 ta3 = 0, tq2 = 0;
    for (u64 i = 1; i <= p - 1; ++i) {
        ta3 = addmod64(ta3, inv3[i], p3);
        u64 v2 = inv3[i] % p2;
        tq2 = addmod64(tq2, mulmod64(v2, v2, p2), p2);
    }
    u64 ta2 = ta3 % p2;
    u64 tb = mulmod64(inv3[2] % p2, submod64(mulmod64(ta2, ta2, p2), tq2, p2), p2);
    u64 tc = inverse_sum_streamed(p2 - 1, p2, p);

    u64 sum_i = 0;
    for (u64 i = 1; i <= p2 - 1; ++i) {
        if (i % p == 0) continue;
        sum_i = addmod64(sum_i, invp[i % p], p);
    }
    u64 td = mulmod64(ta3 % p, sum_i, p);

    u64 cubic = 0;
    for (u64 i = 1; i <= p - 1; ++i) {
        u64 v = invp[i];
        cubic = addmod64(cubic, mulmod64(v, mulmod64(v, v, p), p), p);
    }
    auto [fij2, fi2j] = ij_square_sums_full(p);
    u64 ta1 = ta3 % p;
    u64 cube = mulmod64(ta1, mulmod64(ta1, ta1, p), p);
    u64 rest = addmod64(cubic, addmod64(mulmod64(3, fij2, p), mulmod64(3, fi2j, p), p), p);
    u64 te = mulmod64(submod64(cube, rest, p), inverse_u64(6 % p, p), p);

    return TSumRecord{p, Residue(ta3, p3), Residue(tb, p2), Residue(tc, p2),
                      Residue(td, p), Residue(te, p)};
}

// ---------------------------------------------------------------------------

PrimeTestWitness wolstenholme_prime_test(u64 p, FactorialTables* cache) {
    require_odd_prime(p, 5);
    u128 m = pow_u128_checked(p, 4);
    u128 direct = w_n_mod_pe(p, p, 4, cache);
    bool pass = direct == 1;
    Residue b = bernoulli_pm3_fast(p);
    if ((b.value == 0) != pass)
        throw std::logic_error("direct mod-p^4 test and B_{p-3} criterion disagree at p = " +
                               std::to_string(p));
    return PrimeTestWitness{p, pass, Residue(submod128(direct, 1, m), m), b};
}

PrimeTestWitness morley_prime_test(u64 p, FactorialTables* cache) {
    require_odd_prime(p, 5);
    u128 m = pow_u128_checked(p, 4);
    u128 direct = m_n_mod_pe(p, p, 4, cache);
    bool pass = direct == 1;
    Residue b = bernoulli_pm3_fast(p);
    return PrimeTestWitness{p, pass, Residue(submod128(direct, 1, m), m), b};
}

PseudoprimeResult pseudoprime_test(u64 n, Family family, unsigned order,
                                   FactorialTables* cache) {
    if (order < 1 || order > 3) throw std::invalid_argument("pseudoprime order must be 1..3");
    if (n % 2 == 0) throw EvenInputError("pseudoprime_test: n must be odd");
    if (n < 9 || is_prime(n)) throw NotCompositeError("pseudoprime_test: n must be composite");
    WideResidue value = value_over_factors(n, order, family, cache, true);
    bool pass = value.is_one();
    Nat residual = value.value;
    if (residual.is_zero()) {
        residual = value.modulus;
    }
    residual -= Nat(u64(1));
    return PseudoprimeResult{pass, WideResidue{residual, value.modulus}};
}

SquareFormulas square_pseudoprime_formulas(u64 p, FactorialTables* cache) {
    require_odd_prime(p, 7);
    u128 m = pow_u128_checked(p, 4);
    u128 p2 = u128(p) * p, p3 = p2 * p;
    u64 B = u64(bernoulli_pm3_fast(p).value);
    u64 q1 = u64(fermat_quotient(p, 1).value.value);
    u64 q2v = u64(fermat_quotient(p, 2).value.value);

    u128 w_direct = w_n_mod_pe(p * p, p, 4, cache);
    // W_{p^2} == 1 - 2/3 p^3 B_{p-3} mod p^4. The minus sign is forced by the
    // term-by-term expansion (the T_a and T_b contributions are +2/3 and -4/3)
    // and confirmed exactly for every prime 7..200 by the suite.
    u64 c23 = mulmod64(mulmod64(2, B, p), inverse_u64(3 % p, p), p);
    u128 w_closed = submod128(1, mulmod128(p3, c23, m), m);

    // 4^{p^2-1} M_{p^2} equals the signed central binomial; the sign
    // (-1)^{(p^2-1)/2} is +1 since p^2 == 1 mod 8.
    assert(((p * p - 1) / 2) % 2 == 0);
    u128 m4_direct = binomial_mod_pe(p * p - 1, (p * p - 1) / 2, p, 4, cache);

    u128 lift = powmod128(2, p - 1, m);          // (1 + pq) mod p^4, exactly
    u128 sq = mulmod128(lift, lift, m);          // (1 + pq)^2 mod p^4
    u128 term_q = mulmod128((2 * p2) % m, q2v, m);                 // 2 p^2 q
    u128 term_q2 = mulmod128((3 * p3) % m, mulmod64(q1, q1, p), m);  // 3 p^3 q^2
    u64 c12 = mulmod64(B, inverse_u64(12 % p, p), p);
    u128 m4_closed = addmod128(addmod128(sq, mulmod128(p3, c12, m), m),
                               addmod128(term_q, term_q2, m), m);

    u128 pow4_direct = powmod128(4, u128(p) * p - 1, m);
    u128 pow4_closed = addmod128(sq, addmod128(term_q, term_q2, m), m);

    return SquareFormulas{p,
                          Residue(w_direct, m),    Residue(w_closed, m),
                          Residue(m4_direct, m),   Residue(m4_closed, m),
                          Residue(pow4_direct, m), Residue(pow4_closed, m)};
}

// ---------------------------------------------------------------------------

ReflectionCheck w_reflection_check(u64 n, u64 p, const WTable* table) {
    require_odd_prime(p, 5);
    if (n == 0 || n >= p) throw std::invalid_argument("w_reflection_check: 0 < n < p");
    std::optional<WTable> local;
    if (!table) {
        local.emplace(p);
        table = &*local;
    }
    u64 lhs = u64(w_n_mod_pe_direct(n, p, 1));
    i64 idx = i64((p - 1) / 2) - i64(n);
    u64 wref = idx < 0 ? 0 : table->base(u64(idx));
    u64 rhs = mulmod64(powmod64(4 % p, 2 * n, p), wref, p);
    if (((p - 1) / 2) % 2 == 1) rhs = negmod(rhs, p);
    return ReflectionCheck{lhs == rhs, lhs, rhs};
}

ReflectionCheck m_reflection_check(u64 n, u64 p, const MTable* table) {
    require_odd_prime(p, 5);
    if (n == 0 || n >= p || n % 2 == 0)
        throw std::invalid_argument("m_reflection_check: odd n with 0 < n < p");
    std::optional<MTable> local;
    if (!table) {
        local.emplace(p);
        table = &*local;
    }
    u64 lhs = u64(m_n_mod_pe_direct(n, p, 1));
    u64 inv4 = inverse_u64(4 % p, p);
    u64 rhs = mulmod64(powmod64(inv4, n - 1, p), table->eval(p - n + 1), p);
    return ReflectionCheck{lhs == rhs, lhs, rhs};
}

// ---------------------------------------------------------------------------

const WTable& CongruenceContext::w_table(u64 p) {
    auto it = w_.find(p);
    if (it == w_.end()) it = w_.emplace(p, WTable(p)).first;
    return it->second;
}

const MTable& CongruenceContext::m_table(u64 p) {
    auto it = m_.find(p);
    if (it == m_.end()) it = m_.emplace(p, MTable(p)).first;
    return it->second;
}

}  // namespace wolmor
