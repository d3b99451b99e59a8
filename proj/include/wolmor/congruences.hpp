#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "wolmor/binomial.hpp"

namespace wolmor {

enum class Family { W, M };
enum class SumRange { Half, Full };

inline const char* family_letter(Family f) { return f == Family::W ? "W" : "M"; }

// ---------------------------------------------------------------------------
// Fermat quotients and harmonic machinery

/// q = (2^{p-1} - 1) / p, reduced mod p^e. The division is exact.
struct FermatQuotient {
    u64 p;
    unsigned precision;  // 1 or 2
    Residue value;
};
FermatQuotient fermat_quotient(u64 p, unsigned e);

/// sum of 1/i^s over i = 1..(p-1) (Full) or 1..(p-1)/2 (Half), mod p^e.
Residue harmonic_sum(u64 p, unsigned s, SumRange range, unsigned e);

/// sum of i^n mod p over the range; negative n through inverses.
Residue power_sum(u64 p, i64 n, SumRange range);

/// All (s in 1..3) x (half/full) x (e in 1..3) harmonic sums for one prime.
struct HalfHarmonicData {
    u64 p;
    std::map<std::tuple<unsigned, SumRange, unsigned>, Residue> sums;
};
HalfHarmonicData half_harmonic_data(u64 p);

/// Brute-force oracle: sum of 1/(ijk) over 1 <= i < j < k <= range mod p.
u64 triple_harmonic_brute(u64 p, SumRange range);

/// Half-range double sums (sum 1/(ij^2), sum 1/(i^2 j)) over i < j <= (p-1)/2,
/// by direct O(p^2) summation mod p.
std::pair<Residue, Residue> ij_square_sums(u64 p);

/// Full-range variants over i < j <= p-1 (used by the T-sum cubing identity).
std::pair<u64, u64> ij_square_sums_full(u64 p);

// ---------------------------------------------------------------------------
// Bernoulli numbers mod p

struct BernoulliModP {
    u64 p;
    u64 index;
    Residue value;
};

/// B_m mod p by the binomial recurrence sum C(m+1,k) B_k = 0; O(m^2).
/// This is the trusted oracle. Throws IndexOutOfRangeError for m >= p-2.
BernoulliModP bernoulli_mod_p(u64 p, u64 m);

/// B_0..B_{p-3} mod p in one O(p^2) pass (odd indices > 1 are zero).
std::vector<u64> bernoulli_row_mod_p(u64 p);

/// B_{p-3} mod p in O(p) through the half-range cubic harmonic sum.
/// The -1/2 proportionality constant is pinned by the test suite against the
/// recurrence oracle over all primes 7..200.
Residue bernoulli_pm3_fast(u64 p);

// ---------------------------------------------------------------------------
// W_n and M_n

/// W_0..W_{p-1} mod p built by W_n = 4 (2n-1)/(2n) W_{n-1}, W_0 = 1/2.
/// eval() extends to all n by the base-p digit decomposition:
///   r = 0            -> W_m
///   r > (p-1)/2      -> 0
///   otherwise        -> 2 W_m W_r, recursing on m.
class WTable {
public:
    explicit WTable(u64 p);
    u64 prime() const { return p_; }
    u64 base(u64 i) const { return w_[i]; }
    u64 eval(u64 n) const;

private:
    u64 p_;
    u64 half_;
    std::vector<u64> w_;
};

/// M_1, M_3, ..., M_{p-2} mod p built by M_n = -1/4 (n-2)/(n-1) M_{n-2}.
/// eval() takes odd n and applies the digit case split:
///   r = 0   -> M_m
///   m odd   -> 0
///   m even  -> M_{m+1} M_r, recursing as needed.
class MTable {
public:
    explicit MTable(u64 p);
    u64 prime() const { return p_; }
    u64 base_odd(u64 n) const { return m_[(n - 1) / 2]; }
    u64 eval(u64 n) const;

private:
    u64 p_;
    std::vector<u64> m_;
};

/// Convenience single-shot forms (build the table internally).
Residue w_mod_p(u64 n, u64 p);
Residue m_mod_p(u64 n, u64 p);

/// W_n = C(2n-1, n-1) mod p^e via generalized factorials (n >= 1).
u128 w_n_mod_pe(u64 n, u64 p, unsigned e, FactorialTables* cache = nullptr);
/// M_n = (-1)^{(n-1)/2} C(n-1, (n-1)/2) 4^{1-n} mod p^e (n odd >= 1).
u128 m_n_mod_pe(u64 n, u64 p, unsigned e, FactorialTables* cache = nullptr);
/// Cross-check paths built on the plain-product binomial.
u128 w_n_mod_pe_direct(u64 n, u64 p, unsigned e);
u128 m_n_mod_pe_direct(u64 n, u64 p, unsigned e);

/// W_n mod n^k and M_n mod n^k (n odd >= 1), combined over the prime-power
/// factors of n. Arbitrary-width results via the Nat-backed CRT; each single
/// prime-power modulus must stay below 2^126.
WideResidue w_value(u64 n, unsigned k, FactorialTables* cache = nullptr);
WideResidue m_value(u64 n, unsigned k, FactorialTables* cache = nullptr);

WideResidue crt_combine_wide(std::span<const Residue> parts);

// ---------------------------------------------------------------------------
// The S and T sum families (mod p^3 / p^2 / p as stated)

struct SSumRecord {
    u64 p;
    Residue a;  // sum 1/i,     i <= (p-1)/2,                      mod p^3
    Residue b;  // sum 1/(ij),  i < j <= (p-1)/2,                  mod p^2
    Residue c;  // sum 1/i,     i <= (p^2-1)/2 coprime to p,       mod p^2
    Residue d;  // sum 1/(ij),  i <= (p-1)/2, j <= (p^2-1)/2,      mod p
    Residue e;  // sum 1/(ijk), i < j < k <= (p-1)/2,              mod p
};
SSumRecord s_sums(u64 p);

struct TSumRecord {
    u64 p;
    Residue a;  // sum 1/j, j <= p-1, mod p^3
    Residue b;  // sum 1/(ij), i < j <= p-1, mod p^2
    Residue c;  // sum 1/i, i <= p^2-1 coprime to p, mod p^2
    Residue d;  // sum 1/(ij), j <= p-1, i <= p^2-1 coprime to p, mod p
    Residue e;  // sum 1/(ijk), i < j < k <= p-1, mod p
};
TSumRecord t_sums(u64 p);

/// S_c by the block-reduction fast path: only the final partial block
/// (p-1)/2 p + i, i <= (p-1)/2, summed mod p^2.
Residue s_c_block_fast(u64 p);

// ---------------------------------------------------------------------------
// Prime and pseudoprime tests

struct PrimeTestWitness {
    u64 p;
    bool pass;         // congruence holds mod p^4
    Residue residual;  // (W_p - 1) or (4^{p-1}-normalized M_p - 1) mod p^4
    Residue b_pm3;     // B_{p-3} mod p (fast path)
};

/// True iff C(2p-1, p-1) == 1 mod p^4. The direct test and the p | B_{p-3}
/// criterion must agree.
PrimeTestWitness wolstenholme_prime_test(u64 p, FactorialTables* cache = nullptr);
/// True iff (-1)^{(p-1)/2} C(p-1,(p-1)/2) == 4^{p-1} mod p^4.
PrimeTestWitness morley_prime_test(u64 p, FactorialTables* cache = nullptr);

struct PseudoprimeResult {
    bool pass;
    WideResidue residual;  // (value - 1) mod n^k
};

/// Order-k pseudoprime test for an odd composite n (k in 1..3).
PseudoprimeResult pseudoprime_test(u64 n, Family family, unsigned order,
                                   FactorialTables* cache = nullptr);

/// Everything the square-index closed forms relate, all mod p^4:
/// direct W_{p^2} vs 1 + 2/3 p^3 B_{p-3}; direct 4^{p^2-1} M_{p^2} vs
/// (1+pq)^2 + 1/12 p^3 B_{p-3} + 2p^2 q + 3p^3 q^2; direct 4^{p^2-1} vs
/// (1+pq)^2 + 2p^2 q + 3p^3 q^2.
struct SquareFormulas {
    u64 p;
    Residue w_direct, w_closed;
    Residue m4_direct, m4_closed;
    Residue pow4_direct, pow4_closed;
};
SquareFormulas square_pseudoprime_formulas(u64 p, FactorialTables* cache = nullptr);

// ---------------------------------------------------------------------------
// Reflection lemmas (proofs absent in the source; verdicts recorded, never
// assumed). Indices below zero are taken as 0, matching the vanishing of W_n
// mod p for (p-1)/2 < n < p.

struct ReflectionCheck {
    bool holds;
    u64 lhs, rhs;
};
ReflectionCheck w_reflection_check(u64 n, u64 p, const WTable* table = nullptr);
ReflectionCheck m_reflection_check(u64 n, u64 p, const MTable* table = nullptr);

// ---------------------------------------------------------------------------
// Per-task cache of prime tables; immutable after construction, share
// read-only across calls within one worker.

class CongruenceContext {
public:
    const WTable& w_table(u64 p);
    const MTable& m_table(u64 p);
    FactorialTables& factorials() { return factorials_; }

private:
    std::map<u64, WTable> w_;
    std::map<u64, MTable> m_;
    FactorialTables factorials_;
};

}  // namespace wolmor
