#include "wolmor/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace wolmor {

using ojson = nlohmann::ordered_json;

const char* verdict_status_name(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Partial: return "partial";
    }
    return "?";
}

Profile profile_from_name(const std::string& name) {
    if (name == "quick") return Profile::Quick;
    if (name == "standard") return Profile::Standard;
    if (name == "extended") return Profile::Extended;
    throw std::invalid_argument("unknown profile: " + name);
}

const char* profile_name(Profile profile) {
    switch (profile) {
        case Profile::Quick: return "quick";
        case Profile::Standard: return "standard";
        case Profile::Extended: return "extended";
    }
    return "?";
}

VerifyLimits limits_for(Profile profile) {
    switch (profile) {
        case Profile::Quick:
            return VerifyLimits{100, 100, 31, 100, 20, 10000, 20};
        case Profile::Standard:
            return VerifyLimits{2000, 300, 60, 600, 40, 1000000, 50};
        case Profile::Extended:
            return VerifyLimits{20000, 1000, 100, 2000, 60, 10000000, 80};
    }
    throw std::invalid_argument("bad profile");
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t CE_CAP = 16;

std::string s128(u128 v) { return to_string_u128(v); }

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p : primes_up_to(hi))
        if (p >= lo) out.push_back(p);
    return out;
}

u64 bern_pm3_oracle(u64 p) { return bernoulli_row_mod_p(p)[p - 3]; }

u64 neg(u64 x, u64 m) { return x == 0 ? 0 : m - x; }

u64 sylvester_rhs(u64 p) {
    u64 q = u64(fermat_quotient(p, 1).value.value);
    return neg(2 * q % p, p);
}

u64 lehmer_rhs(u64 p) {
    u64 p2 = p * p;
    u64 q = u64(fermat_quotient(p, 2).value.value);
    return submod64(mulmod64(p, mulmod64(q % p, q % p, p), p2), mulmod64(2, q, p2), p2);
}

u64 exact_w_mod(u64 n, u64 mod) { return binomial_exact(2 * n - 1, n - 1).mod_u64(mod); }

u64 exact_m_mod(u64 n, u64 mod) {
    u64 c = binomial_exact(n - 1, (n - 1) / 2).mod_u64(mod);
    u64 v = mulmod64(c, powmod64(inverse_u64(4 % mod, mod), n - 1, mod), mod);
    if (((n - 1) / 2) % 2) v = neg(v, mod);
    return v;
}

u128 thm3_closed(u64 p) {
    u128 m = pow_u128_checked(p, 4);
    u64 B = bern_pm3_oracle(p);
    u64 c = mulmod64(mulmod64(2, B, p), inverse_u64(3 % p, p), p);
    return submod128(1, mulmod128(u128(p) * p * p, c, m), m);
}

u128 lemma3_closed(u64 p) {
    u128 m = pow_u128_checked(p, 4);
    u128 p2 = u128(p) * p, p3 = p2 * p;
    u64 q1 = u64(fermat_quotient(p, 1).value.value);
    u64 q2 = u64(fermat_quotient(p, 2).value.value);
    u128 lift = powmod128(2, p - 1, m);
    u128 sq = mulmod128(lift, lift, m);
    u128 term_q = mulmod128((2 * p2) % m, q2, m);
    u128 term_q2 = mulmod128((3 * p3) % m, mulmod64(q1, q1, p), m);
    return addmod128(sq, addmod128(term_q, term_q2, m), m);
}

u128 thm2_closed(u64 p) {
    u128 m = pow_u128_checked(p, 4);
    u64 B = bern_pm3_oracle(p);
    u64 c = mulmod64(B, inverse_u64(12 % p, p), p);
    return addmod128(lemma3_closed(p), mulmod128(u128(p) * p * p, c, m), m);
}

u64 sb_closed_value(u64 p) {
    u64 p2 = p * p;
    u64 q2 = u64(fermat_quotient(p, 2).value.value);
    u64 q1 = q2 % p;
    u64 B = bern_pm3_oracle(p);
    u64 v = mulmod64(2, mulmod64(q2, q2, p2), p2);
    v = submod64(v, mulmod64((2 * p) % p2, powmod64(q1, 3, p), p2), p2);
    u64 c = mulmod64(mulmod64(7 % p, inverse_u64(6 % p, p), p), B, p);
    return submod64(v, mulmod64(p, c, p2), p2);
}

u64 sd_closed_value(u64 p) {
    u64 q = u64(fermat_quotient(p, 1).value.value);
    return mulmod64(4 % p, mulmod64(q, q, p), p);
}

u64 triple_closed_value(u64 p) {
    u64 B = bern_pm3_oracle(p);
    u64 q = u64(fermat_quotient(p, 1).value.value);
    u64 inv3 = inverse_u64(3 % p, p);
    u64 v = addmod64(mulmod64(mulmod64(2, inv3, p), B, p),
                     mulmod64(mulmod64(4 % p, inv3, p), powmod64(q, 3, p), p), p);
    return neg(v, p);
}

std::vector<std::vector<u64>> prime_items(u64 lo, u64 hi) {
    std::vector<std::vector<u64>> items;
    for (u64 p : primes_in(lo, hi)) items.push_back({p});
    return items;
}

std::string render_p(std::span<const u64> in) { return "p=" + std::to_string(in[0]); }

std::string range_primes(const char* which, u64 lo, u64 hi) {
    return std::string("primes ") + std::to_string(lo) + ".." + std::to_string(hi) +
           " (" + which + ")";
}

using Entry = StatementRegistry::Entry;
using CheckOutcome = StatementRegistry::CheckOutcome;

CheckOutcome outcome(bool ok, std::string lhs, std::string rhs) {
    return CheckOutcome{ok, std::move(lhs), std::move(rhs), false};
}

// exact u128 evaluation of the harmonic product identities, cleared by
// L = lcm(1..n): every term below is an integer
struct ExactHarmonic {
    u64 n;
    u64 L = 1;
    std::vector<u64> q;  // q[i] = L / i

    explicit ExactHarmonic(u64 n_) : n(n_), q(n_ + 1) {
        for (u64 i = 1; i <= n; ++i) L = std::lcm(L, i);
        for (u64 i = 1; i <= n; ++i) q[i] = L / i;
    }
};

}  // namespace

// ---------------------------------------------------------------------------

void StatementRegistry::add(Entry entry) { entries_.push_back(std::move(entry)); }

const Entry& StatementRegistry::find(const std::string& id) const {
    for (const Entry& e : entries_)
        if (e.id == id) return e;
    throw UnknownStatementError("unknown statement: " + id);
}

StatementVerdict StatementRegistry::verify(const std::string& id, const VerifyLimits& limits,
                                           unsigned workers) const {
    const Entry& entry = find(id);
    unsigned w = workers ? workers : unsigned(omp_get_max_threads());
    auto t0 = std::chrono::steady_clock::now();

    StatementVerdict verdict;
    verdict.id = entry.id;
    verdict.description = entry.description;
    verdict.range_tested = entry.range ? entry.range(limits) : "";

    u64 failures = 0, core_failures = 0;
    if (entry.sweep) {
        entry.sweep(limits, w, verdict.counterexamples, verdict.instances, failures,
                    core_failures);
    } else {
        auto items = entry.items(limits);
        verdict.instances = items.size();
        std::vector<unsigned char> flag(items.size(), 0);
#pragma omp parallel for num_threads(w) schedule(dynamic, 16)
        for (i64 i = 0; i < i64(items.size()); ++i) {
            CheckOutcome out = entry.check(items[i]);
            flag[i] = (out.ok ? 0 : 1) | (out.beyond_core_domain ? 2 : 0);
        }
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!(flag[i] & 1)) continue;
            ++failures;
            if (!(flag[i] & 2)) ++core_failures;
            if (verdict.counterexamples.size() < CE_CAP) {
                CheckOutcome out = entry.check(items[i]);
                verdict.counterexamples.push_back(
                    Counterexample{items[i], entry.render(items[i]), out.lhs, out.rhs});
            }
        }
    }
    verdict.counterexample_count = failures;
    if (entry.reflection) {
        if (failures == 0) {
            verdict.status = VerdictStatus::Pass;
            verdict.note = "holds on the full stated domain 0 < n < p";
        } else if (core_failures == 0) {
            verdict.status = VerdictStatus::Partial;
            verdict.note = "effective domain 0 < n <= (p-1)/2; " + std::to_string(failures) +
                           " failures beyond it";
        } else {
            verdict.status = VerdictStatus::Fail;
            verdict.note = std::to_string(core_failures) + " failures inside 0 < n <= (p-1)/2";
        }
    } else {
        verdict.status = failures == 0 ? VerdictStatus::Pass : VerdictStatus::Fail;
    }
    verdict.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

std::vector<StatementVerdict> StatementRegistry::run_all(Profile profile,
                                                         unsigned workers) const {
    VerifyLimits limits = limits_for(profile);
    std::vector<std::string> ids;
    for (const Entry& e : entries_) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    std::vector<StatementVerdict> verdicts;
    for (const std::string& id : ids) verdicts.push_back(verify(id, limits, workers));
    return verdicts;
}

Counterexample StatementRegistry::replay(const std::string& id,
                                         std::span<const u64> inputs) const {
    const Entry& entry = find(id);
    CheckOutcome out = entry.check(inputs);
    return Counterexample{std::vector<u64>(inputs.begin(), inputs.end()), entry.render(inputs),
                          out.lhs, out.rhs};
}

bool all_passed(const std::vector<StatementVerdict>& verdicts) {
    for (const StatementVerdict& v : verdicts) {
        bool reflection = v.id == "w-reflect" || v.id == "m-reflect";
        if (!reflection && v.status != VerdictStatus::Pass) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// The registry

namespace {

StatementRegistry build_registry() {
    StatementRegistry reg;

    // --- foundational harmonic facts ------------------------------------

    reg.add(Entry{
        "wolst-harmonic",
        "sum_{i=1}^{p-1} 1/i == 0 (mod p^2)",
        "direct summation of modular inverses vs the stated constant",
        false,
        [](const VerifyLimits& l) { return prime_items(5, l.linear); },
        [](std::span<const u64> in) {
            u64 v = u64(harmonic_sum(in[0], 1, SumRange::Full, 2).value);
            return outcome(v == 0, std::to_string(v), "0");
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p)", 5, l.linear); }});

    auto glaisher_expect = [](u64 p, i64 n) -> u64 { return n % i64(p - 1) == 0 ? p - 1 : 0; };

    reg.add(Entry{
        "glaisher-full",
        "sum_{i=1}^{p-1} i^n == -1 if p-1 | n, else 0 (mod p)",
        "term-by-term power sum vs the divisibility dichotomy",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(5, l.quadratic))
                for (u64 idx = 0; idx <= 4 * (p - 1); ++idx) items.push_back({p, idx});
            return items;
        },
        [glaisher_expect](std::span<const u64> in) {
            u64 p = in[0];
            i64 n = i64(in[1]) - i64(2 * (p - 1));
            u64 v = u64(power_sum(p, n, SumRange::Full).value);
            u64 want = glaisher_expect(p, n);
            return outcome(v == want, std::to_string(v), std::to_string(want));
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) +
                   " n=" + std::to_string(i64(in[1]) - i64(2 * (in[0] - 1)));
        },
        nullptr,
        [](const VerifyLimits& l) {
            return range_primes("O(p^2)", 5, l.quadratic) + ", |n| <= 2(p-1)";
        }});

    reg.add(Entry{
        "glaisher-half",
        "sum_{i=1}^{(p-1)/2} i^n == 0 (mod p) for even n with p-1 not dividing n",
        "half-range power sum vs zero",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(5, l.quadratic))
                for (u64 idx = 0; idx <= 4 * (p - 1); idx += 2) {
                    i64 n = i64(idx) - i64(2 * (p - 1));
                    if (n % i64(p - 1) == 0) continue;
                    items.push_back({p, idx});
                }
            return items;
        },
        [](std::span<const u64> in) {
            u64 p = in[0];
            i64 n = i64(in[1]) - i64(2 * (p - 1));
            u64 v = u64(power_sum(p, n, SumRange::Half).value);
            return outcome(v == 0, std::to_string(v), "0");
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) +
                   " n=" + std::to_string(i64(in[1]) - i64(2 * (in[0] - 1)));
        },
        nullptr,
        [](const VerifyLimits& l) {
            return range_primes("O(p^2)", 5, l.quadratic) + ", even |n| <= 2(p-1)";
        }});

    reg.add(Entry{
        "remark-sq",
        "2 sum_{i<j} 1/(ij) == (sum 1/i)^2 - sum 1/i^2, and the cubing identity, "
        "as exact integer identities",
        "both sides cleared by lcm(1..n)^2 (resp. ^3) and compared exactly",
        false,
        [](const VerifyLimits&) {
            std::vector<std::vector<u64>> items;
            for (u64 n = 2; n <= 20; ++n) {
                items.push_back({n, 0});
                items.push_back({n, 1});
            }
            return items;
        },
        [](std::span<const u64> in) {
            ExactHarmonic h(in[0]);
            u64 n = in[0];
            if (in[1] == 0) {
                u128 pairs = 0, sum = 0, squares = 0;
                for (u64 i = 1; i <= n; ++i) {
                    sum += h.q[i];
                    squares += u128(h.q[i]) * h.q[i];
                    for (u64 j = i + 1; j <= n; ++j) pairs += u128(h.q[i]) * h.q[j];
                }
                u128 lhs = 2 * pairs;
                u128 rhs = sum * sum - squares;
                return outcome(lhs == rhs, s128(lhs), s128(rhs));
            }
            // (sum 1/i)^3 = sum 1/i^3 + 3 sum_{i<j} 1/(ij^2) + 3 sum_{i<j} 1/(i^2 j)
            //             + 6 sum_{i<j<k} 1/(ijk)
            u128 sum = 0, cubes = 0, ij2 = 0, i2j = 0, ijk = 0;
            for (u64 i = 1; i <= n; ++i) {
                sum += h.q[i];
                cubes += u128(h.q[i]) * h.q[i] * h.q[i];
                for (u64 j = i + 1; j <= n; ++j) {
                    ij2 += u128(h.q[i]) * h.q[j] * h.q[j];
                    i2j += u128(h.q[i]) * h.q[i] * h.q[j];
                    for (u64 k = j + 1; k <= n; ++k) ijk += u128(h.q[i]) * h.q[j] * h.q[k];
                }
            }
            u128 lhs = sum * sum * sum;
            u128 rhs = cubes + 3 * ij2 + 3 * i2j + 6 * ijk;
            return outcome(lhs == rhs, s128(lhs), s128(rhs));
        },
        [](std::span<const u64> in) {
            return "n=" + std::to_string(in[0]) + (in[1] ? " (cubing)" : " (square)");
        },
        nullptr,
        [](const VerifyLimits&) { return std::string("exact instances n = 2..20"); }});

    // --- the two headline congruences ------------------------------------

    reg.add(Entry{
        "wolst-cong",
        "C(2p-1, p-1) == 1 (mod p^3)",
        "generalized-factorial binomial and plain-product binomial, both against 1",
        false,
        [](const VerifyLimits& l) { return prime_items(5, l.linear); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u128 a = w_n_mod_pe(p, p, 3);
            u128 b = w_n_mod_pe_direct(p, p, 3);
            return outcome(a == 1 && b == 1, s128(a), s128(b));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p)", 5, l.linear); }});

    reg.add(Entry{
        "sylvester",
        "sum_{i<=(p-1)/2} 1/i == -2q (mod p), q the Fermat quotient",
        "direct half-range summation vs the quotient closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(5, l.linear); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 lhs = u64(harmonic_sum(p, 1, SumRange::Half, 1).value);
            u64 rhs = sylvester_rhs(p);
            return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p)", 5, l.linear); }});

    reg.add(Entry{
        "lehmer-equiv",
        "M_p == 1 (mod p^3) iff sum_{i<=(p-1)/2} 1/i == -2q + pq^2 (mod p^2); "
        "both sides hold",
        "direct central-binomial evaluation vs direct summation",
        false,
        [](const VerifyLimits& l) { return prime_items(5, l.linear); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            bool morley = m_n_mod_pe(p, p, 3) == 1;
            bool lehmer = u64(harmonic_sum(p, 1, SumRange::Half, 2).value) == lehmer_rhs(p);
            return outcome(morley == lehmer && morley, morley ? "1" : "0", lehmer ? "1" : "0");
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p)", 5, l.linear); }});

    reg.add(Entry{
        "morley-cong",
        "(-1)^{(p-1)/2} C(p-1, (p-1)/2) == 4^{p-1} (mod p^3)",
        "generalized-factorial and plain-product binomials vs binary exponentiation",
        false,
        [](const VerifyLimits& l) { return prime_items(5, l.linear); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 p3 = p * p * p;
            u128 c = binomial_mod_pe(p - 1, (p - 1) / 2, p, 3);
            u128 c2 = binomial_mod_pe_direct(p - 1, (p - 1) / 2, p, 3);
            u128 lhs = ((p - 1) / 2) % 2 ? (c == 0 ? 0 : p3 - c) : c;
            u128 rhs = powmod64(4, p - 1, p3);
            return outcome(lhs == rhs && c == c2, s128(lhs), s128(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p)", 5, l.linear); }});

    // --- the square-index closed forms ------------------------------------

    reg.add(Entry{
        "thm2-msq",
        "4^{p^2-1} M_{p^2} == (1+pq)^2 + 1/12 p^3 B_{p-3} + 2p^2 q + 3p^3 q^2 (mod p^4)",
        "direct signed central binomial at index p^2 vs quotient/Bernoulli closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u128 lhs = binomial_mod_pe(p * p - 1, (p * p - 1) / 2, p, 4);
            u128 rhs = thm2_closed(p);
            return outcome(lhs == rhs, s128(lhs), s128(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "prop-ij2",
        "sum_{i<j<=(p-1)/2} 1/(i j^2) == 3/2 B_{p-3} (mod p)",
        "direct O(p^2) double summation vs the Bernoulli recurrence oracle",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 lhs = u64(ij_square_sums(p).first.value);
            u64 rhs = mulmod64(mulmod64(3, inverse_u64(2, p), p), bern_pm3_oracle(p), p);
            return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "prop-i2j",
        "sum_{i<j<=(p-1)/2} 1/(i^2 j) == 1/2 B_{p-3} (mod p)",
        "direct O(p^2) double summation vs the Bernoulli recurrence oracle",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 lhs = u64(ij_square_sums(p).second.value);
            u64 rhs = mulmod64(inverse_u64(2, p), bern_pm3_oracle(p), p);
            return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "cor-triple",
        "sum_{i<j<k<=(p-1)/2} 1/(ijk) == -2/3 B_{p-3} - 4/3 q^3 (mod p)",
        "brute-force triple sum (small p) / cubing-identity path (larger p) vs closed form",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(7, l.quadratic)) items.push_back({p, p <= l.cubic ? 0ull : 1ull});
            return items;
        },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 lhs = in[1] == 0 ? triple_harmonic_brute(p, SumRange::Half)
                                 : u64(s_sums(p).e.value);
            u64 rhs = triple_closed_value(p);
            return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + (in[1] ? " (identity path)" : " (brute force)");
        },
        nullptr,
        [](const VerifyLimits& l) {
            return "primes 7.." + std::to_string(l.cubic) + " brute, .." +
                   std::to_string(l.quadratic) + " via the cubing identity";
        }});

    reg.add(Entry{
        "lemma2-bern",
        "sum B_k == -1/2, sum k B_k == -1/2, sum (p-k) B_k == 1/2 (mod p), even k <= p-3",
        "Bernoulli recurrence oracle sums vs the stated constants",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(7, l.quadratic))
                for (u64 which = 0; which < 3; ++which) items.push_back({p, which});
            return items;
        },
        [](std::span<const u64> in) {
            u64 p = in[0];
            auto row = bernoulli_row_mod_p(p);
            u64 acc = 0;
            for (u64 k = 0; k + 2 <= p - 1; k += 2) {
                u64 weight = in[1] == 0 ? 1 : in[1] == 1 ? k % p : (p - k) % p;
                acc = addmod64(acc, mulmod64(weight, row[k], p), p);
            }
            u64 half = inverse_u64(2, p);
            u64 want = in[1] == 2 ? half : p - half;
            return outcome(acc == want, std::to_string(acc), std::to_string(want));
        },
        [](std::span<const u64> in) {
            static const char* names[] = {"sum B_k", "sum k B_k", "sum (p-k) B_k"};
            return "p=" + std::to_string(in[0]) + " " + names[in[1]];
        },
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "sb-closed",
        "S_b == 2q^2 - 2pq^3 - 7/6 p B_{p-3} (mod p^2)",
        "brute double sum and the square-identity path vs the closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 p2 = p * p;
            auto inv = inverse_table(p, p2, p);
            u64 brute = 0;
            for (u64 j = 2; j <= (p - 1) / 2; ++j)
                for (u64 i = 1; i < j; ++i) brute = addmod64(brute, mulmod64(inv[i], inv[j], p2), p2);
            u64 identity = u64(s_sums(p).b.value);
            u64 rhs = sb_closed_value(p);
            return outcome(brute == identity && identity == rhs,
                           std::to_string(brute) + "/" + std::to_string(identity),
                           std::to_string(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "sc-closed",
        "S_c == -2q + pq^2 (mod p^2)",
        "final-partial-block fast path and full O(p^2) summation vs the closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 fast = u64(s_c_block_fast(p).value);
            u64 full = u64(s_sums(p).c.value);
            u64 rhs = lehmer_rhs(p);
            return outcome(fast == full && full == rhs,
                           std::to_string(fast) + "/" + std::to_string(full),
                           std::to_string(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "sd-closed",
        "S_d == 4q^2 (mod p)",
        "direct O(p^2) summation over the coprime j range vs the closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u64 lhs = u64(s_sums(p).d.value);
            u64 rhs = sd_closed_value(p);
            return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "thm3-wsq",
        "C(2p^2-1, p^2-1) == 1 - 2/3 p^3 B_{p-3} (mod p^4)",
        "direct generalized-factorial evaluation at index p^2 vs the Bernoulli closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u128 lhs = w_n_mod_pe(p * p, p, 4);
            u128 rhs = thm3_closed(p);
            return outcome(lhs == rhs, s128(lhs), s128(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    reg.add(Entry{
        "lemma3-4pow",
        "4^{p^2-1} == (1+pq)^2 + 2p^2 q + 3p^3 q^2 (mod p^4)",
        "binary exponentiation at exponent p^2-1 vs the lifted quotient closed form",
        false,
        [](const VerifyLimits& l) { return prime_items(5, l.linear); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            u128 m = pow_u128_checked(p, 4);
            u128 lhs = powmod128(4, u128(p) * p - 1, m);
            u128 rhs = lemma3_closed(p);
            return outcome(lhs == rhs, s128(lhs), s128(rhs));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p)", 5, l.linear); }});

    reg.add(Entry{
        "main-equiv",
        "p Wolstenholme prime iff p Morley prime iff p^2 order-2 pseudoprime (both families)",
        "four direct mod-p^4 evaluations compared as booleans",
        false,
        [](const VerifyLimits& l) { return prime_items(7, l.quadratic); },
        [](std::span<const u64> in) {
            u64 p = in[0];
            bool wp = w_n_mod_pe(p, p, 4) == 1;
            bool mp = m_n_mod_pe(p, p, 4) == 1;
            bool wsq = w_n_mod_pe(p * p, p, 4) == 1;
            u128 m4 = binomial_mod_pe(p * p - 1, (p * p - 1) / 2, p, 4);
            u128 pw = powmod128(4, u128(p) * p - 1, pow_u128_checked(p, 4));
            bool msq = m4 == pw;
            bool ok = wp == mp && mp == wsq && wsq == msq;
            auto b = [](bool v) { return v ? "1" : "0"; };
            return outcome(ok, std::string(b(wp)) + b(mp), std::string(b(wsq)) + b(msq));
        },
        render_p,
        nullptr,
        [](const VerifyLimits& l) { return range_primes("O(p^2)", 7, l.quadratic); }});

    // --- multiplicativity and two-prime lemmas ----------------------------

    reg.add(Entry{
        "w-mult",
        "W_{pm} == W_m (mod p^3) for odd m",
        "generalized-factorial evaluation at index pm vs the exact binomial for W_m",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(5, l.mult))
                for (u64 m = 1; m <= l.mult; m += 2) items.push_back({p, m});
            return items;
        },
        [](std::span<const u64> in) {
            auto [p, m] = std::pair{in[0], in[1]};
            u64 p3 = p * p * p;
            u128 lhs = w_n_mod_pe(p * m, p, 3);
            u64 rhs = exact_w_mod(m, p3);
            return outcome(lhs == rhs, s128(lhs), std::to_string(rhs));
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + " m=" + std::to_string(in[1]);
        },
        nullptr,
        [](const VerifyLimits& l) {
            return "primes 5.." + std::to_string(l.mult) + ", odd m <= " + std::to_string(l.mult);
        }});

    auto pair_items = [](const VerifyLimits& l) {
        std::vector<std::vector<u64>> items;
        auto ps = primes_in(5, l.pair_bound);
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a + 1; b < ps.size(); ++b) items.push_back({ps[a], ps[b]});
        return items;
    };
    auto render_rs = [](std::span<const u64> in) {
        return "r=" + std::to_string(in[0]) + " s=" + std::to_string(in[1]);
    };
    auto range_pairs = [](const VerifyLimits& l) {
        return "prime pairs 5 <= r < s <= " + std::to_string(l.pair_bound);
    };

    reg.add(Entry{
        "w-semiprime",
        "W_rs == W_r W_s == W_r + W_s - 1 (mod r^3 s^3)",
        "exact big-integer binomials on all three indices",
        false,
        pair_items,
        [](std::span<const u64> in) {
            u64 r = in[0], s = in[1];
            u64 mod = r * r * r * s * s * s;
            u64 wrs = exact_w_mod(r * s, mod);
            u64 wr = exact_w_mod(r, mod), ws = exact_w_mod(s, mod);
            u64 prod = mulmod64(wr, ws, mod);
            u64 sum1 = submod64(addmod64(wr, ws, mod), 1, mod);
            bool ok = wrs == prod && wrs == sum1;
            return outcome(ok, std::to_string(wrs),
                           std::to_string(prod) + "/" + std::to_string(sum1));
        },
        render_rs,
        nullptr,
        range_pairs});

    reg.add(Entry{
        "w-biconditional",
        "W_rs == 1 (mod r^3 s^3) iff W_r == 1 (mod s^3) and W_s == 1 (mod r^3)",
        "exact big-integer evaluation of W_rs vs generalized-factorial one-sided tests",
        false,
        pair_items,
        [](std::span<const u64> in) {
            u64 r = in[0], s = in[1];
            u64 mod = r * r * r * s * s * s;
            bool lhs = exact_w_mod(r * s, mod) == 1;
            bool rhs = w_n_mod_pe(r, s, 3) == 1 && w_n_mod_pe(s, r, 3) == 1;
            return outcome(lhs == rhs, lhs ? "1" : "0", rhs ? "1" : "0");
        },
        render_rs,
        nullptr,
        range_pairs});

    reg.add(Entry{
        "w-recur",
        "2n W_n == (8n-4) W_{n-1} exactly (W_0 = 1/2)",
        "fresh exact binomials on both sides of the recurrence",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 n = 1; n <= l.exact_n; ++n) items.push_back({n});
            return items;
        },
        [](std::span<const u64> in) {
            u64 n = in[0];
            // doubled form keeps W_0 = 1/2 integral: D_n = 2 C(2n-1, n-1), D_0 = 1
            Nat lhs = binomial_exact(2 * n - 1, n - 1);
            lhs.mul_u64(2 * n).mul_u64(2);
            Nat rhs = n == 1 ? Nat(u64(1)) : binomial_exact(2 * n - 3, n - 2);
            if (n > 1) rhs.mul_u64(2);
            rhs.mul_u64(8 * n - 4);
            return outcome(lhs == rhs, lhs.to_string(), rhs.to_string());
        },
        [](std::span<const u64> in) { return "n=" + std::to_string(in[0]); },
        nullptr,
        [](const VerifyLimits& l) { return "exact recurrence, n = 1.." + std::to_string(l.exact_n); }});

    reg.add(Entry{
        "w-reflect",
        "W_n == 4^{2n} (-1)^{(p-1)/2} W_{(p-1)/2 - n} (mod p), 0 < n < p, "
        "indices below zero read as 0",
        "plain-product binomial for W_n vs recurrence table for the reflected index",
        true,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(5, l.quadratic))
                for (u64 n = 1; n < p; ++n) items.push_back({p, n});
            return items;
        },
        [](std::span<const u64> in) {
            u64 p = in[0], n = in[1];
            auto r = w_reflection_check(n, p);
            CheckOutcome out = outcome(r.holds, std::to_string(r.lhs), std::to_string(r.rhs));
            out.beyond_core_domain = n > (p - 1) / 2;
            return out;
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + " n=" + std::to_string(in[1]);
        },
        nullptr,
        [](const VerifyLimits& l) {
            return range_primes("O(p^2)", 5, l.quadratic) + ", all 0 < n < p";
        }});

    // --- the digit-decomposition theorems (fused sweeps at scale) ---------

    auto thm4_check = [](std::span<const u64> in) {
        u64 p = in[0], n = in[1];
        WTable table(p);
        u64 lhs = table.eval(n);
        u64 rhs = in[2] == 0 ? binomial_exact(2 * n - 1, n - 1).mod_u64(p)
                             : u64(binomial_mod_pe(2 * n - 1, n - 1, p, 1));
        return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
    };
    reg.add(Entry{
        "thm4-lucas",
        "W_n mod p from base-p digits: W_m if r = 0; 0 if r > (p-1)/2; else 2 W_m W_r",
        "digit-decomposition table vs exact binomials (small) and the "
        "generalized-factorial path (full range)",
        false,
        nullptr,
        thm4_check,
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + " n=" + std::to_string(in[1]) +
                   (in[2] ? " (factorial path)" : " (exact oracle)");
        },
        [thm4_check](const VerifyLimits& l, unsigned workers, std::vector<Counterexample>& ces,
                     u64& instances, u64& failures, u64& core_failures) {
            auto primes = primes_in(5, l.quadratic);
            u64 exact_bound = std::min<u64>(100, l.quadratic);
            std::vector<u64> fail_count(primes.size(), 0);
            std::vector<std::vector<std::vector<u64>>> fail_inputs(primes.size());
            u64 total = 0;
#pragma omp parallel for num_threads(workers) schedule(dynamic) reduction(+ : total)
            for (i64 i = 0; i < i64(primes.size()); ++i) {
                u64 p = primes[i];
                WTable table(p);
                FactorialTables cache(u64(1) << 18);
                for (u64 n = 1; n <= 3 * p * p; ++n) {
                    ++total;
                    if (table.eval(n) != u64(binomial_mod_pe(2 * n - 1, n - 1, p, 1, &cache))) {
                        ++fail_count[i];
                        if (fail_inputs[i].size() < CE_CAP) fail_inputs[i].push_back({p, n, 1});
                    }
                }
                if (p <= exact_bound) {
                    for (u64 n = 1; n <= 10 * p; ++n) {
                        ++total;
                        if (table.eval(n) != binomial_exact(2 * n - 1, n - 1).mod_u64(p)) {
                            ++fail_count[i];
                            if (fail_inputs[i].size() < CE_CAP) fail_inputs[i].push_back({p, n, 0});
                        }
                    }
                }
            }
            instances = total;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                failures += fail_count[i];
                core_failures += fail_count[i];
                for (const auto& in : fail_inputs[i]) {
                    if (ces.size() >= CE_CAP) break;
                    auto out = thm4_check(in);
                    ces.push_back(Counterexample{
                        in, "p=" + std::to_string(in[0]) + " n=" + std::to_string(in[1]),
                        out.lhs, out.rhs});
                }
            }
        },
        [](const VerifyLimits& l) {
            return "primes 5.." + std::to_string(l.quadratic) +
                   ", n <= 3p^2 (factorial path); exact oracle for p <= 100, n <= 10p";
        }});

    reg.add(Entry{
        "cor-twin",
        "rs is not an order-1 Wolstenholme pseudoprime for twin primes s = r + 2, r >= 5",
        "full order-1 pseudoprime test vs the corollary's claim",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 r : primes_up_to(u64(std::sqrt(double(l.product))) + 2)) {
                if (r < 5) continue;
                u64 s = r + 2;
                if (r * s >= l.product) break;
                if (is_prime(s)) items.push_back({r, s});
            }
            return items;
        },
        [](std::span<const u64> in) {
            bool pass = pseudoprime_test(in[0] * in[1], Family::W, 1).pass;
            return outcome(!pass, pass ? "1" : "0", "0");
        },
        render_rs,
        nullptr,
        [](const VerifyLimits& l) {
            return "twin pairs with 5 <= r, rs < " + std::to_string(l.product);
        }});

    reg.add(Entry{
        "cor-sg",
        "rs is not an order-1 Wolstenholme pseudoprime for Sophie Germain pairs s = 2r + 1, "
        "including r = 5",
        "full order-1 pseudoprime test vs the corollary's claim",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 r : primes_up_to(u64(std::sqrt(double(l.product) / 2)) + 2)) {
                if (r < 5) continue;
                u64 s = 2 * r + 1;
                if (r * s >= l.product) break;
                if (is_prime(s)) items.push_back({r, s});
            }
            return items;
        },
        [](std::span<const u64> in) {
            bool pass = pseudoprime_test(in[0] * in[1], Family::W, 1).pass;
            return outcome(!pass, pass ? "1" : "0", "0");
        },
        render_rs,
        nullptr,
        [](const VerifyLimits& l) {
            return "Sophie Germain pairs with 5 <= r, rs < " + std::to_string(l.product);
        }});

    // --- the M-family analogues -------------------------------------------

    reg.add(Entry{
        "m-mult",
        "M_{pm} == M_m (mod p^3) for odd m",
        "generalized-factorial evaluation at index pm vs the exact binomial for M_m",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(5, l.mult))
                for (u64 m = 1; m <= l.mult; m += 2) items.push_back({p, m});
            return items;
        },
        [](std::span<const u64> in) {
            auto [p, m] = std::pair{in[0], in[1]};
            u64 p3 = p * p * p;
            u128 lhs = m_n_mod_pe(p * m, p, 3);
            u64 rhs = exact_m_mod(m, p3);
            return outcome(lhs == rhs, s128(lhs), std::to_string(rhs));
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + " m=" + std::to_string(in[1]);
        },
        nullptr,
        [](const VerifyLimits& l) {
            return "primes 5.." + std::to_string(l.mult) + ", odd m <= " + std::to_string(l.mult);
        }});

    reg.add(Entry{
        "m-semiprime",
        "M_rs == M_r M_s == M_r + M_s - 1 (mod r^3 s^3)",
        "exact big-integer central binomials on all three indices",
        false,
        pair_items,
        [](std::span<const u64> in) {
            u64 r = in[0], s = in[1];
            u64 mod = r * r * r * s * s * s;
            u64 mrs = exact_m_mod(r * s, mod);
            u64 mr = exact_m_mod(r, mod), ms = exact_m_mod(s, mod);
            u64 prod = mulmod64(mr, ms, mod);
            u64 sum1 = submod64(addmod64(mr, ms, mod), 1, mod);
            bool ok = mrs == prod && mrs == sum1;
            return outcome(ok, std::to_string(mrs),
                           std::to_string(prod) + "/" + std::to_string(sum1));
        },
        render_rs,
        nullptr,
        range_pairs});

    reg.add(Entry{
        "m-biconditional",
        "M_rs == 1 (mod r^3 s^3) iff M_r == 1 (mod s^3) and M_s == 1 (mod r^3)",
        "exact big-integer evaluation of M_rs vs generalized-factorial one-sided tests",
        false,
        pair_items,
        [](std::span<const u64> in) {
            u64 r = in[0], s = in[1];
            u64 mod = r * r * r * s * s * s;
            bool lhs = exact_m_mod(r * s, mod) == 1;
            bool rhs = m_n_mod_pe(r, s, 3) == 1 && m_n_mod_pe(s, r, 3) == 1;
            return outcome(lhs == rhs, lhs ? "1" : "0", rhs ? "1" : "0");
        },
        render_rs,
        nullptr,
        range_pairs});

    reg.add(Entry{
        "m-recur",
        "(n-1) C_n == 4 (n-2) C_{n-2} exactly, C_n the unsigned central binomial, "
        "with the sign alternating",
        "fresh exact binomials on both sides of the recurrence",
        false,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 n = 3; n <= l.exact_n; n += 2) items.push_back({n});
            return items;
        },
        [](std::span<const u64> in) {
            u64 n = in[0];
            Nat lhs = binomial_exact(n - 1, (n - 1) / 2);
            lhs.mul_u64(n - 1);
            Nat rhs = binomial_exact(n - 3, (n - 3) / 2);
            rhs.mul_u64(4 * (n - 2));
            return outcome(lhs == rhs, lhs.to_string(), rhs.to_string());
        },
        [](std::span<const u64> in) { return "n=" + std::to_string(in[0]); },
        nullptr,
        [](const VerifyLimits& l) {
            return "exact recurrence, odd n = 3.." + std::to_string(l.exact_n);
        }});

    reg.add(Entry{
        "m-reflect",
        "M_n == 4^{1-n} M_{p-n+1} (mod p) for odd 0 < n < p",
        "plain-product central binomial for M_n vs recurrence table at the reflected index",
        true,
        [](const VerifyLimits& l) {
            std::vector<std::vector<u64>> items;
            for (u64 p : primes_in(5, l.quadratic))
                for (u64 n = 1; n < p; n += 2) items.push_back({p, n});
            return items;
        },
        [](std::span<const u64> in) {
            u64 p = in[0], n = in[1];
            auto r = m_reflection_check(n, p);
            CheckOutcome out = outcome(r.holds, std::to_string(r.lhs), std::to_string(r.rhs));
            out.beyond_core_domain = n > (p - 1) / 2;
            return out;
        },
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + " n=" + std::to_string(in[1]);
        },
        nullptr,
        [](const VerifyLimits& l) {
            return range_primes("O(p^2)", 5, l.quadratic) + ", all odd 0 < n < p";
        }});

    auto thm5_check = [](std::span<const u64> in) {
        u64 p = in[0], n = in[1];
        MTable table(p);
        u64 lhs = table.eval(n);
        u64 rhs = in[2] == 0 ? exact_m_mod(n, p) : u64(m_n_mod_pe(n, p, 1));
        return outcome(lhs == rhs, std::to_string(lhs), std::to_string(rhs));
    };
    reg.add(Entry{
        "thm5-lucas",
        "M_n mod p from base-p digits: M_m if r = 0; 0 if m odd; else M_{m+1} M_r",
        "digit-decomposition table vs exact binomials (small) and the "
        "generalized-factorial path (full range)",
        false,
        nullptr,
        thm5_check,
        [](std::span<const u64> in) {
            return "p=" + std::to_string(in[0]) + " n=" + std::to_string(in[1]) +
                   (in[2] ? " (factorial path)" : " (exact oracle)");
        },
        [thm5_check](const VerifyLimits& l, unsigned workers, std::vector<Counterexample>& ces,
                     u64& instances, u64& failures, u64& core_failures) {
            auto primes = primes_in(5, l.quadratic);
            u64 exact_bound = std::min<u64>(100, l.quadratic);
            std::vector<u64> fail_count(primes.size(), 0);
            std::vector<std::vector<std::vector<u64>>> fail_inputs(primes.size());
            u64 total = 0;
#pragma omp parallel for num_threads(workers) schedule(dynamic) reduction(+ : total)
            for (i64 i = 0; i < i64(primes.size()); ++i) {
                u64 p = primes[i];
                MTable table(p);
                FactorialTables cache(u64(1) << 18);
                for (u64 n = 1; n <= 3 * p * p; n += 2) {
                    ++total;
                    if (table.eval(n) != u64(m_n_mod_pe(n, p, 1, &cache))) {
                        ++fail_count[i];
                        if (fail_inputs[i].size() < CE_CAP) fail_inputs[i].push_back({p, n, 1});
                    }
                }
                if (p <= exact_bound) {
                    for (u64 n = 1; n <= 10 * p; n += 2) {
                        ++total;
                        if (table.eval(n) != exact_m_mod(n, p)) {
                            ++fail_count[i];
                            if (fail_inputs[i].size() < CE_CAP) fail_inputs[i].push_back({p, n, 0});
                        }
                    }
                }
            }
            instances = total;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                failures += fail_count[i];
                core_failures += fail_count[i];
                for (const auto& in : fail_inputs[i]) {
                    if (ces.size() >= CE_CAP) break;
                    auto out = thm5_check(in);
                    ces.push_back(Counterexample{
                        in, "p=" + std::to_string(in[0]) + " n=" + std::to_string(in[1]),
                        out.lhs, out.rhs});
                }
            }
        },
        [](const VerifyLimits& l) {
            return "primes 5.." + std::to_string(l.quadratic) +
                   ", odd n <= 3p^2 (factorial path); exact oracle for p <= 100, n <= 10p";
        }});

    return reg;
}

}  // namespace

const StatementRegistry& StatementRegistry::standard() {
    static StatementRegistry registry = build_registry();
    return registry;
}

std::string verdict_to_json(const StatementVerdict& v) {
    ojson j;
    j["id"] = v.id;
    j["description"] = v.description;
    j["range"] = v.range_tested;
    j["status"] = verdict_status_name(v.status);
    j["instances"] = v.instances;
    j["counterexample_count"] = v.counterexample_count;
    ojson ces = ojson::array();
    for (const auto& ce : v.counterexamples) {
        ojson c;
        c["inputs"] = ce.inputs;
        c["inputs_text"] = ce.inputs_text;
        c["lhs"] = ce.lhs;
        c["rhs"] = ce.rhs;
        ces.push_back(c);
    }
    j["counterexamples"] = ces;
    j["note"] = v.note;
    return j.dump();
}

StatementVerdict verdict_from_json(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    StatementVerdict v;
    v.id = j.at("id").get<std::string>();
    v.description = j.at("description").get<std::string>();
    v.range_tested = j.at("range").get<std::string>();
    std::string status = j.at("status").get<std::string>();
    v.status = status == "pass" ? VerdictStatus::Pass
               : status == "partial" ? VerdictStatus::Partial
                                     : VerdictStatus::Fail;
    v.instances = j.at("instances").get<u64>();
    v.counterexample_count = j.at("counterexample_count").get<u64>();
    for (const auto& c : j.at("counterexamples")) {
        Counterexample ce;
        ce.inputs = c.at("inputs").get<std::vector<u64>>();
        ce.inputs_text = c.at("inputs_text").get<std::string>();
        ce.lhs = c.at("lhs").get<std::string>();
        ce.rhs = c.at("rhs").get<std::string>();
        v.counterexamples.push_back(std::move(ce));
    }
    v.note = j.at("note").get<std::string>();
    return v;
}

}  // namespace wolmor
