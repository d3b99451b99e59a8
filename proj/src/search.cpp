#include "wolmor/search.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wolmor {

using ojson = nlohmann::ordered_json;

const char* hit_kind_name(HitKind kind) {
    switch (kind) {
        case HitKind::Prime: return "prime";
        case HitKind::SquarePseudoprime: return "square-pseudoprime";
        case HitKind::SemiprimePseudoprime: return "semiprime-pseudoprime";
        case HitKind::GeneralPseudoprime: return "general-pseudoprime";
    }
    return "?";
}

HitKind hit_kind_from_name(const std::string& name) {
    if (name == "prime") return HitKind::Prime;
    if (name == "square-pseudoprime") return HitKind::SquarePseudoprime;
    if (name == "semiprime-pseudoprime") return HitKind::SemiprimePseudoprime;
    if (name == "general-pseudoprime") return HitKind::GeneralPseudoprime;
    throw std::invalid_argument("unknown hit kind: " + name);
}

Family family_from_letter(const std::string& letter) {
    if (letter == "W" || letter == "w") return Family::W;
    if (letter == "M" || letter == "m") return Family::M;
    throw std::invalid_argument("unknown family: " + letter);
}

bool SearchHit::operator==(const SearchHit& rhs) const {
    return n == rhs.n && family == rhs.family && kind == rhs.kind && order == rhs.order &&
           factors.factors == rhs.factors.factors && residual == rhs.residual &&
           b_pm3 == rhs.b_pm3 && confirmed == rhs.confirmed;
}

std::string hit_to_json(const SearchHit& hit) {
    ojson j;
    j["n"] = hit.n;
    j["family"] = family_letter(hit.family);
    j["kind"] = hit_kind_name(hit.kind);
    j["order"] = hit.order;
    ojson factors = ojson::array();
    for (auto [p, e] : hit.factors.factors) factors.push_back({p, e});
    j["factors"] = factors;
    j["residual"] = to_string_u128(hit.residual.value);
    j["modulus"] = to_string_u128(hit.residual.modulus);
    j["confirmed"] = hit.confirmed;
    if (hit.b_pm3) j["b_pm3"] = to_string_u128(hit.b_pm3->value);
    return j.dump();
}

SearchHit hit_from_json(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    SearchHit hit;
    hit.n = j.at("n").get<u64>();
    hit.family = family_from_letter(j.at("family").get<std::string>());
    hit.kind = hit_kind_from_name(j.at("kind").get<std::string>());
    hit.order = j.at("order").get<unsigned>();
    for (const auto& f : j.at("factors"))
        hit.factors.factors.push_back({f.at(0).get<u64>(), f.at(1).get<unsigned>()});
    hit.residual = Residue(u128_from_string(j.at("residual").get<std::string>()),
                           u128_from_string(j.at("modulus").get<std::string>()));
    hit.confirmed = j.at("confirmed").get<bool>();
    if (j.contains("b_pm3")) {
        if (hit.factors.factors.empty()) throw std::invalid_argument("b_pm3 without factors");
        hit.b_pm3 = Residue(u128_from_string(j.at("b_pm3").get<std::string>()),
                            hit.factors.factors.front().first);
    }
    return hit;
}

// ---------------------------------------------------------------------------
// Checkpoint record

namespace {

u64 fnv1a(std::string_view text) {
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(u64 v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::string render_checkpoint(const Checkpoint& cp) {
    std::ostringstream out;
    char rate[64];
    std::snprintf(rate, sizeof rate, "%.17g", cp.id.sample_rate);
    out << "wolmor-checkpoint v1\n";
    out << "kind: " << cp.id.kind << "\n";
    out << "family: " << family_letter(cp.id.family) << "\n";
    out << "order: " << cp.id.order << "\n";
    out << "lo: " << cp.id.lo << "\n";
    out << "hi: " << cp.id.hi << "\n";
    out << "block: " << cp.id.block << "\n";
    out << "seed: " << cp.id.seed << "\n";
    out << "sample-rate: " << rate << "\n";
    out << "strict: " << (cp.id.strict ? 1 : 0) << "\n";
    out << "next: " << cp.next_block << "\n";
    out << "hits: " << cp.hits.size() << "\n";
    for (const SearchHit& hit : cp.hits) out << "hit: " << hit_to_json(hit) << "\n";
    std::string body = out.str();
    return body + "digest: " + hex64(fnv1a(body)) + "\n";
}

Checkpoint parse_checkpoint(const std::string& text) {
    auto fail = [](const std::string& why) -> Checkpoint {
        throw CorruptCheckpointError("corrupt checkpoint: " + why);
    };
    std::size_t digest_pos = text.rfind("digest: ");
    if (digest_pos == std::string::npos) return fail("missing digest");
    std::string body = text.substr(0, digest_pos);
    std::string digest_line = text.substr(digest_pos);
    if (digest_line.size() < 8 + 16) return fail("short digest");
    if (hex64(fnv1a(body)) != digest_line.substr(8, 16)) return fail("digest mismatch");

    Checkpoint cp;
    std::istringstream in(body);
    std::string line;
    if (!std::getline(in, line) || line != "wolmor-checkpoint v1") return fail("bad header");
    u64 hit_count = 0;
    auto value_of = [&](const std::string& l) { return l.substr(l.find(": ") + 2); };
    while (std::getline(in, line)) {
        if (line.rfind("kind: ", 0) == 0) cp.id.kind = value_of(line);
        else if (line.rfind("family: ", 0) == 0) cp.id.family = family_from_letter(value_of(line));
        else if (line.rfind("order: ", 0) == 0) cp.id.order = unsigned(std::stoul(value_of(line)));
        else if (line.rfind("lo: ", 0) == 0) cp.id.lo = std::stoull(value_of(line));
        else if (line.rfind("hi: ", 0) == 0) cp.id.hi = std::stoull(value_of(line));
        else if (line.rfind("block: ", 0) == 0) cp.id.block = std::stoull(value_of(line));
        else if (line.rfind("seed: ", 0) == 0) cp.id.seed = std::stoull(value_of(line));
        else if (line.rfind("sample-rate: ", 0) == 0) cp.id.sample_rate = std::stod(value_of(line));
        else if (line.rfind("strict: ", 0) == 0) cp.id.strict = value_of(line) == "1";
        else if (line.rfind("next: ", 0) == 0) cp.next_block = std::stoull(value_of(line));
        else if (line.rfind("hits: ", 0) == 0) hit_count = std::stoull(value_of(line));
        else if (line.rfind("hit: ", 0) == 0) cp.hits.push_back(hit_from_json(value_of(line)));
        else return fail("unknown line: " + line);
    }
    if (cp.hits.size() != hit_count) return fail("hit count mismatch");
    return cp;
}

void write_checkpoint_file(const std::string& path, const Checkpoint& cp) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
        out << render_checkpoint(cp);
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorruptCheckpointError("cannot read checkpoint file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_checkpoint(buf.str());
}

// ---------------------------------------------------------------------------
// Blocked deterministic driver

namespace {

u64 sample_threshold(double rate) {
    if (rate <= 0) return 0;
    if (rate >= 1) return ~u64(0);
    return u64(rate * 18446744073709551616.0L);
}

bool sampled(u64 seed, u64 n, u64 threshold) { return mix64(seed ^ mix64(n)) < threshold; }

void merge_stats(ScanStats& into, const ScanStats& from) {
    into.candidates += from.candidates;
    into.sampled_confirmations += from.sampled_confirmations;
    into.filter_skips += from.filter_skips;
}

using BlockFn = std::function<void(u64, std::vector<SearchHit>&, ScanStats&)>;

ScanResult run_blocked(const ScanIdentity& id, u64 num_blocks, const ScanOptions& opt,
                       const BlockFn& fn) {
    ScanResult result;
    u64 next = 0;
    if (opt.resume && !opt.checkpoint_path.empty() &&
        std::filesystem::exists(opt.checkpoint_path)) {
        Checkpoint cp = read_checkpoint_file(opt.checkpoint_path);
        if (!(cp.id == id))
            throw CorruptCheckpointError("checkpoint does not describe the requested scan");
        next = cp.next_block;
        result.hits = std::move(cp.hits);
    }
    unsigned workers = opt.workers ? opt.workers : unsigned(omp_get_max_threads());
    u64 batch = std::max<u64>(8, u64(4) * workers);
    u64 batches_done = 0;
    while (next < num_blocks) {
        u64 b0 = next, b1 = std::min(num_blocks, b0 + batch);
        std::vector<std::vector<SearchHit>> hits(b1 - b0);
        std::vector<ScanStats> stats(b1 - b0);
        std::exception_ptr err;
#pragma omp parallel for num_threads(workers) schedule(dynamic)
        for (i64 i = 0; i < i64(b1 - b0); ++i) {
            try {
                fn(b0 + u64(i), hits[i], stats[i]);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (u64 i = 0; i < b1 - b0; ++i) {
            result.hits.insert(result.hits.end(), hits[i].begin(), hits[i].end());
            merge_stats(result.stats, stats[i]);
        }
        next = b1;
        if (!opt.checkpoint_path.empty())
            write_checkpoint_file(opt.checkpoint_path, Checkpoint{id, next, result.hits});
        if (opt.progress) opt.progress(next, num_blocks);
        ++batches_done;
        if (opt.max_batches && batches_done >= opt.max_batches && next < num_blocks) {
            result.completed = false;
            break;
        }
    }
    std::stable_sort(result.hits.begin(), result.hits.end(),
                     [](const SearchHit& a, const SearchHit& b) { return a.n < b.n; });
    return result;
}

constexpr u64 PRIME_BLOCK = u64(1) << 14;
// largest p with p^4 < 2^126
constexpr u64 MAX_P4 = 3037000499ull;

// ---------------------------------------------------------------------------
// Prime scans (order-4 criterion)

void prime_candidate(u64 p, Family family, u64 seed, u64 threshold, FactorialTables& tables,
                     std::vector<SearchHit>& hits, ScanStats& stats) {
    ++stats.candidates;
    Residue b = bernoulli_pm3_fast(p);
    auto direct = [&]() {
        return family == Family::W ? w_n_mod_pe(p, p, 4, &tables) : m_n_mod_pe(p, p, 4, &tables);
    };
    if (b.value == 0) {
        u128 value = direct();
        if (value != 1)
            throw ScanIntegrityError("B criterion and direct mod-p^4 test disagree at p = " +
                                     std::to_string(p));
        u128 m = pow_u128_checked(p, 4);
        SearchHit hit;
        hit.n = p;
        hit.family = family;
        hit.kind = HitKind::Prime;
        hit.order = 4;
        hit.factors.factors = {{p, 1}};
        hit.residual = Residue(0, m);
        hit.b_pm3 = b;
        hits.push_back(hit);
    } else if (sampled(seed, p, threshold)) {
        if (direct() == 1)
            throw ScanIntegrityError("fast rejection contradicted by direct test at p = " +
                                     std::to_string(p));
        ++stats.sampled_confirmations;
    }
}

ScanResult scan_primes(u64 lo, u64 hi, Family family, const ScanOptions& opt) {
    if (lo < 5 || lo >= hi) throw std::invalid_argument("prime scan requires 5 <= lo < hi");
    if (hi > MAX_P4) throw std::overflow_error("p^4 exceeds the supported modulus width");
    ScanIdentity id{family == Family::W ? "wprimes" : "mprimes",
                    family, 4, lo, hi, PRIME_BLOCK, opt.seed, opt.sample_rate, opt.strict};
    u64 blocks = (hi - lo + PRIME_BLOCK - 1) / PRIME_BLOCK;
    u64 threshold = sample_threshold(opt.sample_rate);
    return run_blocked(id, blocks, opt, [&](u64 b, std::vector<SearchHit>& hits, ScanStats& st) {
        u64 bl = lo + b * PRIME_BLOCK, bh = std::min(hi, bl + PRIME_BLOCK);
        auto seg = prime_segment(bl, bh);
        FactorialTables tables;
        for (u64 v = bl; v < bh; ++v)
            if (seg[v - bl] && v >= 5) prime_candidate(v, family, opt.seed, threshold, tables, hits, st);
    });
}

// ---------------------------------------------------------------------------
// Square pseudoprimes (order 2 over p^2, criterion mod p^4)

void square_candidate(u64 p, Family family, u64 seed, u64 threshold, FactorialTables& tables,
                      std::vector<SearchHit>& hits, ScanStats& stats) {
    ++stats.candidates;
    Residue b = bernoulli_pm3_fast(p);
    auto direct_value = [&]() -> u128 {
        // family value at index p^2, mod p^4 = (p^2)^2
        return family == Family::W ? w_n_mod_pe(p * p, p, 4, &tables)
                                   : m_n_mod_pe(p * p, p, 4, &tables);
    };
    if (b.value == 0) {
        SquareFormulas f = square_pseudoprime_formulas(p, &tables);
        bool closed_ok = f.w_direct == f.w_closed && f.m4_direct == f.m4_closed &&
                         f.pow4_direct == f.pow4_closed;
        u128 m = f.w_direct.modulus;
        u128 value = family == Family::W
                         ? f.w_direct.value
                         : mulmod128(f.m4_direct.value, inverse_u128(f.pow4_direct.value, m), m);
        if (!closed_ok || value != 1)
            throw ScanIntegrityError("square criterion and direct evaluation disagree at p = " +
                                     std::to_string(p));
        SearchHit hit;
        hit.n = p * p;
        hit.family = family;
        hit.kind = HitKind::SquarePseudoprime;
        hit.order = 2;
        hit.factors.factors = {{p, 2}};
        hit.residual = Residue(0, m);
        hit.b_pm3 = b;
        hits.push_back(hit);
    } else if (sampled(seed, p, threshold)) {
        if (direct_value() == 1)
            throw ScanIntegrityError("fast rejection contradicted by direct test at p = " +
                                     std::to_string(p));
        ++stats.sampled_confirmations;
    }
}

ScanResult scan_squares(u64 lo, u64 hi, Family family, const ScanOptions& opt) {
    if (lo < 5 || lo >= hi) throw std::invalid_argument("square scan requires 5 <= lo < hi");
    if (hi > MAX_P4) throw std::overflow_error("p^4 exceeds the supported modulus width");
    ScanIdentity id{"square", family, 2, lo, hi, PRIME_BLOCK, opt.seed, opt.sample_rate, opt.strict};
    u64 blocks = (hi - lo + PRIME_BLOCK - 1) / PRIME_BLOCK;
    u64 threshold = sample_threshold(opt.sample_rate);
    return run_blocked(id, blocks, opt, [&](u64 b, std::vector<SearchHit>& hits, ScanStats& st) {
        u64 bl = lo + b * PRIME_BLOCK, bh = std::min(hi, bl + PRIME_BLOCK);
        auto seg = prime_segment(bl, bh);
        FactorialTables tables;
        for (u64 v = bl; v < bh; ++v)
            if (seg[v - bl] && v >= 5) square_candidate(v, family, opt.seed, threshold, tables, hits, st);
    });
}

// ---------------------------------------------------------------------------
// Semiprime pseudoprimes

struct SemiprimeKit {
    u64 bound;
    Family family;
    unsigned order;
    bool strict;
    u64 seed;
    u64 threshold;
};

void semiprime_r_block(const SemiprimeKit& kit, u64 r, std::vector<SearchHit>& hits,
                       ScanStats& stats) {
    std::optional<WTable> wt;
    std::optional<MTable> mt;
    if (kit.family == Family::W) wt.emplace(r);
    else mt.emplace(r);
    FactorialTables tables;

    auto value_mod = [&](u64 index, u64 q, unsigned e) -> u128 {
        return kit.family == Family::W ? w_n_mod_pe(index, q, e, &tables)
                                       : m_n_mod_pe(index, q, e, &tables);
    };
    auto full_test = [&](u64 s) -> bool {
        u64 n = r * s;
        return value_mod(n, r, kit.order) == 1 && value_mod(n, s, kit.order) == 1;
    };

    u64 s_max = (kit.bound - 1) / r;
    constexpr u64 CHUNK = u64(1) << 20;
    for (u64 a = r + 1; a <= s_max; a += CHUNK) {
        u64 b = std::min(s_max + 1, a + CHUNK);
        auto seg = prime_segment(a, b);
        for (u64 s = a; s < b; ++s) {
            if (!seg[s - a]) continue;
            u64 n = r * s;
            ++stats.candidates;

            // corollary filters: twin and Sophie Germain pairs cannot be
            // order-1 pseudoprimes of the W family (re-verified by sampling)
            if (!kit.strict && kit.family == Family::W && r >= 5 &&
                (s == r + 2 || s == 2 * r + 1)) {
                ++stats.filter_skips;
                if (sampled(kit.seed, n, kit.threshold)) {
                    if (full_test(s))
                        throw ScanIntegrityError("corollary filter contradicted at n = " +
                                                 std::to_string(n));
                    ++stats.sampled_confirmations;
                }
                continue;
            }

            // one-sided test mod r by table lookup
            u64 side_r = kit.family == Family::W ? wt->eval(s) : mt->eval(s);
            if (side_r != 1) {
                if (sampled(kit.seed, n, kit.threshold)) {
                    if (value_mod(n, r, 1) == 1)
                        throw ScanIntegrityError("table rejection contradicted at n = " +
                                                 std::to_string(n));
                    ++stats.sampled_confirmations;
                }
                continue;
            }
            // one-sided test mod s by direct product
            if (value_mod(r, s, 1) != 1) {
                if (sampled(kit.seed, n, kit.threshold)) {
                    if (value_mod(n, s, 1) == 1)
                        throw ScanIntegrityError("one-sided rejection contradicted at n = " +
                                                 std::to_string(n));
                    ++stats.sampled_confirmations;
                }
                continue;
            }
            // higher orders: per-side reduction mod r^k and s^k
            if (kit.order >= 2 &&
                (value_mod(s, r, kit.order) != 1 || value_mod(r, s, kit.order) != 1))
                continue;

            // full confirmation: direct evaluation at index n on both sides
            u128 vr = value_mod(n, r, kit.order);
            u128 vs = value_mod(n, s, kit.order);
            if (vr != 1 || vs != 1)
                throw ScanIntegrityError("reduced test passed but direct evaluation failed at n = " +
                                         std::to_string(n));
            Residue parts[] = {Residue(vr, pow_u128_checked(r, kit.order)),
                               Residue(vs, pow_u128_checked(s, kit.order))};
            Residue combined = crt_combine(parts);
            SearchHit hit;
            hit.n = n;
            hit.family = kit.family;
            hit.kind = HitKind::SemiprimePseudoprime;
            hit.order = kit.order;
            hit.factors.factors = {{r, 1}, {s, 1}};
            hit.residual = Residue(submod128(combined.value, 1, combined.modulus), combined.modulus);
            hits.push_back(hit);
        }
    }
}

std::vector<u64> semiprime_r_list(u64 bound) {
    std::vector<u64> rs;
    for (u64 r : primes_up_to(u64(std::sqrt(double(bound))) + 2)) {
        if (r < 3) continue;
        if (r * r >= bound) break;
        rs.push_back(r);
    }
    return rs;
}

ScanResult scan_semiprimes(u64 bound, Family family, unsigned order, const ScanOptions& opt) {
    if (bound < 15) throw std::invalid_argument("semiprime scan requires bound >= 15");
    if (order < 1 || order > 3) throw std::invalid_argument("order must be 1..3");
    if (bound > (u64(1) << 40)) throw std::invalid_argument("bound beyond supported range");
    auto rs = semiprime_r_list(bound);
    ScanIdentity id{"semiprime", family, order, 3, bound, 1, opt.seed, opt.sample_rate, opt.strict};
    SemiprimeKit kit{bound, family, order, opt.strict, opt.seed, sample_threshold(opt.sample_rate)};
    return run_blocked(id, rs.size(), opt,
                       [&](u64 b, std::vector<SearchHit>& hits, ScanStats& st) {
                           semiprime_r_block(kit, rs[b], hits, st);
                       });
}

// ---------------------------------------------------------------------------
// General odd composites (order 1, at least two distinct primes)

struct GeneralShared {
    u64 bound;
    Family family;
    std::vector<u64> small_primes;  // odd primes <= sqrt(bound)
    std::vector<WTable> wt;
    std::vector<MTable> mt;
};

GeneralShared build_general_shared(u64 bound, Family family) {
    GeneralShared shared;
    shared.bound = bound;
    shared.family = family;
    for (u64 p : primes_up_to(u64(std::sqrt(double(bound))) + 2)) {
        if (p < 3 || p * p >= bound) continue;
        shared.small_primes.push_back(p);
    }
    for (u64 p : shared.small_primes) {
        if (family == Family::W) shared.wt.emplace_back(p);
        else shared.mt.emplace_back(p);
    }
    return shared;
}

Factorization factor_with_primes(u64 n, const std::vector<u64>& primes) {
    Factorization f;
    for (u64 p : primes) {
        if (p * p > n) break;
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

void general_block(const GeneralShared& shared, u64 bl, u64 bh, u64 seed, u64 threshold,
                   std::vector<SearchHit>& hits, ScanStats& stats) {
    // smallest odd prime factor per odd n in [bl, bh)
    std::vector<u32> spf((bh - bl + 1) / 2, 0);
    auto idx_of = [&](u64 n) { return (n - bl) / 2; };
    for (std::size_t pi = 0; pi < shared.small_primes.size(); ++pi) {
        u64 p = shared.small_primes[pi];
        u64 start = std::max(p * 3, (bl + p - 1) / p * p);
        if (start % 2 == 0) start += p;  // odd multiples only
        for (u64 v = start; v < bh; v += 2 * p)
            if (spf[idx_of(v)] == 0) spf[idx_of(v)] = u32(pi + 1);
    }
    FactorialTables tables;
    auto value_mod = [&](u64 n, u64 q, unsigned e) -> u128 {
        return shared.family == Family::W ? w_n_mod_pe(n, q, e, &tables)
                                          : m_n_mod_pe(n, q, e, &tables);
    };
    // full order-1 test over every prime-power factor; prime powers are not
    // candidates (their order-1 congruences hold trivially)
    auto full_test = [&](u64 n, Factorization& f, bool& shaped) -> std::optional<Residue> {
        f = factor_with_primes(n, shared.small_primes);
        shaped = f.factors.size() >= 2;
        if (!shaped) return std::nullopt;
        std::vector<Residue> parts;
        bool all_one = true;
        for (auto [q, e] : f.factors) {
            u128 v = value_mod(n, q, e);
            if (v != 1) all_one = false;
            parts.push_back(Residue(v, pow_u128_checked(q, e)));
        }
        if (!all_one) return std::nullopt;
        return crt_combine(parts);
    };

    for (u64 n = bl; n < bh; n += 2) {
        u32 tag = spf[idx_of(n)];
        if (tag == 0) continue;  // odd prime (or 1): composites below bound
                                 // always have a factor <= sqrt(bound)
        ++stats.candidates;
        std::size_t pi = tag - 1;
        u64 v1 = shared.family == Family::W ? shared.wt[pi].eval(n) : shared.mt[pi].eval(n);
        if (v1 != 1) {
            if (sampled(seed, n, threshold)) {
                Factorization f;
                bool shaped = false;
                if (full_test(n, f, shaped) && shaped)
                    throw ScanIntegrityError("fast rejection contradicted at n = " +
                                             std::to_string(n));
                ++stats.sampled_confirmations;
            }
            continue;
        }
        Factorization f;
        bool shaped = false;
        auto combined = full_test(n, f, shaped);
        if (!shaped || !combined) continue;
        SearchHit hit;
        hit.n = n;
        hit.family = shared.family;
        hit.kind = HitKind::GeneralPseudoprime;
        hit.order = 1;
        hit.factors = f;
        hit.residual = Residue(submod128(combined->value, 1, combined->modulus), combined->modulus);
        hits.push_back(hit);
    }
}

constexpr u64 GENERAL_BLOCK = u64(1) << 15;  // 2^14 odd candidates per block

ScanResult scan_general(u64 bound, Family family, unsigned order, const ScanOptions& opt) {
    if (order != 1) throw std::invalid_argument("general scan supports order 1");
    if (bound < 9) throw std::invalid_argument("general scan requires bound >= 9");
    if (bound > (u64(1) << 34)) throw std::invalid_argument("bound beyond supported range");
    GeneralShared shared = build_general_shared(bound, family);
    ScanIdentity id{"general", family, 1, 9, bound, GENERAL_BLOCK, opt.seed, opt.sample_rate,
                    opt.strict};
    u64 lo = 9;
    u64 blocks = bound > lo ? (bound - lo + GENERAL_BLOCK - 1) / GENERAL_BLOCK : 0;
    u64 threshold = sample_threshold(opt.sample_rate);
    return run_blocked(id, blocks, opt, [&](u64 b, std::vector<SearchHit>& hits, ScanStats& st) {
        u64 bl = lo + b * GENERAL_BLOCK, bh = std::min(bound, bl + GENERAL_BLOCK);
        general_block(shared, bl, bh, opt.seed, threshold, hits, st);
    });
}

}  // namespace

ScanResult scan_wolstenholme_primes(u64 lo, u64 hi, const ScanOptions& opt) {
    return scan_primes(lo, hi, Family::W, opt);
}

ScanResult scan_morley_primes(u64 lo, u64 hi, const ScanOptions& opt) {
    return scan_primes(lo, hi, Family::M, opt);
}

ScanResult scan_square_pseudoprimes(u64 lo, u64 hi, Family family, const ScanOptions& opt) {
    return scan_squares(lo, hi, family, opt);
}

ScanResult scan_semiprime_pseudoprimes(u64 bound, Family family, unsigned order,
                                       const ScanOptions& opt) {
    return scan_semiprimes(bound, family, order, opt);
}

ScanResult scan_general_pseudoprimes(u64 bound, Family family, unsigned order,
                                     const ScanOptions& opt) {
    return scan_general(bound, family, order, opt);
}

// ---------------------------------------------------------------------------
// Serial references: same per-candidate tests, plain in-order loops.

std::vector<SearchHit> scan_wolstenholme_primes_serial(u64 lo, u64 hi) {
    std::vector<SearchHit> hits;
    ScanStats stats;
    FactorialTables tables;
    u64 threshold = sample_threshold(0.01);
    auto seg = prime_segment(lo, hi);
    for (u64 p = lo; p < hi; ++p)
        if (seg[p - lo] && p >= 5) prime_candidate(p, Family::W, 0, threshold, tables, hits, stats);
    return hits;
}

std::vector<SearchHit> scan_morley_primes_serial(u64 lo, u64 hi) {
    std::vector<SearchHit> hits;
    ScanStats stats;
    FactorialTables tables;
    u64 threshold = sample_threshold(0.01);
    auto seg = prime_segment(lo, hi);
    for (u64 p = lo; p < hi; ++p)
        if (seg[p - lo] && p >= 5) prime_candidate(p, Family::M, 0, threshold, tables, hits, stats);
    return hits;
}

std::vector<SearchHit> scan_square_pseudoprimes_serial(u64 lo, u64 hi, Family family) {
    std::vector<SearchHit> hits;
    ScanStats stats;
    FactorialTables tables;
    u64 threshold = sample_threshold(0.01);
    auto seg = prime_segment(lo, hi);
    for (u64 p = lo; p < hi; ++p)
        if (seg[p - lo] && p >= 5) square_candidate(p, family, 0, threshold, tables, hits, stats);
    return hits;
}

std::vector<SearchHit> scan_semiprime_pseudoprimes_serial(u64 bound, Family family,
                                                          unsigned order) {
    SemiprimeKit kit{bound, family, order, false, 0, sample_threshold(0.01)};
    std::vector<SearchHit> hits;
    ScanStats stats;
    for (u64 r : semiprime_r_list(bound)) semiprime_r_block(kit, r, hits, stats);
    std::stable_sort(hits.begin(), hits.end(),
                     [](const SearchHit& a, const SearchHit& b) { return a.n < b.n; });
    return hits;
}

std::vector<SearchHit> scan_general_pseudoprimes_serial(u64 bound, Family family,
                                                        unsigned order) {
    if (order != 1) throw std::invalid_argument("general scan supports order 1");
    GeneralShared shared = build_general_shared(bound, family);
    std::vector<SearchHit> hits;
    ScanStats stats;
    u64 threshold = sample_threshold(0.01);
    for (u64 bl = 9; bl < bound; bl += GENERAL_BLOCK)
        general_block(shared, bl, std::min(bound, bl + GENERAL_BLOCK), 0, threshold, hits, stats);
    return hits;
}

ScanResult resume_scan(const std::string& checkpoint_path, ScanOptions opt) {
    Checkpoint cp = read_checkpoint_file(checkpoint_path);
    opt.checkpoint_path = checkpoint_path;
    opt.resume = true;
    opt.seed = cp.id.seed;
    opt.sample_rate = cp.id.sample_rate;
    opt.strict = cp.id.strict;
    const ScanIdentity& id = cp.id;
    if (id.kind == "wprimes") return scan_wolstenholme_primes(id.lo, id.hi, opt);
    if (id.kind == "mprimes") return scan_morley_primes(id.lo, id.hi, opt);
    if (id.kind == "square") return scan_square_pseudoprimes(id.lo, id.hi, id.family, opt);
    if (id.kind == "semiprime") return scan_semiprime_pseudoprimes(id.hi, id.family, id.order, opt);
    if (id.kind == "general") return scan_general_pseudoprimes(id.hi, id.family, id.order, opt);
    throw CorruptCheckpointError("unknown scan kind: " + id.kind);
}

}  // namespace wolmor
