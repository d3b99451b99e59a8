#pragma once

#include <functional>

#include "wolmor/congruences.hpp"

namespace wolmor {

enum class HitKind { Prime, SquarePseudoprime, SemiprimePseudoprime, GeneralPseudoprime };

const char* hit_kind_name(HitKind kind);
HitKind hit_kind_from_name(const std::string& name);
Family family_from_letter(const std::string& letter);

/// A confirmed find. Non-hits are never emitted; every hit carries a
/// direct-evaluation confirmation independent of the fast filter that
/// selected it.
struct SearchHit {
    u64 n = 0;
    Family family = Family::W;
    HitKind kind = HitKind::Prime;
    unsigned order = 1;  // 4 for prime tests (the mod p^4 criterion), else 1..3
    Factorization factors;
    Residue residual;                // value - 1 at the decisive modulus
    std::optional<Residue> b_pm3;    // prime/square hits: B_{p-3} mod p
    bool confirmed = true;

    bool operator==(const SearchHit& rhs) const;
};

std::string hit_to_json(const SearchHit& hit);
SearchHit hit_from_json(const std::string& line);

/// Raised when a fast-path decision contradicts its direct confirmation.
struct ScanIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorruptCheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Checkpointing: one self-describing text record, key-value lines, embedded
// hit records, final hex digest line. Writes are atomic (write-then-rename).

struct ScanIdentity {
    std::string kind;  // wprimes | mprimes | square | semiprime | general
    Family family = Family::W;
    unsigned order = 1;
    u64 lo = 0, hi = 0;
    u64 block = 0;
    u64 seed = 0;
    double sample_rate = 0.01;
    bool strict = false;

    bool operator==(const ScanIdentity& rhs) const = default;
};

struct Checkpoint {
    ScanIdentity id;
    u64 next_block = 0;
    std::vector<SearchHit> hits;
};

std::string render_checkpoint(const Checkpoint& cp);
Checkpoint parse_checkpoint(const std::string& text);
void write_checkpoint_file(const std::string& path, const Checkpoint& cp);
Checkpoint read_checkpoint_file(const std::string& path);

// ---------------------------------------------------------------------------

struct ScanOptions {
    unsigned workers = 0;       // 0: all available
    u64 seed = 0;               // drives rejected-candidate sampling
    double sample_rate = 0.01;  // fraction of rejections re-checked directly
    bool strict = false;        // disable the twin / Sophie Germain filters
    std::string checkpoint_path;
    bool resume = false;
    u64 max_batches = 0;  // stop after N block batches (test hook); 0 = run out
    std::function<void(u64 done, u64 total)> progress;
};

struct ScanStats {
    u64 candidates = 0;
    u64 sampled_confirmations = 0;
    u64 filter_skips = 0;
};

struct ScanResult {
    std::vector<SearchHit> hits;  // sorted by n
    ScanStats stats;
    bool completed = true;  // false when max_batches stopped the scan early
};

/// Primes p in [lo, hi) with the order-4 congruence. Fast filter p | B_{p-3},
/// every decision confirmed or sampled against the direct mod-p^4 test.
ScanResult scan_wolstenholme_primes(u64 lo, u64 hi, const ScanOptions& opt = {});
ScanResult scan_morley_primes(u64 lo, u64 hi, const ScanOptions& opt = {});

/// Primes p in [lo, hi) whose square is an order-2 pseudoprime of the family;
/// hits confirmed through the square-index closed-form cross checks.
ScanResult scan_square_pseudoprimes(u64 lo, u64 hi, Family family,
                                    const ScanOptions& opt = {});

/// Products of two distinct odd primes r < s with rs < bound satisfying the
/// order-k congruence. Table lookups give W_s mod r; survivors are confirmed
/// by direct evaluation of C(2rs-1, rs-1) at both prime-power moduli.
ScanResult scan_semiprime_pseudoprimes(u64 bound, Family family, unsigned order,
                                       const ScanOptions& opt = {});

/// Odd composites with at least two distinct prime factors below bound
/// satisfying the order-1 congruence (prime powers satisfy it trivially and
/// are excluded). Smallest-prime-factor sieve drives the fast filter.
ScanResult scan_general_pseudoprimes(u64 bound, Family family, unsigned order,
                                     const ScanOptions& opt = {});

/// Serial reference implementations: plain loops over the same per-candidate
/// tests, no blocking, no checkpointing. Kept for output comparison and as
/// the benchmark baseline.
std::vector<SearchHit> scan_wolstenholme_primes_serial(u64 lo, u64 hi);
std::vector<SearchHit> scan_morley_primes_serial(u64 lo, u64 hi);
std::vector<SearchHit> scan_square_pseudoprimes_serial(u64 lo, u64 hi, Family family);
std::vector<SearchHit> scan_semiprime_pseudoprimes_serial(u64 bound, Family family,
                                                          unsigned order);
std::vector<SearchHit> scan_general_pseudoprimes_serial(u64 bound, Family family,
                                                        unsigned order);

/// Continue the scan identified by the checkpoint file to completion.
ScanResult resume_scan(const std::string& checkpoint_path, ScanOptions opt = {});

}  // namespace wolmor
