#pragma once

#include <functional>

#include "wolmor/congruences.hpp"

namespace wolmor {

enum class VerdictStatus { Pass, Fail, Partial };
const char* verdict_status_name(VerdictStatus status);

enum class Profile { Quick, Standard, Extended };
Profile profile_from_name(const std::string& name);
const char* profile_name(Profile profile);

/// Range ceilings per cost class. Statements draw the bound matching their
/// per-prime work.
struct VerifyLimits {
    u64 linear;     // O(p) per prime
    u64 quadratic;  // O(p^2) per prime
    u64 cubic;      // O(p^3) brute-force sweeps
    u64 exact_n;    // exact big-integer recurrence index bound
    u64 pair_bound; // two-prime lemmas: largest prime in a pair
    u64 product;    // corollary sweeps: bound on the products
    u64 mult;       // multiplicativity lemmas: bound on p and m
};
VerifyLimits limits_for(Profile profile);

struct UnknownStatementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A failed instance: the inputs plus both independently computed sides.
/// Feeding the inputs back through replay() reproduces the values bytewise.
struct Counterexample {
    std::vector<u64> inputs;
    std::string inputs_text;
    std::string lhs, rhs;
};

struct StatementVerdict {
    std::string id;
    std::string description;
    std::string range_tested;
    VerdictStatus status = VerdictStatus::Pass;
    u64 instances = 0;
    std::vector<Counterexample> counterexamples;  // capped; see note
    u64 counterexample_count = 0;                 // full count
    std::string note;
    double runtime_seconds = 0;
};

/// Every named statement becomes one empirical check over a parameterized
/// range, both sides computed by independent code paths. Reflection entries
/// report their effective domains instead of gating the exit code.
class StatementRegistry {
public:
    struct CheckOutcome {
        bool ok = true;
        std::string lhs, rhs;
        bool beyond_core_domain = false;  // reflection entries: n > (p-1)/2
    };

    struct Entry {
        std::string id;
        std::string description;
        std::string paths;  // what the two independent sides are
        bool reflection = false;
        std::function<std::vector<std::vector<u64>>(const VerifyLimits&)> items;
        std::function<CheckOutcome(std::span<const u64>)> check;
        std::function<std::string(std::span<const u64>)> render;
        // Optional fused sweep for ranges too large to materialize item by
        // item; must agree with check() on every failing instance.
        std::function<void(const VerifyLimits&, unsigned workers,
                           std::vector<Counterexample>&, u64& instances, u64& failures,
                           u64& core_failures)>
            sweep;
        std::function<std::string(const VerifyLimits&)> range;
    };

    void add(Entry entry);
    const Entry& find(const std::string& id) const;
    const std::vector<Entry>& entries() const { return entries_; }

    StatementVerdict verify(const std::string& id, const VerifyLimits& limits,
                            unsigned workers = 0) const;
    std::vector<StatementVerdict> run_all(Profile profile, unsigned workers = 0) const;

    /// Re-evaluates one recorded counterexample through the public operations.
    Counterexample replay(const std::string& id, std::span<const u64> inputs) const;

    /// The full statement registry (33 keys).
    static const StatementRegistry& standard();

private:
    std::vector<Entry> entries_;
};

/// Exit-code rule: verification fails iff a non-reflection statement fails.
bool all_passed(const std::vector<StatementVerdict>& verdicts);

/// One structured record per verdict. Runtime is intentionally not part of
/// the record so identical runs emit identical bytes; it travels on the
/// status stream instead.
std::string verdict_to_json(const StatementVerdict& verdict);
StatementVerdict verdict_from_json(const std::string& line);

}  // namespace wolmor
