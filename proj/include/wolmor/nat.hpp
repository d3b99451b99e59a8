#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wolmor {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string_u128(u128 v);
u128 u128_from_string(const std::string& s);

/// Arbitrary-precision unsigned integer, little-endian base-2^64 limbs.
/// Only what the exact oracles need: schoolbook multiply, small divide,
/// and reduction modulo word-sized and u128 moduli.
class Nat {
public:
    Nat() = default;
    Nat(u64 v) { if (v) limbs_.push_back(v); }
    explicit Nat(u128 v);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u128() const { return limbs_.size() <= 2; }
    u128 to_u128() const;  // requires fits_u128()

    Nat& operator+=(const Nat& rhs);
    Nat& operator-=(const Nat& rhs);  // requires *this >= rhs
    Nat& mul_u64(u64 m);
    Nat& add_u64(u64 v);
    Nat operator*(const Nat& rhs) const;

    /// Divides in place by d, returns the remainder. d > 0.
    u64 divmod_u64(u64 d);
    /// In-place exact division (remainder must be zero). d > 0.
    Nat& div_exact_u64(u64 d);

    u64 mod_u64(u64 m) const;
    u128 mod_u128(u128 m) const;

    int compare(const Nat& rhs) const;
    bool operator==(const Nat& rhs) const { return limbs_ == rhs.limbs_; }
    bool operator<(const Nat& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Nat& rhs) const { return compare(rhs) <= 0; }

    std::string to_string() const;
    static Nat from_string(const std::string& s);

    std::size_t limb_count() const { return limbs_.size(); }

private:
    void trim();
    std::vector<u64> limbs_;
};

}  // namespace wolmor
