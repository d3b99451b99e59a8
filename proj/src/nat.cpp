#include "wolmor/nat.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wolmor {

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int pos = 0;
    while (v > 0) {
        buf[pos++] = char('0' + int(v % 10));
        v /= 10;
    }
    std::string s;
    while (pos > 0) s += buf[--pos];
    return s;
}

u128 u128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        u128 next = v * 10 + u128(c - '0');
        if (next < v) throw std::overflow_error("integer literal exceeds 128 bits");
        v = next;
    }
    return v;
}

Nat::Nat(u128 v) {
    if (u64 lo = u64(v)) limbs_.push_back(lo);
    else if (v) limbs_.push_back(0);
    if (u64 hi = u64(v >> 64)) limbs_.push_back(hi);
}

u128 Nat::to_u128() const {
    assert(fits_u128());
    u128 v = 0;
    if (limbs_.size() > 1) v = u128(limbs_[1]) << 64;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

void Nat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Nat& Nat::operator+=(const Nat& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sum = u128(limbs_[i]) + carry + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = u64(sum);
        carry = u64(sum >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
    assert(compare(rhs) >= 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 sub = u128(i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + borrow;
        if (u128(limbs_[i]) >= sub) {
            limbs_[i] = u64(u128(limbs_[i]) - sub);
            borrow = 0;
        } else {
            limbs_[i] = u64((u128(1) << 64) + limbs_[i] - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

Nat& Nat::mul_u64(u64 m) {
    if (m == 0 || is_zero()) { limbs_.clear(); return *this; }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 prod = u128(limb) * m + carry;
        limb = u64(prod);
        carry = u64(prod >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

Nat& Nat::add_u64(u64 v) {
    Nat rhs(v);
    return *this += rhs;
}

Nat Nat::operator*(const Nat& rhs) const {
    Nat out;
    if (is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 cur = u128(limbs_[i]) * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = u64(cur);
            carry = u64(cur >> 64);
        }
        out.limbs_[i + rhs.limbs_.size()] += carry;
    }
    out.trim();
    return out;
}

u64 Nat::divmod_u64(u64 d) {
    assert(d > 0);
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = u64(cur / d);
        rem = cur % d;
    }
    trim();
    return u64(rem);
}

Nat& Nat::div_exact_u64(u64 d) {
    u64 rem = divmod_u64(d);
    assert(rem == 0);
    (void)rem;
    return *this;
}

u64 Nat::mod_u64(u64 m) const {
    assert(m > 0);
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 64) | limbs_[i]) % m;
    }
    return u64(rem);
}

u128 Nat::mod_u128(u128 m) const {
    assert(m > 0);
    if (m <= ~u64(0)) return mod_u64(u64(m));
    // Horner over limbs; the 2^64 shift is done bitwise to stay inside 128 bits.
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        for (int b = 0; b < 64; ++b) {
            rem <<= 1;
            if (rem >= m) rem -= m;
        }
        u128 lim = limbs_[i];
        rem += lim >= m ? lim % m : lim;
        if (rem >= m) rem -= m;
    }
    return rem;
}

int Nat::compare(const Nat& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string Nat::to_string() const {
    if (is_zero()) return "0";
    Nat tmp = *this;
    std::string digits;
    while (!tmp.is_zero()) {
        u64 chunk = tmp.divmod_u64(10'000'000'000'000'000'000ull);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 19 - part.size(), '0');
        digits.insert(0, part);
    }
    return digits;
}

Nat Nat::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    Nat out;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        out.mul_u64(10);
        out.add_u64(u64(c - '0'));
    }
    return out;
}

}  // namespace wolmor
