#pragma once

// b(n) = v_3(a(n)) from the base-3 digits of n.
//
// Four evaluators are provided and must agree everywhere:
//   b_closed       (n mod 2) + sum_{i=1}^{r} (-1)^(r-i) s_i
//   b_closed_alt   sum_{i=1}^{r} (-1)^(r-i) (s_i + 1)
//   b_rec_by_nine  b(n/3) + (n/3 mod 2) for n = 0,2 (mod 3); b(n/9) + 1 for n = 1 (mod 3)
//   b_rec_by_three b(n/3) + (n/3 mod 2) for n = 0,2 (mod 3); b(n/3) + 1 - (n/3 mod 2) otherwise
// where s_1 < ... < s_r are the positions of the digits equal to 1.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "apery/bignat.hpp"

namespace apery {

/// Base-3 digits, least significant first. Empty exactly for n = 0; the last
/// digit is never 0 otherwise.
class TernaryExpansion {
public:
    TernaryExpansion() = default;
    /// Validates digit range and the no-leading-zero rule.
    explicit TernaryExpansion(std::vector<std::uint8_t> digits);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::uint8_t operator[](std::size_t j) const { return digits_[j]; }

    /// Index of the leading digit (m). Undefined for the empty expansion.
    std::size_t top_index() const { return digits_.size() - 1; }

    /// Digits most significant first, "0" for the empty expansion.
    std::string to_string() const;

    bool operator==(const TernaryExpansion&) const = default;

private:
    std::vector<std::uint8_t> digits_;
};

TernaryExpansion ternary_digits(std::uint64_t n);
TernaryExpansion ternary_digits(const BigNat& n);

BigNat reconstruct(const TernaryExpansion& e);

/// Positions of the 1-digits. s is 0-based storage of the 1-based s_1..s_r.
struct OnesProfile {
    std::size_t r = 0;
    std::vector<std::size_t> s;

    bool operator==(const OnesProfile&) const = default;
};

OnesProfile ones_profile(const TernaryExpansion& e);

std::uint64_t b_closed(std::uint64_t n);
std::uint64_t b_closed(const BigNat& n);

std::uint64_t b_closed_alt(std::uint64_t n);
std::uint64_t b_closed_alt(const BigNat& n);

/// Thread-safe memo for the recurrences. Concurrent sweeps sharing one
/// instance see the same values as a sequential run.
class BMemo {
public:
    bool lookup(std::uint64_t n, std::uint64_t& out) const;
    void store(std::uint64_t n, std::uint64_t value);
    std::size_t size() const;

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::uint64_t, std::uint64_t> values_;
};

std::uint64_t b_rec_by_nine(std::uint64_t n);
std::uint64_t b_rec_by_nine(std::uint64_t n, BMemo& memo);
std::uint64_t b_rec_by_nine(const BigNat& n);

std::uint64_t b_rec_by_three(std::uint64_t n);
std::uint64_t b_rec_by_three(std::uint64_t n, BMemo& memo);
std::uint64_t b_rec_by_three(const BigNat& n);

/// Support pattern predicted for alpha_1..alpha_m by the 1-digit positions:
/// alpha_i = 1 iff s_{r-2j-1} < i <= s_{r-2j} for some admissible j, with
/// s_0 = -1 when r is even and s_0 = 0 when r is odd.
std::vector<std::uint8_t> alpha_support(const OnesProfile& profile, std::size_t m);

/// alpha_i = floor(n/3^i) - 2 floor(floor(n/2)/3^i) for i = 1..m, where m is
/// the index of the leading ternary digit. Empty when m = 0.
///
/// Throws ConsistencyError if some alpha_i is outside {0,1}, if the values
/// differ from alpha_support(), or if (n mod 2) + sum alpha_i differs from
/// term_valuation(n, floor(n/2)). Rejects n = 0.
std::vector<std::uint8_t> alpha_profile(std::uint64_t n);

}  // namespace apery
