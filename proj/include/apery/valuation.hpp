#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "apery/bignat.hpp"

namespace apery {

/// A natural number or +infinity. Only comparison is defined; +infinity only
/// ever comes from the valuation of zero.
class ExtNat {
public:
    constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtNat infinity() { return ExtNat(); }

    constexpr bool is_infinite() const { return !value_.has_value(); }

    /// Throws std::domain_error on +infinity.
    std::uint64_t value() const;

    constexpr bool operator==(const ExtNat&) const = default;
    constexpr std::strong_ordering operator<=>(const ExtNat& o) const {
        if (is_infinite() || o.is_infinite()) {
            return static_cast<int>(is_infinite()) <=> static_cast<int>(o.is_infinite());
        }
        return *value_ <=> *o.value_;
    }

    std::string to_string() const;

private:
    constexpr ExtNat() = default;
    std::optional<std::uint64_t> value_;
};

/// Largest d with p^d | x; +infinity for x = 0. Rejects p < 2.
ExtNat v_adic(const BigNat& x, std::uint64_t p);

/// Legendre's formula: v_p(n!) = sum_{i>=1} floor(n / p^i). Rejects p < 2.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// 3-adic valuation d(n,k) of the k-th Barnes term
///   n!/((k!)^2 (n-2k)!) * 2^k * 3^(n-2k),
/// evaluated as (n-2k) + sum_{i>=1} (floor(n/3^i) - floor((n-2k)/3^i) - 2 floor(k/3^i)).
/// Every summand is checked to be nonnegative. Rejects k > floor(n/2).
std::uint64_t term_valuation(std::uint64_t n, std::uint64_t k);

struct MinTermValuation {
    std::uint64_t argmin = 0;
    std::uint64_t value = 0;
    bool unique = false;

    bool operator==(const MinTermValuation&) const = default;
};

/// Scans d(n,k) over k = 0..floor(n/2). `argmin` is the smallest minimizing k;
/// `unique` says whether no other k reaches the same value. Rejects n = 0.
MinTermValuation min_term_valuation(std::uint64_t n);

}  // namespace apery
