#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apery {

// Exact integers. BigNat is the same representation restricted by contract
// to non-negative values.
using BigInt = mpz_class;
using BigNat = mpz_class;

// Raised when an identity that must hold by construction is violated
// (inexact division, negative summand, broken digit invariant). Seeing one
// means a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

BigNat from_u64(std::uint64_t v);

bool fits_u64(const BigInt& v);

// Throws std::out_of_range when v is negative or wider than 64 bits.
std::uint64_t to_u64(const BigInt& v);

// num / den, throwing ConsistencyError unless den divides num.
BigInt exact_div(const BigInt& num, const BigInt& den);
BigInt exact_div(const BigInt& num, std::uint64_t den);

std::string to_decimal(const BigInt& v);

// Parses a plain decimal natural ("0", "42", ...). No sign, no whitespace,
// no leading '+'. Leading zeros are accepted.
std::optional<BigNat> parse_natural(std::string_view text);

}  // namespace apery
