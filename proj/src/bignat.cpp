#include "apery/bignat.hpp"

#include <climits>

namespace apery {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "mpz_class conversions assume a 64-bit unsigned long");

BigNat from_u64(std::uint64_t v) {
    return BigNat(static_cast<unsigned long>(v));
}

bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && v.fits_ulong_p();
}

std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) {
        throw std::out_of_range("integer does not fit in 64 unsigned bits: " + to_decimal(v));
    }
    return v.get_ui();
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw ConsistencyError("inexact division: " + to_decimal(num) + " / " + to_decimal(den));
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt exact_div(const BigInt& num, std::uint64_t den) {
    if (den == 0 || !mpz_divisible_ui_p(num.get_mpz_t(), den)) {
        throw ConsistencyError("inexact division: " + to_decimal(num) + " / " + std::to_string(den));
    }
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), den);
    return q;
}

std::string to_decimal(const BigInt& v) {
    return v.get_str(10);
}

std::optional<BigNat> parse_natural(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
    }
    BigNat out;
    if (out.set_str(std::string(text), 10) != 0) {
        return std::nullopt;
    }
    return out;
}

}  // namespace apery
