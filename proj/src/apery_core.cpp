#include "apery/apery_core.hpp"

#include <stdexcept>
#include <string>

namespace apery {

BigNat binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // After step i the accumulator holds C(n-k+i, i), always an integer.
    BigNat acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= from_u64(n - k + i);
        acc = exact_div(acc, i);
    }
    return acc;
}

BigNat apery_direct(std::uint64_t n) {
    // c1 = C(n,k), c2 = C(n+k,k), advanced together.
    BigNat c1 = 1;
    BigNat c2 = 1;
    BigNat sum = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        c1 *= from_u64(n - k);
        c1 = exact_div(c1, k + 1);
        c2 *= from_u64(n + k + 1);
        c2 = exact_div(c2, k + 1);
        sum += c1 * c2;
    }
    return sum;
}

BigNat barnes_term(std::uint64_t n, std::uint64_t k) {
    if (k > n / 2) {
        throw std::invalid_argument("barnes_term: k=" + std::to_string(k) + " exceeds floor(n/2) for n=" +
                                    std::to_string(n));
    }
    BigNat num;
    BigNat fk;
    BigNat frest;
    mpz_fac_ui(num.get_mpz_t(), n);
    mpz_fac_ui(fk.get_mpz_t(), k);
    mpz_fac_ui(frest.get_mpz_t(), n - 2 * k);
    BigNat multinomial = exact_div(num, fk * fk * frest);
    BigNat p2;
    BigNat p3;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, k);
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, n - 2 * k);
    return multinomial * p2 * p3;
}

std::vector<BigNat> barnes_terms(std::uint64_t n) {
    const std::uint64_t half = n / 2;
    std::vector<BigNat> terms;
    terms.reserve(half + 1);

    BigNat multinomial = 1;  // n! / ((k!)^2 (n-2k)!)
    BigNat pow2 = 1;
    BigNat pow3;
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, n);
    for (std::uint64_t k = 0;; ++k) {
        terms.push_back(multinomial * pow2 * pow3);
        if (k == half) {
            break;
        }
        multinomial *= from_u64(n - 2 * k);
        multinomial *= from_u64(n - 2 * k - 1);
        multinomial = exact_div(multinomial, (k + 1) * (k + 1));
        pow2 *= 2;
        pow3 = exact_div(pow3, 9);
    }
    return terms;
}

BigNat apery_barnes(std::uint64_t n) {
    BigNat sum = 0;
    for (const auto& t : barnes_terms(n)) {
        sum += t;
    }
    return sum;
}

BigNat apery_convolution(std::uint64_t n) {
    // lo = C(n,i) going up, hi = C(n,n-i) going down from C(n,n).
    BigNat lo = 1;
    BigNat hi = 1;
    BigNat pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n);
    BigNat sum = 0;
    for (std::uint64_t i = 0;; ++i) {
        sum += lo * hi * pow2;
        if (i == n) {
            break;
        }
        lo *= from_u64(n - i);
        lo = exact_div(lo, i + 1);
        // C(n, n-i-1) = C(n, n-i) * (n-i) / (i+1)
        hi *= from_u64(n - i);
        hi = exact_div(hi, i + 1);
        pow2 = exact_div(pow2, 2);
    }
    return sum;
}

std::vector<BigNat> apery_recurrence_range(std::uint64_t n_max) {
    std::vector<BigNat> out;
    out.reserve(n_max + 1);
    out.emplace_back(1);
    if (n_max == 0) {
        return out;
    }
    out.emplace_back(3);
    for (std::uint64_t n = 1; n < n_max; ++n) {
        BigNat next = 3 * from_u64(2 * n + 1) * out[n] - from_u64(n) * out[n - 1];
        out.push_back(exact_div(next, n + 1));
    }
    return out;
}

}  // namespace apery
