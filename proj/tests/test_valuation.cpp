#include <doctest.h>

#include <random>

#include "apery/apery_core.hpp"
#include "apery/digit_formula.hpp"
#include "apery/valuation.hpp"

using namespace apery;

namespace {

// Reference valuation by repeated trial division.
ExtNat v_by_division(BigNat x, unsigned long p) {
    if (x == 0) {
        return ExtNat::infinity();
    }
    std::uint64_t d = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
        x /= p;
        ++d;
    }
    return d;
}

BigNat factorial(std::uint64_t n) {
    BigNat f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        f *= from_u64(i);
    }
    return f;
}

}  // namespace

TEST_CASE("ExtNat ordering") {
    CHECK(ExtNat::infinity() > ExtNat(0));
    CHECK(ExtNat::infinity() > ExtNat(UINT64_MAX));
    CHECK(ExtNat::infinity() == ExtNat::infinity());
    CHECK(ExtNat(3) < ExtNat(4));
    CHECK(ExtNat(7).value() == 7);
    CHECK_THROWS_AS(ExtNat::infinity().value(), std::domain_error);
    CHECK(ExtNat::infinity().to_string() == "inf");
}

TEST_CASE("v_adic") {
    CHECK(v_adic(0, 3).is_infinite());
    CHECK(v_adic(9, 3) == ExtNat(2));
    CHECK(v_adic(13, 3) == ExtNat(0));
    CHECK(v_adic(BigNat(1) << 200, 2) == ExtNat(200));
    CHECK_THROWS_AS(v_adic(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(v_adic(9, 0), std::invalid_argument);
}

TEST_CASE("v_adic matches repeated division") {
    for (unsigned long p : {2UL, 3UL, 5UL, 6UL, 10UL}) {
        for (unsigned long x = 0; x <= 5000; ++x) {
            CHECK(v_adic(x, p) == v_by_division(x, p));
        }
    }
    std::mt19937_64 rng(20260412);
    for (int i = 0; i < 300; ++i) {
        BigNat x = from_u64(rng()) * from_u64(rng() | 1);
        BigNat pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 3, rng() % 90);
        x *= pw;
        CHECK(v_adic(x, 3) == v_by_division(x, 3));
    }
}

TEST_CASE("factorial_valuation") {
    CHECK(factorial_valuation(0, 3) == 0);
    CHECK(factorial_valuation(6, 3) == 2);
    CHECK(factorial_valuation(9, 3) == 4);
    CHECK(factorial_valuation(UINT64_MAX, 2) == UINT64_MAX - 64);
    CHECK_THROWS_AS(factorial_valuation(5, 1), std::invalid_argument);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
        for (std::uint64_t n = 0; n <= 200; ++n) {
            CHECK(ExtNat(factorial_valuation(n, p)) == v_adic(factorial(n), p));
        }
    }
}

TEST_CASE("term_valuation") {
    CHECK(term_valuation(4, 0) == 4);
    CHECK(term_valuation(4, 1) == 3);
    CHECK(term_valuation(4, 2) == 1);
    CHECK(term_valuation(0, 0) == 0);
    CHECK_THROWS_AS(term_valuation(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(term_valuation(7, 4), std::invalid_argument);
}

TEST_CASE("term_valuation equals v3 of the factorial-built Barnes term") {
    for (std::uint64_t n = 0; n <= 90; ++n) {
        for (std::uint64_t k = 0; k <= n / 2; ++k) {
            CHECK(ExtNat(term_valuation(n, k)) == v_adic(barnes_term(n, k), 3));
        }
    }
}

TEST_CASE("min_term_valuation") {
    CHECK(min_term_valuation(4) == MinTermValuation{2, 1, true});
    CHECK(min_term_valuation(1) == MinTermValuation{0, 1, true});
    CHECK(min_term_valuation(6) == MinTermValuation{3, 0, true});
    CHECK_THROWS_AS(min_term_valuation(0), std::invalid_argument);
    for (std::uint64_t n = 1; n <= 400; ++n) {
        const auto m = min_term_valuation(n);
        CHECK(m.argmin == n / 2);
        CHECK(m.value == b_closed(n));
        CHECK(m.unique);
    }
}
