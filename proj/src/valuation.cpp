#include "apery/valuation.hpp"

#include <stdexcept>

namespace apery {

std::uint64_t ExtNat::value() const {
    if (!value_) {
        throw std::domain_error("ExtNat: value() on +infinity");
    }
    return *value_;
}

std::string ExtNat::to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
}

namespace {

void require_base(std::uint64_t p) {
    if (p < 2) {
        throw std::invalid_argument("valuation base must be >= 2, got " + std::to_string(p));
    }
}

}  // namespace

ExtNat v_adic(const BigNat& x, std::uint64_t p) {
    require_base(p);
    if (sgn(x) == 0) {
        return ExtNat::infinity();
    }
    BigNat rest;
    const BigNat base = from_u64(p);
    return ExtNat(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
    require_base(p);
    std::uint64_t total = 0;
    // n / p^i computed as repeated division so p^i never overflows.
    for (std::uint64_t q = n / p; q > 0; q /= p) {
        total += q;
    }
    return total;
}

std::uint64_t term_valuation(std::uint64_t n, std::uint64_t k) {
    if (k > n / 2) {
        throw std::invalid_argument("term_valuation: k=" + std::to_string(k) + " exceeds floor(n/2) for n=" +
                                    std::to_string(n));
    }
    const std::uint64_t rest = n - 2 * k;
    std::uint64_t total = rest;
    std::uint64_t qn = n / 3;
    std::uint64_t qr = rest / 3;
    std::uint64_t qk = k / 3;
    while (qn > 0) {
        if (qn < qr + 2 * qk) {
            throw ConsistencyError("term_valuation: negative summand at n=" + std::to_string(n) +
                                   ", k=" + std::to_string(k));
        }
        total += qn - qr - 2 * qk;
        qn /= 3;
        qr /= 3;
        qk /= 3;
    }
    return total;
}

MinTermValuation min_term_valuation(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("min_term_valuation: n must be >= 1");
    }
    MinTermValuation best{0, term_valuation(n, 0), true};
    for (std::uint64_t k = 1; k <= n / 2; ++k) {
        const std::uint64_t d = term_valuation(n, k);
        if (d < best.value) {
            best = {k, d, true};
        } else if (d == best.value) {
            best.unique = false;
        }
    }
    return best;
}

}  // namespace apery
