#include "apery/digit_formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "apery/valuation.hpp"

namespace apery {

TernaryExpansion::TernaryExpansion(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) {
        if (d > 2) {
            throw std::invalid_argument("ternary digit out of range: " + std::to_string(d));
        }
    }
    if (!digits_.empty() && digits_.back() == 0) {
        throw std::invalid_argument("ternary expansion has a leading zero digit");
    }
}

std::string TernaryExpansion::to_string() const {
    if (digits_.empty()) {
        return "0";
    }
    std::string out;
    out.reserve(digits_.size());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        out.push_back(static_cast<char>('0' + *it));
    }
    return out;
}

TernaryExpansion ternary_digits(std::uint64_t n) {
    std::vector<std::uint8_t> digits;
    for (; n > 0; n /= 3) {
        digits.push_back(static_cast<std::uint8_t>(n % 3));
    }
    return TernaryExpansion(std::move(digits));
}

TernaryExpansion ternary_digits(const BigNat& n) {
    if (sgn(n) < 0) {
        throw std::invalid_argument("ternary_digits: negative input");
    }
    if (sgn(n) == 0) {
        return {};
    }
    const std::string msd_first = n.get_str(3);
    std::vector<std::uint8_t> digits(msd_first.size());
    std::transform(msd_first.rbegin(), msd_first.rend(), digits.begin(),
                   [](char c) { return static_cast<std::uint8_t>(c - '0'); });
    return TernaryExpansion(std::move(digits));
}

BigNat reconstruct(const TernaryExpansion& e) {
    BigNat n = 0;
    for (auto it = e.digits().rbegin(); it != e.digits().rend(); ++it) {
        n = n * 3 + *it;
    }
    return n;
}

OnesProfile ones_profile(const TernaryExpansion& e) {
    OnesProfile p;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 1) {
            p.s.push_back(j);
        }
    }
    p.r = p.s.size();
    return p;
}

namespace {

// sum_{i=1}^{r} (-1)^(r-i) (s_i + shift); the last index carries sign +.
std::int64_t alternating_sum(const OnesProfile& p, std::int64_t shift) {
    std::int64_t acc = 0;
    std::int64_t sign = 1;
    for (std::size_t i = p.r; i-- > 0;) {
        acc += sign * (static_cast<std::int64_t>(p.s[i]) + shift);
        sign = -sign;
    }
    return acc;
}

std::uint64_t checked_nonnegative(std::int64_t v, const char* what) {
    if (v < 0) {
        throw ConsistencyError(std::string(what) + ": negative result " + std::to_string(v));
    }
    return static_cast<std::uint64_t>(v);
}

std::uint64_t closed_from(const TernaryExpansion& e, unsigned parity) {
    return checked_nonnegative(static_cast<std::int64_t>(parity) + alternating_sum(ones_profile(e), 0),
                               "b_closed");
}

std::uint64_t closed_alt_from(const TernaryExpansion& e) {
    return checked_nonnegative(alternating_sum(ones_profile(e), 1), "b_closed_alt");
}

unsigned parity_of(const BigNat& n) {
    return mpz_odd_p(n.get_mpz_t()) ? 1U : 0U;
}

}  // namespace

std::uint64_t b_closed(std::uint64_t n) {
    return closed_from(ternary_digits(n), static_cast<unsigned>(n % 2));
}

std::uint64_t b_closed(const BigNat& n) {
    return closed_from(ternary_digits(n), parity_of(n));
}

std::uint64_t b_closed_alt(std::uint64_t n) {
    return closed_alt_from(ternary_digits(n));
}

std::uint64_t b_closed_alt(const BigNat& n) {
    return closed_alt_from(ternary_digits(n));
}

bool BMemo::lookup(std::uint64_t n, std::uint64_t& out) const {
    std::shared_lock lock(mu_);
    auto it = values_.find(n);
    if (it == values_.end()) {
        return false;
    }
    out = it->second;
    return true;
}

void BMemo::store(std::uint64_t n, std::uint64_t value) {
    std::unique_lock lock(mu_);
    values_.emplace(n, value);
}

std::size_t BMemo::size() const {
    std::shared_lock lock(mu_);
    return values_.size();
}

std::uint64_t b_rec_by_nine(std::uint64_t n) {
    if (n == 0) {
        return 0;
    }
    if (n % 3 == 1) {
        return b_rec_by_nine(n / 9) + 1;
    }
    const std::uint64_t q = n / 3;
    return b_rec_by_nine(q) + q % 2;
}

std::uint64_t b_rec_by_nine(std::uint64_t n, BMemo& memo) {
    if (n == 0) {
        return 0;
    }
    std::uint64_t cached = 0;
    if (memo.lookup(n, cached)) {
        return cached;
    }
    const std::uint64_t q = n / 3;
    const std::uint64_t v = n % 3 == 1 ? b_rec_by_nine(n / 9, memo) + 1 : b_rec_by_nine(q, memo) + q % 2;
    memo.store(n, v);
    return v;
}

std::uint64_t b_rec_by_nine(const BigNat& n) {
    if (sgn(n) < 0) {
        throw std::invalid_argument("b_rec_by_nine: negative input");
    }
    // b(n) = b(next) + increment along the chain, so the recursion unrolls
    // into an accumulation.
    std::uint64_t acc = 0;
    BigNat cur = n;
    BigNat q;
    while (sgn(cur) != 0) {
        const unsigned long rem = mpz_fdiv_q_ui(q.get_mpz_t(), cur.get_mpz_t(), 3);
        if (rem == 1) {
            mpz_fdiv_q_ui(cur.get_mpz_t(), q.get_mpz_t(), 3);
            acc += 1;
        } else {
            acc += parity_of(q);
            cur = q;
        }
    }
    return acc;
}

std::uint64_t b_rec_by_three(std::uint64_t n) {
    if (n == 0) {
        return 0;
    }
    const std::uint64_t q = n / 3;
    if (n % 3 == 1) {
        return b_rec_by_three(q) + 1 - q % 2;
    }
    return b_rec_by_three(q) + q % 2;
}

std::uint64_t b_rec_by_three(std::uint64_t n, BMemo& memo) {
    if (n == 0) {
        return 0;
    }
    std::uint64_t cached = 0;
    if (memo.lookup(n, cached)) {
        return cached;
    }
    const std::uint64_t q = n / 3;
    const std::uint64_t v = b_rec_by_three(q, memo) + (n % 3 == 1 ? 1 - q % 2 : q % 2);
    memo.store(n, v);
    return v;
}

std::uint64_t b_rec_by_three(const BigNat& n) {
    if (sgn(n) < 0) {
        throw std::invalid_argument("b_rec_by_three: negative input");
    }
    std::uint64_t acc = 0;
    BigNat cur = n;
    BigNat q;
    while (sgn(cur) != 0) {
        const unsigned long rem = mpz_fdiv_q_ui(q.get_mpz_t(), cur.get_mpz_t(), 3);
        const unsigned qpar = parity_of(q);
        acc += rem == 1 ? 1 - qpar : qpar;
        cur.swap(q);
    }
    return acc;
}

std::vector<std::uint8_t> alpha_support(const OnesProfile& profile, std::size_t m) {
    std::vector<std::uint8_t> out(m, 0);
    const std::size_t r = profile.r;
    if (r == 0) {
        return out;
    }
    // pos[0] = s_0 (parity-dependent), pos[i] = s_i for 1 <= i <= r.
    std::vector<std::int64_t> pos(r + 1);
    pos[0] = r % 2 == 0 ? -1 : 0;
    for (std::size_t i = 0; i < r; ++i) {
        pos[i + 1] = static_cast<std::int64_t>(profile.s[i]);
    }
    // even r: j = 0 .. r/2 - 1; odd r: j = 0 .. (r-1)/2 inclusive.
    const std::size_t pairs = r % 2 == 0 ? r / 2 : (r - 1) / 2 + 1;
    for (std::size_t j = 0; j < pairs; ++j) {
        const std::int64_t lo = pos[r - 2 * j - 1];
        const std::int64_t hi = pos[r - 2 * j];
        for (std::int64_t i = std::max<std::int64_t>(lo + 1, 1); i <= hi && i <= static_cast<std::int64_t>(m);
             ++i) {
            out[static_cast<std::size_t>(i - 1)] = 1;
        }
    }
    return out;
}

std::vector<std::uint8_t> alpha_profile(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("alpha_profile: n must be >= 1");
    }
    const TernaryExpansion e = ternary_digits(n);
    const std::size_t m = e.top_index();
    const std::uint64_t half = n / 2;

    std::vector<std::uint8_t> alpha;
    alpha.reserve(m);
    std::uint64_t sum = 0;
    std::uint64_t qn = n;
    std::uint64_t qh = half;
    for (std::size_t i = 1; i <= m; ++i) {
        qn /= 3;
        qh /= 3;
        const std::int64_t a = static_cast<std::int64_t>(qn) - 2 * static_cast<std::int64_t>(qh);
        if (a != 0 && a != 1) {
            throw ConsistencyError("alpha_profile: alpha_" + std::to_string(i) + " = " + std::to_string(a) +
                                   " for n=" + std::to_string(n));
        }
        alpha.push_back(static_cast<std::uint8_t>(a));
        sum += static_cast<std::uint64_t>(a);
    }

    if (alpha != alpha_support(ones_profile(e), m)) {
        throw ConsistencyError("alpha_profile: support does not match 1-digit intervals for n=" +
                               std::to_string(n));
    }
    if (n % 2 + sum != term_valuation(n, half)) {
        throw ConsistencyError("alpha_profile: (n mod 2) + sum alpha != d(n, floor(n/2)) for n=" +
                               std::to_string(n));
    }
    return alpha;
}

}  // namespace apery
