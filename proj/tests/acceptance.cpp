// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apery/apery_core.hpp"
#include "apery/digit_formula.hpp"
#include "apery/linrep.hpp"
#include "apery/valuation.hpp"

#ifndef APERY_CLI_PATH
#error "APERY_CLI_PATH must name the CLI binary"
#endif

using namespace apery;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string detail) {
    return {false, std::move(detail)};
}

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) {
        ++failures;
    }
    std::printf("[%s] %s %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
}

std::string at(std::uint64_t n) {
    return "n=" + std::to_string(n);
}

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + APERY_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) {
        r.out += buf.data();
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main() {
    criterion("AC1", "a(n): direct = Barnes = convolution = recurrence, n <= 2000", [] {
        const auto rec = apery_recurrence_range(2000);
        for (std::uint64_t n = 0; n <= 2000; ++n) {
            const BigNat d = apery_direct(n);
            if (apery_barnes(n) != d) return fail(at(n) + " barnes");
            if (apery_convolution(n) != d) return fail(at(n) + " convolution");
            if (rec[n] != d) return fail(at(n) + " recurrence");
        }
        return Outcome{};
    });

    criterion("AC2", "b_closed(n) = v3(apery_direct(n)), n <= 2000", [] {
        for (std::uint64_t n = 0; n <= 2000; ++n) {
            if (ExtNat(b_closed(n)) != v_adic(apery_direct(n), 3)) return fail(at(n));
        }
        return Outcome{};
    });

    criterion("AC3", "b: closed = closed_alt = by-nine = by-three = linrep, n <= 10^6", [] {
        const LinearRep rep = valuation_representation();
        for (std::uint64_t n = 0; n <= 1000000; ++n) {
            const std::uint64_t b = b_closed(n);
            if (b_closed_alt(n) != b || b_rec_by_nine(n) != b || b_rec_by_three(n) != b ||
                evaluate(rep, n) != from_u64(b)) {
                return fail(at(n));
            }
        }
        return Outcome{};
    });

    criterion("AC4", "min_k d(n,k) unique at floor(n/2) = b_closed(n); d(n,k) = v3(term), 1 <= n <= 1500", [] {
        for (std::uint64_t n = 1; n <= 1500; ++n) {
            const auto m = min_term_valuation(n);
            if (m.argmin != n / 2 || !m.unique || m.value != b_closed(n)) return fail(at(n) + " minimum");
            const auto terms = barnes_terms(n);
            for (std::uint64_t k = 0; k <= n / 2; ++k) {
                if (ExtNat(term_valuation(n, k)) != v_adic(terms[k], 3)) {
                    return fail(at(n) + " k=" + std::to_string(k));
                }
            }
        }
        return Outcome{};
    });

    criterion("AC5", "alpha_i in {0,1}, (n mod 2) + sum alpha = b_closed(n), interval support, n <= 10^5", [] {
        for (std::uint64_t n = 1; n <= 100000; ++n) {
            const TernaryExpansion e = ternary_digits(n);
            const auto alpha = alpha_profile(n);
            std::uint64_t sum = 0;
            for (auto a : alpha) {
                if (a > 1) return fail(at(n) + " alpha out of range");
                sum += a;
            }
            if (n % 2 + sum != b_closed(n)) return fail(at(n) + " identity");
            if (alpha != alpha_support(ones_profile(e), e.top_index())) return fail(at(n) + " support");
        }
        return Outcome{};
    });

    criterion("AC6", "V(3n+k) = mu(k) V(n), n <= 10^5, k in {0,1,2}; mu(0) V(0) = V(0)", [] {
        const LinearRep rep = valuation_representation();
        if (rep.matrix(0) * rep.initial() != rep.initial()) return fail("fixed point");
        for (std::uint64_t n = 0; n <= 100000; ++n) {
            const IntVector v = evaluate_vector(rep, n);
            for (std::uint64_t k = 0; k < 3; ++k) {
                if (evaluate_vector(rep, 3 * n + k) != rep.matrix(k) * v) {
                    return fail(at(n) + " k=" + std::to_string(k));
                }
            }
        }
        return Outcome{};
    });

    criterion("AC7", "kernel rank of b = 3 for depth 2..5, prefix 200", [] {
        const Sequence b = [](std::uint64_t n) { return from_u64(b_closed(n)); };
        std::string ranks;
        for (std::size_t depth = 2; depth <= 5; ++depth) {
            const std::size_t rank = integer_rank(kernel_matrix(b, 3, depth, 200));
            ranks += (ranks.empty() ? "" : ",") + std::to_string(rank);
            if (rank != 3) return fail("ranks " + ranks);
        }
        return Outcome{true, "ranks " + ranks};
    });

    criterion("AC8", "r = n (mod 2), n <= 10^6", [] {
        for (std::uint64_t n = 0; n <= 1000000; ++n) {
            if (ones_profile(ternary_digits(n)).r % 2 != n % 2) return fail(at(n));
        }
        return Outcome{};
    });

    criterion("AC9", "CLI verify suites exit 0; mu(1) off-by-one flips linrep-relation to exit 1 at smallest n", [] {
        for (const char* args : {"verify --suite b-methods 0 100000", "verify --suite b-vs-oracle 0 2000",
                                 "verify --suite a-methods 0 0"}) {
            const Run r = run_cli(args);
            if (r.code != 0) return fail(std::string(args) + " exited " + std::to_string(r.code));
        }

        // mu(1)[0][0] += 1: smallest n with mu'(1) (b(n),1,n mod 2) != V(3n+1) is the first n with b(n) != 0.
        std::uint64_t expected = 0;
        while (b_closed(expected) == 0) {
            ++expected;
        }
        const Run r = run_cli("verify --suite linrep-relation --perturb 1,0,0,1 0 1000");
        if (r.code != 1) return fail("mutant exited " + std::to_string(r.code));
        const auto j = nlohmann::json::parse(r.out);
        if (!j["mismatch"].is_object() || j["mismatch"]["n"] != std::to_string(expected)) {
            return fail("mutant report " + r.out);
        }
        return Outcome{true, "mutant caught at n=" + std::to_string(expected)};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
