#include "apery/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "apery/apery_core.hpp"
#include "apery/digit_formula.hpp"
#include "apery/valuation.hpp"

namespace apery {

namespace {

constexpr std::uint64_t kMaxU64 = std::numeric_limits<std::uint64_t>::max();

struct SuiteInfo {
    Suite suite;
    std::string_view name;
    std::uint64_t default_lo;
    std::uint64_t default_hi;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::AMethods, "a-methods", 0, 2000},
    {Suite::BMethods, "b-methods", 0, 1000000},
    {Suite::BVsOracle, "b-vs-oracle", 0, 2000},
    {Suite::MinValuation, "min-valuation", 1, 1500},
    {Suite::LinrepRelation, "linrep-relation", 0, 100000},
};

const SuiteInfo& info(Suite s) {
    for (const auto& i : kSuites) {
        if (i.suite == s) {
            return i;
        }
    }
    throw std::logic_error("unknown suite");
}

std::optional<Mismatch> compare(std::uint64_t n, std::string_view lhs_method, const std::string& lhs,
                                std::string_view rhs_method, const std::string& rhs) {
    if (lhs == rhs) {
        return std::nullopt;
    }
    return Mismatch{n, std::string(lhs_method), lhs, std::string(rhs_method), rhs};
}

IntVector defined_vector(std::uint64_t n) {
    return IntVector{from_u64(b_closed(n)), 1, static_cast<long>(n % 2)};
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (const auto& i : kSuites) {
        if (i.name == name) {
            return i.suite;
        }
    }
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    return info(s).name;
}

std::pair<std::uint64_t, std::uint64_t> default_range(Suite s) {
    return {info(s).default_lo, info(s).default_hi};
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("APERY_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 4096) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::optional<Mismatch> sweep_first_mismatch(std::uint64_t lo, std::uint64_t hi, unsigned threads,
                                             const PointCheck& check) {
    if (lo > hi) {
        throw std::invalid_argument("sweep: lo > hi");
    }
    threads = std::max(1U, threads);
    // Number of points minus one; avoids overflow for the full 64-bit range.
    const std::uint64_t span = hi - lo;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, span / (std::uint64_t{threads} * 64));
    const std::uint64_t chunks = span / chunk + 1;

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best_n{kMaxU64};
    std::mutex mu;
    std::optional<Mismatch> best;
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t c = next_chunk.fetch_add(1);
                if (c >= chunks) {
                    return;
                }
                const std::uint64_t start = lo + c * chunk;
                const std::uint64_t stop = (span - c * chunk < chunk) ? hi : start + (chunk - 1);
                for (std::uint64_t n = start;; ++n) {
                    if (n > best_n.load(std::memory_order_relaxed)) {
                        break;
                    }
                    if (auto mm = check(n)) {
                        std::lock_guard lock(mu);
                        if (!best || mm->n < best->n) {
                            best = std::move(mm);
                            best_n.store(best->n);
                        }
                        break;
                    }
                    if (n == stop) {
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) {
                failure = std::current_exception();
            }
            next_chunk.store(chunks);
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return best;
}

VerifyReport run_verify(Suite suite, std::uint64_t lo, std::uint64_t hi, const VerifyOptions& opts) {
    if (lo > hi) {
        throw std::invalid_argument("verify: lo must not exceed hi");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned threads = opts.threads > 0 ? opts.threads : default_thread_count();

    VerifyReport report;
    report.suite = suite;
    report.lo = lo;
    report.hi = hi;

    switch (suite) {
        case Suite::AMethods: {
            report.methods_compared = {"direct", "barnes", "convolution", "recurrence"};
            // The recurrence is sequential; keep only the requested window.
            std::vector<BigNat> window;
            window.reserve(hi - lo + 1);
            BigNat prev = 0;
            BigNat cur = 1;
            for (std::uint64_t n = 0;; ++n) {
                if (n >= lo) {
                    window.push_back(cur);
                }
                if (n == hi) {
                    break;
                }
                BigNat next = n == 0 ? BigNat(3) : exact_div(3 * from_u64(2 * n + 1) * cur - from_u64(n) * prev, n + 1);
                prev.swap(cur);
                cur.swap(next);
            }
            report.first_mismatch = sweep_first_mismatch(lo, hi, threads, [&](std::uint64_t n) {
                const std::string direct = to_decimal(apery_direct(n));
                if (auto mm = compare(n, "direct", direct, "barnes", to_decimal(apery_barnes(n)))) {
                    return mm;
                }
                if (auto mm = compare(n, "direct", direct, "convolution", to_decimal(apery_convolution(n)))) {
                    return mm;
                }
                return compare(n, "direct", direct, "recurrence", to_decimal(window[n - lo]));
            });
            break;
        }
        case Suite::BMethods: {
            report.methods_compared = {"closed", "closed_alt", "thm1", "thm3", "linrep"};
            const LinearRep rep = opts.rep ? *opts.rep : valuation_representation();
            report.first_mismatch = sweep_first_mismatch(lo, hi, threads, [&](std::uint64_t n) {
                const std::string closed = std::to_string(b_closed(n));
                if (auto mm = compare(n, "closed", closed, "closed_alt", std::to_string(b_closed_alt(n)))) {
                    return mm;
                }
                if (auto mm = compare(n, "closed", closed, "thm1", std::to_string(b_rec_by_nine(n)))) {
                    return mm;
                }
                if (auto mm = compare(n, "closed", closed, "thm3", std::to_string(b_rec_by_three(n)))) {
                    return mm;
                }
                return compare(n, "closed", closed, "linrep", to_decimal(evaluate(rep, n)));
            });
            break;
        }
        case Suite::BVsOracle: {
            report.methods_compared = {"closed", "oracle"};
            report.first_mismatch = sweep_first_mismatch(lo, hi, threads, [](std::uint64_t n) {
                return compare(n, "closed", std::to_string(b_closed(n)), "oracle",
                               v_adic(apery_direct(n), 3).to_string());
            });
            break;
        }
        case Suite::MinValuation: {
            if (lo == 0) {
                throw std::invalid_argument("verify min-valuation: range must start at n >= 1");
            }
            report.methods_compared = {"min_term_valuation", "closed", "term_valuation", "oracle"};
            report.first_mismatch = sweep_first_mismatch(lo, hi, threads, [](std::uint64_t n) {
                const MinTermValuation got = min_term_valuation(n);
                const MinTermValuation want{n / 2, b_closed(n), true};
                auto show = [](const MinTermValuation& m) {
                    return "(" + std::to_string(m.argmin) + "," + std::to_string(m.value) + "," +
                           (m.unique ? "true" : "false") + ")";
                };
                if (auto mm = compare(n, "min_term_valuation", show(got), "expected", show(want))) {
                    return mm;
                }
                const std::vector<BigNat> terms = barnes_terms(n);
                for (std::uint64_t k = 0; k < terms.size(); ++k) {
                    const std::string tag = "(k=" + std::to_string(k) + ")";
                    if (auto mm = compare(n, "term_valuation" + tag, std::to_string(term_valuation(n, k)),
                                          "v3(barnes_term)" + tag, v_adic(terms[k], 3).to_string())) {
                        return mm;
                    }
                }
                return std::optional<Mismatch>{};
            });
            break;
        }
        case Suite::LinrepRelation: {
            if (hi > (kMaxU64 - 2) / 3) {
                throw std::invalid_argument("verify linrep-relation: hi too large for 3n+2 to fit 64 bits");
            }
            report.methods_compared = {"linrep", "closed"};
            const LinearRep rep = opts.rep ? *opts.rep : valuation_representation();
            if (rep.dim() != 3 || rep.base() != 3) {
                throw std::invalid_argument("verify linrep-relation: needs a 3-dimensional base-3 representation");
            }
            report.first_mismatch = sweep_first_mismatch(lo, hi, threads, [&](std::uint64_t n) {
                const IntVector vdef = defined_vector(n);
                const IntVector vrep = evaluate_vector(rep, n);
                if (auto mm = compare(n, "V(n)", format_vector(vrep), "(b(n),1,n mod 2)", format_vector(vdef))) {
                    return mm;
                }
                for (std::uint64_t k = 0; k < 3; ++k) {
                    const std::string mu = "mu(" + std::to_string(k) + ")";
                    const std::uint64_t m = 3 * n + k;
                    if (auto mm = compare(n, mu + "*(b(n),1,n mod 2)", format_vector(rep.matrix(k) * vdef),
                                          "(b(3n+" + std::to_string(k) + "),1,(3n+" + std::to_string(k) + ") mod 2)",
                                          format_vector(defined_vector(m)))) {
                        return mm;
                    }
                    if (auto mm = compare(n, mu + "*V(n)", format_vector(rep.matrix(k) * vrep),
                                          "V(3n+" + std::to_string(k) + ")", format_vector(evaluate_vector(rep, m)))) {
                        return mm;
                    }
                }
                return std::optional<Mismatch>{};
            });
            break;
        }
    }

    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
    return report;
}

nlohmann::ordered_json report_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = std::string(suite_name(report.suite));
    j["lo"] = std::to_string(report.lo);
    j["hi"] = std::to_string(report.hi);
    if (report.first_mismatch) {
        const Mismatch& m = *report.first_mismatch;
        j["mismatch"] = {{"n", std::to_string(m.n)},
                         {"lhs_method", m.lhs_method},
                         {"lhs", m.lhs},
                         {"rhs_method", m.rhs_method},
                         {"rhs", m.rhs}};
    } else {
        j["mismatch"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

}  // namespace apery
