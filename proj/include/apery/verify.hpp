#pragma once

// Cross-method verification sweeps over an index range.
//
// A sweep splits [lo, hi] into chunks handled by worker threads. Each chunk
// is scanned in order, and the reported mismatch is always the one with the
// smallest n, independent of scheduling.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "apery/linrep.hpp"

namespace apery {

enum class Suite { AMethods, BMethods, BVsOracle, MinValuation, LinrepRelation };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Default [lo, hi] for a suite when the caller gives none.
std::pair<std::uint64_t, std::uint64_t> default_range(Suite s);

struct Mismatch {
    std::uint64_t n = 0;
    std::string lhs_method;
    std::string lhs;
    std::string rhs_method;
    std::string rhs;

    bool operator==(const Mismatch&) const = default;
};

struct VerifyReport {
    Suite suite = Suite::BMethods;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::string> methods_compared;
    std::optional<Mismatch> first_mismatch;
    std::uint64_t elapsed_ms = 0;

    bool ok() const { return !first_mismatch.has_value(); }
};

struct VerifyOptions {
    unsigned threads = 0;  // 0: APERY_THREADS, else hardware concurrency
    // Replaces the representation checked by the linrep suites.
    std::optional<LinearRep> rep;
};

/// Worker count from APERY_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
unsigned default_thread_count();

using PointCheck = std::function<std::optional<Mismatch>(std::uint64_t)>;

/// Runs check(n) for n in [lo, hi] across `threads` workers and returns the
/// mismatch with the smallest n, if any.
std::optional<Mismatch> sweep_first_mismatch(std::uint64_t lo, std::uint64_t hi, unsigned threads,
                                             const PointCheck& check);

/// Throws std::invalid_argument when lo > hi or the range is outside what the
/// suite can address.
VerifyReport run_verify(Suite suite, std::uint64_t lo, std::uint64_t hi, const VerifyOptions& opts = {});

/// {"suite","lo","hi","mismatch","elapsed_ms"} with integers as decimal
/// strings except elapsed_ms.
nlohmann::ordered_json report_json(const VerifyReport& report);

}  // namespace apery
