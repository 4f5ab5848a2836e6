#include "apery/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "apery/apery_core.hpp"
#include "apery/bignat.hpp"
#include "apery/digit_formula.hpp"
#include "apery/linrep.hpp"
#include "apery/valuation.hpp"
#include "apery/verify.hpp"

namespace apery::cli {

namespace {

// Bad arguments detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BigNat parse_nat_arg(const std::string& text, const char* what) {
    auto v = parse_natural(text);
    if (!v) {
        throw UsageError(std::string(what) + ": not a natural number: '" + text + "'");
    }
    return *v;
}

std::uint64_t require_u64(const BigNat& v, const char* what) {
    if (!fits_u64(v)) {
        throw UsageError(std::string(what) + " must be below 2^64 for this operation");
    }
    return to_u64(v);
}

std::string compute_a(const std::string& method, const BigNat& n_big) {
    static const char* kMethods[] = {"direct", "barnes", "convolution", "recurrence"};
    if (std::find(std::begin(kMethods), std::end(kMethods), method) == std::end(kMethods)) {
        throw UsageError("unknown method for --what a: '" + method + "'");
    }
    const std::uint64_t n = require_u64(n_big, "n");
    if (method == "direct") {
        return to_decimal(apery_direct(n));
    }
    if (method == "barnes") {
        return to_decimal(apery_barnes(n));
    }
    if (method == "convolution") {
        return to_decimal(apery_convolution(n));
    }
    return to_decimal(apery_recurrence_range(n).back());
}

std::string compute_b(const std::string& method, const BigNat& n) {
    if (method == "closed") {
        return std::to_string(b_closed(n));
    }
    if (method == "closed_alt") {
        return std::to_string(b_closed_alt(n));
    }
    if (method == "thm1") {
        return std::to_string(b_rec_by_nine(n));
    }
    if (method == "thm3") {
        return std::to_string(b_rec_by_three(n));
    }
    if (method == "linrep") {
        return to_decimal(evaluate(valuation_representation(), n));
    }
    if (method == "oracle") {
        return v_adic(apery_direct(require_u64(n, "n")), 3).to_string();
    }
    throw UsageError("unknown method for --what b: '" + method + "'");
}

// "DIGIT,ROW,COL,DELTA" -> representation with mu(DIGIT)[ROW][COL] += DELTA.
LinearRep perturbed_representation(const std::string& text) {
    std::vector<long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stol(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw UsageError("--perturb: malformed field '" + item + "'");
        }
    }
    if (parts.size() != 4) {
        throw UsageError("--perturb expects DIGIT,ROW,COL,DELTA");
    }
    const LinearRep base = valuation_representation();
    for (int i = 0; i < 3; ++i) {
        if (parts[i] < 0 || static_cast<std::size_t>(parts[i]) >= base.dim()) {
            throw UsageError("--perturb: index out of range");
        }
    }
    auto matrices = base.matrices();
    matrices[parts[0]].at(parts[1], parts[2]) += parts[3];
    try {
        return LinearRep(base.base(), std::move(matrices), base.initial(), base.output_index());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--perturb: ") + e.what());
    }
}

const std::vector<std::string> kTableColumns = {"n", "a", "b", "digits", "r", "s"};

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) {
        return v;
    }
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string bracketed(const std::vector<std::size_t>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(s[i]);
    }
    return out + "]";
}

int run_table(std::uint64_t lo, std::uint64_t hi, const std::string& format, const std::string& column_list,
              std::ostream& out) {
    if (format != "csv" && format != "json") {
        throw UsageError("--format must be csv or json");
    }
    std::vector<std::string> columns;
    std::stringstream ss(column_list);
    std::string col;
    while (std::getline(ss, col, ',')) {
        if (std::find(kTableColumns.begin(), kTableColumns.end(), col) == kTableColumns.end()) {
            throw UsageError("unknown column '" + col + "'");
        }
        columns.push_back(col);
    }
    if (columns.empty()) {
        throw UsageError("--columns must name at least one column");
    }
    if (lo > hi) {
        throw UsageError("table: lo must not exceed hi");
    }

    const bool want_a = std::find(columns.begin(), columns.end(), "a") != columns.end();
    std::vector<BigNat> a_values;
    if (want_a) {
        a_values = apery_recurrence_range(hi);
    }

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (format == "csv") {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i ? "," : "") << columns[i];
        }
        out << '\n';
    }
    for (std::uint64_t n = lo;; ++n) {
        const TernaryExpansion e = ternary_digits(n);
        const OnesProfile p = ones_profile(e);
        nlohmann::ordered_json row;
        std::vector<std::string> cells;
        for (const auto& c : columns) {
            if (c == "n") {
                row["n"] = n;
                cells.push_back(std::to_string(n));
            } else if (c == "a") {
                row["a"] = to_decimal(a_values[n]);
                cells.push_back(to_decimal(a_values[n]));
            } else if (c == "b") {
                const std::uint64_t b = b_closed(n);
                row["b"] = b;
                cells.push_back(std::to_string(b));
            } else if (c == "digits") {
                row["digits"] = e.to_string();
                cells.push_back(e.to_string());
            } else if (c == "r") {
                row["r"] = p.r;
                cells.push_back(std::to_string(p.r));
            } else {
                row["s"] = p.s;
                cells.push_back(csv_field(bracketed(p.s)));
            }
        }
        if (format == "csv") {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "," : "") << cells[i];
            }
            out << '\n';
        } else {
            rows.push_back(std::move(row));
        }
        if (n == hi) {
            break;
        }
    }
    if (format == "json") {
        out << rows.dump() << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation and cross-verification of a(n) = sum C(n,k)C(n+k,k) and b(n) = v3(a(n))"};
    app.require_subcommand(1);

    std::string n_text;
    std::string what;
    std::string method;
    auto* compute = app.add_subcommand("compute", "Print a(n) or b(n) computed by one method");
    compute->add_option("n", n_text, "Index n (decimal, arbitrary size for digit-based b methods)")->required();
    compute->add_option("--what", what, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
    compute->add_option("--method", method,
                        "a: direct|barnes|convolution|recurrence; b: closed|closed_alt|thm1|thm3|linrep|oracle");

    std::string suite_text;
    std::vector<std::string> range;
    std::string perturb;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "Cross-check methods over a range; JSON report on stdout");
    verify->add_option("--suite", suite_text, "a-methods|b-methods|b-vs-oracle|min-valuation|linrep-relation")
        ->required();
    verify->add_option("range", range, "lo hi (defaults depend on the suite)")->expected(0, 2);
    verify->add_option("--threads", threads, "Worker count (default: APERY_THREADS or hardware)");
    verify->add_option("--perturb", perturb, "DIGIT,ROW,COL,DELTA: add DELTA to one matrix entry (fault injection)");

    std::vector<std::string> table_range;
    std::string format = "csv";
    std::string columns = "n,a,b";
    auto* table = app.add_subcommand("table", "Emit a table of per-n quantities");
    table->add_option("range", table_range, "lo hi")->required()->expected(2);
    table->add_option("--format", format, "csv or json");
    table->add_option("--columns", columns, "Comma-separated subset of n,a,b,digits,r,s");

    std::size_t depth = 0;
    std::size_t len = 0;
    auto* kernel = app.add_subcommand("kernel", "Rank of the 3-kernel matrix of b");
    kernel->add_option("--depth", depth, "Kernel depth (<= 6)")->required();
    kernel->add_option("--len", len, "Prefix length (>= 1)")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            const BigNat n = parse_nat_arg(n_text, "n");
            if (method.empty()) {
                method = what == "a" ? "direct" : "closed";
            }
            out << (what == "a" ? compute_a(method, n) : compute_b(method, n)) << '\n';
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto suite = parse_suite(suite_text);
            if (!suite) {
                throw UsageError("unknown suite '" + suite_text + "'");
            }
            auto [lo, hi] = default_range(*suite);
            if (range.size() == 1) {
                throw UsageError("verify takes both lo and hi, or neither");
            }
            if (range.size() == 2) {
                lo = require_u64(parse_nat_arg(range[0], "lo"), "lo");
                hi = require_u64(parse_nat_arg(range[1], "hi"), "hi");
            }
            if (lo > hi) {
                throw UsageError("verify: lo must not exceed hi");
            }
            VerifyOptions opts;
            opts.threads = threads;
            if (!perturb.empty()) {
                opts.rep = perturbed_representation(perturb);
            }
            VerifyReport report;
            try {
                report = run_verify(*suite, lo, hi, opts);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            out << report_json(report).dump() << '\n';
            err << "verify " << suite_name(report.suite) << ": compared";
            for (const auto& m : report.methods_compared) {
                err << ' ' << m;
            }
            err << (report.ok() ? " -> ok" : " -> MISMATCH") << '\n';
            return report.ok() ? kExitOk : kExitMismatch;
        }
        if (table->parsed()) {
            const std::uint64_t lo = require_u64(parse_nat_arg(table_range[0], "lo"), "lo");
            const std::uint64_t hi = require_u64(parse_nat_arg(table_range[1], "hi"), "hi");
            return run_table(lo, hi, format, columns, out);
        }
        if (kernel->parsed()) {
            if (depth > 6) {
                throw UsageError("--depth must be <= 6");
            }
            if (len == 0) {
                throw UsageError("--len must be >= 1");
            }
            const IntMatrix m = kernel_matrix([](std::uint64_t n) { return from_u64(b_closed(n)); }, 3, depth, len);
            nlohmann::ordered_json j;
            j["depth"] = depth;
            j["prefix_len"] = len;
            j["rows"] = m.rows();
            j["rank"] = integer_rank(m);
            out << j.dump() << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace apery::cli
