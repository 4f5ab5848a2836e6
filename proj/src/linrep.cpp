#include "apery/linrep.hpp"

#include <stdexcept>
#include <utility>

namespace apery {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(r, c) = static_cast<long>(rows[r][c]);
        }
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("IntMatrix: shape mismatch in product");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(r, k);
            if (sgn(a) == 0) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) {
        throw std::invalid_argument("IntMatrix: shape mismatch in matrix-vector product");
    }
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

namespace {

std::optional<std::int64_t> to_small(const BigInt& v) {
    if (!v.fits_slong_p()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace

LinearRep::LinearRep(std::size_t base, std::vector<IntMatrix> matrices, IntVector initial, std::size_t output_index)
    : base_(base),
      dim_(initial.size()),
      matrices_(std::move(matrices)),
      initial_(std::move(initial)),
      output_index_(output_index) {
    if (base_ < 2) {
        throw std::invalid_argument("LinearRep: base must be >= 2");
    }
    if (matrices_.size() != base_) {
        throw std::invalid_argument("LinearRep: need exactly one matrix per digit");
    }
    for (const auto& m : matrices_) {
        if (m.rows() != dim_ || m.cols() != dim_) {
            throw std::invalid_argument("LinearRep: matrix shape does not match initial vector");
        }
    }
    if (output_index_ >= dim_) {
        throw std::invalid_argument("LinearRep: output index out of range");
    }
    if (matrices_[0] * initial_ != initial_) {
        throw std::invalid_argument("LinearRep: mu(0) must fix the initial vector");
    }

    std::vector<std::vector<std::int64_t>> small(base_, std::vector<std::int64_t>(dim_ * dim_));
    std::vector<std::int64_t> small_init(dim_);
    bool ok = true;
    for (std::size_t d = 0; d < base_ && ok; ++d) {
        for (std::size_t r = 0; r < dim_ && ok; ++r) {
            for (std::size_t c = 0; c < dim_ && ok; ++c) {
                auto v = to_small(matrices_[d].at(r, c));
                ok = v.has_value();
                if (ok) {
                    small[d][r * dim_ + c] = *v;
                }
            }
        }
    }
    for (std::size_t i = 0; i < dim_ && ok; ++i) {
        auto v = to_small(initial_[i]);
        ok = v.has_value();
        if (ok) {
            small_init[i] = *v;
        }
    }
    if (ok) {
        small_matrices_ = std::move(small);
        small_initial_ = std::move(small_init);
    }
}

std::vector<std::uint32_t> LinearRep::digits_of(std::uint64_t n) const {
    std::vector<std::uint32_t> digits;
    for (; n > 0; n /= base_) {
        digits.push_back(static_cast<std::uint32_t>(n % base_));
    }
    return digits;
}

std::vector<std::uint32_t> LinearRep::digits_of(const BigNat& n) const {
    if (sgn(n) < 0) {
        throw std::invalid_argument("LinearRep::digits_of: negative input");
    }
    std::vector<std::uint32_t> digits;
    BigNat cur = n;
    while (sgn(cur) != 0) {
        digits.push_back(static_cast<std::uint32_t>(mpz_fdiv_q_ui(cur.get_mpz_t(), cur.get_mpz_t(), base_)));
    }
    return digits;
}

std::optional<std::vector<std::int64_t>> LinearRep::evaluate_small(std::span<const std::uint32_t> digits) const {
    if (!small_matrices_) {
        return std::nullopt;
    }
    std::vector<std::int64_t> v = *small_initial_;
    std::vector<std::int64_t> next(dim_);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        const auto& m = (*small_matrices_)[*it];
        for (std::size_t r = 0; r < dim_; ++r) {
            std::int64_t acc = 0;
            for (std::size_t c = 0; c < dim_; ++c) {
                std::int64_t prod = 0;
                if (__builtin_mul_overflow(m[r * dim_ + c], v[c], &prod) ||
                    __builtin_add_overflow(acc, prod, &acc)) {
                    return std::nullopt;
                }
            }
            next[r] = acc;
        }
        v.swap(next);
    }
    return v;
}

IntVector LinearRep::evaluate_big(std::span<const std::uint32_t> digits) const {
    IntVector v = initial_;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = matrices_[*it] * v;
    }
    return v;
}

IntVector LinearRep::evaluate_digits(std::span<const std::uint32_t> digits) const {
    for (auto d : digits) {
        if (d >= base_) {
            throw std::invalid_argument("LinearRep: digit out of range for base");
        }
    }
    if (auto small = evaluate_small(digits)) {
        IntVector out;
        out.reserve(dim_);
        for (auto x : *small) {
            out.emplace_back(static_cast<long>(x));
        }
        return out;
    }
    return evaluate_big(digits);
}

LinearRep valuation_representation() {
    const IntMatrix even_digit = IntMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    const IntMatrix one_digit = IntMatrix::from_rows({{1, 1, -1}, {0, 1, 0}, {0, 1, -1}});
    return LinearRep(3, {even_digit, one_digit, even_digit}, IntVector{0, 1, 0}, 0);
}

IntVector evaluate_vector(const LinearRep& rep, std::uint64_t n) {
    return rep.evaluate_digits(rep.digits_of(n));
}

IntVector evaluate_vector(const LinearRep& rep, const BigNat& n) {
    return rep.evaluate_digits(rep.digits_of(n));
}

BigInt evaluate(const LinearRep& rep, std::uint64_t n) {
    return evaluate_vector(rep, n)[rep.output_index()];
}

BigInt evaluate(const LinearRep& rep, const BigNat& n) {
    return evaluate_vector(rep, n)[rep.output_index()];
}

IntMatrix kernel_matrix(const Sequence& seq, std::size_t base, std::size_t depth, std::size_t prefix_len) {
    if (base < 2) {
        throw std::invalid_argument("kernel_matrix: base must be >= 2");
    }
    if (prefix_len == 0) {
        throw std::invalid_argument("kernel_matrix: prefix_len must be >= 1");
    }
    std::size_t rows = 0;
    std::uint64_t power = 1;
    for (std::size_t b = 0; b <= depth; ++b) {
        std::uint64_t top = 0;
        if (__builtin_add_overflow(rows, power, &rows) || __builtin_mul_overflow(power, prefix_len, &top)) {
            throw std::overflow_error("kernel_matrix: index range exceeds 64 bits");
        }
        if (b < depth && __builtin_mul_overflow(power, base, &power)) {
            throw std::overflow_error("kernel_matrix: index range exceeds 64 bits");
        }
    }

    IntMatrix m(rows, prefix_len);
    std::size_t row = 0;
    power = 1;
    for (std::size_t b = 0; b <= depth; ++b) {
        for (std::uint64_t a = 0; a < power; ++a, ++row) {
            for (std::size_t n = 0; n < prefix_len; ++n) {
                m.at(row, n) = seq(power * n + a);
            }
        }
        power *= base;
    }
    return m;
}

std::size_t integer_rank(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    BigInt t;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(a.at(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t c = col; c < cols; ++c) {
                a.at(pivot, c).swap(a.at(rank, c));
            }
        }
        const BigInt& p = a.at(rank, col);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt f = a.at(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                t = p * a.at(r, c) - f * a.at(rank, c);
                a.at(r, c) = exact_div(t, prev_pivot);
            }
            a.at(r, col) = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

std::string format_vector(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_decimal(v[i]);
    }
    out += ')';
    return out;
}

}  // namespace apery
