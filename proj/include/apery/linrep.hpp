#pragma once

// Linear representations of k-regular sequences: V(k*n + d) = mu(d) V(n),
// so V(n) = mu(d_0) mu(d_1) ... mu(d_m) V(0) for n = sum d_j k^j.
//
// All arithmetic is exact. Evaluation runs on int64 with overflow checks and
// falls back to GMP when a product or sum would wrap.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apery/bignat.hpp"

namespace apery {

using IntVector = std::vector<BigInt>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    /// Rows must all have the same length.
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& v) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

/// Immutable after construction.
class LinearRep {
public:
    /// Throws std::invalid_argument unless base >= 2, there is one dim x dim
    /// matrix per digit, initial has length dim, output_index < dim and
    /// mu(0) * initial == initial.
    LinearRep(std::size_t base, std::vector<IntMatrix> matrices, IntVector initial, std::size_t output_index);

    std::size_t base() const { return base_; }
    std::size_t dim() const { return dim_; }
    const IntMatrix& matrix(std::size_t digit) const { return matrices_.at(digit); }
    const std::vector<IntMatrix>& matrices() const { return matrices_; }
    const IntVector& initial() const { return initial_; }
    std::size_t output_index() const { return output_index_; }

    /// Digits of n in this representation's base, least significant first.
    std::vector<std::uint32_t> digits_of(std::uint64_t n) const;
    std::vector<std::uint32_t> digits_of(const BigNat& n) const;

    /// mu(d_0) ... mu(d_last) * initial for the given digit string
    /// (least significant first). Trailing zero digits are allowed.
    IntVector evaluate_digits(std::span<const std::uint32_t> digits) const;

private:
    std::optional<std::vector<std::int64_t>> evaluate_small(std::span<const std::uint32_t> digits) const;
    IntVector evaluate_big(std::span<const std::uint32_t> digits) const;

    std::size_t base_;
    std::size_t dim_;
    std::vector<IntMatrix> matrices_;
    IntVector initial_;
    std::size_t output_index_;

    // Row-major int64 copies of matrices_ and initial_, when every entry fits.
    std::optional<std::vector<std::vector<std::int64_t>>> small_matrices_;
    std::optional<std::vector<std::int64_t>> small_initial_;
};

/// The 3-dimensional base-3 representation of V(n) = (b(n), 1, n mod 2):
///   mu(0) = mu(2) = [[1,0,1],[0,1,0],[0,0,1]]
///   mu(1)         = [[1,1,-1],[0,1,0],[0,1,-1]]
/// with V(0) = (0,1,0) and b(n) read from coordinate 0.
LinearRep valuation_representation();

IntVector evaluate_vector(const LinearRep& rep, std::uint64_t n);
IntVector evaluate_vector(const LinearRep& rep, const BigNat& n);

BigInt evaluate(const LinearRep& rep, std::uint64_t n);
BigInt evaluate(const LinearRep& rep, const BigNat& n);

using Sequence = std::function<BigInt(std::uint64_t)>;

/// Rows are the prefixes (u(base^b n + a))_{n < prefix_len} for b = 0..depth
/// and 0 <= a < base^b, ordered by (b, a). Throws std::invalid_argument for
/// base < 2 or prefix_len == 0, std::overflow_error if an index exceeds 64 bits.
IntMatrix kernel_matrix(const Sequence& seq, std::size_t base, std::size_t depth, std::size_t prefix_len);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t integer_rank(const IntMatrix& m);

std::string format_vector(const IntVector& v);

}  // namespace apery
