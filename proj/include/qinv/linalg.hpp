#ifndef QINV_LINALG_HPP
#define QINV_LINALG_HPP

#include "qinv/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qinv {

// Incremental Gaussian elimination over F_p (p < 256), dense uint16 rows.
// Pivot rows are kept reduced with leading coefficient 1; incoming rows are
// reduced lazily (entries accumulate below 2^16 and are reduced in bulk), so
// the inner loop is a plain multiply-add that vectorizes.
//
// Layout: every row has `cols` system columns followed by `aug` augmentation
// columns. Pivots are chosen among system columns only; augmentation columns
// just ride along (used for witness/relation extraction).
class FpSolver {
public:
    FpSolver(std::uint64_t p, std::size_t cols, std::size_t aug = 0);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivot_cols_.size(); }

    // Returns true when the row's system part was independent (rank grew).
    // Otherwise the fully reduced row is stashed: see last_reduced_row().
    bool add_row(std::vector<std::uint16_t> row);

    // Fully reduced copy of the last dependent row passed to add_row
    // (system part all zero; augmentation part is the interesting bit).
    const std::vector<std::uint16_t>& last_reduced_row() const { return last_reduced_; }

    // Back-substitute pivot rows to reduced row echelon form. Idempotent.
    void make_rref();

    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
    const std::vector<std::vector<std::uint16_t>>& pivot_rows() const { return rows_; }

    // Basis of the kernel of the system-column matrix, canonicalized so that
    // the basis itself is in reduced echelon form. Each vector has length
    // cols(). Calls make_rref internally.
    std::vector<std::vector<std::uint16_t>> kernel_basis();

    // Reduces `v` (length cols + aug) against the pivot rows in place.
    void reduce_vector(std::vector<std::uint16_t>& v) const;

private:
    void reduce_mod_p(std::vector<std::uint16_t>& row) const;

    std::uint64_t p_;
    std::size_t cols_, aug_, width_;
    std::size_t lazy_threshold_;
    std::vector<std::vector<std::uint16_t>> rows_; // sorted by pivot column
    std::vector<std::size_t> pivot_cols_;          // ascending
    std::vector<std::uint16_t> last_reduced_;
    bool rref_done_ = false;
};

// Row-span membership with witnesses: rows are added with an identity
// augmentation, so reducing a vector to zero yields the combination that
// produced it.
class RowSpanSolver {
public:
    RowSpanSolver(std::uint64_t p, std::size_t cols, std::size_t max_rows);

    // Adds a row; if it is dependent on the rows added before it, returns the
    // dependency coefficients c (length = rows added so far, c_last = 1) with
    // sum_i c_i row_i = 0.
    std::optional<std::vector<std::uint16_t>> add_row(const std::vector<std::uint16_t>& row);

    // Expresses target as a combination of the added rows, if possible.
    std::optional<std::vector<std::uint16_t>> express(
        const std::vector<std::uint16_t>& target) const;

    std::size_t rank() const { return elim_.rank(); }
    std::size_t rows_added() const { return count_; }

private:
    std::uint64_t p_;
    std::size_t cols_, max_rows_;
    std::size_t count_ = 0;
    FpSolver elim_;
};

// Fraction-free (Bareiss) forward elimination over the integers followed by
// rational back-substitution. Returns the rank and a kernel basis.
struct IntegerKernel {
    std::size_t rank;
    std::vector<std::vector<BigRat>> kernel; // each of length cols
};
IntegerKernel integer_kernel(std::vector<std::vector<BigInt>> rows, std::size_t cols);

} // namespace qinv

#endif
