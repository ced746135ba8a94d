#include "qinv/linalg.hpp"

#include "qinv/errors.hpp"
#include "qinv/fp.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace qinv {

FpSolver::FpSolver(std::uint64_t p, std::size_t cols, std::size_t aug)
    : p_(p), cols_(cols), aug_(aug), width_(cols + aug) {
    if (p < 2 || p > 255) throw std::domain_error("FpSolver: modulus must be in [2, 255]");
    // Largest number of unreduced multiply-adds a uint16 cell can absorb.
    lazy_threshold_ = (65535u - (p_ - 1)) / ((p_ - 1) * (p_ - 1));
}

void FpSolver::reduce_mod_p(std::vector<std::uint16_t>& row) const {
    for (auto& v : row) v = std::uint16_t(v % p_);
}

void FpSolver::reduce_vector(std::vector<std::uint16_t>& row) const {
    if (row.size() != width_) throw contract_error("FpSolver: row width mismatch");
    std::size_t adds = 0;
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
        std::size_t pc = pivot_cols_[i];
        std::uint32_t v = row[pc] % p_;
        if (v == 0) continue;
        std::uint32_t g = std::uint32_t(p_) - v;
        const std::uint16_t* src = rows_[i].data();
        std::uint16_t* dst = row.data();
        for (std::size_t c = pc; c < width_; ++c)
            dst[c] = std::uint16_t(dst[c] + g * src[c]);
        if (++adds >= lazy_threshold_) {
            reduce_mod_p(row);
            adds = 0;
        }
    }
    reduce_mod_p(row);
}

bool FpSolver::add_row(std::vector<std::uint16_t> row) {
    reduce_vector(row);

    std::size_t lead = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
        if (row[c] != 0) {
            lead = c;
            break;
        }
    if (lead == cols_) {
        last_reduced_ = std::move(row);
        return false;
    }

    // Normalize leading coefficient to 1.
    std::uint64_t inv = Fp(row[lead], p_).inverse().value();
    for (std::size_t c = lead; c < width_; ++c)
        row[c] = std::uint16_t((row[c] * inv) % p_);

    auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    std::size_t idx = std::size_t(it - pivot_cols_.begin());
    pivot_cols_.insert(it, lead);
    rows_.insert(rows_.begin() + std::ptrdiff_t(idx), std::move(row));
    rref_done_ = false;
    return true;
}

void FpSolver::make_rref() {
    if (rref_done_) return;
    for (std::size_t i = pivot_cols_.size(); i-- > 0;) {
        std::size_t pc = pivot_cols_[i];
        const std::uint16_t* src = rows_[i].data();
        for (std::size_t j = 0; j < pivot_cols_.size(); ++j) {
            if (j == i) continue;
            std::uint32_t v = rows_[j][pc];
            if (v == 0) continue;
            std::uint32_t g = std::uint32_t(p_) - v;
            std::uint16_t* dst = rows_[j].data();
            for (std::size_t c = pc; c < width_; ++c)
                dst[c] = std::uint16_t((dst[c] + g * src[c]) % p_);
        }
    }
    rref_done_ = true;
}

std::vector<std::vector<std::uint16_t>> FpSolver::kernel_basis() {
    make_rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t pc : pivot_cols_) is_pivot[pc] = true;

    std::vector<std::vector<std::uint16_t>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint16_t> v(cols_, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
            std::uint32_t entry = rows_[i][fc];
            if (entry) v[pivot_cols_[i]] = std::uint16_t(p_ - entry);
        }
        basis.push_back(std::move(v));
    }

    // Canonical form: the kernel vectors themselves in reduced echelon form.
    FpSolver canon(p_, cols_);
    for (auto& v : basis) canon.add_row(std::move(v));
    if (canon.rank() != basis.size())
        throw contract_error("FpSolver: kernel vectors were not independent");
    canon.make_rref();
    return canon.rows_;
}

RowSpanSolver::RowSpanSolver(std::uint64_t p, std::size_t cols, std::size_t max_rows)
    : p_(p), cols_(cols), max_rows_(max_rows), elim_(p, cols, max_rows) {}

std::optional<std::vector<std::uint16_t>> RowSpanSolver::add_row(
    const std::vector<std::uint16_t>& row) {
    if (row.size() != cols_) throw contract_error("RowSpanSolver: row width mismatch");
    if (count_ >= max_rows_) throw contract_error("RowSpanSolver: too many rows");
    std::vector<std::uint16_t> augmented(cols_ + max_rows_, 0);
    std::copy(row.begin(), row.end(), augmented.begin());
    augmented[cols_ + count_] = 1;
    ++count_;
    if (elim_.add_row(std::move(augmented))) return std::nullopt;
    const auto& reduced = elim_.last_reduced_row();
    std::vector<std::uint16_t> dep(reduced.begin() + std::ptrdiff_t(cols_),
                                   reduced.begin() + std::ptrdiff_t(cols_ + count_));
    return dep;
}

std::optional<std::vector<std::uint16_t>> RowSpanSolver::express(
    const std::vector<std::uint16_t>& target) const {
    if (target.size() != cols_) throw contract_error("RowSpanSolver: target width mismatch");
    std::vector<std::uint16_t> augmented(cols_ + max_rows_, 0);
    std::copy(target.begin(), target.end(), augmented.begin());
    elim_.reduce_vector(augmented);
    for (std::size_t c = 0; c < cols_; ++c)
        if (augmented[c] != 0) return std::nullopt;
    // target + sum gamma_i row_i = 0, so target = sum (p - gamma_i) row_i.
    std::vector<std::uint16_t> witness(count_, 0);
    for (std::size_t i = 0; i < count_; ++i) {
        std::uint32_t g = augmented[cols_ + i];
        witness[i] = std::uint16_t(g == 0 ? 0 : p_ - g);
    }
    return witness;
}

IntegerKernel integer_kernel(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
    const std::size_t n_rows = rows.size();
    for (const auto& r : rows)
        if (r.size() != cols) throw contract_error("integer_kernel: row width mismatch");

    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    BigInt prev = 1;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < n_rows; ++col) {
        std::size_t sel = n_rows;
        for (std::size_t r = next_row; r < n_rows; ++r)
            if (rows[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == n_rows) continue;
        std::swap(rows[sel], rows[next_row]);
        const BigInt pivot = rows[next_row][col];
        for (std::size_t r = next_row + 1; r < n_rows; ++r) {
            const BigInt factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                BigInt v = rows[r][c] * pivot - factor * rows[next_row][c];
                rows[r][c] = v / prev; // exact: Bareiss one-step fraction-free
            }
        }
        prev = pivot;
        pivot_cols.push_back(col);
        pivot_rows.push_back(next_row);
        ++next_row;
    }

    const std::size_t rank = pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : pivot_cols) is_pivot[pc] = true;

    IntegerKernel result;
    result.rank = rank;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<BigRat> x(cols, BigRat(0));
        x[fc] = BigRat(1);
        for (std::size_t i = rank; i-- > 0;) {
            const auto& row = rows[pivot_rows[i]];
            std::size_t pc = pivot_cols[i];
            BigRat acc(0);
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (!x[c].is_zero() && row[c] != 0) acc = acc + BigRat(row[c]) * x[c];
            x[pc] = -acc / BigRat(row[pc]);
        }
        result.kernel.push_back(std::move(x));
    }
    return result;
}

} // namespace qinv
