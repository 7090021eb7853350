#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace novik::gf2 {

/// Dense row of bits.
class Row {
public:
    Row() = default;
    explicit Row(std::size_t ncols) : ncols_(ncols), words_((ncols + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const { return ncols_; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool test(std::size_t i) const { return ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
    [[nodiscard]] bool any() const;
    /// Lowest set bit with index >= from.
    [[nodiscard]] std::optional<std::size_t> lowest_from(std::size_t from) const;
    Row& operator^=(const Row& o);

private:
    std::size_t ncols_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incremental row echelon form.  Each stored row is keyed by its lowest set
/// column, so the pivot columns are exactly the columns that are independent
/// of all earlier columns (the column rank profile).
///
/// Rows may carry a right-hand side bit, which turns the basis into an affine
/// system whose consistency is tracked.
class Echelon {
public:
    explicit Echelon(std::size_t ncols) : ncols_(ncols), where_(ncols, -1) {}

    enum class Outcome { independent, dependent, inconsistent };

    /// Inserts the row.  An inconsistent row (reduces to 0 = 1) is not stored.
    Outcome insert(Row row, bool rhs = false);
    /// Reduces a row against the basis; returns the residual and its rhs.
    [[nodiscard]] std::pair<Row, bool> reduce(Row row, bool rhs = false) const;

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return ncols_; }
    [[nodiscard]] bool is_pivot(std::size_t col) const { return where_[col] >= 0; }

    /// One solution of the stored affine system (free variables set to 0).
    [[nodiscard]] Row solution() const;

private:
    std::size_t ncols_;
    std::vector<long> where_;
    std::vector<Row> rows_;
    std::vector<bool> rhs_;
    std::vector<std::size_t> pivot_;
};

}  // namespace novik::gf2
