// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qassert {

/// r x c table of nonnegative counts, stored row-major.
///
/// For 2x2 tables the cells read A = (0,0), B = (0,1), C = (1,0), D = (1,1).
class ContingencyTable {
  public:
    /// All-zero table. Throws ArgumentError if either dimension is zero.
    ContingencyTable(std::size_t rows, std::size_t cols);
    /// Row-by-row literal; rows must share one length.
    ContingencyTable(std::initializer_list<std::initializer_list<std::uint64_t>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_2x2() const noexcept { return rows_ == 2 && cols_ == 2; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
    std::uint64_t &at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const std::vector<std::uint64_t> &cells() const noexcept { return cells_; }
    void clear() noexcept { std::fill(cells_.begin(), cells_.end(), 0); }

    std::vector<std::uint64_t> row_sums() const;
    std::vector<std::uint64_t> col_sums() const;
    std::uint64_t total() const;

    ContingencyTable transposed() const;
    ContingencyTable with_added(std::uint64_t amount) const;

    std::string to_string() const;  // "[[a,b],[c,d]]"

    friend bool operator==(const ContingencyTable &, const ContingencyTable &) = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> cells_;
};

}  // namespace qassert
