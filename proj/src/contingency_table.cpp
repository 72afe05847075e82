// SPDX-License-Identifier: Apache-2.0

#include "qassert/contingency_table.hpp"

#include <numeric>

#include "qassert/errors.hpp"

namespace qassert {

ContingencyTable::ContingencyTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw ArgumentError("contingency table needs at least one row and one column");
}

ContingencyTable::ContingencyTable(std::initializer_list<std::initializer_list<std::uint64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw ArgumentError("contingency table needs at least one row and one column");
    for (const auto &row : rows) {
        if (row.size() != cols_) throw ArgumentError("contingency table rows differ in length");
        cells_.insert(cells_.end(), row.begin(), row.end());
    }
}

std::vector<std::uint64_t> ContingencyTable::row_sums() const {
    std::vector<std::uint64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c);
    return out;
}

std::vector<std::uint64_t> ContingencyTable::col_sums() const {
    std::vector<std::uint64_t> out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[c] += at(r, c);
    return out;
}

std::uint64_t ContingencyTable::total() const { return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0}); }

ContingencyTable ContingencyTable::transposed() const {
    ContingencyTable t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ContingencyTable ContingencyTable::with_added(std::uint64_t amount) const {
    ContingencyTable t = *this;
    for (auto &cell : t.cells_) cell += amount;
    return t;
}

std::string ContingencyTable::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        s += r ? ",[" : "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) s += ',';
            s += std::to_string(at(r, c));
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace qassert
