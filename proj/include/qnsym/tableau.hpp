// Standard (skew) immaculate tableaux: validity, enumeration, descents.
#pragma once

#include <string>
#include <vector>

#include "qnsym/composition.hpp"

namespace qnsym {

// A bijective filling of a skew diagram, rows stored bottom row first.
// Row j holds outer_j - inner_j entries.
class Tableau {
public:
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (rows_.size() != shape_.outer.length())
            throw std::invalid_argument("tableau: row count does not match shape");
        for (std::size_t j = 0; j < rows_.size(); ++j)
            if (static_cast<int>(rows_[j].size()) != shape_.row_boxes(j))
                throw std::invalid_argument("tableau: row length does not match shape");
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// Both defining conditions: rows strictly increase left to right, and the
// entries lying in the first column of the full diagram (rows whose inner
// part is 0) strictly increase bottom to top. Entries must be exactly 1..n.
inline bool is_valid_sit(const Tableau& t) {
    const int n = t.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : t.rows())
        for (int e : row) {
            if (e < 1 || e > n || seen[e]) return false;
            seen[e] = true;
        }
    for (const auto& row : t.rows())
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c - 1] >= row[c]) return false;
    int prev = 0;
    for (std::size_t j = 0; j < t.shape().outer.length(); ++j) {
        if (t.shape().inner_part(j) != 0 || t.shape().row_boxes(j) == 0) continue;
        const int e = t.rows()[j][0];
        if (prev != 0 && e <= prev) return false;
        prev = e;
    }
    return true;
}

// All valid fillings, produced by placing 1..n in increasing order. At each
// step candidate cells are the next free cell of each row, scanned bottom
// row first; a first-column cell is allowed only once every first-column
// cell below it is filled. Deterministic output order.
inline std::vector<Tableau> enumerate_sit(const SkewShape& shape) {
    const std::size_t nrows = shape.outer.length();
    const int n = shape.size();
    std::vector<int> filled(nrows, 0);
    std::vector<std::vector<int>> rows(nrows);
    for (std::size_t j = 0; j < nrows; ++j)
        rows[j].assign(static_cast<std::size_t>(shape.row_boxes(j)), 0);

    std::vector<bool> first_col(nrows, false);
    for (std::size_t j = 0; j < nrows; ++j)
        first_col[j] = shape.inner_part(j) == 0 && shape.row_boxes(j) > 0;

    std::vector<Tableau> out;
    auto place = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.emplace_back(shape, rows);
            return;
        }
        for (std::size_t j = 0; j < nrows; ++j) {
            if (filled[j] == shape.row_boxes(j)) continue;
            if (first_col[j] && filled[j] == 0) {
                bool below_ready = true;
                for (std::size_t k = 0; k < j && below_ready; ++k)
                    if (first_col[k] && filled[k] == 0) below_ready = false;
                if (!below_ready) continue;
            }
            rows[j][filled[j]] = v;
            ++filled[j];
            self(self, v + 1);
            --filled[j];
            rows[j][filled[j]] = 0;
        }
    };
    place(place, 1);
    return out;
}

// Des(T) = { i : i+1 sits in a strictly higher row than i }.
inline Subset descent_set(const Tableau& t) {
    const int n = t.size();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t j = 0; j < t.rows().size(); ++j)
        for (int e : t.rows()[j]) row_of[e] = static_cast<int>(j);
    Subset des;
    for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) des.push_back(i);
    return des;
}

// Diagram with the bottom row printed last; inner boxes shown as dots.
inline std::string render_ascii(const Tableau& t) {
    int width = 1;
    for (const auto& row : t.rows())
        for (int e : row) width = std::max(width, static_cast<int>(std::to_string(e).size()));
    std::string out;
    for (std::size_t jj = t.rows().size(); jj-- > 0;) {
        const int in = t.shape().inner_part(jj);
        std::string line;
        for (int c = 0; c < in; ++c) {
            std::string cell(".");
            line += std::string(static_cast<std::size_t>(width + 1 - cell.size()), ' ') + cell;
        }
        for (int e : t.rows()[jj]) {
            std::string cell = std::to_string(e);
            line += std::string(static_cast<std::size_t>(width + 1 - cell.size()), ' ') + cell;
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace qnsym
