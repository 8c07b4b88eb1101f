// Exact rational solves against a list of basis elements.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qnsym/element.hpp"

namespace qnsym {

using Rational = boost::multiprecision::cpp_rational;

// Coefficients c with sum_i c_i * targets[i] == e, solved exactly over the
// rationals. Throws when the targets are dependent in a way that leaves the
// system ambiguous, or when e is outside their span.
inline std::vector<Rational> solve_against_basis(const std::vector<GradedElement>& targets,
                                                 const GradedElement& e) {
    std::map<BasisIndex, std::size_t> row_of;
    auto note = [&](const GradedElement& g) {
        for (const auto& [idx, c] : g.terms()) row_of.try_emplace(idx, row_of.size());
    };
    for (const auto& t : targets) note(t);
    note(e);

    const std::size_t rows = row_of.size();
    const std::size_t cols = targets.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [idx, c] : targets[j].terms()) a[row_of[idx]][j] = c;
    for (const auto& [idx, c] : e.terms()) a[row_of[idx]][cols] = c;

    std::vector<std::size_t> pivot_row(cols, rows);
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && a[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational inv = a[r][j];
        for (std::size_t k = j; k <= cols; ++k) a[r][k] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][j] == 0) continue;
            const Rational f = a[i][j];
            for (std::size_t k = j; k <= cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_row[j] = r;
        ++r;
    }

    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) throw std::runtime_error("solve_against_basis: no solution");

    std::vector<Rational> x(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_row[j] == rows) {
            // a column with no pivot is a dependency among the targets
            bool needed = false;
            for (std::size_t i = 0; i < rows; ++i)
                if (a[i][j] != 0 && a[i][cols] != 0) needed = true;
            if (needed) throw std::runtime_error("solve_against_basis: singular system");
            x[j] = 0;
        } else {
            x[j] = a[pivot_row[j]][cols];
        }
    }
    return x;
}

inline std::vector<Int> solve_integral(const std::vector<GradedElement>& targets,
                                       const GradedElement& e) {
    auto x = solve_against_basis(targets, e);
    std::vector<Int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (boost::multiprecision::denominator(x[i]) != 1)
            throw std::runtime_error("solve_integral: non-integral coefficient");
        const auto num = boost::multiprecision::numerator(x[i]);
        out[i] = static_cast<Int>(num);
    }
    return out;
}

// Exact inverse of a square integer matrix; throws unless the inverse is
// again integral (all our basis-change matrices are unimodular).
inline std::vector<std::vector<Int>> invert_unimodular(
    const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("invert_unimodular: not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && a[p][j] == 0) ++p;
        if (p == n) throw std::runtime_error("invert_unimodular: singular matrix");
        std::swap(a[p], a[j]);
        const Rational inv = a[j][j];
        for (std::size_t k = 0; k < 2 * n; ++k) a[j][k] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || a[i][j] == 0) continue;
            const Rational f = a[i][j];
            for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[j][k];
        }
    }
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = a[i][n + j];
            if (boost::multiprecision::denominator(v) != 1)
                throw std::runtime_error("invert_unimodular: non-integral inverse");
            out[i][j] = static_cast<Int>(boost::multiprecision::numerator(v));
        }
    return out;
}

}  // namespace qnsym
