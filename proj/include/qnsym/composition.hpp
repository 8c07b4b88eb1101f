// Compositions of n, the subset bijection, skew shapes and vertical strips.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnsym {

// A composition: finite list of parts, each >= 1. The empty list is the
// unique composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    }
    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_.at(i); }  // 0-based
    std::size_t length() const { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

// Subsets of [n-1] are kept as strictly increasing vectors.
using Subset = std::vector<int>;

inline void check_subset(const Subset& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n - 1)
            throw std::out_of_range("subset element outside 1..n-1");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("subset must be strictly increasing");
    }
}

// set(alpha) = {a1, a1+a2, ..., a1+...+a_{k-1}} as a subset of [n-1].
inline Subset set_of(const Composition& alpha) {
    Subset s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha.part(i);
        s.push_back(acc);
    }
    return s;
}

// comp(S), the inverse of set_of at size n.
inline Composition comp_of(const Subset& s, int n) {
    if (n < 0) throw std::invalid_argument("comp_of: negative size");
    check_subset(s, n);
    if (n == 0) return Composition{};
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

inline Subset complement(const Subset& s, int n) {
    check_subset(s, n);
    Subset out;
    std::size_t j = 0;
    for (int x = 1; x <= n - 1; ++x) {
        if (j < s.size() && s[j] == x) { ++j; continue; }
        out.push_back(x);
    }
    return out;
}

// All 2^{n-1} compositions of n, ordered by the bitmask of set_of
// (bit i-1 set  <=>  i in set(alpha)).
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative size");
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    const std::uint32_t top = 1u << (n - 1);
    out.reserve(top);
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        Subset s;
        for (int i = 1; i <= n - 1; ++i)
            if (mask & (1u << (i - 1))) s.push_back(i);
        out.push_back(comp_of(s, n));
    }
    return out;
}

// beta is contained in alpha when beta_j <= alpha_j for 1 <= j <= l(beta) <= l(alpha).
inline bool contains(const Composition& alpha, const Composition& beta) {
    if (beta.length() > alpha.length()) return false;
    for (std::size_t j = 0; j < beta.length(); ++j)
        if (beta.part(j) > alpha.part(j)) return false;
    return true;
}

// Skew diagram alpha/beta; validated at construction.
struct SkewShape {
    Composition outer;
    Composition inner;

    SkewShape() = default;
    SkewShape(Composition o, Composition i) : outer(std::move(o)), inner(std::move(i)) {
        if (!contains(outer, inner))
            throw std::invalid_argument("skew shape: inner not contained in outer");
    }
    explicit SkewShape(Composition o) : outer(std::move(o)) {}

    int size() const { return outer.size() - inner.size(); }
    // boxes removed from row j (0-based from the bottom)
    int inner_part(std::size_t j) const {
        return j < inner.length() ? inner.part(j) : 0;
    }
    int row_boxes(std::size_t j) const { return outer.part(j) - inner_part(j); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend std::strong_ordering operator<=>(const SkewShape&, const SkewShape&) = default;
};

inline SkewShape skew(const Composition& alpha, const Composition& beta) {
    return SkewShape(alpha, beta);
}

// Vertical strip test on the zero-padded inner shape: every row of the outer
// shape loses 0 or 1 boxes, rows beyond l(inner) included.
inline bool is_vertical_strip(const Composition& outer, const Composition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t j = 0; j < outer.length(); ++j) {
        const int in = j < inner.length() ? inner.part(j) : 0;
        const int d = outer.part(j) - in;
        if (d < 0 || d > 1) return false;
    }
    return true;
}

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

// Near-concatenation fuses the touching parts; an empty argument falls back
// to plain concatenation.
inline Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<int> parts = a.parts();
    parts.back() += b.part(0);
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

inline Composition tail(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("tail of empty composition");
    return Composition(std::vector<int>(a.parts().begin() + 1, a.parts().end()));
}

// Integer vector of fixed length; may hold entries of any sign.
struct IntVector {
    std::vector<int> entries;

    IntVector() = default;
    explicit IntVector(std::vector<int> e) : entries(std::move(e)) {}
    IntVector(std::initializer_list<int> e) : entries(e) {}
    std::size_t size() const { return entries.size(); }
    int operator[](std::size_t i) const { return entries.at(i); }

    friend bool operator==(const IntVector&, const IntVector&) = default;
};

inline int negative_count(const IntVector& v) {
    int c = 0;
    for (int x : v.entries)
        if (x < 0) ++c;
    return c;
}

inline int sign(const IntVector& v) { return negative_count(v) % 2 == 0 ? 1 : -1; }

// alpha - gamma with gamma zero-padded to the length of alpha.
inline IntVector subtract_padded(const Composition& alpha, const Composition& gamma) {
    if (gamma.length() > alpha.length())
        throw std::invalid_argument("subtract_padded: gamma longer than alpha");
    std::vector<int> e(alpha.length());
    for (std::size_t i = 0; i < alpha.length(); ++i)
        e[i] = alpha.part(i) - (i < gamma.length() ? gamma.part(i) : 0);
    return IntVector(std::move(e));
}

// ---- text syntax ----------------------------------------------------------

inline std::string to_string(const Composition& a) {
    std::string s;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.part(i));
    }
    return s;
}

inline std::string to_string(const SkewShape& sh) {
    return to_string(sh.outer) + "/" + to_string(sh.inner);
}

// "1,2,1" -> (1,2,1); the empty string is the empty composition.
inline Composition parse_composition(const std::string& text) {
    if (text.empty()) return Composition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad composition: '" + text + "'");
        const long v = std::stol(piece);
        if (v < 1) throw std::invalid_argument("bad composition part: '" + piece + "'");
        parts.push_back(static_cast<int>(v));
    }
    if (text.back() == ',') throw std::invalid_argument("bad composition: '" + text + "'");
    return Composition(std::move(parts));
}

// "1,2,1/1,1"; a missing or empty right side means an empty inner shape.
inline SkewShape parse_skew(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_composition(text));
    return SkewShape(parse_composition(text.substr(0, slash)),
                     parse_composition(text.substr(slash + 1)));
}

}  // namespace qnsym
