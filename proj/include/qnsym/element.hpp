// Sparse exact linear combinations over graded bases, plus tensor squares.
#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "qnsym/composition.hpp"

namespace qnsym {

using Int = std::int64_t;

// Global switch for the memo caches; flipping it must not change any result.
inline std::atomic<bool>& caching_enabled() {
    static std::atomic<bool> flag{true};
    return flag;
}

enum class Basis : std::uint8_t {
    M,
    F,
    DualImm,
    RSDualImm,
    SkewDualImm,
    SkewRSDualImm,
    H,
    E,
    Imm,
    RSImm,
};

inline bool qsym_side(Basis b) {
    switch (b) {
        case Basis::M:
        case Basis::F:
        case Basis::DualImm:
        case Basis::RSDualImm:
        case Basis::SkewDualImm:
        case Basis::SkewRSDualImm:
            return true;
        default:
            return false;
    }
}

inline bool skew_basis(Basis b) {
    return b == Basis::SkewDualImm || b == Basis::SkewRSDualImm;
}

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::DualImm: return "DualImmaculate";
        case Basis::RSDualImm: return "RSDualImmaculate";
        case Basis::SkewDualImm: return "SkewDualImmaculate";
        case Basis::SkewRSDualImm: return "SkewRSDualImmaculate";
        case Basis::H: return "H";
        case Basis::E: return "E";
        case Basis::Imm: return "Immaculate";
        case Basis::RSImm: return "RSImmaculate";
    }
    return "?";
}

// A basis symbol: tag plus a composition or skew-shape index. Skew tags with
// an empty inner shape normalize to the straight tag.
class BasisIndex {
public:
    BasisIndex(Basis b, Composition index) : basis_(b), outer_(std::move(index)) {
        if (skew_basis(b))
            throw std::invalid_argument("skew basis tag requires a skew index");
    }

    static BasisIndex skewed(Basis b, SkewShape sh) {
        if (!skew_basis(b)) throw std::invalid_argument("basis tag cannot carry a skew index");
        if (sh.inner.empty())
            return BasisIndex(b == Basis::SkewDualImm ? Basis::DualImm : Basis::RSDualImm,
                              std::move(sh.outer));
        BasisIndex idx(b == Basis::SkewDualImm ? Basis::DualImm : Basis::RSDualImm,
                       std::move(sh.outer));
        idx.basis_ = b;
        idx.inner_ = std::move(sh.inner);
        return idx;
    }

    Basis basis() const { return basis_; }
    const Composition& index() const { return outer_; }
    const Composition& inner() const { return inner_; }
    bool is_skew() const { return skew_basis(basis_); }
    SkewShape shape() const { return SkewShape(outer_, inner_); }
    int degree() const { return outer_.size() - inner_.size(); }

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
    friend std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = static_cast<int>(a.basis_) <=> static_cast<int>(b.basis_); c != 0) return c;
        if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
        return a.inner_ <=> b.inner_;
    }

private:
    Basis basis_;
    Composition outer_;
    Composition inner_;
};

// Integer linear combination of basis symbols from one side (QSym or NSym).
// Zero coefficients are never stored, so equality is map equality.
class GradedElement {
public:
    GradedElement() = default;

    static GradedElement term(BasisIndex idx, Int c = 1) {
        GradedElement e;
        e.add_term(std::move(idx), c);
        return e;
    }

    const std::map<BasisIndex, Int>& terms() const& { return terms_; }
    // rvalue overload hands the map out by value so that range-for over
    // `make_element().terms()` never iterates a destroyed temporary
    std::map<BasisIndex, Int> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Int coefficient(const BasisIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? 0 : it->second;
    }

    GradedElement& add_term(BasisIndex idx, Int c) {
        if (c == 0) return *this;
        if (!terms_.empty() && qsym_side(idx.basis()) != qsym_side(terms_.begin()->first.basis()))
            throw std::invalid_argument("cannot mix QSym-side and NSym-side terms");
        auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    GradedElement& operator+=(const GradedElement& o) {
        for (const auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    GradedElement& operator-=(const GradedElement& o) {
        for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
        return *this;
    }
    GradedElement& operator*=(Int c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [idx, v] : terms_) v *= c;
        return *this;
    }

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(GradedElement a, Int c) { return a *= c; }
    friend GradedElement operator*(Int c, GradedElement a) { return a *= c; }
    friend GradedElement operator-(GradedElement a) { return a *= -1; }
    friend bool operator==(const GradedElement&, const GradedElement&) = default;

private:
    std::map<BasisIndex, Int> terms_;
};

// Linear combination of ordered pairs of basis symbols (coproduct values).
class TensorElement {
public:
    using Key = std::pair<BasisIndex, BasisIndex>;

    TensorElement() = default;

    const std::map<Key, Int>& terms() const& { return terms_; }
    std::map<Key, Int> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const BasisIndex& l, const BasisIndex& r) const {
        auto it = terms_.find(Key(l, r));
        return it == terms_.end() ? 0 : it->second;
    }

    TensorElement& add_term(BasisIndex l, BasisIndex r, Int c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(Key(std::move(l), std::move(r)), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator*=(Int c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    std::map<Key, Int> terms_;
};

// Sum of c_i * f(idx_i) for a map f defined on basis symbols.
template <typename Fn>
GradedElement extend_linear(Fn&& f, const GradedElement& e) {
    GradedElement out;
    for (const auto& [idx, c] : e.terms()) {
        GradedElement img = f(idx);
        img *= c;
        out += img;
    }
    return out;
}

// Sum of a_i b_j * f(idx_i, idx_j) over the terms of two elements.
template <typename Fn>
GradedElement extend_bilinear(Fn&& f, const GradedElement& a, const GradedElement& b) {
    GradedElement out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            GradedElement img = f(ia, ib);
            img *= ca * cb;
            out += img;
        }
    return out;
}

// ---- term helpers ----------------------------------------------------------

inline GradedElement m_term(Composition a, Int c = 1) {
    return GradedElement::term(BasisIndex(Basis::M, std::move(a)), c);
}
inline GradedElement f_term(Composition a, Int c = 1) {
    return GradedElement::term(BasisIndex(Basis::F, std::move(a)), c);
}
inline GradedElement h_term(Composition a, Int c = 1) {
    return GradedElement::term(BasisIndex(Basis::H, std::move(a)), c);
}
inline GradedElement e_term(Composition a, Int c = 1) {
    return GradedElement::term(BasisIndex(Basis::E, std::move(a)), c);
}
inline GradedElement imm_term(Composition a, Int c = 1) {
    return GradedElement::term(BasisIndex(Basis::Imm, std::move(a)), c);
}
inline GradedElement rs_imm_term(Composition a, Int c = 1) {
    return GradedElement::term(BasisIndex(Basis::RSImm, std::move(a)), c);
}
inline BasisIndex dual_imm_index(SkewShape sh) {
    return BasisIndex::skewed(Basis::SkewDualImm, std::move(sh));
}
inline BasisIndex rs_dual_imm_index(SkewShape sh) {
    return BasisIndex::skewed(Basis::SkewRSDualImm, std::move(sh));
}

}  // namespace qnsym
