// NSym on the complete homogeneous and elementary bases.
#pragma once

#include <mutex>
#include <vector>

#include "qnsym/element.hpp"

namespace qnsym {

// Products are concatenation of indices, extended bilinearly.
inline GradedElement concat_product(Basis b, const GradedElement& x, const GradedElement& y) {
    return extend_bilinear(
        [b](const BasisIndex& i, const BasisIndex& j) {
            return GradedElement::term(BasisIndex(b, concat(i.index(), j.index())));
        },
        x, y);
}

inline GradedElement h_product(const GradedElement& x, const GradedElement& y) {
    return concat_product(Basis::H, x, y);
}
inline GradedElement e_product(const GradedElement& x, const GradedElement& y) {
    return concat_product(Basis::E, x, y);
}

// E_n = sum over b of n of (-1)^{n - l(b)} H_b, extended multiplicatively.
inline GradedElement e_to_h(const Composition& a) {
    GradedElement out = h_term(Composition{});
    for (std::size_t i = 0; i < a.length(); ++i) {
        const int n = a.part(i);
        GradedElement en;
        for (const auto& b : compositions_of(n))
            en.add_term(BasisIndex(Basis::H, b),
                        (n - static_cast<int>(b.length())) % 2 == 0 ? 1 : -1);
        out = h_product(out, en);
    }
    return out;
}

// Same coefficients with the roles of H and E exchanged.
inline GradedElement h_to_e(const Composition& a) {
    GradedElement out = e_term(Composition{});
    for (std::size_t i = 0; i < a.length(); ++i) {
        const int n = a.part(i);
        GradedElement hn;
        for (const auto& b : compositions_of(n))
            hn.add_term(BasisIndex(Basis::E, b),
                        (n - static_cast<int>(b.length())) % 2 == 0 ? 1 : -1);
        out = e_product(out, hn);
    }
    return out;
}

inline GradedElement nsym_to_h(const GradedElement& e) {
    return extend_linear(
        [](const BasisIndex& idx) {
            switch (idx.basis()) {
                case Basis::H: return GradedElement::term(idx);
                case Basis::E: return e_to_h(idx.index());
                default: throw std::invalid_argument("nsym_to_h: expected an H/E element");
            }
        },
        e);
}

inline GradedElement nsym_to_e(const GradedElement& e) {
    return extend_linear(
        [](const BasisIndex& idx) {
            switch (idx.basis()) {
                case Basis::E: return GradedElement::term(idx);
                case Basis::H: return h_to_e(idx.index());
                default: throw std::invalid_argument("nsym_to_e: expected an H/E element");
            }
        },
        e);
}

// Delta H_n = sum_{i+j=n} H_i (x) H_j, extended multiplicatively over parts.
inline TensorElement coproduct_h(const Composition& a) {
    TensorElement acc;
    acc.add_term(BasisIndex(Basis::H, Composition{}), BasisIndex(Basis::H, Composition{}), 1);
    for (std::size_t t = 0; t < a.length(); ++t) {
        const int n = a.part(t);
        TensorElement next;
        for (const auto& [key, c] : acc.terms()) {
            for (int i = 0; i <= n; ++i) {
                Composition l = key.first.index();
                Composition r = key.second.index();
                if (i > 0) l = concat(l, Composition{i});
                if (n - i > 0) r = concat(r, Composition{n - i});
                next.add_term(BasisIndex(Basis::H, std::move(l)),
                              BasisIndex(Basis::H, std::move(r)), c);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

inline TensorElement coproduct_h(const GradedElement& e) {
    TensorElement out;
    for (const auto& [idx, c] : nsym_to_h(e).terms()) {
        TensorElement t = coproduct_h(idx.index());
        t *= c;
        out += t;
    }
    return out;
}

namespace detail {
// S(H_n) from the antipode identity: sum_{i=0}^{n} S(H_i) H_{n-i} = 0, n >= 1.
inline const GradedElement& antipode_h_generator(int n) {
    static std::vector<GradedElement> table{h_term(Composition{})};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        GradedElement s;
        for (int i = 0; i < m; ++i)
            s -= h_product(table[i], h_term(Composition{m - i}));
        table.push_back(std::move(s));
    }
    return table[static_cast<std::size_t>(n)];
}
}  // namespace detail

// Antipode is an anti-automorphism, so S(H_a) multiplies the generator
// images in reverse order.
inline GradedElement antipode_h(const Composition& a) {
    GradedElement out = h_term(Composition{});
    for (std::size_t i = a.length(); i-- > 0;)
        out = h_product(out, detail::antipode_h_generator(a.part(i)));
    return out;
}

inline GradedElement antipode_h(const GradedElement& e) {
    return extend_linear([](const BasisIndex& idx) { return antipode_h(idx.index()); },
                         nsym_to_h(e));
}

// psi swaps E and H indices: an H-expansion maps to the H-expansion of the
// corresponding E-element.
inline GradedElement psi_nsym(const GradedElement& e) {
    return extend_linear([](const BasisIndex& idx) { return e_to_h(idx.index()); },
                         nsym_to_h(e));
}

inline Int counit_nsym(const GradedElement& e) {
    Int out = 0;
    for (const auto& [idx, c] : e.terms())
        if (idx.degree() == 0) out += c;
    return out;
}

}  // namespace qnsym
