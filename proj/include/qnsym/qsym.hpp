// QSym on the monomial and fundamental bases: product, coproduct, antipode,
// psi, and the truncated-polynomial evaluation oracle.
#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qnsym/element.hpp"

namespace qnsym {

// ---- monomial basis --------------------------------------------------------

namespace detail {
inline GradedElement prepend_m(int p, const GradedElement& e) {
    GradedElement out;
    for (const auto& [idx, c] : e.terms()) {
        std::vector<int> parts;
        parts.reserve(idx.index().length() + 1);
        parts.push_back(p);
        parts.insert(parts.end(), idx.index().parts().begin(), idx.index().parts().end());
        out.add_term(BasisIndex(Basis::M, Composition(std::move(parts))), c);
    }
    return out;
}

inline GradedElement monomial_product_rec(const Composition& a, const Composition& b);

inline GradedElement monomial_product_impl(const Composition& a, const Composition& b) {
    if (a.empty()) return m_term(b);
    if (b.empty()) return m_term(a);
    const Composition ta = tail(a), tb = tail(b);
    GradedElement out = prepend_m(a.part(0), monomial_product_rec(ta, b));
    out += prepend_m(b.part(0), monomial_product_rec(a, tb));
    out += prepend_m(a.part(0) + b.part(0), monomial_product_rec(ta, tb));
    return out;
}

inline GradedElement monomial_product_rec(const Composition& a, const Composition& b) {
    if (!caching_enabled()) return monomial_product_impl(a, b);
    static std::map<std::pair<Composition, Composition>, GradedElement> cache;
    static std::mutex mu;
    const auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GradedElement out = monomial_product_impl(key.first, key.second);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}
}  // namespace detail

// Overlapping-shuffle expansion of M_a * M_b.
inline GradedElement monomial_product(const Composition& a, const Composition& b) {
    return detail::monomial_product_rec(a, b);
}

// F_a = sum of M_b over set(b) containing set(a).
inline GradedElement f_to_m(const Composition& a) {
    const int n = a.size();
    const Subset s = set_of(a);
    Subset free = complement(s, n);
    GradedElement out;
    const std::uint32_t top = 1u << free.size();
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        Subset t = s;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask & (1u << i)) t.push_back(free[i]);
        std::sort(t.begin(), t.end());
        out.add_term(BasisIndex(Basis::M, comp_of(t, n)), 1);
    }
    return out;
}

// Inclusion-exclusion inverse of f_to_m.
inline GradedElement m_to_f(const Composition& a) {
    const int n = a.size();
    const Subset s = set_of(a);
    Subset free = complement(s, n);
    GradedElement out;
    const std::uint32_t top = 1u << free.size();
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        Subset t = s;
        int extra = 0;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask & (1u << i)) { t.push_back(free[i]); ++extra; }
        std::sort(t.begin(), t.end());
        out.add_term(BasisIndex(Basis::F, comp_of(t, n)), extra % 2 == 0 ? 1 : -1);
    }
    return out;
}

// Conversions between M- and F-expansions (other QSym bases are handled in
// immaculate.hpp, which sits above this header).
inline GradedElement qsym_to_m(const GradedElement& e) {
    return extend_linear(
        [](const BasisIndex& idx) {
            switch (idx.basis()) {
                case Basis::M: return GradedElement::term(idx);
                case Basis::F: return f_to_m(idx.index());
                default: throw std::invalid_argument("qsym_to_m: expected an M/F element");
            }
        },
        e);
}

inline GradedElement qsym_to_f(const GradedElement& e) {
    return extend_linear(
        [](const BasisIndex& idx) {
            switch (idx.basis()) {
                case Basis::F: return GradedElement::term(idx);
                case Basis::M: return m_to_f(idx.index());
                default: throw std::invalid_argument("qsym_to_f: expected an M/F element");
            }
        },
        e);
}

inline GradedElement product_m(const GradedElement& a, const GradedElement& b) {
    return extend_bilinear(
        [](const BasisIndex& x, const BasisIndex& y) {
            return monomial_product(x.index(), y.index());
        },
        qsym_to_m(a), qsym_to_m(b));
}

// F-basis product, routed through the monomial basis.
inline GradedElement product_f(const GradedElement& a, const GradedElement& b) {
    return qsym_to_f(product_m(a, b));
}

inline GradedElement fundamental_product(const Composition& a, const Composition& b) {
    return product_f(f_term(a), f_term(b));
}

// ---- coproducts ------------------------------------------------------------

// Deconcatenation coproduct on the monomial basis.
inline TensorElement coproduct_m(const Composition& a) {
    TensorElement out;
    for (std::size_t i = 0; i <= a.length(); ++i) {
        Composition l(std::vector<int>(a.parts().begin(), a.parts().begin() + i));
        Composition r(std::vector<int>(a.parts().begin() + i, a.parts().end()));
        out.add_term(BasisIndex(Basis::M, std::move(l)), BasisIndex(Basis::M, std::move(r)), 1);
    }
    return out;
}

// All ways of writing a as a concatenation or near-concatenation.
inline TensorElement coproduct_f(const Composition& a) {
    TensorElement out;
    for (std::size_t i = 0; i <= a.length(); ++i) {
        Composition l(std::vector<int>(a.parts().begin(), a.parts().begin() + i));
        Composition r(std::vector<int>(a.parts().begin() + i, a.parts().end()));
        out.add_term(BasisIndex(Basis::F, std::move(l)), BasisIndex(Basis::F, std::move(r)), 1);
    }
    for (std::size_t j = 0; j < a.length(); ++j) {
        for (int x = 1; x < a.part(j); ++x) {
            std::vector<int> l(a.parts().begin(), a.parts().begin() + j);
            l.push_back(x);
            std::vector<int> r;
            r.push_back(a.part(j) - x);
            r.insert(r.end(), a.parts().begin() + j + 1, a.parts().end());
            out.add_term(BasisIndex(Basis::F, Composition(std::move(l))),
                         BasisIndex(Basis::F, Composition(std::move(r))), 1);
        }
    }
    return out;
}

inline TensorElement coproduct_m(const GradedElement& e) {
    TensorElement out;
    for (const auto& [idx, c] : qsym_to_m(e).terms()) {
        TensorElement t = coproduct_m(idx.index());
        t *= c;
        out += t;
    }
    return out;
}

inline TensorElement coproduct_f(const GradedElement& e) {
    TensorElement out;
    for (const auto& [idx, c] : qsym_to_f(e).terms()) {
        TensorElement t = coproduct_f(idx.index());
        t *= c;
        out += t;
    }
    return out;
}

// ---- antipode, psi, counit -------------------------------------------------

inline Composition psi_index(const Composition& a) {
    return comp_of(complement(set_of(a), a.size()), a.size());
}

// Conjugate (transposed ribbon) composition: comp(set(reverse(a))^c).
inline Composition transpose_index(const Composition& a) {
    std::vector<int> rev(a.parts().rbegin(), a.parts().rend());
    return psi_index(Composition(std::move(rev)));
}

// S(F_a) = (-1)^{|a|} F_{a'}, with a' the conjugate composition. For
// one-part a this is (-1)^m F_{(1^m)}; the general case needs the reversal
// baked into transpose_index, as the antipode identity tests pin down.
inline GradedElement antipode_f(const Composition& a) {
    return f_term(transpose_index(a), a.size() % 2 == 0 ? 1 : -1);
}

inline GradedElement antipode_f(const GradedElement& e) {
    return extend_linear([](const BasisIndex& idx) { return antipode_f(idx.index()); },
                         qsym_to_f(e));
}

inline GradedElement psi_f(const Composition& a) { return f_term(psi_index(a)); }

// The involution F_a -> F_{comp(set(a)^c)}, extended linearly.
inline GradedElement psi(const GradedElement& e) {
    return extend_linear([](const BasisIndex& idx) { return psi_f(idx.index()); },
                         qsym_to_f(e));
}

inline Int counit(const GradedElement& e) {
    Int out = 0;
    for (const auto& [idx, c] : e.terms())
        if (idx.degree() == 0) out += c;
    return out;
}

// ---- truncated evaluation oracle -------------------------------------------

// Exact coefficient table of a polynomial in x_1..x_m, keyed by exponent
// vectors of length m.
using Poly = std::map<std::vector<int>, Int>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

namespace detail {
// Sum over i_1 < ... < i_k <= m of x_{i_1}^{a_1} ... x_{i_k}^{a_k}.
inline void eval_m_rec(const Composition& a, int m, std::size_t j, int min_var,
                       std::vector<int>& exps, Poly& out) {
    if (j == a.length()) {
        ++out[exps];
        return;
    }
    for (int v = min_var; v <= m - static_cast<int>(a.length() - j) + 1; ++v) {
        exps[v - 1] += a.part(j);
        eval_m_rec(a, m, j + 1, v + 1, exps, out);
        exps[v - 1] -= a.part(j);
    }
}

// Weakly increasing words with strict steps exactly where set(a) demands.
inline void eval_f_rec(const Composition& a, const std::vector<bool>& strict, int m, int pos,
                       int n, int min_var, std::vector<int>& exps, Poly& out) {
    if (pos == n) {
        ++out[exps];
        return;
    }
    for (int v = min_var; v <= m; ++v) {
        exps[v - 1] += 1;
        eval_f_rec(a, strict, m, pos + 1, n, strict[pos + 1] ? v + 1 : v, exps, out);
        exps[v - 1] -= 1;
    }
}
}  // namespace detail

inline Poly evaluate_m_basis(const Composition& a, int m) {
    Poly out;
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    detail::eval_m_rec(a, m, 0, 1, exps, out);
    return out;
}

inline Poly evaluate_f_basis(const Composition& a, int m) {
    const int n = a.size();
    std::vector<bool> strict(static_cast<std::size_t>(n) + 1, false);
    for (int d : set_of(a)) strict[d] = true;  // strict[i]: x_{i} < x_{i+1} required
    Poly out;
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    detail::eval_f_rec(a, strict, m, 0, n, 1, exps, out);
    return out;
}

// Evaluate an M/F element in m variables, straight from the defining sums;
// this is the module's independent oracle.
inline Poly evaluate_truncated(const GradedElement& e, int m) {
    Poly out;
    for (const auto& [idx, c] : e.terms()) {
        Poly p;
        switch (idx.basis()) {
            case Basis::M: p = evaluate_m_basis(idx.index(), m); break;
            case Basis::F: p = evaluate_f_basis(idx.index(), m); break;
            default: throw std::invalid_argument("evaluate_truncated: expected an M/F element");
        }
        for (const auto& [exp, v] : p) {
            auto& slot = out[exp];
            slot += c * v;
            if (slot == 0) out.erase(exp);
        }
    }
    return out;
}

}  // namespace qnsym
