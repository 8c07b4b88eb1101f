// Dual immaculate and row-strict dual immaculate functions from tableaux;
// the immaculate NSym bases by duality; change of basis in and out.
#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "qnsym/element.hpp"
#include "qnsym/linalg.hpp"
#include "qnsym/nsym.hpp"
#include "qnsym/qsym.hpp"
#include "qnsym/tableau.hpp"

namespace qnsym {

namespace detail {
inline std::vector<Subset> sit_descents_impl(const SkewShape& shape) {
    std::vector<Subset> out;
    for (const auto& t : enumerate_sit(shape)) out.push_back(descent_set(t));
    return out;
}

// Descent sets of every standard immaculate tableau of the given shape.
inline std::vector<Subset> sit_descents(const SkewShape& shape) {
    if (!caching_enabled()) return sit_descents_impl(shape);
    static std::map<SkewShape, std::vector<Subset>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(shape);
        if (it != cache.end()) return it->second;
    }
    auto val = sit_descents_impl(shape);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(shape, std::move(val)).first->second;
}
}  // namespace detail

// Sum of F_{comp(Des(T))} over standard immaculate tableaux of the shape.
inline GradedElement dual_immaculate(const SkewShape& shape) {
    const int n = shape.size();
    GradedElement out;
    for (const auto& des : detail::sit_descents(shape))
        out.add_term(BasisIndex(Basis::F, comp_of(des, n)), 1);
    return out;
}

inline GradedElement dual_immaculate(const Composition& a) {
    return dual_immaculate(SkewShape(a));
}

// Complemented-descents variant.
inline GradedElement rs_dual_immaculate(const SkewShape& shape) {
    const int n = shape.size();
    GradedElement out;
    for (const auto& des : detail::sit_descents(shape))
        out.add_term(BasisIndex(Basis::F, comp_of(complement(des, n), n)), 1);
    return out;
}

inline GradedElement rs_dual_immaculate(const Composition& a) {
    return rs_dual_immaculate(SkewShape(a));
}

// Per-degree change-of-basis data. Rows and columns follow the order of
// compositions_of(n).
struct DegreeTables {
    std::vector<Composition> comps;
    std::map<Composition, std::size_t> pos;
    std::vector<std::vector<Int>> di_in_f;    // row a: dual immaculate of a over F
    std::vector<std::vector<Int>> f_in_di;    // its inverse
    std::vector<std::vector<Int>> imm_in_h;   // column b: immaculate of b over H
    std::vector<std::vector<Int>> rs_imm_in_h;
};

namespace detail {
inline DegreeTables build_degree_tables(int n) {
    DegreeTables t;
    t.comps = compositions_of(n);
    const std::size_t k = t.comps.size();
    for (std::size_t i = 0; i < k; ++i) t.pos.emplace(t.comps[i], i);

    t.di_in_f.assign(k, std::vector<Int>(k, 0));
    std::vector<std::vector<Int>> di_in_m(k, std::vector<Int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        const GradedElement df = dual_immaculate(t.comps[i]);
        for (const auto& [idx, c] : df.terms()) t.di_in_f[i][t.pos.at(idx.index())] = c;
        for (const auto& [idx, c] : qsym_to_m(df).terms())
            di_in_m[i][t.pos.at(idx.index())] = c;
    }
    t.f_in_di = invert_unimodular(t.di_in_f);

    // I_b = sum_g (K^{-1})_{g b} H_g for K the dual-immaculate-to-monomial
    // matrix; this is the unique family with <S*_a, I_b> = delta_{ab}.
    const auto kinv = invert_unimodular(di_in_m);
    t.imm_in_h = kinv;

    t.rs_imm_in_h.assign(k, std::vector<Int>(k, 0));
    for (std::size_t b = 0; b < k; ++b) {
        GradedElement ib;
        for (std::size_t g = 0; g < k; ++g)
            ib.add_term(BasisIndex(Basis::H, t.comps[g]), kinv[g][b]);
        const GradedElement rs = psi_nsym(ib);
        for (const auto& [idx, c] : rs.terms())
            t.rs_imm_in_h[t.pos.at(idx.index())][b] = c;
    }
    return t;
}

inline std::map<int, DegreeTables>& degree_table_store() {
    static std::map<int, DegreeTables> store;
    return store;
}
inline std::mutex& degree_table_mutex() {
    static std::mutex mu;
    return mu;
}
}  // namespace detail

inline const DegreeTables& degree_tables(int n) {
    if (!caching_enabled()) {
        // still hand out a stable reference, but always rebuilt
        static thread_local std::map<int, DegreeTables> local;
        return local[n] = detail::build_degree_tables(n);
    }
    auto& store = detail::degree_table_store();
    std::lock_guard<std::mutex> lock(detail::degree_table_mutex());
    auto it = store.find(n);
    if (it == store.end()) it = store.emplace(n, detail::build_degree_tables(n)).first;
    return it->second;
}

// Allows a persisted table to be installed; callers must have validated it.
inline void install_degree_tables(int n, DegreeTables t) {
    auto& store = detail::degree_table_store();
    std::lock_guard<std::mutex> lock(detail::degree_table_mutex());
    store.insert_or_assign(n, std::move(t));
}

inline std::vector<int> computed_table_degrees() {
    std::lock_guard<std::mutex> lock(detail::degree_table_mutex());
    std::vector<int> out;
    for (const auto& [n, t] : detail::degree_table_store()) out.push_back(n);
    return out;
}

inline GradedElement immaculate_h(const Composition& b) {
    const DegreeTables& t = degree_tables(b.size());
    const std::size_t col = t.pos.at(b);
    GradedElement out;
    for (std::size_t g = 0; g < t.comps.size(); ++g)
        out.add_term(BasisIndex(Basis::H, t.comps[g]), t.imm_in_h[g][col]);
    return out;
}

inline GradedElement rs_immaculate_h(const Composition& b) {
    const DegreeTables& t = degree_tables(b.size());
    const std::size_t col = t.pos.at(b);
    GradedElement out;
    for (std::size_t g = 0; g < t.comps.size(); ++g)
        out.add_term(BasisIndex(Basis::H, t.comps[g]), t.rs_imm_in_h[g][col]);
    return out;
}

// F-expansion of any QSym-side element.
inline GradedElement expand_to_f(const GradedElement& e) {
    return extend_linear(
        [](const BasisIndex& idx) -> GradedElement {
            switch (idx.basis()) {
                case Basis::F: return GradedElement::term(idx);
                case Basis::M: return m_to_f(idx.index());
                case Basis::DualImm: return dual_immaculate(idx.index());
                case Basis::RSDualImm: return rs_dual_immaculate(idx.index());
                case Basis::SkewDualImm: return dual_immaculate(idx.shape());
                case Basis::SkewRSDualImm: return rs_dual_immaculate(idx.shape());
                default: throw std::invalid_argument("expand_to_f: NSym-side element");
            }
        },
        e);
}

inline GradedElement expand_to_m(const GradedElement& e) { return qsym_to_m(expand_to_f(e)); }

// Exact expansion of a QSym element in the dual immaculate basis, one degree
// component at a time.
inline GradedElement expand_in_dual_immaculate(const GradedElement& e) {
    std::map<int, std::map<Composition, Int>> by_degree;
    for (const auto& [idx, c] : expand_to_f(e).terms())
        by_degree[idx.degree()][idx.index()] += c;
    GradedElement out;
    for (const auto& [n, coeffs] : by_degree) {
        const DegreeTables& t = degree_tables(n);
        for (std::size_t a = 0; a < t.comps.size(); ++a) {
            Int acc = 0;
            for (const auto& [b, c] : coeffs) acc += c * t.f_in_di[t.pos.at(b)][a];
            out.add_term(BasisIndex(Basis::DualImm, t.comps[a]), acc);
        }
    }
    return out;
}

// H-expansion of any NSym-side element.
inline GradedElement expand_to_h(const GradedElement& e) {
    return extend_linear(
        [](const BasisIndex& idx) -> GradedElement {
            switch (idx.basis()) {
                case Basis::H: return GradedElement::term(idx);
                case Basis::E: return e_to_h(idx.index());
                case Basis::Imm: return immaculate_h(idx.index());
                case Basis::RSImm: return rs_immaculate_h(idx.index());
                default: throw std::invalid_argument("expand_to_h: QSym-side element");
            }
        },
        e);
}

// psi on an arbitrary QSym-side element, via the F basis.
inline GradedElement psi_qsym(const GradedElement& e) { return psi(expand_to_f(e)); }

}  // namespace qnsym
