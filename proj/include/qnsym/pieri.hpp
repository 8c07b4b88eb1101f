// Left Pieri rules for the (row-strict) immaculate and dual immaculate
// bases, the skew Pieri expansion, and linear-algebra oracles for each.
#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qnsym/immaculate.hpp"
#include "qnsym/pairing.hpp"

namespace qnsym {

// Membership in Z_{s,alpha}: the three conditions on an integer vector of
// length l(alpha).
inline bool in_z_set(const IntVector& v, int s, const Composition& alpha) {
    const std::size_t k = alpha.length();
    if (v.size() != k) throw std::invalid_argument("in_z_set: length mismatch");

    int total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        total += v[i];
        if (i + 1 < k && total > s) return false;  // prefix sums stay <= s
    }
    if (total != s) return false;

    int zeros = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const int d = alpha.part(i) - v[i];
        if (d < 0) return false;
        if (d == 0) ++zeros;
    }
    if (zeros > 1) return false;

    int prefix = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const int rem = s - prefix;
        if (alpha.part(i) > rem) {
            if (v[i] < 0 || v[i] > rem) return false;
        } else if (alpha.part(i) < rem) {
            if (v[i] >= 0) return false;
        } else {
            bool tail_zero = v[i] == alpha.part(i);
            for (std::size_t j = i + 1; j < k && tail_zero; ++j)
                if (v[j] != 0) tail_zero = false;
            if (!(v[i] < 0 || tail_zero)) return false;
        }
        prefix += v[i];
    }
    return true;
}

enum class PieriCase { EqualLength, LengthDrop, Zero };

// The coefficient c^gamma_{s,alpha} together with the branch taken and the
// witnesses that decided it.
struct PieriCoeffCase {
    int value = 0;
    PieriCase kind = PieriCase::Zero;
    int j = 0;  // 1-based; meaningful for the length-drop branch
    int r = 0;
    IntVector zvec;  // the vector whose Z-membership was tested, if any
};

inline PieriCoeffCase pieri_coeff(const Composition& gamma, int s, const Composition& alpha) {
    if (s < 0 || alpha.size() - gamma.size() != s)
        throw std::invalid_argument("pieri_coeff: need |alpha| - |gamma| = s >= 0");
    const int k = static_cast<int>(alpha.length());
    PieriCoeffCase out;

    if (gamma.length() == alpha.length()) {
        if (k == 0) {  // both empty, s = 0
            out.value = 1;
            out.kind = PieriCase::EqualLength;
            return out;
        }
        IntVector v = subtract_padded(alpha, gamma);
        if (in_z_set(v, s, alpha)) {
            out.value = sign(v);
            out.kind = PieriCase::EqualLength;
        }
        out.zvec = std::move(v);
        return out;
    }

    if (gamma.length() + 1 != alpha.length()) return out;

    // smallest j with alpha_i = gamma_{i-1} for all j < i <= k
    int j = k;
    while (j >= 2 && alpha.part(j - 1) == gamma.part(j - 2)) --j;
    // largest r with alpha_j < alpha_{j+1} < ... < alpha_r
    int r = j;
    while (r < k && alpha.part(r - 1) < alpha.part(r)) ++r;
    out.j = j;
    out.r = r;

    std::vector<int> head(k, 0);
    for (int i = 0; i + 1 < j; ++i) head[i] = alpha.part(i) - gamma.part(i);
    head[j - 1] = alpha.part(j - 1);
    IntVector v(std::move(head));

    if ((r - j) % 2 == 0 && in_z_set(v, s, alpha)) {
        int neg = 0;
        for (int i = 0; i + 1 < j; ++i)
            if (v[i] < 0) ++neg;
        out.value = neg % 2 == 0 ? 1 : -1;  // sign of alpha^{(j-1)} - gamma^{(j-1)}
        out.kind = PieriCase::LengthDrop;
    }
    out.zvec = std::move(v);
    return out;
}

namespace detail {
// F_{(s)} . dual immaculate of gamma, expanded in the dual immaculate basis.
inline GradedElement f_times_di_impl(const Composition& gamma, int s) {
    const GradedElement prod =
        product_f(f_term(Composition(std::vector<int>(1, s))), dual_immaculate(gamma));
    return expand_in_dual_immaculate(prod);
}

inline GradedElement f_times_di(const Composition& gamma, int s) {
    if (!caching_enabled()) return f_times_di_impl(gamma, s);
    static std::map<std::pair<Composition, int>, GradedElement> cache;
    static std::mutex mu;
    const auto key = std::make_pair(gamma, s);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GradedElement val = f_times_di_impl(gamma, s);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(val)).first->second;
}
}  // namespace detail

// Coefficient of the dual immaculate of alpha in F_{(s)} . (dual immaculate
// of gamma), read off by exact linear algebra. Independent of pieri_coeff.
inline Int pieri_coeff_oracle(const Composition& gamma, int s, const Composition& alpha) {
    if (s < 0 || alpha.size() - gamma.size() != s)
        throw std::invalid_argument("pieri_coeff_oracle: need |alpha| - |gamma| = s >= 0");
    if (s == 0) return gamma == alpha ? 1 : 0;
    return detail::f_times_di(gamma, s).coefficient(BasisIndex(Basis::DualImm, alpha));
}

namespace detail {
// Candidate right-hand indices for the left Pieri rules.
inline std::vector<Composition> pieri_targets(const Composition& alpha, int grow,
                                              int min_first) {
    std::vector<Composition> out;
    for (const auto& b : compositions_of(alpha.size() + grow)) {
        const int dl = static_cast<int>(b.length()) - static_cast<int>(alpha.length());
        if (dl < 0 || dl > 1) continue;
        if (!b.empty() && b.part(0) < min_first) continue;
        if (b.empty() && min_first > 0) continue;
        out.push_back(b);
    }
    return out;
}
}  // namespace detail

// H_m . I_alpha on the immaculate basis.
inline GradedElement left_pieri_h(int m, const Composition& alpha) {
    if (m <= 0) throw std::invalid_argument("left_pieri_h: m must be positive");
    GradedElement out;
    for (const auto& b : detail::pieri_targets(alpha, m, m))
        out.add_term(BasisIndex(Basis::Imm, b), pieri_coeff(tail(b), b.part(0) - m, alpha).value);
    return out;
}

// E_m . RI_alpha: same coefficients, row-strict tags.
inline GradedElement left_pieri_e_rs(int m, const Composition& alpha) {
    if (m <= 0) throw std::invalid_argument("left_pieri_e_rs: m must be positive");
    GradedElement out;
    for (const auto& b : detail::pieri_targets(alpha, m, m))
        out.add_term(BasisIndex(Basis::RSImm, b),
                     pieri_coeff(tail(b), b.part(0) - m, alpha).value);
    return out;
}

// F_{(s)} . (dual immaculate of alpha) on the dual immaculate basis.
inline GradedElement left_pieri_f(int s, const Composition& alpha) {
    if (s <= 0) throw std::invalid_argument("left_pieri_f: s must be positive");
    GradedElement out;
    for (const auto& b : detail::pieri_targets(alpha, s, 0))
        out.add_term(BasisIndex(Basis::DualImm, b), pieri_coeff(alpha, s, b).value);
    return out;
}

// F_{(1^s)} . (row-strict dual immaculate of alpha), same coefficients.
inline GradedElement left_pieri_f_rs(int s, const Composition& alpha) {
    if (s <= 0) throw std::invalid_argument("left_pieri_f_rs: s must be positive");
    GradedElement out;
    for (const auto& b : detail::pieri_targets(alpha, s, 0))
        out.add_term(BasisIndex(Basis::RSDualImm, b), pieri_coeff(alpha, s, b).value);
    return out;
}

// Inner shapes tau with gamma/tau a vertical strip of exactly r boxes.
inline std::vector<Composition> vertical_strip_subtractions(const Composition& gamma, int r) {
    std::vector<Composition> out;
    if (r < 0 || r > gamma.size()) return out;
    const std::size_t k = gamma.length();
    std::vector<int> v(k, 0);
    auto rec = [&](auto&& self, std::size_t j, int removed) -> void {
        if (removed > r) return;
        if (j == k) {
            if (removed != r) return;
            // zeros must be trailing for v to be a composition
            std::vector<int> parts;
            for (std::size_t i = 0; i < k; ++i) {
                if (v[i] == 0) {
                    for (std::size_t l = i; l < k; ++l)
                        if (v[l] != 0) return;
                    break;
                }
                parts.push_back(v[i]);
            }
            out.emplace_back(std::move(parts));
            return;
        }
        v[j] = gamma.part(j);
        self(self, j + 1, removed);
        v[j] = gamma.part(j) - 1;
        self(self, j + 1, removed + 1);
        v[j] = 0;
        return;
    };
    rec(rec, 0, 0);
    return out;
}

// The (beta, tau) index pairs of the skew Pieri expansion: |beta/tau| grows
// by s, gamma/tau is a vertical strip of at most s boxes, the outer shape
// gains at most one row, and tau fits inside beta.
inline std::vector<std::pair<Composition, Composition>> skew_pieri_candidates(
    int s, const SkewShape& shape) {
    const Composition& alpha = shape.outer;
    const Composition& gamma = shape.inner;
    std::vector<std::pair<Composition, Composition>> out;
    for (int i = 0; i <= s; ++i) {
        const int strip = s - i;
        if (strip > gamma.size()) continue;
        for (const auto& tau : vertical_strip_subtractions(gamma, strip))
            for (const auto& beta : detail::pieri_targets(alpha, i, 0))
                if (contains(beta, tau)) out.emplace_back(beta, tau);
    }
    return out;
}

// The skew Pieri expansion of F_{(s)} . (dual immaculate of alpha/gamma):
// signed sum of skew dual immaculate terms over the candidate pairs, with
// coefficient (-1)^{|gamma| - |tau|} c^alpha_{|beta| - |alpha|, beta}.
inline GradedElement skew_pieri(int s, const SkewShape& shape) {
    if (s <= 0) throw std::invalid_argument("skew_pieri: s must be positive");
    GradedElement out;
    for (const auto& [beta, tau] : skew_pieri_candidates(s, shape)) {
        const int i = beta.size() - shape.outer.size();
        const int c = pieri_coeff(shape.outer, i, beta).value;
        if (c == 0) continue;
        const int sgn = (shape.inner.size() - tau.size()) % 2 == 0 ? 1 : -1;
        out.add_term(dual_imm_index(SkewShape(beta, tau)), sgn * c);
    }
    return out;
}

// Row-strict image: identical index pairs and coefficients.
inline GradedElement skew_pieri_rs(int s, const SkewShape& shape) {
    if (s <= 0) throw std::invalid_argument("skew_pieri_rs: s must be positive");
    GradedElement out;
    for (const auto& [beta, tau] : skew_pieri_candidates(s, shape)) {
        const int i = beta.size() - shape.outer.size();
        const int c = pieri_coeff(shape.outer, i, beta).value;
        if (c == 0) continue;
        const int sgn = (shape.inner.size() - tau.size()) % 2 == 0 ? 1 : -1;
        out.add_term(rs_dual_imm_index(SkewShape(beta, tau)), sgn * c);
    }
    return out;
}

// Left-hand side computed directly in QSym; certifies skew_pieri after both
// are pushed to the F basis.
inline GradedElement skew_pieri_oracle(int s, const SkewShape& shape) {
    return product_f(f_term(Composition(std::vector<int>(1, s))), dual_immaculate(shape));
}

inline GradedElement skew_pieri_rs_oracle(int s, const SkewShape& shape) {
    return product_f(f_term(Composition(std::vector<int>(s, 1))), rs_dual_immaculate(shape));
}

// Every coefficient in {-1, 0, +1}.
inline bool multiplicity_free_up_to_sign(const GradedElement& e) {
    for (const auto& [idx, c] : e.terms())
        if (c < -1 || c > 1) return false;
    return true;
}

}  // namespace qnsym
