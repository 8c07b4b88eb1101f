// Plain-text, LaTeX and JSON rendering of elements and tableaux.
#pragma once

#include <string>

#include <json.hpp>

#include "qnsym/element.hpp"
#include "qnsym/tableau.hpp"

namespace qnsym {

inline const char* plain_tag(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::DualImm:
        case Basis::SkewDualImm: return "S*";
        case Basis::RSDualImm:
        case Basis::SkewRSDualImm: return "RS*";
        case Basis::H: return "H";
        case Basis::E: return "E";
        case Basis::Imm: return "I";
        case Basis::RSImm: return "RI";
    }
    return "?";
}

inline std::string plain_index(const BasisIndex& idx) {
    std::string s = "[" + to_string(idx.index());
    if (idx.is_skew()) s += "/" + to_string(idx.inner());
    return s + "]";
}

// "S*[1,2,1] - S*[1,1,2,1/1] + 2*M[1,1]" style, terms in canonical order.
inline std::string to_plain(const GradedElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : e.terms()) {
        const Int mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += plain_tag(idx.basis());
        out += plain_index(idx);
    }
    return out;
}

inline std::string latex_tag(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::DualImm:
        case Basis::SkewDualImm: return "\\mathfrak{S}^*";
        case Basis::RSDualImm:
        case Basis::SkewRSDualImm: return "\\mathcal{R}\\mathfrak{S}^*";
        case Basis::H: return "H";
        case Basis::E: return "E";
        case Basis::Imm: return "I";
        case Basis::RSImm: return "\\mathcal{R}I";
    }
    return "?";
}

inline std::string latex_comp(const Composition& a) {
    return a.empty() ? std::string("\\emptyset") : "(" + to_string(a) + ")";
}

inline std::string to_latex(const GradedElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : e.terms()) {
        const Int mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += std::to_string(mag) + "\\,";
        out += latex_tag(idx.basis());
        out += "_{" + latex_comp(idx.index());
        if (idx.is_skew()) out += "/" + latex_comp(idx.inner());
        out += "}";
    }
    return out;
}

// Canonically ordered list of {basis, index: {outer, inner}, coeff} records.
inline nlohmann::json to_json(const GradedElement& e) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [idx, c] : e.terms()) {
        arr.push_back({{"basis", basis_name(idx.basis())},
                       {"index", {{"outer", idx.index().parts()}, {"inner", idx.inner().parts()}}},
                       {"coeff", c}});
    }
    return arr;
}

// Rows listed bottom row first.
inline nlohmann::json to_json(const Tableau& t) {
    return {{"shape",
             {{"outer", t.shape().outer.parts()}, {"inner", t.shape().inner.parts()}}},
            {"rows", t.rows()}};
}

}  // namespace qnsym
