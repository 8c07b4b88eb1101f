// Command-line front end: expansions, Pieri rules, tableaux listings, and
// verification sweeps.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse error,
// 3 unsupported request.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnsym/qnsym.hpp"

using namespace qnsym;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Plain, Json, Latex };

std::string render(const GradedElement& e, Format fmt) {
    switch (fmt) {
        case Format::Json: return to_json(e).dump();
        case Format::Latex: return to_latex(e);
        default: return to_plain(e);
    }
}

GradedElement parse_source(const std::string& from, const std::string& index) {
    if (from == "M" || from == "m") return m_term(parse_composition(index));
    if (from == "F" || from == "f") return f_term(parse_composition(index));
    if (from == "H" || from == "h") return h_term(parse_composition(index));
    if (from == "E" || from == "e") return e_term(parse_composition(index));
    if (from == "imm") return imm_term(parse_composition(index));
    if (from == "rsimm") return rs_imm_term(parse_composition(index));
    if (from == "dualimm") return GradedElement::term(dual_imm_index(parse_skew(index)));
    if (from == "rsdualimm") return GradedElement::term(rs_dual_imm_index(parse_skew(index)));
    throw Unsupported("unknown basis: " + from);
}

GradedElement convert(const GradedElement& e, const std::string& to) {
    const bool qsym = qsym_side(e.terms().begin()->first.basis());
    if (qsym) {
        if (to == "F" || to == "f") return expand_to_f(e);
        if (to == "M" || to == "m") return expand_to_m(e);
        if (to == "dualimm") return expand_in_dual_immaculate(expand_to_f(e));
        throw Unsupported("unsupported conversion target: " + to);
    }
    if (to == "H" || to == "h") return expand_to_h(e);
    if (to == "E" || to == "e") return nsym_to_e(expand_to_h(e));
    throw Unsupported("unsupported conversion target: " + to);
}

// ---- optional on-disk cache of the per-degree basis matrices ----------------

nlohmann::json matrix_json(const std::vector<std::vector<Int>>& m) { return m; }

std::vector<std::vector<Int>> matrix_from_json(const nlohmann::json& j) {
    return j.get<std::vector<std::vector<Int>>>();
}

bool identity_product(const std::vector<std::vector<Int>>& a,
                      const std::vector<std::vector<Int>>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    for (const auto& m : {std::cref(a), std::cref(b)})
        for (const auto& row : m.get())
            if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += a[i][k] * b[k][j];
            if (acc != (i == j ? 1 : 0)) return false;
        }
    return true;
}

void load_table_cache(const std::string& dir) {
    for (int n = 1; n <= 12; ++n) {
        const auto path = std::filesystem::path(dir) / ("qnsym-tables-" + std::to_string(n) + ".json");
        std::ifstream in(path);
        if (!in) continue;
        try {
            nlohmann::json j;
            in >> j;
            DegreeTables t;
            t.comps = compositions_of(n);
            for (std::size_t i = 0; i < t.comps.size(); ++i) t.pos.emplace(t.comps[i], i);
            t.di_in_f = matrix_from_json(j.at("di_in_f"));
            t.f_in_di = matrix_from_json(j.at("f_in_di"));
            t.imm_in_h = matrix_from_json(j.at("imm_in_h"));
            const auto di_in_m = matrix_from_json(j.at("di_in_m"));
            if (!identity_product(t.di_in_f, t.f_in_di) ||
                !identity_product(di_in_m, t.imm_in_h))
                continue;  // inconsistent file; fall back to recomputation
            t.rs_imm_in_h.assign(t.comps.size(), std::vector<Int>(t.comps.size(), 0));
            for (std::size_t b = 0; b < t.comps.size(); ++b) {
                GradedElement ib;
                for (std::size_t g = 0; g < t.comps.size(); ++g)
                    ib.add_term(BasisIndex(Basis::H, t.comps[g]), t.imm_in_h[g][b]);
                for (const auto& [idx, c] : psi_nsym(ib).terms())
                    t.rs_imm_in_h[t.pos.at(idx.index())][b] = c;
            }
            install_degree_tables(n, std::move(t));
        } catch (const std::exception&) {
            // unreadable cache entries are ignored
        }
    }
}

// Persist whatever degrees this run actually computed.
void save_table_cache(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    for (int n : computed_table_degrees()) {
        if (n == 0) continue;
        const auto path = std::filesystem::path(dir) / ("qnsym-tables-" + std::to_string(n) + ".json");
        if (std::filesystem::exists(path)) continue;
        const DegreeTables& t = degree_tables(n);
        std::vector<std::vector<Int>> di_in_m(t.comps.size(),
                                              std::vector<Int>(t.comps.size(), 0));
        for (std::size_t i = 0; i < t.comps.size(); ++i)
            for (const auto& [idx, c] : expand_to_m(dual_immaculate(t.comps[i])).terms())
                di_in_m[i][t.pos.at(idx.index())] = c;
        nlohmann::json j{{"di_in_f", matrix_json(t.di_in_f)},
                         {"f_in_di", matrix_json(t.f_in_di)},
                         {"imm_in_h", matrix_json(t.imm_in_h)},
                         {"di_in_m", matrix_json(di_in_m)}};
        std::ofstream out(path);
        out << j.dump() << "\n";
    }
}

// ---- verification sweeps -----------------------------------------------------

int run_suite(const std::string& suite, int max_n) {
    int bad = 0;
    auto report = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++bad;
            std::cout << "MISMATCH " << what << "\n";
        }
    };

    if (suite == "duality") {
        for (int n = 0; n <= max_n; ++n)
            for (const auto& a : compositions_of(n))
                for (const auto& b : compositions_of(n)) {
                    const Int want = a == b ? 1 : 0;
                    report(pair(immaculate_h(b), dual_immaculate(a)) == want,
                           "duality at (" + to_string(a) + ", " + to_string(b) + ")");
                    report(pair(rs_immaculate_h(b), rs_dual_immaculate(a)) == want,
                           "rs duality at (" + to_string(a) + ", " + to_string(b) + ")");
                }
    } else if (suite == "psi") {
        for (int n = 0; n <= max_n; ++n)
            for (const auto& a : compositions_of(n)) {
                report(psi(psi_f(a)) == f_term(a), "involution at " + to_string(a));
                report(psi_nsym(e_to_h(a)) == h_term(a), "psi(E) at " + to_string(a));
            }
        for (int n = 0; n <= max_n; ++n)
            for (const auto& a : compositions_of(n))
                for (int m = 0; m <= n; ++m)
                    for (const auto& g : compositions_of(m))
                        if (contains(a, g)) {
                            const SkewShape sh(a, g);
                            report(psi_qsym(dual_immaculate(sh)) == rs_dual_immaculate(sh),
                                   "skew psi at " + to_string(sh));
                        }
    } else if (suite == "lemmas") {
        std::mt19937 rng(20240613u);
        auto rand_comp = [&](int maxn) {
            std::uniform_int_distribution<int> size_dist(0, maxn);
            const int n = size_dist(rng);
            if (n == 0) return Composition{};
            std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (n - 1)) - 1);
            Subset s;
            const std::uint32_t v = mask(rng);
            for (int i = 1; i <= n - 1; ++i)
                if (v & (1u << (i - 1))) s.push_back(i);
            return comp_of(s, n);
        };
        auto rand_f = [&] {
            GradedElement e;
            std::uniform_int_distribution<int> coeff(-3, 3);
            for (int t = 0; t < 2; ++t) {
                Int c = coeff(rng);
                e.add_term(BasisIndex(Basis::F, rand_comp(std::min(max_n, 4))), c ? c : 1);
            }
            return e;
        };
        auto rand_h = [&] {
            GradedElement e;
            std::uniform_int_distribution<int> coeff(-3, 3);
            for (int t = 0; t < 2; ++t) {
                Int c = coeff(rng);
                e.add_term(BasisIndex(Basis::H, rand_comp(std::min(max_n, 4))), c ? c : 1);
            }
            return e;
        };
        for (int t = 0; t < 100; ++t) {
            const auto f = rand_h();
            const auto a = rand_f();
            const auto b = rand_f();
            report(check_action_on_products(f, a, b), "action-on-products trial " + std::to_string(t));
            report(check_counit_action(f, a), "counit trial " + std::to_string(t));
            report(check_product_through_action(f, a, b), "product-through-action trial " + std::to_string(t));
            report(check_action_through_product(rand_h(), rand_h(), rand_f()),
                   "action-through-product trial " + std::to_string(t));
            report(check_action_through_product_row(t % 4, rand_f(), rand_h()),
                   "one-row action swap trial " + std::to_string(t));
        }
    } else if (suite == "skew-pieri") {
        for (int n = 0; n <= max_n; ++n)
            for (const auto& a : compositions_of(n))
                for (int m = 0; m <= n; ++m)
                    for (const auto& g : compositions_of(m)) {
                        if (!contains(a, g)) continue;
                        const SkewShape sh(a, g);
                        for (int s = 1; s <= 3; ++s)
                            report(expand_to_f(skew_pieri(s, sh)) == skew_pieri_oracle(s, sh),
                                   "s=" + std::to_string(s) + " shape " + to_string(sh));
                    }
    } else if (suite == "coefficients") {
        for (int n = 0; n <= max_n; ++n)
            for (int s = 0; s <= 3 && s <= n; ++s)
                for (const auto& g : compositions_of(n - s))
                    for (const auto& a : compositions_of(n))
                        report(pieri_coeff(g, s, a).value == pieri_coeff_oracle(g, s, a),
                               "c(" + to_string(g) + "; " + std::to_string(s) + "; " +
                                   to_string(a) + ")");
    } else {
        throw Unsupported("unknown suite: " + suite);
    }

    if (bad == 0) {
        std::cout << "suite " << suite << " (max " << max_n << "): pass\n";
        return 0;
    }
    std::cout << "suite " << suite << " (max " << max_n << "): " << bad << " mismatch(es)\n";
    return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact QSym/NSym computer algebra: dual immaculate bases and Pieri rules"};
    app.require_subcommand(1);

    std::string from, to = "F", index, shape_str, gamma_str, alpha_str, suite;
    int s_param = 1, max_n = 4;
    bool json = false, latex = false, row_strict = false, do_verify = false;

    auto* expand = app.add_subcommand("expand", "expand a basis element in another basis");
    expand->add_option("--from", from, "source basis (M,F,H,E,imm,rsimm,dualimm,rsdualimm)")
        ->required();
    expand->add_option("--index", index, "composition '1,2,1' or skew '1,2,1/1,1'")->required();
    expand->add_option("--to", to, "target basis (M,F,dualimm | H,E)");
    expand->add_flag("--json", json, "JSON output");
    expand->add_flag("--latex", latex, "LaTeX output");

    auto* sp = app.add_subcommand("skew-pieri", "skew Pieri expansion of F_(s) times a skew dual immaculate");
    sp->add_option("-s", s_param, "degree of the multiplier")->required();
    sp->add_option("--shape", shape_str, "skew shape 'outer/inner'")->required();
    sp->add_flag("--row-strict", row_strict, "row-strict variant");
    sp->add_flag("--verify", do_verify, "compare against the direct product");
    sp->add_flag("--json", json, "JSON output");
    sp->add_flag("--latex", latex, "LaTeX output");

    auto* pc = app.add_subcommand("pieri-coeff", "the Pieri coefficient with its case tag");
    pc->add_option("--gamma", gamma_str, "inner composition")->required();
    pc->add_option("-s", s_param, "size difference")->required();
    pc->add_option("--alpha", alpha_str, "outer composition")->required();
    pc->add_flag("--json", json, "JSON output");

    auto* tb = app.add_subcommand("tableaux", "list standard immaculate tableaux of a shape");
    tb->add_option("--shape", shape_str, "shape 'outer' or 'outer/inner'")->required();
    tb->add_flag("--json", json, "JSON output");

    auto* vf = app.add_subcommand("verify", "run a verification sweep");
    vf->add_option("--suite", suite, "duality | psi | lemmas | skew-pieri | coefficients")
        ->required();
    vf->add_option("--max", max_n, "maximum degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;  // --help and friends exit cleanly
    }

    const char* cache_dir = std::getenv("QNSYM_CACHE_DIR");
    if (cache_dir != nullptr) load_table_cache(cache_dir);

    const Format fmt = json ? Format::Json : latex ? Format::Latex : Format::Plain;
    int exit_code = 0;
    try {
        if (expand->parsed()) {
            std::cout << render(convert(parse_source(from, index), to), fmt) << "\n";
        } else if (sp->parsed()) {
            if (s_param <= 0) throw std::invalid_argument("-s must be positive");
            const SkewShape shape = parse_skew(shape_str);
            const GradedElement e =
                row_strict ? skew_pieri_rs(s_param, shape) : skew_pieri(s_param, shape);
            std::cout << render(e, fmt) << "\n";
            if (do_verify) {
                const GradedElement lhs = row_strict ? skew_pieri_rs_oracle(s_param, shape)
                                                     : skew_pieri_oracle(s_param, shape);
                const bool ok = expand_to_f(e) == lhs;
                std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
                if (!ok) exit_code = kExitMismatch;
            }
        } else if (pc->parsed()) {
            const auto c =
                pieri_coeff(parse_composition(gamma_str), s_param, parse_composition(alpha_str));
            const char* kind = c.kind == PieriCase::EqualLength ? "equal-length"
                               : c.kind == PieriCase::LengthDrop ? "length-drop"
                                                                 : "zero";
            if (json) {
                nlohmann::json j{{"value", c.value},
                                 {"case", kind},
                                 {"j", c.j},
                                 {"r", c.r},
                                 {"zvec", c.zvec.entries}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (c.value > 0 ? "+" : "") << c.value << "  case=" << kind;
                if (c.kind == PieriCase::LengthDrop)
                    std::cout << "  j=" << c.j << "  r=" << c.r;
                if (!c.zvec.entries.empty()) {
                    std::cout << "  zvec=";
                    for (std::size_t i = 0; i < c.zvec.size(); ++i)
                        std::cout << (i ? "," : "") << c.zvec[i];
                }
                std::cout << "\n";
            }
        } else if (tb->parsed()) {
            const auto all = enumerate_sit(parse_skew(shape_str));
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& t : all) arr.push_back(to_json(t));
                std::cout << arr.dump() << "\n";
            } else {
                std::cout << all.size() << " tableau(x)\n";
                for (const auto& t : all) std::cout << "\n" << render_ascii(t);
            }
        } else if (vf->parsed()) {
            exit_code = run_suite(suite, max_n);
        }
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    if (cache_dir != nullptr) save_table_cache(cache_dir);
    return exit_code;
}
