// Command-line front end: polynomial and root-of-unity computations plus the
// verification suites, with text or JSON output. Exit status: 0 on success or
// all-pass, 1 when any check fails, 2 on usage errors or bad input.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "djones/descend.hpp"
#include "djones/qdiff.hpp"
#include "djones/rmatrix.hpp"
#include "djones/serialize.hpp"
#include "djones/statesum.hpp"

using namespace djones;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    bool json_mode() const { return format == "json"; }
};

HabiroSequence resolve_knot(const std::string& knot) {
    if (!knot.empty() && knot[0] == '@') return HabiroSequence::from_file(knot.substr(1));
    return HabiroSequence::builtin(knot);
}

ValidatedDiagram resolve_diagram(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::runtime_error("cannot open diagram file: " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return validate_diagram(diagram_from_json_text(ss.str()));
    }
    return validate_diagram(builtin_diagram(spec));
}

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

long default_level() {
    const char* env = std::getenv("DJONES_LEVEL");
    return env ? std::stol(env) : 10;
}

void emit_poly(const Options& opt, const Laurent& p) {
    std::cout << (opt.json_mode() ? laurent_to_json_text(p) : p.str()) << "\n";
}

void emit_cyclo(const Options& opt, const Cyclo& z) {
    std::cout << (opt.json_mode() ? cyclo_to_json_text(z) : z.str()) << "\n";
}

void emit_matrix(const Options& opt, const CMatrix& m) {
    if (opt.json_mode()) {
        std::vector<std::vector<Cyclo>> rows;
        for (long i = 0; i < m.rows(); ++i) {
            std::vector<Cyclo> row;
            for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
            rows.push_back(std::move(row));
        }
        std::cout << matrix_to_json_text(rows) << "\n";
        return;
    }
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j)
            std::cout << (j ? "\t" : "") << m.at(i, j).str();
        std::cout << "\n";
    }
}

// returns false when the report contains failures
bool emit_report(const Options& opt, const Report& rep) {
    if (opt.json_mode()) {
        json o;
        o["title"] = rep.title;
        o["all_pass"] = rep.all_pass();
        json lines = json::array();
        for (const auto& l : rep.lines)
            lines.push_back({{"pass", l.pass}, {"label", l.label}, {"lhs", l.lhs},
                             {"rhs", l.rhs}});
        o["lines"] = lines;
        std::cout << o.dump() << "\n";
    } else {
        std::cout << rep.text();
    }
    return rep.all_pass();
}

std::vector<long> parse_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact descendant colored Jones invariants and root-of-unity state sums"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string knot = "4_1", diagram, diagram2;
    long n = 1, k = 0, m = 0, root = 3, level = 0, color = -1, twist = 1;
    long a = 0, b = 0;
    bool use_recursion = false;

    auto* jones = app.add_subcommand("jones", "colored Jones polynomial J_n");
    jones->add_option("--knot", knot, "3_1, 4_1, 5_2 or @habiro-file")->required();
    jones->add_option("--n", n, "color, n >= 1")->required()->check(CLI::PositiveNumber);

    auto* habiro = app.add_subcommand("habiro", "Habiro coefficient H_k");
    habiro->add_option("--knot", knot)->required();
    habiro->add_option("--k", k, "index k >= 0")->required()->check(CLI::NonNegativeNumber);
    habiro->add_flag("--recursion", use_recursion,
                     "use the 5_2 three-term recursion instead of the closed form");

    auto* desc = app.add_subcommand("descendant", "descendant DJ^{(m)} in its four modes");
    desc->add_option("--knot", knot)->required();
    desc->add_option("--m", m, "descendant index")->required();
    auto* dn = desc->add_option("--n", n, "colored mode: DJ^{(m)}_n");
    auto* dx = desc->add_option("--x-terms", k, "symbolic mode: first k terms in (x,q)");
    auto* dl = desc->add_option("--level", level, "truncated mode at this level");
    auto* dr = desc->add_option("--root", root, "evaluation at a primitive root of order N");

    auto* ev = app.add_subcommand("eval", "exact root-of-unity evaluations");
    ev->add_option("--knot", knot);
    ev->add_option("--m", m, "descendant index");
    ev->add_option("--root", root, "order of the root")->required();
    ev->add_option("--twist", twist, "Galois twist exponent");
    auto* eva = ev->add_option("--a", a, "5_2 double-sum index a");
    auto* evb = ev->add_option("--b", b, "5_2 double-sum index b");
    eva->needs(evb);
    evb->needs(eva);

    std::string mrange = "0..0", nrange = "1..4";
    auto* rc = app.add_subcommand("recursion-check", "verify the built-in q-difference relation");
    rc->add_option("--knot", knot)->required();
    rc->add_option("--m", mrange, "descendant range lo..hi");
    rc->add_option("--n", nrange, "color range lo..hi");
    rc->add_option("--level", level, "check in the truncated ring at this level instead");

    std::string levels = "10,20", roots = "5,7";
    auto* id52 = app.add_subcommand("identities-52", "the five double-sum identities");
    id52->add_option("--levels", levels, "truncation levels, comma separated");
    id52->add_option("--roots", roots, "root orders, comma separated");

    long rmN = 3;
    std::string suite = "all", xs = "2", ys = "3";
    auto* rm = app.add_subcommand("rmatrix-check", "R-matrix identity suites");
    rm->add_option("--N", rmN, "order of the root of unity")->required();
    rm->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "yb", "gauge", "fourier", "w", "f"}));
    rm->add_option("--x", xs, "first spectral value (rational)");
    rm->add_option("--y", ys, "second spectral value (rational)");

    auto* ss = app.add_subcommand("statesum", "contract a long-knot diagram");
    ss->add_option("--diagram", diagram, "built-in name or @file.json")->required();
    ss->add_option("--N", root, "order of the root")->required();
    ss->add_option("--color", color, "color n in Z/N; -1 runs all")->required();

    auto* c2 = app.add_subcommand("conjecture2", "state sum against J_{n+1}(zeta_N)");
    c2->add_option("--knot", knot)->required();
    c2->add_option("--diagram", diagram, "defaults to the built-in diagram of the knot");
    c2->add_option("--N", root)->required();
    c2->add_option("--color", color, "color; -1 runs all");

    auto* inv = app.add_subcommand("invariance", "two diagrams of one knot agree");
    inv->add_option("--diagram", diagram)->required();
    inv->add_option("--diagram2", diagram2)->required();
    inv->add_option("--N", root)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*jones) {
            emit_poly(opt, jones_from_habiro(resolve_knot(knot), n));
        } else if (*habiro) {
            if (use_recursion) {
                if (knot != "5_2") throw std::runtime_error("--recursion applies to 5_2");
                emit_poly(opt, habiro_recursion_52(k));
            } else {
                emit_poly(opt, resolve_knot(knot).h(k));
            }
        } else if (*desc) {
            HabiroSequence seq = resolve_knot(knot);
            if (*dn) {
                emit_poly(opt, dj_colored(seq, m, n));
            } else if (*dx) {
                auto terms = dj_x_terms(seq, m, k);
                if (opt.json_mode()) {
                    json arr = json::array();
                    for (const auto& t : terms)
                        arr.push_back(json::parse(bilaurent_to_json_text(t)));
                    std::cout << arr.dump() << "\n";
                } else {
                    for (std::size_t i = 0; i < terms.size(); ++i)
                        std::cout << "k=" << i << ": " << terms[i].str() << "\n";
                }
            } else if (*dl) {
                HabiroTruncation t = dj_habiro(seq, m, level);
                if (opt.json_mode()) {
                    json o;
                    o["level"] = t.level();
                    o["rep"] = json::parse(laurent_to_json_text(t.rep()));
                    std::cout << o.dump() << "\n";
                } else {
                    std::cout << "level " << t.level() << ": " << t.rep().str() << "\n";
                }
            } else if (*dr) {
                emit_cyclo(opt, dj_eval_root(seq, m, root, twist));
            } else {
                HabiroTruncation t = dj_habiro(seq, m, default_level());
                std::cout << "level " << t.level() << ": " << t.rep().str() << "\n";
            }
        } else if (*ev) {
            if (*eva) {
                emit_cyclo(opt, dj_ab_52_root(a, b, root, twist));
            } else {
                emit_cyclo(opt, dj_eval_root(resolve_knot(knot), m, root, twist));
            }
        } else if (*rc) {
            auto [mlo, mhi] = parse_range(mrange);
            Report rep;
            if (level > 0) {
                rep = verify_relation_truncated(knot, mlo, mhi, level);
            } else {
                auto [nlo, nhi] = parse_range(nrange);
                rep = verify_relation(knot, mlo, mhi, nlo, nhi);
            }
            return emit_report(opt, rep) ? 0 : 1;
        } else if (*id52) {
            return emit_report(opt, verify_52_identities(parse_list(levels),
                                                         parse_list(roots)))
                       ? 0
                       : 1;
        } else if (*rm) {
            Rat x = rat_from_string(xs), y = rat_from_string(ys);
            Report all;
            all.title = "rmatrix suites";
            auto fold = [&all](const Report& r) {
                for (const auto& l : r.lines) all.lines.push_back(l);
            };
            if (suite == "all" || suite == "w") fold(check_w_properties(rmN, x));
            if (suite == "all" || suite == "gauge") {
                fold(check_gauge_identities(rmN, x, y));
                fold(check_r_at_one(rmN, x == Rat(1) ? Rat(2) : x));
            }
            if (suite == "all" || suite == "fourier") {
                fold(check_fourier_h(rmN, x));
                fold(check_fourier_r(rmN, x));
            }
            if (suite == "all" || suite == "f") {
                fold(check_f_special_values(rmN, x));
                fold(check_q_binomial(rmN, x));
            }
            if (suite == "all" || suite == "yb") {
                fold(check_yang_baxter(rmN, x, y));
                fold(check_yang_baxter_at_one(rmN));
            }
            return emit_report(opt, all) ? 0 : 1;
        } else if (*ss) {
            ValidatedDiagram vd = resolve_diagram(diagram);
            if (color >= 0) {
                emit_matrix(opt, contract(vd, root, color));
            } else {
                for (long c = 0; c < root; ++c) {
                    if (!opt.json_mode()) std::cout << "color " << c << ":\n";
                    emit_matrix(opt, contract(vd, root, c));
                }
            }
        } else if (*c2) {
            HabiroSequence seq = resolve_knot(knot);
            std::string fallback = knot == "4_1" ? knot : knot + "_balanced";
            ValidatedDiagram vd = resolve_diagram(diagram.empty() ? fallback : diagram);
            Report rep;
            rep.title = "conjectured state-sum value";
            long lo = color >= 0 ? color : 0;
            long hi = color >= 0 ? color : root - 1;
            for (long c = lo; c <= hi; ++c) {
                Report one = conjecture2_check(seq, vd, root, c);
                for (const auto& l : one.lines) rep.lines.push_back(l);
            }
            return emit_report(opt, rep) ? 0 : 1;
        } else if (*inv) {
            return emit_report(opt, invariance_check(resolve_diagram(diagram),
                                                     resolve_diagram(diagram2), root))
                       ? 0
                       : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
