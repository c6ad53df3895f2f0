// qtb: command-line front end for the quantum torus / (q,t)-character library.
//
// Subcommands:
//   invcartan     print the inverse quantum Cartan tables
//   klpoly        Kazhdan-Lusztig-type decomposition E_t = sum P * L_t
//   correspond    type A <-> type B simple-module dictionary
//   export_quiver Auslander-Reiten / twisted quivers as DOT or JSON
//   selftest      run the acceptance criteria
//
// Exit codes: 0 success, 1 invalid input, 2 internal consistency error,
// 3 identity violation / failing selftest.

#include "CLI11.hpp"
#include "json.hpp"

#include "qtb/ab_corr.hpp"
#include "qtb/ar_quiver.hpp"
#include "qtb/qtchar.hpp"
#include "qtb/selftest.hpp"

#include <cctype>
#include <cstdio>
#include <iostream>

using nlohmann::json;
using namespace qtb;

namespace {

// Grammar: product of Y(i,r) or Y(i,r)^e tokens, optional '*' separators,
// whitespace-insensitive.  r is an integer or a half-integer literal p/2;
// both denote the same doubled spectral parameter used by the library
// (columns are stored doubled, so Y(i,p/2) and Y(i,p) are the same variable).
YMonomial parse_monomial(const std::string& s) {
    std::size_t p = 0;
    auto skip = [&] {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    };
    auto expect = [&](char c) {
        skip();
        if (p >= s.size() || s[p] != c)
            throw std::invalid_argument("monomial: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(p));
        ++p;
    };
    auto parse_int = [&] {
        skip();
        std::size_t q = p;
        if (q < s.size() && (s[q] == '-' || s[q] == '+')) ++q;
        std::size_t d = q;
        while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
        if (d == q) throw std::invalid_argument("monomial: expected integer at position " +
                                                std::to_string(p));
        const long v = std::stol(s.substr(p, d - p));
        p = d;
        return static_cast<int>(v);
    };

    YMonomial m;
    skip();
    if (p == s.size()) throw std::invalid_argument("monomial: empty input");
    while (p < s.size()) {
        skip();
        if (p >= s.size()) break;
        if (s[p] == '*') {
            ++p;
            continue;
        }
        if (s[p] != 'Y') throw std::invalid_argument("monomial: expected 'Y' at position " +
                                                     std::to_string(p));
        ++p;
        expect('(');
        const int i = parse_int();
        expect(',');
        int rr = parse_int();
        skip();
        if (p < s.size() && s[p] == '/') {
            ++p;
            const int den = parse_int();
            if (den != 2) throw std::invalid_argument("monomial: only /2 denominators allowed");
        }
        expect(')');
        skip();
        int e = 1;
        if (p < s.size() && s[p] == '^') {
            ++p;
            e = parse_int();
        }
        if (i < 1) throw std::invalid_argument("monomial: residue must be >= 1");
        m.mul_var(i, rr, e);
        skip();
    }
    if (m.is_one()) throw std::invalid_argument("monomial: no variables parsed");
    return m;
}

json laurent_json(const TLaurent& c) {
    json out = json::array();
    for (const auto& [h, v] : c.coeffs()) out.push_back({h, v});
    return out;
}

json element_json(const TorusElement& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json mono = json::array();
        for (const auto& [k, e] : m.exps()) mono.push_back({k.first, k.second, e});
        terms.push_back({{"mono", mono}, {"coeff", laurent_json(c)}});
    }
    return {{"terms", terms}};
}

Kind parse_kind(const std::string& s) {
    if (s == "A" || s == "a") return Kind::A;
    if (s == "B" || s == "b") return Kind::B;
    throw std::invalid_argument("type must be A or B");
}

// ---------------------------------------------------------------- invcartan

int cmd_invcartan(const std::string& type, int n, int depth, bool as_json) {
    const CartanData cd = build_cartan(parse_kind(type), n);
    if (depth <= 0) depth = cd.kind == Kind::B ? 2 * (4 * n - 2) : 4 * (n + 1);
    const InverseQCartanTable tab(cd, depth);

    if (as_json) {
        json tables = json::array();
        for (int i = 1; i <= n; ++i) {
            json rows = json::array();
            for (int j = 1; j <= n; ++j) {
                json coeffs = json::array();
                for (int rr = -cd.r[j - 1]; rr >= -depth; --rr)
                    if (tab.at(j, i, rr) != 0) coeffs.push_back({rr, tab.at(j, i, rr)});
                rows.push_back({{"j", j}, {"coeffs", coeffs}});
            }
            tables.push_back({{"i", i}, {"rows", rows}});
        }
        std::cout << json{{"type", type}, {"n", n}, {"depth", depth}, {"tables", tables}}.dump(2)
                  << "\n";
        return 0;
    }

    for (int i = 1; i <= n; ++i) {
        std::printf("ctilde_{j,%d}(r):\n", i);
        std::printf("%8s", "r");
        for (int rr = -1; rr >= -depth; --rr) std::printf("%4d", rr);
        std::printf("\n");
        for (int j = 1; j <= n; ++j) {
            std::printf("   j=%-3d", j);
            for (int rr = -1; rr >= -depth; --rr) {
                if (rr > -cd.r[j - 1])
                    std::printf("%4s", ".");
                else
                    std::printf("%4lld", static_cast<long long>(tab.at(j, i, rr)));
            }
            std::printf("\n");
        }
        std::printf("\n");
    }
    return 0;
}

// ------------------------------------------------------------------- klpoly

int cmd_klpoly(const std::string& type, int n, const std::string& mono, int depth,
               bool as_json, bool full) {
    const CartanData cd = build_cartan(parse_kind(type), n);
    const YMonomial m = parse_monomial(mono);
    for (const auto& [k, e] : m.exps()) {
        if (k.first > n) throw std::invalid_argument("monomial: residue exceeds rank");
        if (e < 0) throw std::invalid_argument("monomial: must be dominant");
    }
    const QCharEngine eng(cd, depth);
    const auto kl = eng.kl_decompose(m);

    if (as_json) {
        json basis = json::array(), p = json::array();
        for (std::size_t j = 0; j < kl.basis.size(); ++j) {
            basis.push_back(kl.basis[j].str());
            p.push_back(laurent_json(kl.p[j]));
        }
        json out = {{"monomial", m.str()}, {"basis", basis}, {"p", p}};
        if (full) {
            json et = json::array(), lt = json::array();
            for (std::size_t j = 0; j < kl.basis.size(); ++j) {
                et.push_back(element_json(kl.et[j]));
                lt.push_back(element_json(kl.lt[j]));
            }
            out["et"] = et;
            out["lt"] = lt;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::printf("E_t(%s) = sum over j of P_j(t) L_t(m_j):\n", m.str().c_str());
    for (std::size_t j = kl.basis.size(); j-- > 0;) {
        const bool self = kl.basis[j] == m;
        std::printf("  P[%s] = %s%s\n", kl.basis[j].str().c_str(), kl.p[j].str().c_str(),
                    self ? "   (self)" : "");
    }
    if (full) {
        for (std::size_t j = kl.basis.size(); j-- > 0;)
            std::printf("  L_t(%s) = %s\n", kl.basis[j].str().c_str(), kl.lt[j].str().c_str());
    }
    return 0;
}

// --------------------------------------------------------------- correspond

int cmd_correspond(int n, const std::string& dir_s, const std::string& mono,
                   const std::string& fundamental, bool table, bool as_json) {
    ABDirection dir;
    if (dir_s == "AtoB")
        dir = ABDirection::AtoB;
    else if (dir_s == "BtoA")
        dir = ABDirection::BtoA;
    else
        throw std::invalid_argument("dir must be AtoB or BtoA");

    if (table) {
        const auto lines = fundamental_dictionary(n, dir);
        if (as_json) {
            json out = json::array();
            for (const auto& [l, r] : lines) out.push_back({{"from", l.str()}, {"to", r.str()}});
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& [l, r] : lines)
                std::printf("%s -> %s\n", l.str().c_str(), r.str().c_str());
        }
        return 0;
    }

    const std::string src = !fundamental.empty() ? fundamental : mono;
    if (src.empty())
        throw std::invalid_argument("provide --monomial, --fundamental, or --table");
    const YMonomial in = parse_monomial(src);
    if (!fundamental.empty() &&
        (in.exps().size() != 1 || in.exps().begin()->second != 1))
        throw std::invalid_argument("--fundamental expects a single variable Y(i,r)");
    const YMonomial out = transport(n, in, dir);
    if (as_json)
        std::cout << json{{"n", n}, {"dir", dir_s}, {"input", in.str()}, {"output", out.str()}}
                         .dump(2)
                  << "\n";
    else
        std::printf("%s\n", out.str().c_str());
    return 0;
}

// ------------------------------------------------------------ export_quiver

int cmd_export_quiver(int rank, const std::string& orientation, int xi1, bool twisted,
                      const std::string& flat_s, const std::string& format) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    QuiverSpec q;
    q.rank = rank;
    std::string orient = orientation;
    if (orient.empty()) orient = std::string(static_cast<std::size_t>(rank > 0 ? rank - 1 : 0), '>');
    if (static_cast<int>(orient.size()) != rank - 1)
        throw std::invalid_argument("orientation must have rank-1 characters of '<' or '>'");
    for (int a = 1; a < rank; ++a) {
        // '>' : arrow a+1 -> a (descending), '<' : arrow a -> a+1
        const char c = orient[static_cast<std::size_t>(a - 1)];
        if (c == '>')
            q.arrows.emplace_back(a + 1, a);
        else if (c == '<')
            q.arrows.emplace_back(a, a + 1);
        else
            throw std::invalid_argument("orientation characters must be '<' or '>'");
    }
    q.xi[1] = xi1;
    complete_heights(q);

    Flat flat = Flat::Greater;
    if (flat_s == "less")
        flat = Flat::Less;
    else if (flat_s != "greater")
        throw std::invalid_argument("flat must be 'greater' or 'less'");

    ARQuiver g;
    json meta;
    if (twisted) {
        if (rank % 2 != 0) throw std::invalid_argument("twisted export needs even rank 2n-2");
        const TwistedQuiver tq = twist(q, flat);
        g = tq.hat;
        meta = {{"type", "A-twisted"}, {"n", tq.n}, {"flat", flat_s}};
    } else {
        g = ar_quiver(q);
        meta = {{"type", "A"}, {"n", rank}};
    }

    if (format == "dot") {
        std::printf("digraph ar {\n  rankdir=LR;\n");
        for (const auto& v : g.verts)
            std::printf("  \"%d,%d\" [label=\"(%d, %d)\"];\n", v.res, v.rr, v.res, v.rr);
        for (const auto& [s, t] : g.arrows)
            std::printf("  \"%d,%d\" -> \"%d,%d\";\n", g.verts[s].res, g.verts[s].rr,
                        g.verts[t].res, g.verts[t].rr);
        std::printf("}\n");
        return 0;
    }
    if (format != "json") throw std::invalid_argument("format must be 'dot' or 'json'");

    json xi = json::object();
    for (const auto& [v, h] : q.xi) xi[std::to_string(v)] = h;
    json nodes = json::array(), arrows = json::array();
    for (const auto& v : g.verts) nodes.push_back({v.res, v.rr});
    for (const auto& [s, t] : g.arrows) arrows.push_back({s, t});
    meta["xi"] = xi;
    meta["nodes"] = nodes;
    meta["arrows"] = arrows;
    std::cout << meta.dump(2) << "\n";
    return 0;
}

// ----------------------------------------------------------------- selftest

int cmd_selftest(const std::string& level_s, unsigned seed) {
    TestLevel level;
    if (level_s == "fast")
        level = TestLevel::Fast;
    else if (level_s == "full")
        level = TestLevel::Full;
    else
        throw std::invalid_argument("level must be 'fast' or 'full'");

    bool ok = true;
    for (int k = 1; k <= criterion_count(); ++k) {
        const CriterionResult r = run_criterion(k, level, seed);
        std::printf("criterion %2d [%s] %s (%.2fs)%s%s\n", r.number,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.message.empty() ? "" : ": ", r.message.c_str());
        std::fflush(stdout);
        ok = ok && r.passed;
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum torus, (q,t)-characters, and the type A <-> B dictionary"};
    app.require_subcommand(1);

    // invcartan
    std::string ic_type = "B";
    int ic_n = 2, ic_depth = 0;
    bool ic_json = false;
    auto* ic = app.add_subcommand("invcartan", "inverse quantum Cartan tables");
    ic->add_option("--type", ic_type, "Cartan type (A or B)");
    ic->add_option("--n", ic_n, "rank")->required();
    ic->add_option("--depth", ic_depth, "table depth (default: two quasi-periods)");
    ic->add_flag("--json", ic_json, "JSON output");

    // klpoly
    std::string kl_type = "B", kl_mono;
    int kl_n = 2, kl_depth = 60;
    bool kl_json = false, kl_full = false;
    auto* kl = app.add_subcommand("klpoly", "KL-type decomposition of E_t(m)");
    kl->add_option("--type", kl_type, "Cartan type (A or B)");
    kl->add_option("--n", kl_n, "rank")->required();
    kl->add_option("--monomial", kl_mono, "dominant monomial, e.g. \"Y(2,0)Y(2,2)\"")->required();
    kl->add_option("--depth", kl_depth, "spectral depth of the torus");
    kl->add_flag("--json", kl_json, "JSON output");
    kl->add_flag("--full", kl_full, "also print the canonical basis elements");

    // correspond
    std::string co_dir, co_mono, co_fund;
    int co_n = 2;
    bool co_table = false, co_json = false;
    auto* co = app.add_subcommand("correspond", "type A <-> type B dictionary");
    co->add_option("--n", co_n, "type B rank")->required();
    co->add_option("--dir", co_dir, "AtoB or BtoA")->required();
    co->add_option("--monomial", co_mono, "source-side monomial");
    co->add_option("--fundamental", co_fund, "single source-side variable Y(i,r)");
    co->add_flag("--table", co_table, "print the full fundamental dictionary");
    co->add_flag("--json", co_json, "JSON output");

    // export_quiver
    std::string eq_orient, eq_flat = "greater", eq_format = "dot";
    int eq_rank = 0, eq_xi1 = 0;
    bool eq_twisted = false;
    auto* eq = app.add_subcommand("export_quiver", "AR quiver / twisted quiver export");
    eq->add_option("--rank", eq_rank, "type A rank")->required();
    eq->add_option("--orientation", eq_orient,
                   "rank-1 chars, '>' = arrow a+1->a, '<' = arrow a->a+1 (default all '>')");
    eq->add_option("--xi1", eq_xi1, "height of node 1");
    eq->add_flag("--twisted", eq_twisted, "export the twisted (hat) quiver; rank must be 2n-2");
    eq->add_option("--flat", eq_flat, "boundary flat: greater or less");
    eq->add_option("--format", eq_format, "dot or json");

    // selftest
    std::string st_level = "fast";
    unsigned st_seed = 20260825u;
    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_option("--level", st_level, "fast or full");
    st->add_option("--seed", st_seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
        if (ic->parsed()) return cmd_invcartan(ic_type, ic_n, ic_depth, ic_json);
        if (kl->parsed()) return cmd_klpoly(kl_type, kl_n, kl_mono, kl_depth, kl_json, kl_full);
        if (co->parsed()) return cmd_correspond(co_n, co_dir, co_mono, co_fund, co_table, co_json);
        if (eq->parsed())
            return cmd_export_quiver(eq_rank, eq_orient, eq_xi1, eq_twisted, eq_flat, eq_format);
        if (st->parsed()) return cmd_selftest(st_level, st_seed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
