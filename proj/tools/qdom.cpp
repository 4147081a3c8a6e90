// qdom command line: computations in the catalog algebras and named verification suites.
// JSON on stdout by default, --pretty for text. Exit 0 ok, 1 verification failure, 2 usage error.

#include "qdom/parse.hpp"
#include "qdom/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace qdom;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json coeff_json(const Scalar& c) {
    return {{"num", detail::render_terms(c.num(), 0, Int(1))}, {"den", detail::render_terms(c.den(), 0, Int(1))}};
}

std::vector<std::pair<Word, Scalar>> sorted_terms(const Presentation& A, const NCPoly& p) {
    std::vector<std::pair<Word, Scalar>> v(p.begin(), p.end());
    std::sort(v.begin(), v.end(), [&](auto& x, auto& y) { return A.word_less(y.first, x.first); });
    return v;
}

json word_json(const Presentation& A, const Word& w) {
    json r = json::array();
    for (auto l : w) r.push_back(A.gens[l].name);
    return r;
}

json poly_json(const Presentation& A, const NCPoly& p) {
    json m = json::array();
    for (auto& [w, c] : sorted_terms(A, p)) m.push_back({{"word", word_json(A, w)}, {"coeff", coeff_json(c)}});
    return {{"monomials", m}, {"text", A.render(p)}};
}

json report_json(const Report& r) {
    json c = json::array();
    for (auto& k : r.checks) {
        json e{{"id", k.id}, {"status", k.pass ? "pass" : "fail"}};
        if (!k.witness.empty()) e["witness"] = k.witness;
        c.push_back(e);
    }
    return {{"suite", r.suite}, {"status", r.ok() ? "pass" : "fail"}, {"checks", c}};
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> r;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            r.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw UsageError("bad integer list " + s);
        } catch (std::logic_error&) {
            throw UsageError("bad integer list " + s);
        }
    }
    return r;
}

// "1..3" or "1,2,3"
std::vector<long> range_list(const std::string& s) {
    std::vector<long> r;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        auto a = int_list(s.substr(0, dots)), b = int_list(s.substr(dots + 2));
        if (a.size() != 1 || b.size() != 1) throw UsageError("bad range " + s);
        for (long k = a[0]; k <= b[0]; ++k) r.push_back(k);
    } else {
        for (int k : int_list(s)) r.push_back(k);
    }
    return r;
}

HopfGenerator hopf_gen(const std::string& s) {
    static const std::regex re("([EFK])([0-9]+)(\\^-1|i)?");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("generator must look like E1, F2, K1, K1^-1");
    HK k = m[1] == "E" ? HK::E : m[1] == "F" ? HK::F : HK::Kplus;
    if (m[3].matched) {
        if (k != HK::Kplus) throw UsageError("only K has an inverse");
        k = HK::Kminus;
    }
    return {k, std::stoi(m[2])};
}

Scalar parse_scalar(const std::string& s) {
    NCPoly p = parse_expr(s, catalog("pol_disc"));
    if (p.max_len() != 0) throw UsageError("expected a scalar: " + s);
    return p.constant();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qdom: quantum bounded symmetric domains, symbolic"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false, f0 = false, forms_right = false;
    std::string out_file;
    SuiteOptions opt;
    app.add_flag("--pretty", pretty, "human readable output");
    app.add_flag("--json", [&](int64_t) { pretty = false; }, "JSON output (default)");
    app.add_option("--out", out_file, "write output to a file");
    app.add_option("--q0", opt.q0, "numeric value of q");
    app.add_option("--n", opt.n, "rows / grid size");
    app.add_option("--m", opt.m, "columns / second size");
    app.add_option("--deg", opt.deg, "degree bound");
    app.add_option("--order", opt.order, "truncation order");
    app.add_flag("--f0", f0, "adjoin f0");
    app.add_flag("--forms-right", forms_right, "differentials on the right");

    std::string alg, e1, e2, gen, measure = "mu", suite, sub, mono, ct = "coefficient", rows, cols, uexpr = "q^4";
    std::vector<std::string> args;
    bool closed = false, literal = false;
    std::string ls;

    auto* nf = app.add_subcommand("nf", "normal form");
    nf->add_option("algebra", alg)->required();
    nf->add_option("expr", e1)->required();
    auto* mul = app.add_subcommand("mul", "product of two expressions");
    mul->add_option("algebra", alg)->required();
    mul->add_option("a", e1)->required();
    mul->add_option("b", e2)->required();
    auto* act_c = app.add_subcommand("act", "apply a U_q generator");
    act_c->add_option("table", alg, "pol_disc, fun_disc, omega_disc, cmat, polmat, fun_mat, fock:<algebra>")->required();
    act_c->add_option("generator", gen)->required();
    act_c->add_option("expr", e1)->required();
    auto* integ = app.add_subcommand("integrate", "invariant or Lebesgue integral on the disc");
    integ->add_option("algebra", alg)->required();
    integ->add_option("expr", e1)->required();
    integ->add_option("--measure", measure, "mu or nu");
    auto* star_c = app.add_subcommand("star", "Berezin star product in pol_disc");
    star_c->add_option("a", e1)->required();
    star_c->add_option("b", e2)->required();
    star_c->add_flag("--closed", closed, "use the closed formula");
    star_c->add_flag("--literal", literal, "deformed relation with (1-q^2)t/(1-q^2 t)");
    auto* fock = app.add_subcommand("fock", "Fock inner product (P, Q) in C[Mat_mn]_q");
    fock->add_option("P", e1)->required();
    fock->add_option("Q", e2)->required();
    auto* minor = app.add_subcommand("minor", "quantum minor");
    minor->add_option("rows", rows)->required();
    minor->add_option("cols", cols)->required();
    auto* berg = app.add_subcommand("bergman", "Bergman kernel series");
    berg->add_option("--u", uexpr, "value of u");
    auto* su22 = app.add_subcommand("su22", "SU(2,2) computations");
    su22->add_option("what", sub, "wave | bq | ladder-dims | schur-check | y-eigs")->required();
    su22->add_option("args", args);
    auto* pen = app.add_subcommand("penrose", "quantum Penrose transform of u1^j1 u2^j2 u3^-j3 u4^-j4");
    pen->add_option("exponents", mono, "j1,j2,j3,j4")->required();
    pen->add_option("--ct", ct, "coefficient | left");
    auto* qs = app.add_subcommand("qspecial", "q-special functions");
    qs->add_option("what", sub, "poch | binom | gamma")->required();
    qs->add_option("args", args);
    auto* spect = app.add_subcommand("spectrum", "spectral bounds of dbar* dbar");
    auto* four = app.add_subcommand("fourier-check", "Fourier round trip on f0");
    auto* cat = app.add_subcommand("catalog", "list algebras or show one");
    cat->add_option("algebra", alg);
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name, all, or list")->required();
    ver->add_option("--l", ls, "l values for disc-eigen, e.g. 1..3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CatParams cp;
    cp.m = opt.m < 0 ? 2 : opt.m;
    cp.n = opt.n < 0 ? 2 : opt.n;
    cp.f0 = f0;
    cp.forms_right = forms_right;

    auto t0 = std::chrono::steady_clock::now();
    json doc;
    std::string text;
    int code = 0;
    try {
        json result, report;
        std::string algebra;
        auto poly_out = [&](const Presentation& A, const NCPoly& p) {
            algebra = A.name;
            result = poly_json(A, p);
            text = A.render(p);
        };
        if (*nf) {
            Presentation A = catalog(alg, cp);
            poly_out(A, A.normal_form(parse_expr(e1, A)));
        } else if (*mul) {
            Presentation A = catalog(alg, cp);
            poly_out(A, A.mul(parse_expr(e1, A), parse_expr(e2, A)));
        } else if (*act_c) {
            ActionTable T = action_table(alg, cp);
            HopfGenerator g = hopf_gen(gen);
            if (!T.has(g)) throw UsageError(hopf_name(g) + " is not in " + T.name);
            poly_out(T.A, act(g, T.A.normal_form(parse_expr(e1, T.A)), T));
            algebra = T.name;
        } else if (*integ) {
            Presentation A = catalog(alg, cp);
            DiscElement d = to_psi(A, A.normal_form(parse_expr(e1, A)));
            if (measure != "mu" && measure != "nu") throw UsageError("--measure is mu or nu");
            Scalar v = measure == "mu" ? lebesgue(d) : inv_integral(d);
            algebra = A.name;
            result = {{"measure", measure}, {"value", coeff_json(v)}, {"text", v.str()}};
            text = v.str();
        } else if (*star_c) {
            const Presentation& A = pol_disc_ref();
            int N = opt.get_order(3);
            NCPoly a = parse_expr(e1, A), b = parse_expr(e2, A);
            TPoly r = closed ? star_closed(a, b, N) : star(a, b, N, literal ? TRule::Literal : TRule::Standard);
            algebra = A.name;
            json orders = json::array();
            for (int k = 0; k <= r.N; ++k) {
                json o = poly_json(A, r.c[k]);
                o["t"] = k;
                orders.push_back(o);
                text += "t^" + std::to_string(k) + ": " + A.render(r.c[k]) + "\n";
            }
            result = {{"order", N}, {"method", closed ? "closed" : literal ? "literal" : "standard"}, {"terms", orders}};
        } else if (*fock) {
            int m = cp.m, n = cp.n;
            auto& A = mat_calc(m, n).A;
            NCPoly P = parse_expr(e1, A), Q = parse_expr(e2, A);
            Scalar v = fock_vacuum(P, Q, m, n), r = fock_recursive(P, Q, m, n);
            algebra = A.name;
            result = {{"value", coeff_json(v)}, {"text", v.str()}, {"recursive_agrees", v == r}};
            text = v.str() + (v == r ? "" : "  (recursive construction disagrees: " + r.str() + ")");
            if (v != r) code = 1;
        } else if (*minor) {
            Presentation A = catalog("cmat", cp);
            poly_out(A, qminor(int_list(rows), int_list(cols), A, cp.m, cp.n));
        } else if (*berg) {
            int m = opt.get_m(1), n = opt.get_n(1), D = opt.get_deg(4);
            Presentation A = catalog("cmat", mat_params(m, n));
            Kernel K = bergman_kernel(m, n, parse_scalar(uexpr), D);
            algebra = A.name;
            json terms = json::array();
            for (auto& [ab, c] : K.t)
                terms.push_back({{"left", word_json(A, ab.first)}, {"right_star", word_json(A, ab.second)},
                                 {"coeff", coeff_json(c)}});
            result = {{"degree", D}, {"terms", terms}};
            text = render_kernel(A, K);
        } else if (*su22) {
            auto need = [&](size_t k) {
                if (args.size() != k) throw UsageError("su22 " + sub + " takes " + std::to_string(k) + " argument(s)");
            };
            auto num = [&](size_t i) {
                auto v = int_list(args[i]);
                if (v.size() != 1) throw UsageError("expected an integer");
                return v[0];
            };
            if (sub == "wave") {
                need(1);
                auto& A = mat2_algebra();
                poly_out(A, A.normal_form(wave_op(A.normal_form(parse_expr(args[0], A)))));
            } else if (sub == "bq") {
                need(1);
                Scalar v = bq(num(0));
                result = {{"value", coeff_json(v)}, {"text", v.str()}};
                text = v.str();
            } else if (sub == "ladder-dims") {
                need(1);
                auto d = ladder_dims(num(0));
                result = {{"degree", num(0)}, {"total", d.total}, {"kernel", d.kernel}};
                text = "total " + std::to_string(d.total) + ", kernel " + std::to_string(d.kernel);
            } else if (sub == "schur-check") {
                need(1);
                Report r = su22_schur_check(num(0));
                result = report_json(r);
                if (!r.ok()) code = 1;
                text = r.ok() ? "pass" : "fail: " + r.first_failure();
            } else if (sub == "y-eigs") {
                need(2);
                auto y = y_eigs(num(0), num(1));
                result = {{"y1", coeff_json(y.y1)}, {"y2", coeff_json(y.y2)}, {"eigenvector", y.eigenvector}};
                text = "y1 = " + y.y1.str() + ", y2 = " + y.y2.str();
            } else {
                throw UsageError("unknown su22 computation " + sub);
            }
            if (algebra.empty()) algebra = "pol_mat2";
        } else if (*pen) {
            auto j = int_list(mono);
            if (j.size() != 4) throw UsageError("exponents: j1,j2,j3,j4");
            if (ct != "coefficient" && ct != "left") throw UsageError("--ct is coefficient or left");
            UMono f{j[0], j[1], j[2], j[3]};
            int M = opt.get_order(4);
            auto P = penrose_transform(f, M, ct == "left" ? CtMode::LeftMultiply : CtMode::Coefficient);
            auto& A = mat24_ref();
            algebra = A.name;
            json orders = json::array();
            for (int k = 0; k <= M; ++k) {
                json o = poly_json(A, P[k]);
                o["order"] = k;
                orders.push_back(o);
            }
            result = {{"input", f.str()}, {"order", M}, {"terms", orders}};
            text = render_series(P);
        } else if (*qs) {
            Scalar v;
            auto need = [&](size_t k) {
                if (args.size() != k) throw UsageError("qspecial " + sub + " takes " + std::to_string(k) + " arguments");
            };
            if (sub == "poch") {
                need(3);
                auto n = int_list(args[2]);
                if (n.size() != 1) throw UsageError("expected an integer n");
                v = qpoch(parse_scalar(args[0]), parse_scalar(args[1]), n[0]);
            } else if (sub == "binom") {
                need(2);
                v = gauss_binom(int_list(args[0]).at(0), int_list(args[1]).at(0));
            } else if (sub == "gamma") {
                need(1);
                v = qgamma(int_list(args[0]).at(0));
            } else {
                throw UsageError("unknown qspecial function " + sub);
            }
            result = {{"value", coeff_json(v)}, {"text", v.str()}};
            text = v.str();
        } else if (*spect) {
            auto b = spectral_bounds(opt.get_n(200), opt.q0);
            algebra = "pol_disc";
            result = {{"N", opt.get_n(200)}, {"q0", opt.q0},     {"min", b.min_eig},
                      {"max", b.max_eig},    {"lower", b.lower}, {"upper", b.upper}};
            text = "[" + detail::fmt(b.min_eig) + ", " + detail::fmt(b.max_eig) + "] within [" + detail::fmt(b.lower) +
                   ", " + detail::fmt(b.upper) + "]";
        } else if (*four) {
            auto R = fourier_check(f0_element(), opt.q0, opt.get_n(60), opt.get_order(400), 2);
            algebra = "fun_disc";
            json h = json::array();
            for (auto& [p, r] : R.history) {
                h.push_back({{"points", p}, {"residual", r}});
                text += std::to_string(p) + " points: " + detail::fmt(r) + "\n";
            }
            result = {{"residual", R.residual}, {"decreasing", R.decreasing}, {"history", h}};
            if (!(R.residual < 1e-3 && R.decreasing)) code = 1;
        } else if (*cat) {
            if (alg.empty()) {
                result = {{"algebras", catalog_names()}};
                for (auto& n : catalog_names()) text += n + "\n";
            } else {
                Presentation A = catalog(alg, cp);
                algebra = A.name;
                json g = json::array(), rules = json::array();
                for (auto& x : A.gens) g.push_back(x.name);
                text = "generators:";
                for (auto& x : A.gens) text += " " + x.name;
                text += "\nrules:\n";
                for (auto& r : A.rules) {
                    rules.push_back({{"lhs", word_json(A, r.lhs)}, {"rhs", poly_json(A, r.rhs)}});
                    text += "  " + A.word_str(r.lhs) + " -> " + A.render(r.rhs) + "\n";
                }
                result = {{"generators", g}, {"involution", A.has_star()}, {"rules", rules}};
            }
        } else if (*ver) {
            if (!ls.empty()) opt.ls = range_list(ls);
            if (suite == "list") {
                result = {{"suites", list_suites()}};
                for (auto& n : list_suites()) text += n + "\n";
            } else {
                std::vector<std::string> names = suite == "all" ? list_suites() : std::vector<std::string>{suite};
                auto known = list_suites();
                if (std::find(known.begin(), known.end(), suite) == known.end() && suite != "all")
                    throw UsageError("unknown suite " + suite);
                json reps = json::array();
                for (auto& n : names) {
                    Report r = run_suite(n, opt);
                    reps.push_back(report_json(r));
                    if (!r.ok()) code = 1;
                    text += (r.ok() ? "PASS " : "FAIL ") + n + "  (" + std::to_string(r.checks.size() - r.failures()) +
                            "/" + std::to_string(r.checks.size()) + ")\n";
                    for (auto& c : r.checks)
                        text += std::string(c.pass ? "    ok    " : "    FAIL  ") + c.id +
                                (c.witness.empty() ? "" : "  [" + c.witness + "]") + "\n";
                }
                report = suite == "all" ? json{{"suites", reps}} : reps[0];
            }
        }
        doc = {{"status", code == 0 ? "ok" : "fail"}, {"algebra", algebra}};
        if (report.is_null()) doc["result"] = result;
        else doc["report"] = report;
    } catch (const UsageError& e) {
        doc = {{"status", "error"}, {"error", e.what()}};
        text = std::string("error: ") + e.what();
        code = 2;
    } catch (const ParseError& e) {
        doc = {{"status", "error"}, {"error", e.what()}};
        text = std::string("error: ") + e.what();
        code = 2;
    } catch (const std::exception& e) {
        doc = {{"status", "error"}, {"error", e.what()}};
        text = std::string("error: ") + e.what();
        code = 2;
    }
    doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::string output = pretty ? text + (text.empty() || text.back() == '\n' ? "" : "\n") : doc.dump(2) + "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            std::cerr << "cannot write " << out_file << "\n";
            return 2;
        }
        f << output;
    } else {
        (code == 2 && pretty ? std::cerr : std::cout) << output;
    }
    return code;
}
