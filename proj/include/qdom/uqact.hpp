#ifndef QDOM_UQACT_HPP
#define QDOM_UQACT_HPP

#include "calculus.hpp"

#include <string>
#include <vector>

namespace qdom {

struct ActionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class HK { E, F, Kplus, Kminus };

// index 1..N-1; index 0 with a K kind is the central K0 of the restricted tables
struct HopfGenerator {
    HK kind;
    int index;
};

inline std::string hopf_name(const HopfGenerator& g) {
    std::string s = g.kind == HK::E ? "E" : g.kind == HK::F ? "F" : "K";
    s += std::to_string(g.index);
    if (g.kind == HK::Kminus) s += "^-1";
    return s;
}

// c * g_1 g_2 ... g_k; g_k acts first
struct ActionWord {
    Scalar coeff = Scalar(1);
    std::vector<HopfGenerator> seq;
};

struct ActionTable {
    std::string name;
    Presentation A;
    int N = 2;
    std::vector<bool> enabled;             // nodes with E, F, K (index 0 unused)
    bool has_k0 = false;
    int noncompact = 0;                    // node with E* = -KF, 0 if none
    std::vector<std::vector<NCPoly>> E, F; // [node][generator]
    std::vector<std::vector<Scalar>> K;    // [node][generator] eigenvalue; node 0 is K0

    int sign(int i) const { return i == noncompact ? -1 : 1; }
    bool has(const HopfGenerator& g) const {
        if (g.index == 0) return has_k0 && (g.kind == HK::Kplus || g.kind == HK::Kminus);
        return g.index > 0 && g.index < N && enabled[g.index];
    }
    std::vector<int> nodes() const {
        std::vector<int> r;
        for (int i = 1; i < N; ++i)
            if (enabled[i]) r.push_back(i);
        return r;
    }
    // every generator of the table, K0 included
    std::vector<HopfGenerator> generators() const {
        std::vector<HopfGenerator> r;
        for (int i : nodes())
            for (HK k : {HK::E, HK::F, HK::Kplus, HK::Kminus}) r.push_back({k, i});
        if (has_k0) r.push_back({HK::Kplus, 0}), r.push_back({HK::Kminus, 0});
        return r;
    }
    Scalar kval(int i, const Word& w) const {
        Scalar s(1);
        for (Letter l : w) s *= K[i][l];
        return s;
    }
};

// twisted Leibniz extension of a single generator
inline NCPoly act(const HopfGenerator& g, const NCPoly& f, const ActionTable& T) {
    if (!T.has(g)) throw ActionError(hopf_name(g) + " is not in the table " + T.name);
    int i = g.index;
    NCPoly r;
    for (auto& [w, c] : f) {
        if (g.kind == HK::Kplus || g.kind == HK::Kminus) {
            Scalar k = T.kval(i, w);
            r.add(w, g.kind == HK::Kplus ? c * k : c * k.inv());
            continue;
        }
        for (size_t k = 0; k < w.size(); ++k) {
            Word pre = w.substr(0, k), suf = w.substr(k + 1);
            if (g.kind == HK::E) {
                const NCPoly& v = T.E[i][w[k]];
                if (v.is_zero()) continue;
                r += NCPoly::of(pre, c * T.kval(i, pre)) * v * NCPoly::of(suf);
            } else {
                const NCPoly& v = T.F[i][w[k]];
                if (v.is_zero()) continue;
                r += NCPoly::of(pre, c * T.kval(i, suf).inv()) * v * NCPoly::of(suf);
            }
        }
    }
    return T.A.normal_form(r);
}

inline NCPoly act(const ActionWord& xi, const NCPoly& f, const ActionTable& T) {
    NCPoly r = f;
    for (size_t k = xi.seq.size(); k-- > 0;) r = act(xi.seq[k], r, T);
    return xi.coeff * r;
}

inline HopfGenerator Eg(int i) { return {HK::E, i}; }
inline HopfGenerator Fg(int i) { return {HK::F, i}; }
inline HopfGenerator Kg(int i) { return {HK::Kplus, i}; }
inline HopfGenerator Kig(int i) { return {HK::Kminus, i}; }

namespace detail {

inline ActionTable empty_table(const std::string& name, Presentation A, int N) {
    ActionTable T;
    T.name = name;
    T.A = std::move(A);
    T.N = N;
    T.enabled.assign(N, true);
    T.enabled[0] = false;
    int g = T.A.ngens();
    T.E.assign(N, std::vector<NCPoly>(g));
    T.F.assign(N, std::vector<NCPoly>(g));
    T.K.assign(N, std::vector<Scalar>(g, Scalar(1)));
    return T;
}

// values on x' from values on x: E x* = -s q^-2 (F x)*, F x* = -s q^2 (E x)*, K x* = K(x)^-1 x*
inline void fill_starred(ActionTable& T, const std::vector<std::pair<int, int>>& pairs) {
    for (int i = 0; i < T.N; ++i) {
        bool node = i > 0 && T.enabled[i];
        if (!node && !(i == 0 && T.has_k0)) continue;
        Scalar s(T.sign(i));
        for (auto [x, xs] : pairs) {
            T.K[i][xs] = T.K[i][x].inv();
            if (!node) continue;
            T.E[i][xs] = (-s * qq(-2)) * T.A.star_of(T.F[i][x]);
            T.F[i][xs] = (-s * qq(2)) * T.A.star_of(T.E[i][x]);
        }
    }
}

inline void fill_forms(ActionTable& T, const Calculus& C) {
    for (int g = 0; g < T.A.ngens(); ++g) {
        if (!C.is_diff(g)) continue;
        int x = C.diff_of[g];
        for (int i = 0; i < T.N; ++i) {
            T.K[i][g] = T.K[i][x];
            if (i == 0 || !T.enabled[i]) continue;
            T.E[i][g] = C.d(T.E[i][x]);
            T.F[i][g] = C.d(T.F[i][x]);
        }
    }
}

// z_a^al on the holomorphic generators; N = n + m, node n noncompact
inline void fill_matrix_z(ActionTable& T, int m, int n, bool node_n) {
    auto& A = T.A;
    int N = n + m;
    Scalar qh = Scalar::qhalf(1), qmh = Scalar::qhalf(-1);
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al) {
            int z = A.at(zn(a, al));
            for (int k = 1; k < N; ++k) {
                if (k == n) {
                    if (!node_n) continue;
                    bool ra = a == n, ca = al == m;
                    T.K[k][z] = ra && ca ? qq(2) : (ra != ca ? Scalar::q() : Scalar(1));
                    if (ra && ca) T.F[k][z] = NCPoly(qh);
                    NCPoly e;
                    if (!ra && !ca) e = qq(-1) * A.mul(A.g(zn(a, m)), A.g(zn(n, al)));
                    else if (ra && ca) e = A.mul(A.g(zn(n, m)), A.g(zn(n, m)));
                    else e = A.mul(A.g(zn(n, m)), A.g(zn(a, al)));
                    T.E[k][z] = -qh * e;
                    continue;
                }
                bool row = k < n;
                int idx = row ? a : al, lo = row ? k : N - k;
                if (idx == lo) {
                    T.K[k][z] = Scalar::q();
                    T.F[k][z] = A.g(row ? zn(a + 1, al) : zn(a, al + 1), qh);
                } else if (idx == lo + 1) {
                    T.K[k][z] = qq(-1);
                    T.E[k][z] = A.g(row ? zn(a - 1, al) : zn(a, al - 1), qmh);
                }
            }
        }
}

inline std::vector<std::pair<int, int>> matrix_star_pairs(const Presentation& A, int m, int n) {
    std::vector<std::pair<int, int>> r;
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al) r.push_back({A.at(zn(a, al)), A.at(zs(a, al))});
    return r;
}

}  // namespace detail

// U_q sl_2 on pol_disc, fun_disc, omega_disc (forms with p.f0 / p.forms_right)
inline ActionTable disc_action(const std::string& algebra, const CatParams& p = {}) {
    using namespace detail;
    bool forms = algebra == "omega_disc";
    if (algebra != "pol_disc" && algebra != "fun_disc" && !forms)
        throw ActionError("no U_q sl2 action on " + algebra);
    Calculus C;
    if (forms) C = calculus_disc(p.f0, p.forms_right);
    ActionTable T = empty_table("uqsl2:" + algebra, forms ? C.forms : catalog(algebra, p), 2);
    T.noncompact = 1;
    auto& A = T.A;
    Scalar qh = Scalar::qhalf(1);
    int z = A.at("z"), zs_ = A.at("z'");
    T.E[1][z] = A.g("z", -qh) * A.g("z");
    T.F[1][z] = NCPoly(qh);
    T.K[1][z] = qq(2);
    fill_starred(T, {{z, zs_}});
    int f0 = A.index("f0");
    if (f0 >= 0) {
        T.E[1][f0] = (-qh / (Scalar(1) - qq(2))) * A.mul(A.g("z"), A.g("f0"));
        T.F[1][f0] = (-qh / (qq(-2) - Scalar(1))) * A.mul(A.g("f0"), A.g("z'"));
    }
    if (forms) fill_forms(T, C);
    return T;
}

// U_q sl_N on cmat, polmat, fun_mat (N = m + n, node n noncompact)
inline ActionTable matrix_action(const std::string& algebra, const CatParams& p) {
    using namespace detail;
    if (algebra != "cmat" && algebra != "polmat" && algebra != "fun_mat")
        throw ActionError("no U_q sl_N action on " + algebra);
    int m = p.m, n = p.n;
    ActionTable T = empty_table("uqsl" + std::to_string(m + n) + ":" + algebra, catalog(algebra, p), m + n);
    T.noncompact = n;
    fill_matrix_z(T, m, n, true);
    if (algebra != "cmat") fill_starred(T, matrix_star_pairs(T.A, m, n));
    int f0 = T.A.index("f0");
    if (f0 >= 0) {
        auto& A = T.A;
        Scalar qh = Scalar::qhalf(1);
        T.E[n][f0] = (-qh / (Scalar(1) - qq(2))) * A.mul(A.g(zn(n, m)), A.g("f0"));
        T.F[n][f0] = (-qh / (qq(-2) - Scalar(1))) * A.mul(A.g("f0"), A.g(zs(n, m)));
    }
    return T;
}

// U_q s(gl_n + gl_m): compact nodes k != n plus K0 z = q^{n+m} z
inline ActionTable restricted_action(const std::string& algebra, const CatParams& p) {
    using namespace detail;
    if (algebra != "cmat" && algebra != "polmat" && algebra != "pmn" && algebra != "fun_mat")
        throw ActionError("no restricted action on " + algebra);
    int m = p.m, n = p.n;
    ActionTable T = empty_table("fock:" + algebra, catalog(algebra, p), m + n);
    T.enabled[n] = false;
    T.has_k0 = true;
    fill_matrix_z(T, m, n, false);
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al) T.K[0][T.A.at(zn(a, al))] = qq(n + m);
    if (algebra != "cmat") fill_starred(T, matrix_star_pairs(T.A, m, n));
    return T;
}

// names: pol_disc, fun_disc, omega_disc, cmat, polmat, fun_mat, fock:<algebra>
inline ActionTable action_table(const std::string& name, const CatParams& p = {}) {
    if (name.rfind("fock:", 0) == 0) return restricted_action(name.substr(5), p);
    if (name == "pol_disc" || name == "fun_disc" || name == "omega_disc") return disc_action(name, p);
    return matrix_action(name, p);
}

namespace detail {
inline std::vector<NCPoly> monomials(const Presentation& A, int d) {
    std::vector<NCPoly> r;
    for (auto& w : A.normal_words_upto(d)) r.push_back(NCPoly::of(w));
    return r;
}
inline int cartan(int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); }

// runs f over the monomials; stops at the first failure and records it
template <class Fn>
void check_all(Report& rep, const std::string& id, const Presentation& A, const std::vector<NCPoly>& ms, Fn fn) {
    for (auto& f : ms) {
        NCPoly diff = fn(f);
        if (!diff.is_zero()) {
            rep.add(id, false, "on " + A.render(f) + ": residual " + A.render(diff));
            return;
        }
    }
    rep.add(id, true);
}
}  // namespace detail

inline Report check_dj_relations(const ActionTable& T, int d) {
    using namespace detail;
    Report rep("dj:" + T.name);
    auto ms = monomials(T.A, d);
    auto ap = [&](std::initializer_list<HopfGenerator> gs, const NCPoly& f) {
        return act(ActionWord{Scalar(1), std::vector<HopfGenerator>(gs)}, f, T);
    };
    std::string ds = " d<=" + std::to_string(d);
    auto nodes = T.nodes();
    std::vector<int> ks = nodes;
    if (T.has_k0) ks.push_back(0);
    for (int i : ks) {
        check_all(rep, "K" + std::to_string(i) + "K" + std::to_string(i) + "^-1=1" + ds, T.A, ms,
                  [&](const NCPoly& f) { return ap({Kg(i), Kig(i)}, f) - f; });
        for (int j : nodes) {
            int a = i == 0 ? 0 : cartan(i, j);
            std::string s = std::to_string(i) + "," + std::to_string(j);
            check_all(rep, "KEK^-1 " + s + ds, T.A, ms,
                      [&](const NCPoly& f) { return ap({Kg(i), Eg(j), Kig(i)}, f) - qq(a) * ap({Eg(j)}, f); });
            check_all(rep, "KFK^-1 " + s + ds, T.A, ms,
                      [&](const NCPoly& f) { return ap({Kg(i), Fg(j), Kig(i)}, f) - qq(-a) * ap({Fg(j)}, f); });
        }
    }
    Scalar br = Scalar::q() + qq(-1), qd = qdiff().inv();
    for (int i : nodes)
        for (int j : nodes) {
            std::string s = std::to_string(i) + "," + std::to_string(j);
            check_all(rep, "EF-FE " + s + ds, T.A, ms, [&](const NCPoly& f) {
                NCPoly l = ap({Eg(i), Fg(j)}, f) - ap({Fg(j), Eg(i)}, f);
                if (i == j) l -= qd * (ap({Kg(i)}, f) - ap({Kig(i)}, f));
                return l;
            });
            if (i >= j) continue;
            if (j - i == 1) {
                for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                    std::string t = std::to_string(x) + "," + std::to_string(y);
                    check_all(rep, "Serre E " + t + ds, T.A, ms, [&](const NCPoly& f) {
                        return ap({Eg(x), Eg(x), Eg(y)}, f) - br * ap({Eg(x), Eg(y), Eg(x)}, f) +
                               ap({Eg(y), Eg(x), Eg(x)}, f);
                    });
                    check_all(rep, "Serre F " + t + ds, T.A, ms, [&](const NCPoly& f) {
                        return ap({Fg(x), Fg(x), Fg(y)}, f) - br * ap({Fg(x), Fg(y), Fg(x)}, f) +
                               ap({Fg(y), Fg(x), Fg(x)}, f);
                    });
                }
            } else {
                check_all(rep, "EE commute " + s + ds, T.A, ms,
                          [&](const NCPoly& f) { return ap({Eg(i), Eg(j)}, f) - ap({Eg(j), Eg(i)}, f); });
                check_all(rep, "FF commute " + s + ds, T.A, ms,
                          [&](const NCPoly& f) { return ap({Fg(i), Fg(j)}, f) - ap({Fg(j), Fg(i)}, f); });
            }
        }
    return rep;
}

inline Report check_module_algebra(const ActionTable& T, int d) {
    Report rep("module-algebra:" + T.name);
    const auto& A = T.A;
    std::vector<std::vector<Word>> byl(d + 1);
    for (int k = 0; k <= d; ++k) byl[k] = A.normal_words(k);
    for (auto& g : T.generators()) {
        std::string id = hopf_name(g);
        Scalar eps = (g.kind == HK::E || g.kind == HK::F) ? Scalar(0) : Scalar(1);
        NCPoly u = act(g, NCPoly(1), T);
        rep.add(id + "(1)=counit", u == NCPoly(eps), u == NCPoly(eps) ? "" : A.render(u));
        std::string bad;
        for (int lf = 0; lf <= d && bad.empty(); ++lf)
            for (int lg = 0; lf + lg <= d && bad.empty(); ++lg)
                for (auto& wf : byl[lf]) {
                    if (!bad.empty()) break;
                    NCPoly f = NCPoly::of(wf), Ef = act(g, f, T);
                    for (auto& wg : byl[lg]) {
                        NCPoly h = NCPoly::of(wg);
                        NCPoly lhs = act(g, A.mul(f, h), T), rhs;
                        int i = g.index;
                        if (g.kind == HK::E) rhs = Ef * h + (T.kval(i, wf) * f) * act(g, h, T);
                        else if (g.kind == HK::F) rhs = Ef * act(Kig(i), h, T) + f * act(g, h, T);
                        else rhs = Ef * act(g, h, T);
                        NCPoly diff = lhs - A.normal_form(rhs);
                        if (!diff.is_zero()) {
                            bad = A.word_str(wf) + " | " + A.word_str(wg) + ": " + A.render(diff);
                            break;
                        }
                    }
                }
        rep.add(id + "(fg) coproduct d<=" + std::to_string(d), bad.empty(), bad);
    }
    // every normal monomial is a weight vector
    std::string bad;
    for (auto& f : detail::monomials(A, d))
        for (auto& g : T.generators())
            if (g.kind == HK::Kplus) {
                NCPoly k = act(g, f, T);
                if (k.size() != 1 || k.begin()->first != f.begin()->first) bad = A.render(f);
            }
    rep.add("weight vectors d<=" + std::to_string(d), bad.empty(), bad);
    return rep;
}

// (xi f)* = (S(xi))* f*, with (S(E))* = -s K F K^-1, (S(F))* = -s K E K^-1, (S(K))* = K^-1
inline Report check_involution_compat(const ActionTable& T, int d) {
    Report rep("involution:" + T.name);
    if (!T.A.has_star()) {
        rep.add("involution defined", false, T.A.name + " has no involution");
        return rep;
    }
    auto ms = detail::monomials(T.A, d);
    for (auto& g : T.generators()) {
        int i = g.index;
        ActionWord rhs;
        if (g.kind == HK::E) rhs = {Scalar(-T.sign(i)), {Kg(i), Fg(i), Kig(i)}};
        else if (g.kind == HK::F) rhs = {Scalar(-T.sign(i)), {Kg(i), Eg(i), Kig(i)}};
        else rhs = {Scalar(1), {{g.kind == HK::Kplus ? HK::Kminus : HK::Kplus, i}}};
        detail::check_all(rep, hopf_name(g) + " d<=" + std::to_string(d), T.A, ms, [&](const NCPoly& f) {
            return T.A.star_of(act(g, f, T)) - act(rhs, T.A.star_of(f), T);
        });
    }
    return rep;
}

// Conjugation of operators on the module: ad uses S (xi(T) = sum xi' T S(xi'')),
// ad' uses S^-1 (sum xi'' T S^-1(xi')).
enum class AdConvention { S, Sinv };

inline Op conj(const HopfGenerator& g, Op T, const ActionTable& tab, AdConvention c = AdConvention::S) {
    auto G = [&tab](HopfGenerator h) -> Op { return [&tab, h](const NCPoly& f) { return act(h, f, tab); }; };
    int i = g.index;
    Op E = G(Eg(i)), F = G(Fg(i)), K = G(Kg(i)), Ki = G(Kig(i));
    switch (g.kind) {
    case HK::Kplus: return compose(K, compose(T, Ki));
    case HK::Kminus: return compose(Ki, compose(T, K));
    case HK::E:
        if (c == AdConvention::S)
            return op_sum({{Scalar(1), compose(E, T)}, {Scalar(-1), compose(K, compose(T, compose(Ki, E)))}});
        return op_sum({{Scalar(1), compose(E, compose(T, Ki))}, {Scalar(-1), compose(T, compose(E, Ki))}});
    case HK::F:
        if (c == AdConvention::S)
            return op_sum({{Scalar(1), compose(F, compose(T, K))}, {Scalar(-1), compose(T, compose(F, K))}});
        return op_sum({{Scalar(1), compose(F, T)}, {Scalar(-1), compose(Ki, compose(T, compose(K, F)))}});
    }
    return T;
}

// Hidden symmetry on C[Mat_{m,n}]_q: conjugation of the partial derivatives and of
// the multiplication operators against the explicit formulas, plus the commutation
// relations of the differential-operator algebra, on monomials of degree <= d.
inline Report hidden_symmetry_check(int m, int n, int d, AdConvention conv = AdConvention::S) {
    using namespace detail;
    CatParams p;
    p.m = m;
    p.n = n;
    Report rep(std::string("hidden-symmetry") + (conv == AdConvention::S ? "[ad_S]" : "[ad_Sinv]") + ":" +
               std::to_string(m) + "x" + std::to_string(n));
    ActionTable tab = matrix_action("cmat", p);
    const Presentation& A = tab.A;
    Calculus C = calculus_mat(m, n, false);
    int N = m + n;
    auto ms = monomials(A, d);
    std::string ds = " d<=" + std::to_string(d);

    auto Z = [&](int a, int al) { return left_mult(A, A.g(zn(a, al))); };
    auto D = [&](int a, int al) { return partial_op(A, C, zn(a, al)); };

    // D(p^-) relations, operator realization
    Presentation Dm = catalog("dmat", p);
    std::string bad;
    for (auto& r : Dm.relations) {
        if (!bad.empty()) break;
        for (auto& f : ms) {
            NCPoly acc;
            for (auto& [w, c] : r) {
                NCPoly v = f;
                for (size_t k = w.size(); k-- > 0;) {
                    const std::string& nm = Dm.gens[w[k]].name;
                    int a = nm[2] - '0', al = nm[4] - '0';
                    v = nm[0] == 'z' ? Z(a, al)(v) : D(a, al)(v);
                }
                acc += c * v;
            }
            if (!acc.is_zero()) {
                bad = Dm.render(r) + " on " + A.render(f);
                break;
            }
        }
    }
    rep.add("differential operator relations" + ds, bad.empty(), bad);

    if (conv == AdConvention::Sinv) {
        // conjugation must itself satisfy the defining relations
        for (int a = 1; a <= n; ++a)
            for (int al = 1; al <= m; ++al)
                for (int i = 1; i < N; ++i) {
                    Op T = D(a, al);
                    auto c = [&](HopfGenerator g, Op t) { return conj(g, t, tab, conv); };
                    Op lhs = op_sum({{Scalar(1), c(Eg(i), c(Fg(i), T))},
                                     {Scalar(-1), c(Fg(i), c(Eg(i), T))},
                                     {-qdiff().inv(), c(Kg(i), T)},
                                     {qdiff().inv(), c(Kig(i), T)}});
                    check_all(rep, "ad'(EF-FE) on d/dz" + mname("", a, al) + " node " + std::to_string(i) + ds, A,
                              ms, lhs);
                }
        return rep;
    }

    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al) {
            std::string tag = mname("", a, al);
            for (int i = 1; i < N; ++i) {
                Op e, f;
                Scalar kz = tab.K[i][A.at(zn(a, al))];
                // expected images of d/dz_a^al
                if (i == n) {
                    f = op_zero();
                    if (a == n && al == m) {
                        std::vector<std::pair<Scalar, Op>> t;
                        for (int b = 1; b <= n; ++b) t.push_back({Scalar(1), compose(Z(b, m), D(b, m))});
                        for (int be = 1; be <= m; ++be) t.push_back({Scalar(1), compose(Z(n, be), D(n, be))});
                        for (int b = 1; b <= n; ++b)
                            for (int be = 1; be <= m; ++be)
                                t.push_back({qq(-2) - Scalar(1), compose(Z(b, be), D(b, be))});
                        e = op_sum(t);
                    } else if (a != n && al == m) {
                        std::vector<std::pair<Scalar, Op>> t;
                        for (int be = 1; be <= m; ++be) t.push_back({Scalar(1), compose(Z(n, be), D(a, be))});
                        e = op_sum(t);
                    } else if (a == n && al != m) {
                        std::vector<std::pair<Scalar, Op>> t;
                        for (int b = 1; b <= n; ++b) t.push_back({Scalar(1), compose(Z(b, m), D(b, al))});
                        e = op_sum(t);
                    } else {
                        e = op_zero();
                    }
                    e = op_sum({{Scalar::qhalf(-3), e}});
                } else {
                    bool row = i < n;
                    int idx = row ? a : al, lo = row ? i : N - i;
                    e = f = op_zero();
                    if (idx == lo + 1) f = op_sum({{-Scalar::qhalf(3), row ? D(a - 1, al) : D(a, al - 1)}});
                    if (idx == lo) e = op_sum({{-Scalar::qhalf(-3), row ? D(a + 1, al) : D(a, al + 1)}});
                }
                std::string nd = std::to_string(i);
                check_all(rep, "E" + nd + "(d/dz" + tag + ")" + ds, A, ms, op_sum({{Scalar(1), conj(Eg(i), D(a, al), tab)},
                                                                                 {Scalar(-1), e}}));
                check_all(rep, "F" + nd + "(d/dz" + tag + ")" + ds, A, ms, op_sum({{Scalar(1), conj(Fg(i), D(a, al), tab)},
                                                                                 {Scalar(-1), f}}));
                check_all(rep, "K" + nd + "(d/dz" + tag + ")" + ds, A, ms,
                          op_sum({{Scalar(1), conj(Kg(i), D(a, al), tab)}, {-kz.inv(), D(a, al)}}));
                // multiplication operators transform as the generators themselves
                NCPoly zv = A.g(zn(a, al));
                check_all(rep, "E" + nd + "(z" + tag + ")" + ds, A, ms,
                          op_sum({{Scalar(1), conj(Eg(i), Z(a, al), tab)}, {Scalar(-1), left_mult(A, act(Eg(i), zv, tab))}}));
                check_all(rep, "F" + nd + "(z" + tag + ")" + ds, A, ms,
                          op_sum({{Scalar(1), conj(Fg(i), Z(a, al), tab)}, {Scalar(-1), left_mult(A, act(Fg(i), zv, tab))}}));
            }
        }
    return rep;
}

}  // namespace qdom

#endif
