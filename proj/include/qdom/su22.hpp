#ifndef QDOM_SU22_HPP
#define QDOM_SU22_HPP

#include "linalg.hpp"
#include "qmatrix.hpp"
#include "qspecial.hpp"
#include "ratfunc.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qdom {

struct Su22Error : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {
struct Mat2Calc {
    Calculus C;  // omega_mat2, dx on the right: df = sum (df/dx) dx
    Op da, db, dg, dd;
    Mat2Calc() : C(calculus_mat2()) {
        da = partial_op(C.forms, C, "alpha");
        db = partial_op(C.forms, C, "beta");
        dg = partial_op(C.forms, C, "gamma");
        dd = partial_op(C.forms, C, "delta");
    }
};
inline const Mat2Calc& mat2() {
    static const Mat2Calc m;
    return m;
}
inline const std::map<std::string, std::string>& mat2_to_z() {
    static const std::map<std::string, std::string> m{
        {"alpha", "z[1,1]"}, {"beta", "z[2,1]"}, {"gamma", "z[1,2]"}, {"delta", "z[2,2]"}};
    return m;
}
inline const std::map<std::string, std::string>& z_to_mat2() {
    static const std::map<std::string, std::string> m{
        {"z[1,1]", "alpha"}, {"z[2,1]", "beta"}, {"z[1,2]", "gamma"}, {"z[2,2]", "delta"}};
    return m;
}
}  // namespace detail

// the holomorphic algebra in the alpha..delta names (inside the forms algebra)
inline const Presentation& mat2_algebra() { return detail::mat2().C.forms; }

inline NCPoly mat2_c() {
    auto& A = mat2_algebra();
    return A.normal_form(A.g("alpha") * A.g("delta") - Scalar::q() * (A.g("beta") * A.g("gamma")));
}

// d/dalpha d/ddelta - q d/dbeta d/dgamma
inline NCPoly wave_op(const NCPoly& f) {
    auto& m = detail::mat2();
    return m.da(m.dd(f)) - Scalar::q() * m.db(m.dg(f));
}

// q^-2 (1-q^2s)(1-q^{2s+2})/(1-q^2)^2
inline Scalar bq(long s) {
    if (s < 0) throw Su22Error("bq: s >= 0");
    Scalar a = Scalar(1) - Scalar::qpow(2);
    return Scalar::qpow(-2) * (Scalar(1) - Scalar::qpow(int(2 * s))) * (Scalar(1) - Scalar::qpow(int(2 * s + 2))) /
           (a * a);
}

inline Report su22_bq_check(int smax) {
    Report rep("su22-bq");
    auto& A = mat2_algebra();
    NCPoly c = mat2_c();
    for (int s = 1; s <= smax; ++s) {
        NCPoly lhs = wave_op(A.pow(c, s));
        rep.add("box c^" + std::to_string(s) + " = b_q(" + std::to_string(s) + ") c^" + std::to_string(s - 1),
                lhs == bq(s) * A.pow(c, s - 1), lhs == bq(s) * A.pow(c, s - 1) ? "" : A.render(lhs));
    }
    rep.add("b_q(1) = q^-2 + 1", bq(1) == Scalar::qpow(-2) + Scalar(1));
    rep.add("b_q(2) -> 6 as q -> 1", std::fabs(bq(2).evald(0.999999) - 6) < 1e-4);
    // derivative table agrees with the generic matrix calculus
    auto& mc = mat_calc(2, 2);
    bool same = true;
    std::vector<std::pair<std::string, std::pair<int, int>>> idx{
        {"alpha", {1, 1}}, {"beta", {2, 1}}, {"gamma", {1, 2}}, {"delta", {2, 2}}};
    auto& m = detail::mat2();
    std::vector<Op> ops{m.da, m.db, m.dg, m.dd};
    for (auto& w : A.normal_words_upto(3)) {
        bool holo = true;
        for (Letter l : w) holo = holo && !A.gens[l].odd;
        if (!holo) continue;
        NCPoly f = NCPoly::of(w), fz = rename(f, A, mc.A, detail::mat2_to_z());
        for (size_t i = 0; i < 4; ++i) {
            NCPoly a = ops[i](f), b = A.normal_form(rename(mc.partial(fz, idx[i].second.first, idx[i].second.second),
                                                             mc.A, A, detail::z_to_mat2()));
            if (a != b) same = false;
        }
    }
    rep.add("table derivatives = generic matrix derivatives d<=3", same);
    return rep;
}

// holomorphic normal words of degree d
inline std::vector<Word> mat2_words(int d) {
    auto& A = mat2_algebra();
    std::vector<Word> r;
    for (auto& w : A.normal_words(d)) {
        bool holo = true;
        for (Letter l : w) holo = holo && !A.gens[l].odd;
        if (holo) r.push_back(w);
    }
    return r;
}

struct LadderDims {
    int total = 0, kernel = 0;
};

inline LadderDims ladder_dims(int d) {
    auto src = mat2_words(d);
    LadderDims r;
    r.total = int(src.size());
    if (d < 2) {
        r.kernel = r.total;
        return r;
    }
    auto dst = mat2_words(d - 2);
    std::map<Word, int> pos;
    for (size_t i = 0; i < dst.size(); ++i) pos[dst[i]] = int(i);
    Mat<Scalar> M(dst.size(), std::vector<Scalar>(src.size()));
    for (size_t j = 0; j < src.size(); ++j)
        for (auto& [w, c] : wave_op(NCPoly::of(src[j]))) M[pos.at(w)][j] = c;
    r.kernel = r.total - rank(M);
    return r;
}

inline Report su22_ladder_check(int dmax) {
    Report rep("su22-ladder");
    for (int d = 0; d <= dmax; ++d) {
        LadderDims L = ladder_dims(d);
        rep.add("degree " + std::to_string(d) + ": dim " + std::to_string(L.total) + ", kernel " +
                    std::to_string(L.kernel),
                L.total == (d + 1) * (d + 2) * (d + 3) / 6 && L.kernel == (d + 1) * (d + 1));
    }
    // the compact-action orbit of delta^k spans the kernel
    ActionTable T = matrix_action("cmat", mat_params(2, 2));
    auto& A = mat2_algebra();
    for (int k = 1; k <= dmax; ++k) {
        std::vector<NCPoly> span{T.A.pow(T.A.g("z[2,2]"), k)};
        for (size_t i = 0; i < span.size() && span.size() < 64; ++i)
            for (auto g : {Eg(1), Fg(1), Eg(3), Fg(3)}) {
                NCPoly v = act(g, span[i], T);
                if (v.is_zero()) continue;
                // keep if independent
                std::vector<NCPoly> cand = span;
                cand.push_back(v);
                std::set<Word> ws;
                for (auto& p : cand)
                    for (auto& [w, c] : p) ws.insert(w);
                std::vector<Word> wl(ws.begin(), ws.end());
                Mat<Scalar> M(cand.size(), std::vector<Scalar>(wl.size()));
                for (size_t a = 0; a < cand.size(); ++a)
                    for (size_t b = 0; b < wl.size(); ++b) M[a][b] = cand[a].coeff(wl[b]);
                if (rank(M) == int(cand.size())) span.push_back(v);
            }
        bool killed = true;
        for (auto& p : span)
            if (!wave_op(A.normal_form(rename(p, T.A, A, detail::z_to_mat2()))).is_zero()) killed = false;
        rep.add("U_q k orbit of delta^" + std::to_string(k) + ": dim " + std::to_string(span.size()) + ", in kernel",
                killed && int(span.size()) == (k + 1) * (k + 1));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Faraut-Koranyi coefficients and the Schur identity, u formal

inline RatFunc fk_coeff(int k1, int k2) {
    if (k1 < k2 || k2 < 0) throw Su22Error("fk_coeff: k1 >= k2 >= 0");
    RatFunc u = RatFunc::var(), num(1), den(1);
    Scalar q2 = Scalar::qpow(2);
    num = RatFunc(qpoch(Scalar::qpow(4), q2, k1) * qpoch(q2, q2, k2));
    for (int j = 0; j < k1; ++j) den *= RatFunc(1) - u * RatFunc(Scalar::qpow(2 * j));
    for (int j = 0; j < k2; ++j) den *= RatFunc(1) - u * RatFunc(Scalar::qpow(2 * j - 2));
    return num / den;
}
inline Scalar fk_coeff(int k1, int k2, const Scalar& u) {
    RatFunc c = fk_coeff(k1, k2);
    Scalar d = c.den().eval(u);
    if (d.is_zero()) throw Su22Error("fk_coeff: vanishing denominator at this u");
    return c.at(u);
}

// balanced [n]_q
inline Scalar qbracket(int n) { return (Scalar::qpow(n) - Scalar::qpow(-n)) / (Scalar::q() - Scalar::qpow(-1)); }

// s_{k1 k2}(x1, x2) as exponent pairs (always coefficient 1)
inline std::vector<std::pair<int, int>> schur_terms(int k1, int k2) {
    std::vector<std::pair<int, int>> r;
    for (int j = 0; j <= k1 - k2; ++j) r.push_back({k2 + j, k2 + (k1 - k2 - j)});
    return r;
}

// s_{k1 k2} = e2^{k2} h_{k1-k2}, h_n = e1 h_{n-1} - e2 h_{n-2}; keys (a, b) for e1^a e2^b
inline std::map<std::pair<int, int>, long> schur_in_e(int k1, int k2) {
    std::vector<std::map<std::pair<int, int>, long>> h(k1 - k2 + 1);
    h[0][{0, 0}] = 1;
    for (int n = 1; n <= k1 - k2; ++n) {
        for (auto& [e, c] : h[n - 1]) h[n][{e.first + 1, e.second}] += c;
        if (n >= 2)
            for (auto& [e, c] : h[n - 2]) h[n][{e.first, e.second + 1}] -= c;
    }
    std::map<std::pair<int, int>, long> r;
    for (auto& [e, c] : h[k1 - k2])
        if (c) r[{e.first, e.second + k2}] = c;
    return r;
}

inline Report su22_schur_check(int D) {
    Report rep("su22-schur");
    using Key = std::pair<int, int>;
    // left: prod_i (u x_i;q^2)_inf/(x_i;q^2)_inf, one-variable series from
    // F(x) (1 - x) = (1 - u x) F(q^2 x)
    RatFunc u = RatFunc::var();
    std::vector<RatFunc> f(D + 1);
    f[0] = RatFunc(1);
    for (int k = 1; k <= D; ++k)
        f[k] = f[k - 1] * (RatFunc(1) - u * RatFunc(Scalar::qpow(2 * k - 2))) / RatFunc(Scalar(1) - Scalar::qpow(2 * k));
    std::map<Key, RatFunc> lhs, rhs;
    for (int a = 0; a <= D; ++a)
        for (int b = 0; a + b <= D; ++b) lhs[{a, b}] = f[a] * f[b];
    for (int k1 = 0; k1 <= D; ++k1)
        for (int k2 = 0; k2 <= k1 && k1 + k2 <= D; ++k2) {
            RatFunc c = fk_coeff(k1, k2).inv() * RatFunc(qbracket(k1 - k2 + 1) * Scalar::qpow(k1 + k2));
            for (auto& e : schur_terms(k1, k2)) rhs[e] += c;
        }
    bool ok = true;
    std::string wit;
    for (auto& [e, c] : lhs) {
        RatFunc r = rhs.count(e) ? rhs[e] : RatFunc(0);
        if (r != c && ok) {
            ok = false;
            wit = "x1^" + std::to_string(e.first) + " x2^" + std::to_string(e.second);
        }
    }
    rep.add("Schur expansion through degree " + std::to_string(D), ok, wit);
    rep.add("x1 coefficient (1-u)/(1-q^2)", lhs[{1, 0}] == (RatFunc(1) - u) / RatFunc(Scalar(1) - Scalar::qpow(2)));
    // e1, e2 form against the direct expansion at a numeric point
    bool eform = true;
    for (int k1 = 0; k1 <= D; ++k1)
        for (int k2 = 0; k2 <= k1; ++k2) {
            double x1 = 0.37, x2 = -1.21, e1 = x1 + x2, e2 = x1 * x2, a = 0, b = 0;
            for (auto& e : schur_terms(k1, k2)) a += std::pow(x1, e.first) * std::pow(x2, e.second);
            for (auto& [e, c] : schur_in_e(k1, k2)) b += double(c) * std::pow(e1, e.first) * std::pow(e2, e.second);
            if (std::fabs(a - b) > 1e-9 * (1 + std::fabs(a))) eform = false;
        }
    rep.add("Schur polynomials in e1, e2", eform);
    rep.add("c(0,0) = 1", fk_coeff(0, 0) == RatFunc(1));
    // classical limit: (2)_k1 (1)_k2 / ((lambda)_k1 (lambda-1)_k2), lambda = 5
    {
        double q0 = 0.99999;
        int lam = 5;
        Scalar uu = Scalar::qpow(2 * lam);
        bool lim = true;
        for (int k1 = 0; k1 <= 3; ++k1)
            for (int k2 = 0; k2 <= k1; ++k2) {
                double cl = 1;
                for (int j = 0; j < k1; ++j) cl *= double(2 + j) / (lam + j);
                for (int j = 0; j < k2; ++j) cl *= double(1 + j) / (lam - 1 + j);
                if (std::fabs(fk_coeff(k1, k2, uu).evald(q0) - cl) > 1e-3) lim = false;
            }
        rep.add("fk_coeff -> classical values as q -> 1", lim);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// y1 = sum z z^*, y2 = c c^* in Pol(Mat_2)_q and their action on the vacuum module

namespace detail {
inline const Presentation& polmat2() {
    static const Presentation A = catalog("pol_mat2");
    return A;
}
inline NCPoly y1() {
    auto& A = polmat2();
    NCPoly r;
    for (auto x : {"alpha", "beta", "gamma", "delta"}) r += A.mul(A.g(x), A.g(std::string(x) + "'"));
    return r;
}
inline NCPoly cpol() {
    auto& A = polmat2();
    return A.normal_form(A.g("alpha") * A.g("delta") - Scalar::q() * (A.g("beta") * A.g("gamma")));
}
inline NCPoly y2() {
    auto& A = polmat2();
    NCPoly c = cpol();
    return A.mul(c, A.star_of(c));
}
// f acting on v e_vac: primed letters at the right end kill the vacuum
inline NCPoly vac_act(const NCPoly& f, const NCPoly& v) {
    auto& A = polmat2();
    NCPoly r;
    for (auto& [w, c] : A.normal_form(f * v)) {
        bool holo = true;
        for (Letter l : w) holo = holo && A.gens[l].name.back() != '\'';
        if (holo) r.add(w, c);
    }
    return r;
}
}  // namespace detail

struct YEigs {
    Scalar y1, y2;
    bool eigenvector = false;
};

inline YEigs y_eigs(int k1, int k2) {
    if (k1 < k2 || k2 < 0) throw Su22Error("y_eigs: k1 >= k2 >= 0");
    auto& A = detail::polmat2();
    NCPoly v = A.mul(A.pow(A.g("delta"), k1 - k2), A.pow(detail::cpol(), k2));
    NCPoly a = detail::vac_act(detail::y1(), v), b = detail::vac_act(detail::y2(), v);
    auto lead = v.begin();
    YEigs r;
    r.y1 = a.coeff(lead->first) / lead->second;
    r.y2 = b.coeff(lead->first) / lead->second;
    r.eigenvector = a == r.y1 * v && b == r.y2 * v;
    return r;
}

inline std::pair<Scalar, Scalar> y_eigs_formula(int k1, int k2) {
    Scalar y1 = Scalar(1) - Scalar::qpow(2 * k1) + Scalar::qpow(-2) * (Scalar(1) - Scalar::qpow(2 * k2));
    Scalar y2 = Scalar::qpow(-2) * (Scalar(1) - Scalar::qpow(2 * k2)) * (Scalar(1) - Scalar::qpow(2 * (k1 + 1)));
    return {y1, y2};
}

inline Report su22_yspec_check(int kmax) {
    Report rep("su22-yspec");
    auto& A = detail::polmat2();
    NCPoly y1 = detail::y1(), y2 = detail::y2();
    rep.add("y1 y2 = y2 y1", A.mul(y1, y2) == A.mul(y2, y1));
    rep.add("y1^* = y1, y2^* = y2", A.star_of(y1) == y1 && A.star_of(y2) == y2);
    for (int k1 = 0; k1 <= kmax; ++k1)
        for (int k2 = 0; k2 <= k1; ++k2) {
            YEigs e = y_eigs(k1, k2);
            auto f = y_eigs_formula(k1, k2);
            std::string id = "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
            rep.add("delta^{k1-k2} c^k2 is a joint eigenvector " + id, e.eigenvector);
            rep.add("eigenvalues " + id, e.y1 == f.first && e.y2 == f.second, e.y1.str() + " , " + e.y2.str());
        }
    return rep;
}

}  // namespace qdom

#endif
