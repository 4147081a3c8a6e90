#ifndef QDOM_PENROSE_HPP
#define QDOM_PENROSE_HPP

#include "catalog.hpp"
#include "report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdom {

struct PenroseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// zeta1^a zeta2^b
using ZMono = std::pair<int, int>;

// zeta1^a zeta2^b zeta1^c zeta2^d = q^{-bc} zeta1^{a+c} zeta2^{b+d}  (zeta1 zeta2 = q zeta2 zeta1)
inline Scalar zeta_factor(int b, int c) { return Scalar::qpow(-b * c); }

inline const Presentation& zeta_plane_ref() {
    static const Presentation Z = catalog("zeta_plane");
    return Z;
}
inline const Presentation& mat24_ref() {
    static const Presentation T = catalog("mat24");
    return T;
}

inline Word zeta_word(int a, int b) {
    auto& Z = zeta_plane_ref();
    Word w;
    for (int i = 0; i < std::abs(a); ++i) w.push_back(Letter(Z.at(a > 0 ? "zeta1" : "zeta1i")));
    for (int i = 0; i < std::abs(b); ++i) w.push_back(Letter(Z.at(b > 0 ? "zeta2" : "zeta2i")));
    return w;
}

// same product through the rewriting engine
inline Scalar zeta_factor_engine(int a, int b, int c, int d) {
    auto& Z = zeta_plane_ref();
    NCPoly p = Z.normal_form(NCPoly::of(zeta_word(a, b) + zeta_word(c, d)));
    if (p.size() != 1 || p.begin()->first != zeta_word(a + c, b + d))
        throw PenroseError("zeta product did not reduce to a monomial");
    return p.begin()->second;
}

// sum over orders k <= M of (zeta monomial) (x) (mat24 word); order counts the
// powers of the small ratios t13 t23^-1 and t14^-1 t24
struct TensorSeries {
    using Key = std::pair<ZMono, Word>;
    int M = 0;
    std::vector<std::map<Key, Scalar>> c;

    TensorSeries() : c(1) {}
    explicit TensorSeries(int order) : M(order), c(order + 1) {}
    void add(int k, ZMono z, const Word& w, const Scalar& s) {
        if (k > M || s.is_zero()) return;
        auto& v = c[k][{z, w}];
        v += s;
        if (v.is_zero()) c[k].erase({z, w});
    }
    static TensorSeries one(int M) {
        TensorSeries r(M);
        r.add(0, {0, 0}, Word(), Scalar(1));
        return r;
    }
    bool operator==(const TensorSeries& o) const { return M == o.M && c == o.c; }
    TensorSeries& operator+=(const TensorSeries& o) {
        for (int k = 0; k <= std::min(M, o.M); ++k)
            for (auto& [key, s] : o.c[k]) add(k, key.first, key.second, s);
        return *this;
    }
    TensorSeries scaled(const Scalar& s) const {
        TensorSeries r(M);
        for (int k = 0; k <= M; ++k)
            for (auto& [key, v] : c[k]) r.add(k, key.first, key.second, s * v);
        return r;
    }
};

inline TensorSeries ts_mul(const TensorSeries& x, const TensorSeries& y, bool engine = false) {
    auto& T = mat24_ref();
    int M = std::min(x.M, y.M);
    TensorSeries r(M);
    for (int i = 0; i <= M; ++i)
        for (int j = 0; i + j <= M; ++j)
            for (auto& [kx, cx] : x.c[i])
                for (auto& [ky, cy] : y.c[j]) {
                    auto [a, b] = kx.first;
                    auto [cc, d] = ky.first;
                    Scalar zf = engine ? zeta_factor_engine(a, b, cc, d) : zeta_factor(b, cc);
                    NCPoly t = T.normal_form(NCPoly::of(kx.second + ky.second));
                    for (auto& [w, s] : t) r.add(i + j, {a + cc, b + d}, w, zf * cx * cy * s);
                }
    return r;
}

inline Word tword(std::initializer_list<const char*> names) {
    auto& T = mat24_ref();
    Word w;
    for (auto n : names) w.push_back(Letter(T.at(n)));
    return w;
}

// eta^*(u_j) = zeta1 (x) t_1j + zeta2 (x) t_2j
inline TensorSeries eta_u(int j, int M) {
    if (j < 1 || j > 4) throw PenroseError("u index 1..4");
    TensorSeries r(M);
    std::string a = detail::tn(1, j), b = detail::tn(2, j);
    // the t13 and t24 terms are the small ones
    r.add(j == 3 ? 1 : 0, {1, 0}, tword({a.c_str()}), Scalar(1));
    r.add(j == 4 ? 1 : 0, {0, 1}, tword({b.c_str()}), Scalar(1));
    return r;
}

// (zeta1 t13 + zeta2 t23)^-1 = (zeta2 (x) t23)^-1 sum_i (-1)^i (zeta1 zeta2^-1)^i (x) (t13 t23^-1)^i
inline TensorSeries eta_u3_inv(int M) {
    TensorSeries lead(M), sum(M);
    lead.add(0, {0, -1}, tword({"t[2,3]i"}), Scalar(1));
    TensorSeries ratio(M), p = TensorSeries::one(M);
    ratio.add(1, {1, -1}, tword({"t[1,3]", "t[2,3]i"}), Scalar(-1));
    for (int i = 0; i <= M; ++i) {
        sum += p;
        p = ts_mul(p, ratio);
    }
    return ts_mul(lead, sum);
}

// (zeta1 t14 + zeta2 t24)^-1 = (sum_j (-1)^j (zeta1^-1 zeta2)^j (x) (t14^-1 t24)^j) (zeta1 (x) t14)^-1
inline TensorSeries eta_u4_inv(int M) {
    TensorSeries tail(M), sum(M);
    tail.add(0, {-1, 0}, tword({"t[1,4]i"}), Scalar(1));
    TensorSeries ratio(M), p = TensorSeries::one(M);
    ratio.add(1, {-1, 1}, tword({"t[1,4]i", "t[2,4]"}), Scalar(-1));
    for (int j = 0; j <= M; ++j) {
        sum += p;
        p = ts_mul(p, ratio);
    }
    return ts_mul(sum, tail);
}

// u1^j1 u2^j2 u3^-j3 u4^-j4
struct UMono {
    int j1 = 0, j2 = 0, j3 = 1, j4 = 1;
    int weight() const { return j1 + j2 - j3 - j4; }
    bool basis() const { return j3 >= 1 && j4 >= 1 && weight() == -2; }
    std::string str() const {
        return "u1^" + std::to_string(j1) + " u2^" + std::to_string(j2) + " u3^-" + std::to_string(j3) + " u4^-" +
               std::to_string(j4);
    }
};

inline TensorSeries eta_star(const UMono& f, int M, bool engine = false) {
    if (f.j1 < 0 || f.j2 < 0 || f.j3 < 0 || f.j4 < 0)
        throw PenroseError("only u1, u2 and the inverses of u3, u4 are supported");
    TensorSeries r = TensorSeries::one(M);
    auto mul = [&](const TensorSeries& x, int k) {
        for (int i = 0; i < k; ++i) r = ts_mul(r, x, engine);
    };
    mul(eta_u(1, M), f.j1);
    mul(eta_u(2, M), f.j2);
    mul(eta_u3_inv(M), f.j3);
    mul(eta_u4_inv(M), f.j4);
    return r;
}

// mat24 elements by order
using TSeriesMat = std::vector<NCPoly>;

// Coefficient: the zeta1^-1 zeta2^-1 coefficient of s (the lowest-weight computation).
// LeftMultiply: the zeta^0 part of (zeta1 zeta2 (x) 1) s, a factor q apart.
enum class CtMode { Coefficient, LeftMultiply };

inline TSeriesMat constant_term(const TensorSeries& s, CtMode mode = CtMode::Coefficient) {
    TSeriesMat r(s.M + 1);
    for (int k = 0; k <= s.M; ++k)
        for (auto& [key, v] : s.c[k]) {
            if (mode == CtMode::Coefficient) {
                if (key.first == ZMono{-1, -1}) r[k].add(key.second, v);
            } else {
                auto [a, b] = key.first;
                if (a == -1 && b == -1) r[k].add(key.second, zeta_factor(1, a) * v);
            }
        }
    return r;
}

inline TSeriesMat penrose_transform(const UMono& f, int M, CtMode mode = CtMode::Coefficient, bool engine = false) {
    return constant_term(eta_star(f, M, engine), mode);
}

inline std::string render_series(const TSeriesMat& s) {
    auto& T = mat24_ref();
    std::string r;
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k].is_zero()) continue;
        if (!r.empty()) r += " + ";
        r += "[" + std::to_string(k) + "] " + T.render(s[k]);
    }
    return r.empty() ? "0" : r;
}

// ---------------------------------------------------------------------------
// checks
//
// Truncation: a word's order is its number of t13 and t24 letters. Rewriting
// t24 past t1j (j < 4) lowers it (by 2 for t13, 1 otherwise), so comparisons
// are made on words of order <= K with enough headroom computed.

inline int small_count(const Word& w) {
    auto& T = mat24_ref();
    static const int a = T.at("t[1,3]"), b = T.at("t[2,4]");
    int n = 0;
    for (auto l : w)
        if (int(l) == a || int(l) == b) ++n;
    return n;
}

inline NCPoly project(const NCPoly& p, int K) {
    NCPoly r;
    for (auto& [w, c] : p)
        if (small_count(w) <= K) r.add(w, c);
    return r;
}

inline NCPoly collapse(const TSeriesMat& s) {
    NCPoly r;
    for (auto& p : s) r += p;
    return r;
}

// zeta parts collapsed too, keyed by zeta monomial
inline std::map<ZMono, NCPoly> collapse(const TensorSeries& s, int K) {
    std::map<ZMono, NCPoly> r;
    for (auto& m : s.c)
        for (auto& [key, v] : m)
            if (small_count(key.second) <= K) r[key.first].add(key.second, v);
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

// A = t23^-1 t13, B = t14^-1 t24
inline Report penrose_aux_check(int M) {
    Report rep("penrose-aux");
    auto& T = mat24_ref();
    NCPoly A = NCPoly::of(tword({"t[2,3]i", "t[1,3]"})), B = NCPoly::of(tword({"t[1,4]i", "t[2,4]"}));
    NCPoly AB = T.mul(A, B), BA = T.mul(B, A);
    Scalar q2 = Scalar::qpow(2), qm2 = Scalar::qpow(-2);
    rep.add("BA = q^2 AB + 1 - q^2", BA == T.normal_form(q2 * AB + NCPoly(Scalar(1) - q2)));
    rep.add("BA != q^-2 AB + 1 - q^-2", BA != T.normal_form(qm2 * AB + NCPoly(Scalar(1) - qm2)));
    // (1 - AB) sum_{k<=M} q^-2k A^k B^k = 1 - A^{M+1} B^{M+1}, both sides
    NCPoly S;
    for (int k = 0; k <= M; ++k) S += Scalar::qpow(-2 * k) * T.mul(T.pow(A, k), T.pow(B, k));
    NCPoly one_ab = NCPoly(1) - AB;
    NCPoly tail = NCPoly(1) - T.mul(T.pow(A, M + 1), T.pow(B, M + 1));
    rep.add("(1-AB) S_M = 1 - A^{M+1}B^{M+1}, M=" + std::to_string(M), T.mul(one_ab, S) == tail);
    rep.add("S_M (1-AB) = 1 - A^{M+1}B^{M+1}, M=" + std::to_string(M), T.mul(S, one_ab) == tail);
    return rep;
}

// K terms of the series; P is computed to small-ratio order 2K + 2
inline Report penrose_lowest_check(int K) {
    Report rep("penrose-lowest");
    auto& T = mat24_ref();
    UMono f;  // u3^-1 u4^-1
    int M = 2 * K + 2;
    TSeriesMat P = penrose_transform(f, M);
    auto Ks = std::to_string(K);
    // order 2k term = q^{-1-2k} t23^-1 A^k B^k t14^-1
    NCPoly A = NCPoly::of(tword({"t[2,3]i", "t[1,3]"})), B = NCPoly::of(tword({"t[1,4]i", "t[2,4]"}));
    NCPoly l = NCPoly::of(tword({"t[2,3]i"})), r = NCPoly::of(tword({"t[1,4]i"}));
    bool terms = true, odd = true;
    for (int k = 0; k <= K; ++k) {
        if (P[2 * k] != Scalar::qpow(-1 - 2 * k) * T.mul({l, T.pow(A, k), T.pow(B, k), r})) terms = false;
        if (!P[2 * k + 1].is_zero()) odd = false;
    }
    rep.add("P_q(u3^-1 u4^-1) = q^-1 t23^-1 (sum q^-2k A^k B^k) t14^-1, k <= " + Ks, terms);
    rep.add("odd orders vanish", odd);
    NCPoly S = collapse(P);
    NCPoly X = NCPoly::of(tword({"t[1,3]", "t[2,4]"})) - NCPoly::of(tword({"t[1,4]", "t[2,3]"}), Scalar::q());
    rep.add("P_q(u3^-1 u4^-1) (t13 t24 - q t14 t23) = -1, k <= " + Ks, project(T.mul(S, X), 2 * K) == NCPoly(-1));
    rep.add("(t13 t24 - q t14 t23) P_q(u3^-1 u4^-1) = -1, k <= " + Ks, project(T.mul(X, S), 2 * K) == NCPoly(-1));
    TSeriesMat P2 = penrose_transform(f, M, CtMode::LeftMultiply);
    bool factor = true;
    for (int k = 0; k <= M; ++k)
        if (P2[k] != Scalar::q() * P[k]) factor = false;
    rep.add("zeta^0 of (zeta1 zeta2 (x) 1) s = q * zeta1^-1 zeta2^-1 coefficient", factor);
    return rep;
}

inline Report penrose_eta_check(int M) {
    Report rep("penrose-eta");
    auto eq = [&](const TensorSeries& x, const TensorSeries& y, int K) { return collapse(x, K) == collapse(y, K); };
    auto Ms = std::to_string(M);
    // the quantum plane relations u_i u_j = q u_j u_i, i < j
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            rep.add("eta(u" + std::to_string(i) + ") eta(u" + std::to_string(j) + ") = q eta(u" + std::to_string(j) +
                        ") eta(u" + std::to_string(i) + ")",
                    eq(ts_mul(eta_u(i, M), eta_u(j, M)), ts_mul(eta_u(j, M), eta_u(i, M)).scaled(Scalar::q()), M));
    for (int j : {3, 4}) {
        TensorSeries u = eta_u(j, M), ui = j == 3 ? eta_u3_inv(M) : eta_u4_inv(M);
        rep.add("eta(u" + std::to_string(j) + ") eta(u" + std::to_string(j) + "^-1) = 1 both sides, order " + Ms,
                eq(ts_mul(u, ui), TensorSeries::one(M), M) && eq(ts_mul(ui, u), TensorSeries::one(M), M));
    }
    // u_i u3^-1 = q^-1 u3^-1 u_i and u_i u4^-1 = q^-1 u4^-1 u_i (i = 1, 2)
    for (int i : {1, 2})
        for (int j : {3, 4}) {
            int H = M + 1;
            TensorSeries ui = eta_u(i, H), inv = j == 3 ? eta_u3_inv(H) : eta_u4_inv(H);
            rep.add("eta(u" + std::to_string(i) + ") eta(u" + std::to_string(j) + "^-1) relation, order " + Ms,
                    eq(ts_mul(ui, inv), ts_mul(inv, ui).scaled(Scalar::qpow(-1)), M));
        }
    // u4^-1 u3^-1 = q^-1 u3^-1 u4^-1, as u4 (u3^-1 u4^-1) u3 = q
    {
        int H = M + 4;
        TensorSeries s = ts_mul(ts_mul(eta_u(4, H), ts_mul(eta_u3_inv(H), eta_u4_inv(H))), eta_u(3, H));
        rep.add("eta(u4) eta(u3^-1) eta(u4^-1) eta(u3) = q, order " + Ms,
                eq(s, TensorSeries::one(H).scaled(Scalar::q()), M));
    }
    // zeta reorderings against the engine
    bool zeng = true;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d)
                    if (zeta_factor_engine(a, b, c, d) != zeta_factor(b, c)) zeng = false;
    rep.add("zeta1^a zeta2^b zeta1^c zeta2^d = q^-bc zeta1^{a+c} zeta2^{b+d}, |a|..|d| <= 2", zeng);
    // brute force: engine zeta products, right-to-left association
    UMono f{1, 0, 1, 2};
    int Mb = std::min(M, 4);
    TensorSeries bf = eta_u4_inv(Mb);
    bf = ts_mul(eta_u4_inv(Mb), bf, true);
    bf = ts_mul(eta_u3_inv(Mb), bf, true);
    bf = ts_mul(eta_u(1, Mb), bf, true);
    rep.add("P_q(" + f.str() + ") by brute force, M=" + std::to_string(Mb),
            constant_term(bf) == penrose_transform(f, Mb));
    // weight -2 monomials land in degree (-1,-1 | j1, j2, -j3, -j4)
    auto& T = mat24_ref();
    bool homog = true;
    for (auto g : {UMono{0, 0, 1, 1}, UMono{1, 0, 2, 1}, UMono{0, 1, 1, 2}, UMono{1, 1, 2, 2}, UMono{2, 0, 2, 2}}) {
        std::vector<int> want{-1, -1, g.j1, g.j2, -g.j3, -g.j4};
        bool any = false;
        for (auto& p : penrose_transform(g, std::min(M, 3)))
            for (auto& [w, c] : p) {
                any = true;
                if (T.degree(w) != want) homog = false;
            }
        if (!any) homog = false;
    }
    rep.add("weight -2 monomials map to row degree (-1,-1)", homog);
    return rep;
}

}  // namespace qdom

#endif
