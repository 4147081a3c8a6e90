#ifndef QDOM_CATALOG_HPP
#define QDOM_CATALOG_HPP

#include "presentation.hpp"

#include <string>
#include <vector>

namespace qdom {

struct CatParams {
    int m = 2, n = 2;          // matrix algebras: rows a = 1..n, columns alpha = 1..m
    bool f0 = false;           // adjoin the vacuum projector f0
    bool forms_right = false;  // normal words put differentials on the right
};

inline Scalar qq(long k) { return Scalar::qpow(k); }
// q - q^{-1}
inline Scalar qdiff() { return Scalar::q() - Scalar::qpow(-1); }

// R-matrices on index pairs. All are R(b, a, b', a') with the output pair (b', a').
inline Scalar Rcalc(int b, int a, int b2, int a2) {
    if (a == b && a2 == a && b2 == b) return qq(-1);
    if (a != b && a2 == a && b2 == b) return Scalar(1);
    if (a < b && b2 == a && a2 == b) return qq(-1) - Scalar::q();
    return Scalar(0);
}
inline Scalar Rhat(int b, int a, int b2, int a2) {
    if (a != b && b2 == b && a2 == a) return Scalar(1);
    if (a == b && a2 == a && b2 == b) return Scalar::q();
    if (a == b && a2 == b2 && a2 > a) return qdiff();
    return Scalar(0);
}
inline Scalar Rcont(int b, int a, int b2, int a2) {
    if (a != b && b2 == b && a2 == a) return qq(-1);
    if (a == b && a2 == a && b2 == b) return Scalar(1);
    if (a == b && a2 == b2 && a2 > a) return Scalar(1) - qq(-2);
    return Scalar(0);
}

namespace detail {

inline std::string mname(const std::string& base, int a, int al, const std::string& suf = "") {
    return base + "[" + std::to_string(a) + "," + std::to_string(al) + "]" + suf;
}

struct Builder {
    Presentation P;

    explicit Builder(std::string name) { P.name = std::move(name); }

    int gen(const std::string& name, std::vector<int> deg, int weight = 1, bool odd = false) {
        GeneratorInfo g;
        g.name = name;
        g.degree = std::move(deg);
        g.weight = weight;
        g.odd = odd;
        P.gens.push_back(g);
        return P.ngens() - 1;
    }
    NCPoly x(const std::string& n, const Scalar& c = Scalar(1)) const { return P.g(n, c); }
    NCPoly w(std::initializer_list<std::string> names, const Scalar& c = Scalar(1)) const {
        Word wd;
        for (auto& n : names) wd.push_back(Letter(P.at(n)));
        return NCPoly::of(wd, c);
    }
    void rel(const NCPoly& p) { P.relations.push_back(p); }
    void rel(const NCPoly& lhs, const NCPoly& rhs) { P.relations.push_back(lhs - rhs); }
    // positions in the given order; unlisted generators keep relative order after them
    void order(const std::vector<std::string>& names) {
        int k = 0;
        for (auto& n : names) P.gens[P.at(n)].position = k++;
        for (auto& g : P.gens)
            if (g.position < 0) g.position = k++;
    }
    void involution(const std::vector<std::pair<std::string, std::string>>& pairs) {
        P.star.assign(P.ngens(), NCPoly());
        for (auto& [a, b] : pairs) {
            P.star[P.at(a)] = x(b);
            P.star[P.at(b)] = x(a);
        }
        for (int i = 0; i < P.ngens(); ++i)
            if (P.star[i].is_zero()) throw CatalogError("involution incomplete for " + P.gens[i].name);
    }
    // add the involution images of every relation so far
    void close_under_star() {
        auto rs = P.relations;
        for (auto& r : rs) {
            NCPoly s;
            for (auto& [wd, c] : r) {
                NCPoly t(c);
                for (size_t i = wd.size(); i-- > 0;) t = t * P.star[wd[i]];
                s += t;
            }
            P.relations.push_back(s);
        }
    }
    Presentation done() {
        for (auto& g : P.gens)
            if (g.position < 0) {
                int k = 0;
                for (auto& h : P.gens) k = std::max(k, h.position + 1);
                g.position = k;
            }
        P.finalize();
        return P;
    }
};

// Quantum-matrix relations among x(a, al), a = 1..R, al = 1..C.
// reversed: the opposite algebra (every word read backwards).
template <class X>
void qmatrix_relations(Builder& B, int R, int C, X x, bool reversed = false) {
    auto pr = [&](int a, int al, int b, int be, const Scalar& c = Scalar(1)) {
        NCPoly p = B.x(x(a, al)) * B.x(x(b, be));
        if (reversed) p = B.x(x(b, be)) * B.x(x(a, al));
        return c * p;
    };
    Scalar q = Scalar::q();
    for (int a = 1; a <= R; ++a)
        for (int al = 1; al <= C; ++al)
            for (int b = a; b <= R; ++b)
                for (int be = 1; be <= C; ++be) {
                    if (b == a && be <= al) continue;
                    if (a == b) B.rel(pr(a, al, b, be) - pr(b, be, a, al, q));
                    else if (al == be) B.rel(pr(a, al, b, be) - pr(b, be, a, al, q));
                    else if (al > be) B.rel(pr(a, al, b, be) - pr(b, be, a, al));
                    else B.rel(pr(a, al, b, be) - pr(b, be, a, al) - pr(a, be, b, al, qdiff()));
                }
}

inline std::vector<int> unit(size_t dim, std::initializer_list<std::pair<int, int>> e) {
    std::vector<int> v(dim, 0);
    for (auto [i, s] : e) v[i] += s;
    return v;
}

inline Presentation disc_fun(const std::string& name, bool f0) {
    Builder B(name);
    B.gen("z", {1});
    B.gen("z'", {-1});
    if (f0) B.gen("f0", {0});
    B.order(f0 ? std::vector<std::string>{"z", "f0", "z'"} : std::vector<std::string>{"z", "z'"});
    Scalar q2 = qq(2);
    B.rel(B.w({"z'", "z"}), q2 * B.w({"z", "z'"}) + NCPoly(Scalar(1) - q2));
    if (f0) {
        B.rel(B.w({"z'", "f0"}));
        B.rel(B.w({"f0", "z"}));
        B.rel(B.w({"f0", "f0"}), B.x("f0"));
        B.involution({{"z", "z'"}, {"f0", "f0"}});
    } else {
        B.involution({{"z", "z'"}});
    }
    return B.done();
}

inline Presentation disc_forms(const std::string& name, bool f0, bool right, bool clifford) {
    Builder B(name);
    B.gen("z", {1});
    B.gen("z'", {-1});
    if (f0) B.gen("f0", {0});
    B.gen("dz", {1}, 3, true);
    B.gen("dz'", {-1}, 3, true);
    std::vector<std::string> fn = f0 ? std::vector<std::string>{"z", "f0", "z'"} : std::vector<std::string>{"z", "z'"};
    std::vector<std::string> ord;
    if (right) {
        ord = fn;
        ord.push_back("dz");
        ord.push_back("dz'");
    } else {
        ord = {"dz", "dz'"};
        ord.insert(ord.end(), fn.begin(), fn.end());
    }
    B.order(ord);
    Scalar q2 = qq(2), qm2 = qq(-2);
    B.rel(B.w({"z'", "z"}), q2 * B.w({"z", "z'"}) + NCPoly(Scalar(1) - q2));
    B.rel(B.w({"z", "dz"}), qm2 * B.w({"dz", "z"}));
    B.rel(B.w({"z'", "dz"}), q2 * B.w({"dz", "z'"}));
    B.rel(B.w({"z", "dz'"}), qm2 * B.w({"dz'", "z"}));
    B.rel(B.w({"z'", "dz'"}), q2 * B.w({"dz'", "z'"}));
    B.rel(B.w({"dz", "dz"}));
    B.rel(B.w({"dz'", "dz'"}));
    NCPoly y = NCPoly(1) - B.w({"z", "z'"});
    if (clifford)
        B.rel(B.w({"dz'", "dz"}) + q2 * B.w({"dz", "dz'"}), y * y);
    else
        B.rel(B.w({"dz'", "dz"}) + q2 * B.w({"dz", "dz'"}));
    if (f0) {
        B.rel(B.w({"z'", "f0"}));
        B.rel(B.w({"f0", "z"}));
        B.rel(B.w({"f0", "f0"}), B.x("f0"));
        B.rel(B.w({"f0", "dz"}), B.w({"dz", "f0"}));
        B.rel(B.w({"f0", "dz'"}), B.w({"dz'", "f0"}));
        B.involution({{"z", "z'"}, {"f0", "f0"}, {"dz", "dz'"}});
    } else {
        B.involution({{"z", "z'"}, {"dz", "dz'"}});
    }
    return B.done();
}

inline Presentation weyl_disc() {
    Builder B("weyl_disc");
    B.gen("z", {1});
    B.gen("d", {-1});
    B.order({"z", "d"});
    B.rel(B.w({"d", "z"}), qq(-2) * B.w({"z", "d"}) + NCPoly(1));
    return B.done();
}

inline std::string zn(int a, int al) { return mname("z", a, al); }
inline std::string zs(int a, int al) { return mname("z", a, al, "'"); }

inline void matrix_gens(Builder& B, const std::string& base, int R, int C, int sign, const std::string& suf = "",
                        bool odd = false, int weight = 1) {
    for (int a = 1; a <= R; ++a)
        for (int al = 1; al <= C; ++al)
            B.gen(mname(base, a, al, suf), unit(R + C, {{a - 1, sign}, {R + al - 1, sign}}), weight, odd);
}

// Pol(Mat)_q: holomorphic relations, their images, and the mixed relations
// x_b^be' x_a^al = k * sum R R x x' + c * delta.
template <class RF>
Presentation polmat_like(const std::string& name, int m, int n, RF R, const Scalar& k, const Scalar& c, bool f0) {
    Builder B(name);
    int Rn = n, Cm = m;
    matrix_gens(B, "z", Rn, Cm, 1);
    if (f0) B.gen("f0", std::vector<int>(Rn + Cm, 0));
    matrix_gens(B, "z", Rn, Cm, -1, "'");
    std::vector<std::pair<std::string, std::string>> inv;
    for (int a = 1; a <= Rn; ++a)
        for (int al = 1; al <= Cm; ++al) inv.push_back({zn(a, al), zs(a, al)});
    if (f0) inv.push_back({"f0", "f0"});
    B.involution(inv);
    qmatrix_relations(B, Rn, Cm, zn);
    B.close_under_star();
    for (int b = 1; b <= Rn; ++b)
        for (int be = 1; be <= Cm; ++be)
            for (int a = 1; a <= Rn; ++a)
                for (int al = 1; al <= Cm; ++al) {
                    NCPoly rhs;
                    for (int b2 = 1; b2 <= Rn; ++b2)
                        for (int a2 = 1; a2 <= Rn; ++a2) {
                            Scalar r1 = R(b, a, b2, a2);
                            if (r1.is_zero()) continue;
                            for (int be2 = 1; be2 <= Cm; ++be2)
                                for (int al2 = 1; al2 <= Cm; ++al2) {
                                    Scalar r2 = R(be, al, be2, al2);
                                    if (r2.is_zero()) continue;
                                    rhs += (k * r1 * r2) * B.w({zn(a2, al2), zs(b2, be2)});
                                }
                        }
                    if (a == b && al == be) rhs += NCPoly(c);
                    B.rel(B.w({zs(b, be), zn(a, al)}), rhs);
                }
    if (f0)
        for (int a = 1; a <= Rn; ++a)
            for (int al = 1; al <= Cm; ++al) {
                B.rel(B.w({zs(a, al), "f0"}));
                B.rel(B.w({"f0", zn(a, al)}));
            }
    if (f0) B.rel(B.w({"f0", "f0"}), B.x("f0"));
    return B.done();
}

inline Presentation cmat(int m, int n) {
    Builder B("cmat");
    matrix_gens(B, "z", n, m, 1);
    qmatrix_relations(B, n, m, zn);
    return B.done();
}

// first-order calculus: z dz and dz dz through R (x) R
inline Presentation lambda_mat(int m, int n, bool right) {
    Builder B("lambda_mat");
    matrix_gens(B, "z", n, m, 1);
    matrix_gens(B, "dz", n, m, 1, "", true);
    std::vector<std::string> zs_, ds_;
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al) {
            zs_.push_back(zn(a, al));
            ds_.push_back(mname("dz", a, al));
        }
    std::vector<std::string> ord = right ? zs_ : ds_;
    ord.insert(ord.end(), (right ? ds_ : zs_).begin(), (right ? ds_ : zs_).end());
    B.order(ord);
    qmatrix_relations(B, n, m, zn);
    for (int b = 1; b <= n; ++b)
        for (int be = 1; be <= m; ++be)
            for (int a = 1; a <= n; ++a)
                for (int al = 1; al <= m; ++al) {
                    NCPoly r1, r2;
                    for (int b2 = 1; b2 <= n; ++b2)
                        for (int a2 = 1; a2 <= n; ++a2) {
                            Scalar x1 = Rcalc(b, a, b2, a2);
                            if (x1.is_zero()) continue;
                            for (int be2 = 1; be2 <= m; ++be2)
                                for (int al2 = 1; al2 <= m; ++al2) {
                                    Scalar x2 = Rcalc(be, al, be2, al2);
                                    if (x2.is_zero()) continue;
                                    r1 += (x1 * x2) * B.w({mname("dz", a2, al2), zn(b2, be2)});
                                    r2 += (x1 * x2) * B.w({mname("dz", a2, al2), mname("dz", b2, be2)});
                                }
                        }
                    B.rel(B.w({zn(b, be), mname("dz", a, al)}), r1);
                    B.rel(B.w({mname("dz", b, be), mname("dz", a, al)}), -r2);
                }
    return B.done();
}

// algebra of q-differential operators with polynomial coefficients
inline Presentation dmat(int m, int n) {
    Builder B("dmat");
    matrix_gens(B, "z", n, m, 1);
    matrix_gens(B, "d", n, m, -1);
    qmatrix_relations(B, n, m, zn);
    qmatrix_relations(B, n, m, [](int a, int al) { return mname("d", a, al); }, true);
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al)
            for (int b = 1; b <= n; ++b)
                for (int be = 1; be <= m; ++be) {
                    NCPoly rhs;
                    for (int a2 = 1; a2 <= n; ++a2)
                        for (int b2 = 1; b2 <= n; ++b2) {
                            Scalar x1 = Rcalc(b, a2, b2, a);
                            if (x1.is_zero()) continue;
                            for (int al2 = 1; al2 <= m; ++al2)
                                for (int be2 = 1; be2 <= m; ++be2) {
                                    Scalar x2 = Rcalc(be, al2, be2, al);
                                    if (x2.is_zero()) continue;
                                    rhs += (x1 * x2) * B.w({zn(b2, be2), mname("d", a2, al2)});
                                }
                        }
                    if (a == b && al == be) rhs += NCPoly(1);
                    B.rel(B.w({mname("d", a, al), zn(b, be)}), rhs);
                }
    return B.done();
}

inline Presentation pol_mat2() {
    Builder B("pol_mat2");
    // alpha = z[1,1], beta = z[2,1], gamma = z[1,2], delta = z[2,2]
    B.gen("alpha", {1, 0, 1, 0});
    B.gen("beta", {0, 1, 1, 0});
    B.gen("gamma", {1, 0, 0, 1});
    B.gen("delta", {0, 1, 0, 1});
    B.gen("alpha'", {-1, 0, -1, 0});
    B.gen("beta'", {0, -1, -1, 0});
    B.gen("gamma'", {-1, 0, 0, -1});
    B.gen("delta'", {0, -1, 0, -1});
    B.involution({{"alpha", "alpha'"}, {"beta", "beta'"}, {"gamma", "gamma'"}, {"delta", "delta'"}});
    Scalar q = Scalar::q(), q2 = qq(2), a1 = Scalar(1) - q2, b1 = qq(-1) - q;
    auto W = [&](const std::string& x, const std::string& y, const Scalar& c = Scalar(1)) { return B.w({x, y}, c); };
    NCPoly one(a1);
    B.rel(W("alpha", "beta"), W("beta", "alpha", q));
    B.rel(W("gamma", "delta"), W("delta", "gamma", q));
    B.rel(W("alpha", "gamma"), W("gamma", "alpha", q));
    B.rel(W("beta", "delta"), W("delta", "beta", q));
    B.rel(W("beta", "gamma"), W("gamma", "beta"));
    B.rel(W("alpha", "delta"), W("delta", "alpha") + W("beta", "gamma", qdiff()));

    B.rel(W("delta'", "alpha"), W("alpha", "delta'"));
    B.rel(W("delta'", "beta"), W("beta", "delta'", q));
    B.rel(W("delta'", "gamma"), W("gamma", "delta'", q));
    B.rel(W("delta'", "delta"), W("delta", "delta'", q2) + one);

    B.rel(W("gamma'", "alpha"), W("alpha", "gamma'", q) - W("beta", "delta'", b1));
    B.rel(W("gamma'", "beta"), W("beta", "gamma'"));
    B.rel(W("gamma'", "gamma"), W("gamma", "gamma'", q2) - W("delta", "delta'", a1) + one);

    B.rel(W("beta'", "alpha"), W("alpha", "beta'", q) - W("gamma", "delta'", b1));
    B.rel(W("beta'", "beta"), W("beta", "beta'", q2) - W("delta", "delta'", a1) + one);

    B.rel(W("alpha'", "alpha"), W("alpha", "alpha'", q2) - a1 * (W("beta", "beta'") + W("gamma", "gamma'")) +
                                    W("delta", "delta'", b1 * b1) + one);
    B.close_under_star();
    return B.done();
}

// first-order calculus on the 2x2 quantum matrices, differentials on the right
inline Presentation omega_mat2() {
    Builder B("omega_mat2");
    B.gen("alpha", {1, 0, 1, 0});
    B.gen("beta", {0, 1, 1, 0});
    B.gen("gamma", {1, 0, 0, 1});
    B.gen("delta", {0, 1, 0, 1});
    B.gen("dalpha", {1, 0, 1, 0}, 1, true);
    B.gen("dbeta", {0, 1, 1, 0}, 1, true);
    B.gen("dgamma", {1, 0, 0, 1}, 1, true);
    B.gen("ddelta", {0, 1, 0, 1}, 1, true);
    Scalar q = Scalar::q(), q2 = qq(2), a1 = Scalar(1) - q2, b1 = qq(-1) - q;
    auto W = [&](const std::string& x, const std::string& y, const Scalar& c = Scalar(1)) { return B.w({x, y}, c); };
    B.rel(W("alpha", "beta"), W("beta", "alpha", q));
    B.rel(W("gamma", "delta"), W("delta", "gamma", q));
    B.rel(W("alpha", "gamma"), W("gamma", "alpha", q));
    B.rel(W("beta", "delta"), W("delta", "beta", q));
    B.rel(W("beta", "gamma"), W("gamma", "beta"));
    B.rel(W("alpha", "delta"), W("delta", "alpha") + W("beta", "gamma", qdiff()));

    B.rel(W("dalpha", "alpha"), W("alpha", "dalpha", q2));
    B.rel(W("dalpha", "beta"), W("beta", "dalpha", q) - W("alpha", "dbeta", a1));
    B.rel(W("dalpha", "gamma"), W("gamma", "dalpha", q) - W("alpha", "dgamma", a1));
    B.rel(W("dalpha", "delta"),
          W("delta", "dalpha") - b1 * (W("gamma", "dbeta") + W("beta", "dgamma")) + W("alpha", "ddelta", b1 * b1));
    B.rel(W("dbeta", "alpha"), W("alpha", "dbeta", q));
    B.rel(W("dbeta", "beta"), W("beta", "dbeta", q2));
    B.rel(W("dbeta", "gamma"), W("gamma", "dbeta") - W("alpha", "ddelta", b1));
    B.rel(W("dbeta", "delta"), W("delta", "dbeta", q) - W("beta", "ddelta", a1));
    B.rel(W("dgamma", "alpha"), W("alpha", "dgamma", q));
    B.rel(W("dgamma", "gamma"), W("gamma", "dgamma", q2));
    B.rel(W("dgamma", "beta"), W("beta", "dgamma") - W("alpha", "ddelta", b1));
    B.rel(W("dgamma", "delta"), W("delta", "dgamma", q) - W("gamma", "ddelta", a1));
    B.rel(W("ddelta", "alpha"), W("alpha", "ddelta"));
    B.rel(W("ddelta", "gamma"), W("gamma", "ddelta", q));
    B.rel(W("ddelta", "beta"), W("beta", "ddelta", q));
    B.rel(W("ddelta", "delta"), W("delta", "ddelta", q2));
    return B.done();
}

// quasi-commuting Laurent generators: x_i x_j = q x_j x_i for i < j; inv lists
// which generators get an inverse (named with suffix i)
inline Presentation quantum_torus(const std::string& name, const std::vector<std::string>& base,
                                  const std::vector<bool>& inv) {
    Builder B(name);
    size_t k = base.size();
    struct L {
        std::string nm;
        int idx, e;
    };
    std::vector<L> ls;
    std::vector<std::string> ord;
    for (size_t i = 0; i < k; ++i) {
        if (inv[i]) {
            B.gen(base[i] + "i", unit(k, {{int(i), -1}}));
            ls.push_back({base[i] + "i", int(i), -1});
        }
        B.gen(base[i], unit(k, {{int(i), 1}}));
        ls.push_back({base[i], int(i), 1});
    }
    for (auto& l : ls) ord.push_back(l.nm);
    B.order(ord);
    for (auto& x : ls)
        for (auto& y : ls) {
            if (x.idx >= y.idx) continue;
            B.rel(B.w({x.nm, y.nm}), B.w({y.nm, x.nm}, qq(x.e * y.e)));
        }
    for (size_t i = 0; i < k; ++i)
        if (inv[i]) {
            B.rel(B.w({base[i], base[i] + "i"}), NCPoly(1));
            B.rel(B.w({base[i] + "i", base[i]}), NCPoly(1));
        }
    return B.done();
}

inline std::string tn(int i, int j) { return mname("t", i, j); }

// 2x4 quantum matrices with inverses of t[1,4] and t[2,3]
inline Presentation mat24() {
    Builder B("mat24");
    B.gen(tn(1, 4) + "i", unit(6, {{0, -1}, {5, -1}}));
    B.gen(tn(2, 3) + "i", unit(6, {{1, -1}, {4, -1}}));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 4; ++j)
            B.gen(tn(i, j), unit(6, {{i - 1, 1}, {j + 1, 1}}), (i == 1 && j <= 2) ? 10 : 1);
    std::string a = tn(1, 4) + "i", b = tn(2, 3) + "i";
    // each inverse sits next to its generator
    B.order({b, tn(2, 3), tn(1, 1), tn(1, 2), tn(1, 3), a, tn(1, 4), tn(2, 1), tn(2, 2), tn(2, 4)});
    qmatrix_relations(B, 2, 4, tn);
    Scalar q = Scalar::q(), qi = qq(-1);
    auto A = [&](int i, int j, const Scalar& c) { B.rel(B.w({tn(i, j), a}), B.w({a, tn(i, j)}, c)); };
    A(1, 1, qi), A(1, 2, qi), A(1, 3, qi), A(2, 4, q), A(2, 1, Scalar(1)), A(2, 2, Scalar(1)), A(2, 3, Scalar(1));
    auto Bq = [&](int i, int j, const Scalar& c) { B.rel(B.w({tn(i, j), b}), B.w({b, tn(i, j)}, c)); };
    Bq(1, 3, qi), Bq(2, 1, qi), Bq(2, 2, qi), Bq(2, 4, q), Bq(1, 4, Scalar(1));
    Scalar k = -(qdiff() * qq(-2));
    B.rel(B.w({tn(1, 1), b}), B.w({b, tn(1, 1)}) + B.w({b, b, tn(1, 3), tn(2, 1)}, k));
    B.rel(B.w({tn(1, 2), b}), B.w({b, tn(1, 2)}) + B.w({b, b, tn(1, 3), tn(2, 2)}, k));
    B.rel(B.w({a, b}), B.w({b, a}));
    B.rel(B.w({tn(1, 4), a}), NCPoly(1));
    B.rel(B.w({a, tn(1, 4)}), NCPoly(1));
    B.rel(B.w({tn(2, 3), b}), NCPoly(1));
    B.rel(B.w({b, tn(2, 3)}), NCPoly(1));
    return B.done();
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "pol_disc", "fun_disc", "omega_disc", "clifford_disc", "weyl_disc",  "cmat",   "polmat",     "polmat_alt",
        "pmn",      "fun_mat",  "lambda_mat", "dmat",          "pol_mat2",   "omega_mat2", "qplane4", "mat24",
        "zeta_plane"};
    return names;
}

inline Presentation catalog(const std::string& name, const CatParams& p = {}) {
    using namespace detail;
    if (p.m < 1 || p.n < 1 || p.m * p.n > 9) throw CatalogError("matrix size out of range");
    Scalar a1 = Scalar(1) - qq(2);
    if (name == "pol_disc") return disc_fun(name, p.f0);
    if (name == "fun_disc") return disc_fun(name, true);
    if (name == "omega_disc") return disc_forms(name, p.f0, p.forms_right, false);
    if (name == "clifford_disc") return disc_forms(name, p.f0, p.forms_right, true);
    if (name == "weyl_disc") return weyl_disc();
    if (name == "cmat") return cmat(p.m, p.n);
    if (name == "polmat") return polmat_like(name, p.m, p.n, Rhat, Scalar(1), a1, p.f0);
    if (name == "polmat_alt") return polmat_like(name, p.m, p.n, Rcont, qq(2), a1, p.f0);
    if (name == "pmn") return polmat_like(name, p.m, p.n, Rhat, Scalar(1), Scalar(1), p.f0);
    if (name == "fun_mat") return polmat_like(name, p.m, p.n, Rhat, Scalar(1), a1, true);
    if (name == "lambda_mat") return lambda_mat(p.m, p.n, p.forms_right);
    if (name == "dmat") return dmat(p.m, p.n);
    if (name == "pol_mat2") return pol_mat2();
    if (name == "omega_mat2") return omega_mat2();
    if (name == "qplane4") return quantum_torus(name, {"u1", "u2", "u3", "u4"}, {false, false, true, true});
    if (name == "mat24") return mat24();
    if (name == "zeta_plane") return quantum_torus(name, {"zeta1", "zeta2"}, {true, true});
    throw CatalogError("unknown algebra " + name);
}

}  // namespace qdom

#endif
