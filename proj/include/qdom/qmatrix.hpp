#ifndef QDOM_QMATRIX_HPP
#define QDOM_QMATRIX_HPP

#include "calculus.hpp"
#include "ratfunc.hpp"
#include "report.hpp"
#include "uqact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdom {

struct MatrixError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline CatParams mat_params(int m, int n) {
    CatParams p;
    p.m = m;
    p.n = n;
    return p;
}

// ---------------------------------------------------------------------------
// minors and y

inline void check_index(const std::vector<int>& v, int hi, const char* what) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > hi) throw MatrixError(std::string(what) + " index out of range");
        if (i && v[i] <= v[i - 1]) throw MatrixError(std::string(what) + " indices must increase");
    }
}

// sum_s (-q)^{l(s)} z_{a_1}^{al_s(1)} ... z_{a_k}^{al_s(k)}; rows a, columns al
inline NCPoly qminor(const std::vector<int>& rows, const std::vector<int>& cols, const Presentation& A, int m, int n) {
    if (rows.size() != cols.size() || rows.empty()) throw MatrixError("minor needs equal nonempty index sets");
    check_index(rows, n, "row");
    check_index(cols, m, "column");
    size_t k = rows.size();
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    NCPoly r;
    do {
        int len = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) len += s[i] > s[j];
        Word w;
        for (size_t i = 0; i < k; ++i) w.push_back(Letter(A.at(detail::zn(rows[i], cols[s[i]]))));
        Scalar c = Scalar::qpow(len);
        r.add(w, len % 2 ? -c : c);
    } while (std::next_permutation(s.begin(), s.end()));
    return A.normal_form(r);
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> r;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int from) {
        if (int(cur.size()) == k) {
            r.push_back(cur);
            return;
        }
        for (int i = from; i <= n; ++i) {
            cur.push_back(i);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(1);
    return r;
}

// y = 1 + sum_k (-1)^k sum minor minor^*, in polmat
inline NCPoly det_y(int m, int n) {
    if (m > n) throw MatrixError("det_y needs m <= n");
    Presentation A = catalog("polmat", mat_params(m, n));
    NCPoly y(1);
    for (int k = 1; k <= m; ++k)
        for (auto& J1 : subsets(m, k))
            for (auto& J2 : subsets(n, k)) {
                NCPoly mk = qminor(J2, J1, A, m, n);
                NCPoly t = A.mul(mk, A.star_of(mk));
                y += k % 2 ? -t : t;
            }
    return y;
}

// ---------------------------------------------------------------------------
// derivatives: df = sum (d f/d z) dz, coefficients on the left

struct MatCalc {
    int m, n;
    Presentation A;  // cmat
    Calculus C;      // forms with dz on the right
    MatCalc(int m_, int n_) : m(m_), n(n_), A(catalog("cmat", mat_params(m_, n_))), C(calculus_mat(m_, n_, true)) {}
    NCPoly partial(const NCPoly& f, int a, int al) const {
        return transfer(C.partial(transfer(f, A, C.forms), C.forms.at(detail::zn(a, al))), C.forms, A);
    }
    NCPoly d(const NCPoly& f) const { return C.d(transfer(f, A, C.forms)); }
};

inline const MatCalc& mat_calc(int m, int n) {
    static std::map<std::pair<int, int>, MatCalc> cache;
    auto it = cache.find({m, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), MatCalc(m, n)).first;
    return it->second;
}

inline NCPoly partial(const NCPoly& f, int a, int al, int m, int n) { return mat_calc(m, n).partial(f, a, al); }

inline Report partial_relations_check(int m, int n, int d) {
    Report rep("partials:" + std::to_string(m) + "x" + std::to_string(n));
    auto& mc = mat_calc(m, n);
    auto& A = mc.A;
    auto ms = detail::monomials(A, d);
    // the map z_a^al -> d/dz_a^al, words applied right to left, kills the relations
    std::string bad;
    for (auto& r : A.relations) {
        for (auto& f : ms) {
            NCPoly acc;
            for (auto& [w, c] : r) {
                NCPoly v = f;
                for (size_t k = w.size(); k-- > 0;) {
                    auto& nm = A.gens[w[k]].name;
                    v = mc.partial(v, nm[2] - '0', nm[4] - '0');
                }
                acc += c * v;
            }
            if (!acc.is_zero()) {
                bad = A.render(r) + " on " + A.render(f);
                break;
            }
        }
        if (!bad.empty()) break;
    }
    rep.add("derivatives satisfy the coordinate relations d<=" + std::to_string(d), bad.empty(), bad);
    bool dd = true;
    std::string wit;
    for (auto& f : ms)
        if (!mc.C.d(mc.d(f)).is_zero()) {
            dd = false;
            wit = A.render(f);
            break;
        }
    rep.add("d^2 = 0 d<=" + std::to_string(d), dd, wit);
    bool unit = true;
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al)
            for (int b = 1; b <= n; ++b)
                for (int be = 1; be <= m; ++be)
                    if (mc.partial(A.g(detail::zn(b, be)), a, al) != NCPoly(a == b && al == be ? 1 : 0)) unit = false;
    rep.add("dz_b/dz_a = delta", unit);
    return rep;
}

// ---------------------------------------------------------------------------
// Fock inner product

// (1,1) = 1, (dP/dz, Q) = (P, Q z): peel Q's letters from the right
inline Scalar fock_recursive(const NCPoly& P, const NCPoly& Q, int m, int n) {
    auto& mc = mat_calc(m, n);
    NCPoly p = mc.A.normal_form(P), q = mc.A.normal_form(Q);
    Scalar r(0);
    for (auto& [w, c] : q) {
        NCPoly v = p;
        for (size_t k = w.size(); k-- > 0 && !v.is_zero();) {
            auto& nm = mc.A.gens[w[k]].name;
            v = mc.partial(v, nm[2] - '0', nm[4] - '0');
        }
        r += c * v.constant();
    }
    return r;
}

// constant term of Q^* P in the vacuum module; pol = true uses Pol(Mat)_q
// (constant 1 - q^2) instead of the algebra with constant 1
inline Scalar fock_vacuum(const NCPoly& P, const NCPoly& Q, int m, int n, bool pol = false) {
    static std::map<std::tuple<int, int, bool>, Presentation> cache;
    auto key = std::make_tuple(m, n, pol);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, catalog(pol ? "polmat" : "pmn", mat_params(m, n))).first;
    auto& B = it->second;
    auto& A = mat_calc(m, n).A;
    NCPoly p = transfer(P, A, B), q = transfer(Q, A, B);
    return B.normal_form(B.star_of(q) * p).constant();
}

inline Report fock_two_ways_check(int m, int n, int d) {
    Report rep("fock-two-ways:" + std::to_string(m) + "x" + std::to_string(n));
    auto& A = mat_calc(m, n).A;
    auto ms = detail::monomials(A, d);
    size_t bad = 0, cnt = 0, badpol = 0;
    std::string wit;
    for (auto& P : ms)
        for (auto& Q : ms) {
            ++cnt;
            Scalar a = fock_recursive(P, Q, m, n), b = fock_vacuum(P, Q, m, n);
            if (a != b && !bad++) wit = A.render(P) + " , " + A.render(Q) + ": " + a.str() + " vs " + b.str();
            int deg = int(P.max_len());
            if (deg == int(Q.max_len()) && deg <= 2 &&
                fock_vacuum(P, Q, m, n, true) != (Scalar(1) - Scalar::qpow(2)).pow(deg) * b)
                ++badpol;
        }
    rep.add("recursive = vacuum on monomial pairs d<=" + std::to_string(d), bad == 0,
            bad ? wit : std::to_string(cnt) + " pairs");
    rep.add("Pol normalization scales degree k by (1-q^2)^k", badpol == 0);
    return rep;
}

// (xi P, Q) = (P, xi^* Q) with E^* = KF, F^* = E K^-1, K^* = K, K0^* = K0;
// corrupt = true swaps E^* for F to see the check fail
inline Report fock_invariance_check(int m, int n, int d, bool corrupt = false) {
    Report rep(std::string("fock-invariance") + (corrupt ? "[corrupted]" : "") + ":" + std::to_string(m) + "x" +
               std::to_string(n));
    ActionTable T = restricted_action("cmat", mat_params(m, n));
    auto& A = mat_calc(m, n).A;
    auto ms = detail::monomials(A, d);
    auto ip = [&](const NCPoly& P, const NCPoly& Q) { return fock_recursive(P, Q, m, n); };
    auto a = [&](HopfGenerator g, const NCPoly& f) { return act(g, f, T); };
    for (auto& g : T.generators()) {
        std::string bad;
        for (auto& P : ms) {
            for (auto& Q : ms) {
                NCPoly adj;
                switch (g.kind) {
                    case HK::E: adj = corrupt ? a(Fg(g.index), Q) : a(Kg(g.index), a(Fg(g.index), Q)); break;
                    case HK::F: adj = a(Eg(g.index), a(Kig(g.index), Q)); break;
                    default: adj = a(g, Q);
                }
                if (ip(a(g, P), Q) != ip(P, adj)) {
                    bad = A.render(P) + " , " + A.render(Q);
                    break;
                }
            }
            if (!bad.empty()) break;
        }
        rep.add("(" + hopf_name(g) + "P,Q) = (P," + hopf_name(g) + "^*Q) d<=" + std::to_string(d), bad.empty(), bad);
    }
    return rep;
}

// <F_n P, Q> = <P, (-E_n K_n^-1 + q^{1/2}/(1-q^2) zr) Q>, zr right multiplication
// by z_n^m, pairing in Pol(Mat)_q normalization
inline Report fock_adjoint_check(int m, int n, int d) {
    Report rep("fock-adjoint:" + std::to_string(m) + "x" + std::to_string(n));
    ActionTable T = matrix_action("cmat", mat_params(m, n));
    auto& A = mat_calc(m, n).A;
    auto ms = detail::monomials(A, d);
    NCPoly zr = A.g(detail::zn(n, m));
    Scalar k = Scalar::qhalf(1) / (Scalar(1) - Scalar::qpow(2));
    std::string bad;
    size_t cnt = 0;
    for (auto& P : ms)
        for (auto& Q : ms) {
            NCPoly rhs = -act(Eg(n), act(Kig(n), Q, T), T) + k * A.mul(Q, zr);
            ++cnt;
            if (fock_vacuum(act(Fg(n), P, T), Q, m, n, true) != fock_vacuum(P, rhs, m, n, true) && bad.empty())
                bad = A.render(P) + " , " + A.render(Q);
        }
    rep.add("F_n adjoint = -E_n K_n^-1 + q^{1/2}/(1-q^2) z_n^m d<=" + std::to_string(d), bad.empty(),
            bad.empty() ? std::to_string(cnt) + " pairs" : bad);
    return rep;
}

// the top minor quasi-commutes with every generator; returns the factors
inline Report minors_y_check(int m, int n) {
    Report rep("minors-y:" + std::to_string(m) + "x" + std::to_string(n));
    Presentation A = catalog("cmat", mat_params(m, n));
    if (m >= 2 && n >= 2) {
        NCPoly c = qminor({1, 2}, {1, 2}, A, m, n);
        NCPoly expect = A.g("z[1,1]") * A.g("z[2,2]") - Scalar::q() * (A.g("z[1,2]") * A.g("z[2,1]"));
        rep.add("2x2 minor = z11 z22 - q z12 z21", c == A.normal_form(expect));
    }
    if (m == n) {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 1);
        NCPoly D = qminor(all, all, A, m, n);
        bool ok = true;
        std::string fac;
        for (int a = 1; a <= n; ++a)
            for (int al = 1; al <= m; ++al) {
                NCPoly z = A.g(detail::zn(a, al));
                NCPoly l = A.mul(D, z), r = A.mul(z, D);
                // l = lambda r
                auto it = r.begin();
                Scalar lam = l.coeff(it->first) / it->second;
                if (l != lam * r) ok = false;
                fac += (fac.empty() ? "" : " ") + lam.str();
            }
        rep.add("top minor quasi-commutes with each z", ok, fac);
    }
    if (m <= n) {
        Presentation P = catalog("polmat", mat_params(m, n));
        NCPoly y = det_y(m, n);
        rep.add("y^* = y", P.star_of(y) == y);
        if (m == 1 && n == 1) rep.add("y = 1 - zz^*", y == NCPoly(1) - P.mul(P.g("z[1,1]"), P.g("z[1,1]'")));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// kernels: C[Mat]^op (x) C[Mat-bar]; the right slot holds b for b^*, so
// (a (x) b)(c (x) d) = ca (x) db in C[Mat] on both sides

struct Kernel {
    std::map<std::pair<Word, Word>, Scalar> t;
    bool operator==(const Kernel& o) const { return t == o.t; }
    bool operator!=(const Kernel& o) const { return t != o.t; }
    void add(const Word& a, const Word& b, const Scalar& c) {
        if (c.is_zero()) return;
        auto& v = t[{a, b}];
        v += c;
        if (v.is_zero()) t.erase({a, b});
    }
    Kernel& operator+=(const Kernel& o) {
        for (auto& [k, c] : o.t) add(k.first, k.second, c);
        return *this;
    }
    Kernel scaled(const Scalar& s) const {
        Kernel r;
        for (auto& [k, c] : t) r.add(k.first, k.second, s * c);
        return r;
    }
    static Kernel one() {
        Kernel r;
        r.add(Word(), Word(), Scalar(1));
        return r;
    }
};

inline Kernel kernel_mul(const Presentation& A, const Kernel& x, const Kernel& y, int D) {
    Kernel r;
    for (auto& [ab, c1] : x.t)
        for (auto& [cd, c2] : y.t) {
            if (int(ab.first.size() + cd.first.size()) > D || int(ab.second.size() + cd.second.size()) > D) continue;
            NCPoly l = A.normal_form(NCPoly::of(cd.first + ab.first));
            NCPoly rr = A.normal_form(NCPoly::of(cd.second + ab.second));
            for (auto& [wl, cl] : l)
                for (auto& [wr, cr] : rr) r.add(wl, wr, c1 * c2 * cl * cr);
        }
    return r;
}

inline Kernel h_kernel(int i, int m, int n, const Presentation& A) {
    Kernel h;
    for (auto& J1 : subsets(m, i))
        for (auto& J2 : subsets(n, i)) {
            NCPoly mk = qminor(J2, J1, A, m, n);
            for (auto& [wa, ca] : mk)
                for (auto& [wb, cb] : mk) h.add(wa, wb, ca * cb);
        }
    return h;
}

// commuting monomials in h_1..h_m with coefficients in Q(v)(u)
using HSeries = std::map<std::vector<int>, RatFunc>;

namespace detail {
inline HSeries hs_mul(const HSeries& a, const HSeries& b, int D) {
    HSeries r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            int deg = 0;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                deg += int(i + 1) * e[i];
            }
            if (deg > D) continue;
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second == RatFunc(0) ? r.erase(it) : std::next(it);
    return r;
}
inline int hs_deg(const std::vector<int>& e) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += int(i + 1) * e[i];
    return d;
}
// graded pieces g_k of prod_j P(q^{2j} x) (inverse = false) or of its inverse,
// P(x) = 1 + sum_i (-x)^i h_i; from G(x) = P(x) G(q^2 x)
inline std::vector<HSeries> hs_product(int m, int D, bool inverse) {
    std::vector<HSeries> g(D + 1);
    g[0][std::vector<int>(m, 0)] = RatFunc(1);
    for (int k = 1; k <= D; ++k) {
        HSeries acc;
        for (int i = 1; i <= std::min(m, k); ++i) {
            std::vector<int> e(m, 0);
            e[i - 1] = 1;
            Scalar c = (i % 2 ? Scalar(-1) : Scalar(1)) * (inverse ? Scalar(-1) : Scalar::qpow(2 * (k - i)));
            HSeries hi{{e, RatFunc(c)}};
            for (auto& [ex, cx] : hs_mul(hi, g[k - i], D)) acc[ex] += cx;
        }
        RatFunc den(Scalar(1) - Scalar::qpow(2 * k));
        for (auto& [ex, cx] : acc) g[k][ex] = cx / den;
    }
    return g;
}
}  // namespace detail

// K_u = prod_j P(u q^{2j}) prod_j P(q^{2j})^{-1} as a series in the h_i, h-degree <= D
inline HSeries bergman_hseries(int m, int D) {
    auto g = detail::hs_product(m, D, false), h = detail::hs_product(m, D, true);
    RatFunc u = RatFunc::var();
    HSeries gu, hh;
    for (int k = 0; k <= D; ++k) {
        RatFunc uk(1);
        for (int j = 0; j < k; ++j) uk *= u;
        for (auto& [e, c] : g[k]) gu[e] += uk * c;
        for (auto& [e, c] : h[k]) hh[e] += c;
    }
    return detail::hs_mul(gu, hh, D);
}

// the kernel itself at a given u, total bidegree <= D per slot
inline Kernel bergman_kernel(int m, int n, const Scalar& u, int D) {
    Presentation A = catalog("cmat", mat_params(m, n));
    std::vector<Kernel> hs;
    for (int i = 1; i <= std::min(m, n); ++i) hs.push_back(h_kernel(i, m, n, A));
    Kernel K;
    for (auto& [e, c] : bergman_hseries(m, D)) {
        Scalar cv = c.at(u);
        if (cv.is_zero()) continue;
        Kernel t = Kernel::one();
        bool zero = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0 && i >= hs.size()) zero = true;
            for (int r = 0; r < e[i] && !zero; ++r) t = kernel_mul(A, t, hs[i], D);
        }
        if (!zero) K += t.scaled(cv);
    }
    return K;
}

inline std::string render_kernel(const Presentation& A, const Kernel& K) {
    if (K.t.empty()) return "0";
    std::string s;
    for (auto& [ab, c] : K.t) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*[" + (ab.first.empty() ? "1" : A.word_str(ab.first)) + " (x) (" +
             (ab.second.empty() ? "1" : A.word_str(ab.second)) + ")^*]";
    }
    return s;
}

inline Report bergman_check(int D1, int D2) {
    Report rep("bergman-kernel");
    // m = n = 1, u = q^4: (1-h)^-1 (1-q^2 h)^-1 = sum_k [sum_{j<=k} q^2j] h^k
    Presentation A = catalog("cmat", mat_params(1, 1));
    Kernel K = bergman_kernel(1, 1, Scalar::qpow(4), D1);
    Kernel ref;
    Word z(1, Letter(A.at("z[1,1]")));
    for (int k = 0; k <= D1; ++k) {
        Scalar c(0);
        for (int j = 0; j <= k; ++j) c += Scalar::qpow(2 * j);
        Word w;
        for (int i = 0; i < k; ++i) w += z;
        ref.add(w, w, c);
    }
    rep.add("m=n=1, u=q^4: (1-h)^-1(1-q^2h)^-1 to degree " + std::to_string(D1), K == ref);
    HSeries s = bergman_hseries(1, D1);
    bool gen = true;
    // (uh;q^2)_inf/(h;q^2)_inf = sum (u;q^2)_k/(q^2;q^2)_k h^k
    RatFunc u = RatFunc::var();
    for (int k = 0; k <= D1; ++k) {
        RatFunc num(1);
        Scalar den(1);
        for (int j = 0; j < k; ++j) {
            num *= RatFunc(1) - u * RatFunc(Scalar::qpow(2 * j));
            den *= Scalar(1) - Scalar::qpow(2 * j + 2);
        }
        auto it = s.find({k});
        RatFunc got = it == s.end() ? RatFunc(0) : it->second;
        if (got != num / RatFunc(den)) gen = false;
    }
    rep.add("m=n=1 series is the q-binomial expansion in u", gen);
    rep.add("degree-0 term is 1", K.t.count({Word(), Word()}) && K.t.at({Word(), Word()}).is_one());
    Presentation B = catalog("cmat", mat_params(2, 2));
    Kernel h1 = h_kernel(1, 2, 2, B), h2 = h_kernel(2, 2, 2, B);
    rep.add("h1 h2 = h2 h1, m=n=2, bidegree <= " + std::to_string(D2),
            kernel_mul(B, h1, h2, D2) == kernel_mul(B, h2, h1, D2));
    return rep;
}

}  // namespace qdom

#endif
