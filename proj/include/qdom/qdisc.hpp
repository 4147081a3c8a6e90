#ifndef QDOM_QDISC_HPP
#define QDOM_QDISC_HPP

#include "calculus.hpp"
#include "linalg.hpp"
#include "qspecial.hpp"
#include "report.hpp"
#include "uqact.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qdom {

struct DiscError : std::domain_error {
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// band decomposition f = sum z^m psi_m(y) + psi_0(y) + sum psi_{-m}(y) z*^m

struct DiscElement {
    // polynomial part of each band, coefficients of y^k
    std::map<int, std::vector<Scalar>> poly;
    // finite part of each band: grid index n -> value at y = q^{2n}
    std::map<int, std::map<int, Scalar>> fin;

    bool finite() const {
        for (auto& [m, p] : poly)
            for (auto& c : p)
                if (!c.is_zero()) return false;
        return true;
    }
    bool polynomial() const {
        for (auto& [m, f] : fin)
            if (!f.empty()) return false;
        return true;
    }
    bool radial() const {
        for (auto& [m, p] : poly)
            if (m != 0)
                for (auto& c : p)
                    if (!c.is_zero()) return false;
        for (auto& [m, f] : fin)
            if (m != 0 && !f.empty()) return false;
        return true;
    }
    // psi_m(q^{2n})
    Scalar value(int m, int n) const {
        Scalar r(0);
        auto it = poly.find(m);
        if (it != poly.end()) {
            Scalar Y = Scalar::qpow(2 * n), yk(1);
            for (auto& c : it->second) {
                r += c * yk;
                yk *= Y;
            }
        }
        auto jt = fin.find(m);
        if (jt != fin.end()) {
            auto kt = jt->second.find(n);
            if (kt != jt->second.end()) r += kt->second;
        }
        return r;
    }
    std::vector<Scalar> grid(int m, int n_max) const {
        std::vector<Scalar> g;
        for (int n = 0; n <= n_max; ++n) g.push_back(value(m, n));
        return g;
    }
    std::vector<double> grid_numeric(int m, int n_max, double q0) const {
        std::vector<double> g;
        for (int n = 0; n <= n_max; ++n) g.push_back(value(m, n).evald(q0));
        return g;
    }
};

namespace detail {
inline void poly_addmul(std::vector<Scalar>& a, const std::vector<Scalar>& b, const Scalar& c) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] += c * b[i];
}
inline std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Scalar> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
inline Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& x) {
    Scalar r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}
// prod_{i<k} (1 - q^{-2i} y)
inline std::vector<Scalar> zzs_poly(int k) {
    std::vector<Scalar> r{Scalar(1)};
    for (int i = 0; i < k; ++i) r = poly_mul(r, {Scalar(1), -Scalar::qpow(-2 * i)});
    return r;
}
inline void trim(std::vector<Scalar>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
}  // namespace detail

// exact decomposition of an element of pol_disc or fun_disc
inline DiscElement to_psi(const Presentation& A, const NCPoly& f) {
    int z = A.index("z"), zs = A.index("z'"), f0 = A.index("f0");
    if (z < 0 || zs < 0) throw DiscError("to_psi: algebra " + A.name + " has no z, z*");
    for (int g = 0; g < A.ngens(); ++g)
        if (g != z && g != zs && g != f0) throw DiscError("to_psi: unsupported generator " + A.gens[g].name);
    DiscElement out;
    for (auto& [w, c] : A.normal_form(f)) {
        size_t i = 0;
        int j = 0, k = 0;
        bool hasf = false;
        while (i < w.size() && w[i] == z) ++j, ++i;
        if (i < w.size() && w[i] == f0) hasf = true, ++i;
        while (i < w.size() && w[i] == zs) ++k, ++i;
        if (i != w.size()) throw DiscError("to_psi: word not of the form z^j [f0] z*^k");
        int m = j - k, mn = std::min(j, k);
        if (hasf) {
            // z^mn f0 z*^mn is the projection onto e_mn scaled by (q^2;q^2)_mn
            out.fin[m][mn] += c * qpoch(Scalar::qpow(2), Scalar::qpow(2), mn);
        } else {
            detail::poly_addmul(out.poly[m], detail::zzs_poly(mn), c);
        }
    }
    for (auto it = out.poly.begin(); it != out.poly.end();) {
        detail::trim(it->second);
        it = it->second.empty() ? out.poly.erase(it) : std::next(it);
    }
    for (auto it = out.fin.begin(); it != out.fin.end();) {
        for (auto jt = it->second.begin(); jt != it->second.end();)
            jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
        it = it->second.empty() ? out.fin.erase(it) : std::next(it);
    }
    return out;
}

// mu(f) = (1 - q^2) sum_m psi_0(q^{2m}) q^{2m}, exact on polynomials and finite parts
inline Scalar lebesgue(const DiscElement& f) {
    Scalar r(0);
    auto it = f.poly.find(0);
    if (it != f.poly.end()) r += jackson(it->second);
    auto jt = f.fin.find(0);
    if (jt != f.fin.end())
        for (auto& [n, v] : jt->second) r += (Scalar(1) - Scalar::qpow(2)) * v * Scalar::qpow(2 * n);
    return r;
}

// nu(f) = (1 - q^2) sum_k psi_0(q^{2k}) q^{-2k}, finite f only
inline Scalar inv_integral(const DiscElement& f) {
    if (!f.finite()) throw DiscError("inv_integral: element is not finite");
    Scalar r(0);
    auto jt = f.fin.find(0);
    if (jt != f.fin.end())
        for (auto& [n, v] : jt->second) r += (Scalar(1) - Scalar::qpow(2)) * v * Scalar::qpow(-2 * n);
    return r;
}

// ---------------------------------------------------------------------------
// Fock representation, stored as T_ab = R_ab sqrt(N(a,b)) with
// N(a,b) = prod_{i=min+1}^{max} (1 - q^{2i}); T(z), T(z*) have R = 1 off the diagonal

inline Scalar fock_N(int a, int b) {
    Scalar r(1);
    for (int i = std::min(a, b) + 1; i <= std::max(a, b); ++i) r *= Scalar(1) - Scalar::qpow(2 * i);
    return r;
}
inline double fock_N(int a, int b, double q0) {
    double r = 1;
    for (int i = std::min(a, b) + 1; i <= std::max(a, b); ++i) r *= 1 - std::pow(q0, 2 * i);
    return r;
}

struct RepMatrix {
    int N = 0;
    std::map<std::pair<int, int>, Scalar> R;

    static RepMatrix identity(int N) {
        RepMatrix m{N, {}};
        for (int i = 0; i < N; ++i) m.R[{i, i}] = Scalar(1);
        return m;
    }
    Scalar r(int a, int b) const {
        auto it = R.find({a, b});
        return it == R.end() ? Scalar(0) : it->second;
    }
    double entry(int a, int b, double q0) const { return r(a, b).evald(q0) * std::sqrt(fock_N(a, b, q0)); }
    std::vector<std::vector<double>> dense(double q0) const {
        std::vector<std::vector<double>> d(N, std::vector<double>(N, 0.0));
        for (auto& [ij, c] : R) d[ij.first][ij.second] = c.evald(q0) * std::sqrt(fock_N(ij.first, ij.second, q0));
        return d;
    }
    RepMatrix transpose() const {
        RepMatrix t{N, {}};
        for (auto& [ij, c] : R) t.R[{ij.second, ij.first}] = c;
        return t;
    }
    RepMatrix& add(const RepMatrix& o, const Scalar& k = Scalar(1)) {
        for (auto& [ij, c] : o.R) {
            Scalar s = R[ij] + k * c;
            if (s.is_zero()) R.erase(ij);
            else R[ij] = s;
        }
        return *this;
    }
    friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
        RepMatrix p{x.N, {}};
        std::map<int, std::vector<std::pair<int, Scalar>>> rows;
        for (auto& [ij, c] : y.R) rows[ij.first].push_back({ij.second, c});
        for (auto& [ij, c1] : x.R) {
            int a = ij.first, b = ij.second;
            auto it = rows.find(b);
            if (it == rows.end()) continue;
            for (auto& [cc, c2] : it->second) {
                int lo = std::min(a, cc), hi = std::max(a, cc);
                Scalar ov = b > hi ? fock_N(hi, b) : (b < lo ? fock_N(b, lo) : Scalar(1));
                p.R[{a, cc}] += c1 * c2 * ov;
            }
        }
        for (auto it = p.R.begin(); it != p.R.end();) it = it->second.is_zero() ? p.R.erase(it) : std::next(it);
        return p;
    }
};

inline RepMatrix rep_generator(const std::string& g, int N) {
    RepMatrix m{N, {}};
    if (g == "z") {
        for (int k = 0; k + 1 < N; ++k) m.R[{k + 1, k}] = Scalar(1);
    } else if (g == "z'") {
        for (int k = 1; k < N; ++k) m.R[{k - 1, k}] = Scalar(1);
    } else if (g == "f0") {
        m.R[{0, 0}] = Scalar(1);
    } else {
        throw DiscError("rep_matrix: no Fock operator for generator " + g);
    }
    return m;
}

// product of the generator matrices along each word, no normal form taken
inline RepMatrix rep_matrix(const Presentation& A, const NCPoly& f, int N) {
    if (N < 1) throw DiscError("rep_matrix: N must be positive");
    std::vector<RepMatrix> gm;
    for (auto& g : A.gens) gm.push_back(rep_generator(g.name, N));
    RepMatrix out{N, {}};
    for (auto& [w, c] : f) {
        RepMatrix p = RepMatrix::identity(N);
        for (Letter l : w) p = p * gm[l];
        out.add(p, c);
    }
    return out;
}

// agreement on the block of indices < lim
inline bool rep_equal_on(const RepMatrix& a, const RepMatrix& b, int lim) {
    for (int i = 0; i < lim; ++i)
        for (int j = 0; j < lim; ++j)
            if (a.r(i, j) != b.r(i, j)) return false;
    return true;
}

// rep(nf(w)) against the plain product for all words of length <= L
inline Report rep_oracle_check(const Presentation& A, int L, int N) {
    Report rep("rep-oracle:" + A.name);
    std::vector<Word> words{Word()};
    std::vector<Word> cur{Word()};
    for (int len = 1; len <= L; ++len) {
        std::vector<Word> nx;
        for (auto& w : cur)
            for (int g = 0; g < A.ngens(); ++g) nx.push_back(w + Word(1, Letter(g)));
        words.insert(words.end(), nx.begin(), nx.end());
        cur.swap(nx);
    }
    size_t bad = 0;
    std::string wit;
    for (auto& w : words) {
        NCPoly p = NCPoly::of(w);
        if (!rep_equal_on(rep_matrix(A, A.normal_form(p), N), rep_matrix(A, p, N), N - int(w.size()) - 1)) {
            if (!bad++) wit = A.word_str(w);
        }
    }
    rep.add("nf-vs-product L<=" + std::to_string(L) + " N=" + std::to_string(N), bad == 0,
            bad ? std::to_string(bad) + " mismatches, first " + wit : std::to_string(words.size()) + " words");
    return rep;
}

// rep(f*) is the transpose of rep(f) in the sqrt gauge
inline Report star_rep_check(const Presentation& A, int d, int N) {
    Report rep("star-rep:" + A.name);
    size_t bad = 0;
    std::string wit;
    auto words = A.normal_words_upto(d);
    for (auto& w : words) {
        NCPoly f = NCPoly::of(w);
        RepMatrix a = rep_matrix(A, A.star_of(f), N).transpose(), b = rep_matrix(A, f, N);
        if (!rep_equal_on(a, b, N - d - 1) && !bad++) wit = A.word_str(w);
    }
    rep.add("T(f*)=T(f)^t deg<=" + std::to_string(d), bad == 0, bad ? wit : std::to_string(words.size()) + " words");
    return rep;
}

// ---------------------------------------------------------------------------
// radial q-Laplacian; box := q^2 (1 - zz*)^2 d/dz d/dz*

namespace detail {
struct DiscCalc {
    Presentation A;
    Calculus C;
    Op dz, dzs;
    DiscCalc() : A(catalog("pol_disc")), C(calculus_disc(false, false)) {
        dz = partial_op(A, C, "z");
        dzs = partial_op(A, C, "z'");
    }
};
inline const DiscCalc& disc_calc() {
    static const DiscCalc dc;
    return dc;
}
}  // namespace detail

inline NCPoly y_elem(const Presentation& A) { return NCPoly(1) - A.mul(A.g("z"), A.g("z'")); }

// y^k as an element of pol_disc
inline NCPoly y_power(int k) {
    auto& A = detail::disc_calc().A;
    return A.pow(y_elem(A), k);
}
inline NCPoly y_poly(const std::vector<Scalar>& p) {
    NCPoly r;
    for (size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) r += p[k] * y_power(int(k));
    return r;
}

inline NCPoly box_symbolic(const NCPoly& f) {
    auto& dc = detail::disc_calc();
    NCPoly y = y_elem(dc.A);
    return dc.A.normal_form(Scalar::qpow(2) * (y * y * dc.dz(dc.dzs(f))));
}

// box applied to a polynomial in y, returned as a polynomial in y
inline std::vector<Scalar> box_on_ypoly(const std::vector<Scalar>& p) {
    auto& dc = detail::disc_calc();
    DiscElement e = to_psi(dc.A, box_symbolic(y_poly(p)));
    if (!e.radial()) throw DiscError("box of a radial element is not radial");
    auto it = e.poly.find(0);
    return it == e.poly.end() ? std::vector<Scalar>{} : it->second;
}

// tridiagonal stencil (box psi)(q^{2n}) = a_n psi_{n-1} + b_n psi_n + c_n psi_{n+1},
// fitted at each grid point from the symbolic box on 1, y, y^2
struct BoxStencil {
    std::vector<Scalar> a, b, c;
    int n_max() const { return int(b.size()) - 1; }
};

inline BoxStencil box_stencil(int n_max) {
    if (n_max < 2) throw DiscError("radial_box: n_max must be at least 2");
    static std::vector<std::vector<Scalar>> P;
    if (P.empty())
        for (int k = 0; k < 3; ++k) {
            std::vector<Scalar> yk(k + 1);
            yk[k] = Scalar(1);
            P.push_back(box_on_ypoly(yk));
        }
    static BoxStencil cache;
    if (cache.n_max() >= n_max) {
        BoxStencil s;
        s.a.assign(cache.a.begin(), cache.a.begin() + n_max + 1);
        s.b.assign(cache.b.begin(), cache.b.begin() + n_max + 1);
        s.c.assign(cache.c.begin(), cache.c.begin() + n_max + 1);
        return s;
    }
    BoxStencil s;
    for (int n = 0; n <= n_max; ++n) {
        Scalar Y = Scalar::qpow(2 * n);
        std::vector<Scalar> x{Scalar::qpow(-2) * Y, Y, Scalar::qpow(2) * Y};
        Mat<Scalar> M(3, std::vector<Scalar>(3));
        std::vector<Scalar> rhs(3);
        for (int k = 0; k < 3; ++k) {
            for (int j = 0; j < 3; ++j) M[k][j] = x[j].pow(k);
            rhs[k] = detail::poly_eval(P[k], Y);
        }
        auto abc = solve(M, rhs);
        if (n == 0 && !abc[0].is_zero()) throw DiscError("radial_box: stencil reaches outside the disc at n=0");
        s.a.push_back(abc[0]);
        s.b.push_back(abc[1]);
        s.c.push_back(abc[2]);
    }
    cache = s;
    return s;
}

// last grid row is one-sided (psi_{n_max+1} taken as 0)
inline std::vector<Scalar> radial_box(const std::vector<Scalar>& psi) {
    int n_max = int(psi.size()) - 1;
    BoxStencil s = box_stencil(n_max);
    std::vector<Scalar> out(psi.size());
    for (int n = 0; n <= n_max; ++n) {
        Scalar r = s.b[n] * psi[n];
        if (n > 0) r += s.a[n] * psi[n - 1];
        if (n < n_max) r += s.c[n] * psi[n + 1];
        out[n] = r;
    }
    return out;
}

struct NumStencil {
    std::vector<double> a, b, c;
};
inline NumStencil box_stencil_numeric(int n_max, double q0) {
    BoxStencil s = box_stencil(n_max);
    NumStencil t;
    for (int n = 0; n <= n_max; ++n) {
        t.a.push_back(s.a[n].evald(q0));
        t.b.push_back(s.b[n].evald(q0));
        t.c.push_back(s.c[n].evald(q0));
    }
    return t;
}
inline std::vector<double> radial_box(const std::vector<double>& psi, double q0) {
    int n_max = int(psi.size()) - 1;
    NumStencil s = box_stencil_numeric(n_max, q0);
    std::vector<double> out(psi.size());
    for (int n = 0; n <= n_max; ++n) {
        double r = s.b[n] * psi[n];
        if (n > 0) r += s.a[n] * psi[n - 1];
        if (n < n_max) r += s.c[n] * psi[n + 1];
        out[n] = r;
    }
    return out;
}

// ---------------------------------------------------------------------------
// eigenfunctions

inline Scalar lambda_l(long l) {
    Scalar q2 = Scalar::qpow(2);
    return -((Scalar(1) - Scalar::qpow(int(-2 * l))) * (Scalar(1) - Scalar::qpow(int(2 * l + 2)))) /
           ((Scalar(1) - q2) * (Scalar(1) - q2));
}
inline double lambda_l(double l, double q0) {
    return -(1 - std::pow(q0, -2 * l)) * (1 - std::pow(q0, 2 * l + 2)) / ((1 - q0 * q0) * (1 - q0 * q0));
}

// phi_l(q^{2n}) = 3phi2[q^{-2n}, q^{-2l}, q^{2l+2}; q^2, 0; q^2, q^2], terminating
inline Scalar phi(long l, long n) {
    if (l < 0 || n < 0) throw DiscError("phi: need l, n >= 0");
    Scalar q2 = Scalar::qpow(2);
    return rphi({Scalar::qpow(int(-2 * n)), Scalar::qpow(int(-2 * l)), Scalar::qpow(int(2 * l + 2))}, {q2, Scalar(0)},
                q2, q2, std::min(l, n) + 1);
}
inline std::vector<Scalar> phi_grid(long l, int n_max) {
    std::vector<Scalar> g;
    for (int n = 0; n <= n_max; ++n) g.push_back(phi(l, n));
    return g;
}

// the theta-average of the Poisson kernel P_{l+1}:
// y^{l+1} sum_k (q^{2l+2};q^2)_k^2/(q^2;q^2)_k^2 q^{-2(2l+1)k} psi0[z^k z*^k](y)
inline Scalar phi_kernel_series(long l, long n) {
    Scalar q2 = Scalar::qpow(2), Y = Scalar::qpow(int(2 * n)), s(0);
    for (long k = 0; k <= n; ++k) {
        Scalar a = qpoch(Scalar::qpow(int(2 * l + 2)), q2, k), b = qpoch(q2, q2, k);
        s += a * a / (b * b) * Scalar::qpow(int(-2 * (2 * l + 1) * k)) *
             detail::poly_eval(detail::zzs_poly(int(k)), Y);
    }
    return Y.pow(l + 1) * s;
}

inline Scalar harish_c(long l) {
    if (l < 0) throw DiscError("harish_c: need l >= 0");
    Scalar g = qgamma(l + 1);
    return qgamma(2 * l + 1) / (g * g);
}

using cplx = std::complex<long double>;

namespace detail {
inline cplx cpow_q(long double lnb, cplx x) { return std::exp(x * lnb); }  // b^x
inline cplx cpoch(cplx a, long double b, long n) {
    cplx r(1), x = a;
    for (long j = 0; j < n; ++j, x *= b) r *= cplx(1) - x;
    return r;
}
inline cplx cpoch_inf(cplx a, long double b) {
    cplx r(1), x = a;
    for (int k = 0; k < 100000 && std::abs(x) > 1e-21L; ++k, x *= b) r *= cplx(1) - x;
    return r;
}
}  // namespace detail

// Gamma_b(x) = (b;b)_inf / (b^x;b)_inf (1-b)^{1-x}
inline cplx qgamma_c(cplx x, long double b) {
    long double lnb = std::log(b);
    return detail::cpoch_inf(cplx(b), b) / detail::cpoch_inf(detail::cpow_q(lnb, x), b) *
           std::exp((cplx(1) - x) * std::log1p(-b));
}
inline cplx harish_c(cplx l, double q0) {
    long double b = (long double)q0 * q0;
    cplx g = qgamma_c(l + cplx(1), b);
    return qgamma_c(cplx(2) * l + cplx(1), b) / (g * g);
}

// phi_l(q^{2n}) for complex l, through the kernel series (bounded terms on Re l = -1/2)
inline cplx phi_complex(cplx l, long n, double q0) {
    long double b = (long double)q0 * q0, lnb = std::log(b);
    cplx A = detail::cpow_q(lnb, l + cplx(1));          // q^{2l+2}
    cplx Wk = detail::cpow_q(lnb, -(cplx(2) * l + cplx(1)));  // q^{-2(2l+1)}
    cplx s(0), pa(1), w(1);
    long double pb = 1;
    for (long k = 0; k <= n; ++k) {
        long double pr = 1;
        for (long i = 0; i < k; ++i) pr *= 1 - std::pow(b, (long double)(n - i));
        s += pa * pa / (pb * pb) * w * pr;
        pa *= cplx(1) - A * std::pow(b, (long double)k);
        pb *= 1 - std::pow(b, (long double)(k + 1));
        w *= Wk;
    }
    return detail::cpow_q(lnb, (l + cplx(1)) * (long double)n) * s;
}

// global sign sigma with (box as in the eigenvalue identity) = sigma * radial_box, fixed at l = 1, n = 0
inline int box_sign() {
    auto g = radial_box(phi_grid(1, 3));
    Scalar r = g[0] / (lambda_l(1) * phi(1, 0));
    if (r == Scalar(1)) return 1;
    if (r == Scalar(-1)) return -1;
    throw DiscError("box_sign: calibration ratio is " + r.str());
}

inline Report eigen_check(const std::vector<long>& ls, int n_max) {
    Report rep("disc-eigen");
    int sigma = box_sign();
    rep.add("sigma calibrated at l=1", true, std::to_string(sigma));
    for (long l : ls) {
        auto g = phi_grid(l, n_max + 1);
        auto bg = radial_box(g);
        bool ok = true;
        std::string wit;
        for (int n = 0; n <= n_max; ++n)
            if (bg[n] != Scalar(sigma) * lambda_l(l) * g[n]) {
                ok = false;
                wit = "n=" + std::to_string(n);
                break;
            }
        rep.add("box phi_" + std::to_string(l) + " = sigma lambda phi, n<=" + std::to_string(n_max), ok, wit);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// spectral bounds of the symmetrized radial dbar* dbar = -sigma box

namespace detail {
// number of eigenvalues < x of the symmetric tridiagonal (d, e)
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    int cnt = 0;
    double t = 1;
    for (size_t i = 0; i < d.size(); ++i) {
        double ee = i ? e[i - 1] * e[i - 1] : 0.0;
        t = d[i] - x - (i ? ee / t : 0.0);
        if (t == 0) t = 1e-300;
        if (t < 0) ++cnt;
    }
    return cnt;
}
inline double tridiag_eig(const std::vector<double>& d, const std::vector<double>& e, int k) {
    double lo = 1e300, hi = -1e300;
    for (size_t i = 0; i < d.size(); ++i) {
        double r = (i ? std::fabs(e[i - 1]) : 0) + (i < e.size() ? std::fabs(e[i]) : 0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) > k) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}
}  // namespace detail

struct SpectralBounds {
    double min_eig, max_eig, lower, upper;
};

inline SpectralBounds spectral_bounds(int N, double q0) {
    if (N < 10) throw DiscError("spectral_bounds: N must be at least 10");
    int sigma = box_sign();
    NumStencil s = box_stencil_numeric(N, q0);
    std::vector<double> d(N), e(N - 1);
    for (int n = 0; n < N; ++n) d[n] = -sigma * s.b[n];
    for (int n = 0; n + 1 < N; ++n) {
        double p = s.c[n] * s.a[n + 1];
        if (!(p > 0)) throw DiscError("spectral_bounds: stencil is not symmetrizable");
        e[n] = -sigma * std::copysign(std::sqrt(p), s.c[n]);
    }
    return {detail::tridiag_eig(d, e, 0), detail::tridiag_eig(d, e, N - 1), 1 / ((1 + q0) * (1 + q0)),
            1 / ((1 - q0) * (1 - q0))};
}

// ---------------------------------------------------------------------------
// Green kernel G = -sum_{m>=1} (q^{-2}-1)/(q^{-2m}-1) G_m in the Fock representation
// of Pol^op (x) Pol; G_m = A^m B^m with A = eta (1 - z* zeta)^{-1}, B = y (1 - z zeta*)^{-1}

namespace detail {
// diagonal entry <(j,k)| A^m B^m |(j,k)> on the chain (j-d, k-d), d = 0..min(j,k)
inline std::vector<double> green_diag(int j, int k, int M, int D, double q0) {
    int L = std::min(j, k);
    double b = q0 * q0;
    auto sq = [&](int i) { return std::sqrt(1 - std::pow(b, i)); };
    // chain index d <-> state (j-d, k-d)
    std::vector<std::vector<double>> Am(L + 1, std::vector<double>(L + 1, 0)), Bm = Am;
    // lowering z zeta*: (a,b) -> (a-1,b-1), factor sqrt(1-q^{2a}) sqrt(1-q^{2b})
    std::vector<std::vector<double>> low(L + 1, std::vector<double>(L + 1, 0)), up = low;
    for (int d = 0; d < L; ++d) {
        int a = j - d, c = k - d;
        low[d + 1][d] = sq(a) * sq(c);
        up[d][d + 1] = sq(a) * sq(c);
    }
    auto mul = [&](const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& y) {
        std::vector<std::vector<double>> r(L + 1, std::vector<double>(L + 1, 0));
        for (int i = 0; i <= L; ++i)
            for (int t = 0; t <= L; ++t)
                if (x[i][t] != 0)
                    for (int s = 0; s <= L; ++s) r[i][s] += x[i][t] * y[t][s];
        return r;
    };
    std::vector<std::vector<double>> Sl(L + 1, std::vector<double>(L + 1, 0)), Su = Sl, P = Sl, Q = Sl;
    for (int i = 0; i <= L; ++i) P[i][i] = Q[i][i] = 1;
    for (int e = 0; e <= std::min(D, L); ++e) {
        for (int i = 0; i <= L; ++i)
            for (int s = 0; s <= L; ++s) Sl[i][s] += P[i][s], Su[i][s] += Q[i][s];
        P = mul(low, P);
        Q = mul(up, Q);
    }
    for (int i = 0; i <= L; ++i)
        for (int s = 0; s <= L; ++s) {
            Bm[i][s] = std::pow(b, j - i) * Sl[i][s];
            Am[i][s] = std::pow(b, k - i) * Su[i][s];
        }
    std::vector<double> out;
    std::vector<std::vector<double>> Ap = Am, Bp = Bm;
    for (int m = 1; m <= M; ++m) {
        out.push_back(mul(Ap, Bp)[0][0]);
        Ap = mul(Ap, Am);
        Bp = mul(Bp, Bm);
    }
    return out;
}
}  // namespace detail

// u(q^{2j}) = (1-q^2) sum_k q^{-2k} psi_f(q^{2k}) T(G)_{(j,k),(j,k)}
inline std::vector<double> green_apply(const DiscElement& f, int M, int D, int n_max, double q0) {
    if (!f.radial() || !f.finite()) throw DiscError("green_apply: input must be radial and finite");
    std::vector<double> u(n_max + 1, 0.0);
    auto it = f.fin.find(0);
    if (it == f.fin.end()) return u;
    double b = q0 * q0;
    for (int j = 0; j <= n_max; ++j) {
        double s = 0;
        for (auto& [k, v] : it->second) {
            auto gd = detail::green_diag(j, k, M, D, q0);
            double g = 0;
            for (int m = 1; m <= M; ++m) g -= (1 / b - 1) / (std::pow(b, -m) - 1) * gd[m - 1];
            s += std::pow(b, -k) * v.evald(q0) * g;
        }
        u[j] = (1 - b) * s;
    }
    return u;
}

// || sigma radial_box(u) - f ||_inf on interior points
inline double green_residual(const DiscElement& f, int M, int D, int n_max, double q0) {
    auto u = green_apply(f, M, D, n_max, q0);
    auto bu = radial_box(u, q0);
    int sigma = box_sign();
    double r = 0;
    for (int n = 0; n < n_max; ++n) r = std::max(r, std::fabs(sigma * bu[n] - f.value(0, n).evald(q0)));
    return r;
}

// ---------------------------------------------------------------------------
// Fourier transform on radial functions: F u(rho) = nu(phi_{-1/2-i rho} u),
// inverse u(y) = int phi_{-1/2+i rho}(y) Fu(rho) d sigma(rho) on [0, pi/h], h = -2 ln q

inline long double plancherel_density(long double rho, double q0) {
    long double h = -2 * std::log((long double)q0), eh = std::exp(h);
    cplx l(-0.5L, rho), lb(-0.5L, -rho);
    cplx c1 = harish_c(l, q0), c2 = harish_c(lb, q0);
    return (1 / (2 * std::numbers::pi_v<long double>) * h * eh / (eh - 1) / (c1 * c2)).real();
}

struct FourierResult {
    double residual = 0;
    std::vector<std::pair<int, double>> history;  // (points, residual), coarse to fine
    bool decreasing = false;
    double max_conj_defect = 0;   // |c(-1/2-i rho) - conj c(-1/2+i rho)|
    double min_density = 0;       // over interior nodes
};

inline double fourier_roundtrip(const DiscElement& f, double q0, int n_max, int P) {
    if (!f.radial() || !f.finite()) throw DiscError("fourier_check: input must be radial and finite");
    long double b = (long double)q0 * q0, h = -2 * std::log((long double)q0), T = std::numbers::pi_v<long double> / h;
    std::map<int, long double> fv;
    auto it = f.fin.find(0);
    if (it != f.fin.end())
        for (auto& [n, v] : it->second) fv[n] = v.evald(q0);
    std::vector<cplx> u(n_max + 1, cplx(0));
    // trapezoid on [0, T]; the density vanishes at both ends
    for (int i = 1; i < P; ++i) {
        long double rho = T * i / P, w = T / P * plancherel_density(rho, q0);
        cplx F(0);
        for (auto& [n, v] : fv)
            F += (1 - b) * std::pow(b, (long double)-n) * v * phi_complex(cplx(-0.5L, -rho), n, q0);
        for (int n = 0; n <= n_max; ++n) u[n] += w * F * phi_complex(cplx(-0.5L, rho), n, q0);
    }
    double r = 0;
    for (int n = 0; n <= n_max; ++n) {
        long double fn = fv.count(n) ? fv[n] : 0;
        r = std::max(r, double(std::abs(u[n] - fn)));
    }
    return r;
}

inline FourierResult fourier_check(const DiscElement& f, double q0, int n_max, int P, int levels = 3) {
    FourierResult R;
    for (int k = levels - 1; k >= 0; --k) {
        int p = P >> k;
        if (p < 2) continue;
        R.history.push_back({p, fourier_roundtrip(f, q0, n_max, p)});
    }
    R.residual = R.history.back().second;
    R.decreasing = true;
    for (size_t i = 1; i < R.history.size(); ++i)
        if (!(R.history[i].second < R.history[i - 1].second)) R.decreasing = false;
    long double h = -2 * std::log((long double)q0), T = std::numbers::pi_v<long double> / h;
    R.min_density = 1e300;
    for (int i = 1; i < 64; ++i) {
        long double rho = T * i / 64;
        cplx a = harish_c(cplx(-0.5L, rho), q0), bb = harish_c(cplx(-0.5L, -rho), q0);
        R.max_conj_defect = std::max(R.max_conj_defect, double(std::abs(bb - std::conj(a)) / std::abs(a)));
        R.min_density = std::min(R.min_density, double(plancherel_density(rho, q0)));
    }
    return R;
}

inline DiscElement f0_element() {
    DiscElement e;
    e.fin[0][0] = Scalar(1);
    return e;
}

// ---------------------------------------------------------------------------
// invariant integral checks

inline Report nu_invariance_check(int d) {
    Report rep("nu-invariance");
    ActionTable T = disc_action("fun_disc");
    auto& A = T.A;
    int f0 = A.at("f0");
    size_t n = 0, bad = 0;
    std::string wit;
    for (auto& w : A.normal_words_upto(d)) {
        if (w.find(Letter(f0)) == Word::npos) continue;
        NCPoly f = NCPoly::of(w);
        Scalar nf = inv_integral(to_psi(A, f));
        for (auto& g : T.generators()) {
            Scalar eps = (g.kind == HK::E || g.kind == HK::F) ? Scalar(0) : Scalar(1);
            ++n;
            if (inv_integral(to_psi(A, act(g, f, T))) != eps * nf && !bad++) wit = hopf_name(g) + " on " + A.word_str(w);
        }
    }
    rep.add("nu(xi f) = eps(xi) nu(f), deg<=" + std::to_string(d), bad == 0,
            bad ? wit : std::to_string(n) + " pairs");
    return rep;
}

inline Report nu_positivity_check(int jk, const std::vector<double>& q0s) {
    Report rep("nu-positivity");
    Presentation A = catalog("fun_disc");
    for (int j = 0; j <= jk; ++j)
        for (int k = 0; k <= jk; ++k) {
            NCPoly f = A.mul({A.pow(A.g("z"), j), A.g("f0"), A.pow(A.g("z'"), k)});
            Scalar v = inv_integral(to_psi(A, A.mul(A.star_of(f), f)));
            bool ok = true;
            for (double q0 : q0s) ok = ok && v.evald(q0) > 0;
            rep.add("nu(f* f) > 0 for z^" + std::to_string(j) + " f0 z*^" + std::to_string(k), ok, v.str());
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Green formula on the disc, radial part: for psi = dz psi_{-1}(y) z*,
// dbar psi = dz f(y) dz* up to the graded sign, mu(f) = psi_{-1}(0)

inline std::vector<Scalar> stokes_density(const std::vector<Scalar>& p) {
    // f(y) = p(y) - q^{-2} (p(q^{-2}y) - p(y)) / (q^{-2}y - y) (1 - y)
    std::vector<Scalar> dq;  // difference quotient, coefficient of y^{k-1}: p_k (q^{-2k}-1)/(q^{-2}-1)
    for (size_t k = 1; k < p.size(); ++k)
        dq.push_back(p[k] * (Scalar::qpow(-2 * int(k)) - Scalar(1)) / (Scalar::qpow(-2) - Scalar(1)));
    std::vector<Scalar> f = p;
    detail::poly_addmul(f, detail::poly_mul(dq, {Scalar(1), Scalar(-1)}), -Scalar::qpow(-2));
    detail::trim(f);
    return f;
}

inline Report stokes_radial_check(const std::vector<Scalar>& p) {
    Report rep("stokes");
    std::vector<Scalar> f = stokes_density(p);
    // engine: d(dz p(y) z*) in the forms-left calculus equals c dz dz* g(y)
    Calculus C = calculus_disc(false, false);
    auto& F = C.forms;
    auto& dc = detail::disc_calc();
    NCPoly py = transfer(y_poly(p), dc.A, F);
    NCPoly form = C.d(F.g("dz") * py * F.g("z'"));
    // strip the leading dz dz*
    NCPoly g;
    int dz = F.at("dz"), dzs = F.at("dz'");
    bool shape = true;
    for (auto& [w, c] : form) {
        if (w.size() < 2 || w[0] != dz || w[1] != dzs) {
            shape = false;
            break;
        }
        g.add(w.substr(2), c);
    }
    DiscElement ge = to_psi(dc.A, transfer(g, F, dc.A));
    std::vector<Scalar> gy = ge.poly.count(0) ? ge.poly.at(0) : std::vector<Scalar>{};
    std::vector<Scalar> negf;
    for (auto& c : f) negf.push_back(-c);
    detail::trim(gy);
    rep.add("dbar(dz p z*) = -dz f dz*", shape && ge.radial() && gy == negf, shape ? "" : "not of the form dz dz* g");
    // sum_n f(q^{2n}) q^{2n} = mu(f)/(1-q^2)
    Scalar s = jackson(f) / (Scalar(1) - Scalar::qpow(2));
    Scalar p0 = p.empty() ? Scalar(0) : p[0];
    if (p0.is_zero())
        rep.add("sum f(q^2n) q^2n = 0", s.is_zero(), s.str());
    // interior side: -2 pi i mu(g) = 2 pi i mu(f); boundary side: 2 pi i (z p(y) z*)|_{y=0} = 2 pi i p(0)
    rep.add("interior = boundary (units of 2 pi i)", jackson(f) == p0, jackson(f).str() + " vs " + p0.str());
    return rep;
}

// ---------------------------------------------------------------------------
// filtration dimensions of the Clifford algebra against the forms algebra.
// Ranks are taken over Z/p at a random point of the q-line.

namespace detail {
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return std::uint64_t((unsigned __int128)a * b % kPrime);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}
inline std::uint64_t zpoly_mod(const ZPoly& p, std::uint64_t v0) {
    std::uint64_t r = 0;
    for (size_t i = p.c.size(); i-- > 0;) {
        std::uint64_t c = mpz_fdiv_ui(p.c[i].get_mpz_t(), kPrime);
        r = (mulmod(r, v0) + c) % kPrime;
    }
    return r;
}
inline std::uint64_t scalar_mod(const Scalar& s, std::uint64_t v0) {
    std::uint64_t d = zpoly_mod(s.den(), v0);
    if (!d) throw DiscError("evaluation point hits a pole");
    return mulmod(zpoly_mod(s.num(), v0), powmod(d, kPrime - 2));
}

// incremental row echelon over Z/p, sparse rows keyed by column
struct ModBasis {
    std::map<int, std::map<int, std::uint64_t>> rows;  // pivot -> row (pivot entry 1)
    bool insert(std::map<int, std::uint64_t> v) {
        while (!v.empty()) {
            auto [c, x] = *v.begin();
            auto it = rows.find(c);
            if (it == rows.end()) {
                std::uint64_t inv = powmod(x, kPrime - 2);
                for (auto& [k, y] : v) y = mulmod(y, inv);
                rows[c] = std::move(v);
                return true;
            }
            for (auto& [k, y] : it->second) {
                std::uint64_t t = (v[k] + kPrime - mulmod(x, y)) % kPrime;
                if (t) v[k] = t;
                else v.erase(k);
            }
        }
        return false;
    }
    size_t rank() const { return rows.size(); }
};
}  // namespace detail

struct CliffordDim {
    int level, degree;
    long clifford, forms;
};

// Gr_k at polynomial degree <= D: normal words with exactly k differentials and at most
// D function letters, modulo (truncated ideal + everything of lower differential degree)
inline std::vector<CliffordDim> clifford_graded_dims(int Dmax, int bound = 4) {
    if (Dmax > 4) throw DiscError("clifford_graded_dims: Dmax <= 4");
    std::vector<CliffordDim> out;
    std::uint64_t v0 = 1234567891ULL;
    auto dims = [&](const std::string& name) {
        Presentation A = catalog(name);
        int ng = A.ngens();
        std::vector<bool> isform(ng);
        for (int g = 0; g < ng; ++g) isform[g] = A.gens[g].odd;
        auto fdeg = [&](const Word& w) {
            int k = 0;
            for (Letter l : w) k += isform[l];
            return k;
        };
        // columns: normal words met so far
        std::map<Word, int> col;
        std::vector<Word> cols;
        auto colof = [&](const Word& w) {
            auto it = col.find(w);
            if (it != col.end()) return it->second;
            col[w] = int(cols.size());
            cols.push_back(w);
            return int(cols.size()) - 1;
        };
        // ideal elements nf(u r v), |u| + |v| <= bound, at most 4 differentials
        std::vector<NCPoly> ideal;
        std::vector<Word> pads{Word()}, cur{Word()};
        for (int len = 1; len <= bound; ++len) {
            std::vector<Word> nx;
            for (auto& w : cur)
                for (int g = 0; g < ng; ++g) nx.push_back(w + Word(1, Letter(g)));
            pads.insert(pads.end(), nx.begin(), nx.end());
            cur.swap(nx);
        }
        for (auto& r : A.relations) {
            int rf = 0;
            for (auto& [w, c] : r) rf = std::max(rf, fdeg(w));
            for (auto& u : pads)
                for (auto& v : pads) {
                    if (int(u.size() + v.size()) > bound || fdeg(u) + fdeg(v) + rf > 4) continue;
                    NCPoly e = A.normal_form(NCPoly::of(u) * r * NCPoly::of(v));
                    if (!e.is_zero()) ideal.push_back(e);
                }
        }
        std::vector<long> res;
        for (int k = 0; k <= 2; ++k) {
            detail::ModBasis B;
            for (auto& e : ideal) {
                std::map<int, std::uint64_t> v;
                for (auto& [w, c] : e)
                    if (fdeg(w) >= k) {
                        std::uint64_t x = detail::scalar_mod(c, v0);
                        if (x) v[colof(w)] = x;
                    }
                B.insert(v);
            }
            size_t base = B.rank();
            for (int D = 0; D <= Dmax; ++D) {
                detail::ModBasis C = B;
                for (auto& w : A.normal_words_upto(D + k)) {
                    if (fdeg(w) != k || int(w.size()) - k > D) continue;
                    C.insert({{colof(w), 1}});
                }
                res.push_back(long(C.rank() - base));
            }
        }
        return res;
    };
    auto cl = dims("clifford_disc"), om = dims("omega_disc");
    for (int k = 0; k <= 2; ++k)
        for (int D = 0; D <= Dmax; ++D) out.push_back({k, D, cl[k * (Dmax + 1) + D], om[k * (Dmax + 1) + D]});
    return out;
}

// the overlap dz* dz dz in the Clifford algebra, as a normal form
inline NCPoly clifford_overlap_defect() {
    Presentation A = catalog("clifford_disc");
    NCPoly left = A.normal_form(A.mul(A.g("dz'"), A.g("dz")) * A.g("dz"));
    NCPoly right = A.normal_form(A.g("dz'") * A.mul(A.g("dz"), A.g("dz")));
    return left - right;
}

}  // namespace qdom

#endif
