#ifndef QDOM_SUITES_HPP
#define QDOM_SUITES_HPP

// Named verification suites shared by the CLI and the acceptance binary.

#include "berezin.hpp"
#include "penrose.hpp"
#include "qdisc.hpp"
#include "qmatrix.hpp"
#include "qspecial.hpp"
#include "su22.hpp"
#include "uqact.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qdom {

// unset values (-1) mean the acceptance defaults
struct SuiteOptions {
    double q0 = 0.5;
    int n = -1, m = -1, deg = -1, order = -1;
    std::vector<long> ls;  // disc-eigen
    int get_n(int d) const { return n < 0 ? d : n; }
    int get_m(int d) const { return m < 0 ? d : m; }
    int get_deg(int d) const { return deg < 0 ? d : deg; }
    int get_order(int d) const { return order < 0 ? d : order; }
};

namespace detail {
inline std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

inline bool big_matrix(const std::string& name) {
    for (auto n : {"cmat", "polmat", "polmat_alt", "pmn", "fun_mat", "lambda_mat", "dmat", "pol_mat2", "omega_mat2",
                   "mat24"})
        if (name == n) return true;
    return false;
}
}  // namespace detail

inline Report qspecial_check(int D) {
    Report rep("qspecial-identities");
    Scalar q2 = Scalar::qpow(2);
    // Jackson: int_0^1 t^{b-1} (t q^2; q^2)_{a-1} d t = G(b) G(a) / G(a+b)
    bool beta = true;
    for (int a = 1; a <= D; ++a)
        for (int b = 1; b <= D; ++b) {
            std::vector<Scalar> p(b, Scalar(0));
            p[b - 1] = Scalar(1);
            for (int j = 1; j < a; ++j) {
                std::vector<Scalar> nx(p.size() + 1, Scalar(0));
                Scalar c = Scalar::qpow(2 * j);
                for (size_t k = 0; k < p.size(); ++k) {
                    nx[k] += p[k];
                    nx[k + 1] -= c * p[k];
                }
                p.swap(nx);
            }
            if (jackson(p) != qgamma(b) * qgamma(a) / qgamma(a + b)) beta = false;
        }
    rep.add("Jackson q-beta, 1 <= alpha, beta <= " + std::to_string(D), beta);
    // Gaussian binomials against the quantum plane u1 u2 = q u2 u1
    const Presentation& P = catalog("qplane4");
    bool gb = true;
    NCPoly a = P.g("u1"), b = P.g("u2"), s = a + b;
    for (int k = 0; k <= D + 1; ++k) {
        NCPoly lhs = P.pow(s, k), rhs;
        for (int j = 0; j <= k; ++j) rhs += gauss_binom(k, j) * P.mul(P.pow(b, j), P.pow(a, k - j));
        if (lhs != rhs) gb = false;
    }
    rep.add("(a+b)^k = sum [k;j] b^j a^{k-j}, ab = q ba, k <= " + std::to_string(D + 1), gb);
    rep.add("[2;1] = 1 + q, [4;2](1) = 6", gauss_binom(2, 1) == Scalar(1) + Scalar::q() &&
                                                std::fabs(gauss_binom(4, 2).evald(1.0) - 6) < 1e-12);
    rep.add("(a;q^2)_{-1} = 1/(1 - a q^-2) at a = q^3",
            qpoch(Scalar::qpow(3), q2, -1) == (Scalar(1) - Scalar::qpow(1)).inv());
    rep.add("Gamma(1) = Gamma(2) = 1, Gamma(3) = 1 + q^2",
            qgamma(1).is_one() && qgamma(2).is_one() && qgamma(3) == Scalar(1) + q2);
    // q-binomial theorem, numeric
    double worst = 0;
    double b0 = 0.25;
    for (double x : {-0.5, -0.3, 0.1, 0.3, 0.5})
        for (double av : {-0.9, 0.2, 0.7, 1.5}) {
            double lhs = rphi_numeric({av}, {}, b0, x, 80), rhs = qpoch_inf(av * x, b0) / qpoch_inf(x, b0);
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
    rep.add("q-binomial theorem at q0 = 0.5, |x| <= 0.5, N = 80, error < 1e-10", worst < 1e-10, detail::fmt(worst));
    auto jn = jackson_numeric([](double t) { return t * t; }, b0, 200);
    rep.add("numeric Jackson of t^2 = (1-b)/(1-b^3)", !jn.divergent && std::fabs(jn.value - 0.75 / (1 - b0 * b0 * b0)) < 1e-12);
    return rep;
}

inline Report confluence_suite(int L) {
    Report rep("confluence");
    std::vector<std::pair<std::string, CatParams>> list;
    for (auto& n : catalog_names()) list.push_back({n, CatParams{}});
    CatParams fr;
    fr.forms_right = true;
    list.push_back({"omega_disc", fr});
    CatParams one{1, 1};
    list.push_back({"polmat", one});
    CatParams f0;
    f0.f0 = true;
    list.push_back({"polmat", f0});
    for (auto& [name, p] : list) {
        int l = detail::big_matrix(name) ? std::min(L, 3) : L;
        std::string tag = name + (p.forms_right ? "(forms right)" : "") + (p.f0 ? "(f0)" : "") +
                          (p.m == 1 ? "(1,1)" : "") + " L=" + std::to_string(l);
        try {
            Report r = check_overlaps(catalog(name, p), l);
            rep.add(tag, r.ok(), r.first_failure());
        } catch (std::exception& e) {
            rep.add(tag, false, e.what());
        }
    }
    return rep;
}

inline Report hopf_suite(int d) {
    Report rep("hopf-consistency");
    std::vector<std::pair<std::string, CatParams>> list{{"pol_disc", {}}, {"fun_disc", {}}, {"omega_disc", {}}};
    CatParams fr;
    fr.forms_right = true;
    fr.f0 = true;
    list.push_back({"omega_disc", fr});
    for (auto n : {"cmat", "polmat", "fun_mat", "fock:cmat", "fock:polmat", "fock:pmn"}) list.push_back({n, {}});
    for (auto& [name, p] : list) {
        ActionTable T = action_table(name, p);
        int dd = T.N >= 4 ? std::min(d, 3) : d;
        std::string tag = T.name + (p.forms_right ? "(forms right, f0)" : "") + " deg " + std::to_string(dd);
        Report a = check_dj_relations(T, dd);
        rep.add(tag + ": Drinfeld-Jimbo", a.ok(), a.first_failure());
        Report b = check_module_algebra(T, dd);
        rep.add(tag + ": module algebra", b.ok(), b.first_failure());
        if (T.A.has_star()) {
            Report c = check_involution_compat(T, dd);
            rep.add(tag + ": involution", c.ok(), c.first_failure());
        }
    }
    return rep;
}

inline Report disc_eigen_suite(const std::vector<long>& ls, int n_max) {
    Report rep("disc-eigen");
    rep.merge(eigen_check(ls, n_max));
    rep.add("lambda(1) = 1 + q^-2", lambda_l(1) == Scalar(1) + Scalar::qpow(-2));
    return rep;
}

inline Report disc_integrals_suite() {
    Report rep("disc-integrals");
    Presentation F = catalog("fun_disc"), P = catalog("pol_disc");
    DiscElement f0 = to_psi(F, F.g("f0"));
    Scalar a1 = Scalar(1) - Scalar::qpow(2);
    rep.add("mu(f0) = nu(f0) = 1 - q^2", lebesgue(f0) == a1 && inv_integral(f0) == a1);
    rep.merge(nu_invariance_check(4));
    rep.merge(nu_positivity_check(3, {0.3, 0.5, 0.9}));
    for (auto* A : {&P, &F}) {
        Report r = rep_oracle_check(*A, 5, 32);
        rep.add(A->name + ": normal forms = T-matrix products, N = 32, length <= 5", r.ok(), r.first_failure());
    }
    Report s = star_rep_check(F, 4, 16);
    rep.add("T(f*) = T(f)^*", s.ok(), s.first_failure());
    return rep;
}

inline Report spectral_suite(int N, double q0) {
    Report rep("spectral-bounds");
    auto b = spectral_bounds(N, q0);
    std::string w = "[" + detail::fmt(b.min_eig) + ", " + detail::fmt(b.max_eig) + "] in [" + detail::fmt(b.lower) +
                    ", " + detail::fmt(b.upper) + "]";
    rep.add("eigenvalues of dbar* dbar within the bounds, N = " + std::to_string(N),
            b.min_eig >= b.lower - 1e-8 && b.max_eig <= b.upper + 1e-8, w);
    rep.add("extremes within 5% of the bounds",
            std::fabs(b.min_eig - b.lower) <= 0.05 * b.lower && std::fabs(b.max_eig - b.upper) <= 0.05 * b.upper, w);
    return rep;
}

inline Report green_suite(int M, int D, double q0) {
    Report rep("green-inverse");
    double r = green_residual(f0_element(), M, D, 30, q0);
    rep.add("|box(G * f0) - f0| < 1e-6, M = " + std::to_string(M) + ", D = " + std::to_string(D), r < 1e-6,
            detail::fmt(r));
    return rep;
}

inline Report fourier_suite(int n_max, int P, double q0) {
    Report rep("fourier");
    auto R = fourier_check(f0_element(), q0, n_max, P, 2);
    std::string h;
    for (auto& [p, r] : R.history) h += std::to_string(p) + ":" + detail::fmt(r) + " ";
    rep.add("round trip residual < 1e-3 at " + std::to_string(P) + " points", R.residual < 1e-3, h);
    rep.add("residual decreases from " + std::to_string(P / 2) + " to " + std::to_string(P) + " points", R.decreasing, h);
    auto C = fourier_check(f0_element(), q0, n_max, 32, 4);
    h.clear();
    for (auto& [p, r] : C.history) h += std::to_string(p) + ":" + detail::fmt(r) + " ";
    rep.add("residual decreases over 4, 8, 16, 32 points", C.decreasing, h);
    rep.add("c(-1/2 - i rho) = conj c(-1/2 + i rho)", R.max_conj_defect < 1e-12, detail::fmt(R.max_conj_defect));
    rep.add("Plancherel density positive", R.min_density > 0, detail::fmt(R.min_density));
    return rep;
}

inline Report stokes_suite(int D) {
    Report rep("stokes");
    for (int k = 0; k <= D; ++k) {
        std::vector<Scalar> p(k + 1, Scalar(0));
        p[k] = Scalar(1);
        rep.merge(stokes_radial_check(p), "y^" + std::to_string(k) + ": ");
    }
    rep.merge(stokes_radial_check({Scalar(2), Scalar(3), Scalar(1)}), "2+3y+y^2: ");
    return rep;
}

// total (polynomial + form) degree <= D
inline Report clifford_suite(int D) {
    Report rep("clifford-dims");
    auto dims = clifford_graded_dims(D, 4);
    std::string beyond;
    for (auto& c : dims) {
        std::string tag = "Gr_" + std::to_string(c.level) + " at polynomial degree <= " + std::to_string(c.degree);
        std::string w = std::to_string(c.clifford) + " vs " + std::to_string(c.forms);
        if (c.level + c.degree <= D) rep.add(tag, c.clifford == c.forms, w);
        else if (c.clifford != c.forms) beyond += tag + ": " + w + "; ";
    }
    rep.add("dz* dz dz overlap defect is (1-q^2)(1-zz*)^2 dz (total degree 5)",
            clifford_overlap_defect() != NCPoly(), beyond.empty() ? "" : "beyond range: " + beyond);
    return rep;
}

inline Report berezin_assoc_suite(int deg, int N) {
    Report rep("berezin-assoc");
    rep.merge(berezin_assoc_check(deg, N));
    rep.merge(berezin_basics_check(N));
    rep.merge(berezin_covariance_check(std::min(deg, 2), std::min(N, 2)));
    return rep;
}

inline Report fock_two_ways_suite(int m, int n, int d) {
    Report rep("fock-two-ways");
    rep.merge(partial_relations_check(m, n, d));
    rep.merge(fock_two_ways_check(m, n, d));
    return rep;
}

inline Report fock_invariance_suite(int m, int n, int d) {
    Report rep("fock-invariance");
    rep.merge(fock_invariance_check(m, n, d));
    Report bad = fock_invariance_check(m, n, std::min(d, 1), true);
    rep.add("corrupted involution is detected", !bad.ok());
    rep.merge(fock_adjoint_check(m, n, d));
    return rep;
}

inline Report hidden_suite(int m, int n, int d, int d_disc) {
    Report rep("hidden-symmetry");
    rep.merge(hidden_symmetry_check(1, 1, d_disc), "disc: ");
    rep.merge(hidden_symmetry_check(m, n, d), std::to_string(m) + "x" + std::to_string(n) + ": ");
    return rep;
}

inline Report penrose_lowest_suite(int K) {
    Report rep("penrose-lowest");
    rep.merge(penrose_lowest_check(K));
    rep.merge(penrose_eta_check(4));
    return rep;
}

using SuiteFn = std::function<Report(const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    using O = const SuiteOptions&;
    static const std::vector<std::pair<std::string, SuiteFn>> t{
        {"confluence", [](O o) { return confluence_suite(o.get_deg(4)); }},
        {"hopf-consistency", [](O o) { return hopf_suite(o.get_deg(4)); }},
        {"disc-eigen", [](O o) { return disc_eigen_suite(o.ls.empty() ? std::vector<long>{1, 2, 3} : o.ls, o.get_n(8)); }},
        {"disc-integrals", [](O) { return disc_integrals_suite(); }},
        {"spectral-bounds", [](O o) { return spectral_suite(o.get_n(200), o.q0); }},
        {"green-inverse", [](O o) { return green_suite(o.get_m(40), o.get_n(40), o.q0); }},
        {"fourier", [](O o) { return fourier_suite(o.get_n(60), o.get_order(400), o.q0); }},
        {"berezin-assoc", [](O o) { return berezin_assoc_suite(o.get_deg(4), o.get_order(3)); }},
        {"berezin-closed", [](O o) { return berezin_closed_check(o.get_deg(3), o.get_order(2)); }},
        {"berezin-cn", [](O o) { return berezin_cn_check(o.get_n(5), o.get_order(4)); }},
        {"bargmann", [](O o) { return bargmann_check(o.get_m(5)); }},
        {"fock-two-ways", [](O o) { return fock_two_ways_suite(o.get_m(2), o.get_n(2), o.get_deg(3)); }},
        {"fock-invariance", [](O o) { return fock_invariance_suite(o.get_m(2), o.get_n(2), o.get_deg(2)); }},
        {"hidden-symmetry", [](O o) { return hidden_suite(o.get_m(2), o.get_n(2), o.get_deg(3), 6); }},
        {"minors-y", [](O o) { return minors_y_check(o.get_m(2), o.get_n(2)); }},
        {"bergman-kernel", [](O o) { return bergman_check(o.get_deg(8), o.get_order(4)); }},
        {"su22-bq", [](O o) { return su22_bq_check(o.get_deg(4)); }},
        {"su22-ladder", [](O o) { return su22_ladder_check(o.get_deg(3)); }},
        {"su22-schur", [](O o) { return su22_schur_check(o.get_deg(6)); }},
        {"su22-yspec", [](O o) { return su22_yspec_check(o.get_deg(3)); }},
        {"penrose-aux", [](O o) { return penrose_aux_check(o.get_order(8)); }},
        {"penrose-lowest", [](O o) { return penrose_lowest_suite(o.get_order(8)); }},
        {"stokes", [](O o) { return stokes_suite(o.get_deg(4)); }},
        {"clifford-dims", [](O o) { return clifford_suite(o.get_deg(4)); }},
        {"qspecial-identities", [](O o) { return qspecial_check(o.get_deg(5)); }},
    };
    return t;
}

inline std::vector<std::string> list_suites() {
    std::vector<std::string> r;
    for (auto& [n, f] : suite_table()) r.push_back(n);
    return r;
}

inline Report run_suite(const std::string& name, const SuiteOptions& o = {}) {
    for (auto& [n, f] : suite_table())
        if (n == name) {
            Report r = f(o);
            r.suite = name;
            return r;
        }
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace qdom

#endif
