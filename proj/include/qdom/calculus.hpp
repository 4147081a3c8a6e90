#ifndef QDOM_CALCULUS_HPP
#define QDOM_CALCULUS_HPP

#include "catalog.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qdom {

// Rewrite p from presentation `from` into `to`, matching generators by name.
inline NCPoly transfer(const NCPoly& p, const Presentation& from, const Presentation& to) {
    std::vector<int> map(from.ngens(), -1);
    for (int i = 0; i < from.ngens(); ++i) map[i] = to.index(from.gens[i].name);
    NCPoly r;
    for (auto& [w, c] : p) {
        Word v;
        for (Letter l : w) {
            if (map[l] < 0) throw CatalogError("generator " + from.gens[l].name + " missing in " + to.name);
            v.push_back(Letter(map[l]));
        }
        r.add(v, c);
    }
    return r;
}

inline NCPoly rename(const NCPoly& p, const Presentation& from, const Presentation& to,
                     const std::map<std::string, std::string>& names) {
    NCPoly r;
    for (auto& [w, c] : p) {
        Word v;
        for (Letter l : w) {
            auto it = names.find(from.gens[l].name);
            v.push_back(Letter(to.at(it == names.end() ? from.gens[l].name : it->second)));
        }
        r.add(v, c);
    }
    return r;
}

// First-order calculus: an algebra of forms holding the functions and their
// differentials, with d extended by the graded Leibniz rule.
struct Calculus {
    Presentation forms;
    bool right = false;            // differentials collected on the right
    std::vector<NCPoly> dval;      // d of each generator; empty for differentials
    std::vector<int> diff_of;      // differential generator -> function generator, or -1

    bool is_diff(int g) const { return diff_of[g] >= 0; }

    NCPoly d(const NCPoly& p) const {
        NCPoly r;
        for (auto& [w, c] : p) {
            int sign = 1;
            for (size_t k = 0; k < w.size(); ++k) {
                // d(dz) = 0; differentials only flip the sign
                if (dval[w[k]].is_zero() || is_diff(w[k])) {
                    if (forms.gens[w[k]].odd) sign = -sign;
                    continue;
                }
                NCPoly t = NCPoly::of(w.substr(0, k), sign == 1 ? c : -c) * dval[w[k]] * NCPoly::of(w.substr(k + 1));
                r += t;
                if (forms.gens[w[k]].odd) sign = -sign;
            }
        }
        return forms.normal_form(r);
    }

    // coefficients of df against each differential generator (keyed by the
    // function generator index); left or right coefficients per `right`
    std::map<int, NCPoly> partials(const NCPoly& f) const {
        NCPoly df = d(f);
        std::map<int, NCPoly> out;
        for (auto& [w, c] : df) {
            int pos = right ? int(w.size()) - 1 : 0;
            if (w.empty() || !is_diff(w[pos])) throw RewriteError("form not in normal position");
            Word rest = right ? w.substr(0, w.size() - 1) : w.substr(1);
            out[diff_of[w[pos]]].add(rest, c);
        }
        return out;
    }
    NCPoly partial(const NCPoly& f, int g) const {
        auto p = partials(f);
        auto it = p.find(g);
        return it == p.end() ? NCPoly() : it->second;
    }
};

namespace detail {
inline Calculus make_calculus(Presentation A, bool right,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    Calculus C;
    C.forms = std::move(A);
    C.right = right;
    int n = C.forms.ngens();
    C.dval.assign(n, NCPoly());
    C.diff_of.assign(n, -1);
    for (auto& [f, df] : pairs) {
        int gi = C.forms.at(f), di = C.forms.at(df);
        C.dval[gi] = C.forms.g(df);
        C.diff_of[di] = gi;
    }
    return C;
}
}  // namespace detail

inline Calculus calculus_disc(bool f0 = false, bool right = false) {
    CatParams p;
    p.f0 = f0;
    p.forms_right = right;
    Calculus C = detail::make_calculus(catalog("omega_disc", p), right, {{"z", "dz"}, {"z'", "dz'"}});
    if (f0) {
        auto& A = C.forms;
        Scalar k = -(Scalar(1) / (Scalar(1) - Scalar::qpow(2)));
        NCPoly v = A.g("dz") * A.g("f0") * A.g("z'") + A.g("z") * A.g("f0") * A.g("dz'");
        C.dval[A.at("f0")] = A.normal_form(k * v);
    }
    return C;
}

inline Calculus calculus_mat(int m, int n, bool right) {
    CatParams p;
    p.m = m;
    p.n = n;
    p.forms_right = right;
    std::vector<std::pair<std::string, std::string>> pr;
    for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= m; ++al) pr.push_back({detail::zn(a, al), detail::mname("dz", a, al)});
    return detail::make_calculus(catalog("lambda_mat", p), right, pr);
}

inline Calculus calculus_mat2() {
    return detail::make_calculus(catalog("omega_mat2"), true,
                                 {{"alpha", "dalpha"}, {"beta", "dbeta"}, {"gamma", "dgamma"}, {"delta", "ddelta"}});
}

// linear operators on an algebra, composed as functions
using Op = std::function<NCPoly(const NCPoly&)>;

inline Op compose(Op a, Op b) {
    return [a, b](const NCPoly& f) { return a(b(f)); };
}
inline Op op_sum(std::vector<std::pair<Scalar, Op>> terms) {
    return [terms](const NCPoly& f) {
        NCPoly r;
        for (auto& [c, o] : terms) r += c * o(f);
        return r;
    };
}
inline Op op_zero() {
    return [](const NCPoly&) { return NCPoly(); };
}
inline Op left_mult(const Presentation& A, NCPoly g) {
    return [&A, g](const NCPoly& f) { return A.normal_form(g * f); };
}
inline Op right_mult(const Presentation& A, NCPoly g) {
    return [&A, g](const NCPoly& f) { return A.normal_form(f * g); };
}
// partial derivative as an operator on the function algebra A
inline Op partial_op(const Presentation& A, const Calculus& C, const std::string& gen) {
    int gi = C.forms.at(gen);
    return [&A, &C, gi](const NCPoly& f) {
        return transfer(C.partial(transfer(f, A, C.forms), gi), C.forms, A);
    };
}

}  // namespace qdom

#endif
