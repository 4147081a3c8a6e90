#ifndef QDOM_ZPOLY_HPP
#define QDOM_ZPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdom {

using Int = mpz_class;

// Dense univariate polynomial over Z, c[i] is the coefficient of v^i.
// Always trimmed: no trailing zero coefficients, zero polynomial is empty.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(long k) { if (k != 0) c.push_back(Int(k)); }
    explicit ZPoly(const Int& k) { if (k != 0) c.push_back(k); }

    static ZPoly monomial(const Int& a, int k) {
        ZPoly p;
        if (a == 0) return p;
        p.c.assign(k + 1, Int(0));
        p.c[k] = a;
        return p;
    }

    bool zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    int val() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) return int(i);
        return -1;
    }
    bool is_monomial() const { return !c.empty() && val() == deg(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const ZPoly& o) const { return c == o.c; }
    bool operator!=(const ZPoly& o) const { return c != o.c; }
    bool operator<(const ZPoly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;) {
            int s = cmp(c[i], o.c[i]);
            if (s) return s < 0;
        }
        return false;
    }

    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    ZPoly& operator+=(const ZPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        if (a.zero() || b.zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    ZPoly& operator*=(const Int& k) {
        if (k == 0) { c.clear(); return *this; }
        for (auto& x : c) x *= k;
        return *this;
    }

    // multiply by v^k (k may be negative if divisible)
    ZPoly shift(int k) const {
        if (zero() || k == 0) return *this;
        ZPoly r;
        if (k > 0) {
            r.c.assign(k, Int(0));
            r.c.insert(r.c.end(), c.begin(), c.end());
        } else {
            r.c.assign(c.begin() + (-k), c.end());
        }
        return r;
    }

    Int content() const {
        Int g = 0;
        for (auto& x : c) {
            if (x == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }
    void divexact(const Int& k) {
        if (k == 1) return;
        for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    }

    template <class T>
    T eval(T x) const {
        T r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + T(c[i].get_d());
        return r;
    }
};

// Exact division a / b, throws if not exact over Z.
inline ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    if (b.zero()) throw std::domain_error("division by zero polynomial");
    if (a.zero()) return a;
    int da = a.deg(), db = b.deg();
    if (da < db) throw std::logic_error("inexact polynomial division");
    ZPoly r = a;
    std::vector<Int> qc(da - db + 1, Int(0));
    Int qq, rr;
    for (int i = da - db; i >= 0; --i) {
        const Int& top = r.c[i + db];
        if (top == 0) continue;
        mpz_fdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        if (rr != 0) throw std::logic_error("inexact polynomial division");
        qc[i] = qq;
        for (int j = 0; j <= db; ++j) r.c[i + j] -= qq * b.c[j];
    }
    r.trim();
    if (!r.zero()) throw std::logic_error("inexact polynomial division");
    ZPoly qp;
    qp.c = std::move(qc);
    qp.trim();
    return qp;
}

// Pseudo-remainder of a by b: lc(b)^(da-db+1) a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b) {
    int db = b.deg();
    const Int& lb = b.lead();
    while (!a.zero() && a.deg() >= db) {
        Int la = a.lead();
        int s = a.deg() - db;
        a *= lb;
        for (int j = 0; j <= db; ++j) a.c[s + j] -= la * b.c[j];
        a.trim();
    }
    return a;
}

inline ZPoly primitive(ZPoly p) {
    if (p.zero()) return p;
    Int g = p.content();
    p.divexact(g);
    if (p.lead() < 0) p = -p;
    return p;
}

// gcd over Q[v] up to units, returned primitive with positive leading coefficient.
inline ZPoly gcd_prim(ZPoly a, ZPoly b) {
    if (a.zero()) return primitive(b);
    if (b.zero()) return primitive(a);
    int va = a.val(), vb = b.val();
    int vs = std::min(va, vb);
    a = primitive(a.shift(-va));
    b = primitive(b.shift(-vb));
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.zero() && b.deg() > 0) {
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    ZPoly g = b.zero() ? a : ZPoly(1);
    return g.shift(vs);
}

}  // namespace qdom

#endif
