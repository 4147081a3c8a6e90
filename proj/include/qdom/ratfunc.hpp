#ifndef QDOM_RATFUNC_HPP
#define QDOM_RATFUNC_HPP

#include "scalar.hpp"

#include <vector>

namespace qdom {

// Polynomial in a second formal variable (s or u) over Scalar.
struct SPoly {
    std::vector<Scalar> c;

    SPoly() = default;
    SPoly(const Scalar& k) { if (!k.is_zero()) c.push_back(k); }
    SPoly(long k) : SPoly(Scalar(k)) {}
    static SPoly var() { SPoly p; p.c = {Scalar(0), Scalar(1)}; return p; }

    bool zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    const Scalar& lead() const { return c.back(); }
    void trim() { while (!c.empty() && c.back().is_zero()) c.pop_back(); }
    bool operator==(const SPoly& o) const { return c == o.c; }
    bool operator!=(const SPoly& o) const { return c != o.c; }

    SPoly operator-() const { SPoly r = *this; for (auto& x : r.c) x = -x; return r; }
    SPoly& operator+=(const SPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    SPoly& operator-=(const SPoly& o) { return *this += -o; }
    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        SPoly r;
        if (a.zero() || b.zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    SPoly scaled(const Scalar& k) const {
        SPoly r = *this;
        for (auto& x : r.c) x *= k;
        r.trim();
        return r;
    }
    Scalar eval(const Scalar& x) const {
        Scalar r;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
};

inline void divmod(const SPoly& a, const SPoly& b, SPoly& qo, SPoly& ro) {
    if (b.zero()) throw ArithmeticError("division by zero polynomial");
    ro = a;
    qo = SPoly();
    if (a.deg() < b.deg()) return;
    qo.c.assign(a.deg() - b.deg() + 1, Scalar(0));
    Scalar il = b.lead().inv();
    while (!ro.zero() && ro.deg() >= b.deg()) {
        int s = ro.deg() - b.deg();
        Scalar f = ro.lead() * il;
        qo.c[s] = f;
        for (int j = 0; j <= b.deg(); ++j) ro.c[s + j] -= f * b.c[j];
        ro.trim();
    }
    qo.trim();
}

inline SPoly monic(const SPoly& p) {
    if (p.zero()) return p;
    return p.scaled(p.lead().inv());
}

inline SPoly gcd(SPoly a, SPoly b) {
    while (!b.zero()) {
        SPoly qq, r;
        divmod(a, b, qq, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Element of Q(v)(s): num/den with den monic, coprime.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long k) : num_(k), den_(1) {}
    RatFunc(const Scalar& k) : num_(k), den_(1) {}
    RatFunc(const SPoly& n) : num_(n), den_(1) {}
    RatFunc(SPoly n, SPoly d) : num_(std::move(n)), den_(std::move(d)) { canon(); }
    static RatFunc var() { return RatFunc(SPoly::var()); }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }
    bool is_zero() const { return num_.zero(); }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inv() const { return RatFunc(1) / *this; }

    // substitute the formal variable by a Scalar
    Scalar at(const Scalar& x) const { return num_.eval(x) / den_.eval(x); }

    std::string str(const std::string& var = "s") const {
        auto render = [&](const SPoly& p) {
            std::string o;
            for (size_t i = 0; i < p.c.size(); ++i) {
                if (p.c[i].is_zero()) continue;
                if (!o.empty()) o += " + ";
                o += "(" + p.c[i].str() + ")";
                if (i == 1) o += "*" + var;
                if (i > 1) o += "*" + var + "^" + std::to_string(i);
            }
            return o.empty() ? std::string("0") : o;
        };
        if (den_.deg() == 0 && den_.c[0].is_one()) return render(num_);
        return "[" + render(num_) + "]/[" + render(den_) + "]";
    }

private:
    SPoly num_, den_;
    void canon() {
        if (den_.zero()) throw ArithmeticError("zero denominator");
        if (num_.zero()) { den_ = SPoly(1); return; }
        SPoly g = gcd(num_, den_);
        if (g.deg() > 0) {
            SPoly r;
            divmod(SPoly(num_), g, num_, r);
            divmod(SPoly(den_), g, den_, r);
        }
        Scalar l = den_.lead().inv();
        num_ = num_.scaled(l);
        den_ = den_.scaled(l);
    }
};

}  // namespace qdom

#endif
