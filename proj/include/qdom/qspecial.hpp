#ifndef QDOM_QSPECIAL_HPP
#define QDOM_QSPECIAL_HPP

#include "scalar.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qdom {

struct SpecialError : std::domain_error {
    using std::domain_error::domain_error;
};

// (a; b)_n for any integer n; negative n via (a;b)_n = 1 / prod_{j=1}^{-n} (1 - a b^{-j})
inline Scalar qpoch(const Scalar& a, const Scalar& b, long n) {
    Scalar r(1);
    if (n >= 0) {
        Scalar x = a;
        for (long j = 0; j < n; ++j, x *= b) r *= Scalar(1) - x;
        return r;
    }
    Scalar bi = b.inv(), x = a * bi;
    for (long j = 1; j <= -n; ++j, x *= bi) {
        Scalar f = Scalar(1) - x;
        if (f.is_zero()) throw SpecialError("vanishing factor in (a;b)_n, n < 0");
        r *= f;
    }
    return r.inv();
}

// (a; b)_inf / (a b^g; b)_inf
inline Scalar qpoch_ratio(const Scalar& a, const Scalar& b, long g) { return qpoch(a, b, g); }

// Gaussian binomial [k; j]_q: (a + b)^k = sum [k; j] b^j a^{k-j} when ab = q ba
inline Scalar gauss_binom(long k, long j) {
    if (k < 0 || j < 0 || j > k) throw SpecialError("gauss_binom: need 0 <= j <= k");
    std::vector<Scalar> row{Scalar(1)};
    for (long n = 1; n <= k; ++n) {
        std::vector<Scalar> nx(n + 1);
        for (long i = 0; i <= n; ++i) {
            Scalar s(0);
            if (i <= n - 1) s += Scalar::qpow(int(i)) * row[i];
            if (i >= 1) s += row[i - 1];
            nx[i] = s;
        }
        row.swap(nx);
    }
    return row[j];
}

// Gamma_b(n) = prod_{j=1}^{n-1} (1 - b^j) / (1 - b), n >= 1
inline Scalar qgamma(long n, const Scalar& b = Scalar::qpow(2)) {
    if (n < 1) throw SpecialError("qgamma: argument must be a positive integer");
    Scalar r(1), x = b;
    for (long j = 1; j < n; ++j, x *= b) r *= (Scalar(1) - x) / (Scalar(1) - b);
    return r;
}

// partial sum over 0..N of the basic hypergeometric series rPhis; a zero lower
// parameter contributes factor 1; terminates early on a vanishing upper factor
template <class T>
T rphi_generic(const std::vector<T>& up, const std::vector<T>& lo, const T& b, const T& x, long N) {
    long r = long(up.size()), s = long(lo.size());
    long ex = 1 + s - r;
    T sum(1), term(1);
    for (long n = 1; n <= N; ++n) {
        T bn1(1);
        for (long k = 0; k < n - 1; ++k) bn1 = bn1 * b;  // b^{n-1}
        T f(1);
        bool stop = false;
        for (auto& a : up) {
            T u = T(1) - a * bn1;
            if (u == T(0)) stop = true;
            f = f * u;
        }
        if (stop) break;
        for (auto& c : lo) {
            T l = T(1) - c * bn1;
            if (l == T(0)) throw SpecialError("vanishing lower factor in rphi");
            f = f / l;
        }
        T bn = bn1 * b;
        f = f / (T(1) - bn);
        // ((-1)^n b^{n(n-1)/2})^ex: the ratio from n-1 to n is (-b^{n-1})^ex
        T g(1);
        for (long k = 0; k < std::abs(ex); ++k) g = g * (T(0) - bn1);
        if (ex < 0) g = T(1) / g;
        term = term * f * g * x;
        sum = sum + term;
    }
    return sum;
}

inline Scalar rphi(const std::vector<Scalar>& up, const std::vector<Scalar>& lo, const Scalar& b, const Scalar& x,
                   long N) {
    return rphi_generic<Scalar>(up, lo, b, x, N);
}
inline double rphi_numeric(const std::vector<double>& up, const std::vector<double>& lo, double b, double x, long N) {
    return rphi_generic<double>(up, lo, b, x, N);
}

// (a; b)_inf numerically, stopped once the factors are 1 within tol
inline double qpoch_inf(double a, double b, double tol = 1e-17) {
    if (!(std::fabs(b) < 1)) throw SpecialError("qpoch_inf needs |b| < 1");
    double r = 1, x = a;
    for (int k = 0; k < 100000 && std::fabs(x) > tol; ++k, x *= b) r *= 1 - x;
    return r;
}

// Jackson integral over [0,1] with base b = q^2, exact for polynomials:
// coefficient list c[k] of t^k, int t^k d_b t = (1 - b) / (1 - b^{k+1})
inline Scalar jackson(const std::vector<Scalar>& poly, const Scalar& b = Scalar::qpow(2)) {
    Scalar r(0), bk = b;
    for (size_t k = 0; k < poly.size(); ++k, bk *= b)
        if (!poly[k].is_zero()) r += poly[k] * (Scalar(1) - b) / (Scalar(1) - bk);
    return r;
}

// exact partial sum (1 - b) sum_{m<=n_max} f_m b^m from grid values f_m = f(b^m)
inline Scalar jackson_grid(const std::vector<Scalar>& f, const Scalar& b = Scalar::qpow(2)) {
    Scalar r(0), bm(1);
    for (auto& x : f) {
        r += x * bm;
        bm *= b;
    }
    return (Scalar(1) - b) * r;
}

struct JacksonNumeric {
    double value;
    double tail;      // size of the last included term
    bool divergent;   // tail above tolerance
};

inline JacksonNumeric jackson_numeric(const std::function<double(double)>& f, double b, long n_max,
                                      double tol = 1e-10) {
    double s = 0, bm = 1, last = 0;
    for (long m = 0; m <= n_max; ++m, bm *= b) {
        last = (1 - b) * f(bm) * bm;
        s += last;
    }
    return {s, std::fabs(last), !(std::fabs(last) <= tol)};
}

}  // namespace qdom

#endif
