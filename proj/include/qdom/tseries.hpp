#ifndef QDOM_TSERIES_HPP
#define QDOM_TSERIES_HPP

#include "scalar.hpp"

#include <algorithm>
#include <vector>

namespace qdom {

struct SeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

// Truncated power series sum_{k<=N} c_k t^k over a coefficient field C.
template <class C>
class BasicTSeries {
public:
    BasicTSeries() : c_(1, C(0)) {}
    explicit BasicTSeries(int order, const C& c0 = C(0)) : c_(order + 1, C(0)) { c_[0] = c0; }
    BasicTSeries(int order, std::vector<C> coeffs) : c_(order + 1, C(0)) {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
    }
    static BasicTSeries t(int order) {
        BasicTSeries r(order);
        if (order >= 1) r.c_[1] = C(1);
        return r;
    }

    int order() const { return int(c_.size()) - 1; }
    const C& operator[](int k) const { return c_[k]; }
    C& operator[](int k) { return c_[k]; }
    const std::vector<C>& coeffs() const { return c_; }
    bool operator==(const BasicTSeries& o) const {
        int n = std::min(order(), o.order());
        for (int k = 0; k <= n; ++k)
            if (c_[k] != o.c_[k]) return false;
        return true;
    }
    bool operator!=(const BasicTSeries& o) const { return !(*this == o); }
    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    BasicTSeries truncated(int n) const {
        BasicTSeries r(n);
        for (int k = 0; k <= std::min(n, order()); ++k) r.c_[k] = c_[k];
        return r;
    }

    friend BasicTSeries operator+(const BasicTSeries& a, const BasicTSeries& b) {
        int n = std::min(a.order(), b.order());
        BasicTSeries r(n);
        for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    BasicTSeries operator-() const {
        BasicTSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend BasicTSeries operator-(const BasicTSeries& a, const BasicTSeries& b) { return a + (-b); }
    friend BasicTSeries operator*(const BasicTSeries& a, const BasicTSeries& b) {
        int n = std::min(a.order(), b.order());
        BasicTSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    BasicTSeries scaled(const C& k) const {
        BasicTSeries r = *this;
        for (auto& x : r.c_) x = x * k;
        return r;
    }

    BasicTSeries inverse() const {
        if (c_[0].is_zero()) throw SeriesError("series with zero constant term is not invertible");
        int n = order();
        BasicTSeries r(n);
        C i0 = C(1) / c_[0];
        r.c_[0] = i0;
        for (int k = 1; k <= n; ++k) {
            C s(0);
            for (int j = 1; j <= k; ++j) s = s + c_[j] * r.c_[k - j];
            r.c_[k] = -(s * i0);
        }
        return r;
    }

    // this(inner(t)); inner must have zero constant term
    BasicTSeries compose(const BasicTSeries& inner) const {
        if (!inner.c_[0].is_zero()) throw SeriesError("inner series must have zero constant term");
        int n = std::min(order(), inner.order());
        BasicTSeries r(n), pw(n, C(1));
        for (int k = 0; k <= n; ++k) {
            if (!c_[k].is_zero()) r = r + pw.scaled(c_[k]);
            pw = pw * inner.truncated(n);
        }
        return r;
    }

private:
    std::vector<C> c_;
};

using TSeries = BasicTSeries<Scalar>;

enum class SeriesOp { add, mul, invert, compose };

inline TSeries tseries_op(const TSeries& a, const TSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return a + b;
        case SeriesOp::mul: return a * b;
        case SeriesOp::invert: return a.inverse();
        case SeriesOp::compose: return a.compose(b);
    }
    return a;
}

}  // namespace qdom

#endif
