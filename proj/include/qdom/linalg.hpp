#ifndef QDOM_LINALG_HPP
#define QDOM_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

namespace qdom {

// Dense matrix over an exact field F (Scalar, RatFunc).
template <class F>
using Mat = std::vector<std::vector<F>>;

// In-place reduced row echelon form. Returns pivot columns.
template <class F>
std::vector<int> rref(Mat<F>& a) {
    std::vector<int> piv;
    if (a.empty()) return piv;
    int rows = int(a.size()), cols = int(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        F inv = F(1) / a[r][c];
        for (int j = c; j < cols; ++j)
            if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            F f = a[i][c];
            for (int j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class F>
int rank(Mat<F> a) {
    return int(rref(a).size());
}

// Inverse of a square matrix; throws if singular.
template <class F>
Mat<F> inverse(const Mat<F>& m) {
    int n = int(m.size());
    Mat<F> a(n, std::vector<F>(2 * n, F(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = F(1);
    }
    auto piv = rref(a);
    if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Mat<F> r(n, std::vector<F>(n, F(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = a[i][n + j];
    return r;
}

// Solve a x = b for square nonsingular a.
template <class F>
std::vector<F> solve(const Mat<F>& a, const std::vector<F>& b) {
    int n = int(a.size());
    Mat<F> m(n, std::vector<F>(n + 1, F(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n] = b[i];
    }
    auto piv = rref(m);
    if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular system");
    std::vector<F> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace qdom

#endif
