#pragma once
// Brute-force ground truth for the test suites. Deliberately independent of
// the library's linear algebra: plain vectors of mpq, textbook elimination.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

inline std::size_t rank(Rows a)
{
    std::size_t r = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Q f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Basis of {v : A v = 0}.
inline Rows nullspace(Rows a, std::size_t cols)
{
    std::vector<long> pivot_of(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        Q inv = 1 / a[r][c];
        for (std::size_t j = 0; j < cols; ++j)
            a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Q f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_of[c] = static_cast<long>(r);
        ++r;
    }
    Rows out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_of[f] >= 0)
            continue;
        std::vector<Q> v(cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of[c] >= 0)
                v[c] = -a[pivot_of[c]][f];
        out.push_back(v);
    }
    return out;
}

using Mat = std::vector<std::vector<Q>>;

inline Mat mat(std::size_t n) { return Mat(n, std::vector<Q>(n, 0)); }

// Unknown M (m x m, row-major flattened). Each constraint maps M linearly to
// an m x m matrix; the rows of the system are its entries.
template <class F>
void add_constraint(Rows& sys, std::size_t m, F&& apply)
{
    std::vector<Mat> images;
    for (std::size_t k = 0; k < m * m; ++k) {
        Mat e = mat(m);
        e[k / m][k % m] = 1;
        images.push_back(apply(e));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Q> row(m * m);
            bool nz = false;
            for (std::size_t k = 0; k < m * m; ++k) {
                row[k] = images[k][i][j];
                nz = nz || row[k] != 0;
            }
            if (nz)
                sys.push_back(row);
        }
}

inline Mat mul(const Mat& a, const Mat& b)
{
    Mat r = mat(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < a.size(); ++j)
                    r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline Mat sub(Mat a, const Mat& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            a[i][j] -= b[i][j];
    return a;
}

inline Mat transpose(const Mat& a)
{
    Mat t = mat(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

// {M : M S = S M for S in fixed, M^T G + G M = 0}, as flattened vectors
inline Rows skew_commutant(const Mat& G, const std::vector<Mat>& fixed)
{
    std::size_t m = G.size();
    Rows sys;
    for (const auto& S : fixed)
        add_constraint(sys, m, [&](const Mat& M) { return sub(mul(M, S), mul(S, M)); });
    add_constraint(sys, m, [&](const Mat& M) {
        Mat a = mul(transpose(M), G), b = mul(G, M);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a[i][j] += b[i][j];
        return a;
    });
    return nullspace(sys, m * m);
}

// {M : M A = A M for A in family}
inline Rows centralizer(const std::vector<Mat>& family, std::size_t m)
{
    Rows sys;
    for (const auto& S : family)
        add_constraint(sys, m, [&](const Mat& M) { return sub(mul(M, S), mul(S, M)); });
    return nullspace(sys, m * m);
}

inline Mat unflatten(const std::vector<Q>& v, std::size_t m)
{
    Mat r = mat(m);
    for (std::size_t k = 0; k < m * m; ++k)
        r[k / m][k % m] = v[k];
    return r;
}

// Signature (p, q) of a symmetric matrix by symmetric Gaussian elimination
// (congruence), pairing off zero pivots with x -> x + y moves.
inline std::pair<int, int> signature(Mat a)
{
    std::size_t n = a.size();
    int p = 0, q = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        long piv = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a[i][i] != 0) {
                piv = static_cast<long>(i);
                break;
            }
        if (piv < 0) {
            // find an off-diagonal entry and create a diagonal one
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!done[i] && !done[j] && a[i][j] != 0) {
                        // e_i <- e_i + e_j
                        for (std::size_t k = 0; k < n; ++k)
                            a[i][k] += a[j][k];
                        for (std::size_t k = 0; k < n; ++k)
                            a[k][i] += a[k][j];
                        piv = static_cast<long>(i);
                        found = true;
                    }
            if (!found)
                break;
        }
        std::size_t k = static_cast<std::size_t>(piv);
        Q d = a[k][k];
        (d > 0 ? p : q)++;
        done[k] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][k] == 0)
                continue;
            Q f = a[i][k] / d;
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j)
                a[j][i] -= f * a[j][k];
        }
    }
    return {p, q};
}

// All (d_1..d_n) with d_n >= 1, sum a d_a * unit <= maxdim, sum d_a <= maxD.
inline std::vector<std::vector<int>> shapes(int maxdim, int maxD, int unit = 1)
{
    std::vector<std::vector<int>> out;
    for (int n = 1; n * unit <= maxdim; ++n) {
        std::vector<int> d(n, 0);
        auto rec = [&](auto&& self, int a, int dim, int D) -> void {
            if (a > n) {
                if (d[n - 1] >= 1)
                    out.push_back(d);
                return;
            }
            for (int k = 0; dim + k * a * unit <= maxdim && D + k <= maxD; ++k) {
                d[a - 1] = k;
                self(self, a + 1, dim + k * a * unit, D + k);
            }
            d[a - 1] = 0;
        };
        rec(rec, 1, 0, 0);
    }
    return out;
}

} // namespace oracle
