#pragma once

#include "nilgeom/matrix.hpp"

#include <utility>
#include <vector>

namespace nilgeom {

template <class K>
struct Echelon {
    Matrix<K> r;                   // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination over an exact field; lowest-index pivot first.
template <class K>
Echelon<K> rref(Matrix<K> m)
{
    Echelon<K> e;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        K inv = K(1) / m(row, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, c)))
                continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(c);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

template <class K>
std::size_t rank(const Matrix<K>& m)
{
    return rref(m).rank();
}

// Basis of {v : m v = 0}, one column per free variable.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m)
{
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix<K> ns(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        ns(free[k], k) = K(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            ns(e.pivots[i], k) = -e.r(i, free[k]);
    }
    return ns;
}

template <class K>
K det(Matrix<K> m)
{
    if (!m.square())
        throw DimensionMismatch("determinant of non-square matrix");
    K d(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c)))
            ++p;
        if (p == n)
            return K(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        K inv = K(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c)))
                continue;
            K f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m)
{
    if (!m.square())
        throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<K>::identity(n));
    auto e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        throw NotInvertible("singular matrix");
    return e.r.block(0, n, n, n);
}

// Columns of m stacked; basis of the column space (subset of columns).
template <class K>
Matrix<K> column_basis(const Matrix<K>& m)
{
    auto e = rref(m);
    Matrix<K> b(m.rows(), e.rank());
    for (std::size_t k = 0; k < e.rank(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            b(i, k) = m(i, e.pivots[k]);
    return b;
}

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b)
{
    if (a.cols() == 0)
        return b;
    if (b.cols() == 0)
        return a;
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack");
    Matrix<K> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b)
{
    if (a.rows() == 0)
        return b;
    if (b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack");
    Matrix<K> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

// Columns of `cand` (in order) extending span(base) to span(base) + span(cand),
// greedily, lowest index first.
template <class K>
std::vector<std::size_t> extend_basis(const Matrix<K>& base, const Matrix<K>& cand)
{
    std::vector<std::size_t> chosen;
    Matrix<K> cur = base;
    std::size_t r = cur.cols() ? rank(cur) : 0;
    for (std::size_t j = 0; j < cand.cols(); ++j) {
        Matrix<K> trial = hstack(cur, cand.col(j));
        std::size_t rt = rank(trial);
        if (rt > r) {
            chosen.push_back(j);
            cur = trial;
            r = rt;
        }
    }
    return chosen;
}

// Signature (p, q) of a symmetric rational matrix by congruence
// diagonalization; the zero part is reported as the third entry.
struct Signature {
    int p = 0, q = 0, z = 0;
    friend bool operator==(const Signature& a, const Signature& b)
    {
        return a.p == b.p && a.q == b.q && a.z == b.z;
    }
};

Signature signature(const QMatrix& s);

// Flatten a list of square matrices into columns of a single matrix.
template <class K>
Matrix<K> as_columns(const std::vector<Matrix<K>>& ms)
{
    if (ms.empty())
        return Matrix<K>();
    std::size_t n = ms[0].rows() * ms[0].cols();
    Matrix<K> m(n, ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            m(i, k) = ms[k].data()[i];
    return m;
}

template <class K>
Matrix<K> unflatten(const Matrix<K>& col, std::size_t k, std::size_t r, std::size_t c)
{
    Matrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = col(i * c + j, k);
    return m;
}

// Dimension of the linear span of a family of matrices.
template <class K>
std::size_t span_dim(const std::vector<Matrix<K>>& ms)
{
    if (ms.empty())
        return 0;
    return rank(as_columns(ms));
}

// Maximal linearly independent subfamily, lowest index first.
template <class K>
std::vector<Matrix<K>> independent_subset(const std::vector<Matrix<K>>& ms)
{
    std::vector<Matrix<K>> out;
    if (ms.empty())
        return out;
    auto e = rref(as_columns(ms));
    for (auto p : e.pivots)
        out.push_back(ms[p]);
    return out;
}

} // namespace nilgeom
