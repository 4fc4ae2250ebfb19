#pragma once

#include "nilgeom/errors.hpp"
#include "nilgeom/rational.hpp"

#include <cstddef>
#include <vector>

namespace nilgeom {

// Unqualified so that overloads for other scalar types are found by ADL.
template <class T>
bool entry_is_zero(const T& x)
{
    return is_zero(x);
}

// Dense row-major matrix over an exact scalar type.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, K(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conj() const
    {
        Matrix t(r_, c_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            t.a_[k] = nilgeom::conj(a_[k]);
        return t;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!entry_is_zero(x))
                return false;
        return true;
    }

    Matrix col(std::size_t j) const
    {
        Matrix v(r_, 1);
        for (std::size_t i = 0; i < r_; ++i)
            v(i, 0) = (*this)(i, j);
        return v;
    }

    void set_block(std::size_t i0, std::size_t j0, const Matrix& b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const
    {
        Matrix b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const K& s)
    {
        for (auto& x : a_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const K& s) { return a *= s; }
    friend Matrix operator*(const K& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& x : a.a_)
            x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_)
            throw DimensionMismatch("matrix product");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& x = a(i, k);
                if (entry_is_zero(x))
                    continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    const std::vector<K>& data() const { return a_; }

private:
    void check_same(const Matrix& o) const
    {
        if (r_ != o.r_ || c_ != o.c_)
            throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

using QMatrix = Matrix<Q>;
using CMatrix = Matrix<QC>;

template <class K>
Matrix<K> pow(const Matrix<K>& m, int e)
{
    Matrix<K> r = Matrix<K>::identity(m.rows());
    for (int k = 0; k < e; ++k)
        r = r * m;
    return r;
}

template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b)
{
    Matrix<K> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

template <class K>
Matrix<K> direct_sum(const std::vector<Matrix<K>>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix<K> m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

template <class K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b)
{
    return a * b - b * a;
}

template <class K>
K trace(const Matrix<K>& m)
{
    K t(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

template <class K>
bool is_symmetric(const Matrix<K>& m)
{
    return m.square() && m == m.transpose();
}

template <class K>
bool is_skew(const Matrix<K>& m)
{
    return m.square() && (m + m.transpose()).is_zero();
}

inline CMatrix to_complex(const QMatrix& m)
{
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = QC(m(i, j));
    return c;
}

// Real 2x2-block form of a complex matrix: a+ib -> [[a,-b],[b,a]].
inline QMatrix realify(const CMatrix& m)
{
    QMatrix r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(2 * i, 2 * j) = m(i, j).re;
            r(2 * i, 2 * j + 1) = -m(i, j).im;
            r(2 * i + 1, 2 * j) = m(i, j).im;
            r(2 * i + 1, 2 * j + 1) = m(i, j).re;
        }
    return r;
}

// Notation helpers for normal forms (all 1-based semantics in comments).
// N_p: single nilpotent Jordan block with N e_{k+1} = e_k.
inline QMatrix jordan_block(std::size_t p)
{
    QMatrix m(p, p);
    for (std::size_t k = 0; k + 1 < p; ++k)
        m(k, k + 1) = 1;
    return m;
}

// K_p: antidiagonal ones.
inline QMatrix antidiag(std::size_t p)
{
    QMatrix m(p, p);
    for (std::size_t k = 0; k < p; ++k)
        m(k, p - 1 - k) = 1;
    return m;
}

// I_{p,q} = diag(1,..,1,-1,..,-1).
inline QMatrix ipq(std::size_t p, std::size_t q)
{
    QMatrix m(p + q, p + q);
    for (std::size_t k = 0; k < p + q; ++k)
        m(k, k) = k < p ? 1 : -1;
    return m;
}

// J_k = [[0,-I_k],[I_k,0]].
inline QMatrix jmat(std::size_t k)
{
    QMatrix m(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, k + i) = -1;
        m(k + i, i) = 1;
    }
    return m;
}

// L_k = [[0,I_k],[I_k,0]].
inline QMatrix lmat(std::size_t k)
{
    QMatrix m(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        m(i, k + i) = 1;
        m(k + i, i) = 1;
    }
    return m;
}

// Anti-diagonal transpose K_q M^T K_p for a p x q block.
template <class K>
Matrix<K> antitranspose(const Matrix<K>& m)
{
    Matrix<K> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(m.cols() - 1 - j, m.rows() - 1 - i) = m(i, j);
    return t;
}

} // namespace nilgeom
