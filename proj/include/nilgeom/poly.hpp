#pragma once

#include "nilgeom/errors.hpp"
#include "nilgeom/matrix.hpp"
#include "nilgeom/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilgeom {

using Mono = std::vector<int>;

// Sparse multivariate polynomial over an exact field.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nvars) : nv_(nvars) {}
    // Needed so Matrix<Poly<K>> can build zero/identity entries.
    Poly(int c)
    {
        if (c != 0)
            t_[Mono()] = K(c);
    }

    static Poly constant(std::size_t nvars, const K& c)
    {
        Poly p(nvars);
        if (!nilgeom::is_zero(c))
            p.t_[Mono(nvars, 0)] = c;
        return p;
    }
    static Poly var(std::size_t nvars, std::size_t i)
    {
        Poly p(nvars);
        Mono m(nvars, 0);
        m[i] = 1;
        p.t_[m] = K(1);
        return p;
    }
    static Poly monomial(const Mono& m, const K& c)
    {
        Poly p(m.size());
        if (!nilgeom::is_zero(c))
            p.t_[m] = c;
        return p;
    }

    std::size_t nvars() const { return nv_; }
    const std::map<Mono, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    K coeff(const Mono& m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? K(0) : it->second;
    }

    void add_term(const Mono& m, const K& c)
    {
        if (nilgeom::is_zero(c))
            return;
        adopt(m.size());
        Mono mm = m;
        mm.resize(nv_, 0);
        auto& slot = t_[mm];
        slot += c;
        if (nilgeom::is_zero(slot))
            t_.erase(mm);
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [m, c] : t_) {
            int s = 0;
            for (int e : m)
                s += e;
            d = std::max(d, s);
        }
        return d;
    }

    bool depends_on(std::size_t i) const
    {
        for (const auto& [m, c] : t_)
            if (i < m.size() && m[i] > 0)
                return true;
        return false;
    }

    Poly deriv(std::size_t i) const
    {
        Poly d(nv_);
        for (const auto& [m, c] : t_) {
            if (i >= m.size() || m[i] == 0)
                continue;
            Mono mm = m;
            K f = c * K(m[i]);
            --mm[i];
            d.t_[mm] = f;
        }
        return d;
    }

    K eval(const std::vector<K>& x) const
    {
        K s(0);
        for (const auto& [m, c] : t_) {
            K term = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int e = 0; e < m[i]; ++e)
                    term *= x[i];
            s += term;
        }
        return s;
    }

    // Compose with polynomials for each variable.
    Poly substitute(const std::vector<Poly>& vals) const
    {
        std::size_t out_nv = vals.empty() ? 0 : vals[0].nvars();
        for (const auto& v : vals)
            out_nv = std::max(out_nv, v.nvars());
        Poly s(out_nv);
        // cache powers per variable
        std::vector<std::vector<Poly>> powers(vals.size());
        for (const auto& [m, c] : t_) {
            Poly term = Poly::constant(out_nv, c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0)
                    continue;
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(Poly::constant(out_nv, K(1)));
                while (static_cast<int>(pw.size()) <= m[i])
                    pw.push_back(pw.back() * vals[i]);
                term = term * pw[m[i]];
            }
            s += term;
        }
        return s;
    }

    // Rename variables: variable i goes to index map[i] in a ring of `nvars` vars.
    Poly remap(const std::vector<std::size_t>& map, std::size_t nvars) const
    {
        Poly r(nvars);
        for (const auto& [m, c] : t_) {
            Mono mm(nvars, 0);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i])
                    mm[map.at(i)] += m[i];
            r.add_term(mm, c);
        }
        return r;
    }

    // Keep only monomials of total degree <= d.
    Poly truncate(int d) const
    {
        Poly r(nv_);
        for (const auto& [m, c] : t_) {
            int s = 0;
            for (int e : m)
                s += e;
            if (s <= d)
                r.t_[m] = c;
        }
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        adopt(o.nv_);
        for (const auto& [m, c] : o.t_)
            add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        adopt(o.nv_);
        for (const auto& [m, c] : o.t_)
            add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const K& s)
    {
        if (nilgeom::is_zero(s)) {
            t_.clear();
            return *this;
        }
        for (auto& [m, c] : t_)
            c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= K(-1); }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly p(std::max(a.nv_, b.nv_));
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                Mono m(p.nv_, 0);
                for (std::size_t i = 0; i < ma.size(); ++i)
                    m[i] += ma[i];
                for (std::size_t i = 0; i < mb.size(); ++i)
                    m[i] += mb[i];
                p.add_term(m, ca * cb);
            }
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        // Compare up to the number of declared variables.
        if (a.t_.size() != b.t_.size())
            return false;
        Poly d = a - b;
        return d.is_zero();
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void adopt(std::size_t nv)
    {
        if (nv <= nv_)
            return;
        std::map<Mono, K> t;
        for (auto& [m, c] : t_) {
            Mono mm = m;
            mm.resize(nv, 0);
            t[mm] = c;
        }
        t_ = std::move(t);
        nv_ = nv;
    }

    std::size_t nv_ = 0;
    std::map<Mono, K> t_;
};

using QPoly = Poly<Q>;
using CPoly = Poly<QC>;

template <class K>
bool is_zero(const Poly<K>& p) { return p.is_zero(); }

template <class K>
Poly<K> conj(const Poly<K>& p)
{
    Poly<K> r(p.nvars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, nilgeom::conj(c));
    return r;
}

// Real and imaginary parts of a complex polynomial.
inline QPoly real_part(const CPoly& p)
{
    QPoly r(p.nvars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, c.re);
    return r;
}
inline QPoly imag_part(const CPoly& p)
{
    QPoly r(p.nvars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, c.im);
    return r;
}
inline CPoly to_complex(const QPoly& p)
{
    CPoly r(p.nvars());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, QC(c));
    return r;
}

template <class K>
using PolyMatrix = Matrix<Poly<K>>;
using QPolyMatrix = PolyMatrix<Q>;

template <class K>
PolyMatrix<K> poly_matrix(std::size_t r, std::size_t c, std::size_t nvars)
{
    PolyMatrix<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Poly<K>(nvars);
    return m;
}

template <class K>
PolyMatrix<K> constant_poly_matrix(const Matrix<K>& a, std::size_t nvars)
{
    PolyMatrix<K> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = Poly<K>::constant(nvars, a(i, j));
    return m;
}

template <class K>
Matrix<K> eval(const PolyMatrix<K>& m, const std::vector<K>& x)
{
    Matrix<K> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).eval(x);
    return r;
}

template <class K>
PolyMatrix<K> deriv(const PolyMatrix<K>& m, std::size_t v)
{
    PolyMatrix<K> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).deriv(v);
    return r;
}

// Product of a constant matrix with a polynomial matrix (either side).
template <class K>
PolyMatrix<K> mul(const Matrix<K>& a, const PolyMatrix<K>& b)
{
    std::size_t nv = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            nv = std::max(nv, b(i, j).nvars());
    PolyMatrix<K> r = poly_matrix<K>(a.rows(), b.cols(), nv);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (nilgeom::is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) += b(k, j) * a(i, k);
        }
    return r;
}

template <class K>
PolyMatrix<K> mul(const PolyMatrix<K>& a, const Matrix<K>& b)
{
    return mul(b.transpose(), a.transpose()).transpose();
}

// nu-graded polynomial sum_a c[a] nu^a with nu^n = 0; the coefficient ring of
// nilomorphic functions.
template <class K>
struct NuPoly {
    int n = 1;
    std::vector<Poly<K>> c;

    NuPoly() : c(1) {}
    NuPoly(int order, std::size_t nvars) : n(order), c(order, Poly<K>(nvars)) {}

    static NuPoly from(int order, const Poly<K>& p, int power = 0)
    {
        NuPoly r(order, p.nvars());
        if (power < order)
            r.c[power] = p;
        return r;
    }

    std::size_t nvars() const
    {
        std::size_t v = 0;
        for (const auto& p : c)
            v = std::max(v, p.nvars());
        return v;
    }

    bool is_zero() const
    {
        for (const auto& p : c)
            if (!p.is_zero())
                return false;
        return true;
    }

    // smallest a with c[a] != 0 (n if zero)
    int valuation() const
    {
        for (int a = 0; a < n; ++a)
            if (!c[a].is_zero())
                return a;
        return n;
    }

    NuPoly deriv(std::size_t v) const
    {
        NuPoly r(n, nvars());
        for (int a = 0; a < n; ++a)
            r.c[a] = c[a].deriv(v);
        return r;
    }

    // multiply by nu^k
    NuPoly shift(int k) const
    {
        NuPoly r(n, nvars());
        for (int a = 0; a + k < n; ++a)
            r.c[a + k] = c[a];
        return r;
    }

    NuPoly& operator+=(const NuPoly& o)
    {
        check(o);
        for (int a = 0; a < n; ++a)
            c[a] += o.c[a];
        return *this;
    }
    NuPoly& operator-=(const NuPoly& o)
    {
        check(o);
        for (int a = 0; a < n; ++a)
            c[a] -= o.c[a];
        return *this;
    }
    friend NuPoly operator+(NuPoly a, const NuPoly& b) { return a += b; }
    friend NuPoly operator-(NuPoly a, const NuPoly& b) { return a -= b; }
    friend NuPoly operator*(const NuPoly& a, const NuPoly& b)
    {
        a.check(b);
        NuPoly r(a.n, std::max(a.nvars(), b.nvars()));
        for (int i = 0; i < a.n; ++i) {
            if (a.c[i].is_zero())
                continue;
            for (int j = 0; i + j < a.n; ++j)
                if (!b.c[j].is_zero())
                    r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    friend NuPoly operator*(NuPoly a, const K& s)
    {
        for (auto& p : a.c)
            p *= s;
        return a;
    }
    friend bool operator==(const NuPoly& a, const NuPoly& b)
    {
        if (a.n != b.n)
            return false;
        for (int k = 0; k < a.n; ++k)
            if (a.c[k] != b.c[k])
                return false;
        return true;
    }
    friend bool operator!=(const NuPoly& a, const NuPoly& b) { return !(a == b); }

private:
    void check(const NuPoly& o) const
    {
        if (n != o.n)
            throw OrderMismatch("nu-polynomials of different orders");
    }
};

using QNuPoly = NuPoly<Q>;
using CNuPoly = NuPoly<QC>;

} // namespace nilgeom
