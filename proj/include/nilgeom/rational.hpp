#pragma once

#include <gmpxx.h>

#include <string>

namespace nilgeom {

using Q = mpq_class;

// Complex rational a + i b.
struct QC {
    Q re, im;

    QC() = default;
    QC(const Q& r) : re(r) {}
    QC(const Q& r, const Q& i) : re(r), im(i) {}
    QC(long r) : re(r) {}

    QC& operator+=(const QC& o) { re += o.re; im += o.im; return *this; }
    QC& operator-=(const QC& o) { re -= o.re; im -= o.im; return *this; }
    QC& operator*=(const QC& o)
    {
        Q r = re * o.re - im * o.im;
        Q i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    QC& operator/=(const QC& o)
    {
        Q den = o.re * o.re + o.im * o.im;
        Q r = (re * o.re + im * o.im) / den;
        Q i = (im * o.re - re * o.im) / den;
        re = r;
        im = i;
        return *this;
    }
};

inline QC operator+(QC a, const QC& b) { return a += b; }
inline QC operator-(QC a, const QC& b) { return a -= b; }
inline QC operator*(QC a, const QC& b) { return a *= b; }
inline QC operator/(QC a, const QC& b) { return a /= b; }
inline QC operator-(const QC& a) { return QC(-a.re, -a.im); }
inline bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const QC& a, const QC& b) { return !(a == b); }

inline bool is_zero(const Q& a) { return sgn(a) == 0; }
inline bool is_zero(const QC& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }
inline Q conj(const Q& a) { return a; }
inline QC conj(const QC& a) { return QC(a.re, -a.im); }
inline QC imag_unit() { return QC(Q(0), Q(1)); }

// "p/q" or "p"; also accepts decimal "1.25".
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

// "a", "a+bi", "bi", "a-bi" with rational a, b.
QC parse_complex(const std::string& s);
std::string to_string(const QC& z);

} // namespace nilgeom
