#include "nilgeom/rational.hpp"
#include "nilgeom/errors.hpp"
#include "nilgeom/linalg.hpp"

#include <cctype>

namespace nilgeom {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

bool valid_integer(const std::string& s)
{
    std::size_t k = 0;
    if (k < s.size() && (s[k] == '-' || s[k] == '+'))
        ++k;
    if (k == s.size())
        return false;
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            return false;
    return true;
}

} // namespace

Q parse_rational(const std::string& raw)
{
    std::string s = trim(raw);
    if (!s.empty() && s[0] == '+')
        s = s.substr(1);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg)
            ip = ip.substr(1);
        if (ip.empty())
            ip = "0";
        if (!valid_integer(ip) || (!fp.empty() && !valid_integer(fp)) || (!fp.empty() && fp[0] == '-'))
            throw ParseError("bad rational '" + raw + "'");
        Q den = 1;
        for (std::size_t k = 0; k < fp.size(); ++k)
            den *= 10;
        Q v = Q(mpz_class(ip + fp)) / den;
        return neg ? Q(-v) : v;
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw ParseError("bad rational '" + raw + "'");
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0)
        throw ParseError("zero denominator in '" + raw + "'");
    Q q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q)
{
    return q.get_str();
}

QC parse_complex(const std::string& raw)
{
    std::string s = trim(raw);
    if (s.empty())
        throw ParseError("empty complex literal");
    if (s.back() != 'i')
        return QC(parse_rational(s));
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not leading
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            cut = k;
            break;
        }
    auto imag = [&](std::string t) {
        if (t.empty() || t == "+")
            return Q(1);
        if (t == "-")
            return Q(-1);
        return parse_rational(t);
    };
    if (cut == std::string::npos)
        return QC(Q(0), imag(body));
    return QC(parse_rational(body.substr(0, cut)), imag(body.substr(cut)));
}

std::string to_string(const QC& z)
{
    if (is_zero(z.im))
        return to_string(z.re);
    std::string im;
    if (z.im == 1)
        im = "i";
    else if (z.im == -1)
        im = "-i";
    else
        im = to_string(z.im) + "i";
    if (is_zero(z.re))
        return im;
    if (im[0] != '-')
        im = "+" + im;
    return to_string(z.re) + im;
}

Signature signature(const QMatrix& s0)
{
    if (!is_symmetric(s0))
        throw NotSelfAdjoint("signature of non-symmetric matrix");
    QMatrix s = s0;
    std::size_t n = s.rows();
    Signature sig;
    // Symmetric Gaussian elimination; a zero pivot is repaired by adding a
    // row/column with a nonzero coupling.
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(s(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(s(p, p)))
                ++p;
            if (p < n) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(s(k, j), s(p, j));
                for (std::size_t i = 0; i < n; ++i)
                    std::swap(s(i, k), s(i, p));
            } else {
                p = k + 1;
                while (p < n && is_zero(s(k, p)))
                    ++p;
                if (p == n) {
                    ++sig.z;
                    continue;
                }
                // e_k <- e_k + e_p gives diagonal 2 s(k,p) != 0
                for (std::size_t j = 0; j < n; ++j)
                    s(k, j) += s(p, j);
                for (std::size_t i = 0; i < n; ++i)
                    s(i, k) += s(i, p);
            }
        }
        Q piv = s(k, k);
        if (sgn(piv) > 0)
            ++sig.p;
        else
            ++sig.q;
        // Schur complement on the trailing block
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(s(i, k)))
                continue;
            Q f = s(i, k) / piv;
            for (std::size_t j = k + 1; j < n; ++j)
                s(i, j) -= f * s(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            s(i, k) = 0;
            s(k, i) = 0;
        }
    }
    return sig;
}

} // namespace nilgeom
