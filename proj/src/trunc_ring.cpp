#include "nilgeom/trunc_ring.hpp"

#include <cctype>

namespace nilgeom {

namespace {

void check_compatible(const TruncScalar& a, const TruncScalar& b)
{
    if (a.order() != b.order())
        throw OrderMismatch("orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    if (a.field() != b.field())
        throw WrongField("mixed real and complex operands");
}

} // namespace

TruncScalar::TruncScalar(int order, BaseField field) : c_(order), field_(field)
{
    if (order < 1)
        throw OrderMismatch("order must be positive");
}

TruncScalar::TruncScalar(int order, std::vector<QC> coeffs, BaseField field)
    : c_(std::move(coeffs)), field_(field)
{
    if (order < 1 || static_cast<int>(c_.size()) > order)
        throw OrderMismatch("coefficient list longer than order");
    c_.resize(order);
    if (field_ == BaseField::Real)
        for (const auto& z : c_)
            if (!nilgeom::is_zero(z.im))
                throw WrongField("imaginary coefficient in a real scalar");
}

TruncScalar TruncScalar::real(std::vector<Q> coeffs)
{
    std::vector<QC> c(coeffs.begin(), coeffs.end());
    int n = static_cast<int>(c.size());
    return TruncScalar(n, std::move(c), BaseField::Real);
}

TruncScalar TruncScalar::constant(int order, const QC& c, BaseField field)
{
    return TruncScalar(order, {c}, field);
}

TruncScalar TruncScalar::nu_power(int order, int k, BaseField field)
{
    TruncScalar t(order, field);
    if (k < order)
        t.c_[k] = QC(1);
    return t;
}

bool TruncScalar::is_zero() const
{
    return valuation() == order();
}

int TruncScalar::valuation() const
{
    for (int a = 0; a < order(); ++a)
        if (!nilgeom::is_zero(c_[a]))
            return a;
    return order();
}

bool operator==(const TruncScalar& a, const TruncScalar& b)
{
    return a.field_ == b.field_ && a.c_ == b.c_;
}

std::string TruncScalar::to_string() const
{
    std::string out;
    for (int a = 0; a < order(); ++a) {
        if (nilgeom::is_zero(c_[a]))
            continue;
        std::string c = nilgeom::to_string(c_[a]);
        bool compound = !nilgeom::is_zero(c_[a].re) && !nilgeom::is_zero(c_[a].im);
        if (compound)
            c = "(" + c + ")";
        std::string term = c;
        if (a == 1)
            term += "*v";
        else if (a > 1)
            term += "*v^" + std::to_string(a);
        if (!out.empty()) {
            if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        } else {
            out = term;
        }
    }
    return out.empty() ? "0" : out;
}

TruncScalar TruncScalar::parse(const std::string& s, int order, BaseField field)
{
    // Terms separated by top-level '+'/'-'; each term is coeff[*v[^k]] or v[^k].
    TruncScalar r(order, field);
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t += ch;
    if (t.empty())
        throw ParseError("empty truncated scalar");
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        char ch = t[k];
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty() && cur.back() != '^' && cur.back() != '/') {
            terms.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    terms.push_back(cur);
    for (auto term : terms) {
        int power = 0;
        std::string coeff = term;
        auto vpos = term.find('v');
        if (vpos != std::string::npos) {
            std::string rest = term.substr(vpos + 1);
            power = 1;
            if (!rest.empty()) {
                if (rest[0] != '^')
                    throw ParseError("bad power in '" + term + "'");
                power = std::stoi(rest.substr(1));
            }
            coeff = term.substr(0, vpos);
            if (!coeff.empty() && coeff.back() == '*')
                coeff.pop_back();
        }
        bool neg = false;
        if (!coeff.empty() && (coeff[0] == '+' || coeff[0] == '-')) {
            neg = coeff[0] == '-';
            coeff = coeff.substr(1);
        }
        if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')')
            coeff = coeff.substr(1, coeff.size() - 2);
        QC c = coeff.empty() ? QC(1) : parse_complex(coeff);
        if (neg)
            c = -c;
        if (field == BaseField::Real && !nilgeom::is_zero(c.im))
            throw WrongField("imaginary coefficient in a real scalar");
        if (power < 0)
            throw ParseError("negative power");
        if (power < order)
            r.c_[power] += c;
    }
    return r;
}

TruncScalar trunc_add(const TruncScalar& a, const TruncScalar& b)
{
    check_compatible(a, b);
    std::vector<QC> c(a.coeffs());
    for (int k = 0; k < a.order(); ++k)
        c[k] += b[k];
    return TruncScalar(a.order(), std::move(c), a.field());
}

TruncScalar trunc_sub(const TruncScalar& a, const TruncScalar& b)
{
    return trunc_add(a, trunc_neg(b));
}

TruncScalar trunc_neg(const TruncScalar& a)
{
    std::vector<QC> c(a.coeffs());
    for (auto& z : c)
        z = -z;
    return TruncScalar(a.order(), std::move(c), a.field());
}

TruncScalar trunc_mul(const TruncScalar& a, const TruncScalar& b)
{
    check_compatible(a, b);
    int n = a.order();
    std::vector<QC> c(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(a[i]))
            continue;
        for (int j = 0; i + j < n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncScalar(n, std::move(c), a.field());
}

TruncScalar trunc_inverse(const TruncScalar& a)
{
    if (is_zero(a[0]))
        throw NotInvertible("constant coefficient is zero");
    int n = a.order();
    std::vector<QC> r(n);
    QC inv0 = QC(1) / a[0];
    r[0] = inv0;
    // a * r = 1 solved degree by degree
    for (int k = 1; k < n; ++k) {
        QC s;
        for (int i = 1; i <= k; ++i)
            s += a[i] * r[k - i];
        r[k] = -(s * inv0);
    }
    return TruncScalar(n, std::move(r), a.field());
}

TruncScalar trunc_shift_div(const TruncScalar& a, int k)
{
    if (k < 0)
        throw NotDivisible("negative shift");
    int n = a.order();
    for (int i = 0; i < k && i < n; ++i)
        if (!is_zero(a[i]))
            throw NotDivisible("coefficient of v^" + std::to_string(i) + " is nonzero");
    std::vector<QC> r(n);
    for (int i = 0; i + k < n; ++i)
        r[i] = a[i + k];
    return TruncScalar(n, std::move(r), a.field());
}

TruncScalar trunc_conj(const TruncScalar& a)
{
    if (a.field() != BaseField::Complex)
        throw WrongField("conjugation needs a complex scalar");
    std::vector<QC> c(a.coeffs());
    for (auto& z : c)
        z = conj(z);
    return TruncScalar(a.order(), std::move(c), a.field());
}

} // namespace nilgeom
