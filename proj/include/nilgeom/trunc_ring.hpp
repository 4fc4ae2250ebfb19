#pragma once

#include "nilgeom/errors.hpp"
#include "nilgeom/rational.hpp"

#include <string>
#include <vector>

namespace nilgeom {

enum class BaseField { Real, Complex };

// Element of K[nu] = K[X]/(X^n), K = Q or Q(i).
class TruncScalar {
public:
    TruncScalar(int order, BaseField field = BaseField::Real);
    TruncScalar(int order, std::vector<QC> coeffs, BaseField field);

    static TruncScalar real(std::vector<Q> coeffs);
    static TruncScalar constant(int order, const QC& c, BaseField field = BaseField::Real);
    // nu^k in order n
    static TruncScalar nu_power(int order, int k, BaseField field = BaseField::Real);

    int order() const { return static_cast<int>(c_.size()); }
    BaseField field() const { return field_; }
    const QC& operator[](int a) const { return c_[a]; }
    const std::vector<QC>& coeffs() const { return c_; }
    bool is_zero() const;
    // smallest a with nonzero coefficient, order() if zero
    int valuation() const;

    std::string to_string() const;
    static TruncScalar parse(const std::string& s, int order, BaseField field = BaseField::Real);

    friend bool operator==(const TruncScalar& a, const TruncScalar& b);
    friend bool operator!=(const TruncScalar& a, const TruncScalar& b) { return !(a == b); }

private:
    std::vector<QC> c_;
    BaseField field_;
};

TruncScalar trunc_add(const TruncScalar& a, const TruncScalar& b);
TruncScalar trunc_sub(const TruncScalar& a, const TruncScalar& b);
TruncScalar trunc_neg(const TruncScalar& a);
TruncScalar trunc_mul(const TruncScalar& a, const TruncScalar& b);
TruncScalar trunc_inverse(const TruncScalar& a);
TruncScalar trunc_shift_div(const TruncScalar& a, int k);
TruncScalar trunc_conj(const TruncScalar& a);

inline TruncScalar operator+(const TruncScalar& a, const TruncScalar& b) { return trunc_add(a, b); }
inline TruncScalar operator-(const TruncScalar& a, const TruncScalar& b) { return trunc_sub(a, b); }
inline TruncScalar operator-(const TruncScalar& a) { return trunc_neg(a); }
inline TruncScalar operator*(const TruncScalar& a, const TruncScalar& b) { return trunc_mul(a, b); }

} // namespace nilgeom
