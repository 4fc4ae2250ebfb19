#include "nilgeom/trunc_ring.hpp"

#include <doctest.h>

#include <random>

using namespace nilgeom;

namespace {

TruncScalar R(std::vector<Q> c) { return TruncScalar::real(std::move(c)); }

TruncScalar C(std::vector<QC> c)
{
    int n = static_cast<int>(c.size());
    return TruncScalar(n, std::move(c), BaseField::Complex);
}

// schoolbook product of coefficient lists, then drop index >= n
std::vector<QC> schoolbook(const std::vector<QC>& a, const std::vector<QC>& b)
{
    std::vector<QC> full(a.size() + b.size(), QC(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            full[i + j] += a[i] * b[j];
    full.resize(a.size());
    return full;
}

TruncScalar random_scalar(int n, std::mt19937_64& rng, BaseField f)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<QC> c;
    for (int a = 0; a < n; ++a) {
        Q re(num(rng), den(rng)), im(f == BaseField::Complex ? Q(num(rng), den(rng)) : Q(0));
        re.canonicalize();
        im.canonicalize();
        c.push_back(QC(re, im));
    }
    return TruncScalar(n, c, f);
}

} // namespace

TEST_CASE("trunc_mul examples")
{
    CHECK(R({1, 1}) * R({1, -1}) == R({1, 0}));
    CHECK((TruncScalar::nu_power(3, 1) * TruncScalar::nu_power(3, 2)).is_zero());
    CHECK(R({1, 2, 3}) * R({2, 1, 0}) == R({2, 5, 8}));
    CHECK_THROWS_AS(R({1, 2}) * R({1, 2, 3}), OrderMismatch);
}

TEST_CASE("trunc_inverse examples")
{
    CHECK(trunc_inverse(R({1, 1, 0})) == R({1, -1, 1}));
    for (int n = 1; n <= 5; ++n)
        CHECK(trunc_inverse(TruncScalar::constant(n, QC(1))) == TruncScalar::constant(n, QC(1)));
    CHECK_THROWS_AS(trunc_inverse(R({0, 1})), NotInvertible);
}

TEST_CASE("trunc_shift_div examples")
{
    CHECK(trunc_shift_div(R({0, 2, 3}), 1) == R({2, 3, 0}));
    TruncScalar a = R({Q(1, 2), 3, -1});
    CHECK(trunc_shift_div(a, 0) == a);
    CHECK_THROWS_AS(trunc_shift_div(R({1, 1}), 1), NotDivisible);
    CHECK(TruncScalar::nu_power(3, 1) * trunc_shift_div(R({0, 2, 3}), 1) == R({0, 2, 3}));
}

TEST_CASE("trunc_conj examples")
{
    QC i = imag_unit();
    CHECK(trunc_conj(C({i, i})) == C({-i, -i}));
    TruncScalar z = C({QC(1, 1), QC(2, -1)});
    CHECK(trunc_conj(z) == C({QC(1, -1), QC(2, 1)}));
    CHECK(trunc_conj(trunc_conj(z)) == z);
    CHECK_THROWS_AS(trunc_conj(R({1, 2})), WrongField);
}

TEST_CASE("ring axioms against the schoolbook oracle")
{
    std::mt19937_64 rng(11);
    for (BaseField f : {BaseField::Real, BaseField::Complex})
        for (int n = 1; n <= 6; ++n)
            for (int rep = 0; rep < 20; ++rep) {
                TruncScalar a = random_scalar(n, rng, f), b = random_scalar(n, rng, f), c = random_scalar(n, rng, f);
                CHECK((a * b).coeffs() == schoolbook(a.coeffs(), b.coeffs()));
                CHECK(a * b == b * a);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                if (f == BaseField::Complex)
                    CHECK(trunc_conj(a * b) == trunc_conj(a) * trunc_conj(b));
                if (!is_zero(a[0]))
                    CHECK(a * trunc_inverse(a) == TruncScalar::constant(n, QC(1), f));
            }
}

TEST_CASE("nu is nilpotent of exact order n")
{
    for (int n = 1; n <= 6; ++n) {
        TruncScalar nu = TruncScalar::nu_power(n, 1), p = TruncScalar::constant(n, QC(1));
        for (int k = 0; k < n - 1; ++k)
            p = p * nu;
        CHECK_FALSE(p.is_zero());
        CHECK((p * nu).is_zero());
    }
}

TEST_CASE("text round trip")
{
    TruncScalar a = R({Q(3, 2), 0, -4});
    CHECK(TruncScalar::parse(a.to_string(), 3) == a);
}
