#pragma once

#include "nilgeom/poly.hpp"

#include <memory>
#include <vector>

namespace nilgeom {

// Monomials of degree <= maxdeg in m displacement variables, with
// precomputed product and derivative tables.
class JetSpace {
public:
    JetSpace(std::size_t m, int maxdeg);

    std::size_t vars() const { return m_; }
    int max_degree() const { return d_; }
    std::size_t size() const { return monos_.size(); }
    // number of monomials of degree <= e (they form a prefix)
    std::size_t count_upto(int e) const { return e < 0 ? 0 : count_[std::min(e, d_)]; }
    int degree(std::size_t i) const { return deg_[i]; }
    const Mono& mono(std::size_t i) const { return monos_[i]; }
    // index of a monomial, or -1 beyond maxdeg
    long index(const Mono& m) const;

    struct Prod {
        std::uint32_t a, b, out;
    };
    // pairs (a, b) with deg a + deg b <= maxdeg, grouped by deg(out)
    const std::vector<Prod>& products() const { return prod_; }
    // number of leading entries of products() with deg(out) <= e
    std::size_t products_upto(int e) const { return prod_end_[std::min(e, d_)]; }
    struct Der {
        std::uint32_t from, to;
        int factor;
    };
    const std::vector<Der>& derivative(std::size_t v) const { return der_[v]; }

private:
    std::size_t m_;
    int d_;
    std::vector<Mono> monos_;
    std::vector<int> deg_;
    std::vector<std::size_t> count_;
    std::vector<Prod> prod_;
    std::vector<std::size_t> prod_end_;
    std::vector<std::vector<Der>> der_;
};

// Truncated Taylor polynomial at a point, stored densely up to its degree.
class Jet {
public:
    Jet() = default;
    Jet(std::shared_ptr<const JetSpace> sp, int deg);

    int deg() const { return deg_; }
    const Q& operator[](std::size_t i) const { return c_[i]; }
    Q& operator[](std::size_t i) { return c_[i]; }
    const Q& constant() const { return c_[0]; }
    bool is_zero() const;

    Jet truncated(int deg) const;
    Jet deriv(std::size_t v) const; // degree drops by one
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Q& s);
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Q& s) { return a *= s; }
    // product truncated to min(deg a, deg b)
    friend Jet operator*(const Jet& a, const Jet& b);
    void add_product(const Jet& a, const Jet& b, const Q& s = Q(1));

    static Jet taylor(std::shared_ptr<const JetSpace> sp, const QPoly& p, const std::vector<Q>& point, int deg);
    static Jet constant(std::shared_ptr<const JetSpace> sp, const Q& c, int deg);

private:
    std::shared_ptr<const JetSpace> sp_;
    int deg_ = 0;
    std::vector<Q> c_;
};

using JetMatrix = std::vector<std::vector<Jet>>;

JetMatrix jet_matmul(const JetMatrix& a, const JetMatrix& b);
QMatrix jet_constant(const JetMatrix& a);
// inverse jet via the Neumann series around the value at the point
JetMatrix jet_inverse(const JetMatrix& g, int deg);

} // namespace nilgeom
