#pragma once

#include "nilgeom/nilmodule.hpp"
#include "nilgeom/poly.hpp"

#include <random>

namespace nilgeom {

// f-check: a nu-valued polynomial on the transversal {y = 0}, written in the
// variables of NiloCoords(shape) (only the x-variables may appear).
template <class K>
struct BasicSeed {
    ModuleShape shape;
    NuPoly<K> value;
};
using AdaptedSeed = BasicSeed<Q>;
using CAdaptedSeed = BasicSeed<QC>;

// The coefficient of nu^a may only involve x_k with n(k) >= n - a.
template <class K>
bool is_adapted(const BasicSeed<K>& seed)
{
    NiloCoords co(seed.shape);
    int n = seed.shape.n;
    if (seed.value.n != n)
        return false;
    for (int a = 0; a < n; ++a) {
        const Poly<K>& p = seed.value.c[a];
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            if (!p.depends_on(v))
                continue;
            if (v >= co.dim())
                return false;
            auto [k, lvl] = co.label(v);
            if (lvl != 0 || co.gen_size(k) < n - a)
                return false;
        }
    }
    return true;
}

// p(z) with z_k = x_k + sum_a nu^a y_{k,a}, as a nu-polynomial.
template <class K>
NuPoly<K> nu_substitute(const Poly<K>& p, const NiloCoords& co)
{
    int n = co.order();
    std::size_t nv = co.dim();
    std::vector<NuPoly<K>> z(nv, NuPoly<K>(n, nv));
    for (int k = 0; k < co.gens(); ++k) {
        NuPoly<K>& zk = z[co.x(k)];
        zk.c[0] = Poly<K>::var(nv, co.x(k));
        for (int a = 1; a < co.gen_size(k); ++a)
            zk.c[a] = Poly<K>::var(nv, co.y(k, a));
    }
    NuPoly<K> out(n, nv);
    std::vector<std::vector<NuPoly<K>>> powers(nv);
    for (const auto& [m, c] : p.terms()) {
        NuPoly<K> term = NuPoly<K>::from(n, Poly<K>::constant(nv, c));
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(NuPoly<K>::from(n, Poly<K>::constant(nv, K(1))));
            while (static_cast<int>(pw.size()) <= m[i])
                pw.push_back(pw.back() * z[i]);
            term = term * pw[m[i]];
        }
        out += term;
    }
    return out;
}

// f = sum_a nu^a f_a(z): the unique nilomorphic extension of the seed.
template <class K>
NuPoly<K> nilomorphic_extend(const BasicSeed<K>& seed)
{
    if (!is_adapted(seed))
        throw NotAdapted("seed is not adapted to " + seed.shape.to_string());
    NiloCoords co(seed.shape);
    NuPoly<K> f(seed.shape.n, co.dim());
    for (int a = 0; a < seed.shape.n; ++a)
        if (!seed.value.c[a].is_zero())
            f += nu_substitute(seed.value.c[a], co).shift(a);
    return f;
}

// (N^a X_k).f = nu^a X_k.f for 1 <= a < n(k), and nu^{n(k)} X_k.f = 0.
template <class K>
bool check_nilomorphic(const NuPoly<K>& f, const ModuleShape& shape)
{
    NiloCoords co(shape);
    if (f.n != shape.n)
        return false;
    for (std::size_t v = co.dim(); v < f.nvars(); ++v)
        for (const auto& p : f.c)
            if (p.depends_on(v))
                return false;
    for (int k = 0; k < co.gens(); ++k) {
        NuPoly<K> fx = f.deriv(co.x(k));
        for (int a = 1; a < co.gen_size(k); ++a)
            if (f.deriv(co.y(k, a)) != fx.shift(a))
                return false;
        if (!fx.shift(co.gen_size(k)).is_zero())
            return false;
    }
    return true;
}

// eta^{(b)} = sum over multi-indices alpha of y-weight b of
// (1/alpha!) (d^alpha_x eta) y^alpha.
template <class K>
Poly<K> weighted_expand(const Poly<K>& eta, int b, const ModuleShape& shape)
{
    NiloCoords co(shape);
    if (b < 0 || b >= shape.n)
        throw BadParams("weighted_expand needs 0 <= b < n");
    std::size_t nv = co.dim();
    for (std::size_t v = 0; v < eta.nvars(); ++v)
        if (eta.depends_on(v) && (v >= nv || co.label(v).second != 0))
            throw BadParams("eta must depend on the x-variables only");
    std::vector<std::pair<int, int>> ys; // (generator, level)
    for (int k = 0; k < co.gens(); ++k)
        for (int a = 1; a < co.gen_size(k); ++a)
            ys.push_back({k, a});
    Poly<K> out(nv);
    std::vector<int> alpha(ys.size(), 0);
    // recursive enumeration of alpha with sum a * alpha = b
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (left == 0) {
            Poly<K> d = eta;
            Poly<K> ymono = Poly<K>::constant(nv, K(1));
            Q fact(1);
            for (std::size_t t = 0; t < ys.size(); ++t) {
                for (int e = 0; e < alpha[t]; ++e) {
                    d = d.deriv(co.x(ys[t].first));
                    ymono = ymono * Poly<K>::var(nv, co.y(ys[t].first, ys[t].second));
                    fact *= e + 1;
                }
            }
            if (!d.is_zero())
                out += d * ymono * K(Q(1) / fact);
            return;
        }
        if (pos == ys.size())
            return;
        int w = ys[pos].second;
        for (int e = 0; e * w <= left; ++e) {
            alpha[pos] = e;
            self(self, pos + 1, left - e * w);
        }
        alpha[pos] = 0;
    };
    rec(rec, 0, b);
    return out;
}

// Random adapted seed with small rational coefficients and total degree <= deg.
AdaptedSeed random_adapted_seed(const ModuleShape& shape, int deg, std::mt19937_64& rng);
// Same, but with one forbidden variable inserted (never adapted when some
// coefficient has a forbidden variable available).
AdaptedSeed random_nonadapted_seed(const ModuleShape& shape, int deg, std::mt19937_64& rng);

// Random polynomial in the given variables, total degree <= deg.
QPoly random_poly(std::size_t nvars, const std::vector<std::size_t>& vars, int deg, std::mt19937_64& rng,
                  int density = 2);
Q random_rational(std::mt19937_64& rng, int range = 3, int maxden = 3);

} // namespace nilgeom
