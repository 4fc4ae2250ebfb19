#include "nilgeom/nilocalc.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace nilgeom;

namespace {

QPoly X(const NiloCoords& co, int k, int a = 0) { return QPoly::var(co.dim(), co.index(k, a)); }

QNuPoly nu(const NiloCoords& co, std::vector<QPoly> coeffs)
{
    QNuPoly f(co.order(), co.dim());
    for (std::size_t a = 0; a < coeffs.size(); ++a)
        f.c[a] = coeffs[a];
    return f;
}

// df(N v) = nu df(v) for every coordinate field v, N read off NiloCoords::N()
bool oracle_nilomorphic(const QNuPoly& f, const ModuleShape& s)
{
    NiloCoords co(s);
    QMatrix N = co.N();
    for (std::size_t v = 0; v < co.dim(); ++v) {
        QNuPoly lhs(s.n, co.dim());
        for (std::size_t w = 0; w < co.dim(); ++w)
            if (sgn(N(w, v)) != 0)
                lhs += f.deriv(w) * N(w, v);
        if (lhs != f.deriv(v).shift(1))
            return false;
    }
    return true;
}

QNuPoly restrict_to_transversal(const QNuPoly& f, const NiloCoords& co)
{
    std::vector<QPoly> vals;
    for (std::size_t v = 0; v < co.dim(); ++v)
        vals.push_back(co.label(v).second == 0 ? QPoly::var(co.dim(), v) : QPoly(co.dim()));
    QNuPoly r(f.n, co.dim());
    for (int a = 0; a < f.n; ++a)
        r.c[a] = f.c[a].substitute(vals);
    return r;
}

} // namespace

TEST_CASE("is_adapted examples")
{
    ModuleShape s(2, {1, 1});
    NiloCoords co(s);
    CHECK(is_adapted(AdaptedSeed{s, nu(co, {QPoly::constant(co.dim(), 5)})}));
    // generator 0 has n(0) = 1, generator 1 has n(1) = 2
    CHECK(is_adapted(AdaptedSeed{s, nu(co, {X(co, 1), X(co, 0)})}));
    CHECK_FALSE(is_adapted(AdaptedSeed{s, nu(co, {X(co, 0), QPoly(co.dim())})}));
    // y-variables are never allowed in a seed
    CHECK_FALSE(is_adapted(AdaptedSeed{s, nu(co, {QPoly(co.dim()), X(co, 1, 1)})}));
}

TEST_CASE("nilomorphic_extend examples")
{
    ModuleShape s2(2, {0, 1});
    NiloCoords c2(s2);
    QPoly x = X(c2, 0), y = X(c2, 0, 1);
    auto f = nilomorphic_extend(AdaptedSeed{s2, nu(c2, {x * x})});
    CHECK(f == nu(c2, {x * x, x * y * Q(2)}));
    CHECK(check_nilomorphic(f, s2));
    CHECK(oracle_nilomorphic(f, s2));

    ModuleShape s3(3, {0, 0, 1});
    NiloCoords c3(s3);
    auto g = nilomorphic_extend(AdaptedSeed{s3, nu(c3, {X(c3, 0)})});
    CHECK(g == nu(c3, {X(c3, 0), X(c3, 0, 1), X(c3, 0, 2)}));

    auto cst = nilomorphic_extend(AdaptedSeed{s3, nu(c3, {QPoly::constant(c3.dim(), Q(7, 3))})});
    CHECK(cst == nu(c3, {QPoly::constant(c3.dim(), Q(7, 3))}));

    ModuleShape s(2, {1, 1});
    NiloCoords co(s);
    CHECK_THROWS_AS(nilomorphic_extend(AdaptedSeed{s, nu(co, {X(co, 0)})}), NotAdapted);
}

TEST_CASE("check_nilomorphic examples")
{
    ModuleShape s(2, {0, 1});
    NiloCoords co(s);
    QPoly y = X(co, 0, 1);
    CHECK_FALSE(check_nilomorphic(nu(co, {y}), s));
    CHECK_FALSE(oracle_nilomorphic(nu(co, {y}), s));
    // nu*y: Y.f = nu while nu*X.f = 0
    CHECK_FALSE(check_nilomorphic(nu(co, {QPoly(co.dim()), y}), s));
    CHECK_FALSE(oracle_nilomorphic(nu(co, {QPoly(co.dim()), y}), s));
    QPoly x = X(co, 0);
    CHECK(check_nilomorphic(nu(co, {QPoly(co.dim()), x}), s));
    CHECK(oracle_nilomorphic(nu(co, {QPoly(co.dim()), x}), s));
    CHECK(check_nilomorphic(nu(co, {x, y}), s));
    CHECK(oracle_nilomorphic(nu(co, {x, y}), s));
}

TEST_CASE("weighted_expand examples")
{
    ModuleShape s(2, {0, 2});
    NiloCoords co(s);
    std::mt19937_64 rng(3);
    std::vector<std::size_t> xs{static_cast<std::size_t>(co.x(0)), static_cast<std::size_t>(co.x(1))};
    QPoly B = random_poly(co.dim(), xs, 3, rng, 4);
    CHECK(weighted_expand(B, 0, s) == B);
    QPoly expect = B.deriv(co.x(0)) * X(co, 0, 1) + B.deriv(co.x(1)) * X(co, 1, 1);
    CHECK(weighted_expand(B, 1, s) == expect);

    // weight 3 on a four-layer module with two generators
    ModuleShape s4(4, {0, 0, 0, 2});
    NiloCoords c4(s4);
    std::vector<std::size_t> x4{static_cast<std::size_t>(c4.x(0)), static_cast<std::size_t>(c4.x(1))};
    QPoly B0 = random_poly(c4.dim(), x4, 4, rng, 5);
    QPoly three(c4.dim());
    for (int i = 0; i < 2; ++i) {
        three += B0.deriv(c4.x(i)) * X(c4, i, 3);
        for (int j = 0; j < 2; ++j) {
            three += B0.deriv(c4.x(i)).deriv(c4.x(j)) * X(c4, i, 2) * X(c4, j, 1);
            for (int k = 0; k < 2; ++k)
                three += B0.deriv(c4.x(i)).deriv(c4.x(j)).deriv(c4.x(k)) * X(c4, i, 1) * X(c4, j, 1) * X(c4, k, 1) *
                         Q(1, 6);
        }
    }
    CHECK(weighted_expand(B0, 3, s4) == three);
    CHECK_THROWS_AS(weighted_expand(B0, 4, s4), BadParams);
}

TEST_CASE("random adapted seeds: extension, restriction, oracle")
{
    std::mt19937_64 rng(21);
    int checked = 0;
    for (const auto& d : oracle::shapes(8, 8)) {
        ModuleShape s(static_cast<int>(d.size()), d);
        NiloCoords co(s);
        for (int rep = 0; rep < 3; ++rep) {
            AdaptedSeed seed = random_adapted_seed(s, 3, rng);
            REQUIRE(is_adapted(seed));
            QNuPoly f = nilomorphic_extend(seed);
            CHECK(check_nilomorphic(f, s));
            CHECK(oracle_nilomorphic(f, s));
            QNuPoly r = restrict_to_transversal(f, co);
            CHECK(r == nu(co, seed.value.c));
            CHECK(nilomorphic_extend(AdaptedSeed{s, r}) == f);
            ++checked;
            if (s.n >= 2) {
                AdaptedSeed bad = random_nonadapted_seed(s, 3, rng);
                CHECK_FALSE(is_adapted(bad));
                CHECK_THROWS_AS(nilomorphic_extend(bad), NotAdapted);
            } else {
                CHECK_THROWS_AS(random_nonadapted_seed(s, 3, rng), BadParams);
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("products of nilomorphic functions stay nilomorphic")
{
    std::mt19937_64 rng(8);
    ModuleShape s(3, {1, 0, 1});
    for (int rep = 0; rep < 10; ++rep) {
        QNuPoly f = nilomorphic_extend(random_adapted_seed(s, 2, rng));
        QNuPoly g = nilomorphic_extend(random_adapted_seed(s, 2, rng));
        CHECK(check_nilomorphic(f * g, s));
        CHECK(check_nilomorphic(f + g, s));
    }
}
