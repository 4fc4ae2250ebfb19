#include "nilgeom/nilocalc.hpp"

namespace nilgeom {

Q random_rational(std::mt19937_64& rng, int range, int maxden)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, maxden);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

QPoly random_poly(std::size_t nvars, const std::vector<std::size_t>& vars, int deg, std::mt19937_64& rng,
                  int density)
{
    QPoly p(nvars);
    if (vars.empty() || deg < 1)
        return p;
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<int> dpick(1, deg);
    int terms = density * deg;
    for (int t = 0; t < terms; ++t) {
        Mono m(nvars, 0);
        int d = dpick(rng);
        for (int e = 0; e < d; ++e)
            ++m[vars[pick(rng)]];
        p.add_term(m, random_rational(rng));
    }
    return p;
}

namespace {

std::vector<std::size_t> allowed_x(const NiloCoords& co, int a)
{
    std::vector<std::size_t> v;
    for (int k = 0; k < co.gens(); ++k)
        if (co.gen_size(k) >= co.order() - a)
            v.push_back(co.x(k));
    return v;
}

} // namespace

AdaptedSeed random_adapted_seed(const ModuleShape& shape, int deg, std::mt19937_64& rng)
{
    NiloCoords co(shape);
    AdaptedSeed s{shape, QNuPoly(shape.n, co.dim())};
    for (int a = 0; a < shape.n; ++a) {
        s.value.c[a] = random_poly(co.dim(), allowed_x(co, a), deg, rng);
        s.value.c[a] += QPoly::constant(co.dim(), random_rational(rng));
    }
    return s;
}

AdaptedSeed random_nonadapted_seed(const ModuleShape& shape, int deg, std::mt19937_64& rng)
{
    NiloCoords co(shape);
    AdaptedSeed s = random_adapted_seed(shape, deg, rng);
    // find a coefficient with a forbidden x-variable, else use a y-variable
    for (int a = 0; a < shape.n; ++a)
        for (int k = 0; k < co.gens(); ++k)
            if (co.gen_size(k) < shape.n - a) {
                s.value.c[a] += QPoly::var(co.dim(), co.x(k));
                return s;
            }
    for (int k = 0; k < co.gens(); ++k)
        if (co.gen_size(k) > 1) {
            s.value.c[0] += QPoly::var(co.dim(), co.y(k, 1));
            return s;
        }
    throw BadParams("every seed is adapted for shape " + shape.to_string());
}

} // namespace nilgeom
