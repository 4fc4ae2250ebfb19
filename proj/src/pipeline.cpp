#include "nilgeom/pipeline.hpp"

#include "nilgeom/algebra_lab.hpp"

#include <random>

namespace nilgeom {

namespace {

int random_degree(const json& p, int fallback)
{
    if (!p.contains("random"))
        return -1;
    const json& r = p.at("random");
    return r.is_object() ? r.value("degree", fallback) : fallback;
}

QPolyMatrix random_base(std::size_t D, int deg, std::mt19937_64& rng)
{
    QPolyMatrix B = random_symmetric(D, D, deg, rng);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < D; ++i)
        B(i, i) += QPoly::constant(D, Q(coin(rng) ? 1 : -1));
    return B;
}

std::vector<std::string> default_names(std::size_t D)
{
    std::vector<std::string> n;
    for (std::size_t i = 0; i < D; ++i)
        n.push_back("x" + std::to_string(i + 1));
    return n;
}

QPolyMatrix base_metric(const json& p, std::mt19937_64& rng)
{
    int deg = random_degree(p, 2);
    if (deg >= 0)
        return random_base(p.at("D").get<std::size_t>(), deg, rng);
    const json& b = p.at("base");
    std::vector<std::string> names =
        b.contains("names") ? b.at("names").get<std::vector<std::string>>() : default_names(b.at("g").size());
    return qpoly_matrix_from_json(b.at("g"), names);
}

MetricGerm quotient_germ(const json& q, std::mt19937_64& rng, int deg)
{
    if (q.contains("names"))
        return germ_from_json(q);
    if (q.contains("B"))
        return forge_nilpotent_metric(seed_forms_from_json(q));
    return forge_nilpotent_metric(random_seed_forms(shape_from_json(q.at("shape")), deg, rng));
}

} // namespace

MetricGerm forge_from_spec(const std::string& kind, const json& p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    if (kind == "nilpotent") {
        int deg = random_degree(p, 3);
        if (p.contains("B")) {
            // explicit forms, with "random" placeholders drawn like random seeds
            ModuleShape shape = shape_from_json(p.at("shape"));
            SeedForms drawn = random_seed_forms(shape, deg >= 0 ? deg : 3, rng);
            NiloCoords co(shape);
            SeedForms s{shape, {}};
            for (std::size_t a = 0; a < p.at("B").size(); ++a) {
                const json& b = p.at("B")[a];
                if (b.is_string() && b.get<std::string>() == "random" && a < drawn.B.size())
                    s.B.push_back(drawn.B[a]);
                else
                    s.B.push_back(qpoly_matrix_from_json(b, co.names()));
            }
            return forge_nilpotent_metric(s);
        }
        if (deg >= 0) {
            bool signs = p.at("random").is_object() ? p.at("random").value("signs", true) : true;
            return forge_nilpotent_metric(random_seed_forms(shape_from_json(p.at("shape")), deg, rng, signs));
        }
        return forge_nilpotent_metric(seed_forms_from_json(p));
    }
    if (kind == "kahler" || kind == "parakahler") {
        ModuleShape shape = shape_from_json(p.at("shape"));
        std::string label = p.value("case", std::string(kind == "kahler" ? "2" : "2p"));
        if (kind == "parakahler" && label != "2p")
            throw BadParams("parakahler forging uses case 2p");
        if (kind == "kahler" && label != "2" && label != "2C")
            throw BadParams("kahler forging uses case 2 or 2C");
        int deg = random_degree(p, 4);
        NiloCoords co(shape);
        if (label == "2C") {
            CAdaptedSeed s{shape, deg >= 0 ? random_complex_potential(shape, deg, rng).value
                                           : cnupoly_from_json(p.at("potential"), shape.n, co.names())};
            return forge_kahler_nilpotent(shape, label, s);
        }
        AdaptedSeed s{shape, deg >= 0 ? random_kahler_potential(shape, label, deg, rng).value
                                      : qnupoly_from_json(p.at("potential"), shape.n, co.names())};
        return forge_kahler_nilpotent(shape, label, s);
    }
    if (kind == "complex") {
        int deg = random_degree(p, 3);
        if (deg >= 0)
            return forge_complex_nilpotent(random_complex_seed_forms(shape_from_json(p.at("shape")), deg, rng));
        return forge_complex_nilpotent(cseed_forms_from_json(p));
    }
    if (kind == "tensor")
        return forge_by_tensoring(base_metric(p, rng), p.at("n").get<int>());
    if (kind == "tangent-lift")
        return tangent_lift(base_metric(p, rng));
    if (kind == "lorentz") {
        std::size_t m = p.at("m").get<std::size_t>();
        ModuleShape shape = m ? ModuleShape(2, {static_cast<int>(m), 1}, 1) : ModuleShape(2, {0, 1}, 1);
        NiloCoords co(shape);
        std::size_t nv = co.dim();
        int deg = random_degree(p, 2);
        if (deg >= 0) {
            std::vector<std::size_t> xs;
            for (int k = 0; k < co.gens(); ++k)
                xs.push_back(static_cast<std::size_t>(co.x(k)));
            QPolyMatrix B1 = poly_matrix<Q>(m, m, nv);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    QPoly e = random_poly(nv, xs, deg, rng, 1);
                    if (i == j)
                        e += QPoly::constant(nv, Q(1));
                    B1(i, j) = e;
                    B1(j, i) = e;
                }
            return forge_lorentzian(B1, random_poly(nv, xs, deg, rng, 1));
        }
        QPolyMatrix B1 = m ? qpoly_matrix_from_json(p.at("B1_0"), co.names()) : poly_matrix<Q>(0, 0, nv);
        return forge_lorentzian(B1, qpoly_from_json(p.at("b"), co.names()));
    }
    if (kind == "two-nilpotents") {
        int deg = random_degree(p, 2);
        MetricGerm q = quotient_germ(p.at("quotient"), rng, deg >= 0 ? deg : 2);
        std::string u = p.value("u", std::string("N"));
        QPolyMatrix B1 = deg >= 0 ? random_symmetric(q.dim(), q.dim(), deg, rng)
                                  : qpoly_matrix_from_json(p.at("B1"), q.names);
        return forge_two_nilpotents(q, u, B1);
    }
    throw BadParams("unknown forge kind '" + kind + "'");
}

RoundtripResult forge_and_verify(const std::string& kind, const json& payload, std::uint64_t seed, int points,
                                 int holonomy_order)
{
    bool random = payload.contains("random");
    if (payload.contains("B"))
        for (const auto& b : payload.at("B"))
            random = random || b.is_string();
    RoundtripResult res;
    for (int draw = 0; draw < (random ? 4 : 1); ++draw) {
        res.draws = draw + 1;
        res.germ = forge_from_spec(kind, payload, seed + static_cast<std::uint64_t>(draw));
        res.report = verify(res.germ, points, holonomy_order, seed);
        res.generic = res.report.holonomy && res.report.holonomy->dim == res.report.holonomy->commutant_dim;
        if (res.generic)
            break;
    }
    MetricGerm back = germ_from_json(to_json(res.germ));
    res.json_roundtrip = back.g == res.germ.g && back.names == res.germ.names &&
                         back.structures.size() == res.germ.structures.size();
    for (std::size_t i = 0; res.json_roundtrip && i < back.structures.size(); ++i)
        res.json_roundtrip = back.structures[i].m == res.germ.structures[i].m &&
                             back.structures[i].name == res.germ.structures[i].name;
    return res;
}

json classify_pair(const json& payload)
{
    QMatrix g = qmatrix_from_json(payload.at("g"));
    std::size_t m = g.rows();
    QMatrix N = payload.contains("N") ? qmatrix_from_json(payload.at("N")) : QMatrix(m, m);
    if (N.rows() != m || N.cols() != m || g.cols() != m)
        throw DimensionMismatch("N and g must be square of the same size");
    CharacteristicSignatures cs = characteristic_signatures(N, g);
    json out = to_json(cs);
    auto gs = global_signature(cs.shape, cs);
    out["global_signature"] = {gs.first, gs.second};
    out["blocks"] = cs.shape.block_sizes();
    if (payload.contains("structures")) {
        std::vector<QMatrix> gens;
        for (const auto& s : payload.at("structures"))
            gens.push_back(qmatrix_from_json(s));
        out["type"] = identify_type(gens, g);
    }
    return out;
}

} // namespace nilgeom
