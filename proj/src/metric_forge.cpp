#include "nilgeom/metric_forge.hpp"

#include <algorithm>

namespace nilgeom {

namespace {

template <class K>
using NuMatrix = std::vector<std::vector<NuPoly<K>>>;

// B^a_ij may involve only x_k with n(k) >= n - a, and vanishes unless
// n(i), n(j) >= n - a.
template <class K>
void check_basic(const BasicSeedForms<K>& s, const NiloCoords& co)
{
    int n = s.shape.n;
    std::size_t D = co.gens();
    if (static_cast<int>(s.B.size()) > n)
        throw SeedViolation("more seed forms than the order n");
    for (std::size_t a = 0; a < s.B.size(); ++a) {
        const auto& B = s.B[a];
        if (B.rows() != D || B.cols() != D)
            throw SeedViolation("B^" + std::to_string(a) + " must be " + std::to_string(D) + "x" + std::to_string(D));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                const auto& p = B(i, j);
                if (p != B(j, i))
                    throw SeedViolation("B^" + std::to_string(a) + " is not symmetric");
                if (p.is_zero())
                    continue;
                if (co.gen_size(i) < n - static_cast<int>(a) || co.gen_size(j) < n - static_cast<int>(a))
                    throw SeedViolation("B^" + std::to_string(a) + " has an entry outside the allowed block");
                for (std::size_t v = 0; v < p.nvars(); ++v) {
                    if (!p.depends_on(v))
                        continue;
                    if (v >= co.dim() || co.label(v).second != 0)
                        throw SeedViolation("B^" + std::to_string(a) + " depends on a non-x variable");
                    if (co.gen_size(co.label(v).first) < n - static_cast<int>(a))
                        throw SeedViolation("B^" + std::to_string(a) + " is not basic: depends on " + co.names()[v]);
                }
            }
    }
}

template <class K>
void check_leading_blocks(const BasicSeedForms<K>& s, const NiloCoords& co, const std::vector<K>& pt)
{
    int n = s.shape.n;
    for (int a = 0; a < n; ++a) {
        std::vector<int> rows;
        for (int k = 0; k < co.gens(); ++k)
            if (co.gen_size(k) == n - a)
                rows.push_back(k);
        if (rows.empty())
            continue;
        if (a >= static_cast<int>(s.B.size()))
            throw SeedViolation("missing seed form B^" + std::to_string(a));
        Matrix<K> b(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j)
                b(i, j) = s.B[a](rows[i], rows[j]).eval(pt);
        if (is_zero(det(b)))
            throw SeedViolation("leading block B^" + std::to_string(a) + "_0 is degenerate at the base point");
    }
}

template <class K>
NuMatrix<K> nu_matrix(const BasicSeedForms<K>& s, const NiloCoords& co)
{
    std::size_t D = co.gens();
    NuMatrix<K> H(D, std::vector<NuPoly<K>>(D, NuPoly<K>(s.shape.n, co.dim())));
    for (std::size_t a = 0; a < s.B.size(); ++a)
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = i; j < D; ++j) {
                const auto& p = s.B[a](i, j);
                if (p.is_zero())
                    continue;
                H[i][j] += nu_substitute(p, co).shift(static_cast<int>(a));
                if (j != i)
                    H[j][i] = H[i][j];
            }
    return H;
}

template <class K>
NuMatrix<K> hessian(const NuPoly<K>& u, const NiloCoords& co)
{
    std::size_t D = co.gens();
    NuMatrix<K> H(D, std::vector<NuPoly<K>>(D));
    for (std::size_t i = 0; i < D; ++i) {
        NuPoly<K> ui = u.deriv(co.x(i));
        for (std::size_t j = i; j < D; ++j) {
            H[i][j] = ui.deriv(co.x(j));
            H[j][i] = H[i][j];
        }
    }
    return H;
}

// A^T H B for constant A, B
template <class K>
NuMatrix<K> congruence(const Matrix<K>& A, const NuMatrix<K>& H, const Matrix<K>& B)
{
    std::size_t D = H.size();
    NuMatrix<K> tmp(D, std::vector<NuPoly<K>>(D, NuPoly<K>(H[0][0].n, H[0][0].nvars())));
    NuMatrix<K> out = tmp;
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t k = 0; k < D; ++k) {
            if (is_zero(A(k, i)))
                continue;
            for (std::size_t j = 0; j < D; ++j)
                tmp[i][j] += H[k][j] * A(k, i);
        }
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t k = 0; k < D; ++k)
            for (std::size_t j = 0; j < D; ++j)
                if (!is_zero(B(k, j)))
                    out[i][j] += tmp[i][k] * B(k, j);
    return out;
}

template <class K>
NuMatrix<K> combine(const NuMatrix<K>& a, const NuMatrix<K>& b, const K& ca, const K& cb)
{
    NuMatrix<K> r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            r[i][j] = a[i][j] * ca + b[i][j] * cb;
    return r;
}

// Unit structures of the Kaehler cases lifted to the generators of a delta=2 shape.
QMatrix generator_unit(const NiloCoords& co, const QMatrix& block)
{
    std::size_t D = co.gens();
    return kron(QMatrix::identity(D / block.rows()), block);
}

std::vector<Q> origin(std::size_t n) { return std::vector<Q>(n, Q(0)); }

// Re of a holomorphic metric G(w), w = a + i b, in real coordinates (a_c, b_c).
QPolyMatrix realify_poly_form(const PolyMatrix<QC>& G, std::size_t nv)
{
    std::vector<CPoly> vals;
    for (std::size_t c = 0; c < nv; ++c)
        vals.push_back(CPoly::var(2 * nv, 2 * c) + CPoly::var(2 * nv, 2 * c + 1) * imag_unit());
    std::size_t m = G.rows();
    QPolyMatrix r = poly_matrix<Q>(2 * m, 2 * m, 2 * nv);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            CPoly e = G(i, j).substitute(vals);
            QPoly re = real_part(e), im = imag_part(e);
            r(2 * i, 2 * j) = re;
            r(2 * i, 2 * j + 1) = -im;
            r(2 * i + 1, 2 * j) = -im;
            r(2 * i + 1, 2 * j + 1) = -re;
        }
    return r;
}

std::vector<std::string> realified_names(const std::vector<std::string>& names)
{
    std::vector<std::string> out;
    for (const auto& s : names) {
        out.push_back(s + "_re");
        out.push_back(s + "_im");
    }
    return out;
}

QPolyMatrix remap_matrix(const QPolyMatrix& m, const std::vector<std::size_t>& map, std::size_t nv)
{
    QPolyMatrix r = poly_matrix<Q>(m.rows(), m.cols(), nv);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).remap(map, nv);
    return r;
}

std::vector<std::size_t> x_map(const NiloCoords& co, std::size_t count)
{
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < count; ++i)
        map.push_back(co.x(static_cast<int>(i)));
    return map;
}

std::size_t max_nvars(const QPolyMatrix& m)
{
    std::size_t nv = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            nv = std::max(nv, m(i, j).nvars());
    return nv;
}

} // namespace

template <class K>
PolyMatrix<K> assemble_real_metric(const NiloCoords& co, const NuMatrix<K>& H)
{
    int n = co.order();
    std::size_t D = co.gens();
    if (H.size() != D)
        throw DimensionMismatch("nilomorphic matrix must be D x D");
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            int lo = n - std::min(co.gen_size(i), co.gen_size(j));
            if (H[i][j].valuation() < lo)
                throw SeedViolation("h_ij is not in nu^{n-min(n(i),n(j))}");
        }
    PolyMatrix<K> g = poly_matrix<K>(co.dim(), co.dim(), co.dim());
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j)
            for (int a = 0; a < co.gen_size(i); ++a)
                for (int c = 0; c < co.gen_size(j); ++c) {
                    int e = n - 1 - a - c;
                    if (e < 0)
                        continue;
                    g(co.index(i, a), co.index(j, c)) = H[i][j].c[e];
                }
    return g;
}

template PolyMatrix<Q> assemble_real_metric<Q>(const NiloCoords&, const NuMatrix<Q>&);
template PolyMatrix<QC> assemble_real_metric<QC>(const NiloCoords&, const NuMatrix<QC>&);

int MetricGerm::degree_bound() const
{
    int d = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            d = std::max(d, g(i, j).total_degree());
    return d;
}

const QMatrix& MetricGerm::structure(const std::string& name) const
{
    for (const auto& s : structures)
        if (s.name == name)
            return s.m;
    throw BadParams("germ has no structure named " + name);
}

QMatrix MetricGerm::at(const std::vector<Q>& point) const
{
    if (point.size() != dim())
        throw DimensionMismatch("point has the wrong number of coordinates");
    return eval(g, point);
}

void MetricGerm::validate() const
{
    std::size_t m = dim();
    if (!g.square() || names.size() != m)
        throw DimensionMismatch("metric matrix and coordinate names disagree");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g(i, j) != g(j, i))
                throw NotSelfAdjoint("metric matrix is not symmetric");
    if (det(at(base_point)) == 0)
        throw Degenerate("metric is degenerate at the base point");
    for (const auto& s : structures) {
        if (s.m.rows() != m || s.m.cols() != m)
            throw DimensionMismatch("structure " + s.name + " has the wrong size");
        // g S = adj * S^T g
        QPolyMatrix lhs = mul(g, s.m);
        QPolyMatrix rhs = mul(s.m.transpose(), g);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (lhs(i, j) != rhs(i, j) * Q(s.adjoint))
                    throw NotSelfAdjoint("structure " + s.name + " fails its adjointness identity");
    }
}

MetricGerm forge_nilpotent_metric(const SeedForms& seeds)
{
    seeds.shape.validate();
    NiloCoords co(seeds.shape);
    check_basic(seeds, co);
    check_leading_blocks(seeds, co, origin(co.dim()));
    MetricGerm germ;
    germ.kind = "nilpotent";
    germ.case_label = "1";
    germ.names = co.names();
    germ.g = assemble_real_metric(co, nu_matrix(seeds, co));
    germ.structures.push_back({"N", co.N(), 1});
    germ.base_point = origin(co.dim());
    germ.shape = seeds.shape;
    germ.validate();
    return germ;
}

MetricGerm forge_kahler_nilpotent(const ModuleShape& shape, const std::string& c, const AdaptedSeed& potential)
{
    if (c != "2" && c != "2p")
        throw BadParams("real potentials build cases 2 and 2p; got " + c);
    if (shape.delta != 2)
        throw IncompatibleShape("cases 2 and 2p need a delta = 2 shape");
    if (potential.shape != shape)
        throw IncompatibleShape("potential seed lives on another shape");
    NiloCoords co(shape);
    QNuPoly u = nilomorphic_extend(potential);
    auto H = hessian(u, co);
    QMatrix unit = c == "2" ? jmat(1) : ipq(1, 1);
    QMatrix S = generator_unit(co, unit);
    auto SHS = congruence(S, H, S);
    auto h = c == "2" ? combine(H, SHS, Q(1, 4), Q(1, 4)) : combine(H, SHS, Q(1, 2), Q(-1, 2));
    MetricGerm germ;
    germ.kind = c == "2" ? "kahler" : "parakahler";
    germ.case_label = c;
    germ.names = co.names();
    germ.g = assemble_real_metric(co, h);
    germ.structures.push_back({"N", co.N(), 1});
    germ.structures.push_back({c == "2" ? "J" : "L", co.lift(unit), -1});
    germ.base_point = origin(co.dim());
    germ.shape = shape;
    germ.validate();
    return germ;
}

MetricGerm forge_kahler_nilpotent(const ModuleShape& shape, const std::string& c, const CAdaptedSeed& potential)
{
    if (c != "2C")
        throw BadParams("complex potentials build case 2C; got " + c);
    if (shape.delta != 2)
        throw IncompatibleShape("case 2C needs a delta = 2 shape");
    if (potential.shape != shape)
        throw IncompatibleShape("potential seed lives on another shape");
    NiloCoords co(shape);
    CNuPoly u = nilomorphic_extend(potential);
    auto H = hessian(u, co);
    CMatrix S = to_complex(generator_unit(co, ipq(1, 1)));
    auto h = combine(H, congruence(S, H, S), QC(Q(1, 2)), QC(Q(-1, 2)));
    PolyMatrix<QC> G = assemble_real_metric(co, h);
    MetricGerm germ;
    germ.kind = "kahler";
    germ.case_label = "2C";
    germ.names = realified_names(co.names());
    germ.g = realify_poly_form(G, co.dim());
    std::size_t m = co.dim();
    QMatrix jbar = kron(QMatrix::identity(m), jmat(1));
    QMatrix L = realify(to_complex(co.lift(ipq(1, 1))));
    germ.structures.push_back({"N", realify(to_complex(co.N())), 1});
    germ.structures.push_back({"Jbar", jbar, 1});
    germ.structures.push_back({"L", L, -1});
    germ.structures.push_back({"J", jbar * L, -1});
    germ.base_point = origin(2 * m);
    germ.shape = shape;
    germ.validate();
    return germ;
}

MetricGerm forge_complex_nilpotent(const CSeedForms& seeds)
{
    seeds.shape.validate();
    if (seeds.shape.delta != 1)
        throw IncompatibleShape("case 1C seeds live on a delta = 1 complex shape");
    NiloCoords co(seeds.shape);
    check_basic(seeds, co);
    check_leading_blocks(seeds, co, std::vector<QC>(co.dim(), QC(0)));
    PolyMatrix<QC> G = assemble_real_metric(co, nu_matrix(seeds, co));
    std::size_t m = co.dim();
    MetricGerm germ;
    germ.kind = "complex";
    germ.case_label = "1C";
    germ.names = realified_names(co.names());
    germ.g = realify_poly_form(G, m);
    germ.structures.push_back({"N", realify(to_complex(co.N())), 1});
    germ.structures.push_back({"Jbar", kron(QMatrix::identity(m), jmat(1)), 1});
    germ.base_point = origin(2 * m);
    germ.shape = seeds.shape;
    germ.validate();
    return germ;
}

MetricGerm forge_by_tensoring(const QPolyMatrix& base, int n)
{
    std::size_t D = base.rows();
    if (!base.square() || D == 0)
        throw DimensionMismatch("base metric must be square and nonempty");
    if (n < 1)
        throw BadParams("order n must be positive");
    if (max_nvars(base) > D)
        throw BadParams("base metric may only use its own D coordinates");
    std::vector<int> d(n, 0);
    d[n - 1] = static_cast<int>(D);
    ModuleShape shape(n, d, 1);
    NiloCoords co(shape);
    SeedForms s{shape, {remap_matrix(base, x_map(co, D), co.dim())}};
    for (int a = 1; a < n; ++a)
        s.B.push_back(poly_matrix<Q>(D, D, co.dim()));
    MetricGerm germ;
    try {
        germ = forge_nilpotent_metric(s);
    } catch (const SeedViolation& e) {
        throw Degenerate(std::string("base metric: ") + e.what());
    }
    germ.kind = "tensor";
    return germ;
}

MetricGerm forge_two_nilpotents(const MetricGerm& quotient, const std::string& u_name, const QPolyMatrix& B1)
{
    std::size_t D = quotient.dim();
    const QMatrix& U = quotient.structure(u_name);
    if (U.rows() != D || B1.rows() != D || B1.cols() != D)
        throw ShapeViolation("U and B1 must act on the D-dimensional quotient");
    if (max_nvars(B1) > D)
        throw ShapeViolation("B1 may only use the quotient coordinates");
    {
        QPolyMatrix lhs = mul(quotient.g, U), rhs = mul(U.transpose(), quotient.g);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j)
                if (lhs(i, j) != rhs(i, j))
                    throw NestedSeedViolation("U is not self-adjoint for the quotient metric");
    }
    ModuleShape shape(2, {0, static_cast<int>(D)}, 1);
    NiloCoords co(shape);
    auto map = x_map(co, D);
    SeedForms s{shape, {remap_matrix(quotient.g, map, co.dim()), remap_matrix(B1, map, co.dim())}};
    MetricGerm germ;
    try {
        germ = forge_nilpotent_metric(s);
    } catch (const SeedViolation& e) {
        throw NestedSeedViolation(e.what());
    }
    QMatrix Np(co.dim(), co.dim());
    for (std::size_t j = 0; j < D; ++j)
        for (std::size_t k = 0; k < D; ++k)
            Np(co.y(static_cast<int>(j), 1), co.x(static_cast<int>(k))) = U(j, k);
    germ.kind = "two-nilpotents";
    germ.structures.push_back({"Nprime", Np, 1});
    germ.validate();
    return germ;
}

MetricGerm forge_two_nilpotents(const SeedForms& quotient_seeds, const QPolyMatrix& B1)
{
    MetricGerm q;
    try {
        q = forge_nilpotent_metric(quotient_seeds);
    } catch (const SeedViolation& e) {
        throw NestedSeedViolation(e.what());
    }
    return forge_two_nilpotents(q, "N", B1);
}

MetricGerm forge_lorentzian(const QPolyMatrix& B1_0, const QPoly& b)
{
    std::size_t m = B1_0.rows();
    if (!B1_0.square())
        throw DimensionMismatch("B1_0 must be square");
    ModuleShape shape = m ? ModuleShape(2, {static_cast<int>(m), 1}, 1) : ModuleShape(2, {0, 1}, 1);
    NiloCoords co(shape);
    std::size_t nv = co.dim();
    // B^0 = 1 on the size-2 generator, B^1 = diag(B1_0, b)
    QPolyMatrix B0 = poly_matrix<Q>(m + 1, m + 1, nv);
    B0(m, m) = QPoly::constant(nv, Q(1));
    QPolyMatrix B1 = poly_matrix<Q>(m + 1, m + 1, nv);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            B1(i, j) = B1_0(i, j);
    B1(m, m) = b;
    QMatrix b0 = eval(B1_0, origin(nv));
    if (m) {
        Signature sg = signature(b0);
        if (sg.p != static_cast<int>(m))
            throw Degenerate("B1_0 is not positive definite at the base point");
    }
    MetricGerm germ;
    try {
        germ = forge_nilpotent_metric(SeedForms{shape, {B0, B1}});
    } catch (const SeedViolation& e) {
        throw Degenerate(e.what());
    }
    germ.kind = "lorentz";
    return germ;
}

MetricGerm tangent_lift(const QPolyMatrix& base)
{
    MetricGerm germ = forge_by_tensoring(base, 2);
    germ.kind = "tangent-lift";
    return germ;
}

std::vector<std::vector<QNuPoly>> nilomorphic_metric(const MetricGerm& germ)
{
    if (!germ.shape || germ.shape->delta != 1 || germ.names.size() != static_cast<std::size_t>(germ.shape->dim()))
        throw BadParams("germ carries no real nilpotent shape");
    NiloCoords co(*germ.shape);
    int n = co.order();
    std::size_t D = co.gens();
    std::vector<std::vector<QNuPoly>> h(D, std::vector<QNuPoly>(D, QNuPoly(n, co.dim())));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j)
            for (int a = 0; a < n; ++a) {
                int idx = co.index(static_cast<int>(j), n - 1 - a);
                if (idx >= 0)
                    h[i][j].c[a] = germ.g(co.x(static_cast<int>(i)), idx);
            }
    return h;
}

SeedForms random_seed_forms(const ModuleShape& shape, int deg, std::mt19937_64& rng, bool random_signs)
{
    NiloCoords co(shape);
    int n = shape.n;
    std::size_t D = co.gens(), nv = co.dim();
    SeedForms s{shape, {}};
    std::bernoulli_distribution coin(0.5);
    for (int a = 0; a < n; ++a) {
        QPolyMatrix B = poly_matrix<Q>(D, D, nv);
        std::vector<std::size_t> vars;
        for (std::size_t k = 0; k < D; ++k)
            if (co.gen_size(k) >= n - a)
                vars.push_back(co.x(k));
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = i; j < D; ++j) {
                if (co.gen_size(i) < n - a || co.gen_size(j) < n - a)
                    continue;
                bool lead = co.gen_size(i) == n - a && co.gen_size(j) == n - a;
                QPoly p = random_poly(nv, vars, deg, rng, 1);
                if (lead && i == j)
                    p += QPoly::constant(nv, Q(random_signs && coin(rng) ? -1 : 1));
                else if (!lead)
                    p += QPoly::constant(nv, random_rational(rng));
                B(i, j) = p;
                B(j, i) = p;
            }
        s.B.push_back(B);
    }
    return s;
}

namespace {

QPoly drop_low_degree(const QPoly& p, int mindeg)
{
    QPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        int s = 0;
        for (int e : m)
            s += e;
        if (s >= mindeg)
            r.add_term(m, c);
    }
    return r;
}

} // namespace

AdaptedSeed random_kahler_potential(const ModuleShape& shape, const std::string& c, int deg, std::mt19937_64& rng)
{
    NiloCoords co(shape);
    int n = shape.n;
    std::size_t nv = co.dim();
    AdaptedSeed s = random_adapted_seed(shape, deg, rng);
    for (int a = 0; a < n; ++a) {
        QPoly p = drop_low_degree(s.value.c[a], 3);
        for (int k = 0; k + 1 < co.gens(); k += 2) {
            if (co.gen_size(k) != n - a)
                continue;
            QPoly x0 = QPoly::var(nv, co.x(k)), x1 = QPoly::var(nv, co.x(k + 1));
            p += c == "2" ? x0 * x0 + x1 * x1 : x0 * x1;
        }
        s.value.c[a] = p;
    }
    return s;
}

CAdaptedSeed random_complex_potential(const ModuleShape& shape, int deg, std::mt19937_64& rng)
{
    NiloCoords co(shape);
    int n = shape.n;
    std::size_t nv = co.dim();
    AdaptedSeed re = random_adapted_seed(shape, deg, rng);
    AdaptedSeed im = random_adapted_seed(shape, deg, rng);
    CAdaptedSeed s{shape, CNuPoly(n, nv)};
    for (int a = 0; a < n; ++a) {
        CPoly p = to_complex(drop_low_degree(re.value.c[a], 3)) +
                  to_complex(drop_low_degree(im.value.c[a], 3)) * imag_unit();
        for (int k = 0; k + 1 < co.gens(); k += 2)
            if (co.gen_size(k) == n - a)
                p += CPoly::var(nv, co.x(k)) * CPoly::var(nv, co.x(k + 1));
        s.value.c[a] = p;
    }
    return s;
}

CSeedForms random_complex_seed_forms(const ModuleShape& shape, int deg, std::mt19937_64& rng)
{
    SeedForms re = random_seed_forms(shape, deg, rng, false);
    SeedForms im = random_seed_forms(shape, deg, rng, false);
    CSeedForms s{shape, {}};
    for (std::size_t a = 0; a < re.B.size(); ++a) {
        std::size_t D = re.B[a].rows();
        PolyMatrix<QC> B(D, D);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                // keep the leading constants real (= Id), perturb the rest
                QPoly imp = im.B[a](i, j);
                imp = drop_low_degree(imp, 1);
                B(i, j) = to_complex(re.B[a](i, j)) + to_complex(imp) * imag_unit();
            }
        s.B.push_back(B);
    }
    return s;
}

QPolyMatrix random_symmetric(std::size_t m, std::size_t nvars, int deg, std::mt19937_64& rng)
{
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < nvars; ++v)
        vars.push_back(v);
    QPolyMatrix B = poly_matrix<Q>(m, m, nvars);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            QPoly p = random_poly(nvars, vars, deg, rng, 1);
            B(i, j) = p;
            B(j, i) = p;
        }
    return B;
}

} // namespace nilgeom
