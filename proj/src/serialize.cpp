#include "nilgeom/serialize.hpp"

#include <map>

namespace nilgeom {

namespace {

template <class K>
K scalar_from_json(const json& j);

template <>
Q scalar_from_json<Q>(const json& j)
{
    return q_from_json(j);
}

template <>
QC scalar_from_json<QC>(const json& j)
{
    return qc_from_json(j);
}

template <class K>
json poly_json(const Poly<K>& p, const std::vector<std::string>& names)
{
    json arr = json::array();
    for (const auto& [mo, c] : p.terms()) {
        json m = json::object();
        for (std::size_t v = 0; v < mo.size(); ++v)
            if (mo[v] != 0) {
                if (v >= names.size())
                    throw DimensionMismatch("polynomial has more variables than names");
                m[names[v]] = mo[v];
            }
        arr.push_back({{"c", to_json(c)}, {"m", m}});
    }
    return arr;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& names)
{
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        idx[names[i]] = i;
    return idx;
}

template <class K>
Poly<K> poly_from(const json& j, const std::vector<std::string>& names,
                  std::vector<std::pair<int, Poly<K>>>* graded = nullptr)
{
    if (j.is_number_integer() || j.is_string())
        return Poly<K>::constant(names.size(), scalar_from_json<K>(j));
    if (!j.is_array())
        throw ParseError("polynomial must be an array of terms or a scalar");
    auto idx = index_of(names);
    Poly<K> p(names.size());
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("c"))
            throw ParseError("polynomial term needs a coefficient \"c\"");
        Mono mo(names.size(), 0);
        if (t.contains("m"))
            for (const auto& [name, e] : t.at("m").items()) {
                auto it = idx.find(name);
                if (it == idx.end())
                    throw ParseError("unknown variable '" + name + "'");
                if (!e.is_number_integer() || e.template get<int>() < 0)
                    throw ParseError("exponent of '" + name + "' must be a nonnegative integer");
                mo[it->second] += e.template get<int>();
            }
        K c = scalar_from_json<K>(t.at("c"));
        if (graded) {
            int k = t.value("nu", 0);
            graded->push_back({k, Poly<K>::monomial(mo, c)});
        } else {
            p += Poly<K>::monomial(mo, c);
        }
    }
    return p;
}

template <class K>
json poly_matrix_json(const PolyMatrix<K>& m, const std::vector<std::string>& names)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(poly_json(m(i, j), names));
        rows.push_back(row);
    }
    return rows;
}

template <class K>
PolyMatrix<K> poly_matrix_from(const json& j, const std::vector<std::string>& names)
{
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ParseError("polynomial matrix must be a nonempty array of rows");
    std::size_t r = j.size(), c = j[0].size();
    PolyMatrix<K> m = poly_matrix<K>(r, c, names.size());
    for (std::size_t i = 0; i < r; ++i) {
        if (j[i].size() != c)
            throw ParseError("ragged polynomial matrix");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = poly_from<K>(j[i][k], names);
    }
    return m;
}

template <class K>
NuPoly<K> nupoly_from(const json& j, int order, const std::vector<std::string>& names)
{
    std::vector<std::pair<int, Poly<K>>> graded;
    poly_from<K>(j, names, &graded);
    NuPoly<K> r(order, names.size());
    for (auto& [k, p] : graded) {
        if (k < 0)
            throw ParseError("negative nu exponent");
        if (k < order)
            r.c[k] += p;
    }
    return r;
}

template <class K>
BasicSeedForms<K> seed_forms_from(const json& j)
{
    BasicSeedForms<K> s;
    s.shape = shape_from_json(j.at("shape"));
    NiloCoords co(s.shape);
    for (const auto& b : j.at("B"))
        s.B.push_back(poly_matrix_from<K>(b, co.names()));
    return s;
}

} // namespace

json to_json(const Q& q) { return to_string(q); }
json to_json(const QC& z) { return to_string(z); }

Q q_from_json(const json& j)
{
    if (j.is_number_integer())
        return Q(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError("rational must be a \"p/q\" string or an integer");
}

QC qc_from_json(const json& j)
{
    if (j.is_number_integer())
        return QC(j.get<long>());
    if (j.is_string())
        return parse_complex(j.get<std::string>());
    throw ParseError("complex rational must be a string or an integer");
}

json to_json(const QMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMatrix qmatrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ParseError("matrix must be a nonempty array of rows");
    QMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != m.cols())
            throw ParseError("ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(i, k) = q_from_json(j[i][k]);
    }
    return m;
}

json poly_to_json(const QPoly& p, const std::vector<std::string>& names) { return poly_json(p, names); }
json poly_to_json(const CPoly& p, const std::vector<std::string>& names) { return poly_json(p, names); }
QPoly qpoly_from_json(const json& j, const std::vector<std::string>& names) { return poly_from<Q>(j, names); }
CPoly cpoly_from_json(const json& j, const std::vector<std::string>& names) { return poly_from<QC>(j, names); }
json poly_matrix_to_json(const QPolyMatrix& m, const std::vector<std::string>& names)
{
    return poly_matrix_json(m, names);
}
json poly_matrix_to_json(const PolyMatrix<QC>& m, const std::vector<std::string>& names)
{
    return poly_matrix_json(m, names);
}
QPolyMatrix qpoly_matrix_from_json(const json& j, const std::vector<std::string>& names)
{
    return poly_matrix_from<Q>(j, names);
}
PolyMatrix<QC> cpoly_matrix_from_json(const json& j, const std::vector<std::string>& names)
{
    return poly_matrix_from<QC>(j, names);
}

json nupoly_to_json(const QNuPoly& p, const std::vector<std::string>& names)
{
    json arr = json::array();
    for (int a = 0; a < p.n; ++a)
        for (auto t : poly_json(p.c[a], names)) {
            t["nu"] = a;
            arr.push_back(t);
        }
    return arr;
}

QNuPoly qnupoly_from_json(const json& j, int order, const std::vector<std::string>& names)
{
    return nupoly_from<Q>(j, order, names);
}

CNuPoly cnupoly_from_json(const json& j, int order, const std::vector<std::string>& names)
{
    return nupoly_from<QC>(j, order, names);
}

json to_json(const ModuleShape& s) { return {{"n", s.n}, {"d", s.d}, {"delta", s.delta}}; }

ModuleShape shape_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("d"))
        throw ParseError("shape needs \"n\" and \"d\"");
    ModuleShape s(j.at("n").get<int>(), j.at("d").get<std::vector<int>>(), j.value("delta", 1));
    s.validate();
    return s;
}

json to_json(const CharacteristicSignatures& s)
{
    json sigs = json::array();
    for (auto [r, q] : s.sigs)
        sigs.push_back({r, q});
    return {{"shape", to_json(s.shape)}, {"sigs", sigs}};
}

CharacteristicSignatures signatures_from_json(const json& j)
{
    CharacteristicSignatures s;
    s.shape = shape_from_json(j.at("shape"));
    for (const auto& p : j.at("sigs"))
        s.sigs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    return s;
}

json to_json(const NamedMatrix& m) { return {{"name", m.name}, {"adjoint", m.adjoint}, {"matrix", to_json(m.m)}}; }

json to_json(const MetricGerm& g)
{
    json j;
    j["kind"] = g.kind;
    j["case"] = g.case_label;
    j["names"] = g.names;
    j["g"] = poly_matrix_to_json(g.g, g.names);
    json st = json::array();
    for (const auto& s : g.structures)
        st.push_back(to_json(s));
    j["structures"] = st;
    json bp = json::array();
    for (const auto& x : g.base_point)
        bp.push_back(to_json(x));
    j["base_point"] = bp;
    if (g.shape)
        j["shape"] = to_json(*g.shape);
    j["degree_bound"] = g.degree_bound();
    return j;
}

MetricGerm germ_from_json(const json& j)
{
    MetricGerm g;
    g.kind = j.value("kind", std::string("custom"));
    g.case_label = j.value("case", std::string("1"));
    g.names = j.at("names").get<std::vector<std::string>>();
    g.g = qpoly_matrix_from_json(j.at("g"), g.names);
    if (g.g.rows() != g.names.size() || g.g.cols() != g.names.size())
        throw DimensionMismatch("metric size does not match the number of coordinates");
    if (j.contains("structures"))
        for (const auto& s : j.at("structures")) {
            NamedMatrix m{s.at("name").get<std::string>(), qmatrix_from_json(s.at("matrix")), s.value("adjoint", 1)};
            if (m.m.rows() != g.names.size() || m.m.cols() != g.names.size())
                throw DimensionMismatch("structure '" + m.name + "' has the wrong size");
            g.structures.push_back(m);
        }
    if (j.contains("base_point"))
        for (const auto& x : j.at("base_point"))
            g.base_point.push_back(q_from_json(x));
    else
        g.base_point.assign(g.names.size(), Q(0));
    if (g.base_point.size() != g.names.size())
        throw DimensionMismatch("base point has the wrong number of coordinates");
    if (j.contains("shape"))
        g.shape = shape_from_json(j.at("shape"));
    return g;
}

json to_json(const SeedForms& s)
{
    NiloCoords co(s.shape);
    json B = json::array();
    for (const auto& b : s.B)
        B.push_back(poly_matrix_to_json(b, co.names()));
    return {{"shape", to_json(s.shape)}, {"B", B}};
}

SeedForms seed_forms_from_json(const json& j) { return seed_forms_from<Q>(j); }
CSeedForms cseed_forms_from_json(const json& j) { return seed_forms_from<QC>(j); }

json to_json(const PrivilegedBasis& b)
{
    json st = json::array();
    for (const auto& s : b.structures)
        st.push_back(to_json(s));
    return {{"case", b.case_label},
            {"shape", to_json(b.shape)},
            {"change_of_basis", to_json(b.change_of_basis)},
            {"N", to_json(b.N)},
            {"G", to_json(b.G)},
            {"structures", st},
            {"eps", b.eps}};
}

json to_json(const CommutantBasis& b)
{
    json basis = json::array();
    for (const auto& m : b.basis)
        basis.push_back(to_json(m));
    return {{"case", b.case_label}, {"shape", to_json(b.shape)}, {"dim", b.dim}, {"basis", basis}};
}

json to_json(const Bicommutant& b)
{
    json basis = json::array();
    for (const auto& m : b.basis)
        basis.push_back(to_json(m));
    json j = {{"dim", b.basis.size()},
              {"basis", basis},
              {"decomposable", b.decomposable},
              {"is_s_N_span", b.is_s_N_span},
              {"exceptional", b.exceptional}};
    if (b.flat_factor)
        j["flat_factor"] = {{"dim", b.flat_factor->first},
                            {"signature", {b.flat_factor->second.first, b.flat_factor->second.second}}};
    else
        j["flat_factor"] = nullptr;
    return j;
}

json to_json(const HolonomyResult& h)
{
    return {{"dim", h.dim},
            {"dims_by_order", h.dims_by_order},
            {"contained_in_commutant", h.contained_in_commutant},
            {"commutant_dim", h.commutant_dim},
            {"stabilized_at", h.stabilized_at},
            {"generic", h.dim == h.commutant_dim}};
}

json to_json(const VerificationReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name}, {"passed", c.passed}};
        if (!c.witness.empty())
            e["witness"] = c.witness;
        checks.push_back(e);
    }
    json pts = json::array();
    for (const auto& p : r.points) {
        json q = json::array();
        for (const auto& x : p)
            q.push_back(to_json(x));
        pts.push_back(q);
    }
    json j = {{"checks", checks},
              {"points", pts},
              {"seed", r.seed},
              {"degree_bound", r.degree_bound},
              {"holonomy_order", r.holonomy_order},
              {"holonomy_truncation", "curvature and covariant derivatives up to order " +
                                          std::to_string(r.holonomy_order) + " at the first sample point"},
              {"all_passed", r.all_passed()}};
    if (r.holonomy)
        j["holonomy"] = to_json(*r.holonomy);
    return j;
}

json to_json(const CartanCharacters& c)
{
    return {{"delta", c.delta},
            {"s", c.s},
            {"dimW", c.dimW},
            {"params", c.params},
            {"equation_rank", c.equation_rank},
            {"dimV", c.dimV},
            {"bound", c.bound},
            {"closed_form", c.closed_form},
            {"ordinary", c.ordinary},
            {"flag", c.flag},
            {"redundancy",
             {{"a_rank", c.redundant_rank},
              {"a_bound", c.redundant_bound},
              {"relations", c.relation_count},
              {"relations_hold", c.relations_hold},
              {"ok", c.redundancy_ok}}}};
}

json to_json(const CartanResult& r)
{
    json j = to_json(r.main);
    j["epsilon"] = to_string(r.epsilon);
    json layers = json::array();
    for (const auto& [a, c] : r.layers) {
        json l = to_json(c);
        l["nu_power"] = a;
        layers.push_back(l);
    }
    j["layers"] = layers;
    j["ordinary"] = r.ordinary();
    return j;
}

} // namespace nilgeom
