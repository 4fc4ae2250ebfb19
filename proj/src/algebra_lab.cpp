#include "nilgeom/algebra_lab.hpp"

#include <algorithm>

namespace nilgeom {

namespace {

void add_commutation_rows(QMatrix& sys, std::size_t& row, const QMatrix& F, std::size_t m)
{
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                if (!is_zero(F(k, j)))
                    sys(row, i * m + k) += F(k, j);
                if (!is_zero(F(i, k)))
                    sys(row, k * m + j) -= F(i, k);
            }
            ++row;
        }
}

void add_skew_rows(QMatrix& sys, std::size_t& row, const QMatrix& G, std::size_t m)
{
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                if (!is_zero(G(k, j)))
                    sys(row, k * m + i) += G(k, j);
                if (!is_zero(G(i, k)))
                    sys(row, k * m + j) += G(i, k);
            }
            ++row;
        }
}

std::vector<QMatrix> solution_matrices(const QMatrix& sys, std::size_t m)
{
    QMatrix ns = nullspace(sys);
    std::vector<QMatrix> out;
    for (std::size_t k = 0; k < ns.cols(); ++k)
        out.push_back(unflatten(ns, k, m, m));
    return out;
}

bool self_adjoint(const QMatrix& X, const QMatrix& G)
{
    return X.transpose() * G == G * X;
}

bool skew_adjoint(const QMatrix& X, const QMatrix& G)
{
    return (X.transpose() * G + G * X).is_zero();
}

// Trace-free part, scaled to clear the 1/d factor.
QMatrix trace_free(const QMatrix& X)
{
    Q t = trace(X);
    Q d(static_cast<long>(X.rows()));
    return X * d - QMatrix::identity(X.rows()) * t;
}

// If X^2 = c Id, returns c.
std::optional<Q> square_scalar(const QMatrix& X)
{
    QMatrix s = X * X;
    Q c = s(0, 0);
    if (s == QMatrix::identity(X.rows()) * c)
        return c;
    return std::nullopt;
}

std::vector<QMatrix> adjoint_part(const std::vector<QMatrix>& A, const QMatrix& G, int sign)
{
    QMatrix Gi = inverse(G);
    std::vector<QMatrix> parts;
    for (const auto& X : A) {
        QMatrix Xs = Gi * X.transpose() * G;
        parts.push_back(sign > 0 ? QMatrix(X + Xs) : QMatrix(X - Xs));
    }
    std::vector<QMatrix> nz;
    for (auto& P : parts)
        if (!P.is_zero())
            nz.push_back(P);
    return independent_subset(nz);
}

std::vector<QMatrix> unit_algebra(const PrivilegedBasis& pb)
{
    // unit real dimension
    std::size_t u = static_cast<std::size_t>(unit_dim(pb.case_label, pb.shape));
    std::vector<QMatrix> unit_st;
    for (const auto& s : pb.structures)
        unit_st.push_back(s.m.block(0, 0, u, u));
    return centralizer(unit_st, u);
}

} // namespace

const QMatrix& StructureSet::structure(const std::string& name) const
{
    for (const auto& s : structures)
        if (s.name == name)
            return s.m;
    throw BadParams("no structure named " + name);
}

std::vector<QMatrix> StructureSet::generators() const
{
    std::vector<QMatrix> g{QMatrix::identity(G.rows())};
    for (const auto& s : structures)
        g.push_back(s.m);
    return g;
}

std::vector<QMatrix> centralizer(const std::vector<QMatrix>& family, std::size_t m)
{
    QMatrix sys(std::max<std::size_t>(1, m * m * family.size()), m * m);
    std::size_t row = 0;
    for (const auto& F : family)
        add_commutation_rows(sys, row, F, m);
    return solution_matrices(sys, m);
}

std::vector<QMatrix> skew_commutant(const QMatrix& G, const std::vector<QMatrix>& fixed)
{
    std::size_t m = G.rows();
    QMatrix sys(m * m * (fixed.size() + 1), m * m);
    std::size_t row = 0;
    for (const auto& F : fixed)
        add_commutation_rows(sys, row, F, m);
    add_skew_rows(sys, row, G, m);
    return solution_matrices(sys, m);
}

StructureSet build_type(const std::string& c, int p, int q)
{
    if (p < 0 || q < 0 || p + q == 0)
        throw BadParams("need p + q > 0");
    StructureSet s;
    s.case_label = c;
    auto skew = [](const std::string& n, QMatrix m) { return NamedMatrix{n, std::move(m), -1}; };
    if (c == "1") {
        s.G = ipq(p, q);
    } else if (c == "1C") {
        if (q != 0)
            throw BadParams("case 1C takes d = 2p");
        s.G = ipq(p, p);
        s.structures.push_back({"Jbar", jmat(p), 1});
    } else if (c == "2") {
        s.G = direct_sum<Q>({ipq(p, q), ipq(p, q)});
        s.structures.push_back(skew("J", jmat(p + q)));
    } else if (c == "2p") {
        if (q != 0)
            throw BadParams("case 2p takes d = 2p");
        s.G = ipq(p, p);
        s.structures.push_back(skew("L", lmat(p)));
    } else if (c == "2C") {
        if (q != 0)
            throw BadParams("case 2C takes d = 4p");
        s.G = lmat(2 * p);
        QMatrix jbar = direct_sum<Q>({jmat(p), -jmat(p)});
        QMatrix L = ipq(2 * p, 2 * p);
        s.structures.push_back({"Jbar", jbar, 1});
        s.structures.push_back(skew("L", L));
        s.structures.push_back(skew("J", jbar * L));
    } else if (c == "3") {
        QMatrix I = ipq(p, q);
        s.G = direct_sum<Q>({I, I, I, I});
        int k = p + q;
        QMatrix J3(4 * k, 4 * k);
        J3.set_block(0, 2 * k, jmat(k));
        J3.set_block(2 * k, 0, jmat(k));
        s.structures.push_back(skew("J1", direct_sum<Q>({-jmat(k), jmat(k)})));
        s.structures.push_back(skew("J2", jmat(2 * k)));
        s.structures.push_back(skew("J3", J3));
    } else if (c == "3p") {
        if (q != 0)
            throw BadParams("case 3p takes d = 4p");
        s.G = ipq(2 * p, 2 * p);
        QMatrix L2(4 * p, 4 * p);
        L2.set_block(0, 2 * p, -jmat(p));
        L2.set_block(2 * p, 0, jmat(p));
        s.structures.push_back(skew("L1", lmat(2 * p)));
        s.structures.push_back(skew("L2", L2));
        s.structures.push_back(skew("J", direct_sum<Q>({-jmat(p), jmat(p)})));
    } else if (c == "3C") {
        if (q != 0)
            throw BadParams("case 3C takes d = 8p");
        s.G = direct_sum<Q>({ipq(2 * p, 2 * p), -ipq(2 * p, 2 * p)});
        QMatrix jj = direct_sum<Q>({jmat(p), jmat(p)});
        QMatrix L2(8 * p, 8 * p);
        L2.set_block(0, 4 * p, jj);
        L2.set_block(4 * p, 0, -jj);
        s.structures.push_back({"Jbar", direct_sum<Q>({jmat(2 * p), jmat(2 * p)}), 1});
        s.structures.push_back(skew("J", direct_sum<Q>({jmat(p), jmat(p), -jmat(p), -jmat(p)})));
        s.structures.push_back(skew("L1", lmat(4 * p)));
        s.structures.push_back(skew("L2", L2));
    } else {
        throw BadParams("unknown case label '" + c + "'");
    }
    s.d = static_cast<int>(s.G.rows());
    for (const auto& st : s.structures)
        if ((st.adjoint > 0 && !self_adjoint(st.m, s.G)) || (st.adjoint < 0 && !skew_adjoint(st.m, s.G)))
            throw BadParams("parameters incompatible with the case (" + st.name + " has wrong adjointness)");

    // parallel tensors with U = Id
    const QMatrix& G = s.G;
    s.catalog.push_back({"pseudo_riemannian_metric", {G}});
    for (const auto& st : s.structures)
        if (st.adjoint < 0)
            s.catalog.push_back({"symplectic_form:" + st.name, {G * st.m}});
    bool has_jbar = c == "1C" || c == "2C" || c == "3C";
    if (has_jbar) {
        const QMatrix& jb = s.structure("Jbar");
        s.catalog.push_back({"complex_riemannian_metric", {G, G * jb}});
        s.catalog.push_back({"jbar_complex_volume_form", {}});
    }
    std::string kahler_j;
    if (c == "2" || c == "2C" || c == "3p" || c == "3C")
        kahler_j = "J";
    if (c == "3")
        kahler_j = "J1";
    if (!kahler_j.empty())
        s.catalog.push_back({"hermitian_metric:" + kahler_j, {G, G * s.structure(kahler_j)}});
    if (c == "2C" || c == "3C") {
        QMatrix V = s.structure(c == "2C" ? "L" : "L1");
        s.catalog.push_back({"jbar_complex_symplectic_form", {G * V, G * s.structure("Jbar") * V}});
    }
    if (c == "3" || c == "3p" || c == "3C") {
        // U anticommuting with the complex structure J
        std::string jn = c == "3" ? "J1" : "J";
        QMatrix U = s.structure(c == "3" ? "J2" : "L1");
        QMatrix J = s.structure(jn);
        s.catalog.push_back({"j_complex_symplectic_form:" + jn, {G * U, G * J * U}});
        s.catalog.push_back({"j_complex_volume_form", {}});
    }
    return s;
}

std::vector<QMatrix> generated_algebra(const std::vector<QMatrix>& generators)
{
    if (generators.empty())
        throw BadParams("no generators");
    std::size_t m = generators[0].rows();
    std::vector<QMatrix> basis{QMatrix::identity(m)};
    for (const auto& g : generators)
        basis.push_back(g);
    basis = independent_subset(basis);
    while (true) {
        std::vector<QMatrix> ext = basis;
        for (const auto& a : basis)
            for (const auto& b : basis)
                ext.push_back(a * b);
        auto next = independent_subset(ext);
        if (next.size() == basis.size())
            return basis;
        basis = next;
    }
}

std::string identify_type(const std::vector<QMatrix>& generators, const QMatrix& g)
{
    if (det(g) == 0)
        throw NotClassifiable("g is degenerate");
    auto A = generators.empty() ? std::vector<QMatrix>{QMatrix::identity(g.rows())} : generated_algebra(generators);
    QMatrix Gi = inverse(g);
    // closure under adjunction
    {
        std::vector<QMatrix> with_adj = A;
        for (const auto& X : A)
            with_adj.push_back(Gi * X.transpose() * g);
        if (span_dim(with_adj) != A.size())
            throw NotClassifiable("generated algebra is not closed under adjunction");
    }
    std::size_t dim = A.size();
    auto plus = adjoint_part(A, g, 1);
    auto minus = adjoint_part(A, g, -1);
    bool commutative = true;
    for (const auto& X : A)
        for (const auto& Y : A)
            if (X * Y != Y * X)
                commutative = false;

    if (dim == 1)
        return "1";
    if (dim == 2) {
        std::vector<QMatrix> cand;
        for (const auto& X : plus)
            if (!trace_free(X).is_zero())
                cand.push_back(trace_free(X));
        for (const auto& X : minus)
            cand.push_back(trace_free(X));
        for (const auto& X : cand) {
            auto c = square_scalar(X);
            if (!c || is_zero(*c))
                continue;
            bool sa = self_adjoint(X, g), sk = skew_adjoint(X, g);
            if (sa && sgn(*c) < 0)
                return "1C";
            if (sk && sgn(*c) < 0)
                return "2";
            if (sk && sgn(*c) > 0)
                return "2p";
        }
        throw NotClassifiable("two-dimensional algebra of no listed type");
    }
    if (dim == 4 && commutative) {
        if (plus.size() == 2)
            for (const auto& X : plus) {
                QMatrix t = trace_free(X);
                if (t.is_zero())
                    continue;
                auto c = square_scalar(t);
                if (c && sgn(*c) < 0)
                    return "2C";
            }
        throw NotClassifiable("commutative four-dimensional algebra of no listed type");
    }
    if (dim == 4) {
        if (minus.size() != 3)
            throw NotClassifiable("skew part is not three-dimensional");
        // B(X,Y) Id = (XY + YX)/2 on the skew part
        QMatrix B(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                QMatrix s = minus[i] * minus[j] + minus[j] * minus[i];
                Q v = s(0, 0);
                if (s != QMatrix::identity(g.rows()) * v)
                    throw NotClassifiable("skew elements do not square to scalars");
                B(i, j) = v / 2;
            }
        Signature sg = signature(B);
        if (sg.q == 3)
            return "3";
        if (sg.z == 0 && sg.p == 2 && sg.q == 1)
            return "3p";
        throw NotClassifiable("quaternion-like algebra of no listed type");
    }
    if (dim == 8) {
        // center spanned by Id and a self-adjoint complex structure
        std::size_t m = g.rows();
        QMatrix sys(dim * m * m, dim);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < dim; ++j) {
                QMatrix c = commutator(A[k], A[j]);
                for (std::size_t e = 0; e < m * m; ++e)
                    sys(j * m * m + e, k) = c(e / m, e % m);
            }
        QMatrix ns = nullspace(sys);
        if (ns.cols() == 2)
            for (std::size_t col = 0; col < 2; ++col) {
                QMatrix Z(m, m);
                for (std::size_t k = 0; k < dim; ++k)
                    Z += A[k] * ns(k, col);
                QMatrix t = trace_free(Z);
                if (t.is_zero())
                    continue;
                auto c = square_scalar(t);
                if (c && sgn(*c) < 0 && self_adjoint(t, g))
                    return "3C";
            }
        throw NotClassifiable("eight-dimensional algebra of no listed type (e.g. H+H)");
    }
    throw NotClassifiable("algebra of dimension " + std::to_string(dim) + " matches no listed type");
}

int commutant_dim(const std::string& c, const ModuleShape& shape)
{
    int a = 0, b = 0;
    if (c == "1") {
        a = 1;
        b = 0;
    } else if (c == "2" || c == "2p") {
        a = 2;
        b = 1;
    } else if (c == "3" || c == "3p") {
        a = 4;
        b = 3;
    } else if (c == "1C") {
        a = 2;
        b = 0;
    } else if (c == "2C") {
        a = 4;
        b = 2;
    } else if (c == "3C") {
        a = 8;
        b = 6;
    } else {
        throw BadParams("unknown case label '" + c + "'");
    }
    auto nb = shape.block_sizes();
    int off = 0, diag = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        diag += nb[i];
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            off += nb[j];
    }
    return a * off + b * diag;
}

CommutantBasis commutant_basis(const std::string& c, const ModuleShape& shape,
                               const std::optional<CharacteristicSignatures>& sigs)
{
    PrivilegedBasis pb = normal_form_basis(shape, sigs ? *sigs : default_signatures(shape, c), c);
    auto A = unit_algebra(pb);
    auto nb = shape.block_sizes();
    std::vector<std::size_t> off(nb.size() + 1, 0);
    for (std::size_t i = 0; i < nb.size(); ++i)
        off[i + 1] = off[i] + static_cast<std::size_t>(nb[i]);
    std::size_t units = off.back();
    QMatrix Gi = inverse(pb.G);
    std::vector<QMatrix> cand;
    // (star) patterns: block (i,j) Toeplitz with min(n_i,n_j) free entries
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = 0; j < nb.size(); ++j) {
            int pi = nb[i], pj = nb[j];
            int w = std::min(pi, pj);
            for (int k = 0; k < w; ++k) {
                QMatrix T(units, units);
                for (int r = 0; r < w; ++r) {
                    int cc = r + k;
                    if (cc >= w)
                        continue;
                    if (pi >= pj)
                        T(off[i] + r, off[j] + cc) = 1; // top rows of the block
                    else
                        T(off[i] + r, off[j] + (pj - pi) + cc) = 1; // right columns
                }
                for (const auto& E : A) {
                    QMatrix X = kron(T, E);
                    QMatrix Y = X - Gi * X.transpose() * pb.G;
                    if (!Y.is_zero())
                        cand.push_back(Y);
                }
            }
        }
    CommutantBasis cb;
    cb.case_label = c;
    cb.shape = shape;
    cb.basis = independent_subset(cand);
    cb.dim = static_cast<int>(cb.basis.size());
    return cb;
}

Bicommutant bicommutant(const std::string& c, const ModuleShape& shape,
                        const std::optional<CharacteristicSignatures>& sigs)
{
    auto cb = commutant_basis(c, shape, sigs);
    PrivilegedBasis pb = normal_form_basis(shape, sigs ? *sigs : default_signatures(shape, c), c);
    std::size_t m = pb.N.rows();
    Bicommutant bc;
    bc.basis = centralizer(cb.basis, m);
    if (cb.basis.empty())
        bc.basis = centralizer({}, m);
    auto nb = shape.block_sizes();
    auto nsz = [&](std::size_t i) { return i < nb.size() ? nb[i] : 0; };
    int n1 = nsz(0), n2 = nsz(1), n3 = nsz(2);
    if (c == "1" || c == "1C") {
        int u = unit_dim(c, shape);
        bc.decomposable = 2 * n2 < n1;
        if (bc.decomposable) {
            int dd = (n1 - 2 * n2) * u;
            std::pair<int, int> sg;
            if (dd % 2 == 0)
                sg = {dd / 2, dd / 2};
            else
                sg = pb.eps[0] > 0 ? std::make_pair((dd + 1) / 2, (dd - 1) / 2)
                                   : std::make_pair((dd - 1) / 2, (dd + 1) / 2);
            bc.flat_factor = std::make_pair(dd, sg);
        }
        if (n1 == n2 && n3 == 0)
            bc.exceptional = "extra (para)complex structure present";
        // the extra summands vanish iff End(T/ker N^{n2}) has dim <= 1 and
        // the quotient by ker N^{n3} is a single block
        bc.is_s_N_span = n1 - n2 <= 1 && n2 == n3;
    }
    return bc;
}

} // namespace nilgeom
