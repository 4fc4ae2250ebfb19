#include "nilgeom/normal_forms.hpp"

#include <algorithm>

namespace nilgeom {

namespace {

int required_delta(const std::string& label)
{
    if (label == "1" || label == "1C")
        return 1;
    if (label == "2" || label == "2p" || label == "2C")
        return 2;
    return 4;
}

// Real metric of the complex bilinear form G (Re of the complex form) in the
// realified basis (e_k, i e_k).
QMatrix realify_form(const CMatrix& G)
{
    QMatrix r(2 * G.rows(), 2 * G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j) {
            r(2 * i, 2 * j) = G(i, j).re;
            r(2 * i, 2 * j + 1) = -G(i, j).im;
            r(2 * i + 1, 2 * j) = -G(i, j).im;
            r(2 * i + 1, 2 * j + 1) = -G(i, j).re;
        }
    return r;
}

// Per-unit structures of the real cases (delta x delta blocks).
std::vector<NamedMatrix> unit_structures(const std::string& c)
{
    QMatrix j1 = jmat(1);
    if (c == "2")
        return {{"J", j1, -1}};
    if (c == "2p")
        return {{"L", ipq(1, 1), -1}};
    if (c == "3") {
        QMatrix J2 = jmat(2);
        QMatrix J1 = direct_sum<Q>({-j1, j1});
        QMatrix J3(4, 4);
        J3.set_block(0, 2, j1);
        J3.set_block(2, 0, j1);
        return {{"J1", J1, -1}, {"J2", J2, -1}, {"J3", J3, -1}};
    }
    if (c == "3p") {
        QMatrix L = ipq(2, 2);
        QMatrix Lp(4, 4);
        Lp.set_block(0, 2, j1);
        Lp.set_block(2, 0, -j1);
        return {{"L1", L, -1}, {"L2", Lp, -1}, {"J", L * Lp, -1}};
    }
    return {};
}

// Per-unit metric block on a Jordan block of size p.
QMatrix unit_metric(const std::string& c, int p, int eps)
{
    QMatrix K = antidiag(p);
    if (c == "1")
        return K * Q(eps);
    if (c == "2")
        return kron(K, QMatrix::identity(2)) * Q(eps);
    if (c == "2p")
        return antidiag(2 * p);
    if (c == "3")
        return kron(K, QMatrix::identity(4)) * Q(eps);
    // 3p: K_{2p} (x) I_2
    return kron(antidiag(2 * p), QMatrix::identity(2));
}

std::string real_base(const std::string& c)
{
    if (c == "1C")
        return "1";
    if (c == "2C")
        return "2p";
    if (c == "3C")
        return "3p";
    return c;
}

} // namespace

bool CharacteristicSignatures::nondegenerate() const
{
    // Caller-side check uses unit dims; here only the plain real count.
    for (int a = 1; a <= shape.n; ++a) {
        auto [r, s] = sigs[a - 1];
        if (r + s != shape.delta * shape.d[a - 1])
            return false;
    }
    return true;
}

const QMatrix& PrivilegedBasis::structure(const std::string& name) const
{
    for (const auto& s : structures)
        if (s.name == name)
            return s.m;
    throw BadParams("no structure named " + name);
}

bool is_complex_label(const std::string& label)
{
    return label == "1C" || label == "2C" || label == "3C";
}

bool is_known_label(const std::string& l)
{
    return l == "1" || l == "1C" || l == "2" || l == "2p" || l == "2C" || l == "3" || l == "3p" || l == "3C";
}

int unit_dim(const std::string& label, const ModuleShape& shape)
{
    return shape.delta * (is_complex_label(label) ? 2 : 1);
}

std::vector<QMatrix> quotient_complements(const QMatrix& N)
{
    ModuleShape s = invariant_factors(N);
    std::size_t m = N.rows();
    QMatrix im = column_basis(N);
    std::vector<QMatrix> out;
    QMatrix P = QMatrix::identity(m);
    for (int a = 1; a <= s.n; ++a) {
        QMatrix base = a == 1 ? im : hstack(nullspace(P), im);
        P = P * N;
        QMatrix ker = nullspace(P);
        auto pick = extend_basis(base, ker);
        QMatrix c(m, pick.size());
        for (std::size_t k = 0; k < pick.size(); ++k)
            for (std::size_t i = 0; i < m; ++i)
                c(i, k) = ker(i, pick[k]);
        out.push_back(c);
    }
    return out;
}

CharacteristicSignatures characteristic_signatures(const QMatrix& N, const QMatrix& g)
{
    if (!N.square() || !g.square() || N.rows() != g.rows())
        throw DimensionMismatch("N and g must be square of equal size");
    if (!is_symmetric(g))
        throw NotSelfAdjoint("g is not symmetric");
    if (g * N != N.transpose() * g)
        throw NotSelfAdjoint("N is not g-self-adjoint");
    CharacteristicSignatures cs;
    cs.shape = invariant_factors(N);
    auto comps = quotient_complements(N);
    QMatrix P = QMatrix::identity(N.rows());
    for (int a = 1; a <= cs.shape.n; ++a) {
        const QMatrix& V = comps[a - 1];
        QMatrix gram = V.transpose() * g * P * V;
        Signature sg = signature(gram);
        cs.sigs.push_back({sg.p, sg.q});
        P = P * N;
    }
    return cs;
}

CharacteristicSignatures default_signatures(const ModuleShape& shape, const std::string& c)
{
    CharacteristicSignatures cs;
    cs.shape = shape;
    int u = unit_dim(c, shape);
    bool balanced = c == "2p" || c == "3p" || is_complex_label(c);
    for (int a = 1; a <= shape.n; ++a) {
        int m = u * shape.d[a - 1];
        cs.sigs.push_back(balanced ? std::make_pair(m / 2, m / 2) : std::make_pair(m, 0));
    }
    return cs;
}

PrivilegedBasis normal_form_basis(const ModuleShape& shape, const CharacteristicSignatures& sigs,
                                  const std::string& c)
{
    if (!is_known_label(c))
        throw BadParams("unknown case label '" + c + "'");
    shape.validate();
    if (shape.delta != required_delta(c))
        throw CaseConstraintViolated("case " + c + " needs delta=" + std::to_string(required_delta(c)));
    if (static_cast<int>(sigs.sigs.size()) != shape.n)
        throw DegenerateSignatures("need one signature per a = 1..n");
    int u = unit_dim(c, shape);
    bool balanced = c == "2p" || c == "3p" || is_complex_label(c);
    std::vector<int> eps_by_size_pos(shape.n + 1, 0);
    for (int a = 1; a <= shape.n; ++a) {
        auto [r, s] = sigs.sigs[a - 1];
        int m = u * shape.d[a - 1];
        if (r < 0 || s < 0 || r + s != m)
            throw DegenerateSignatures("r_a + s_a must equal the quotient dimension at a=" + std::to_string(a));
        if (balanced && r != s)
            throw CaseConstraintViolated("case " + c + " requires balanced signatures");
        if (!balanced && (r % u != 0 || s % u != 0))
            throw CaseConstraintViolated("case " + c + " requires signatures in multiples of " + std::to_string(u));
        eps_by_size_pos[a] = balanced ? shape.d[a - 1] : r / u;
    }
    PrivilegedBasis pb;
    pb.case_label = c;
    pb.shape = shape;
    std::string rc = real_base(c);
    std::vector<QMatrix> nblocks, gblocks;
    std::vector<int> seen(shape.n + 1, 0);
    for (int p : shape.block_sizes()) {
        int e = seen[p]++ < eps_by_size_pos[p] ? 1 : -1;
        pb.eps.push_back(e);
        nblocks.push_back(kron(jordan_block(p), QMatrix::identity(shape.delta)));
        gblocks.push_back(unit_metric(rc, p, e));
    }
    QMatrix N = direct_sum(nblocks);
    QMatrix G = direct_sum(gblocks);
    std::size_t units = N.rows() / shape.delta;
    std::vector<NamedMatrix> st;
    for (auto& us : unit_structures(rc))
        st.push_back({us.name, kron(QMatrix::identity(units), us.m), us.adjoint});
    if (is_complex_label(c)) {
        // complexify: same matrices over C, then realify
        pb.N = realify(to_complex(N));
        pb.G = realify_form(to_complex(G));
        QMatrix jbar = kron(QMatrix::identity(N.rows()), jmat(1));
        pb.structures.push_back({"Jbar", jbar, 1});
        for (auto& s : st)
            pb.structures.push_back({s.name, realify(to_complex(s.m)), s.adjoint});
        if (c == "2C")
            pb.structures.push_back({"J", jbar * pb.structure("L"), -1});
    } else {
        pb.N = N;
        pb.G = G;
        pb.structures = st;
    }
    pb.change_of_basis = QMatrix::identity(pb.N.rows());
    return pb;
}

std::pair<int, int> global_signature(const ModuleShape& shape, const CharacteristicSignatures& sigs)
{
    if (static_cast<int>(sigs.sigs.size()) != shape.n)
        throw DegenerateSignatures("need one signature per a");
    int p = 0, q = 0;
    for (int a = 1; a <= shape.n; ++a) {
        auto [r, s] = sigs.sigs[a - 1];
        int m = r + s;
        if (m != shape.delta * shape.d[a - 1] && m != 2 * shape.delta * shape.d[a - 1])
            throw DegenerateSignatures("degenerate signature at a=" + std::to_string(a));
        p += (a / 2) * m;
        q += (a / 2) * m;
        if (a % 2 == 1) {
            p += r;
            q += s;
        }
    }
    return {p, q};
}

std::vector<int> alt_form_ranks(const QMatrix& N, const QMatrix& omega)
{
    if (!N.square() || !omega.square() || N.rows() != omega.rows())
        throw DimensionMismatch("N and omega must be square of equal size");
    if (!is_skew(omega))
        throw NotAlternate("omega is not alternate");
    if (omega * N != N.transpose() * omega)
        throw NotCompatible("omega(., N.) != omega(N., .)");
    auto comps = quotient_complements(N);
    std::vector<int> r;
    QMatrix P = QMatrix::identity(N.rows());
    for (const auto& V : comps) {
        r.push_back(static_cast<int>(V.cols() ? rank(QMatrix(V.transpose() * omega * P * V)) : 0));
        P = P * N;
    }
    return r;
}

QMatrix darboux_form(const ModuleShape& shape, const std::vector<int>& ranks)
{
    if (shape.delta != 1)
        throw InvalidShape("Darboux form is built for delta = 1");
    if (static_cast<int>(ranks.size()) != shape.n)
        throw BadParams("need one rank per a");
    NiloCoords co(shape);
    int n = shape.n;
    QMatrix w(co.dim(), co.dim());
    for (int a = 1; a <= n; ++a) {
        int r = ranks[a - 1];
        if (r % 2 != 0 || r > shape.d[a - 1] || r < 0)
            throw BadParams("ranks must be even and at most d_a");
        int base = shape.D(a - 1);
        int h = r / 2;
        // Omega_{ij} = nu^{n-a} (J_h)_{ij} on generators of size a;
        // real form: w(N^p X_i, N^q X_j) = coefficient of nu^{n-1-p-q}
        for (int i = 0; i < h; ++i) {
            int gi = base + i, gj = base + h + i;
            for (int p = 0; p < a; ++p) {
                int q = a - 1 - p; // n-1-p-q == n-a
                w(co.index(gi, p), co.index(gj, q)) = -1;
                w(co.index(gj, q), co.index(gi, p)) = 1;
            }
        }
    }
    return w;
}

} // namespace nilgeom
