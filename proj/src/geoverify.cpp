#include "nilgeom/geoverify.hpp"

#include "nilgeom/algebra_lab.hpp"
#include "nilgeom/jet.hpp"

#include <Eigen/Dense>

#include <future>
#include <random>
#include <sstream>

namespace nilgeom {

namespace {

JetMatrix jet_zero(const std::shared_ptr<const JetSpace>& sp, std::size_t m, int deg)
{
    return JetMatrix(m, std::vector<Jet>(m, Jet(sp, deg)));
}

void add_into(JetMatrix& acc, const JetMatrix& x, const Q& s)
{
    for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[i][j] += x[i][j] * s;
}

void add_matmul(JetMatrix& acc, const JetMatrix& a, const JetMatrix& b, const Q& s)
{
    std::size_t m = acc.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < m; ++t) {
            if (a[i][t].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j)
                acc[i][j].add_product(a[i][t], b[t][j], s);
        }
}

JetMatrix deriv(const JetMatrix& a, std::size_t v)
{
    JetMatrix r = a;
    for (auto& row : r)
        for (auto& e : row)
            e = e.deriv(v);
    return r;
}

std::string point_string(const std::vector<Q>& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? ", " : "") + to_string(p[i]);
    return s + ")";
}

bool is_nilpotent(const QMatrix& U)
{
    return pow(U, static_cast<int>(U.rows())).is_zero();
}

bool invertible(const QMatrix& U) { return det(U) != 0; }

} // namespace

QMatrix PointFrameData::ricci() const
{
    std::size_t m = g.rows();
    QMatrix r(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Q s(0);
            for (std::size_t c = 0; c < m; ++c)
                s += R[a][c](c, b);
            r(a, b) = s;
        }
    return r;
}

PointFrameData frame_at(const MetricGerm& germ, const std::vector<Q>& point, int K)
{
    std::size_t m = germ.dim();
    if (point.size() != m)
        throw DimensionMismatch("point has the wrong number of coordinates");
    int jd = K + 2;
    auto sp = std::make_shared<const JetSpace>(m, jd);
    JetMatrix gJ(m, std::vector<Jet>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            gJ[i][j] = Jet::taylor(sp, germ.g(i, j), point, jd);
            gJ[j][i] = gJ[i][j];
        }
    PointFrameData F;
    F.point = point;
    F.order = K;
    F.g = jet_constant(gJ);
    if (det(F.g) == 0)
        throw DegenerateAtPoint("metric is degenerate at " + point_string(point));
    int gd = jd - 1; // degree of Gamma jets
    JetMatrix ginv = jet_inverse(gJ, gd);
    F.g_inv = jet_constant(ginv);
    std::vector<JetMatrix> dg(m);
    for (std::size_t l = 0; l < m; ++l)
        dg[l] = deriv(gJ, l);
    // Gamma_{l,ij} = (d_i g_lj + d_j g_li - d_l g_ij) / 2
    std::vector<JetMatrix> low(m, jet_zero(sp, m, gd)); // low[i](l, j)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t j = 0; j < m; ++j)
                low[i][l][j] = (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]) * Q(1, 2);
    std::vector<JetMatrix> Gam(m);
    for (std::size_t i = 0; i < m; ++i) {
        Gam[i] = jet_zero(sp, m, gd);
        add_matmul(Gam[i], ginv, low[i], Q(1));
        F.Gamma.push_back(jet_constant(Gam[i]));
    }
    if (K < 0)
        return F;
    F.dGamma.assign(m, std::vector<QMatrix>(m));
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t i = 0; i < m; ++i)
            F.dGamma[l][i] = jet_constant(deriv(Gam[i], l));
    // R_ij = d_i Gamma_j - d_j Gamma_i + [Gamma_i, Gamma_j]
    std::vector<JetMatrix> level; // flattened (c..., i, j)
    level.assign(m * m, jet_zero(sp, m, K));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            JetMatrix r = jet_zero(sp, m, K);
            add_into(r, deriv(Gam[j], i), Q(1));
            add_into(r, deriv(Gam[i], j), Q(-1));
            add_matmul(r, Gam[i], Gam[j], Q(1));
            add_matmul(r, Gam[j], Gam[i], Q(-1));
            level[i * m + j] = r;
            JetMatrix neg = jet_zero(sp, m, K);
            add_into(neg, r, Q(-1));
            level[j * m + i] = neg;
        }
    F.R.assign(m, std::vector<QMatrix>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            F.R[i][j] = jet_constant(level[i * m + j]);
    std::vector<QMatrix> lv0;
    for (const auto& t : level)
        lv0.push_back(jet_constant(t));
    F.DkR.push_back(lv0);
    // (D_c T)(a) = d_c T(a) + [Gamma_c, T(a)] - sum_s sum_e Gamma^e_{c a_s} T(a_s -> e)
    std::size_t slots = 2;
    for (int p = 1; p <= K; ++p) {
        int deg = K - p;
        std::vector<JetMatrix> next(level.size() * m, jet_zero(sp, m, deg));
        std::size_t stride_total = level.size();
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t idx = 0; idx < stride_total; ++idx) {
                JetMatrix out = jet_zero(sp, m, deg);
                add_into(out, deriv(level[idx], c), Q(1));
                add_matmul(out, Gam[c], level[idx], Q(1));
                add_matmul(out, level[idx], Gam[c], Q(-1));
                // decode slot indices of idx (base m, `slots` digits)
                std::size_t rest = idx, mul = 1;
                for (std::size_t s = 0; s < slots; ++s) {
                    std::size_t digit = rest % m;
                    rest /= m;
                    for (std::size_t e = 0; e < m; ++e) {
                        const Jet& coef = Gam[c][e][digit];
                        if (coef.truncated(deg).is_zero())
                            continue;
                        std::size_t other = idx - digit * mul + e * mul;
                        for (std::size_t r = 0; r < m; ++r)
                            for (std::size_t q = 0; q < m; ++q)
                                out[r][q].add_product(coef, level[other][r][q], Q(-1));
                    }
                    mul *= m;
                }
                next[c * stride_total + idx] = out;
            }
        level = std::move(next);
        ++slots;
        std::vector<QMatrix> lv;
        for (const auto& t : level)
            lv.push_back(jet_constant(t));
        F.DkR.push_back(lv);
    }
    return F;
}

std::vector<std::vector<std::vector<double>>> gamma_finite_difference(const MetricGerm& germ,
                                                                      const std::vector<double>& point, double h)
{
    std::size_t m = germ.dim();
    auto eval_at = [&](const std::vector<double>& x) {
        Eigen::MatrixXd G(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                double s = 0;
                for (const auto& [mo, c] : germ.g(i, j).terms()) {
                    double t = c.get_d();
                    for (std::size_t v = 0; v < mo.size(); ++v)
                        for (int e = 0; e < mo[v]; ++e)
                            t *= x[v];
                    s += t;
                }
                G(i, j) = s;
            }
        return G;
    };
    std::vector<Eigen::MatrixXd> dG(m);
    for (std::size_t l = 0; l < m; ++l) {
        auto xp = point, xm = point;
        xp[l] += h;
        xm[l] -= h;
        dG[l] = (eval_at(xp) - eval_at(xm)) / (2 * h);
    }
    Eigen::MatrixXd Gi = eval_at(point).inverse();
    std::vector<std::vector<std::vector<double>>> Gam(m, std::vector<std::vector<double>>(m, std::vector<double>(m)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                double s = 0;
                for (std::size_t l = 0; l < m; ++l)
                    s += Gi(k, l) * (dG[i](l, j) + dG[j](l, i) - dG[l](i, j)) / 2;
                Gam[i][k][j] = s;
            }
    return Gam;
}

bool VerificationReport::all_passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::vector<std::vector<Q>> random_points(const MetricGerm& germ, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Q>> pts;
    std::size_t m = germ.dim();
    int tries = 0;
    while (static_cast<int>(pts.size()) < count) {
        std::vector<Q> p(m);
        for (std::size_t i = 0; i < m; ++i)
            p[i] = germ.base_point[i] + random_rational(rng, 2, 3);
        if (det(germ.at(p)) != 0)
            pts.push_back(p);
        else if (++tries > 100 * count)
            throw DegenerateAtPoint("could not find nondegenerate sample points");
    }
    return pts;
}

bool parallel_check(const MetricGerm& germ, const QMatrix& S, const std::vector<std::vector<Q>>& points,
                    std::string* witness)
{
    std::vector<std::future<PointFrameData>> jobs;
    for (const auto& p : points)
        jobs.push_back(std::async(std::launch::async, [&germ, p] { return frame_at(germ, p, -1); }));
    bool ok = true;
    for (auto& j : jobs) {
        PointFrameData F = j.get();
        if (!ok)
            continue;
        for (std::size_t i = 0; i < F.Gamma.size() && ok; ++i) {
            QMatrix D = commutator(F.Gamma[i], S);
            if (!D.is_zero()) {
                ok = false;
                if (witness) {
                    for (std::size_t r = 0; r < D.rows(); ++r)
                        for (std::size_t c = 0; c < D.cols(); ++c)
                            if (D(r, c) != 0 && witness->empty())
                                *witness = "at " + point_string(F.point) + ": (D_" + germ.names[i] + " S)[" +
                                           std::to_string(r) + "," + std::to_string(c) + "] = " + to_string(D(r, c));
                }
            }
        }
    }
    return ok;
}

bool parallel_check(const MetricGerm& germ, const std::string& structure, const std::vector<std::vector<Q>>& points,
                    std::string* witness)
{
    return parallel_check(germ, germ.structure(structure), points, witness);
}

VerificationReport identity_checks(const MetricGerm& germ, const std::vector<std::vector<Q>>& points)
{
    VerificationReport rep;
    rep.points = points;
    rep.degree_bound = germ.degree_bound();
    std::vector<std::future<PointFrameData>> jobs;
    for (const auto& p : points)
        jobs.push_back(std::async(std::launch::async, [&germ, p] { return frame_at(germ, p, 0); }));
    std::vector<PointFrameData> frames;
    for (auto& j : jobs)
        frames.push_back(j.get());

    std::size_t m = germ.dim();
    auto run = [&](const std::string& name, auto&& pred) {
        CheckResult cr{name, true, ""};
        for (const auto& F : frames) {
            std::string w = pred(F);
            if (!w.empty()) {
                cr.passed = false;
                cr.witness = "at " + point_string(F.point) + ": " + w;
                break;
            }
        }
        rep.checks.push_back(cr);
    };

    run("first_bianchi", [&](const PointFrameData& F) -> std::string {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k)
                    for (std::size_t e = 0; e < m; ++e)
                        if (F.R[i][j](e, k) + F.R[j][k](e, i) + F.R[k][i](e, j) != 0)
                            return "cyclic sum nonzero for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")";
        return "";
    });
    run("pair_symmetry", [&](const PointFrameData& F) -> std::string {
        std::vector<std::vector<QMatrix>> gR(m, std::vector<QMatrix>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                gR[i][j] = F.g * F.R[i][j]; // (l, k) = g(R(i,j) d_k, d_l)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t l = 0; l < m; ++l)
                        if (gR[i][j](l, k) != gR[k][l](j, i))
                            return "g(R(x,y)z,t) != g(R(z,t)x,y)";
        return "";
    });

    // tr(U o (X -> R(a, X) b)) as a matrix in (a, b)
    auto trace_form = [&](const PointFrameData& F, const QMatrix& U) {
        QMatrix t(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Q s(0);
                for (std::size_t c = 0; c < m; ++c)
                    for (std::size_t e = 0; e < m; ++e)
                        if (U(c, e) != 0)
                            s += U(c, e) * F.R[a][c](e, b);
                t(a, b) = s;
            }
        return t;
    };

    for (const auto& S : germ.structures) {
        const QMatrix& U = S.m;
        if (S.adjoint == 1) {
            run("commutator_kernel[" + S.name + "]", [&](const PointFrameData& F) -> std::string {
                for (const auto& V : germ.structures) {
                    QMatrix C = U * V.m - V.m * U;
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = i + 1; j < m; ++j)
                            if (!(F.R[i][j] * C).is_zero())
                                return "R(x,y)(UV-VU) != 0 with V = " + V.name;
                }
                return "";
            });
            run("ricci_self_adjoint[" + S.name + "]", [&](const PointFrameData& F) -> std::string {
                QMatrix r = F.ricci();
                QMatrix lhs = r * U, mid = U.transpose() * r, tr = trace_form(F, U);
                if (lhs != mid)
                    return "ric(a,Ub) != ric(Ua,b)";
                if (lhs != tr)
                    return "ric(a,Ub) != tr(U(R(a,.)b))";
                return "";
            });
        } else {
            run("ricci_skew[" + S.name + "]", [&](const PointFrameData& F) -> std::string {
                QMatrix r = F.ricci();
                QMatrix lhs = r * U, mid = U.transpose() * r;
                if (lhs != mid * Q(-1))
                    return "ric(a,Ub) != -ric(Ua,b)";
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = 0; b < m; ++b)
                        if (lhs(a, b) != trace(QMatrix(U * F.R[a][b])) / 2)
                            return "ric(a,Ub) != tr(U o R(a,b))/2";
                return "";
            });
        }
        if (is_nilpotent(U) && !U.is_zero())
            run("im_in_ker_ric[" + S.name + "]", [&](const PointFrameData& F) -> std::string {
                if (!(F.ricci() * U).is_zero())
                    return "ric(., U .) != 0";
                return "";
            });
    }
    for (std::size_t a = 0; a < germ.structures.size(); ++a)
        for (std::size_t b = a + 1; b < germ.structures.size(); ++b) {
            const auto& U = germ.structures[a];
            const auto& V = germ.structures[b];
            if (U.adjoint != -1 || V.adjoint != -1)
                continue;
            if (U.m * V.m != V.m * U.m * Q(-1) || !invertible(U.m) || !invertible(V.m))
                continue;
            run("ricci_flat[" + U.name + "," + V.name + "]", [&](const PointFrameData& F) -> std::string {
                return F.ricci().is_zero() ? "" : "ric != 0";
            });
        }
    return rep;
}

HolonomyResult holonomy_span(const MetricGerm& germ, const std::vector<Q>& point, int order)
{
    if (order < 0 || order > 2)
        throw BadParams("holonomy order must be 0, 1 or 2");
    PointFrameData F = frame_at(germ, point, order);
    std::size_t m = germ.dim();
    std::vector<QMatrix> fixed;
    for (const auto& s : germ.structures)
        fixed.push_back(s.m);
    auto comm = skew_commutant(F.g, fixed);
    HolonomyResult h;
    h.commutant_dim = static_cast<int>(comm.size());
    std::vector<QMatrix> family;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!F.R[i][j].is_zero())
                family.push_back(F.R[i][j]);
    family = independent_subset(family);
    h.dims_by_order.push_back(static_cast<int>(family.size()));
    for (int p = 1; p <= order; ++p) {
        for (const auto& M : F.DkR[p])
            if (!M.is_zero())
                family.push_back(M);
        family = independent_subset(family);
        h.dims_by_order.push_back(static_cast<int>(family.size()));
    }
    h.dim = h.dims_by_order.back();
    for (int p = 0; p <= order; ++p)
        if (h.dims_by_order[p] == h.dim) {
            h.stabilized_at = p;
            break;
        }
    if (!family.empty()) {
        std::vector<QMatrix> all = comm;
        all.insert(all.end(), family.begin(), family.end());
        h.contained_in_commutant = span_dim(all) == comm.size();
    }
    return h;
}

VerificationReport verify(const MetricGerm& germ, int npoints, int holonomy_order, std::uint64_t seed)
{
    VerificationReport rep;
    rep.seed = seed;
    rep.degree_bound = germ.degree_bound();
    rep.holonomy_order = holonomy_order;
    {
        CheckResult cr{"germ_valid", true, ""};
        try {
            germ.validate();
        } catch (const Error& e) {
            cr.passed = false;
            cr.witness = e.what();
        }
        rep.checks.push_back(cr);
    }
    rep.points = random_points(germ, npoints, seed);
    for (const auto& s : germ.structures) {
        CheckResult cr{"parallel[" + s.name + "]", true, ""};
        cr.passed = parallel_check(germ, s.m, rep.points, &cr.witness);
        rep.checks.push_back(cr);
    }
    VerificationReport ids = identity_checks(germ, rep.points);
    rep.checks.insert(rep.checks.end(), ids.checks.begin(), ids.checks.end());
    HolonomyResult h = holonomy_span(germ, rep.points.front(), holonomy_order);
    rep.checks.push_back({"holonomy_in_commutant", h.contained_in_commutant,
                          h.contained_in_commutant ? "" : "a curvature endomorphism leaves the commutant"});
    rep.holonomy = h;
    return rep;
}

} // namespace nilgeom
