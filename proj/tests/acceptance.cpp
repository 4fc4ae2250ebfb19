// One line per acceptance criterion; exit status 1 if any fails.
#include "nilgeom/algebra_lab.hpp"
#include "nilgeom/cartan.hpp"
#include "nilgeom/geoverify.hpp"
#include "nilgeom/metric_forge.hpp"
#include "nilgeom/nilocalc.hpp"
#include "nilgeom/normal_forms.hpp"

#include "oracle.hpp"

#include <fmt/core.h>

#include <chrono>
#include <functional>
#include <random>

using namespace nilgeom;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

oracle::Mat to_oracle(const QMatrix& m)
{
    oracle::Mat r = oracle::mat(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = m(i, j);
    return r;
}

QPoly without_constant(const QPoly& p)
{
    return p - QPoly::constant(p.nvars(), p.eval(std::vector<Q>(p.nvars(), Q(0))));
}

// I + (polynomial part vanishing at the origin)
QPolyMatrix near_identity(std::size_t m, std::size_t nvars, int deg, std::mt19937_64& rng)
{
    QPolyMatrix B = random_symmetric(m, nvars, deg, rng);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            B(i, j) = without_constant(B(i, j)) + QPoly::constant(nvars, Q(i == j ? 1 : 0));
    return B;
}

int case_delta(const std::string& c)
{
    if (c == "1")
        return 1;
    if (c == "2" || c == "2p")
        return 2;
    return 4;
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

// 1. Example A: g = [[0, B0], [B0, B1 + dB0/dx . y]]
Outcome example_a()
{
    Outcome out;
    ModuleShape s(2, {0, 2});
    NiloCoords co(s);
    std::size_t nv = co.dim();
    if (co.names() != std::vector<std::string>{"y1_1", "y2_1", "x1", "x2"}) {
        out.ok = false;
        out.detail = "unexpected coordinate names";
        return out;
    }
    std::vector<std::size_t> xs{static_cast<std::size_t>(co.x(0)), static_cast<std::size_t>(co.x(1))};
    std::mt19937_64 rng(1);
    int draws = 0;
    for (int rep = 0; rep < 5; ++rep) {
        QPolyMatrix B0 = poly_matrix<Q>(2, 2, nv), B1 = poly_matrix<Q>(2, 2, nv);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = i; j < 2; ++j) {
                QPoly lin = without_constant(random_poly(nv, xs, 1, rng, 2));
                B0(i, j) = B0(j, i) = lin + QPoly::constant(nv, Q(i == j ? 1 : 0));
                B1(i, j) = B1(j, i) = random_poly(nv, xs, 3, rng, 3);
            }
        MetricGerm g = forge_nilpotent_metric(SeedForms{s, {B0, B1}});
        QPolyMatrix expect = poly_matrix<Q>(4, 4, nv);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                expect(co.y(i, 1), co.x(j)) = B0(i, j);
                expect(co.x(i), co.y(j, 1)) = B0(i, j);
                QPoly e = B1(i, j);
                for (int k = 0; k < 2; ++k)
                    e += B0(i, j).deriv(co.x(k)) * QPoly::var(nv, co.y(k, 1));
                expect(co.x(i), co.x(j)) = e;
            }
        if (!(g.g == expect)) {
            out.ok = false;
            out.detail = fmt::format("mismatch on draw {}", rep);
            return out;
        }
        ++draws;
    }
    out.detail = fmt::format("{} symbolic draws equal", draws);
    return out;
}

struct Draw {
    std::string label;
    MetricGerm germ;
};

std::vector<Draw> parallel_corpus()
{
    std::vector<Draw> out;
    std::mt19937_64 rng(2024);
    std::vector<std::pair<int, std::vector<int>>> nil = {
        {2, {0, 2}}, {2, {1, 1}},    {2, {2, 1}},    {2, {0, 3}},    {3, {0, 0, 2}},    {3, {1, 1, 1}},
        {3, {0, 1, 1}}, {3, {1, 0, 1}}, {3, {2, 1, 1}}, {4, {0, 0, 0, 2}}, {4, {1, 0, 0, 1}}};
    for (const auto& [n, d] : nil)
        for (int rep = 0; rep < 2; ++rep) {
            ModuleShape s(n, d);
            out.push_back({"nilpotent " + s.to_string(), forge_nilpotent_metric(random_seed_forms(s, 3, rng))});
        }
    // Lorentzian (2, {m, 1}), m = 1..4
    for (int m = 1; m <= 4; ++m) {
        ModuleShape s(2, {m, 1});
        NiloCoords co(s);
        std::vector<std::size_t> xs;
        for (int k = 0; k < co.gens(); ++k)
            xs.push_back(static_cast<std::size_t>(co.x(k)));
        for (int rep = 0; rep < 2; ++rep) {
            QPolyMatrix B = poly_matrix<Q>(m, m, co.dim());
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j)
                    B(i, j) = B(j, i) = without_constant(random_poly(co.dim(), xs, 2, rng, 2)) +
                                        QPoly::constant(co.dim(), Q(i == j ? 1 : 0));
            QPoly b = random_poly(co.dim(), xs, 3, rng, 4);
            out.push_back({fmt::format("lorentz m={}", m), forge_lorentzian(B, b)});
        }
    }
    // two nilpotents over quotients with a parallel U
    std::vector<std::pair<int, std::vector<int>>> quot = {{2, {1, 1}}, {2, {0, 2}}, {1, {3}}, {3, {0, 0, 1}}};
    for (const auto& [n, d] : quot)
        for (int rep = 0; rep < 2; ++rep) {
            ModuleShape q(n, d);
            SeedForms qs = random_seed_forms(q, 2, rng);
            std::size_t m = q.dim();
            out.push_back({"two-nilpotent " + q.to_string(), forge_two_nilpotents(qs, random_symmetric(m, m, 2, rng))});
        }
    // tangent lifts of base metrics in D = 2..4 variables
    for (std::size_t D = 2; D <= 4; ++D)
        for (int rep = 0; rep < 2; ++rep)
            out.push_back({fmt::format("tangent-lift D={}", D), tangent_lift(near_identity(D, D, 2, rng))});
    // Kahler and parakahler
    std::vector<std::pair<int, std::vector<int>>> kah = {{1, {2}}, {2, {0, 1}}, {2, {1, 1}},
                                                         {2, {0, 2}}, {3, {0, 0, 1}}, {2, {2, 1}}};
    for (std::string c : {"2", "2p"})
        for (const auto& [n, d] : kah) {
            ModuleShape s(n, d, 2);
            out.push_back({(c == "2" ? "kahler " : "parakahler ") + s.to_string(),
                           forge_kahler_nilpotent(s, c, random_kahler_potential(s, c, 4, rng))});
        }
    return out;
}

// 2. every declared structure is parallel at five rational points
Outcome parallelism(const std::vector<Draw>& corpus)
{
    Outcome out;
    std::size_t maxdim = 0;
    int checks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MetricGerm& g = corpus[i].germ;
        maxdim = std::max(maxdim, g.dim());
        auto pts = random_points(g, 5, 100 + i);
        bool hasN = false;
        for (const auto& st : g.structures) {
            hasN = hasN || st.name == "N";
            std::string w;
            ++checks;
            if (!parallel_check(g, st.name, pts, &w)) {
                out.ok = false;
                out.detail = fmt::format("{}: D{} != 0 ({})", corpus[i].label, st.name, w);
                return out;
            }
        }
        if (!hasN) {
            out.ok = false;
            out.detail = corpus[i].label + ": no N declared";
            return out;
        }
    }
    if (corpus.size() < 50 || maxdim > 8) {
        out.ok = false;
        out.detail = fmt::format("{} draws, max dim {}", corpus.size(), maxdim);
        return out;
    }
    out.detail = fmt::format("{} draws, {} structure checks, max dim {}", corpus.size(), checks, maxdim);
    return out;
}

// 3. structural commutant dimension equals the brute-force nullspace
Outcome commutant_dims()
{
    Outcome out;
    int count = 0;
    for (std::string c : {"1", "2", "2p", "3", "3p"})
        for (const auto& d : oracle::shapes(8, 4, case_delta(c))) {
            ModuleShape s(static_cast<int>(d.size()), d, case_delta(c));
            PrivilegedBasis pb = normal_form_basis(s, default_signatures(s, c), c);
            std::vector<oracle::Mat> fixed{to_oracle(pb.N)};
            for (const auto& st : pb.structures)
                fixed.push_back(to_oracle(st.m));
            int brute = static_cast<int>(oracle::skew_commutant(to_oracle(pb.G), fixed).size());
            int structural = commutant_dim(c, s);
            ++count;
            if (brute != structural) {
                out.ok = false;
                out.detail = fmt::format("case {} {}: structural {} vs oracle {}", c, s.to_string(), structural, brute);
                return out;
            }
        }
    out.detail = fmt::format("{} (case, shape) pairs", count);
    return out;
}

// 4. case-1 bicommutant: decomposability and the K[N]-span criterion
Outcome bicommutant_logic()
{
    Outcome out;
    int count = 0, spans = 0, dec = 0;
    std::vector<std::string> converse; // K[N]-span although n1 = n2 = n3 fails
    for (const auto& d : oracle::shapes(8, 4)) {
        ModuleShape s(static_cast<int>(d.size()), d);
        PrivilegedBasis pb = normal_form_basis(s, default_signatures(s, "1"), "1");
        std::size_t m = pb.N.rows();
        oracle::Mat G = to_oracle(pb.G);
        auto comm = oracle::skew_commutant(G, {to_oracle(pb.N)});
        std::vector<oracle::Mat> cm;
        for (const auto& v : comm)
            cm.push_back(oracle::unflatten(v, m));
        auto bic = oracle::centralizer(cm, m);
        auto nb = s.block_sizes();
        auto nsz = [&](std::size_t i) { return i < nb.size() ? nb[i] : 0; };
        int n1 = nsz(0), n2 = nsz(1), n3 = nsz(2);
        // K[N] has dimension n1 (degree of the minimal polynomial) and always lies in the bicommutant
        bool oracle_span = static_cast<int>(bic.size()) == n1;
        // flat factor: g restricted to the common kernel of the commutant
        oracle::Rows rows;
        for (const auto& M : cm)
            for (const auto& r : M)
                rows.push_back(r);
        auto V0 = oracle::nullspace(rows, m);
        oracle::Rows form(V0.size(), std::vector<Q>(V0.size()));
        for (std::size_t i = 0; i < V0.size(); ++i)
            for (std::size_t j = 0; j < V0.size(); ++j)
                for (std::size_t p = 0; p < m; ++p)
                    for (std::size_t q = 0; q < m; ++q)
                        form[i][j] += V0[i][p] * G[p][q] * V0[j][q];
        int flat = static_cast<int>(oracle::rank(form));
        Bicommutant bc = bicommutant("1", s);
        bool expect_dec = 2 * n2 < n1;
        bool equal_blocks = n1 == n2 && n2 == n3;
        bool expect_span = n1 - n2 <= 1 && n2 == n3;
        std::string bad;
        if (bc.decomposable != expect_dec)
            bad = "decomposable flag";
        else if ((flat > 0) != expect_dec)
            bad = fmt::format("oracle flat factor rank {}", flat);
        else if (expect_dec && (!bc.flat_factor || bc.flat_factor->first != flat || flat != n1 - 2 * n2))
            bad = "flat factor dimension";
        else if (bc.is_s_N_span != expect_span)
            bad = "span flag";
        else if (oracle_span != expect_span)
            bad = fmt::format("oracle bicommutant dim {} vs n1 {}", bic.size(), n1);
        else if (equal_blocks && !oracle_span)
            bad = "n1 = n2 = n3 without K[N]-span";
        else if (bc.basis.size() != bic.size())
            bad = fmt::format("basis size {} vs oracle {}", bc.basis.size(), bic.size());
        if (!bad.empty()) {
            out.ok = false;
            out.detail = s.to_string() + ": " + bad;
            return out;
        }
        if (oracle_span && !equal_blocks)
            converse.push_back(fmt::format("({},{},{})", n1, n2, n3));
        ++count;
        spans += expect_span;
        dec += expect_dec;
    }
    out.detail = fmt::format("{} shapes ({} decomposable, {} K[N]-span); K[N]-span iff n1-n2<=1 and n2=n3", count,
                             dec, spans);
    if (!converse.empty()) {
        out.detail += "; n1=n2=n3 is sufficient but not necessary, K[N]-span also at leading blocks";
        for (const auto& c : converse)
            out.detail += " " + c;
    }
    return out;
}

// 5. holonomy at order <= 1 reaches the commutant for some draw
Outcome holonomy_genericity()
{
    Outcome out;
    std::mt19937_64 rng(5);
    struct Family {
        std::string label;
        std::function<MetricGerm()> make;
    };
    std::vector<Family> fams = {
        {"case 1 (0,2)", [&] { return forge_nilpotent_metric(random_seed_forms(ModuleShape(2, {0, 2}), 3, rng)); }},
        {"case 1 (0,0,2)", [&] { return forge_nilpotent_metric(random_seed_forms(ModuleShape(3, {0, 0, 2}), 3, rng)); }},
        {"case 2 (0,2)", [&] {
             ModuleShape s(2, {0, 2}, 2);
             return forge_kahler_nilpotent(s, "2", random_kahler_potential(s, "2", 4, rng));
         }}};
    std::vector<std::string> parts;
    for (std::size_t f = 0; f < fams.size(); ++f) {
        int hits = 0, comm = 0;
        for (int draw = 0; draw < 3; ++draw) {
            MetricGerm g = fams[f].make();
            auto pt = random_points(g, 1, 500 + 10 * f + draw)[0];
            HolonomyResult h = holonomy_span(g, pt, 1);
            comm = h.commutant_dim;
            if (!h.contained_in_commutant) {
                out.ok = false;
                out.detail = fams[f].label + ": holonomy leaves the commutant";
                return out;
            }
            hits += h.dim == h.commutant_dim;
        }
        if (hits == 0) {
            out.ok = false;
            out.detail = fams[f].label + ": no generic draw";
            return out;
        }
        parts.push_back(fmt::format("{} {}/3 at dim {}", fams[f].label, hits, comm));
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        out.detail += (i ? ", " : "") + parts[i];
    return out;
}

// 6. Im N in ker ric on nilpotent germs; ric(a, Jb) half-trace on Kahler germs
Outcome ricci(const std::vector<Draw>& corpus)
{
    Outcome out;
    int nil = 0, kah = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MetricGerm& g = corpus[i].germ;
        VerificationReport rep = identity_checks(g, random_points(g, 2, 900 + i));
        // N = 0 (order one) carries no Im N condition
        if (!g.structure("N").is_zero()) {
            const CheckResult* ker = rep.find("im_in_ker_ric[N]");
            if (!ker || !ker->passed) {
                out.ok = false;
                out.detail = corpus[i].label + ": im_in_ker_ric[N] " + (ker ? ker->witness : "missing");
                return out;
            }
            ++nil;
        }
        if (g.kind == "kahler") {
            const CheckResult* sk = rep.find("ricci_skew[J]");
            if (!sk || !sk->passed) {
                out.ok = false;
                out.detail = corpus[i].label + ": ricci_skew[J] " + (sk ? sk->witness : "missing");
                return out;
            }
            ++kah;
        }
        if (!rep.all_passed()) {
            for (const auto& c : rep.checks)
                if (!c.passed) {
                    out.ok = false;
                    out.detail = corpus[i].label + ": " + c.name + " " + c.witness;
                    return out;
                }
        }
    }
    if (kah == 0) {
        out.ok = false;
        out.detail = "no Kahler germs";
        return out;
    }
    out.detail = fmt::format("{} nilpotent germs, {} Kahler germs", nil, kah);
    return out;
}

// 7. Cartan characters for delta = 1, 2 and both signs
Outcome cartan()
{
    Outcome out;
    for (int delta : {1, 2})
        for (Epsilon e : {Epsilon::Minus, Epsilon::Plus}) {
            CartanResult r = cartan_character_test(delta, e);
            const CartanCharacters& c = r.main;
            bool ok = true;
            int sum = 0;
            for (std::size_t k = 1; k <= c.s.size(); ++k) {
                int expect = static_cast<int>(k) <= 2 * delta + 1 ? static_cast<int>(k) - 1 : 0;
                ok = ok && c.s[k - 1] == expect;
                sum += static_cast<int>(k) * c.s[k - 1];
            }
            int target = delta == 1 ? 8 : 40;
            ok = ok && sum == target && c.bound == target && c.dimV == c.bound && r.ordinary();
            if (!ok) {
                out.ok = false;
                out.detail = fmt::format("delta {} eps {}: dimV {} bound {}", delta, to_string(e), c.dimV, c.bound);
                return out;
            }
            out.detail += fmt::format("{}delta={} eps={} dimV={}", out.detail.empty() ? "" : ", ", delta, to_string(e),
                                      c.dimV);
        }
    return out;
}

// 8. global_signature against congruence diagonalization on every normal form
Outcome signatures()
{
    Outcome out;
    int forms = 0;
    for (std::string c : {"1", "2", "2p", "3", "3p"}) {
        int delta = case_delta(c);
        for (const auto& d : oracle::shapes(8, 8, delta)) {
            ModuleShape s(static_cast<int>(d.size()), d, delta);
            int u = unit_dim(c, s);
            CharacteristicSignatures cs;
            cs.shape = s;
            auto rec = [&](auto&& self, int a) -> void {
                if (!out.ok)
                    return;
                if (a > s.n) {
                    PrivilegedBasis pb;
                    try {
                        pb = normal_form_basis(s, cs, c);
                    } catch (const CaseConstraintViolated&) {
                        return;
                    }
                    ++forms;
                    auto expect = oracle::signature(to_oracle(pb.G));
                    auto got = global_signature(s, cs);
                    if (got != expect) {
                        out.ok = false;
                        out.detail = fmt::format("case {} {}: ({},{}) vs ({},{})", c, s.to_string(), got.first,
                                                 got.second, expect.first, expect.second);
                    }
                    return;
                }
                int m = u * s.d[a - 1];
                for (int r = 0; r <= m; ++r) {
                    cs.sigs.push_back({r, m - r});
                    self(self, a + 1);
                    cs.sigs.pop_back();
                }
            };
            rec(rec, 1);
            if (!out.ok)
                return out;
        }
    }
    out.detail = fmt::format("{} normal forms", forms);
    return out;
}

// 9. extend/restrict on random adapted seeds, rejection of non-adapted ones
Outcome nilomorphic()
{
    Outcome out;
    std::mt19937_64 rng(9);
    auto shapes = oracle::shapes(8, 8);
    int seeds = 0, rejected = 0;
    for (std::size_t i = 0; seeds < 200; ++i) {
        const auto& d = shapes[i % shapes.size()];
        ModuleShape s(static_cast<int>(d.size()), d);
        NiloCoords co(s);
        AdaptedSeed seed = random_adapted_seed(s, 3, rng);
        QNuPoly f = nilomorphic_extend(seed);
        QNuPoly r = restrict_to_transversal(f, co);
        bool ok = check_nilomorphic(f, s) && r == seed.value && nilomorphic_extend(AdaptedSeed{s, r}) == f;
        if (!ok) {
            out.ok = false;
            out.detail = "seed failed on " + s.to_string();
            return out;
        }
        ++seeds;
        if (s.n >= 2) {
            AdaptedSeed bad = random_nonadapted_seed(s, 3, rng);
            bool threw = false;
            try {
                nilomorphic_extend(bad);
            } catch (const NotAdapted&) {
                threw = true;
            }
            if (is_adapted(bad) || !threw) {
                out.ok = false;
                out.detail = "non-adapted seed accepted on " + s.to_string();
                return out;
            }
            ++rejected;
        }
    }
    out.detail = fmt::format("{} seeds, {} non-adapted rejected", seeds, rejected);
    return out;
}

} // namespace

int main()
{
    using clock = std::chrono::steady_clock;
    bool all = true;
    auto run = [&](int k, const std::string& title, double limit, const std::function<Outcome()>& f) {
        auto t0 = clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (limit > 0 && secs >= limit) {
            o.ok = false;
            o.detail += fmt::format("; over the {} s limit", limit);
        }
        all = all && o.ok;
        fmt::print("{} criterion {}: {} ({}; {:.2f} s)\n", o.ok ? "PASS" : "FAIL", k, title, o.detail, secs);
        std::fflush(stdout);
    };
    std::vector<Draw> corpus;
    run(1, "Example A forged matrix", 1.0, example_a);
    run(2, "parallel structures on random germs", 60.0, [&] {
        corpus = parallel_corpus();
        return parallelism(corpus);
    });
    run(3, "commutant dimensions vs nullspace oracle", 30.0, commutant_dims);
    run(4, "case-1 bicommutant logic", 0, bicommutant_logic);
    run(5, "holonomy genericity", 0, holonomy_genericity);
    run(6, "Ricci identities", 0, [&] { return ricci(corpus); });
    run(7, "Cartan characters", 10.0, cartan);
    run(8, "global signature vs congruence diagonalization", 0, signatures);
    run(9, "nilomorphic calculus", 20.0, nilomorphic);
    return all ? 0 : 1;
}
