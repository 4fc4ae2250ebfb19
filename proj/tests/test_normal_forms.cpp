#include "nilgeom/normal_forms.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace nilgeom;

namespace {

oracle::Mat to_oracle(const QMatrix& m)
{
    oracle::Mat r = oracle::mat(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = m(i, j);
    return r;
}

// every admissible signature list for (shape, case)
std::vector<CharacteristicSignatures> all_signatures(const ModuleShape& s, const std::string& c)
{
    std::vector<CharacteristicSignatures> out;
    int u = unit_dim(c, s);
    CharacteristicSignatures cur;
    cur.shape = s;
    auto rec = [&](auto&& self, int a) -> void {
        if (a > s.n) {
            out.push_back(cur);
            return;
        }
        int m = u * s.d[a - 1];
        for (int r = 0; r <= m; ++r) {
            cur.sigs.push_back({r, m - r});
            self(self, a + 1);
            cur.sigs.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

int case_delta(const std::string& c)
{
    if (c == "1")
        return 1;
    if (c == "2" || c == "2p")
        return 2;
    return 4;
}

} // namespace

TEST_CASE("characteristic_signatures examples")
{
    auto cs = characteristic_signatures(QMatrix(3, 3), QMatrix::identity(3));
    CHECK(cs.shape == ModuleShape(1, {3}));
    CHECK(cs.sigs == std::vector<std::pair<int, int>>{{3, 0}});

    auto c2 = characteristic_signatures(jordan_block(2), antidiag(2));
    CHECK(c2.shape.n == 2);
    CHECK(c2.sigs[1] == std::make_pair(1, 0));

    QMatrix g = QMatrix::identity(2);
    CHECK_THROWS_AS(characteristic_signatures(jordan_block(2), g), NotSelfAdjoint);
    CHECK_THROWS_AS(characteristic_signatures(QMatrix::identity(2), g), NotNilpotent);
}

TEST_CASE("normal_form_basis examples")
{
    ModuleShape s(2, {0, 1});
    CharacteristicSignatures cs{s, {{0, 0}, {1, 0}}};
    auto pb = normal_form_basis(s, cs, "1");
    CHECK(pb.N == jordan_block(2));
    CHECK(pb.G == antidiag(2));

    ModuleShape sp(1, {3}, 2);
    auto pp = normal_form_basis(sp, default_signatures(sp, "2p"), "2p");
    CHECK(pp.structure("L") == direct_sum<Q>({ipq(1, 1), ipq(1, 1), ipq(1, 1)}));
    CHECK(pp.G == direct_sum<Q>({antidiag(2), antidiag(2), antidiag(2)}));

    ModuleShape s1(1, {5});
    auto p1 = normal_form_basis(s1, CharacteristicSignatures{s1, {{2, 3}}}, "1");
    CHECK(p1.G == ipq(2, 3));
    CHECK(p1.N.is_zero());

    CHECK_THROWS_AS(normal_form_basis(s1, CharacteristicSignatures{s1, {{2, 2}}}, "1"), DegenerateSignatures);
    CHECK_THROWS_AS(normal_form_basis(sp, CharacteristicSignatures{sp, {{4, 2}}}, "2p"), CaseConstraintViolated);
}

TEST_CASE("global_signature examples")
{
    ModuleShape s(2, {0, 2});
    CharacteristicSignatures cs{s, {{0, 0}, {2, 0}}};
    CHECK(global_signature(s, cs) == std::make_pair(2, 2));
    auto pb = normal_form_basis(s, cs, "1");
    CHECK(oracle::signature(to_oracle(pb.G)) == std::make_pair(2, 2));

    ModuleShape s1(1, {4});
    CHECK(global_signature(s1, CharacteristicSignatures{s1, {{1, 3}}}) == std::make_pair(1, 3));

    // three-layer shape: (d2 + d3 + r1 + r3, d2 + d3 + s1 + s3)
    ModuleShape b(3, {2, 1, 2});
    CharacteristicSignatures cb{b, {{1, 1}, {0, 1}, {2, 0}}};
    CHECK(global_signature(b, cb) == std::make_pair(1 + 2 + 1 + 2, 1 + 2 + 1 + 0));
}

TEST_CASE("round trip and signature formula over all normal forms of dim <= 8")
{
    int forms = 0;
    for (std::string c : {"1", "2", "2p", "3", "3p"}) {
        int delta = case_delta(c);
        for (const auto& d : oracle::shapes(8, 8, delta)) {
            ModuleShape s(static_cast<int>(d.size()), d, delta);
            for (const auto& cs : all_signatures(s, c)) {
                PrivilegedBasis pb;
                try {
                    pb = normal_form_basis(s, cs, c);
                } catch (const CaseConstraintViolated&) {
                    continue;
                }
                ++forms;
                CHECK(pb.N.transpose() * pb.G == pb.G * pb.N);
                auto back = characteristic_signatures(pb.N, pb.G);
                CHECK(back.sigs == cs.sigs);
                CHECK(global_signature(s, cs) == oracle::signature(to_oracle(pb.G)));
                for (const auto& st : pb.structures) {
                    CHECK(st.m * pb.N == pb.N * st.m);
                    CHECK(st.m.transpose() * pb.G == pb.G * st.m * Q(st.adjoint));
                }
            }
        }
    }
    CHECK(forms > 100);
}

TEST_CASE("case relations in privileged bases")
{
    ModuleShape s2(2, {1, 1}, 2);
    auto p2 = normal_form_basis(s2, default_signatures(s2, "2"), "2");
    QMatrix I = QMatrix::identity(p2.N.rows());
    CHECK(p2.structure("J") * p2.structure("J") == -I);
    auto pp = normal_form_basis(s2, default_signatures(s2, "2p"), "2p");
    CHECK(pp.structure("L") * pp.structure("L") == I);
    ModuleShape s3(2, {0, 1}, 4);
    auto p3 = normal_form_basis(s3, default_signatures(s3, "3"), "3");
    QMatrix J1 = p3.structure("J1"), J2 = p3.structure("J2"), J3 = p3.structure("J3");
    QMatrix I8 = QMatrix::identity(8);
    CHECK(J1 * J1 == -I8);
    CHECK(J2 * J2 == -I8);
    CHECK(J3 * J3 == -I8);
    CHECK(J1 * J2 == -(J2 * J1));
    CHECK((J1 * J2 == J3 || J1 * J2 == -J3));
    auto p3p = normal_form_basis(s3, default_signatures(s3, "3p"), "3p");
    QMatrix L1 = p3p.structure("L1"), L2 = p3p.structure("L2");
    CHECK(L1 * L1 == I8);
    CHECK(L2 * L2 == I8);
    CHECK(L1 * L2 == -(L2 * L1));
}

TEST_CASE("alt_form_ranks")
{
    // canonical nondegenerate form on each shape: ranks d_a
    for (const auto& d : oracle::shapes(8, 4)) {
        ModuleShape s(static_cast<int>(d.size()), d);
        bool even = true;
        for (int x : d)
            even = even && x % 2 == 0;
        if (!even)
            continue;
        QMatrix w = darboux_form(s, d);
        NiloCoords co(s);
        CHECK(alt_form_ranks(co.N(), w) == d);
        CHECK(alt_form_ranks(co.N(), QMatrix(s.dim(), s.dim())) == std::vector<int>(s.n, 0));
    }
    // random compatible forms: oracle rank of omega(., N^{a-1} .) on ker N^a
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> u(-2, 2);
    for (const auto& d : oracle::shapes(6, 4)) {
        ModuleShape s(static_cast<int>(d.size()), d);
        QMatrix N = jordan_matrix(s);
        std::size_t m = N.rows();
        oracle::Mat On = to_oracle(N), Ont = oracle::transpose(On);
        oracle::Rows sys;
        oracle::add_constraint(sys, m, [&](const oracle::Mat& W) {
            oracle::Mat t = oracle::transpose(W);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    t[i][j] += W[i][j];
            return t;
        });
        oracle::add_constraint(sys, m, [&](const oracle::Mat& W) {
            return oracle::sub(oracle::mul(W, On), oracle::mul(Ont, W));
        });
        auto basis = oracle::nullspace(sys, m * m);
        for (int rep = 0; rep < 3; ++rep) {
            QMatrix w(m, m);
            for (const auto& b : basis) {
                Q c = u(rng);
                for (std::size_t k = 0; k < m * m; ++k)
                    w(k / m, k % m) += c * b[k];
            }
            auto r = alt_form_ranks(N, w);
            REQUIRE(static_cast<int>(r.size()) == s.n);
            for (int a = 1; a <= s.n; ++a) {
                auto ker = oracle::nullspace(to_oracle(pow(N, a)), m);
                QMatrix Wa = w * pow(N, a - 1);
                oracle::Rows form(ker.size(), std::vector<Q>(ker.size()));
                for (std::size_t i = 0; i < ker.size(); ++i)
                    for (std::size_t j = 0; j < ker.size(); ++j)
                        for (std::size_t p = 0; p < m; ++p)
                            for (std::size_t q = 0; q < m; ++q)
                                form[i][j] += ker[i][p] * Wa(p, q) * ker[j][q];
                CHECK(r[a - 1] == static_cast<int>(oracle::rank(form)));
                CHECK(r[a - 1] % 2 == 0);
            }
        }
    }
    QMatrix N = jordan_matrix(ModuleShape(2, {1, 1}));
    QMatrix bad(3, 3);
    bad(0, 2) = 1;
    bad(2, 0) = -1;
    if (bad * N != N.transpose() * bad)
        CHECK_THROWS_AS(alt_form_ranks(N, bad), NotCompatible);
    QMatrix sym = QMatrix::identity(3);
    CHECK_THROWS_AS(alt_form_ranks(N, sym), NotAlternate);
}
