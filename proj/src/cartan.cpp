#include "nilgeom/cartan.hpp"

#include "nilgeom/errors.hpp"
#include "nilgeom/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace nilgeom {

namespace {

using CVec = std::vector<QC>;
using CMat = std::vector<std::vector<QC>>;

int binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

QMatrix to_qmatrix(const std::vector<std::vector<Q>>& rows, std::size_t cols)
{
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

// a^T W conj(c)
QC bilinear(const CVec& a, const CMat& W, const CVec& c)
{
    QC s;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (is_zero(a[p]))
            continue;
        for (std::size_t q = 0; q < c.size(); ++q)
            if (!is_zero(c[q]) && !is_zero(W[p][q]))
                s += a[p] * W[p][q] * conj(c[q]);
    }
    return s;
}

// Real basis of {X : X^T = conj X, conj(X) Om H0 + conj(H0) Om X = 0}.
std::vector<CMat> tangent_space(int delta, Epsilon eps)
{
    int n2 = 2 * delta;
    std::vector<Q> h0(n2, Q(1));
    if (eps == Epsilon::Plus)
        for (int i = delta; i < n2; ++i)
            h0[i] = -1;
    // Om = [[0, I], [-I, 0]]
    auto om = [&](int i, int j) -> Q {
        if (i < delta && j == i + delta)
            return 1;
        if (i >= delta && j == i - delta)
            return -1;
        return 0;
    };
    std::size_t N = 2 * n2 * n2;
    std::size_t ncons = 2 * (2 * n2 * n2);
    QMatrix C(ncons, N);
    for (std::size_t k = 0; k < N; ++k) {
        CMat X(n2, CVec(n2));
        std::size_t e = k / 2;
        X[e / n2][e % n2] = (k % 2) ? QC(Q(0), Q(1)) : QC(Q(1));
        std::size_t row = 0;
        auto put = [&](const QC& z) {
            C(row++, k) = z.re;
            C(row++, k) = z.im;
        };
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j)
                put(X[j][i] - conj(X[i][j]));
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j) {
                // (conj X Om H0)_{ij} + (H0 Om X)_{ij}
                QC s;
                for (int t = 0; t < n2; ++t) {
                    Q w = om(t, j);
                    if (w != 0)
                        s += conj(X[i][t]) * QC(w * h0[j]);
                    Q v = om(i, t);
                    if (v != 0)
                        s += QC(h0[i] * v) * X[t][j];
                }
                put(s);
            }
    }
    QMatrix ns = nullspace(C);
    std::vector<CMat> W;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        CMat X(n2, CVec(n2));
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j) {
                std::size_t e = static_cast<std::size_t>(i * n2 + j);
                X[i][j] = QC(ns(2 * e, c), ns(2 * e + 1, c));
            }
        W.push_back(X);
    }
    return W;
}

std::vector<CVec> tilted_flag(int delta)
{
    int n2 = 2 * delta;
    std::vector<CVec> f;
    for (int j = 0; j < delta; ++j) {
        CVec e(n2);
        e[j] = QC(1);
        f.push_back(e);
    }
    for (int j = 1; j <= delta; ++j) {
        CVec e(n2);
        e[delta + j - 1] = QC(Q(1), Q(j - 1, delta));
        f.push_back(e);
    }
    for (int j = 0; j < n2; ++j) {
        CVec e(n2);
        e[j] = imag_unit();
        f.push_back(e);
    }
    return f;
}

std::vector<CVec> generic_flag(int delta, std::uint64_t seed)
{
    int n2 = 2 * delta;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<CVec> f;
    for (int k = 0; k < 2 * n2; ++k) {
        CVec e(n2);
        for (auto& z : e) {
            int re = d(rng);
            int im = d(rng);
            z = QC(Q(re), Q(im));
        }
        f.push_back(e);
    }
    return f;
}

std::vector<int> characters(const std::vector<CMat>& W, const std::vector<CVec>& flag)
{
    std::size_t dimW = W.size();
    std::vector<int> s;
    std::vector<std::vector<Q>> rows;
    int prev = static_cast<int>(dimW);
    for (std::size_t k = 1; k <= flag.size(); ++k) {
        // new pairs (a, k-1)
        std::size_t b = k - 1;
        for (std::size_t a = 0; a < b; ++a) {
            std::vector<Q> re(dimW), im(dimW);
            for (std::size_t w = 0; w < dimW; ++w) {
                QC z = bilinear(flag[a], W[w], flag[b]) - bilinear(flag[b], W[w], flag[a]);
                re[w] = z.re;
                im[w] = z.im;
            }
            rows.push_back(im);
            rows.push_back(re);
        }
        int cur = static_cast<int>(dimW) - (rows.empty() ? 0 : static_cast<int>(rank(to_qmatrix(rows, dimW))));
        s.push_back(prev - cur);
        prev = cur;
    }
    return s;
}

} // namespace

Epsilon parse_epsilon(const std::string& s)
{
    if (s == "-1")
        return Epsilon::Minus;
    if (s == "+1" || s == "1")
        return Epsilon::Plus;
    if (s == "C" || s == "c")
        return Epsilon::Complex;
    throw BadParams("epsilon must be -1, +1 or C");
}

std::string to_string(Epsilon e)
{
    switch (e) {
    case Epsilon::Minus:
        return "-1";
    case Epsilon::Plus:
        return "+1";
    default:
        return "C";
    }
}

CartanCharacters cartan_characters(int delta, Epsilon eps)
{
    if (delta < 1)
        throw BadParams("delta must be positive");
    if (delta > 3)
        throw TooLarge("Cartan test limited to delta <= 3");
    // ranks over Q do not depend on the ground field, so the complex case
    // shares the real system
    if (eps == Epsilon::Complex)
        eps = Epsilon::Minus;
    int n2 = 2 * delta;
    auto W = tangent_space(delta, eps);
    CartanCharacters r;
    r.delta = delta;
    r.dimW = static_cast<int>(W.size());
    int nt = 2 * n2;
    r.params = nt * r.dimW;
    std::vector<CVec> T;
    for (int j = 0; j < n2; ++j) {
        CVec e(n2);
        e[j] = QC(1);
        T.push_back(e);
    }
    for (int j = 0; j < n2; ++j) {
        CVec e(n2);
        e[j] = imag_unit();
        T.push_back(e);
    }
    // bilinear values B[t][w][u] = T_t^T W_w conj(T_u)
    std::vector<std::vector<std::vector<QC>>> B(nt, std::vector<std::vector<QC>>(r.dimW, std::vector<QC>(nt)));
    for (int t = 0; t < nt; ++t)
        for (int w = 0; w < r.dimW; ++w)
            for (int u = 0; u < nt; ++u)
                B[t][w][u] = bilinear(T[t], W[w], T[u]);
    static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    static const std::array<int, 6> sgn{1, -1, -1, 1, 1, -1};
    // lambda(t_i, t_j, t_k) for i < j < k, as (Im, Re) coefficient rows
    std::map<std::array<int, 3>, std::vector<Q>> lam;
    std::vector<std::vector<Q>> rows, redundant;
    auto label = [&](int t) { return (t / n2) * delta + (t % n2) % delta; };
    for (int i = 0; i < nt; ++i)
        for (int j = i + 1; j < nt; ++j)
            for (int k = j + 1; k < nt; ++k) {
                std::array<int, 3> v{i, j, k};
                std::vector<QC> coef(r.params);
                for (std::size_t p = 0; p < perms.size(); ++p) {
                    int a = v[perms[p][0]], b = v[perms[p][1]], c = v[perms[p][2]];
                    for (int w = 0; w < r.dimW; ++w)
                        coef[b * r.dimW + w] += QC(sgn[p]) * B[a][w][c];
                }
                std::vector<Q> im(r.params), re(r.params), both;
                for (int q = 0; q < r.params; ++q) {
                    im[q] = coef[q].im;
                    re[q] = coef[q].re;
                }
                rows.push_back(im);
                rows.push_back(re);
                both = im;
                both.insert(both.end(), re.begin(), re.end());
                lam[v] = both;
                if (label(i) != label(j) && label(i) != label(k) && label(j) != label(k)) {
                    redundant.push_back(im);
                    redundant.push_back(re);
                }
            }
    r.equation_rank = static_cast<int>(rank(to_qmatrix(rows, r.params)));
    r.dimV = r.params - r.equation_rank;
    r.redundant_rank = redundant.empty() ? 0 : static_cast<int>(rank(to_qmatrix(redundant, r.params)));
    r.redundant_bound = 4 * binom(2 * delta, 3);

    // signed vectors: (sign, tangent index); J dx = dy, J dy = -dx
    using SV = std::pair<int, int>;
    auto Jv = [&](SV x) { return x.second < n2 ? SV{x.first, x.second + n2} : SV{-x.first, x.second - n2}; };
    auto prime = [&](SV x) { return SV{x.first, x.second + delta}; };
    auto form = [&](SV a, SV b, SV c) {
        std::array<int, 3> idx{a.second, b.second, c.second};
        int sign = a.first * b.first * c.first;
        std::vector<Q> zero(2 * r.params);
        if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2])
            return zero;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y + 1 < 3 - x; ++y)
                if (idx[y] > idx[y + 1]) {
                    std::swap(idx[y], idx[y + 1]);
                    sign = -sign;
                }
        std::vector<Q> f = lam.at(idx);
        if (sign < 0)
            for (auto& e : f)
                e = -e;
        return f;
    };
    // unprimed labels J^alpha u_i, i in [0, delta)
    std::vector<SV> base;
    for (int al = 0; al < 2; ++al)
        for (int i = 0; i < delta; ++i)
            base.push_back({1, al * n2 + i});
    r.relations_hold = true;
    for (std::size_t x = 0; x < base.size(); ++x)
        for (std::size_t y = x + 1; y < base.size(); ++y)
            for (std::size_t z = y + 1; z < base.size(); ++z) {
                SV u = base[x], v = base[y], w = base[z];
                SV up = prime(u), vp = prime(v), wp = prime(w);
                SV Jup = Jv(up), Jvp = Jv(vp), Jwp = Jv(wp);
                std::vector<std::vector<std::vector<Q>>> groups{
                    {form(up, v, w), form(u, vp, w), form(u, v, wp), form(up, vp, wp)},
                    {form(Jup, v, w), form(u, Jvp, w), form(u, v, Jwp), form(Jup, Jvp, Jwp)},
                    {form(u, vp, wp), form(up, v, wp), form(up, vp, w), form(u, v, w)},
                    {form(u, Jvp, Jwp), form(Jup, v, Jwp), form(Jup, Jvp, w), form(u, v, w)}};
                for (const auto& gr : groups)
                    if (rank(to_qmatrix(gr, 2 * r.params)) > 3)
                        r.relations_hold = false;
                ++r.relation_count;
            }
    r.relation_count *= 4;
    r.redundancy_ok = r.relations_hold && r.equation_rank <= 4 * binom(2 * delta + 1, 3);
    r.closed_form = 2 * binom(2 * delta + 2, 3);

    auto bound_of = [](const std::vector<int>& s) {
        int b = 0;
        for (std::size_t k = 0; k < s.size(); ++k)
            b += static_cast<int>(k + 1) * s[k];
        return b;
    };
    r.s = characters(W, tilted_flag(delta));
    r.flag = "tilted";
    if (bound_of(r.s) != r.dimV) {
        r.s = characters(W, generic_flag(delta, 1));
        r.flag = "generic";
    }
    r.bound = bound_of(r.s);
    r.ordinary = r.bound == r.dimV;
    return r;
}

bool CartanResult::ordinary() const
{
    if (!main.ordinary)
        return false;
    for (const auto& [a, c] : layers)
        if (!c.ordinary)
            return false;
    return true;
}

CartanResult cartan_character_test(int delta, Epsilon eps, const std::optional<ModuleShape>& shape)
{
    CartanResult res;
    res.epsilon = eps;
    res.main = cartan_characters(delta, eps);
    if (shape) {
        shape->validate();
        int n = shape->n;
        for (int a = 0; a < n; ++a) {
            int da = shape->D() - shape->D(n - a - 1);
            if (da > 0)
                res.layers.emplace_back(a, cartan_characters(da, eps));
        }
    }
    return res;
}

} // namespace nilgeom
