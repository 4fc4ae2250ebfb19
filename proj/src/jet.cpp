#include "nilgeom/jet.hpp"

#include "nilgeom/linalg.hpp"

#include <algorithm>
#include <map>

namespace nilgeom {

namespace {

void enumerate(std::size_t m, int left, std::size_t pos, Mono& cur, std::vector<Mono>& out)
{
    if (pos == m) {
        if (left == 0)
            out.push_back(cur);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        enumerate(m, left - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

JetSpace::JetSpace(std::size_t m, int maxdeg) : m_(m), d_(maxdeg)
{
    for (int k = 0; k <= d_; ++k) {
        Mono cur(m, 0);
        std::vector<Mono> layer;
        enumerate(m, k, 0, cur, layer);
        for (auto& mo : layer) {
            monos_.push_back(mo);
            deg_.push_back(k);
        }
        count_.push_back(monos_.size());
    }
    std::map<Mono, std::size_t> idx;
    for (std::size_t i = 0; i < monos_.size(); ++i)
        idx[monos_[i]] = i;
    std::vector<std::vector<Prod>> bucket(d_ + 1);
    for (std::size_t a = 0; a < monos_.size(); ++a)
        for (std::size_t b = 0; b < monos_.size() && deg_[a] + deg_[b] <= d_; ++b) {
            Mono s = monos_[a];
            for (std::size_t v = 0; v < m; ++v)
                s[v] += monos_[b][v];
            bucket[deg_[a] + deg_[b]].push_back(
                {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(idx[s])});
        }
    for (int e = 0; e <= d_; ++e) {
        prod_.insert(prod_.end(), bucket[e].begin(), bucket[e].end());
        prod_end_.push_back(prod_.size());
    }
    der_.resize(m);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t i = 0; i < monos_.size(); ++i) {
            if (monos_[i][v] == 0)
                continue;
            Mono t = monos_[i];
            --t[v];
            der_[v].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(idx[t]), monos_[i][v]});
        }
}

long JetSpace::index(const Mono& m) const
{
    int s = 0;
    for (int e : m)
        s += e;
    if (s > d_)
        return -1;
    auto it = std::lower_bound(monos_.begin(), monos_.end(), m, [&](const Mono& x, const Mono& y) {
        int dx = 0, dy = 0;
        for (int e : x)
            dx += e;
        for (int e : y)
            dy += e;
        if (dx != dy)
            return dx < dy;
        return x > y; // enumeration order inside a degree is decreasing
    });
    if (it == monos_.end() || *it != m)
        return -1;
    return it - monos_.begin();
}

Jet::Jet(std::shared_ptr<const JetSpace> sp, int deg) : sp_(std::move(sp)), deg_(deg)
{
    c_.assign(sp_->count_upto(deg), Q(0));
}

bool Jet::is_zero() const
{
    for (const auto& x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Jet Jet::truncated(int deg) const
{
    Jet r = *this;
    r.deg_ = std::min(deg, deg_);
    r.c_.resize(sp_->count_upto(r.deg_));
    return r;
}

Jet Jet::deriv(std::size_t v) const
{
    Jet r(sp_, std::max(deg_ - 1, 0));
    if (deg_ == 0)
        return r;
    for (const auto& d : sp_->derivative(v)) {
        if (d.from >= c_.size())
            break;
        if (sgn(c_[d.from]) != 0)
            r.c_[d.to] += c_[d.from] * d.factor;
    }
    return r;
}

Jet& Jet::operator+=(const Jet& o)
{
    deg_ = std::min(deg_, o.deg_);
    c_.resize(sp_->count_upto(deg_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0)
            c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
    deg_ = std::min(deg_, o.deg_);
    c_.resize(sp_->count_upto(deg_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0)
            c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(const Q& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

void Jet::add_product(const Jet& a, const Jet& b, const Q& s)
{
    int e = std::min({deg_, a.deg_, b.deg_});
    if (e < deg_) {
        deg_ = e;
        c_.resize(sp_->count_upto(e));
    }
    const auto& pr = sp_->products();
    std::size_t end = sp_->products_upto(e);
    Q t;
    for (std::size_t k = 0; k < end; ++k) {
        const auto& p = pr[k];
        if (sgn(a.c_[p.a]) == 0 || sgn(b.c_[p.b]) == 0)
            continue;
        t = a.c_[p.a] * b.c_[p.b];
        if (s != 1)
            t *= s;
        c_[p.out] += t;
    }
}

Jet operator*(const Jet& a, const Jet& b)
{
    Jet r(a.sp_, std::min(a.deg_, b.deg_));
    r.add_product(a, b);
    return r;
}

Jet Jet::taylor(std::shared_ptr<const JetSpace> sp, const QPoly& p, const std::vector<Q>& point, int deg)
{
    std::size_t m = sp->vars();
    std::vector<QPoly> vals;
    for (std::size_t i = 0; i < m; ++i)
        vals.push_back(QPoly::constant(m, point[i]) + QPoly::var(m, i));
    QPoly q = p.substitute(vals);
    Jet r(sp, deg);
    for (const auto& [mo, c] : q.terms()) {
        Mono mm = mo;
        mm.resize(m, 0);
        long i = sp->index(mm);
        if (i >= 0 && static_cast<std::size_t>(i) < r.c_.size())
            r.c_[i] += c;
    }
    return r;
}

Jet Jet::constant(std::shared_ptr<const JetSpace> sp, const Q& c, int deg)
{
    Jet r(std::move(sp), deg);
    r.c_[0] = c;
    return r;
}

JetMatrix jet_matmul(const JetMatrix& a, const JetMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    JetMatrix r(n, std::vector<Jet>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Jet acc = a[i][0] * b[0][j];
            for (std::size_t t = 1; t < k; ++t)
                acc.add_product(a[i][t], b[t][j]);
            r[i][j] = acc;
        }
    return r;
}

QMatrix jet_constant(const JetMatrix& a)
{
    QMatrix r(a.size(), a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            r(i, j) = a[i][j].constant();
    return r;
}

JetMatrix jet_inverse(const JetMatrix& g, int deg)
{
    std::size_t n = g.size();
    QMatrix g0 = jet_constant(g);
    QMatrix A = inverse(g0);
    // M = -A (g - g0), a jet without constant term
    JetMatrix E(n, std::vector<Jet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            E[i][j] = g[i][j].truncated(deg);
            E[i][j][0] = 0;
        }
    JetMatrix M(n, std::vector<Jet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Jet acc = E[0][j] * Q(0);
            for (std::size_t t = 0; t < n; ++t)
                if (sgn(A(i, t)) != 0)
                    acc += E[t][j] * (-A(i, t));
            M[i][j] = acc;
        }
    // result = sum_{k=0}^{deg} M^k A
    JetMatrix Aj(n, std::vector<Jet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Aj[i][j] = E[i][j] * Q(0);
            Aj[i][j][0] = A(i, j);
        }
    JetMatrix result = Aj, term = Aj;
    for (int k = 1; k <= deg; ++k) {
        term = jet_matmul(M, term);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                result[i][j] += term[i][j];
    }
    return result;
}

} // namespace nilgeom
