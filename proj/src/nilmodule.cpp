#include "nilgeom/nilmodule.hpp"

#include <algorithm>
#include <sstream>

namespace nilgeom {

ModuleShape::ModuleShape(int n_, std::vector<int> d_, int delta_) : n(n_), d(std::move(d_)), delta(delta_)
{
    validate();
}

ModuleShape ModuleShape::from_blocks(std::vector<int> sizes, int delta)
{
    if (sizes.empty())
        throw InvalidShape("no blocks");
    int n = *std::max_element(sizes.begin(), sizes.end());
    std::vector<int> d(n, 0);
    for (int s : sizes) {
        if (s < 1)
            throw InvalidShape("block size must be positive");
        ++d[s - 1];
    }
    return ModuleShape(n, d, delta);
}

void ModuleShape::validate() const
{
    if (n < 1)
        throw InvalidShape("n must be >= 1");
    if (static_cast<int>(d.size()) != n)
        throw InvalidShape("d must have n entries");
    for (int x : d)
        if (x < 0)
            throw InvalidShape("negative multiplicity");
    if (d.back() < 1)
        throw InvalidShape("d_n must be >= 1");
    if (delta != 1 && delta != 2 && delta != 4)
        throw InvalidShape("delta must be 1, 2 or 4");
}

int ModuleShape::D(int a) const
{
    int s = 0;
    for (int k = 0; k < a && k < n; ++k)
        s += d[k];
    return s;
}

int ModuleShape::n_of(int i) const
{
    for (int a = 1; a <= n; ++a)
        if (i < D(a))
            return a;
    throw InvalidShape("generator index out of range");
}

int ModuleShape::dim() const
{
    int s = 0;
    for (int a = 1; a <= n; ++a)
        s += a * d[a - 1];
    return delta * s;
}

std::vector<int> ModuleShape::block_sizes() const
{
    std::vector<int> b;
    for (int a = n; a >= 1; --a)
        for (int k = 0; k < d[a - 1]; ++k)
            b.push_back(a);
    return b;
}

std::string ModuleShape::to_string() const
{
    std::ostringstream os;
    os << "n=" << n << " d=(";
    for (std::size_t k = 0; k < d.size(); ++k)
        os << (k ? "," : "") << d[k];
    os << ") delta=" << delta;
    return os.str();
}

QMatrix jordan_matrix(const ModuleShape& shape)
{
    shape.validate();
    std::vector<QMatrix> blocks;
    QMatrix id = QMatrix::identity(shape.delta);
    for (int p : shape.block_sizes())
        blocks.push_back(kron(jordan_block(p), id));
    return direct_sum(blocks);
}

ModuleShape invariant_factors(const QMatrix& N)
{
    if (!N.square())
        throw DimensionMismatch("N must be square");
    std::size_t m = N.rows();
    if (m == 0)
        throw InvalidShape("empty matrix");
    std::vector<int> rk{static_cast<int>(m)};
    QMatrix P = QMatrix::identity(m);
    while (rk.back() > 0) {
        if (rk.size() > m + 1)
            break;
        P = P * N;
        rk.push_back(static_cast<int>(rank(P)));
        if (rk.back() == rk[rk.size() - 2] && rk.back() > 0)
            throw NotNilpotent("powers of N stabilize at nonzero rank");
    }
    if (rk.back() != 0)
        throw NotNilpotent("N^dim != 0");
    int n = static_cast<int>(rk.size()) - 1;
    rk.push_back(0);
    std::vector<int> d(n);
    for (int a = 1; a <= n; ++a)
        d[a - 1] = rk[a - 1] - 2 * rk[a] + rk[a + 1];
    return ModuleShape(n, d, 1);
}

int flag_dims(const ModuleShape& shape, int a, int b)
{
    if (a < 0 || b < 0)
        throw InvalidShape("flag indices must be nonnegative");
    int s = 0;
    for (int c = 1; c <= shape.n; ++c)
        s += std::min(std::max(c - a, 0), b) * shape.d[c - 1];
    return shape.delta * s;
}

bool adapted_family_check(const QMatrix& N, const std::vector<QMatrix>& vectors)
{
    ModuleShape s = invariant_factors(N);
    if (static_cast<int>(vectors.size()) != s.D())
        throw CountMismatch("expected " + std::to_string(s.D()) + " vectors");
    std::size_t m = N.rows();
    QMatrix im = column_basis(N);
    QMatrix P = QMatrix::identity(m);
    for (int a = 0; a < s.n; ++a) {
        // W_a = ker N^a + Im N, compared with W_{a+1}
        QMatrix ker_a = a == 0 ? QMatrix(m, 0) : nullspace(P);
        QMatrix Pn = P * N;
        QMatrix ker_a1 = nullspace(Pn);
        QMatrix W = hstack(ker_a, im);
        std::size_t rw = W.cols() ? rank(W) : 0;
        QMatrix slice(m, 0);
        for (int i = s.D(a); i < s.D(a + 1); ++i) {
            const QMatrix& v = vectors[i];
            if (v.rows() != m || v.cols() != 1)
                throw DimensionMismatch("vectors must be columns");
            if (!(Pn * v).is_zero())
                return false;
            slice = hstack(slice, v);
        }
        std::size_t r_all = rank(hstack(W, slice));
        if (r_all != rw + static_cast<std::size_t>(s.d[a]))
            return false;
        // the slice together with W_a must exhaust W_{a+1}
        std::size_t r_next = rank(hstack(ker_a1, im));
        if (r_all != r_next)
            return false;
        P = Pn;
    }
    return true;
}

NiloCoords::NiloCoords(const ModuleShape& shape) : shape_(shape)
{
    shape_.validate();
    for (int i = 0; i < shape_.D(); ++i)
        for (int c = 0; c < shape_.delta; ++c)
            gen_size_.push_back(shape_.n_of(i));
    idx_.assign(gen_size_.size(), std::vector<int>(shape_.n, -1));
    for (int a = shape_.n - 1; a >= 0; --a)
        for (int k = 0; k < gens(); ++k) {
            if (gen_size_[k] <= a)
                continue;
            idx_[k][a] = static_cast<int>(names_.size());
            labels_.push_back({k, a});
            if (a == 0)
                names_.push_back("x" + std::to_string(k + 1));
            else
                names_.push_back("y" + std::to_string(k + 1) + "_" + std::to_string(a));
        }
}

int NiloCoords::index(int k, int a) const
{
    if (a < 0 || a >= shape_.n)
        return -1;
    return idx_.at(k)[a];
}

QMatrix NiloCoords::N() const
{
    QMatrix m(dim(), dim());
    for (int k = 0; k < gens(); ++k)
        for (int a = 0; a + 1 < gen_size_[k]; ++a)
            m(index(k, a + 1), index(k, a)) = 1;
    return m;
}

QMatrix NiloCoords::lift(const QMatrix& block) const
{
    int dl = shape_.delta;
    if (static_cast<int>(block.rows()) != dl || !block.square())
        throw DimensionMismatch("structure block must be delta x delta");
    QMatrix m(dim(), dim());
    for (int i = 0; i < shape_.D(); ++i)
        for (int a = 0; a < shape_.n_of(i); ++a)
            for (int r = 0; r < dl; ++r)
                for (int c = 0; c < dl; ++c)
                    m(index(dl * i + r, a), index(dl * i + c, a)) = block(r, c);
    return m;
}

} // namespace nilgeom
