#pragma once

#include "nilgeom/linalg.hpp"

#include <string>
#include <vector>

namespace nilgeom {

// Invariant-factor multiplicities of a nilpotent endomorphism.
// d[a-1] is the number of Jordan blocks of size a (over the scalar algebra
// of real dimension delta).
struct ModuleShape {
    int n = 1;
    std::vector<int> d{1};
    int delta = 1;

    ModuleShape() = default;
    ModuleShape(int n_, std::vector<int> d_, int delta_ = 1);

    static ModuleShape from_blocks(std::vector<int> sizes, int delta = 1);

    void validate() const;
    // D_a = d_1 + ... + d_a, a in [0, n]
    int D(int a) const;
    int D() const { return D(n); }
    // n(i) for generator i in [0, D), generators sorted by increasing size
    int n_of(int i) const;
    int dim() const;
    // block sizes in decreasing order
    std::vector<int> block_sizes() const;
    std::string to_string() const;

    friend bool operator==(const ModuleShape& a, const ModuleShape& b)
    {
        return a.n == b.n && a.d == b.d && a.delta == b.delta;
    }
    friend bool operator!=(const ModuleShape& a, const ModuleShape& b) { return !(a == b); }
};

QMatrix jordan_matrix(const ModuleShape& shape);
ModuleShape invariant_factors(const QMatrix& N);
int flag_dims(const ModuleShape& shape, int a, int b);
bool adapted_family_check(const QMatrix& N, const std::vector<QMatrix>& vectors);

// Coordinates (x_k, y_{k,a}) attached to a shape. Generators of a delta > 1
// shape are split into delta real generators k = delta*i + c. The ordering
// is (y_{.,n-1}, ..., y_{.,1}, x): deepest y layer first, x last.
class NiloCoords {
public:
    explicit NiloCoords(const ModuleShape& shape);

    const ModuleShape& shape() const { return shape_; }
    int order() const { return shape_.n; }
    // number of real generators
    int gens() const { return static_cast<int>(gen_size_.size()); }
    int gen_size(int k) const { return gen_size_[k]; }
    std::size_t dim() const { return names_.size(); }

    // coordinate index of N^a X_k (a = 0 is x_k); -1 if N^a X_k = 0
    int index(int k, int a) const;
    int x(int k) const { return index(k, 0); }
    int y(int k, int a) const { return index(k, a); }
    // inverse of index(): (k, a)
    std::pair<int, int> label(std::size_t idx) const { return labels_[idx]; }

    const std::vector<std::string>& names() const { return names_; }
    // the constant matrix of N in these coordinates
    QMatrix N() const;
    // the constant endomorphism acting by `block` (delta x delta) on every
    // generator's component group, commuting with N
    QMatrix lift(const QMatrix& block) const;

private:
    ModuleShape shape_;
    std::vector<int> gen_size_;
    std::vector<std::vector<int>> idx_;
    std::vector<std::pair<int, int>> labels_;
    std::vector<std::string> names_;
};

} // namespace nilgeom
