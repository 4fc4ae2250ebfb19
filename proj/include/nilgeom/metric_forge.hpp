#pragma once

#include "nilgeom/nilocalc.hpp"
#include "nilgeom/normal_forms.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace nilgeom {

// Seed forms B^0..B^{n-1} of a nilomorphic metric, each D x D over the
// variables of NiloCoords(shape) (x-variables only).
template <class K>
struct BasicSeedForms {
    ModuleShape shape;
    std::vector<PolyMatrix<K>> B;
};
using SeedForms = BasicSeedForms<Q>;
using CSeedForms = BasicSeedForms<QC>;

// Polynomial metric germ together with the endomorphisms declared parallel.
struct MetricGerm {
    std::string kind;
    std::string case_label = "1";
    std::vector<std::string> names;
    QPolyMatrix g;
    std::vector<NamedMatrix> structures;
    std::vector<Q> base_point;
    std::optional<ModuleShape> shape;

    std::size_t dim() const { return g.rows(); }
    int degree_bound() const;
    const QMatrix& structure(const std::string& name) const;
    QMatrix at(const std::vector<Q>& point) const;
    // symmetric, nondegenerate at the base point, structures self/skew-adjoint
    // as polynomial identities
    void validate() const;
};

// Coefficient of nu^{n-1-a-c} of H_ij placed at (N^a X_i, N^c X_j).
template <class K>
PolyMatrix<K> assemble_real_metric(const NiloCoords& co, const std::vector<std::vector<NuPoly<K>>>& H);

MetricGerm forge_nilpotent_metric(const SeedForms& seeds);
// case 2 or 2p: potential on a delta = 2 shape
MetricGerm forge_kahler_nilpotent(const ModuleShape& shape, const std::string& case_label,
                                  const AdaptedSeed& potential);
// case 2C: complex potential on a delta = 2 shape (complex coordinates)
MetricGerm forge_kahler_nilpotent(const ModuleShape& shape, const std::string& case_label,
                                  const CAdaptedSeed& potential);
// case 1C: holomorphic seed forms on a delta = 1 shape (complex coordinates)
MetricGerm forge_complex_nilpotent(const CSeedForms& seeds);
MetricGerm forge_by_tensoring(const QPolyMatrix& base, int n);
// Quotient germ on D coordinates with U among its structures (h0 = its metric).
MetricGerm forge_two_nilpotents(const MetricGerm& quotient, const std::string& u_name, const QPolyMatrix& B1);
MetricGerm forge_two_nilpotents(const SeedForms& quotient_seeds, const QPolyMatrix& B1);
// B1_0 and b are given in the output coordinates (y, x_1..x_m, x_{m+1}).
MetricGerm forge_lorentzian(const QPolyMatrix& B1_0, const QPoly& b);
MetricGerm tangent_lift(const QPolyMatrix& base);

// h reconstructed from a germ: sum_a nu^a g(., N^{n-1-a} .) on the x-frame.
std::vector<std::vector<QNuPoly>> nilomorphic_metric(const MetricGerm& germ);

// Random seed forms: basic, with B^a_0 = diag(+-1) at the origin.
SeedForms random_seed_forms(const ModuleShape& shape, int deg, std::mt19937_64& rng, bool random_signs = true);
// Standard potential plus random terms of degree 3..deg.
AdaptedSeed random_kahler_potential(const ModuleShape& shape, const std::string& case_label, int deg,
                                    std::mt19937_64& rng);
CAdaptedSeed random_complex_potential(const ModuleShape& shape, int deg, std::mt19937_64& rng);
CSeedForms random_complex_seed_forms(const ModuleShape& shape, int deg, std::mt19937_64& rng);
// Random symmetric polynomial matrix in variables [0, nvars).
QPolyMatrix random_symmetric(std::size_t m, std::size_t nvars, int deg, std::mt19937_64& rng);

} // namespace nilgeom
