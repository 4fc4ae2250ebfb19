#pragma once

#include "nilgeom/normal_forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilgeom {

// A parallel tensor of the catalog: a bilinear form x^T re y (+ i x^T im y).
struct CatalogEntry {
    std::string kind;
    std::vector<QMatrix> forms; // {re} or {re, im}; empty for volume forms
};

struct StructureSet {
    std::string case_label;
    int d = 0;
    QMatrix G;
    std::vector<NamedMatrix> structures;
    std::vector<CatalogEntry> catalog;

    const QMatrix& structure(const std::string& name) const;
    std::vector<QMatrix> generators() const;
};

struct CommutantBasis {
    std::string case_label;
    ModuleShape shape;
    std::vector<QMatrix> basis;
    int dim = 0;
};

struct Bicommutant {
    std::vector<QMatrix> basis;
    bool decomposable = false;
    std::optional<std::pair<int, std::pair<int, int>>> flat_factor; // (dim, signature)
    std::string exceptional; // empty when none
    bool is_s_N_span = true; // equals the algebra generated by s and N
};

StructureSet build_type(const std::string& case_label, int p, int q = 0);
std::string identify_type(const std::vector<QMatrix>& generators, const QMatrix& g);

// The algebra generated by a family together with Id, as a basis.
std::vector<QMatrix> generated_algebra(const std::vector<QMatrix>& generators);

CommutantBasis commutant_basis(const std::string& case_label, const ModuleShape& shape,
                               const std::optional<CharacteristicSignatures>& sigs = std::nullopt);
int commutant_dim(const std::string& case_label, const ModuleShape& shape);
Bicommutant bicommutant(const std::string& case_label, const ModuleShape& shape,
                        const std::optional<CharacteristicSignatures>& sigs = std::nullopt);

// Skew-adjoint endomorphisms commuting with every matrix in `fixed`
// (exact nullspace); used for holonomy membership tests.
std::vector<QMatrix> skew_commutant(const QMatrix& G, const std::vector<QMatrix>& fixed);
// Endomorphisms commuting with every matrix in `family`.
std::vector<QMatrix> centralizer(const std::vector<QMatrix>& family, std::size_t m);

} // namespace nilgeom
