#pragma once

#include "nilgeom/nilmodule.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nilgeom {

struct CharacteristicSignatures {
    ModuleShape shape;
    std::vector<std::pair<int, int>> sigs; // (r_a, s_a), a = 1..n

    bool nondegenerate() const;
};

struct NamedMatrix {
    std::string name;
    QMatrix m;
    int adjoint = 1; // +1 self-adjoint, -1 skew-adjoint for g
};

struct PrivilegedBasis {
    std::string case_label;
    ModuleShape shape;
    QMatrix change_of_basis;
    QMatrix N;
    QMatrix G;
    std::vector<NamedMatrix> structures;
    std::vector<int> eps; // one per Jordan block, decreasing block order

    const QMatrix& structure(const std::string& name) const;
};

bool is_complex_label(const std::string& label);
bool is_known_label(const std::string& label);
// real dimension of one scalar unit (delta times 2 for complex labels)
int unit_dim(const std::string& label, const ModuleShape& shape);

CharacteristicSignatures characteristic_signatures(const QMatrix& N, const QMatrix& g);

// shape.delta must match the case: 1 for 1/1C, 2 for 2/2p/2C, 4 for 3/3p/3C.
// sigs are signatures of the real quotient forms (r_a + s_a = unit_dim * d_a).
PrivilegedBasis normal_form_basis(const ModuleShape& shape, const CharacteristicSignatures& sigs,
                                  const std::string& case_label);
// Signatures compatible with the case when the sign choices are irrelevant
// (all eps = +1).
CharacteristicSignatures default_signatures(const ModuleShape& shape, const std::string& case_label);

std::pair<int, int> global_signature(const ModuleShape& shape, const CharacteristicSignatures& sigs);

std::vector<int> alt_form_ranks(const QMatrix& N, const QMatrix& omega);
// Constant-coefficient Darboux form diag(nu^{n-a} J_{d_a, r_a/2}) realised in
// the coordinates of NiloCoords(shape).
QMatrix darboux_form(const ModuleShape& shape, const std::vector<int>& ranks);

// Complements of pi(ker N^{a-1}) in pi(ker N^a), as columns, a = 1..n.
std::vector<QMatrix> quotient_complements(const QMatrix& N);

} // namespace nilgeom
