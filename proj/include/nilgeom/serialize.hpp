#pragma once

#include "nilgeom/algebra_lab.hpp"
#include "nilgeom/cartan.hpp"
#include "nilgeom/geoverify.hpp"
#include "nilgeom/metric_forge.hpp"

#include <json.hpp>

namespace nilgeom {

using json = nlohmann::json;

// Rationals travel as "p/q" strings; integers are accepted on input.
json to_json(const Q& q);
json to_json(const QC& z);
Q q_from_json(const json& j);
QC qc_from_json(const json& j);

json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

// Sparse polynomial: [{"c": "3/2", "m": {"x1": 2}}, ...] over named variables.
json poly_to_json(const QPoly& p, const std::vector<std::string>& names);
json poly_to_json(const CPoly& p, const std::vector<std::string>& names);
QPoly qpoly_from_json(const json& j, const std::vector<std::string>& names);
CPoly cpoly_from_json(const json& j, const std::vector<std::string>& names);
json poly_matrix_to_json(const QPolyMatrix& m, const std::vector<std::string>& names);
json poly_matrix_to_json(const PolyMatrix<QC>& m, const std::vector<std::string>& names);
QPolyMatrix qpoly_matrix_from_json(const json& j, const std::vector<std::string>& names);
PolyMatrix<QC> cpoly_matrix_from_json(const json& j, const std::vector<std::string>& names);
// nu-graded: terms carry an extra "nu" exponent
json nupoly_to_json(const QNuPoly& p, const std::vector<std::string>& names);
QNuPoly qnupoly_from_json(const json& j, int order, const std::vector<std::string>& names);
CNuPoly cnupoly_from_json(const json& j, int order, const std::vector<std::string>& names);

json to_json(const ModuleShape& s);
ModuleShape shape_from_json(const json& j);
json to_json(const CharacteristicSignatures& s);
CharacteristicSignatures signatures_from_json(const json& j);

json to_json(const MetricGerm& g);
MetricGerm germ_from_json(const json& j);
json to_json(const SeedForms& s);
SeedForms seed_forms_from_json(const json& j);
CSeedForms cseed_forms_from_json(const json& j);

json to_json(const NamedMatrix& m);
json to_json(const PrivilegedBasis& b);
json to_json(const CommutantBasis& b);
json to_json(const Bicommutant& b);
json to_json(const HolonomyResult& h);
json to_json(const VerificationReport& r);
json to_json(const CartanCharacters& c);
json to_json(const CartanResult& r);

} // namespace nilgeom
