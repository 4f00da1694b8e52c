#pragma once

// JSON serialization of the public data types: algebra specifications,
// noncommutative polynomials, canonical forms, module representations and
// check reports.

#include "json.hpp"

#include "qma/engine.hpp"
#include "qma/skewform.hpp"
#include "qma/verma.hpp"

namespace qma {

using nlohmann::json;

json spec_to_json(const AlgebraSpec &spec);
AlgebraSpec spec_from_json(const json &j);

// [{"lexp":[...], "zexp":[[...]], "coeff":[[exp,num,den],...]} ...];
// tensor monomials carry "lexp2"/"zexp2"
json ncpoly_to_json(const Engine &e, const NCPoly &p);

json matrix_to_json(const SkewIntMatrix &m);
json canonical_to_json(const CanonicalForm &cf);

json module_to_json(const ModuleRep &rep);

json claims_to_json(const std::vector<ClaimResult> &claims);

} // namespace qma
