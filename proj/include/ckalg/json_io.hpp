#pragma once

#include "ckalg/classify.hpp"
#include "ckalg/cohomology.hpp"
#include "ckalg/lie_algebra.hpp"
#include "ckalg/matrix.hpp"

#include <json.hpp>

namespace ckalg {

// Rationals are written as strings ("p" or "p/q"); object keys come out sorted.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const OmegaVector& omega);
/// Rows of entries, each entry the quadruple [w, x, y, z].
nlohmann::json to_json(const MatrixOverK& m);
/// [{i, j, k, c}] over the stored brackets, i < j.
nlohmann::json structure_to_json(const LieAlgebra& algebra);
/// {pairs: [{i, j, label_i, label_j, c}]}
nlohmann::json cochain_to_json(const TwoCochain& xi, const LieAlgebra& algebra);
/// {dim_z2, dim_b2, dim_h2, representatives}
nlohmann::json to_json(const CohomologyResult& result, const LieAlgebra& algebra);
nlohmann::json to_json(const ExtensionCoefficientCatalog& catalog);
nlohmann::json to_json(const CrosscheckReport& report);

} // namespace ckalg
