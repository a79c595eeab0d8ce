#pragma once

#include <json.hpp>

#include "qhyp/quotient_algebra.hpp"

namespace qhyp {

/// Matrix as an array of rows of canonical scalar strings.
nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

/// Numeric image of a matrix at q = q0 (rationals as strings).
nlohmann::json matrix_eval_json(const QMatrix& m, const mpq_class& q0);

/// Normal-form element as {monomial: coefficient}, e.g. {"u^2vw": "q^2 + 1"}.
nlohmann::json nfpoly_to_json(const NFPoly& p);
NFPoly nfpoly_from_json(const nlohmann::json& j);

}  // namespace qhyp
