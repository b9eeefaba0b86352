#pragma once

#include <json.hpp>

#include "riemcurv/series.hpp"

namespace riemcurv {

/// Canonical JSON form of a series:
///   { "alphabet": [{"name": .., "weight": ..}, ...],
///     "order": N,
///     "terms": [{"monomial": {"var": exp, ...}, "coeff": "..."}, ...] }
/// Terms appear in graded-lex order, monomial keys in alphabet order and
/// only with nonzero exponents; coefficients use the canonical scalar text.
/// series_from_json is the exact inverse.
nlohmann::ordered_json series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const nlohmann::ordered_json& j);

}  // namespace riemcurv
