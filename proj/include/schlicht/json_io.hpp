#pragma once

// JSON encodings of series and class parameters:
//   series: {"order": N, "coeffs": [[re, im], ...]}
//   params: {"gamma": [re, im], "lambda": l, "A": a, "B": b}

#include <json.hpp>

#include <iosfwd>

#include "schlicht/class_params.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

nlohmann::ordered_json to_json(const ComplexSeries& s);
ComplexSeries series_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ClassParams& p);
ClassParams params_from_json(const nlohmann::json& j);

// Writes `j` with every floating-point number as %.14e (15 significant
// digits, fixed width) and integers verbatim, so equal documents always
// produce equal bytes.
void write_json(std::ostream& os, const nlohmann::ordered_json& j, int indent = 2);

std::string format_double(double v);

}  // namespace schlicht
