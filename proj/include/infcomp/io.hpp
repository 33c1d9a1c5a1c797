#pragma once

#include "infcomp/family.hpp"
#include "infcomp/series.hpp"

#include <json.hpp>

namespace infcomp::io {

using json = nlohmann::json;

/// Complex numbers travel as [re, im].
json to_json(Complex z);
Complex complex_from_json(const json &value);

/// {"kind":"geometric","s":[re,im],"r0":2}
/// {"kind":"power_law","p":3.0,"r0":3}
/// {"kind":"explicit","factors":[[[re,im], ...], ...]}   (coefficients from degree 0)
FactorFamily family_from_json(const json &value);
json family_to_json(const FactorFamily &family);

json series_to_json(const TruncatedSeries &f);

} // namespace infcomp::io
