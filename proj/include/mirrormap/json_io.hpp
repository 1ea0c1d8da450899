#ifndef MIRRORMAP_JSON_IO_HPP
#define MIRRORMAP_JSON_IO_HPP

#include <json.hpp>

#include "mirrormap/dwork.hpp"
#include "mirrormap/hypergeom.hpp"
#include "mirrormap/landau.hpp"
#include "mirrormap/mirror.hpp"
#include "mirrormap/search.hpp"
#include "mirrormap/series.hpp"
#include "mirrormap/spec.hpp"
#include "mirrormap/verify.hpp"

namespace mirrormap::json_io {

using nlohmann::json;

json spec_json(const FactorialRatioSpec& spec);

/// Array of exact "num/den" strings ("n" when the denominator is 1).
json series_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json form_json(const hypergeom::HypergeometricForm& form);
hypergeom::HypergeometricForm form_from_json(const json& j);

json profile_json(const landau::LandauProfile& prof);
json classification_json(const landau::Classification& cls);

json integrality_json(const mirror::IntegralityReport& report);
json dwork_report_json(const dwork::HypothesisReport& report);
json suite_json(const verify::SuiteReport& report);

}  // namespace mirrormap::json_io

#endif
