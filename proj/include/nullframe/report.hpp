#pragma once

#include "nullframe/gs.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nf {

struct AnalysisConfig {
    CoframeSpec spec;
    nlohmann::json source;  // echoed into the report: {"kind": "catalog"|"file", ...}
    std::vector<Point> points;
    nlohmann::json sampling;  // how the points were chosen, echoed
    int order = 4;
    double tol_scale = 1.0;
    bool full_cotton = false;
    std::optional<std::string> rescale;  // Upsilon expression text
    int threads = 0;                     // 0: hardware concurrency
};

nlohmann::json complex_json(cplx z);

// Reports as documented in docs/schema.md. Exceptions from the pipeline
// (DegenerateCoframe, RealityViolated, ...) propagate from the first failing point.
nlohmann::json analyze(const AnalysisConfig& cfg);
nlohmann::json identities(const AnalysisConfig& cfg);

std::string render_text(const nlohmann::json& report);

}  // namespace nf
